#pragma once

#include <cstddef>
#include <vector>

namespace fade {

/// Operation counters for the weight kernel, filled when a caller passes a
/// stats object. kernel_ops counts exponential evaluations plus the decay
/// multiplications that stand in for them; tests assert linear cost.
struct WeightStats {
    std::size_t kernel_ops = 0;
    std::size_t normalization_passes = 0;
};

/// Normalized recency weights over a context of length t, stored oldest
/// first: values[i-1] is the weight of item i in 1..t. Entries are
/// non-negative, non-decreasing, and sum to 1.
struct WeightVector {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Exponential recency weights w_i = exp(-lambda*(t-i)) / sum_j exp(-lambda*(t-j)),
/// i = 1..t. Built relative to the newest item (the maximum exponent), so no
/// entry under- or overflows for lambda*(t-1) <= 700. One pass of t kernel
/// evaluations plus one normalization pass.
///
/// Throws std::invalid_argument for t = 0 or negative/non-finite lambda.
WeightVector forgetting_weights(std::size_t t, double lambda, WeightStats* stats = nullptr);

/// lambda = ln 2 / half_life (half-life measured in steps).
double half_life_to_rate(double half_life);

/// half_life = ln 2 / rate; inverse of half_life_to_rate.
double rate_to_half_life(double rate);

}  // namespace fade
