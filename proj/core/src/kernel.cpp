#include "fade/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace fade {

WeightVector forgetting_weights(std::size_t t, double lambda, WeightStats* stats) {
    if (t == 0) throw std::invalid_argument("forgetting_weights: context length t must be >= 1");
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw std::invalid_argument("forgetting_weights: lambda must be finite and >= 0");

    WeightVector w;
    w.values.resize(t);

    // Anchor at the newest item, whose exponent -lambda*(t-t) = 0 is the
    // maximum, and walk backwards multiplying by exp(-lambda). This is the
    // max-exponent factorization of Eq. w_i = exp(-lambda*(t-i)): old entries
    // underflow only when genuinely negligible, and adjacent ratios stay
    // within one rounding of exp(-lambda).
    const double decay = std::exp(-lambda);
    std::size_t ops = 1;  // the exp above
    w.values[t - 1] = 1.0;
    for (std::size_t i = t - 1; i-- > 0;) {
        w.values[i] = w.values[i + 1] * decay;
        ++ops;
    }

    // Neumaier-compensated total keeps the normalized sum within a few ulp of
    // 1 even for t ~ 2^20.
    double sum = 0.0, comp = 0.0;
    for (double v : w.values) {
        const double s = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - s) + v;
        else
            comp += (v - s) + sum;
        sum = s;
    }
    sum += comp;

    for (double& v : w.values) v /= sum;

    if (stats) {
        stats->kernel_ops += ops;
        stats->normalization_passes += 1;
    }
    return w;
}

double half_life_to_rate(double half_life) {
    if (!std::isfinite(half_life) || half_life <= 0.0)
        throw std::invalid_argument("half_life_to_rate: half-life must be finite and > 0");
    return std::log(2.0) / half_life;
}

double rate_to_half_life(double rate) {
    if (!std::isfinite(rate) || rate <= 0.0)
        throw std::invalid_argument("rate_to_half_life: rate must be finite and > 0");
    return std::log(2.0) / rate;
}

}  // namespace fade
