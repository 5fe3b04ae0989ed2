#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fade {

enum class Family { categorical, gaussian };

inline const char* to_string(Family f) {
    return f == Family::categorical ? "categorical" : "gaussian";
}

Family family_from_string(const std::string& s);

/// Categorical distribution over K classes, entries sum to 1.
struct Categorical {
    std::vector<double> p;
};

/// Univariate Gaussian given by mean and variance.
struct Gaussian {
    double mean = 0.0;
    double variance = 1.0;
};

/// Predictive / ground-truth distribution of either family.
using Distribution = std::variant<Categorical, Gaussian>;

/// One stream observation: a 0-based category index or a real value.
using Observation = std::variant<int, double>;

inline Family family_of(const Distribution& d) {
    return std::holds_alternative<Categorical>(d) ? Family::categorical
                                                  : Family::gaussian;
}

inline Family family_of(const Observation& o) {
    return std::holds_alternative<int>(o) ? Family::categorical
                                          : Family::gaussian;
}

/// File or stream failure (CLI exit code 3).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration; messages are path-qualified (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fade
