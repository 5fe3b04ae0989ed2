#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fade/filters.hpp"
#include "fade/types.hpp"

namespace fade {

/// Logged per-step predictive distributions of any subject, aligned with an
/// observation sequence. Categorical rows are floored at 1e-12 and
/// renormalized on ingestion so every KL against them stays finite.
struct SubjectTrace {
    Family family = Family::categorical;
    std::vector<Distribution> steps;

    std::size_t size() const { return steps.size(); }

    /// Validates each row sums to 1 +- 1e-9, then floors and renormalizes.
    static SubjectTrace from_categorical(std::vector<std::vector<double>> rows);
    static SubjectTrace from_gaussian(std::vector<Gaussian> rows);
};

inline constexpr double kProbabilityFloor = 1e-12;

/// KL(p || q) in nats, with 0*ln(0) = 0. Requires matching dimensions.
double kl_categorical(const Categorical& p, const Categorical& q);

/// Closed-form Gaussian KL(p || q) in nats.
double kl_gaussian(const Gaussian& p, const Gaussian& q);

/// Family-dispatching KL; throws on family mismatch.
double kl_divergence(const Distribution& p, const Distribution& q);

/// Mean over t of KL(subject_t || model predictive_t) where the model is the
/// discounted filter with the given prior and gamma, run causally over the
/// observations (predictive emitted before each observation is ingested).
double mean_update_divergence(const SubjectTrace& subject,
                              std::span<const Observation> observations,
                              const PriorSpec& prior, DiscountFactor gamma);

struct CalibrationOptions {
    double tol = 1e-4;          // golden-section bracket width
    double gamma_floor = 1e-3;  // first grid point; overridable down to 1e-6
    std::size_t max_iterations = 200;
};

enum class CalibrationStatus { ok, flat_objective };

struct CalibrationResult {
    DiscountFactor gamma_star{1.0};
    double objective_value = 0.0;
    std::size_t evaluations = 0;
    std::vector<std::pair<double, double>> search_log;  // (gamma, objective)
    double bracket_lo = 0.0;  // final refinement interval
    double bracket_hi = 0.0;
    CalibrationStatus status = CalibrationStatus::ok;
};

/// Finds gamma minimizing the mean update divergence: 21-point coarse grid
/// over {floor, 0.05, 0.10, ..., 1.0} followed by golden-section refinement
/// of the bracket around the grid minimum. Requires T >= 10. A flat grid
/// objective is reported as flat_objective with gamma* = 1.
CalibrationResult calibrate_gamma(const SubjectTrace& subject,
                                  std::span<const Observation> observations,
                                  const PriorSpec& prior,
                                  const CalibrationOptions& opts = {});

namespace detail {

struct ScalarSearchResult {
    double x = 0.0;
    double fx = 0.0;
    std::size_t evaluations = 0;
    std::vector<std::pair<double, double>> log;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool flat = false;
};

/// Grid scan plus golden-section refinement of the bracket around the grid
/// argmin; returns the best point over the whole search log, so the result
/// is never worse than the grid minimum.
ScalarSearchResult minimize_grid_golden(const std::function<double(double)>& f,
                                        std::span<const double> grid, double tol,
                                        std::size_t max_iterations);

}  // namespace detail

}  // namespace fade
