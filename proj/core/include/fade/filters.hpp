#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "fade/types.hpp"

namespace fade {

/// Dirichlet posterior over a categorical parameter vector; alpha_k > 0, K >= 2.
struct DirichletState {
    std::vector<double> alpha;

    std::size_t categories() const { return alpha.size(); }
    void validate() const;
};

/// Gaussian posterior over a latent mean; variance > 0 and finite.
struct GaussianState {
    double mean = 0.0;
    double variance = 1.0;

    void validate() const;
};

/// Per-step memory decay exponent, gamma in (0, 1]. gamma = 1 is exact Bayes.
class DiscountFactor {
  public:
    explicit DiscountFactor(double value);
    double value() const { return value_; }

  private:
    double value_;
};

/// Smallest discount the calibration search will consider; enforced at
/// config parse, not by DiscountFactor itself.
inline constexpr double kGammaFloor = 1e-6;

/// Conjugate family, prior, and (for the Gaussian family) the known
/// observation variance.
struct PriorSpec {
    Family family = Family::categorical;
    std::vector<double> alpha;        // categorical prior
    GaussianState gaussian{0.0, 1.0}; // gaussian prior over the latent mean
    double obs_variance = 1.0;        // gaussian family only

    void validate() const;
};

/// A runnable filter: the prior plus exactly one of the two modes,
/// discounted (gamma) or sliding-window baseline (window).
struct FilterSpec {
    PriorSpec prior;
    std::optional<DiscountFactor> gamma;
    std::optional<std::size_t> window;

    void validate() const;

    static FilterSpec discounted(PriorSpec prior, DiscountFactor gamma);
    static FilterSpec sliding_window(PriorSpec prior, std::size_t window);
};

// Conjugate building blocks. All are pure: inputs are never mutated.

/// Dir(alpha) raised to gamma and renormalized: alpha'_k = gamma*(alpha_k - 1) + 1.
DirichletState discount_dirichlet(const DirichletState& state, DiscountFactor gamma);

/// Conjugate count increment for a 0-based category index.
DirichletState update_dirichlet(const DirichletState& state, int category);

/// Posterior predictive p_k = alpha_k / sum(alpha).
Categorical predictive_dirichlet(const DirichletState& state);

/// N(mean, var) raised to gamma and renormalized: mean unchanged, var' = var / gamma.
GaussianState discount_gaussian(const GaussianState& state, DiscountFactor gamma);

/// Precision-weighted conjugate update with known observation variance.
GaussianState update_gaussian(const GaussianState& state, double x, double obs_variance);

/// Posterior predictive N(mean, variance + obs_variance).
Gaussian predictive_gaussian(const GaussianState& state, double obs_variance);

/// Sequential runner for either mode. step() emits the one-step-ahead
/// predictive from the current state *before* ingesting the observation,
/// then applies discount-then-update (discounted mode) or the window
/// recount (window mode). The initial prior is not discounted: the first
/// observation is ingested without a discount step.
class Filter {
  public:
    explicit Filter(FilterSpec spec);

    /// Predictive of the next observation from the current state.
    Distribution predictive() const;

    /// Returns the pre-observation predictive, then ingests obs.
    Distribution step(const Observation& obs);

    const FilterSpec& spec() const { return spec_; }
    const DirichletState& dirichlet_state() const { return dirichlet_; }
    const GaussianState& gaussian_state() const { return gaussian_; }

  private:
    void ingest(const Observation& obs);

    FilterSpec spec_;
    DirichletState dirichlet_;
    GaussianState gaussian_;
    std::deque<Observation> window_buf_;
    bool any_seen_ = false;
};

}  // namespace fade
