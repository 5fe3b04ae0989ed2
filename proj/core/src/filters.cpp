#include "fade/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace fade {

void DirichletState::validate() const {
    if (alpha.size() < 2)
        throw std::invalid_argument("DirichletState: needs K >= 2 categories");
    for (double a : alpha)
        if (!std::isfinite(a) || a <= 0.0)
            throw std::invalid_argument("DirichletState: every alpha_k must be finite and > 0");
}

void GaussianState::validate() const {
    if (!std::isfinite(mean))
        throw std::invalid_argument("GaussianState: mean must be finite");
    if (!std::isfinite(variance) || variance <= 0.0)
        throw std::invalid_argument("GaussianState: variance must be finite and > 0");
}

DiscountFactor::DiscountFactor(double value) : value_(value) {
    if (!std::isfinite(value) || value <= 0.0 || value > 1.0)
        throw std::invalid_argument("DiscountFactor: gamma must be in (0, 1]");
}

void PriorSpec::validate() const {
    switch (family) {
        case Family::categorical: {
            DirichletState s{alpha};
            s.validate();
            break;
        }
        case Family::gaussian: {
            gaussian.validate();
            if (!std::isfinite(obs_variance) || obs_variance <= 0.0)
                throw std::invalid_argument("PriorSpec: obs_variance must be finite and > 0");
            break;
        }
    }
}

void FilterSpec::validate() const {
    prior.validate();
    if (gamma.has_value() == window.has_value())
        throw std::invalid_argument("FilterSpec: exactly one of discounted mode (gamma) "
                                    "and window mode must be active");
    if (window && *window == 0)
        throw std::invalid_argument("FilterSpec: window must be >= 1");
}

FilterSpec FilterSpec::discounted(PriorSpec prior, DiscountFactor gamma) {
    FilterSpec s;
    s.prior = std::move(prior);
    s.gamma = gamma;
    s.validate();
    return s;
}

FilterSpec FilterSpec::sliding_window(PriorSpec prior, std::size_t window) {
    FilterSpec s;
    s.prior = std::move(prior);
    s.window = window;
    s.validate();
    return s;
}

DirichletState discount_dirichlet(const DirichletState& state, DiscountFactor gamma) {
    DirichletState out = state;
    const double g = gamma.value();
    for (double& a : out.alpha) a = g * (a - 1.0) + 1.0;
    return out;
}

DirichletState update_dirichlet(const DirichletState& state, int category) {
    if (category < 0 || static_cast<std::size_t>(category) >= state.alpha.size())
        throw std::out_of_range("update_dirichlet: category index out of range");
    DirichletState out = state;
    out.alpha[static_cast<std::size_t>(category)] += 1.0;
    return out;
}

Categorical predictive_dirichlet(const DirichletState& state) {
    double total = 0.0;
    for (double a : state.alpha) total += a;
    Categorical out;
    out.p.reserve(state.alpha.size());
    for (double a : state.alpha) out.p.push_back(a / total);
    return out;
}

GaussianState discount_gaussian(const GaussianState& state, DiscountFactor gamma) {
    return GaussianState{state.mean, state.variance / gamma.value()};
}

GaussianState update_gaussian(const GaussianState& state, double x, double obs_variance) {
    if (!std::isfinite(x))
        throw std::invalid_argument("update_gaussian: observation must be finite");
    if (!std::isfinite(obs_variance) || obs_variance <= 0.0)
        throw std::invalid_argument("update_gaussian: obs_variance must be finite and > 0");
    const double precision = 1.0 / state.variance + 1.0 / obs_variance;
    const double mean = (state.mean / state.variance + x / obs_variance) / precision;
    return GaussianState{mean, 1.0 / precision};
}

Gaussian predictive_gaussian(const GaussianState& state, double obs_variance) {
    return Gaussian{state.mean, state.variance + obs_variance};
}

Filter::Filter(FilterSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    if (spec_.prior.family == Family::categorical)
        dirichlet_ = DirichletState{spec_.prior.alpha};
    else
        gaussian_ = spec_.prior.gaussian;
}

Distribution Filter::predictive() const {
    if (spec_.window) {
        // Recount: exact conjugate posterior from the fresh prior over the
        // buffered observations.
        if (spec_.prior.family == Family::categorical) {
            DirichletState s{spec_.prior.alpha};
            for (const Observation& o : window_buf_)
                s.alpha[static_cast<std::size_t>(std::get<int>(o))] += 1.0;
            return predictive_dirichlet(s);
        }
        GaussianState s = spec_.prior.gaussian;
        for (const Observation& o : window_buf_)
            s = update_gaussian(s, std::get<double>(o), spec_.prior.obs_variance);
        return predictive_gaussian(s, spec_.prior.obs_variance);
    }
    if (spec_.prior.family == Family::categorical)
        return predictive_dirichlet(dirichlet_);
    return predictive_gaussian(gaussian_, spec_.prior.obs_variance);
}

Distribution Filter::step(const Observation& obs) {
    if (family_of(obs) != spec_.prior.family)
        throw std::invalid_argument("Filter::step: observation does not match filter family");
    Distribution pred = predictive();
    ingest(obs);
    return pred;
}

void Filter::ingest(const Observation& obs) {
    if (spec_.window) {
        window_buf_.push_back(obs);
        while (window_buf_.size() > *spec_.window) window_buf_.pop_front();
        any_seen_ = true;
        return;
    }
    const DiscountFactor g = *spec_.gamma;
    if (spec_.prior.family == Family::categorical) {
        if (any_seen_) dirichlet_ = discount_dirichlet(dirichlet_, g);
        dirichlet_ = update_dirichlet(dirichlet_, std::get<int>(obs));
    } else {
        if (any_seen_) gaussian_ = discount_gaussian(gaussian_, g);
        gaussian_ = update_gaussian(gaussian_, std::get<double>(obs), spec_.prior.obs_variance);
    }
    any_seen_ = true;
}

Family family_from_string(const std::string& s) {
    if (s == "categorical") return Family::categorical;
    if (s == "gaussian") return Family::gaussian;
    throw std::invalid_argument("unknown family '" + s + "' (expected categorical|gaussian)");
}

}  // namespace fade
