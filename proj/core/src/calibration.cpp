#include "fade/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fade {

SubjectTrace SubjectTrace::from_categorical(std::vector<std::vector<double>> rows) {
    SubjectTrace t;
    t.family = Family::categorical;
    t.steps.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        if (row.size() < 2)
            throw std::invalid_argument("SubjectTrace: row " + std::to_string(i) +
                                        " needs K >= 2 entries");
        double sum = 0.0;
        for (double v : row) {
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("SubjectTrace: row " + std::to_string(i) +
                                            " has a negative or non-finite entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("SubjectTrace: row " + std::to_string(i) +
                                        " sums to " + std::to_string(sum) + ", expected 1");
        double floored = 0.0;
        for (double& v : row) {
            v = std::max(v, kProbabilityFloor);
            floored += v;
        }
        for (double& v : row) v /= floored;
        t.steps.emplace_back(Categorical{std::move(row)});
    }
    return t;
}

SubjectTrace SubjectTrace::from_gaussian(std::vector<Gaussian> rows) {
    SubjectTrace t;
    t.family = Family::gaussian;
    t.steps.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!std::isfinite(rows[i].mean) || !std::isfinite(rows[i].variance) ||
            rows[i].variance <= 0.0)
            throw std::invalid_argument("SubjectTrace: row " + std::to_string(i) +
                                        " has invalid mean/variance");
        t.steps.emplace_back(rows[i]);
    }
    return t;
}

double kl_categorical(const Categorical& p, const Categorical& q) {
    if (p.p.size() != q.p.size())
        throw std::invalid_argument("kl_categorical: dimension mismatch");
    double kl = 0.0;
    for (std::size_t i = 0; i < p.p.size(); ++i) {
        if (p.p[i] <= 0.0) continue;  // 0 * ln(0) = 0
        kl += p.p[i] * std::log(p.p[i] / q.p[i]);
    }
    return std::max(kl, 0.0);
}

double kl_gaussian(const Gaussian& p, const Gaussian& q) {
    if (!(p.variance > 0.0) || !(q.variance > 0.0))
        throw std::invalid_argument("kl_gaussian: variances must be > 0");
    const double diff = p.mean - q.mean;
    const double kl = 0.5 * std::log(q.variance / p.variance) +
                      (p.variance + diff * diff) / (2.0 * q.variance) - 0.5;
    return std::max(kl, 0.0);
}

double kl_divergence(const Distribution& p, const Distribution& q) {
    if (family_of(p) != family_of(q))
        throw std::invalid_argument("kl_divergence: family mismatch");
    if (std::holds_alternative<Categorical>(p))
        return kl_categorical(std::get<Categorical>(p), std::get<Categorical>(q));
    return kl_gaussian(std::get<Gaussian>(p), std::get<Gaussian>(q));
}

double mean_update_divergence(const SubjectTrace& subject,
                              std::span<const Observation> observations,
                              const PriorSpec& prior, DiscountFactor gamma) {
    if (subject.size() != observations.size())
        throw std::invalid_argument("mean_update_divergence: subject and observation "
                                    "lengths differ");
    if (subject.size() == 0)
        throw std::invalid_argument("mean_update_divergence: empty trace");
    if (subject.family != prior.family)
        throw std::invalid_argument("mean_update_divergence: subject family does not "
                                    "match filter family");

    Filter filter(FilterSpec::discounted(prior, gamma));
    double total = 0.0;
    for (std::size_t t = 0; t < observations.size(); ++t) {
        const Distribution pred = filter.step(observations[t]);
        total += kl_divergence(subject.steps[t], pred);
    }
    return total / static_cast<double>(observations.size());
}

namespace detail {

ScalarSearchResult minimize_grid_golden(const std::function<double(double)>& f,
                                        std::span<const double> grid, double tol,
                                        std::size_t max_iterations) {
    if (grid.size() < 2) throw std::invalid_argument("minimize_grid_golden: grid too small");

    ScalarSearchResult r;
    auto eval = [&](double x) {
        const double fx = f(x);
        r.log.emplace_back(x, fx);
        ++r.evaluations;
        return fx;
    };

    std::vector<double> fgrid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) fgrid[i] = eval(grid[i]);

    const auto [mn, mx] = std::minmax_element(fgrid.begin(), fgrid.end());
    if (*mx - *mn <= 1e-14 * std::max(1.0, std::abs(*mx))) {
        r.flat = true;
        r.x = grid.back();
        r.fx = fgrid.back();
        r.bracket_lo = grid.front();
        r.bracket_hi = grid.back();
        return r;
    }

    const std::size_t g = static_cast<std::size_t>(mn - fgrid.begin());
    double lo = grid[g == 0 ? 0 : g - 1];
    double hi = grid[std::min(g + 1, grid.size() - 1)];

    // Golden-section on [lo, hi]. The bracket always contains the best
    // interior probe; the returned point is the argmin over the entire log,
    // so it can never be worse than the grid minimum.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (std::size_t it = 0; it < max_iterations && (hi - lo) > tol; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval(x2);
        }
    }
    r.bracket_lo = lo;
    r.bracket_hi = hi;

    const auto best = std::min_element(
        r.log.begin(), r.log.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    r.x = best->first;
    r.fx = best->second;
    return r;
}

}  // namespace detail

CalibrationResult calibrate_gamma(const SubjectTrace& subject,
                                  std::span<const Observation> observations,
                                  const PriorSpec& prior, const CalibrationOptions& opts) {
    if (subject.size() < 10)
        throw std::invalid_argument("calibrate_gamma: trace too short (need T >= 10)");
    if (opts.gamma_floor < kGammaFloor || opts.gamma_floor >= 0.05)
        throw std::invalid_argument("calibrate_gamma: gamma_floor must be in [1e-6, 0.05)");
    if (!(opts.tol > 0.0))
        throw std::invalid_argument("calibrate_gamma: tol must be > 0");

    // 21 coarse evaluations: the floor, then 0.05 .. 1.00 in steps of 0.05.
    std::vector<double> grid;
    grid.push_back(opts.gamma_floor);
    for (int j = 1; j <= 20; ++j) grid.push_back(0.05 * j);

    auto objective = [&](double g) {
        return mean_update_divergence(subject, observations, prior, DiscountFactor(g));
    };
    const auto search =
        detail::minimize_grid_golden(objective, grid, opts.tol, opts.max_iterations);

    CalibrationResult result;
    result.search_log = search.log;
    result.evaluations = search.evaluations;
    result.bracket_lo = search.bracket_lo;
    result.bracket_hi = search.bracket_hi;
    if (search.flat) {
        // the last grid point is gamma = 1, so its objective is already known
        result.status = CalibrationStatus::flat_objective;
        result.gamma_star = DiscountFactor(1.0);
        result.objective_value = search.fx;
    } else {
        result.status = CalibrationStatus::ok;
        result.gamma_star = DiscountFactor(search.x);
        result.objective_value = search.fx;
    }
    return result;
}

}  // namespace fade
