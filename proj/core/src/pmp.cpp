#include "fade/pmp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fade/kernel.hpp"

namespace fade {

void ContextHistory::validate() const {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].index != i + 1)
            throw std::invalid_argument("ContextHistory: indices must be contiguous from 1 "
                                        "(item " + std::to_string(i) + " has index " +
                                        std::to_string(items[i].index) + ")");
}

ContextHistory ContextHistory::from_texts(std::vector<std::string> texts) {
    ContextHistory h;
    h.items.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i)
        h.items.push_back(ContextItem{i + 1, std::move(texts[i])});
    return h;
}

std::vector<std::size_t> sample_recency_indices(std::size_t t, double lambda,
                                                std::size_t k, rng::Engine& eng) {
    if (k == 0) throw std::invalid_argument("sample_recency_indices: k must be >= 1");
    if (t == 0) throw std::invalid_argument("sample_recency_indices: empty history");

    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (k >= t) return idx;

    const WeightVector w = forgetting_weights(t, lambda);
    std::vector<double> keys(t);
    for (std::size_t i = 0; i < t; ++i) {
        const double u = rng::uniform01_pos(eng);
        keys[i] = w.values[i] > 0.0 ? std::log(u) / w.values[i]
                                    : -std::numeric_limits<double>::infinity();
    }
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

ShapedContext pmp_sample(const ContextHistory& history, double lambda, std::size_t k,
                         rng::Engine& eng) {
    const auto picks = sample_recency_indices(history.size(), lambda, k, eng);
    ShapedContext out;
    out.items.reserve(picks.size());
    for (std::size_t i : picks) out.items.push_back(history.items[i]);
    return out;
}

std::vector<double> first_pick_marginal(const ContextHistory& history, double lambda,
                                        rng::Engine& eng, std::size_t trials) {
    if (trials == 0) throw std::invalid_argument("first_pick_marginal: trials must be >= 1");
    std::vector<double> freq(history.size(), 0.0);
    for (std::size_t n = 0; n < trials; ++n) {
        const auto picks = sample_recency_indices(history.size(), lambda, 1, eng);
        freq[picks.front()] += 1.0;
    }
    for (double& f : freq) f /= static_cast<double>(trials);
    return freq;
}

ShapedContext truncate_window(const ContextHistory& history, std::size_t k) {
    if (k == 0) throw std::invalid_argument("truncate_window: k must be >= 1");
    const std::size_t take = std::min(k, history.size());
    ShapedContext out;
    out.items.assign(history.items.end() - static_cast<std::ptrdiff_t>(take),
                     history.items.end());
    return out;
}

}  // namespace fade
