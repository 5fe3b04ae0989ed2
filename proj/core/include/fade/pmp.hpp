#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fade/rng.hpp"

namespace fade {

/// One context item: 1-based chronological index plus opaque payload.
struct ContextItem {
    std::size_t index = 0;
    std::string text;
};

/// Full context history, oldest first, indices contiguous from 1.
struct ContextHistory {
    std::vector<ContextItem> items;

    std::size_t size() const { return items.size(); }
    void validate() const;

    static ContextHistory from_texts(std::vector<std::string> texts);
};

/// Chronologically ordered subsequence of a history, size min(k, t).
struct ShapedContext {
    std::vector<ContextItem> items;

    std::size_t size() const { return items.size(); }
};

/// Samples k of t positions (0-based, returned ascending) without
/// replacement, proportionally to exponential recency weights, via the
/// exponential-keys method: key_i = ln(u_i)/w_i, keep the k largest. This
/// realizes exactly the sequential weighted draw ("successive sampling")
/// distribution. k >= t returns all positions and consumes no randomness.
std::vector<std::size_t> sample_recency_indices(std::size_t t, double lambda,
                                                std::size_t k, rng::Engine& eng);

/// Weighted sample without replacement of k history items under recency
/// weights; chronological order of the source history is preserved.
/// Rejects k = 0 and empty histories; k >= t returns the full history.
ShapedContext pmp_sample(const ContextHistory& history, double lambda, std::size_t k,
                         rng::Engine& eng);

/// Empirical index distribution of repeated k = 1 samples; test instrument
/// for checking marginals against the closed-form weights.
std::vector<double> first_pick_marginal(const ContextHistory& history, double lambda,
                                        rng::Engine& eng, std::size_t trials);

/// Deterministic recency baseline: the last min(k, t) items in order.
ShapedContext truncate_window(const ContextHistory& history, std::size_t k);

}  // namespace fade
