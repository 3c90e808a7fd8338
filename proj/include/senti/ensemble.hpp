#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "senti/core.hpp"

namespace senti {

// Labels one statement received from several human raters.
struct RaterLabels {
    std::uint64_t statement_id = 0;
    std::vector<Polarity> labels;
};

// Ordinal median over the quartet's votes with split middles resolved to
// neutral: sort the four labels by rank; if the two middle labels agree the
// median is well defined and returned, otherwise the votes straddle the scale
// and the result is neutral. Equivalently, a non-neutral label wins exactly
// when at least three of the four votes carry it.
inline Polarity median_star(std::span<const Polarity> votes) {
    if (votes.size() != kQuartetSize)
        throw Error("median_star expects exactly 4 votes, got " + std::to_string(votes.size()));
    std::array<Polarity, kQuartetSize> sorted{};
    std::copy(votes.begin(), votes.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end(),
              [](Polarity a, Polarity b) { return rank(a) < rank(b); });
    return sorted[1] == sorted[2] ? sorted[1] : Polarity::neutral;
}

inline Polarity median_star(const std::array<Polarity, kQuartetSize>& votes) {
    return median_star(std::span<const Polarity>(votes));
}

// Plain majority vote baseline. Ties between the most frequent classes are
// broken uniformly at random; the seed makes a draw reproducible.
inline Polarity majority_vote(std::span<const Polarity> votes, std::uint64_t seed) {
    if (votes.size() != kQuartetSize)
        throw Error("majority_vote expects exactly 4 votes, got " + std::to_string(votes.size()));
    std::array<int, 3> counts{};
    for (Polarity v : votes) ++counts[class_index(v)];
    const int top = *std::max_element(counts.begin(), counts.end());
    std::vector<Polarity> tied;
    for (Polarity p : kAllPolarities)
        if (counts[class_index(p)] == top) tied.push_back(p);
    if (tied.size() == 1) return tied.front();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
    return tied[pick(rng)];
}

inline Polarity majority_vote(const std::array<Polarity, kQuartetSize>& votes,
                              std::uint64_t seed) {
    return majority_vote(std::span<const Polarity>(votes), seed);
}

// Median of an arbitrary number of rater labels on the same ordinal scale.
// Odd counts take the middle element; even counts keep the shared middle
// label and otherwise fall back to neutral, matching the quartet rule.
inline Polarity aggregate_human(std::span<const Polarity> labels) {
    if (labels.empty()) throw Error("aggregate_human requires at least one label");
    std::vector<Polarity> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end(),
              [](Polarity a, Polarity b) { return rank(a) < rank(b); });
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    const Polarity lo = sorted[n / 2 - 1];
    const Polarity hi = sorted[n / 2];
    return lo == hi ? lo : Polarity::neutral;
}

inline Polarity aggregate_human(const RaterLabels& rated) {
    return aggregate_human(std::span<const Polarity>(rated.labels));
}

// Pairs each statement with its votes and the combined Median* label.
inline std::vector<EnsembleResult> combine_session(std::vector<Statement> statements,
                                                   std::vector<VoteSet> votesets) {
    if (statements.size() != votesets.size())
        throw Error("combine_session: " + std::to_string(statements.size()) + " statements vs " +
                    std::to_string(votesets.size()) + " vote sets");
    std::vector<EnsembleResult> results;
    results.reserve(statements.size());
    for (std::size_t i = 0; i < statements.size(); ++i) {
        EnsembleResult r;
        r.combined = median_star(votesets[i].labels());
        r.statement = std::move(statements[i]);
        r.votes = std::move(votesets[i]);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace senti
