#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "senti/core.hpp"

namespace senti {

class MetricsError : public Error {
public:
    using Error::Error;
};

// 3x3 grid of (true label, predicted label) counts.
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;

    static ConfusionMatrix from_labels(std::span<const Polarity> gold,
                                       std::span<const Polarity> pred) {
        if (gold.size() != pred.size())
            throw MetricsError("label vectors differ in length: " + std::to_string(gold.size()) +
                               " vs " + std::to_string(pred.size()));
        if (gold.empty()) throw MetricsError("cannot build a confusion matrix from no labels");
        ConfusionMatrix cm;
        for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], pred[i]);
        return cm;
    }

    void add(Polarity truth, Polarity predicted, std::int64_t count = 1) {
        cells_[class_index(truth)][class_index(predicted)] += count;
    }

    std::int64_t cell(Polarity truth, Polarity predicted) const {
        return cells_[class_index(truth)][class_index(predicted)];
    }

    std::int64_t row_total(Polarity truth) const {
        std::int64_t t = 0;
        for (Polarity p : kAllPolarities) t += cell(truth, p);
        return t;
    }

    std::int64_t col_total(Polarity predicted) const {
        std::int64_t t = 0;
        for (Polarity p : kAllPolarities) t += cell(p, predicted);
        return t;
    }

    std::int64_t diagonal() const {
        std::int64_t t = 0;
        for (Polarity p : kAllPolarities) t += cell(p, p);
        return t;
    }

    std::int64_t n() const {
        std::int64_t t = 0;
        for (Polarity p : kAllPolarities) t += row_total(p);
        return t;
    }

    ConfusionMatrix transposed() const {
        ConfusionMatrix out;
        for (Polarity t : kAllPolarities)
            for (Polarity p : kAllPolarities) out.add(p, t, cell(t, p));
        return out;
    }

private:
    std::array<std::array<std::int64_t, 3>, 3> cells_{};
};

// Agreement counts split by how far apart the labels are: `mild` involves
// neutral on one side, `severe` is a positive/negative flip.
struct DisagreementSplit {
    std::int64_t matches = 0;
    std::int64_t mild = 0;
    std::int64_t severe = 0;
    double accuracy = 0.0;

    std::int64_t n() const { return matches + mild + severe; }
};

inline DisagreementSplit accuracy_and_split(std::span<const Polarity> gold,
                                            std::span<const Polarity> pred) {
    if (gold.size() != pred.size())
        throw MetricsError("label vectors differ in length: " + std::to_string(gold.size()) +
                           " vs " + std::to_string(pred.size()));
    if (gold.empty()) throw MetricsError("cannot evaluate an empty label vector");
    DisagreementSplit split;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if (gold[i] == pred[i]) ++split.matches;
        else if (rank(gold[i]) + rank(pred[i]) == 0) ++split.severe;  // positive vs negative
        else ++split.mild;
    }
    split.accuracy = static_cast<double>(split.matches) / static_cast<double>(gold.size());
    return split;
}

// Cohen 1960: kappa = (p_o - p_e) / (1 - p_e). The degenerate p_e = 1 case
// (all mass in one class for both raters) is reported as 1 for perfect
// observed agreement and 0 otherwise, with the flag set.
inline double cohen_kappa(const ConfusionMatrix& cm, bool* degenerate = nullptr) {
    const std::int64_t n = cm.n();
    if (n == 0) throw MetricsError("cohen_kappa on an empty matrix");
    if (degenerate) *degenerate = false;
    const double dn = static_cast<double>(n);
    const double p_o = static_cast<double>(cm.diagonal()) / dn;
    double p_e = 0.0;
    for (Polarity p : kAllPolarities)
        p_e += (static_cast<double>(cm.row_total(p)) / dn) *
               (static_cast<double>(cm.col_total(p)) / dn);
    if (1.0 - p_e <= 1e-12) {
        if (degenerate) *degenerate = true;
        return p_o >= 1.0 - 1e-12 ? 1.0 : 0.0;
    }
    return (p_o - p_e) / (1.0 - p_e);
}

// Per-item category counts for Fleiss' kappa; counts[class_index] raters
// chose that category.
using RatingCounts = std::array<int, 3>;

// Fleiss 1971 for a fixed number of raters per item. Degenerate chance
// agreement of 1 follows the same convention as cohen_kappa.
inline double fleiss_kappa(std::span<const RatingCounts> items, int raters_per_item,
                           bool* degenerate = nullptr) {
    if (items.empty()) throw MetricsError("fleiss_kappa needs at least one item");
    if (raters_per_item < 2) throw MetricsError("fleiss_kappa needs at least 2 raters per item");
    if (degenerate) *degenerate = false;
    const double m = raters_per_item;
    const double n_items = static_cast<double>(items.size());

    double p_bar = 0.0;
    std::array<double, 3> category_totals{};
    for (const RatingCounts& counts : items) {
        int total = 0;
        double agree_pairs = 0.0;
        for (std::size_t c = 0; c < 3; ++c) {
            total += counts[c];
            agree_pairs += static_cast<double>(counts[c]) * (counts[c] - 1);
            category_totals[c] += counts[c];
        }
        if (total != raters_per_item)
            throw MetricsError("item has " + std::to_string(total) + " ratings, expected " +
                               std::to_string(raters_per_item));
        p_bar += agree_pairs / (m * (m - 1.0));
    }
    p_bar /= n_items;

    double p_e = 0.0;
    for (double total : category_totals) {
        const double share = total / (n_items * m);
        p_e += share * share;
    }
    if (1.0 - p_e <= 1e-12) {
        if (degenerate) *degenerate = true;
        return p_bar >= 1.0 - 1e-12 ? 1.0 : 0.0;
    }
    return (p_bar - p_e) / (1.0 - p_e);
}

struct ClassPrf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    bool absent = false;  // class never predicted and never true
};

struct PrfReport {
    std::array<ClassPrf, 3> per_class{};  // indexed by class_index
    double micro_f1 = 0.0;
    ClassPrf macro;

    const ClassPrf& for_class(Polarity p) const { return per_class[class_index(p)]; }
};

// Per-class precision/recall/F1 with explicit zero conventions: precision is
// 0 when the class is never predicted, recall 0 when it never occurs, F1 0
// when P + R = 0. Micro F1 over single-label data equals accuracy.
inline PrfReport prf(const ConfusionMatrix& cm) {
    const std::int64_t n = cm.n();
    if (n == 0) throw MetricsError("prf on an empty matrix");
    PrfReport report;
    for (Polarity p : kAllPolarities) {
        const double tp = static_cast<double>(cm.cell(p, p));
        const std::int64_t predicted = cm.col_total(p);
        const std::int64_t actual = cm.row_total(p);
        ClassPrf& c = report.per_class[class_index(p)];
        c.absent = predicted == 0 && actual == 0;
        c.precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
        c.recall = actual == 0 ? 0.0 : tp / static_cast<double>(actual);
        c.f1 = (c.precision + c.recall) == 0.0
                   ? 0.0
                   : 2.0 * c.precision * c.recall / (c.precision + c.recall);
    }
    report.micro_f1 = static_cast<double>(cm.diagonal()) / static_cast<double>(n);
    for (const ClassPrf& c : report.per_class) {
        report.macro.precision += c.precision / 3.0;
        report.macro.recall += c.recall / 3.0;
        report.macro.f1 += c.f1 / 3.0;
    }
    return report;
}

// Everything the evaluation harness reports for one gold/prediction pair.
struct MetricsReport {
    std::int64_t n = 0;
    std::int64_t matches = 0;
    std::int64_t mild = 0;
    std::int64_t severe = 0;
    double accuracy = 0.0;
    double cohen_kappa = 0.0;
    bool kappa_degenerate = false;
    PrfReport prf;
    ConfusionMatrix confusion;
};

inline MetricsReport compute_report(std::span<const Polarity> gold,
                                    std::span<const Polarity> pred) {
    MetricsReport report;
    report.confusion = ConfusionMatrix::from_labels(gold, pred);
    const DisagreementSplit split = accuracy_and_split(gold, pred);
    report.n = split.n();
    report.matches = split.matches;
    report.mild = split.mild;
    report.severe = split.severe;
    report.accuracy = split.accuracy;
    report.cohen_kappa = cohen_kappa(report.confusion, &report.kappa_degenerate);
    report.prf = prf(report.confusion);
    return report;
}

// Position-wise agreement pattern of three aligned raters.
struct VennPartition {
    std::int64_t all_three = 0;
    std::int64_t only_ab = 0;
    std::int64_t only_ac = 0;
    std::int64_t only_bc = 0;
    std::int64_t none_agree = 0;

    std::int64_t total() const { return all_three + only_ab + only_ac + only_bc + none_agree; }
    std::int64_t at_least_two() const { return total() - none_agree; }
};

inline VennPartition venn3(std::span<const Polarity> a, std::span<const Polarity> b,
                           std::span<const Polarity> c) {
    if (a.size() != b.size() || a.size() != c.size())
        throw MetricsError("venn3 requires three equal-length label vectors");
    if (a.empty()) throw MetricsError("venn3 on empty label vectors");
    VennPartition part;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool ab = a[i] == b[i], ac = a[i] == c[i], bc = b[i] == c[i];
        if (ab && ac) ++part.all_three;
        else if (ab) ++part.only_ab;
        else if (ac) ++part.only_ac;
        else if (bc) ++part.only_bc;
        else ++part.none_agree;
    }
    return part;
}

}  // namespace senti
