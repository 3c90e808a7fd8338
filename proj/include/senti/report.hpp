#pragma once

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "senti/core.hpp"
#include "senti/metrics.hpp"

namespace senti {

// Table values are rounded half away from zero, matching how the printed
// reference tables round.
inline double round_half_up(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::copysign(std::floor(std::abs(x) * scale + 0.5) / scale, x);
}

inline std::string format_fixed(double x, int digits) {
    double r = round_half_up(x, digits);
    if (r == 0.0) r = 0.0;  // never print "-0.000"
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << r;
    return os.str();
}

inline std::string format_percent(double share, int digits = 1) {
    return format_fixed(share * 100.0, digits) + "%";
}

inline void render_session_report(std::ostream& os, const SessionReport& report) {
    os << "statements: " << report.total() << '\n';
    for (Polarity p : {Polarity::positive, Polarity::neutral, Polarity::negative}) {
        os << "  " << format_label(p) << ": " << report.count(p) << " ("
           << format_percent(report.share(p)) << ")\n";
    }
}

inline void render_metrics_report(std::ostream& os, const MetricsReport& report) {
    os << "n:           " << report.n << '\n';
    os << "matches:     " << report.matches << " (" << format_percent(report.accuracy) << ")\n";
    os << "mild:        " << report.mild << " ("
       << format_percent(static_cast<double>(report.mild) / static_cast<double>(report.n)) << ")\n";
    os << "severe:      " << report.severe << " ("
       << format_percent(static_cast<double>(report.severe) / static_cast<double>(report.n))
       << ")\n";
    os << "accuracy:    " << format_fixed(report.accuracy, 3) << '\n';
    os << "cohen_kappa: " << format_fixed(report.cohen_kappa, 3)
       << (report.kappa_degenerate ? " (degenerate: single-class agreement)" : "") << '\n';
    os << "class       P      R      F1\n";
    for (Polarity p : {Polarity::positive, Polarity::neutral, Polarity::negative}) {
        const ClassPrf& c = report.prf.for_class(p);
        os << std::left << std::setw(12) << format_label(p) << std::setw(7)
           << format_fixed(c.precision, 3) << std::setw(7) << format_fixed(c.recall, 3)
           << format_fixed(c.f1, 3) << (c.absent ? "  (absent)" : "") << '\n';
    }
    os << std::left << std::setw(12) << "micro" << std::setw(7) << "-" << std::setw(7) << "-"
       << format_fixed(report.prf.micro_f1, 3) << '\n';
    os << std::left << std::setw(12) << "macro" << std::setw(7)
       << format_fixed(report.prf.macro.precision, 3) << std::setw(7)
       << format_fixed(report.prf.macro.recall, 3) << format_fixed(report.prf.macro.f1, 3) << '\n';
}

inline nlohmann::json class_prf_json(const ClassPrf& c) {
    return nlohmann::json{{"precision", c.precision},
                          {"recall", c.recall},
                          {"f1", c.f1},
                          {"absent", c.absent}};
}

// Stable machine-readable form of a MetricsReport; key names are part of the
// documented interface.
inline nlohmann::json metrics_report_json(const MetricsReport& report) {
    nlohmann::json per_class;
    for (Polarity p : kAllPolarities)
        per_class[std::string(format_label(p))] = class_prf_json(report.prf.for_class(p));
    nlohmann::json confusion = nlohmann::json::array();
    for (Polarity t : kAllPolarities) {
        nlohmann::json row = nlohmann::json::array();
        for (Polarity p : kAllPolarities) row.push_back(report.confusion.cell(t, p));
        confusion.push_back(row);
    }
    return nlohmann::json{
        {"n", report.n},
        {"matches", report.matches},
        {"mild", report.mild},
        {"severe", report.severe},
        {"accuracy", report.accuracy},
        {"cohen_kappa", report.cohen_kappa},
        {"kappa_degenerate", report.kappa_degenerate},
        {"micro_f1", report.prf.micro_f1},
        {"macro", class_prf_json(report.prf.macro)},
        {"per_class", per_class},
        {"class_order", {"negative", "neutral", "positive"}},
        {"confusion", confusion},
    };
}

inline nlohmann::json venn_json(const VennPartition& venn) {
    return nlohmann::json{{"all_three", venn.all_three},   {"only_ab", venn.only_ab},
                          {"only_ac", venn.only_ac},       {"only_bc", venn.only_bc},
                          {"none_agree", venn.none_agree}, {"at_least_two", venn.at_least_two()}};
}

inline void render_venn(std::ostream& os, const VennPartition& venn) {
    os << "all three agree:  " << venn.all_three << '\n';
    os << "only a and b:     " << venn.only_ab << '\n';
    os << "only a and c:     " << venn.only_ac << '\n';
    os << "only b and c:     " << venn.only_bc << '\n';
    os << "no pair agrees:   " << venn.none_agree << '\n';
    os << "at least two:     " << venn.at_least_two() << " of " << venn.total() << '\n';
}

}  // namespace senti
