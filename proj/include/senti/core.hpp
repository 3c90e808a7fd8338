#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace senti {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Trinary sentiment polarity on the ordinal scale negative < neutral < positive.
// The underlying values are the ordinal ranks, so rank arithmetic is exact.
enum class Polarity : int {
    negative = -1,
    neutral = 0,
    positive = 1,
};

inline constexpr std::array<Polarity, 3> kAllPolarities = {
    Polarity::negative, Polarity::neutral, Polarity::positive};

constexpr int rank(Polarity p) noexcept { return static_cast<int>(p); }

// Index into per-class arrays: negative=0, neutral=1, positive=2.
constexpr std::size_t class_index(Polarity p) noexcept {
    return static_cast<std::size_t>(rank(p) + 1);
}

constexpr Polarity polarity_from_rank(int r) {
    if (r < -1 || r > 1) throw Error("polarity rank out of range: " + std::to_string(r));
    return static_cast<Polarity>(r);
}

enum class Ordering { less, equal, greater };

constexpr Ordering compare(Polarity a, Polarity b) noexcept {
    if (rank(a) < rank(b)) return Ordering::less;
    if (rank(a) > rank(b)) return Ordering::greater;
    return Ordering::equal;
}

constexpr std::string_view format_label(Polarity p) noexcept {
    switch (p) {
        case Polarity::negative: return "negative";
        case Polarity::neutral: return "neutral";
        case Polarity::positive: return "positive";
    }
    return "neutral";
}

class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(std::string_view label)
        : Error("unknown polarity label: \"" + std::string(label) + "\""),
          label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

namespace detail {

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Accepts the three label words (case-insensitive) and the rank encodings
// "-1"/"0"/"1" (plus "+1") used by numeric data sets.
inline Polarity parse_label(std::string_view s) {
    const std::string t = detail::ascii_lower(detail::trim(s));
    if (t == "negative" || t == "-1") return Polarity::negative;
    if (t == "neutral" || t == "0") return Polarity::neutral;
    if (t == "positive" || t == "1" || t == "+1") return Polarity::positive;
    throw UnknownLabelError(s);
}

enum class Source { csv, live, audio };

constexpr std::string_view source_name(Source s) noexcept {
    switch (s) {
        case Source::csv: return "csv";
        case Source::live: return "live";
        case Source::audio: return "audio";
    }
    return "csv";
}

// One utterance or text row. Ids are assigned by the ingest layer in arrival
// order and are unique per session; text is non-empty (empty inputs are
// dropped before id assignment).
struct Statement {
    std::uint64_t id = 0;
    std::string text;
    Source source = Source::csv;
    std::optional<double> start_time;  // seconds, audio/live only
};

// One classifier slot's prediction for a statement. `raw` is only set by
// slots that produce scores in [-1, 1]; the label is then derived from it.
struct ToolVote {
    std::string tool;
    Polarity label = Polarity::neutral;
    std::optional<double> raw;
};

inline constexpr std::size_t kQuartetSize = 4;

// The per-statement votes of the configured four-classifier quartet.
struct VoteSet {
    std::array<ToolVote, kQuartetSize> votes;

    std::array<Polarity, kQuartetSize> labels() const {
        std::array<Polarity, kQuartetSize> out{};
        for (std::size_t i = 0; i < kQuartetSize; ++i) out[i] = votes[i].label;
        return out;
    }
};

struct EnsembleResult {
    Statement statement;
    VoteSet votes;
    Polarity combined = Polarity::neutral;
};

// Absolute and relative counts of the combined labels of a session.
struct SessionReport {
    std::array<std::uint64_t, 3> counts{};  // indexed by class_index
    std::array<double, 3> shares{};

    std::uint64_t count(Polarity p) const { return counts[class_index(p)]; }
    double share(Polarity p) const { return shares[class_index(p)]; }
    std::uint64_t total() const { return counts[0] + counts[1] + counts[2]; }
};

// Tallies combined labels; shares are 0 for an empty session.
inline SessionReport session_summary(std::span<const EnsembleResult> results) {
    SessionReport report;
    for (const EnsembleResult& r : results) ++report.counts[class_index(r.combined)];
    const std::uint64_t total = report.total();
    if (total > 0) {
        for (std::size_t i = 0; i < 3; ++i)
            report.shares[i] = static_cast<double>(report.counts[i]) / static_cast<double>(total);
    }
    return report;
}

inline SessionReport session_summary(const std::vector<EnsembleResult>& results) {
    return session_summary(std::span<const EnsembleResult>(results));
}

}  // namespace senti
