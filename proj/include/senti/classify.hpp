#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "senti/core.hpp"
#include "senti/csv.hpp"
#include "senti/lexicon.hpp"
#include "senti/subprocess.hpp"

namespace senti {

class ClassifierError : public Error {
public:
    using Error::Error;
};

// Scoring constants shared by the native scorers. A modifier (negator or
// booster) acts on a scored term when it occurs within the two tokens
// preceding it; each negator in that window toggles the contribution's sign
// and each booster strengthens it (by +-1 for strength scores, by its
// multiplier for valences).
inline constexpr std::size_t kModifierWindow = 2;
inline constexpr int kStrengthBoost = 1;
inline constexpr double kExclamationFactor = 1.25;
inline constexpr double kDefaultValenceEpsilon = 0.05;

// Trinary label for a [-1,1] score: strictly above epsilon is positive,
// strictly below -epsilon negative, the band in between neutral.
inline Polarity map_valence(double v, double epsilon) {
    if (!(epsilon > 0.0)) throw ClassifierError("valence epsilon must be positive");
    if (v < -1.0 || v > 1.0 || std::isnan(v))
        throw ClassifierError("valence " + std::to_string(v) + " outside [-1,1]");
    if (v > epsilon) return Polarity::positive;
    if (v < -epsilon) return Polarity::negative;
    return Polarity::neutral;
}

// SentiStrength-style dual score: the strongest positive and strongest
// negative term contribution seen, with (1, -1) as the no-signal floor.
struct StrengthScore {
    int pos = 1;   // in [1, 5]
    int neg = -1;  // in [-5, -1]
};

namespace detail {

struct ModifierState {
    int negators = 0;
    int boosters = 0;
    double booster_factor = 1.0;
};

// Counts negators/boosters among the kModifierWindow tokens before `index`.
inline ModifierState modifiers_before(const std::vector<std::string>& tokens, std::size_t index,
                                      const Lexicon& lexicon) {
    ModifierState state;
    const std::size_t first = index >= kModifierWindow ? index - kModifierWindow : 0;
    for (std::size_t i = first; i < index; ++i) {
        const LexiconEntry* entry = lexicon.find(tokens[i]);
        if (!entry) continue;
        if (entry->negator) ++state.negators;
        if (entry->booster) {
            ++state.boosters;
            state.booster_factor *= entry->value;
        }
    }
    return state;
}

}  // namespace detail

inline StrengthScore score_strength(std::string_view text, const Lexicon& lexicon) {
    StrengthScore score;
    const std::vector<std::string> tokens = tokenize(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const LexiconEntry* entry = lexicon.find(tokens[i]);
        if (!entry || !entry->scored()) continue;
        int c = static_cast<int>(entry->value);
        const auto mods = detail::modifiers_before(tokens, i, lexicon);
        if (mods.negators % 2 == 1) c = -c;
        c += (c > 0 ? 1 : -1) * kStrengthBoost * mods.boosters;
        c = std::clamp(c, -5, 5);
        if (c > 0) score.pos = std::max(score.pos, c);
        else score.neg = std::min(score.neg, c);
    }
    return score;
}

// Positive when the positive side outweighs the negative one, and vice
// versa; balanced magnitudes are neutral.
inline Polarity strength_to_polarity(const StrengthScore& score) {
    if (score.pos > -score.neg) return Polarity::positive;
    if (score.pos < -score.neg) return Polarity::negative;
    return Polarity::neutral;
}

inline Polarity strength_to_polarity(int pos, int neg) {
    return strength_to_polarity(StrengthScore{pos, neg});
}

// VADER-style valence: mean of per-token valences after negator flips and
// booster multipliers, amplified by a sentence-final '!', clamped to [-1,1].
// No scored token means 0.
inline double score_valence(std::string_view text, const Lexicon& lexicon) {
    const std::vector<std::string> tokens = tokenize(text);
    double sum = 0.0;
    std::size_t scored = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const LexiconEntry* entry = lexicon.find(tokens[i]);
        if (!entry || !entry->scored()) continue;
        double c = entry->value;
        const auto mods = detail::modifiers_before(tokens, i, lexicon);
        if (mods.negators % 2 == 1) c = -c;
        c *= mods.booster_factor;
        sum += c;
        ++scored;
    }
    if (scored == 0) return 0.0;
    double mean = sum / static_cast<double>(scored);
    const std::string_view trimmed = detail::trim(text);
    if (!trimmed.empty() && trimmed.back() == '!') mean *= kExclamationFactor;
    return std::clamp(mean, -1.0, 1.0);
}

// TextBlob-style plain averaging of raw token valences, with none of the
// modifier rules. Fast enough to be the usual real-time slot.
inline double score_pattern(std::string_view text, const Lexicon& lexicon) {
    const std::vector<std::string> tokens = tokenize(text);
    double sum = 0.0;
    std::size_t scored = 0;
    for (const std::string& token : tokens) {
        const LexiconEntry* entry = lexicon.find(token);
        if (!entry || !entry->scored()) continue;
        sum += entry->value;
        ++scored;
    }
    if (scored == 0) return 0.0;
    return std::clamp(sum / static_cast<double>(scored), -1.0, 1.0);
}

// Hands a batch of statements to an external classifier process. The child
// receives CSV with an `id,text` header on stdin and must answer with
// exactly one label per data row, in order, on stdout.
inline std::vector<Polarity> classify_external(const std::string& command,
                                               std::span<const Statement> statements) {
    std::ostringstream in;
    in << "id,text\n";
    for (const Statement& s : statements) {
        in << s.id << ',' << csv_escape(s.text) << '\n';
    }

    ProcessResult proc;
    try {
        proc = run_process(command, in.str());
    } catch (const ProcessError& e) {
        throw ClassifierError("external classifier \"" + command + "\": " + e.what());
    }
    if (proc.exit_code != 0) {
        std::string detail = detail::trim(proc.err).empty()
                                 ? ""
                                 : std::string(": ") + std::string(detail::trim(proc.err));
        throw ClassifierError("external classifier \"" + command + "\" exited with code " +
                              std::to_string(proc.exit_code) + detail);
    }

    std::vector<Polarity> labels;
    std::istringstream out(proc.out);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(out, line)) {
        ++line_no;
        const std::string_view label = detail::trim(line);
        if (label.empty()) continue;
        try {
            labels.push_back(parse_label(label));
        } catch (const UnknownLabelError& e) {
            throw ClassifierError("external classifier \"" + command + "\": output line " +
                                  std::to_string(line_no) + ": " + e.what());
        }
    }
    if (labels.size() != statements.size())
        throw ClassifierError("external classifier \"" + command + "\" returned " +
                              std::to_string(labels.size()) + " labels for " +
                              std::to_string(statements.size()) + " statements");
    return labels;
}

enum class Language { en, de };

inline Language parse_language(std::string_view s) {
    const std::string t = detail::ascii_lower(detail::trim(s));
    if (t == "en") return Language::en;
    if (t == "de") return Language::de;
    throw Error("unknown language \"" + std::string(s) + "\" (expected en or de)");
}

enum class SlotKind { strength, valence, pattern, external };

inline std::string_view slot_kind_name(SlotKind kind) {
    switch (kind) {
        case SlotKind::strength: return "strength";
        case SlotKind::valence: return "valence";
        case SlotKind::pattern: return "pattern";
        case SlotKind::external: return "external";
    }
    return "strength";
}

inline SlotKind parse_slot_kind(std::string_view s) {
    const std::string t = detail::ascii_lower(detail::trim(s));
    if (t == "strength") return SlotKind::strength;
    if (t == "valence") return SlotKind::valence;
    if (t == "pattern") return SlotKind::pattern;
    if (t == "external") return SlotKind::external;
    throw Error("unknown classifier kind \"" + std::string(s) + "\"");
}

// One of the four classifier slots: a native scorer with its loaded lexicon,
// or the command line of an external classifier process.
struct ClassifierSlot {
    SlotKind kind = SlotKind::strength;
    std::string name;
    Lexicon lexicon;      // strength/valence/pattern
    std::string command;  // external
};

struct ClassifierConfig {
    std::vector<ClassifierSlot> slots;
    std::size_t realtime_slot = 3;
    Language language = Language::en;
    double valence_epsilon = kDefaultValenceEpsilon;

    void validate() const {
        if (slots.size() != kQuartetSize)
            throw Error("classifier config needs exactly 4 slots, got " +
                        std::to_string(slots.size()));
        if (realtime_slot >= slots.size())
            throw Error("realtime_slot " + std::to_string(realtime_slot) + " out of range");
        if (!(valence_epsilon > 0.0)) throw Error("valence_epsilon must be positive");
        for (std::size_t i = 0; i < slots.size(); ++i)
            for (std::size_t j = i + 1; j < slots.size(); ++j)
                if (slots[i].name == slots[j].name)
                    throw Error("duplicate classifier slot name \"" + slots[i].name + "\"");
    }
};

namespace detail {

inline ToolVote run_native_slot(const ClassifierSlot& slot, const ClassifierConfig& config,
                                std::string_view text) {
    ToolVote vote;
    vote.tool = slot.name;
    switch (slot.kind) {
        case SlotKind::strength: {
            vote.label = strength_to_polarity(score_strength(text, slot.lexicon));
            break;
        }
        case SlotKind::valence: {
            const double raw = score_valence(text, slot.lexicon);
            vote.raw = raw;
            vote.label = map_valence(raw, config.valence_epsilon);
            break;
        }
        case SlotKind::pattern: {
            const double raw = score_pattern(text, slot.lexicon);
            vote.raw = raw;
            vote.label = map_valence(raw, config.valence_epsilon);
            break;
        }
        case SlotKind::external:
            throw ClassifierError("external slot cannot run natively");
    }
    return vote;
}

}  // namespace detail

// Runs the full quartet over a batch. External slots are invoked once per
// session with the whole batch; native slots score statement by statement.
inline std::vector<VoteSet> classify_session(std::span<const Statement> statements,
                                             const ClassifierConfig& config) {
    config.validate();
    std::vector<VoteSet> votesets(statements.size());
    for (std::size_t slot_idx = 0; slot_idx < config.slots.size(); ++slot_idx) {
        const ClassifierSlot& slot = config.slots[slot_idx];
        if (slot.kind == SlotKind::external) {
            const std::vector<Polarity> labels = classify_external(slot.command, statements);
            for (std::size_t i = 0; i < statements.size(); ++i)
                votesets[i].votes[slot_idx] = ToolVote{slot.name, labels[i], std::nullopt};
        } else {
            for (std::size_t i = 0; i < statements.size(); ++i)
                votesets[i].votes[slot_idx] =
                    detail::run_native_slot(slot, config, statements[i].text);
        }
    }
    return votesets;
}

inline VoteSet classify_all(const Statement& statement, const ClassifierConfig& config) {
    return classify_session(std::span<const Statement>(&statement, 1), config).front();
}

// Label of the designated real-time slot only; agrees with the matching vote
// classify_all later produces for the same text.
inline Polarity realtime_label(const Statement& statement, const ClassifierConfig& config) {
    config.validate();
    const ClassifierSlot& slot = config.slots[config.realtime_slot];
    if (slot.kind == SlotKind::external)
        return classify_external(slot.command, std::span<const Statement>(&statement, 1)).front();
    return detail::run_native_slot(slot, config, statement.text).label;
}

}  // namespace senti
