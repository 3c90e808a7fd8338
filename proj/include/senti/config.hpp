#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "senti/builtin.hpp"
#include "senti/classify.hpp"

namespace senti {

class ConfigError : public Error {
public:
    using Error::Error;
};

// Loads a classifier config from JSON. Lexicon paths are resolved relative
// to the config file. Omitted fields fall back to the built-in defaults for
// the configured language, e.g.
//   {
//     "language": "en",
//     "valence_epsilon": 0.05,
//     "realtime_slot": 3,
//     "slots": [
//       {"kind": "strength", "name": "strength", "lexicon": "strength.tsv"},
//       {"kind": "strength", "name": "strength-se", "lexicon": "se.tsv"},
//       {"kind": "valence", "name": "valence", "lexicon": "valence.tsv"},
//       {"kind": "external", "name": "mytool", "command": "mytool --labels"}
//     ]
//   }
inline ClassifierConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }

    const Language language =
        doc.contains("language") ? parse_language(doc["language"].get<std::string>())
                                 : Language::en;
    ClassifierConfig config = builtin::default_config(language);
    if (doc.contains("valence_epsilon")) config.valence_epsilon = doc["valence_epsilon"].get<double>();
    if (doc.contains("realtime_slot")) config.realtime_slot = doc["realtime_slot"].get<std::size_t>();

    if (doc.contains("slots")) {
        const auto& slots = doc["slots"];
        if (!slots.is_array() || slots.size() != kQuartetSize)
            throw ConfigError(path.string() + ": \"slots\" must be an array of exactly 4 entries");
        config.slots.clear();
        const std::filesystem::path base = path.parent_path();
        for (const auto& spec : slots) {
            ClassifierSlot slot;
            slot.kind = parse_slot_kind(spec.at("kind").get<std::string>());
            slot.name = spec.contains("name") ? spec["name"].get<std::string>()
                                              : std::string(slot_kind_name(slot.kind));
            if (slot.kind == SlotKind::external) {
                slot.command = spec.at("command").get<std::string>();
            } else {
                const std::filesystem::path lex_path =
                    base / spec.at("lexicon").get<std::string>();
                const LexiconKind kind = slot.kind == SlotKind::strength ? LexiconKind::strength
                                                                         : LexiconKind::valence;
                slot.lexicon = Lexicon::load_file(lex_path, kind);
            }
            config.slots.push_back(std::move(slot));
        }
    }
    config.validate();
    return config;
}

}  // namespace senti
