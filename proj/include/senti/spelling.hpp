#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "senti/classify.hpp"
#include "senti/core.hpp"

namespace senti {

class DictionaryError : public Error {
public:
    using Error::Error;
};

// A word must be at least this frequent to be offered as a correction.
inline constexpr std::uint64_t kCorrectionFrequencyFloor = 5;

struct DictionaryWord {
    std::uint64_t frequency = 0;
    bool noun = false;
};

// Word-frequency list backing the spelling/capitalization normalizer.
// Lines are `word<TAB>frequency[<TAB>noun]`; `#` starts a comment.
class Dictionary {
public:
    Dictionary() = default;

    static Dictionary parse(std::string_view text, const std::string& origin = "dictionary") {
        Dictionary dict;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            const std::size_t tab1 = line.find('\t');
            if (tab1 == std::string::npos)
                throw DictionaryError(origin + ":" + std::to_string(line_no) +
                                      ": expected word<TAB>frequency");
            const std::string word = detail::ascii_lower(detail::trim(std::string_view(line).substr(0, tab1)));
            std::string_view rest = std::string_view(line).substr(tab1 + 1);
            const std::size_t tab2 = rest.find('\t');
            const std::string freq_str{detail::trim(rest.substr(0, tab2))};
            DictionaryWord entry;
            try {
                entry.frequency = std::stoull(freq_str);
            } catch (const std::exception&) {
                throw DictionaryError(origin + ":" + std::to_string(line_no) +
                                      ": malformed frequency \"" + freq_str + "\"");
            }
            if (tab2 != std::string_view::npos) {
                const std::string_view flag = detail::trim(rest.substr(tab2 + 1));
                if (flag == "noun") entry.noun = true;
                else if (!flag.empty())
                    throw DictionaryError(origin + ":" + std::to_string(line_no) +
                                          ": unknown flag \"" + std::string(flag) + "\"");
            }
            dict.words_[word] = entry;
        }
        return dict;
    }

    static Dictionary load_file(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DictionaryError("cannot open dictionary " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str(), path.filename().string());
    }

    const DictionaryWord* find(const std::string& word) const {
        auto it = words_.find(word);
        return it == words_.end() ? nullptr : &it->second;
    }

    bool empty() const noexcept { return words_.empty(); }

    // The unique dictionary word at Levenshtein distance 1 whose frequency
    // clears the floor, or empty when none or several qualify.
    std::string unique_neighbor(const std::string& word) const {
        std::string found;
        for (const auto& [candidate, entry] : words_) {
            if (entry.frequency <= kCorrectionFrequencyFloor) continue;
            if (!edit_distance_one(word, candidate)) continue;
            if (!found.empty()) return {};  // ambiguous
            found = candidate;
        }
        return found;
    }

private:
    static bool edit_distance_one(const std::string& a, const std::string& b) {
        const std::size_t la = a.size(), lb = b.size();
        if (la == lb) {
            std::size_t diff = 0;
            for (std::size_t i = 0; i < la; ++i)
                if (a[i] != b[i] && ++diff > 1) return false;
            return diff == 1;
        }
        const std::string& shorter = la < lb ? a : b;
        const std::string& longer = la < lb ? b : a;
        if (longer.size() - shorter.size() != 1) return false;
        std::size_t i = 0, j = 0;
        bool skipped = false;
        while (i < shorter.size() && j < longer.size()) {
            if (shorter[i] == longer[j]) {
                ++i;
                ++j;
            } else {
                if (skipped) return false;
                skipped = true;
                ++j;
            }
        }
        return true;
    }

    std::unordered_map<std::string, DictionaryWord> words_;
};

namespace detail {

// ASCII-only capitalization; a leading non-ASCII letter is left alone rather
// than mangled mid-sequence.
inline void capitalize_first_alpha(std::string& s) {
    for (char& c : s) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0x80) return;
        if (std::isalpha(u)) {
            c = static_cast<char>(std::toupper(u));
            return;
        }
    }
}

struct TokenParts {
    std::string lead;  // leading punctuation
    std::string core;
    std::string tail;  // trailing punctuation
};

inline TokenParts split_token(std::string_view token) {
    std::size_t begin = 0, end = token.size();
    while (begin < end && std::ispunct(static_cast<unsigned char>(token[begin]))) ++begin;
    while (end > begin && std::ispunct(static_cast<unsigned char>(token[end - 1]))) --end;
    return TokenParts{std::string(token.substr(0, begin)),
                      std::string(token.substr(begin, end - begin)),
                      std::string(token.substr(end))};
}

}  // namespace detail

// Deterministic normalization applied to transcribed statements:
//   1. the first alphabetic character of the statement is uppercased;
//   2. in German, dictionary nouns are capitalized;
//   3. a token missing from the dictionary is replaced by its unique
//      edit-distance-1 neighbor when one frequent-enough candidate exists.
// Idempotent; tokens are re-joined with single spaces.
inline std::string normalize_spelling(std::string_view text, const Dictionary& dictionary,
                                      Language lang) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    std::string raw;
    while (in >> raw) tokens.push_back(raw);

    for (std::string& token : tokens) {
        auto parts = detail::split_token(token);
        if (parts.core.empty()) continue;
        const std::string lower = detail::ascii_lower(parts.core);
        const DictionaryWord* known = dictionary.find(lower);
        std::string core = parts.core;
        if (!known && !dictionary.empty()) {
            const std::string fixed = dictionary.unique_neighbor(lower);
            if (!fixed.empty()) {
                core = fixed;
                known = dictionary.find(fixed);
                // keep the original token's initial capitalization
                if (std::isupper(static_cast<unsigned char>(parts.core[0])))
                    detail::capitalize_first_alpha(core);
            }
        }
        if (lang == Language::de && known && known->noun) detail::capitalize_first_alpha(core);
        token = parts.lead + core + parts.tail;
    }

    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    detail::capitalize_first_alpha(out);
    return out;
}

}  // namespace senti
