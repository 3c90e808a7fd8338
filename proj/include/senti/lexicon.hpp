#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "senti/core.hpp"

namespace senti {

class LexiconError : public Error {
public:
    using Error::Error;
};

// Splits on whitespace, strips leading/trailing ASCII punctuation and
// lowercases ASCII letters. Inner punctuation (don't, e.g.) is kept; bytes
// outside ASCII pass through untouched.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            std::string_view word = text.substr(i, j - i);
            while (!word.empty() && std::ispunct(static_cast<unsigned char>(word.front())))
                word.remove_prefix(1);
            while (!word.empty() && std::ispunct(static_cast<unsigned char>(word.back())))
                word.remove_suffix(1);
            if (!word.empty()) tokens.push_back(detail::ascii_lower(word));
        }
        i = j;
    }
    return tokens;
}

enum class LexiconKind { strength, valence };

// One lexicon row: either a sentiment-bearing term (value is an integer
// strength in [-5,-1]u[1,5] or a valence in [-1,1]) or a modifier flagged as
// booster (value is the valence multiplier) or negator.
struct LexiconEntry {
    double value = 0.0;
    bool booster = false;
    bool negator = false;

    bool scored() const noexcept { return !booster && !negator; }
};

// Immutable after load; lookups are by lowercased token.
class Lexicon {
public:
    Lexicon() = default;

    static Lexicon parse(std::string_view text, LexiconKind kind,
                         const std::string& origin = "lexicon") {
        Lexicon lex;
        lex.kind_ = kind;
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            start = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty() || line.front() == '#') {
                if (start > text.size()) break;
                continue;
            }
            lex.add_line(line, kind, origin, line_no);
            if (start > text.size()) break;
        }
        return lex;
    }

    static Lexicon load_file(const std::filesystem::path& path, LexiconKind kind) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw LexiconError("cannot open lexicon " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str(), kind, path.filename().string());
    }

    const LexiconEntry* find(const std::string& token) const {
        auto it = entries_.find(token);
        return it == entries_.end() ? nullptr : &it->second;
    }

    LexiconKind kind() const noexcept { return kind_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    void add_line(std::string_view line, LexiconKind kind, const std::string& origin,
                  std::size_t line_no) {
        auto fail = [&](const std::string& msg) {
            throw LexiconError(origin + ":" + std::to_string(line_no) + ": " + msg);
        };
        const std::size_t tab1 = line.find('\t');
        if (tab1 == std::string_view::npos) fail("expected term<TAB>value");
        const std::string term = detail::ascii_lower(detail::trim(line.substr(0, tab1)));
        if (term.empty()) fail("empty term");

        std::string_view rest = line.substr(tab1 + 1);
        const std::size_t tab2 = rest.find('\t');
        const std::string value_str{detail::trim(rest.substr(0, tab2))};
        std::string_view flag =
            tab2 == std::string_view::npos ? std::string_view{} : detail::trim(rest.substr(tab2 + 1));

        LexiconEntry entry;
        try {
            std::size_t used = 0;
            entry.value = std::stod(value_str, &used);
            if (used != value_str.size()) fail("malformed value \"" + value_str + "\"");
        } catch (const std::exception&) {
            fail("malformed value \"" + value_str + "\"");
        }

        if (flag == "booster") {
            entry.booster = true;
            if (!(entry.value > 0.0)) fail("booster multiplier must be positive");
        } else if (flag == "negator") {
            entry.negator = true;
        } else if (!flag.empty()) {
            fail("unknown flag \"" + std::string(flag) + "\"");
        } else if (kind == LexiconKind::strength) {
            const double v = entry.value;
            if (v != std::floor(v) || std::abs(v) < 1.0 || std::abs(v) > 5.0)
                fail("strength must be an integer in [-5,-1] or [1,5], got " + value_str);
        } else {
            if (entry.value < -1.0 || entry.value > 1.0)
                fail("valence must lie in [-1,1], got " + value_str);
        }

        if (!entries_.emplace(term, entry).second) fail("duplicate term \"" + term + "\"");
    }

    LexiconKind kind_ = LexiconKind::valence;
    std::unordered_map<std::string, LexiconEntry> entries_;
};

}  // namespace senti
