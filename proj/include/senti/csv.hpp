#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "senti/core.hpp"

namespace senti {

class CsvError : public Error {
public:
    using Error::Error;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a named header column, or -1.
    int column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }

    std::string columns_joined() const {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ", ";
            out += header[i];
        }
        return out;
    }
};

// RFC-4180 parser: quoted fields may contain commas, escaped quotes ("") and
// line breaks; rows end on LF or CRLF outside quotes. Every row must have as
// many fields as the header. A UTF-8 BOM before the header is skipped.
inline CsvTable parse_csv(std::string_view text, std::string_view origin = "csv") {
    CsvTable table;
    std::size_t pos = 0;
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;

    std::size_t row_number = 0;  // 1-based, header is row 1
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool row_started = false;

    auto fail = [&](const std::string& msg) {
        throw CsvError(std::string(origin) + ": row " + std::to_string(row_number + 1) + ": " + msg);
    };
    auto end_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        ++row_number;
        if (row_number == 1) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw CsvError(std::string(origin) + ": row " + std::to_string(row_number) + ": expected " +
                               std::to_string(table.header.size()) + " fields, got " +
                               std::to_string(fields.size()));
            table.rows.push_back(std::move(fields));
        }
        fields.clear();
        row_started = false;
    };

    while (pos < text.size()) {
        const char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    quoted = false;
                    if (pos + 1 < text.size() && text[pos + 1] != ',' && text[pos + 1] != '\n' &&
                        text[pos + 1] != '\r')
                        fail("unexpected character after closing quote");
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty()) fail("quote inside unquoted field");
            quoted = true;
            row_started = true;
        } else if (c == ',') {
            end_field();
            row_started = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
            if (row_started || !field.empty() || !fields.empty()) end_row();
        } else {
            field += c;
            row_started = true;
        }
        ++pos;
    }
    if (quoted) fail("unterminated quoted field");
    if (row_started || !field.empty() || !fields.empty()) end_row();
    if (table.header.empty()) throw CsvError(std::string(origin) + ": missing header row");
    return table;
}

inline CsvTable read_csv_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path.filename().string());
}

// Quotes a field only when RFC-4180 requires it.
inline std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline void write_csv_row(std::ostream& os, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(fields[i]);
    }
    os << '\n';
}

}  // namespace senti
