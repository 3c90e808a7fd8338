#pragma once

#include <chrono>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "senti/core.hpp"
#include "senti/csv.hpp"

namespace senti {

class SchemaError : public Error {
public:
    using Error::Error;
};

struct CsvStatements {
    std::vector<Statement> statements;
    std::size_t skipped = 0;  // rows with empty/whitespace Text
};

// One Statement per data row of the required "Text" column, ids in row
// order. Blank rows are counted and skipped before id assignment.
inline CsvStatements statements_from_table(const CsvTable& table) {
    const int text_col = table.column("Text");
    if (text_col < 0)
        throw SchemaError("missing required column \"Text\" (available: " + table.columns_joined() +
                          ")");
    CsvStatements out;
    std::uint64_t next_id = 0;
    for (const auto& row : table.rows) {
        const std::string& text = row[static_cast<std::size_t>(text_col)];
        if (detail::trim(text).empty()) {
            ++out.skipped;
            continue;
        }
        Statement s;
        s.id = next_id++;
        s.text = text;
        s.source = Source::csv;
        out.statements.push_back(std::move(s));
    }
    return out;
}

inline CsvStatements read_statements_csv(const std::filesystem::path& path) {
    return statements_from_table(read_csv_table(path));
}

// Loads one polarity label per row from the first of the columns `label`,
// `Polarity`, `combined` present (or an explicitly named column).
inline std::vector<Polarity> labels_from_table(const CsvTable& table,
                                               const std::string& column_name = "") {
    int col = -1;
    if (!column_name.empty()) {
        col = table.column(column_name);
        if (col < 0)
            throw SchemaError("missing label column \"" + column_name + "\" (available: " +
                              table.columns_joined() + ")");
    } else {
        for (const char* candidate : {"label", "Polarity", "combined"}) {
            col = table.column(candidate);
            if (col >= 0) break;
        }
        if (col < 0)
            throw SchemaError("no label column found, expected one of label, Polarity, combined "
                              "(available: " + table.columns_joined() + ")");
    }
    std::vector<Polarity> labels;
    labels.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        try {
            labels.push_back(parse_label(table.rows[i][static_cast<std::size_t>(col)]));
        } catch (const UnknownLabelError& e) {
            throw SchemaError("row " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return labels;
}

inline std::vector<Polarity> read_label_column(const std::filesystem::path& path,
                                               const std::string& column_name = "") {
    return labels_from_table(read_csv_table(path), column_name);
}

// Monotonic seconds since construction; replaceable in tests.
using Clock = std::function<double()>;

inline Clock steady_session_clock() {
    const auto start = std::chrono::steady_clock::now();
    return [start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
}

// Turns a line-oriented stream into Statements as lines arrive: each
// non-empty line is handed to the sink immediately with its arrival time.
// Returns the number of statements emitted.
inline std::size_t read_live(std::istream& in, const std::function<void(Statement&&)>& sink,
                             Clock now = steady_session_clock()) {
    std::string line;
    std::uint64_t next_id = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const double arrival = now();
        if (detail::trim(line).empty()) continue;
        Statement s;
        s.id = next_id++;
        s.text = line;
        s.source = Source::live;
        s.start_time = arrival;
        sink(std::move(s));
    }
    return next_id;
}

}  // namespace senti
