// Command-line front end for the sentiment pipeline: CSV batch analysis,
// meeting audio analysis, a live statement feed with immediate per-statement
// feedback, and the evaluation harness.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "senti/senti.hpp"

namespace {

namespace fs = std::filesystem;
using namespace senti;

enum class Combiner { median_star, majority };

struct CommonOptions {
    std::string lang = "en";
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
};

ClassifierConfig make_config(const CommonOptions& opts) {
    if (!opts.config_path.empty()) return load_config(opts.config_path);
    return builtin::default_config(parse_language(opts.lang));
}

// Colored square markers for the real-time feed; green marks positive, red
// negative, neutral stays uncolored.
std::string marker(Polarity p, bool color) {
    if (color) {
        switch (p) {
            case Polarity::positive: return "\033[32m■\033[0m";
            case Polarity::negative: return "\033[31m■\033[0m";
            case Polarity::neutral: return "■";
        }
    }
    switch (p) {
        case Polarity::positive: return "[+]";
        case Polarity::negative: return "[-]";
        case Polarity::neutral: return "[ ]";
    }
    return "[ ]";
}

std::vector<std::string> result_row(const EnsembleResult& r) {
    std::vector<std::string> row;
    row.push_back(std::to_string(r.statement.id));
    row.push_back(r.statement.text);
    for (const ToolVote& vote : r.votes.votes) row.push_back(std::string(format_label(vote.label)));
    row.push_back(std::string(format_label(r.combined)));
    return row;
}

// Results CSV with the fixed header id,text,tool1..tool4,combined. Written
// to a temporary file first so failures never leave a partial output behind.
void write_results_csv(const fs::path& path, const std::vector<EnsembleResult>& results) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + path.string());
        const std::vector<std::string> header = {"id",    "text",  "tool1",   "tool2",
                                                 "tool3", "tool4", "combined"};
        write_csv_row(out, header);
        for (const EnsembleResult& r : results) write_csv_row(out, result_row(r));
        if (!out) throw Error("short write to " + path.string());
    }
    fs::rename(tmp, path);
}

std::vector<EnsembleResult> combine_with(std::vector<Statement> statements,
                                         std::vector<VoteSet> votesets, Combiner combiner,
                                         std::uint64_t seed) {
    if (combiner == Combiner::median_star) return combine_session(std::move(statements), std::move(votesets));
    std::vector<EnsembleResult> results;
    results.reserve(statements.size());
    for (std::size_t i = 0; i < statements.size(); ++i) {
        EnsembleResult r;
        r.combined = majority_vote(votesets[i].labels(), seed + i);
        r.statement = std::move(statements[i]);
        r.votes = std::move(votesets[i]);
        results.push_back(std::move(r));
    }
    return results;
}

int run_analyze_text(const std::string& input, const CommonOptions& opts, Combiner combiner) {
    const ClassifierConfig config = make_config(opts);
    const CsvStatements loaded = read_statements_csv(input);
    if (loaded.skipped > 0)
        std::cerr << "warning: skipped " << loaded.skipped << " empty statement(s)\n";
    const std::vector<VoteSet> votes = classify_session(loaded.statements, config);
    const std::vector<EnsembleResult> results =
        combine_with(loaded.statements, votes, combiner, opts.seed);
    write_results_csv(opts.out_path, results);
    render_session_report(std::cout, session_summary(results));
    std::cout << "results written to " << opts.out_path << '\n';
    return 0;
}

struct AudioOptions {
    std::string wav_path;
    std::string transcriber;
    std::string dictionary_path;
    VadConfig vad;
};

// Segments the clip, transcribes each utterance and normalizes spelling.
// A failing or empty transcription drops that utterance, never the session.
std::vector<Statement> statements_from_audio(const AudioOptions& audio, Language lang,
                                             bool live_echo, bool color,
                                             const ClassifierConfig& config) {
    const AudioClip clip = read_wav(audio.wav_path);
    const std::vector<UtteranceSegment> segments = segment_audio(clip, audio.vad);
    const Dictionary dictionary = audio.dictionary_path.empty()
                                      ? builtin::default_dictionary(lang)
                                      : Dictionary::load_file(audio.dictionary_path);
    std::vector<Statement> statements;
    std::uint64_t next_id = 0;
    std::size_t dropped = 0;
    for (const UtteranceSegment& segment : segments) {
        std::string text;
        try {
            text = transcribe(clip, segment, audio.transcriber);
        } catch (const TranscribeError& e) {
            std::cerr << "warning: segment at " << format_fixed(segment.start_time, 2)
                      << "s: " << e.what() << '\n';
            continue;
        }
        if (text.empty()) {
            ++dropped;
            continue;
        }
        Statement s;
        s.id = next_id++;
        s.text = normalize_spelling(text, dictionary, lang);
        s.source = Source::audio;
        s.start_time = segment.start_time;
        if (live_echo) {
            std::cout << marker(realtime_label(s, config), color) << ' ' << s.text << std::endl;
        }
        statements.push_back(std::move(s));
    }
    if (dropped > 0)
        std::cerr << "warning: dropped " << dropped << " segment(s) with empty transcription\n";
    return statements;
}

int run_analyze_audio(const AudioOptions& audio, const CommonOptions& opts, bool color) {
    const ClassifierConfig config = make_config(opts);
    const Language lang = config.language;
    const std::vector<Statement> statements =
        statements_from_audio(audio, lang, true, color, config);
    const std::vector<VoteSet> votes = classify_session(statements, config);
    const std::vector<EnsembleResult> results =
        combine_session(statements, votes);
    render_session_report(std::cout, session_summary(results));
    if (!opts.out_path.empty()) {
        write_results_csv(opts.out_path, results);
        std::cout << "results written to " << opts.out_path << '\n';
    }
    return 0;
}

// Statement-by-statement phase: echo each arriving line immediately with the
// real-time slot's marker, then run the remaining quartet work in batch once
// the stream ends.
int run_live(const AudioOptions& audio, const CommonOptions& opts, bool use_stdin, bool color) {
    const ClassifierConfig config = make_config(opts);
    std::vector<Statement> statements;
    if (use_stdin) {
        read_live(std::cin, [&](Statement&& s) {
            try {
                std::cout << marker(realtime_label(s, config), color) << ' ' << s.text << std::endl;
            } catch (const Error& e) {
                std::cerr << "warning: statement " << s.id << ": " << e.what() << '\n';
            }
            statements.push_back(std::move(s));
        });
    } else {
        statements = statements_from_audio(audio, config.language, true, color, config);
    }

    std::vector<EnsembleResult> results;
    results.reserve(statements.size());
    for (Statement& s : statements) {
        try {
            VoteSet votes = classify_all(s, config);
            EnsembleResult r;
            r.combined = median_star(votes.labels());
            r.statement = std::move(s);
            r.votes = std::move(votes);
            results.push_back(std::move(r));
        } catch (const Error& e) {
            std::cerr << "warning: statement " << s.id << " skipped: " << e.what() << '\n';
        }
    }
    render_session_report(std::cout, session_summary(results));
    if (!opts.out_path.empty()) {
        write_results_csv(opts.out_path, results);
        std::cout << "results written to " << opts.out_path << '\n';
    }
    return 0;
}

// Column pick for the evaluation loaders: predictions prefer the ensemble's
// `combined` column, gold labels prefer `Polarity`.
std::vector<Polarity> load_pred_labels(const fs::path& path, const std::string& explicit_column) {
    const CsvTable table = read_csv_table(path);
    if (!explicit_column.empty()) return labels_from_table(table, explicit_column);
    for (const char* candidate : {"combined", "label", "Polarity"})
        if (table.column(candidate) >= 0) return labels_from_table(table, candidate);
    throw SchemaError(path.string() + ": no prediction column found, expected one of combined, " +
                      "label, Polarity (available: " + table.columns_joined() + ")");
}

std::vector<Polarity> load_gold_labels(const fs::path& path, const std::string& explicit_column) {
    const CsvTable table = read_csv_table(path);
    if (!explicit_column.empty()) return labels_from_table(table, explicit_column);
    for (const char* candidate : {"Polarity", "label", "gold"})
        if (table.column(candidate) >= 0) return labels_from_table(table, candidate);
    throw SchemaError(path.string() + ": no gold column found, expected one of Polarity, label, " +
                      "gold (available: " + table.columns_joined() + ")");
}

void write_report_file(const fs::path& path, const nlohmann::json& doc) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

int run_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& pred_column, const std::string& gold_column,
                 const std::string& report_path) {
    const std::vector<Polarity> pred = load_pred_labels(pred_path, pred_column);
    const std::vector<Polarity> gold =
        load_gold_labels(gold_path.empty() ? pred_path : gold_path, gold_column);
    if (pred.size() != gold.size())
        throw MetricsError("row count mismatch: " + std::to_string(pred.size()) +
                           " predictions vs " + std::to_string(gold.size()) + " gold labels");
    const MetricsReport report = compute_report(gold, pred);
    render_metrics_report(std::cout, report);
    if (!report_path.empty()) write_report_file(report_path, metrics_report_json(report));
    return 0;
}

int run_compare3(const std::string& a_path, const std::string& b_path, const std::string& c_path,
                 const std::string& report_path) {
    const std::vector<Polarity> a = read_label_column(a_path);
    const std::vector<Polarity> b = read_label_column(b_path);
    const std::vector<Polarity> c = read_label_column(c_path);
    if (a.size() != b.size() || a.size() != c.size())
        throw MetricsError("label files differ in row count: " + std::to_string(a.size()) + ", " +
                           std::to_string(b.size()) + ", " + std::to_string(c.size()));

    struct Pair {
        const char* name;
        const std::vector<Polarity>&gold, &pred;
    };
    const Pair pairs[] = {{"a - b", a, b}, {"a - c", a, c}, {"b - c", b, c}};
    nlohmann::json pairs_json;
    std::cout << "pair     matches  agreement  cohen_kappa\n";
    for (const Pair& pair : pairs) {
        const MetricsReport report = compute_report(pair.gold, pair.pred);
        std::cout << pair.name << "    " << report.matches << "/" << report.n << "    "
                  << format_fixed(report.accuracy, 3) << "      "
                  << format_fixed(report.cohen_kappa, 3) << '\n';
        std::string key = pair.name;
        std::erase(key, ' ');
        std::replace(key.begin(), key.end(), '-', '_');
        pairs_json[key] = metrics_report_json(report);
    }
    const VennPartition venn = venn3(a, b, c);
    render_venn(std::cout, venn);
    if (!report_path.empty())
        write_report_file(report_path, nlohmann::json{{"pairs", pairs_json}, {"venn", venn_json(venn)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ensemble sentiment polarity analysis for team communication"};
    app.require_subcommand(1);

    CommonOptions opts;
    AudioOptions audio;
    bool no_color = false;
    std::string combiner_name = "median-star";

    auto add_lang = [&](CLI::App* cmd) {
        cmd->add_option("--lang", opts.lang, "Language: en or de")->check(CLI::IsMember({"en", "de"}));
        cmd->add_option("--config", opts.config_path, "Classifier config (JSON)");
    };
    auto add_vad = [&](CLI::App* cmd) {
        cmd->add_option("--frame-ms", audio.vad.frame_ms, "VAD frame length in ms (10/20/30)");
        cmd->add_option("--energy-threshold", audio.vad.energy_threshold, "VAD RMS threshold");
        cmd->add_option("--hangover-frames", audio.vad.hangover_frames,
                        "Silent frames that close an utterance");
        cmd->add_option("--min-speech-frames", audio.vad.min_speech_frames,
                        "Speech frames that open an utterance");
        cmd->add_option("--dictionary", audio.dictionary_path, "Spelling dictionary (TSV)");
    };

    std::string input_path;
    CLI::App* analyze_text = app.add_subcommand("analyze-text", "Classify a CSV of statements");
    analyze_text->add_option("--input", input_path, "Input CSV with a \"Text\" column")->required();
    analyze_text->add_option("--out", opts.out_path, "Results CSV path")->required();
    analyze_text->add_option("--combiner", combiner_name, "Label combiner: median-star or majority")
        ->check(CLI::IsMember({"median-star", "majority"}));
    analyze_text->add_option("--seed", opts.seed, "Seed for the majority baseline's tie breaks");
    add_lang(analyze_text);

    CLI::App* analyze_audio = app.add_subcommand("analyze-audio", "Classify a 16 kHz mono WAV");
    analyze_audio->add_option("--wav", audio.wav_path, "Input WAV (PCM16, mono, 16 kHz)")->required();
    analyze_audio->add_option("--transcriber", audio.transcriber, "Transcriber command: <cmd> <wav>")
        ->required();
    analyze_audio->add_option("--out", opts.out_path, "Results CSV path");
    analyze_audio->add_flag("--no-color", no_color, "Plain-text markers instead of colors");
    add_lang(analyze_audio);
    add_vad(analyze_audio);

    CLI::App* live = app.add_subcommand("live", "Classify a live statement stream");
    bool live_stdin = false;
    live->add_flag("--stdin", live_stdin, "Read statements line by line from stdin (default)");
    live->add_option("--wav-stream", audio.wav_path, "Treat a WAV file as the incoming stream");
    live->add_option("--transcriber", audio.transcriber, "Transcriber command for --wav-stream");
    live->add_option("--out", opts.out_path, "Results CSV path");
    live->add_flag("--no-color", no_color, "Plain-text markers instead of colors");
    add_lang(live);
    add_vad(live);

    std::string pred_path, gold_path, pred_column, gold_column, report_path;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against gold labels");
    evaluate->add_option("--pred", pred_path, "Predictions CSV")->required();
    evaluate->add_option("--gold", gold_path, "Gold CSV (defaults to --pred for two-column files)");
    evaluate->add_option("--pred-column", pred_column, "Prediction column name");
    evaluate->add_option("--gold-column", gold_column, "Gold column name");
    evaluate->add_option("--report", report_path, "Write the machine-readable report here (JSON)");

    std::string a_path, b_path, c_path;
    CLI::App* compare3 = app.add_subcommand("compare3", "Three-way rater comparison");
    compare3->add_option("--a", a_path, "First label CSV")->required();
    compare3->add_option("--b", b_path, "Second label CSV")->required();
    compare3->add_option("--c", c_path, "Third label CSV")->required();
    compare3->add_option("--report", report_path, "Write the machine-readable report here (JSON)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_text->parsed()) {
            const Combiner combiner =
                combiner_name == "majority" ? Combiner::majority : Combiner::median_star;
            return run_analyze_text(input_path, opts, combiner);
        }
        if (analyze_audio->parsed()) return run_analyze_audio(audio, opts, !no_color);
        if (live->parsed()) {
            const bool use_stdin = audio.wav_path.empty();
            if (!use_stdin && audio.transcriber.empty())
                throw Error("--wav-stream requires --transcriber");
            return run_live(audio, opts, use_stdin, !no_color);
        }
        if (evaluate->parsed())
            return run_evaluate(pred_path, gold_path, pred_column, gold_column, report_path);
        if (compare3->parsed()) return run_compare3(a_path, b_path, c_path, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
