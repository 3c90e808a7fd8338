// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "senti/senti.hpp"

using namespace senti;

namespace {

namespace fs = std::filesystem;

const std::string kCli = SENTI_CLI_PATH;
const fs::path kDataDir = SENTI_DATA_DIR;

struct Checker {
    std::ostringstream failures;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures << "\n    " << what;
    }
    void expect_near(double actual, double expected, double tol, const std::string& what) {
        expect(std::abs(actual - expected) <= tol,
               what + ": got " + std::to_string(actual) + ", want " + std::to_string(expected) +
                   " +- " + std::to_string(tol));
    }
};

constexpr Polarity kNeg = Polarity::negative;
constexpr Polarity kNeu = Polarity::neutral;
constexpr Polarity kPos = Polarity::positive;

std::vector<std::array<Polarity, 4>> all_vote_tuples() {
    std::vector<std::array<Polarity, 4>> tuples;
    for (Polarity a : kAllPolarities)
        for (Polarity b : kAllPolarities)
            for (Polarity c : kAllPolarities)
                for (Polarity d : kAllPolarities) tuples.push_back({a, b, c, d});
    return tuples;
}

// Independent brute-force oracle: count votes, >=3 wins, else neutral.
Polarity median_star_oracle(const std::array<Polarity, 4>& votes) {
    int pos = 0, neg = 0;
    for (Polarity v : votes) {
        if (v == kPos) ++pos;
        if (v == kNeg) ++neg;
    }
    if (pos >= 3) return kPos;
    if (neg >= 3) return kNeg;
    return kNeu;
}

void criterion_median_star_oracle(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& votes : all_vote_tuples())
        c.expect(median_star(votes) == median_star_oracle(votes), "oracle mismatch on a tuple");
    c.expect(median_star({kNeg, kNeg, kPos, kPos}) == kNeu, "neg,neg,pos,pos must be neutral");
    c.expect(median_star({kNeg, kNeg, kNeu, kNeu}) == kNeu, "neg,neg,neu,neu override");
    c.expect(median_star({kNeu, kNeu, kPos, kPos}) == kNeu, "neu,neu,pos,pos override");
    c.expect(median_star({kNeg, kNeg, kNeu, kPos}) == kNeu, "neg,neg,neu,pos override");
    c.expect(median_star({kNeg, kNeu, kPos, kPos}) == kNeu, "neg,neu,pos,pos override");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 1.0, "exhaustive check took " + std::to_string(seconds) + "s, limit 1s");
}

void criterion_majority_contrast(Checker& c) {
    const std::array<Polarity, 4> split = {kNeg, kNeg, kPos, kPos};
    int neg = 0, pos = 0, neu = 0;
    const int draws = 10000;
    for (int seed = 0; seed < draws; ++seed) {
        switch (majority_vote(split, static_cast<std::uint64_t>(seed))) {
            case kNeg: ++neg; break;
            case kPos: ++pos; break;
            case kNeu: ++neu; break;
        }
    }
    c.expect(neu == 0, "majority returned neutral " + std::to_string(neu) + " times");
    c.expect_near(neg / static_cast<double>(draws), 0.5, 0.02, "negative share");
    c.expect_near(pos / static_cast<double>(draws), 0.5, 0.02, "positive share");
}

void criterion_split_shares(Checker& c) {
    const struct {
        std::int64_t matches, mild, severe;
        double acc_pct, mild_pct, severe_pct;
    } cases[] = {
        {1197, 292, 11, 79.8, 19.5, 0.7},
        {5127, 1872, 123, 72.0, 26.3, 1.7},
        {6324, 2164, 134, 73.3, 25.1, 1.6},
    };
    for (const auto& t : cases) {
        std::vector<Polarity> gold, pred;
        gold.reserve(static_cast<std::size_t>(t.matches + t.mild + t.severe));
        for (std::int64_t i = 0; i < t.matches; ++i) {
            gold.push_back(kNeu);
            pred.push_back(kNeu);
        }
        for (std::int64_t i = 0; i < t.mild; ++i) {
            gold.push_back(kNeu);
            pred.push_back(kNeg);
        }
        for (std::int64_t i = 0; i < t.severe; ++i) {
            gold.push_back(kNeg);
            pred.push_back(kPos);
        }
        const DisagreementSplit split = accuracy_and_split(gold, pred);
        const double n = static_cast<double>(split.n());
        const std::string tag = std::to_string(t.matches) + "/" + std::to_string(split.n());
        c.expect_near(split.accuracy * 100.0, t.acc_pct, 0.05, "accuracy share " + tag);
        c.expect_near(split.mild / n * 100.0, t.mild_pct, 0.05, "mild share " + tag);
        c.expect_near(split.severe / n * 100.0, t.severe_pct, 0.05, "severe share " + tag);
    }
}

ConfusionMatrix reference_matrix() {
    // rows true (pos, neu, neg) x cols pred (pos, neu, neg); see
    // docs/reference_fixture.md for the derivation of these cells
    const int cells[3][3] = {{17, 15, 0}, {1, 31, 0}, {2, 16, 14}};
    const Polarity order[] = {kPos, kNeu, kNeg};
    ConfusionMatrix cm;
    for (int t = 0; t < 3; ++t)
        for (int p = 0; p < 3; ++p) cm.add(order[t], order[p], cells[t][p]);
    return cm;
}

void criterion_prf_block(Checker& c) {
    const ConfusionMatrix cm = reference_matrix();
    c.expect(cm.n() == 96, "fixture must have 96 items");
    c.expect(cm.diagonal() == 62, "fixture must have 62 matches");
    const PrfReport report = prf(cm);
    const struct {
        Polarity cls;
        double p, r, f1;
    } expected[] = {
        {kPos, 0.850, 0.531, 0.654},
        {kNeu, 0.500, 0.969, 0.660},
        {kNeg, 1.000, 0.438, 0.609},
    };
    for (const auto& e : expected) {
        const ClassPrf& got = report.for_class(e.cls);
        const std::string name{format_label(e.cls)};
        c.expect_near(got.precision, e.p, 0.001, name + " precision");
        c.expect_near(got.recall, e.r, 0.001, name + " recall");
        c.expect_near(got.f1, e.f1, 0.001, name + " f1");
    }
    c.expect_near(report.micro_f1, 62.0 / 96.0, 1e-12, "micro f1 must equal 62/96");
    c.expect_near(report.macro.precision, 0.783, 0.001, "macro precision");
    c.expect_near(report.macro.recall, 0.646, 0.001, "macro recall");
    c.expect_near(report.macro.f1, 0.641, 0.001, "macro f1");
}

void criterion_venn_consistency(Checker& c) {
    std::vector<Polarity> a, b, cc;
    auto rows = [&](int count, Polarity pa, Polarity pb, Polarity pc) {
        for (int i = 0; i < count; ++i) {
            a.push_back(pa);
            b.push_back(pb);
            cc.push_back(pc);
        }
    };
    rows(46, kNeu, kNeu, kNeu);
    rows(14, kPos, kPos, kNeu);
    rows(16, kNeg, kNeu, kNeg);
    rows(15, kNeu, kPos, kPos);
    rows(5, kPos, kNeu, kNeg);

    const VennPartition venn = venn3(a, b, cc);
    c.expect(venn.all_three == 46, "all_three");
    c.expect(venn.only_ab == 14, "only_ab");
    c.expect(venn.only_ac == 16, "only_ac");
    c.expect(venn.only_bc == 15, "only_bc");
    c.expect(venn.none_agree == 5, "none_agree");
    c.expect(venn.at_least_two() == 91, "at_least_two");

    const DisagreementSplit ab = accuracy_and_split(a, b);
    const DisagreementSplit ac = accuracy_and_split(a, cc);
    const DisagreementSplit bc = accuracy_and_split(b, cc);
    c.expect(ab.matches == 60, "a-b matches 60");
    c.expect(ac.matches == 62, "a-c matches 62");
    c.expect(bc.matches == 61, "b-c matches 61");
    c.expect(ab.matches == venn.all_three + venn.only_ab, "a-b cross-check");
    c.expect(ac.matches == venn.all_three + venn.only_ac, "a-c cross-check");
    c.expect(bc.matches == venn.all_three + venn.only_bc, "b-c cross-check");
}

void criterion_kappa(Checker& c) {
    ConfusionMatrix cm;
    cm.add(kNeg, kNeg, 20);
    cm.add(kNeg, kNeu, 5);
    cm.add(kNeu, kNeg, 10);
    cm.add(kNeu, kNeu, 15);
    c.expect_near(cohen_kappa(cm), 0.4, 1e-9, "cohen hand example");

    const std::vector<RatingCounts> items = {{0, 2, 0}, {1, 0, 1}};
    c.expect_near(fleiss_kappa(items, 2), 0.2, 1e-9, "fleiss hand example");

    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> category(0, 2);
    std::vector<RatingCounts> random_items;
    for (int i = 0; i < 10000; ++i) {
        RatingCounts counts{};
        for (int r = 0; r < 3; ++r) ++counts[static_cast<std::size_t>(category(rng))];
        random_items.push_back(counts);
    }
    c.expect_near(fleiss_kappa(random_items, 3), 0.0, 0.05, "random raters near zero");

    ConfusionMatrix perfect;
    for (Polarity p : kAllPolarities) perfect.add(p, p, 10);
    c.expect(cohen_kappa(perfect) == 1.0, "perfect agreement is 1");
    const std::vector<RatingCounts> unanimous = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
    c.expect(fleiss_kappa(unanimous, 3) == 1.0, "unanimous fleiss is 1");
}

void criterion_reference_sentences(Checker& c) {
    const ClassifierConfig config = builtin::default_config(Language::en);
    const struct {
        const char* text;
        Polarity expected;
    } cases[] = {
        {"I am very happy.", kPos},
        {"I am unhappy.", kNeg},
        {"This is a neutral statement.", kNeu},
    };
    for (const auto& t : cases) {
        Statement s;
        s.text = t.text;
        c.expect(realtime_label(s, config) == t.expected,
                 std::string("realtime label of \"") + t.text + "\"");
        c.expect(median_star(classify_all(s, config).labels()) == t.expected,
                 std::string("combined label of \"") + t.text + "\"");
    }
}

AudioClip tone_clip(const std::vector<bool>& pattern, double amplitude) {
    AudioClip clip;
    for (bool speech : pattern) {
        for (std::uint32_t i = 0; i < kRequiredSampleRate; ++i) {
            if (!speech) {
                clip.samples.push_back(0);
            } else {
                const double t = static_cast<double>(i) / kRequiredSampleRate;
                clip.samples.push_back(static_cast<std::int16_t>(
                    std::lround(amplitude * 32000.0 *
                                std::sin(2.0 * std::numbers::pi * 440.0 * t))));
            }
        }
    }
    return clip;
}

void criterion_vad(Checker& c) {
    const VadConfig cfg;
    const double frame = cfg.frame_ms / 1000.0;

    const AudioClip bursts = tone_clip({false, true, false, true, false, true, false}, 0.9);
    const auto segments = segment_audio(bursts, cfg);
    c.expect(segments.size() == 3,
             "3 bursts must give 3 segments, got " + std::to_string(segments.size()));
    if (segments.size() == 3) {
        const double starts[] = {1.0, 3.0, 5.0};
        for (std::size_t i = 0; i < 3; ++i) {
            c.expect(std::abs(segments[i].start_time - starts[i]) <= 2 * frame,
                     "segment " + std::to_string(i) + " start within 2 frames");
            c.expect(std::abs(segments[i].end_time - (starts[i] + 1.0)) <= 2 * frame,
                     "segment " + std::to_string(i) + " end within 2 frames");
        }
    }

    AudioClip silence;
    silence.samples.assign(16000 * 10, 0);
    c.expect(segment_audio(silence, cfg).empty(), "silence must give no segments");

    const AudioClip constant = tone_clip({true, true}, 0.9);
    const auto whole = segment_audio(constant, cfg);
    c.expect(whole.size() == 1, "constant tone must give one segment");
    if (whole.size() == 1)
        c.expect(whole[0].end_time - whole[0].start_time >= 2.0 - 2 * frame,
                 "constant-tone segment must span the clip");

    for (double amplitude : {0.05, 0.1, 0.2, 0.4}) {
        const AudioClip soft = tone_clip({false, true, false, true, false}, amplitude);
        AudioClip loud = soft;
        for (auto& s : loud.samples)
            s = static_cast<std::int16_t>(std::clamp<int>(2 * static_cast<int>(s), -32768, 32767));
        c.expect(segment_audio(loud, cfg).size() >= segment_audio(soft, cfg).size(),
                 "gain must not reduce the segment count at amplitude " + std::to_string(amplitude));
    }
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("senti-acceptance-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

void criterion_cli_end_to_end(Checker& c) {
    TempDir dir;

    {
        const auto start = std::chrono::steady_clock::now();
        const fs::path input = kDataDir / "sample_statements.csv";
        const fs::path out = dir.path / "results.csv";
        const ProcessResult proc =
            run_process(shell_quote(kCli) + " analyze-text --input " +
                            shell_quote(input.string()) + " --out " + shell_quote(out.string()),
                        {});
        c.expect(proc.exit_code == 0, "analyze-text must exit 0: " + proc.err);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(seconds < 5.0, "analyze-text took " + std::to_string(seconds) + "s, limit 5s");

        const CsvTable table = read_csv_table(out);
        c.expect(table.header == std::vector<std::string>{"id", "text", "tool1", "tool2", "tool3",
                                                          "tool4", "combined"},
                 "results header");
        c.expect(table.rows.size() == 6, "6 input rows must give 6 result rows");

        // round-trip audit against the in-process pipeline
        const ClassifierConfig config = builtin::default_config(Language::en);
        const CsvStatements loaded = read_statements_csv(input);
        const auto expected = combine_session(loaded.statements,
                                              classify_session(loaded.statements, config));
        bool round_trip = expected.size() == table.rows.size();
        for (std::size_t i = 0; round_trip && i < expected.size(); ++i) {
            const auto& row = table.rows[i];
            round_trip = row[0] == std::to_string(expected[i].statement.id) &&
                         row[1] == expected[i].statement.text &&
                         parse_label(row[6]) == expected[i].combined;
            for (std::size_t k = 0; round_trip && k < kQuartetSize; ++k)
                round_trip = parse_label(row[2 + k]) == expected[i].votes.votes[k].label;
        }
        c.expect(round_trip, "results csv must round-trip the in-memory session");

        // >=3 characterization audit over the output file
        for (const auto& row : table.rows) {
            int pos = 0, neg = 0;
            for (std::size_t k = 2; k < 6; ++k) {
                const Polarity p = parse_label(row[k]);
                if (p == kPos) ++pos;
                if (p == kNeg) ++neg;
            }
            const Polarity combined = parse_label(row[6]);
            const Polarity want = pos >= 3 ? kPos : (neg >= 3 ? kNeg : kNeu);
            c.expect(combined == want, "combined column must satisfy the >=3 rule");
        }
    }

    {
        const auto start = std::chrono::steady_clock::now();
        const fs::path wav = dir.path / "meeting.wav";
        write_wav(wav, tone_clip({false, true, false, true, false, true, false}, 0.9));
        const fs::path adapter = dir.path / "echo.sh";
        {
            std::ofstream script(adapter);
            script << "#!/bin/sh\necho \"I am very happy.\"\n";
        }
        fs::permissions(adapter, fs::perms::owner_all);
        const fs::path out = dir.path / "audio.csv";
        const ProcessResult proc = run_process(
            shell_quote(kCli) + " analyze-audio --wav " + shell_quote(wav.string()) +
                " --transcriber " + shell_quote(adapter.string()) + " --out " +
                shell_quote(out.string()) + " --no-color",
            {});
        c.expect(proc.exit_code == 0, "analyze-audio must exit 0: " + proc.err);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(seconds < 5.0, "analyze-audio took " + std::to_string(seconds) + "s, limit 5s");
        const CsvTable table = read_csv_table(out);
        c.expect(table.rows.size() == 3,
                 "3 utterances must give 3 classified statements, got " +
                     std::to_string(table.rows.size()));
    }
}

void criterion_fuzz(Checker& c) {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> label(-1, 1);

    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<Polarity> gold, pred;
        for (std::size_t i = 0; i < n; ++i) {
            gold.push_back(polarity_from_rank(label(rng)));
            pred.push_back(polarity_from_rank(label(rng)));
        }
        const MetricsReport report = compute_report(gold, pred);
        if (report.matches + report.mild + report.severe != report.n) ++violations;
        if (std::abs(report.prf.micro_f1 - report.accuracy) > 1e-12) ++violations;
        if (report.cohen_kappa > 1.0 + 1e-12) ++violations;

        std::array<Polarity, 4> votes;
        for (auto& v : votes) v = polarity_from_rank(label(rng));
        const Polarity base = median_star(votes);
        auto shuffled = votes;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (median_star(shuffled) != base) ++violations;
        const std::size_t slot = rng() % 4;
        if (rank(votes[slot]) < 1) {
            auto raised = votes;
            raised[slot] = polarity_from_rank(rank(votes[slot]) + 1);
            if (rank(median_star(raised)) < rank(base)) ++violations;
        }
    }
    c.expect(violations == 0, std::to_string(violations) + " invariant violations in 10000 trials");
}

}  // namespace

int main() {
    const struct {
        const char* name;
        std::function<void(Checker&)> run;
    } criteria[] = {
        {"criterion 1: combined-label rule matches the exhaustive >=3 oracle",
         criterion_median_star_oracle},
        {"criterion 2: majority baseline splits ties 50/50 and never neutral",
         criterion_majority_contrast},
        {"criterion 3: match/mild/severe share arithmetic", criterion_split_shares},
        {"criterion 4: reference confusion fixture P/R/F1 block", criterion_prf_block},
        {"criterion 5: three-rater venn partition and pairwise matches",
         criterion_venn_consistency},
        {"criterion 6: cohen and fleiss kappa correctness", criterion_kappa},
        {"criterion 7: reference sentences classify correctly", criterion_reference_sentences},
        {"criterion 8: voice-activity segmentation properties", criterion_vad},
        {"criterion 9: end-to-end cli on text and audio", criterion_cli_end_to_end},
        {"criterion 10: invariant fuzz suite", criterion_fuzz},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        std::string error;
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && checker.failures.str().empty();
        if (ok) {
            std::cout << "PASS " << criterion.name << " (" << checker.checks << " checks)\n";
        } else {
            ++failed;
            std::cout << "FAIL " << criterion.name;
            if (!error.empty()) std::cout << "\n    exception: " << error;
            std::cout << checker.failures.str() << '\n';
        }
    }
    if (failed > 0) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
