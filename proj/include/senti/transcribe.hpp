#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>

#include <unistd.h>

#include "senti/subprocess.hpp"
#include "senti/vad.hpp"
#include "senti/wav.hpp"

namespace senti {

class TranscribeError : public Error {
public:
    using Error::Error;
};

namespace detail {

// Unique temp path; the caller removes it.
inline std::filesystem::path temp_wav_path() {
    static std::atomic<std::uint64_t> counter{0};
    static const std::uint64_t salt = std::random_device{}();
    const std::uint64_t n = counter.fetch_add(1);
    return std::filesystem::temp_directory_path() /
           ("senti-" + std::to_string(::getpid()) + "-" + std::to_string(salt) + "-" +
            std::to_string(n) + ".wav");
}

struct TempWav {
    std::filesystem::path path;
    explicit TempWav(const AudioClip& clip) : path(temp_wav_path()) { write_wav(path, clip); }
    ~TempWav() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    TempWav(const TempWav&) = delete;
    TempWav& operator=(const TempWav&) = delete;
};

}  // namespace detail

// Writes the segment to a temporary 16 kHz mono WAV and invokes
// `adapter <path>`; the adapter's stdout (trailing whitespace trimmed) is the
// transcription. An empty transcription means "nothing recognized" and the
// caller drops the segment. Failures throw so the caller can skip this
// segment without losing the rest of the session.
inline std::string transcribe(const AudioClip& clip, const UtteranceSegment& segment,
                              const std::string& adapter) {
    const AudioClip piece = extract_segment(clip, segment);
    const detail::TempWav tmp(piece);
    ProcessResult proc;
    try {
        proc = run_process(adapter + " " + shell_quote(tmp.path.string()), {});
    } catch (const ProcessError& e) {
        throw TranscribeError("transcriber \"" + adapter + "\": " + e.what());
    }
    if (proc.exit_code != 0) {
        const std::string_view err = detail::trim(proc.err);
        throw TranscribeError("transcriber \"" + adapter + "\" exited with code " +
                              std::to_string(proc.exit_code) +
                              (err.empty() ? std::string() : ": " + std::string(err)));
    }
    return std::string(detail::trim(proc.out));
}

}  // namespace senti
