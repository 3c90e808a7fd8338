#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "senti/core.hpp"
#include "senti/wav.hpp"

namespace senti {

// Energy-threshold voice activity detection. Frames of frame_ms are marked
// speech when their RMS amplitude (samples scaled to [-1,1]) exceeds
// energy_threshold. A segment opens after min_speech_frames consecutive
// speech frames and closes once hangover_frames consecutive silent frames
// follow; bounds snap to frame boundaries and exclude the trailing silence.
struct VadConfig {
    int frame_ms = 30;              // one of 10, 20, 30
    double energy_threshold = 0.02; // RMS in normalized units
    int hangover_frames = 10;
    int min_speech_frames = 5;

    void validate() const {
        if (frame_ms != 10 && frame_ms != 20 && frame_ms != 30)
            throw Error("VAD frame_ms must be 10, 20 or 30");
        if (!(energy_threshold > 0.0)) throw Error("VAD energy_threshold must be positive");
        if (hangover_frames <= 0) throw Error("VAD hangover_frames must be positive");
        if (min_speech_frames <= 0) throw Error("VAD min_speech_frames must be positive");
    }

    std::size_t frame_samples(std::uint32_t sample_rate) const {
        return static_cast<std::size_t>(sample_rate) * static_cast<std::size_t>(frame_ms) / 1000;
    }
};

// One detected utterance, in samples and in seconds.
struct UtteranceSegment {
    std::size_t start_sample = 0;
    std::size_t end_sample = 0;  // exclusive
    double start_time = 0.0;
    double end_time = 0.0;
};

inline double frame_rms(const std::vector<std::int16_t>& samples, std::size_t begin,
                        std::size_t count) {
    double acc = 0.0;
    for (std::size_t i = begin; i < begin + count; ++i) {
        const double x = static_cast<double>(samples[i]) / 32768.0;
        acc += x * x;
    }
    return count == 0 ? 0.0 : std::sqrt(acc / static_cast<double>(count));
}

inline std::vector<UtteranceSegment> segment_audio(const AudioClip& clip, const VadConfig& cfg) {
    cfg.validate();
    if (clip.sample_rate != kRequiredSampleRate)
        throw WavFormatError("clip sample rate is " + std::to_string(clip.sample_rate) +
                             " Hz, expected 16000 Hz");
    if (clip.channels != kRequiredChannels)
        throw WavFormatError("clip has " + std::to_string(clip.channels) +
                             " channels, expected mono");

    const std::size_t frame_len = cfg.frame_samples(clip.sample_rate);
    const std::size_t frame_count = clip.samples.size() / frame_len;  // trailing partial frame ignored
    std::vector<bool> speech(frame_count);
    for (std::size_t f = 0; f < frame_count; ++f)
        speech[f] = frame_rms(clip.samples, f * frame_len, frame_len) > cfg.energy_threshold;

    std::vector<UtteranceSegment> segments;
    const double rate = static_cast<double>(clip.sample_rate);
    bool in_segment = false;
    std::size_t run_start = 0;     // first frame of the current speech run
    int speech_run = 0;            // consecutive speech frames while idle
    int silence_run = 0;           // consecutive silent frames while in a segment
    std::size_t last_speech = 0;   // last speech frame of the open segment
    std::size_t segment_start = 0;

    auto emit = [&](std::size_t first_frame, std::size_t last_frame) {
        UtteranceSegment seg;
        seg.start_sample = first_frame * frame_len;
        seg.end_sample = (last_frame + 1) * frame_len;
        seg.start_time = static_cast<double>(seg.start_sample) / rate;
        seg.end_time = static_cast<double>(seg.end_sample) / rate;
        if (last_frame + 1 - first_frame >= static_cast<std::size_t>(cfg.min_speech_frames))
            segments.push_back(seg);
    };

    for (std::size_t f = 0; f < frame_count; ++f) {
        if (!in_segment) {
            if (speech[f]) {
                if (speech_run == 0) run_start = f;
                if (++speech_run >= cfg.min_speech_frames) {
                    in_segment = true;
                    segment_start = run_start;
                    last_speech = f;
                    silence_run = 0;
                }
            } else {
                speech_run = 0;
            }
        } else {
            if (speech[f]) {
                last_speech = f;
                silence_run = 0;
            } else if (++silence_run >= cfg.hangover_frames) {
                emit(segment_start, last_speech);
                in_segment = false;
                speech_run = 0;
                silence_run = 0;
            }
        }
    }
    if (in_segment) emit(segment_start, last_speech);
    return segments;
}

// Copies one segment into a standalone clip (for transcription).
inline AudioClip extract_segment(const AudioClip& clip, const UtteranceSegment& segment) {
    if (segment.start_sample >= segment.end_sample || segment.end_sample > clip.samples.size())
        throw Error("segment bounds out of range");
    AudioClip out;
    out.sample_rate = clip.sample_rate;
    out.channels = clip.channels;
    out.samples.assign(clip.samples.begin() + static_cast<std::ptrdiff_t>(segment.start_sample),
                       clip.samples.begin() + static_cast<std::ptrdiff_t>(segment.end_sample));
    return out;
}

}  // namespace senti
