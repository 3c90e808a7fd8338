#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "senti/core.hpp"

namespace senti {

class WavFormatError : public Error {
public:
    using Error::Error;
};

inline constexpr std::uint32_t kRequiredSampleRate = 16000;
inline constexpr std::uint16_t kRequiredChannels = 1;

// 16 kHz mono PCM16 audio, the only format the pipeline accepts.
struct AudioClip {
    std::vector<std::int16_t> samples;
    std::uint32_t sample_rate = kRequiredSampleRate;
    std::uint16_t channels = kRequiredChannels;

    double duration_seconds() const {
        return static_cast<double>(samples.size()) / static_cast<double>(sample_rate);
    }
};

namespace detail {

inline std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

inline void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace detail

// Parses a RIFF/WAVE file and enforces PCM16, mono, 16 kHz; any other
// encoding is rejected naming the offending field. Unknown chunks are
// skipped.
inline AudioClip read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WavFormatError("cannot open " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    const std::string name = path.filename().string();
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw WavFormatError(name + ": not a RIFF/WAVE file");

    AudioClip clip;
    bool have_fmt = false, have_data = false;
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::string chunk_id(reinterpret_cast<const char*>(bytes.data() + pos), 4);
        const std::uint32_t chunk_size = detail::read_u32(bytes.data() + pos + 4);
        pos += 8;
        if (pos + chunk_size > bytes.size())
            throw WavFormatError(name + ": truncated chunk " + chunk_id);
        if (chunk_id == "fmt ") {
            if (chunk_size < 16) throw WavFormatError(name + ": fmt chunk too short");
            const std::uint16_t audio_format = detail::read_u16(bytes.data() + pos);
            const std::uint16_t channels = detail::read_u16(bytes.data() + pos + 2);
            const std::uint32_t sample_rate = detail::read_u32(bytes.data() + pos + 4);
            const std::uint16_t bits = detail::read_u16(bytes.data() + pos + 14);
            if (audio_format != 1)
                throw WavFormatError(name + ": audio format " + std::to_string(audio_format) +
                                     " is not PCM");
            if (bits != 16)
                throw WavFormatError(name + ": bits per sample is " + std::to_string(bits) +
                                     ", expected 16");
            if (channels != kRequiredChannels)
                throw WavFormatError(name + ": channels is " + std::to_string(channels) +
                                     ", expected mono");
            if (sample_rate != kRequiredSampleRate)
                throw WavFormatError(name + ": sample rate is " + std::to_string(sample_rate) +
                                     " Hz, expected 16000 Hz");
            clip.sample_rate = sample_rate;
            clip.channels = channels;
            have_fmt = true;
        } else if (chunk_id == "data") {
            if (!have_fmt) throw WavFormatError(name + ": data chunk before fmt chunk");
            const std::size_t count = chunk_size / 2;
            clip.samples.resize(count);
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint16_t raw = detail::read_u16(bytes.data() + pos + 2 * i);
                clip.samples[i] = static_cast<std::int16_t>(raw);
            }
            have_data = true;
        }
        pos += chunk_size + (chunk_size % 2);  // chunks are word-aligned
    }
    if (!have_fmt) throw WavFormatError(name + ": missing fmt chunk");
    if (!have_data) throw WavFormatError(name + ": missing data chunk");
    return clip;
}

inline std::string wav_bytes(const AudioClip& clip) {
    const std::uint32_t data_size = static_cast<std::uint32_t>(clip.samples.size() * 2);
    const std::uint32_t byte_rate = clip.sample_rate * clip.channels * 2;
    std::string out;
    out.reserve(44 + data_size);
    out += "RIFF";
    detail::put_u32(out, 36 + data_size);
    out += "WAVEfmt ";
    detail::put_u32(out, 16);
    detail::put_u16(out, 1);  // PCM
    detail::put_u16(out, clip.channels);
    detail::put_u32(out, clip.sample_rate);
    detail::put_u32(out, byte_rate);
    detail::put_u16(out, static_cast<std::uint16_t>(clip.channels * 2));
    detail::put_u16(out, 16);
    out += "data";
    detail::put_u32(out, data_size);
    for (std::int16_t s : clip.samples)
        detail::put_u16(out, static_cast<std::uint16_t>(s));
    return out;
}

inline void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw WavFormatError("cannot write " + path.string());
    const std::string bytes = wav_bytes(clip);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw WavFormatError("short write to " + path.string());
}

}  // namespace senti
