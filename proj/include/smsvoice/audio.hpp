#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smsvoice {

using Bytes = std::vector<std::uint8_t>;

// Mono linear audio. Samples are stored signed regardless of bit depth;
// 8-bit clips hold values in [-128, 127].
class AudioClip {
public:
    AudioClip(std::uint32_t sample_rate_hz, int bit_depth, std::vector<std::int16_t> samples);

    std::uint32_t sample_rate_hz() const noexcept { return sample_rate_hz_; }
    int bit_depth() const noexcept { return bit_depth_; }
    int channels() const noexcept { return 1; }
    std::span<const std::int16_t> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    bool operator==(const AudioClip&) const = default;

private:
    std::uint32_t sample_rate_hz_;
    int bit_depth_;
    std::vector<std::int16_t> samples_;
};

/// Audio byte-stream codec selection. `decimation` is only meaningful for
/// ToyCompressed, the decimate-then-mu-law stand-in for a compressing
/// speech codec; it keeps every D-th sample.
struct Codec {
    enum class Kind { Pcm, Ulaw, ToyCompressed };

    Kind kind = Kind::Pcm;
    int decimation = 1;

    static Codec pcm() { return {Kind::Pcm, 1}; }
    static Codec ulaw() { return {Kind::Ulaw, 1}; }
    static Codec toy(int decimation = 4);

    // "pcm", "ulaw", "toy" (optionally "toy:D").
    static Codec parse(std::string_view name, int default_decimation = 4);

    std::string name() const;

    bool operator==(const Codec&) const = default;
};

inline constexpr int kDefaultDecimation = 4;

// RIFF/WAVE, integer PCM, mono, 8 or 16 bit. Unknown chunks are skipped.
AudioClip read_wav(std::span<const std::uint8_t> container);

// Minimal canonical 44-byte header followed by the data chunk.
Bytes write_wav(const AudioClip& clip);

// Raw bytes of the data chunk as write_wav would emit them.
Bytes wav_data_chunk(const AudioClip& clip);

// G.711 mu-law on 14-bit linear input in [-8192, 8191].
std::uint8_t ulaw_encode_sample(int linear14);
int ulaw_decode_sample(std::uint8_t octet);

// PCM: little-endian sample bytes exactly as in a WAV data chunk (8-bit is
// offset binary). Ulaw: one octet per sample of a 16-bit clip.
// ToyCompressed: every D-th sample of a 16-bit clip, mu-law coded.
Bytes codec_encode(const AudioClip& clip, const Codec& codec);

// bit_depth only affects PCM; the mu-law paths always produce 16-bit clips.
// ToyCompressed repeats each decoded sample D times.
AudioClip codec_decode(std::span<const std::uint8_t> stream, const Codec& codec,
                       std::uint32_t sample_rate_hz, int bit_depth = 16);

} // namespace smsvoice
