#include "smsvoice/audio.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>

#include "smsvoice/error.hpp"

namespace smsvoice {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t load_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t load_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

void store_u16(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void store_u32(Bytes& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void store_tag(Bytes& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
    return std::memcmp(b.data() + at, tag, 4) == 0;
}

void require_16bit(const AudioClip& clip, const Codec& codec) {
    if (clip.bit_depth() != 16) {
        throw Error(ErrorKind::UnsupportedCombination,
                    codec.name() + " requires a 16-bit clip, got " + std::to_string(clip.bit_depth()) + "-bit");
    }
}

// 16-bit sample to 14-bit mu-law input, arithmetic shift.
std::uint8_t ulaw_from_16(std::int16_t s) { return ulaw_encode_sample(s >> 2); }

std::int16_t ulaw_to_16(std::uint8_t octet) {
    return static_cast<std::int16_t>(ulaw_decode_sample(octet) * 4);
}

} // namespace

AudioClip::AudioClip(std::uint32_t sample_rate_hz, int bit_depth, std::vector<std::int16_t> samples)
    : sample_rate_hz_(sample_rate_hz), bit_depth_(bit_depth), samples_(std::move(samples)) {
    if (sample_rate_hz_ == 0) throw Error(ErrorKind::InvalidArgument, "sample rate must be positive");
    if (bit_depth_ != 8 && bit_depth_ != 16) {
        throw Error(ErrorKind::InvalidArgument, "bit depth must be 8 or 16, got " + std::to_string(bit_depth_));
    }
    if (bit_depth_ == 8) {
        auto bad = std::find_if(samples_.begin(), samples_.end(), [](std::int16_t s) { return s < -128 || s > 127; });
        if (bad != samples_.end()) {
            throw Error(ErrorKind::InvalidArgument, "sample " + std::to_string(*bad) + " out of 8-bit range");
        }
    }
}

Codec Codec::toy(int decimation) {
    if (decimation < 1) {
        throw Error(ErrorKind::InvalidArgument, "decimation factor must be >= 1, got " + std::to_string(decimation));
    }
    return {Kind::ToyCompressed, decimation};
}

Codec Codec::parse(std::string_view name, int default_decimation) {
    if (name == "pcm") return pcm();
    if (name == "ulaw") return ulaw();
    if (name == "toy") return toy(default_decimation);
    if (name.starts_with("toy:")) {
        auto digits = name.substr(4);
        int d = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return toy(d);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown codec '" + std::string(name) + "'");
}

std::string Codec::name() const {
    switch (kind) {
    case Kind::Pcm: return "pcm";
    case Kind::Ulaw: return "ulaw";
    case Kind::ToyCompressed: return "toy:" + std::to_string(decimation);
    }
    return "?";
}

AudioClip read_wav(std::span<const std::uint8_t> b) {
    if (b.size() < 12) throw Error(ErrorKind::MalformedContainer, "shorter than a RIFF header");
    if (!tag_is(b, 0, "RIFF") || !tag_is(b, 8, "WAVE")) {
        throw Error(ErrorKind::MalformedContainer, "missing RIFF/WAVE magic");
    }
    const std::uint64_t riff_end = std::uint64_t{load_u32(b, 4)} + 8;
    if (riff_end > b.size()) throw Error(ErrorKind::MalformedContainer, "RIFF size exceeds file length");
    if (riff_end < 12) throw Error(ErrorKind::MalformedContainer, "RIFF size too small");

    bool have_fmt = false;
    std::uint16_t channels = 0, bits = 0, block_align = 0;
    std::uint32_t rate = 0;
    std::span<const std::uint8_t> data;
    bool have_data = false;

    std::size_t at = 12;
    while (at + 8 <= riff_end) {
        const std::uint32_t size = load_u32(b, at + 4);
        const std::size_t body = at + 8;
        if (std::uint64_t{body} + size > riff_end) {
            throw Error(ErrorKind::MalformedContainer, "chunk overruns RIFF body");
        }
        if (tag_is(b, at, "fmt ")) {
            if (size < 16) throw Error(ErrorKind::MalformedContainer, "fmt chunk shorter than 16 bytes");
            std::uint16_t tag = load_u16(b, body);
            channels = load_u16(b, body + 2);
            rate = load_u32(b, body + 4);
            block_align = load_u16(b, body + 12);
            bits = load_u16(b, body + 14);
            if (tag == kFormatExtensible) {
                if (size < 40) throw Error(ErrorKind::MalformedContainer, "extensible fmt chunk too short");
                tag = load_u16(b, body + 24);
            }
            if (tag == kFormatFloat) throw Error(ErrorKind::UnsupportedFormat, "floating-point samples");
            if (tag != kFormatPcm) {
                throw Error(ErrorKind::UnsupportedFormat, "format tag " + std::to_string(tag) + " is not linear PCM");
            }
            have_fmt = true;
        } else if (tag_is(b, at, "data")) {
            data = b.subspan(body, size);
            have_data = true;
        }
        at = body + size + (size & 1u);
    }

    if (!have_fmt) throw Error(ErrorKind::MalformedContainer, "no fmt chunk");
    if (!have_data) throw Error(ErrorKind::MalformedContainer, "no data chunk");
    if (channels != 1) {
        throw Error(ErrorKind::UnsupportedFormat, std::to_string(channels) + " channels, only mono is supported");
    }
    if (bits != 8 && bits != 16) {
        throw Error(ErrorKind::UnsupportedFormat, std::to_string(bits) + "-bit samples");
    }
    if (rate == 0) throw Error(ErrorKind::MalformedContainer, "sample rate is zero");
    const std::size_t width = bits / 8;
    if (block_align != width) throw Error(ErrorKind::MalformedContainer, "block align inconsistent with bit depth");
    if (data.size() % width != 0) {
        throw Error(ErrorKind::MalformedContainer, "data chunk is not a whole number of samples");
    }

    std::vector<std::int16_t> samples(data.size() / width);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = width == 2 ? static_cast<std::int16_t>(load_u16(data, 2 * i))
                                : static_cast<std::int16_t>(data[i] - 128);
    }
    return AudioClip(rate, bits, std::move(samples));
}

Bytes wav_data_chunk(const AudioClip& clip) {
    Bytes out;
    if (clip.bit_depth() == 16) {
        out.reserve(clip.size() * 2);
        for (std::int16_t s : clip.samples()) store_u16(out, static_cast<std::uint16_t>(s));
    } else {
        out.reserve(clip.size());
        for (std::int16_t s : clip.samples()) out.push_back(static_cast<std::uint8_t>(s + 128));
    }
    return out;
}

Bytes write_wav(const AudioClip& clip) {
    const Bytes data = wav_data_chunk(clip);
    const std::uint16_t width = static_cast<std::uint16_t>(clip.bit_depth() / 8);

    Bytes out;
    out.reserve(44 + data.size() + 1);
    store_tag(out, "RIFF");
    store_u32(out, static_cast<std::uint32_t>(36 + data.size() + (data.size() & 1u)));
    store_tag(out, "WAVE");
    store_tag(out, "fmt ");
    store_u32(out, 16);
    store_u16(out, kFormatPcm);
    store_u16(out, 1);
    store_u32(out, clip.sample_rate_hz());
    store_u32(out, clip.sample_rate_hz() * width);
    store_u16(out, width);
    store_u16(out, static_cast<std::uint16_t>(clip.bit_depth()));
    store_tag(out, "data");
    store_u32(out, static_cast<std::uint32_t>(data.size()));
    out.insert(out.end(), data.begin(), data.end());
    if (data.size() & 1u) out.push_back(0);
    return out;
}

// Segment ends are the largest biased magnitudes (|x| + 33) of each of the
// eight chords.
std::uint8_t ulaw_encode_sample(int linear14) {
    constexpr int kBias = 33;
    constexpr int kClip = 8159;
    constexpr int kSegEnd[8] = {0x3F, 0x7F, 0xFF, 0x1FF, 0x3FF, 0x7FF, 0xFFF, 0x1FFF};

    int mask = 0xFF;
    int magnitude = std::clamp(linear14, -8192, 8191);
    if (magnitude < 0) {
        magnitude = -magnitude;
        mask = 0x7F;
    }
    magnitude = std::min(magnitude, kClip) + kBias;

    int seg = 0;
    while (seg < 8 && magnitude > kSegEnd[seg]) ++seg;
    if (seg >= 8) return static_cast<std::uint8_t>(0x7F ^ mask);
    const int code = (seg << 4) | ((magnitude >> (seg + 1)) & 0x0F);
    return static_cast<std::uint8_t>(code ^ mask);
}

int ulaw_decode_sample(std::uint8_t octet) {
    const int u = ~octet & 0xFF;
    const int seg = (u >> 4) & 0x07;
    const int mantissa = u & 0x0F;
    const int t = ((mantissa << 1) + 33) << seg;
    return (u & 0x80) ? 33 - t : t - 33;
}

Bytes codec_encode(const AudioClip& clip, const Codec& codec) {
    switch (codec.kind) {
    case Codec::Kind::Pcm:
        return wav_data_chunk(clip);
    case Codec::Kind::Ulaw: {
        require_16bit(clip, codec);
        Bytes out;
        out.reserve(clip.size());
        for (std::int16_t s : clip.samples()) out.push_back(ulaw_from_16(s));
        return out;
    }
    case Codec::Kind::ToyCompressed: {
        require_16bit(clip, codec);
        if (codec.decimation < 1) throw Error(ErrorKind::InvalidArgument, "decimation factor must be >= 1");
        const auto d = static_cast<std::size_t>(codec.decimation);
        Bytes out;
        out.reserve((clip.size() + d - 1) / d);
        auto samples = clip.samples();
        for (std::size_t i = 0; i < samples.size(); i += d) out.push_back(ulaw_from_16(samples[i]));
        return out;
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown codec");
}

AudioClip codec_decode(std::span<const std::uint8_t> stream, const Codec& codec, std::uint32_t sample_rate_hz,
                       int bit_depth) {
    std::vector<std::int16_t> samples;
    switch (codec.kind) {
    case Codec::Kind::Pcm:
        if (bit_depth == 16) {
            if (stream.size() % 2 != 0) {
                throw Error(ErrorKind::LengthMismatch,
                            "odd byte count " + std::to_string(stream.size()) + " for 16-bit PCM");
            }
            samples.resize(stream.size() / 2);
            for (std::size_t i = 0; i < samples.size(); ++i) {
                samples[i] = static_cast<std::int16_t>(load_u16(stream, 2 * i));
            }
        } else if (bit_depth == 8) {
            samples.reserve(stream.size());
            for (std::uint8_t b : stream) samples.push_back(static_cast<std::int16_t>(b - 128));
        } else {
            throw Error(ErrorKind::InvalidArgument, "bit depth must be 8 or 16");
        }
        return AudioClip(sample_rate_hz, bit_depth, std::move(samples));
    case Codec::Kind::Ulaw:
        samples.reserve(stream.size());
        for (std::uint8_t b : stream) samples.push_back(ulaw_to_16(b));
        return AudioClip(sample_rate_hz, 16, std::move(samples));
    case Codec::Kind::ToyCompressed: {
        if (codec.decimation < 1) throw Error(ErrorKind::InvalidArgument, "decimation factor must be >= 1");
        const auto d = static_cast<std::size_t>(codec.decimation);
        samples.reserve(stream.size() * d);
        for (std::uint8_t b : stream) samples.insert(samples.end(), d, ulaw_to_16(b));
        return AudioClip(sample_rate_hz, 16, std::move(samples));
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown codec");
}

} // namespace smsvoice
