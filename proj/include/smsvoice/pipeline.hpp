#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smsvoice/audio.hpp"
#include "smsvoice/reassembly.hpp"
#include "smsvoice/segmentation.hpp"

namespace smsvoice {

// Sender half: codec, shift to SMS-safe text, segment.
std::vector<Segment> encode_clip(const AudioClip& clip, const Codec& codec, const SegmentationConfig& cfg);

std::vector<CodePoints> render_segments(std::span<const Segment> segments);

// Parses every line; errors name the 1-based line number.
std::vector<Segment> parse_segments(std::span<const CodePoints> lines);

struct DecodedClip {
    AudioClip clip;
    ReassemblyReport report;
    // Loose 16-bit PCM only: a gap left an odd byte count and the final
    // byte was discarded.
    bool trailing_byte_dropped = false;
};

// Receiver half: reassemble, shift back to bytes, codec decode.
DecodedClip decode_segments(std::span<const Segment> segments, const Codec& codec, ReassemblyPolicy policy,
                            std::uint32_t sample_rate_hz, int bit_depth = 16);

} // namespace smsvoice
