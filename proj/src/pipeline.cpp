#include "smsvoice/pipeline.hpp"

#include "smsvoice/error.hpp"
#include "smsvoice/payload_codec.hpp"

namespace smsvoice {

std::vector<Segment> encode_clip(const AudioClip& clip, const Codec& codec, const SegmentationConfig& cfg) {
    return segment(bytes_to_codepoints(codec_encode(clip, codec)), cfg);
}

std::vector<CodePoints> render_segments(std::span<const Segment> segments) {
    std::vector<CodePoints> lines;
    lines.reserve(segments.size());
    for (const auto& s : segments) lines.push_back(render_segment(s));
    return lines;
}

std::vector<Segment> parse_segments(std::span<const CodePoints> lines) {
    std::vector<Segment> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            out.push_back(parse_segment(lines[i]));
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(i + 1) + ": " + e.detail());
        }
    }
    return out;
}

DecodedClip decode_segments(std::span<const Segment> segments, const Codec& codec, ReassemblyPolicy policy,
                            std::uint32_t sample_rate_hz, int bit_depth) {
    Reassembled r = reassemble(segments, policy);
    Bytes bytes = codepoints_to_bytes(r.stream);
    bool dropped = false;
    if (policy == ReassemblyPolicy::Loose && codec.kind == Codec::Kind::Pcm && bit_depth == 16 &&
        bytes.size() % 2 != 0) {
        bytes.pop_back();
        dropped = true;
    }
    return {codec_decode(bytes, codec, sample_rate_hz, bit_depth), std::move(r.report), dropped};
}

} // namespace smsvoice
