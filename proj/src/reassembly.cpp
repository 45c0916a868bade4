#include "smsvoice/reassembly.hpp"

#include <array>
#include <optional>

#include "smsvoice/error.hpp"

namespace smsvoice {

std::string_view to_string(ReassemblyPolicy policy) {
    return policy == ReassemblyPolicy::Strict ? "strict" : "loose";
}

ReassemblyPolicy parse_policy(std::string_view name) {
    if (name == "strict") return ReassemblyPolicy::Strict;
    if (name == "loose") return ReassemblyPolicy::Loose;
    throw Error(ErrorKind::InvalidArgument, "unknown policy '" + std::string(name) + "'");
}

Segment parse_segment(std::u32string_view text) {
    if (text.size() < kIndexDigits) {
        throw Error(ErrorKind::TooShort, std::to_string(text.size()) + " characters, need at least 3");
    }
    int index = 0;
    for (int i = 0; i < kIndexDigits; ++i) {
        const char32_t c = text[i];
        if (c < U'0' || c > U'9') {
            throw Error(ErrorKind::BadIndex, "character " + std::to_string(i) + " of the index is not a digit");
        }
        index = index * 10 + static_cast<int>(c - U'0');
    }
    auto payload = text.substr(kIndexDigits);
    if (auto bad = find_illegal_code_point(payload); bad != std::u32string_view::npos) {
        throw Error(ErrorKind::IllegalPayloadPoint, "code point " +
                                                        std::to_string(static_cast<std::uint32_t>(payload[bad])) +
                                                        " at payload position " + std::to_string(bad));
    }
    return {index, CodePoints(payload)};
}

Reassembled reassemble(std::span<const Segment> segments, ReassemblyPolicy policy) {
    std::array<const Segment*, kMaxSegments> slots{};
    Reassembled result;

    for (const Segment& seg : segments) {
        if (seg.index < 0 || seg.index >= kMaxSegments) {
            throw Error(ErrorKind::BadIndex, "index " + std::to_string(seg.index) + " outside 000-999");
        }
        const Segment*& slot = slots[static_cast<std::size_t>(seg.index)];
        if (slot == nullptr) {
            slot = &seg;
        } else if (slot->payload == seg.payload) {
            ++result.report.duplicate_count;
        } else {
            throw Error(ErrorKind::DuplicateMismatch,
                        "two segments with index " + std::to_string(seg.index) + " carry different payloads");
        }
    }

    std::optional<int> highest;
    for (int i = kMaxSegments - 1; i >= 0 && !highest; --i) {
        if (slots[static_cast<std::size_t>(i)]) highest = i;
    }
    if (!highest) return result;

    for (int i = 0; i <= *highest; ++i) {
        if (const Segment* seg = slots[static_cast<std::size_t>(i)]) {
            result.report.received_indices.push_back(i);
            result.stream += seg->payload;
        } else {
            result.report.missing_indices.push_back(i);
        }
    }
    if (policy == ReassemblyPolicy::Strict && !result.report.missing_indices.empty()) {
        throw MissingSegmentsError(result.report.missing_indices);
    }
    return result;
}

} // namespace smsvoice
