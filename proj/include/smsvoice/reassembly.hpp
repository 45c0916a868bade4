#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "smsvoice/segmentation.hpp"

namespace smsvoice {

// Strict requires every index 0..max to be present. Loose plays whatever
// arrived, in index order.
enum class ReassemblyPolicy { Strict, Loose };

std::string_view to_string(ReassemblyPolicy policy);
ReassemblyPolicy parse_policy(std::string_view name);

struct ReassemblyReport {
    std::vector<int> received_indices;
    std::size_t duplicate_count = 0;
    std::vector<int> missing_indices; // gaps below the highest received index
    // The wire format has no total count, so a lost tail is never detectable.
    bool tail_unknown = true;
};

struct Reassembled {
    CodePoints stream;
    ReassemblyReport report;
};

// Errors: TooShort, BadIndex, IllegalPayloadPoint.
Segment parse_segment(std::u32string_view sms_text);

// Duplicates keep the first arrival; a duplicate with a different payload
// raises DuplicateMismatch under either policy. Strict raises
// MissingSegmentsError on gaps.
Reassembled reassemble(std::span<const Segment> segments, ReassemblyPolicy policy);

} // namespace smsvoice
