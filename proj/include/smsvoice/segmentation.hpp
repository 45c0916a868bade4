#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smsvoice/payload_codec.hpp"

namespace smsvoice {

inline constexpr int kIndexDigits = 3;
inline constexpr int kMaxSegments = 1000;
inline constexpr std::size_t kDefaultCapacity = 157; // 160 characters minus the index
inline constexpr std::size_t kDefaultGroupSize = 3;

// Uniform: every point costs one unit. Wide: points >= 256 cost two.
enum class CostModel { Uniform, Wide };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view name);

struct SegmentationConfig {
    std::size_t capacity = kDefaultCapacity;
    CostModel cost_model = CostModel::Uniform;
    std::size_t group_size = kDefaultGroupSize;

    void validate() const;
};

struct Segment {
    int index = 0;
    CodePoints payload;

    bool operator==(const Segment&) const = default;
};

constexpr std::size_t point_cost(char32_t p, CostModel model) noexcept {
    return model == CostModel::Wide && p >= kShift ? 2 : 1;
}

std::size_t payload_cost(std::u32string_view payload, CostModel model) noexcept;

// Greedy left-to-right packing into indexed parts 0, 1, 2, ... Each part takes
// the longest prefix of the remainder whose cost fits the capacity.
// Throws SegmentOverflowError past 1000 parts and CapacityTooSmall when a
// single point costs more than the capacity.
std::vector<Segment> segment(std::u32string_view stream, const SegmentationConfig& cfg);

// Number of parts segment() would produce, without the 1000-part limit.
std::size_t count_segments(std::u32string_view stream, const SegmentationConfig& cfg);

// Three zero-padded decimal digits followed by the payload.
CodePoints render_segment(const Segment& seg);

std::size_t connected_group_count(std::size_t message_count, std::size_t group_size);

} // namespace smsvoice
