#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smsvoice/audio.hpp"
#include "smsvoice/segmentation.hpp"

namespace smsvoice {

// Character, message and connected-message accounting for one codec.
struct TransmissionReport {
    Codec codec;
    std::size_t char_count = 0;
    std::size_t message_count = 0;
    std::size_t connected_count = 0;
    SegmentationConfig config;

    bool operator==(const TransmissionReport& o) const {
        return codec == o.codec && char_count == o.char_count && message_count == o.message_count &&
               connected_count == o.connected_count && config.capacity == o.config.capacity &&
               config.cost_model == o.config.cost_model && config.group_size == o.config.group_size;
    }
};

// Encodes and segments without transmitting. SegmentOverflowError
// propagates and carries the character count.
TransmissionReport analyze(const AudioClip& clip, const Codec& codec, const SegmentationConfig& cfg);

struct ComparisonTable {
    std::vector<TransmissionReport> rows;
    std::optional<std::size_t> words; // caller-supplied, echoed only

    std::string to_text() const;
    // Header: codec,chars,messages,connected,capacity,cost_model,group_size
    std::string to_csv() const;
};

ComparisonTable compare(const AudioClip& clip, std::span<const Codec> codecs, const SegmentationConfig& cfg,
                        std::optional<std::size_t> words = std::nullopt);

} // namespace smsvoice
