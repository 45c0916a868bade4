#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smsvoice {

/// SplitMix64 (Steele, Lea and Flood 2014).
///
///   state  <- state + 0x9E3779B97F4A7C15
///   z      <- state
///   z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output <- z ^ (z >> 31)
///
/// All arithmetic is modulo 2^64. The state starts at the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Top 53 bits scaled into [0, 1).
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // next() mod bound; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

struct ChannelConfig {
    double loss_probability = 0.0;
    double duplication_probability = 0.0;
    std::uint64_t max_extra_delay = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class Outcome { Delivered, Dropped, Duplicated };

std::string_view to_string(Outcome outcome);

struct ChannelEvent {
    std::size_t input_position = 0;
    Outcome outcome = Outcome::Delivered;
    std::vector<std::uint64_t> ticks; // empty when dropped, two entries when duplicated

    bool operator==(const ChannelEvent&) const = default;
};

struct ChannelLog {
    std::vector<ChannelEvent> events;

    std::size_t count(Outcome outcome) const;
    std::size_t delivery_count() const;

    // One line per event: position TAB outcome TAB comma-separated ticks
    // ("-" when dropped).
    std::string dump() const;

    bool operator==(const ChannelLog&) const = default;
};

/// Decides the fate of `message_count` messages. For message i, in input
/// order, exactly four values are drawn from SplitMix64(seed):
///   u_loss = next_unit(), u_dup = next_unit(),
///   d1 = next_below(max_extra_delay + 1), d2 = next_below(max_extra_delay + 1).
/// The message is dropped when u_loss < loss_probability, otherwise
/// duplicated when u_dup < duplication_probability. Its first copy is
/// delivered at tick i + d1 and a duplicate copy at tick i + d2.
ChannelLog plan_channel(std::size_t message_count, const ChannelConfig& cfg);

// Input positions in delivery order: sorted by tick, then input position,
// then copy number.
std::vector<std::size_t> delivery_order(const ChannelLog& log);

template <typename Message>
struct ChannelResult {
    std::vector<Message> delivered;
    ChannelLog log;
};

template <typename Message>
ChannelResult<Message> transmit(std::span<const Message> messages, const ChannelConfig& cfg) {
    ChannelResult<Message> result;
    result.log = plan_channel(messages.size(), cfg);
    for (std::size_t pos : delivery_order(result.log)) result.delivered.push_back(messages[pos]);
    return result;
}

} // namespace smsvoice
