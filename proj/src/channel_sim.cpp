#include "smsvoice/channel_sim.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "smsvoice/error.hpp"

namespace smsvoice {

void ChannelConfig::validate() const {
    auto is_probability = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
    if (!is_probability(loss_probability)) throw Error(ErrorKind::InvalidArgument, "loss probability outside [0, 1]");
    if (!is_probability(duplication_probability)) {
        throw Error(ErrorKind::InvalidArgument, "duplication probability outside [0, 1]");
    }
    if (max_extra_delay == UINT64_MAX) throw Error(ErrorKind::InvalidArgument, "delay bound too large");
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::Delivered: return "DELIVERED";
    case Outcome::Dropped: return "DROPPED";
    case Outcome::Duplicated: return "DUPLICATED";
    }
    return "?";
}

std::size_t ChannelLog::count(Outcome outcome) const {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [&](const ChannelEvent& e) { return e.outcome == outcome; }));
}

std::size_t ChannelLog::delivery_count() const {
    std::size_t n = 0;
    for (const auto& e : events) n += e.ticks.size();
    return n;
}

std::string ChannelLog::dump() const {
    std::string out;
    for (const auto& e : events) {
        out += std::to_string(e.input_position);
        out += '\t';
        out += to_string(e.outcome);
        out += '\t';
        if (e.ticks.empty()) out += '-';
        for (std::size_t i = 0; i < e.ticks.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e.ticks[i]);
        }
        out += '\n';
    }
    return out;
}

ChannelLog plan_channel(std::size_t message_count, const ChannelConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    ChannelLog log;
    log.events.reserve(message_count);
    for (std::size_t i = 0; i < message_count; ++i) {
        const double u_loss = rng.next_unit();
        const double u_dup = rng.next_unit();
        const std::uint64_t d1 = rng.next_below(cfg.max_extra_delay + 1);
        const std::uint64_t d2 = rng.next_below(cfg.max_extra_delay + 1);

        ChannelEvent e;
        e.input_position = i;
        if (u_loss < cfg.loss_probability) {
            e.outcome = Outcome::Dropped;
        } else if (u_dup < cfg.duplication_probability) {
            e.outcome = Outcome::Duplicated;
            e.ticks = {i + d1, i + d2};
        } else {
            e.outcome = Outcome::Delivered;
            e.ticks = {i + d1};
        }
        log.events.push_back(std::move(e));
    }
    return log;
}

std::vector<std::size_t> delivery_order(const ChannelLog& log) {
    std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>> deliveries;
    for (const auto& e : log.events) {
        for (std::size_t copy = 0; copy < e.ticks.size(); ++copy) {
            deliveries.emplace_back(e.ticks[copy], e.input_position, copy);
        }
    }
    std::sort(deliveries.begin(), deliveries.end());
    std::vector<std::size_t> order;
    order.reserve(deliveries.size());
    for (const auto& d : deliveries) order.push_back(std::get<1>(d));
    return order;
}

} // namespace smsvoice
