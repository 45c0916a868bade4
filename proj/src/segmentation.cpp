#include "smsvoice/segmentation.hpp"

#include "smsvoice/error.hpp"

namespace smsvoice {

std::string_view to_string(CostModel model) {
    return model == CostModel::Wide ? "wide" : "uniform";
}

CostModel parse_cost_model(std::string_view name) {
    if (name == "uniform") return CostModel::Uniform;
    if (name == "wide") return CostModel::Wide;
    throw Error(ErrorKind::InvalidArgument, "unknown cost model '" + std::string(name) + "'");
}

void SegmentationConfig::validate() const {
    if (capacity < 1) throw Error(ErrorKind::InvalidArgument, "capacity must be >= 1");
    if (group_size < 1) throw Error(ErrorKind::InvalidArgument, "group size must be >= 1");
}

std::size_t payload_cost(std::u32string_view payload, CostModel model) noexcept {
    std::size_t total = 0;
    for (char32_t p : payload) total += point_cost(p, model);
    return total;
}

namespace {

// Calls emit(begin, end) for each greedy part and returns the part count.
template <typename Emit>
std::size_t pack(std::u32string_view stream, const SegmentationConfig& cfg, Emit&& emit) {
    cfg.validate();
    std::size_t parts = 0;
    std::size_t begin = 0;
    while (begin < stream.size()) {
        std::size_t end = begin;
        std::size_t used = 0;
        while (end < stream.size()) {
            const std::size_t c = point_cost(stream[end], cfg.cost_model);
            if (used + c > cfg.capacity) break;
            used += c;
            ++end;
        }
        if (end == begin) {
            throw Error(ErrorKind::CapacityTooSmall, "point at position " + std::to_string(begin) + " costs " +
                                                         std::to_string(point_cost(stream[begin], cfg.cost_model)) +
                                                         ", capacity is " + std::to_string(cfg.capacity));
        }
        if (!emit(parts, begin, end)) return parts + 1;
        ++parts;
        begin = end;
    }
    return parts;
}

} // namespace

std::size_t count_segments(std::u32string_view stream, const SegmentationConfig& cfg) {
    if (cfg.cost_model == CostModel::Uniform) {
        cfg.validate();
        return (stream.size() + cfg.capacity - 1) / cfg.capacity;
    }
    return pack(stream, cfg, [](std::size_t, std::size_t, std::size_t) { return true; });
}

std::vector<Segment> segment(std::u32string_view stream, const SegmentationConfig& cfg) {
    std::vector<Segment> out;
    bool overflow = false;
    pack(stream, cfg, [&](std::size_t part, std::size_t begin, std::size_t end) {
        if (part >= static_cast<std::size_t>(kMaxSegments)) {
            overflow = true;
            return false;
        }
        out.push_back({static_cast<int>(part), CodePoints(stream.substr(begin, end - begin))});
        return true;
    });
    if (overflow) throw SegmentOverflowError(count_segments(stream, cfg), stream.size());
    return out;
}

CodePoints render_segment(const Segment& seg) {
    if (seg.index < 0 || seg.index >= kMaxSegments) {
        throw Error(ErrorKind::BadIndex, "index " + std::to_string(seg.index) + " outside 000-999");
    }
    CodePoints out;
    out.reserve(kIndexDigits + seg.payload.size());
    out.push_back(U'0' + static_cast<char32_t>(seg.index / 100));
    out.push_back(U'0' + static_cast<char32_t>(seg.index / 10 % 10));
    out.push_back(U'0' + static_cast<char32_t>(seg.index % 10));
    out += seg.payload;
    return out;
}

std::size_t connected_group_count(std::size_t message_count, std::size_t group_size) {
    if (group_size < 1) throw Error(ErrorKind::InvalidArgument, "group size must be >= 1");
    return (message_count + group_size - 1) / group_size;
}

} // namespace smsvoice
