#include "smsvoice/metrics.hpp"

#include <algorithm>
#include <array>

#include "smsvoice/error.hpp"
#include "smsvoice/payload_codec.hpp"

namespace smsvoice {

TransmissionReport analyze(const AudioClip& clip, const Codec& codec, const SegmentationConfig& cfg) {
    cfg.validate();
    const Bytes encoded = codec_encode(clip, codec);
    const CodePoints stream = bytes_to_codepoints(encoded);

    TransmissionReport report;
    report.codec = codec;
    report.config = cfg;
    report.char_count = stream.size();
    report.message_count = segment(stream, cfg).size();
    report.connected_count = connected_group_count(report.message_count, cfg.group_size);
    return report;
}

ComparisonTable compare(const AudioClip& clip, std::span<const Codec> codecs, const SegmentationConfig& cfg,
                        std::optional<std::size_t> words) {
    if (codecs.empty()) throw Error(ErrorKind::InvalidArgument, "at least one codec is required");
    ComparisonTable table;
    table.words = words;
    for (const Codec& codec : codecs) table.rows.push_back(analyze(clip, codec, cfg));
    return table;
}

namespace {

using Row = std::array<std::string, 7>;

Row row_cells(const TransmissionReport& r) {
    return {r.codec.name(),
            std::to_string(r.char_count),
            std::to_string(r.message_count),
            std::to_string(r.connected_count),
            std::to_string(r.config.capacity),
            std::string(to_string(r.config.cost_model)),
            std::to_string(r.config.group_size)};
}

const Row kHeader = {"codec", "chars", "messages", "connected", "capacity", "cost_model", "group_size"};

} // namespace

std::string ComparisonTable::to_csv() const {
    std::string out;
    auto append = [&out](const Row& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    append(kHeader);
    for (const auto& r : rows) append(row_cells(r));
    return out;
}

std::string ComparisonTable::to_text() const {
    std::vector<Row> cells{kHeader};
    for (const auto& r : rows) cells.push_back(row_cells(r));

    std::array<std::size_t, 7> width{};
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }

    std::string out;
    if (words) out += "words: " + std::to_string(*words) + "\n";
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            // codec column left-aligned, numbers right-aligned
            const std::string pad(width[i] - row[i].size(), ' ');
            line += i == 0 || i == 5 ? row[i] + pad : pad + row[i];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

} // namespace smsvoice
