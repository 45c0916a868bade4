#include "smsvoice/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "smsvoice/audio.hpp"
#include "smsvoice/channel_sim.hpp"
#include "smsvoice/error.hpp"
#include "smsvoice/metrics.hpp"
#include "smsvoice/pipeline.hpp"
#include "smsvoice/segments_file.hpp"

namespace smsvoice::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string codec = "pcm";
    std::vector<std::string> codecs{"pcm", "ulaw", "toy"};
    int decimation = kDefaultDecimation;
    std::size_t capacity = kDefaultCapacity;
    std::string cost = "uniform";
    std::size_t group = kDefaultGroupSize;
    double loss = 0.0;
    double dup = 0.0;
    std::uint64_t delay = 0;
    std::uint64_t seed = 0;
    std::string policy = "loose";
    std::uint32_t rate = 8000;
    int bits = 16;
    std::string in;
    std::string out;
    std::string log;
    std::string format = "text";
    std::optional<std::size_t> words;

    SegmentationConfig segmentation() const {
        SegmentationConfig cfg{capacity, parse_cost_model(cost), group};
        cfg.validate();
        return cfg;
    }

    ChannelConfig channel() const {
        ChannelConfig cfg{loss, dup, delay, seed};
        cfg.validate();
        return cfg;
    }

    Codec selected_codec() const { return Codec::parse(codec, decimation); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes beside the target and renames, so readers see the old file or the
// complete new one.
void write_file_atomic(const std::string& path, std::string_view contents) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot create '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw Error(ErrorKind::Io, "write failed for '" + path + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error(ErrorKind::Io, "cannot rename onto '" + path + "': " + ec.message());
    }
}

std::string as_string(const Bytes& bytes) { return {bytes.begin(), bytes.end()}; }

AudioClip load_wav(const std::string& path) {
    const std::string raw = read_file(path);
    return read_wav(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

std::string index_set(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string encode_summary(const Codec& codec, std::size_t chars, std::size_t messages, std::size_t group) {
    std::ostringstream s;
    s << "encode: codec=" << codec.name() << " chars=" << chars << " messages=" << messages
      << " connected=" << connected_group_count(messages, group);
    return s.str();
}

std::string channel_summary(const ChannelLog& log) {
    std::ostringstream s;
    s << "simulate: input=" << log.events.size() << " delivered=" << log.delivery_count()
      << " dropped=" << log.count(Outcome::Dropped) << " duplicated=" << log.count(Outcome::Duplicated);
    return s.str();
}

std::string decode_summary(const DecodedClip& d, ReassemblyPolicy policy) {
    std::ostringstream s;
    s << "decode: policy=" << to_string(policy) << " received=" << d.report.received_indices.size()
      << " missing=" << index_set(d.report.missing_indices) << " duplicates=" << d.report.duplicate_count
      << " tail_unknown=" << (d.report.tail_unknown ? "yes" : "no") << " rate=" << d.clip.sample_rate_hz()
      << " samples=" << d.clip.size();
    if (d.trailing_byte_dropped) s << " trailing_byte_dropped=yes";
    return s.str();
}

int cmd_encode(const Options& o, std::ostream& out) {
    const Codec codec = o.selected_codec();
    const SegmentationConfig cfg = o.segmentation();
    const AudioClip clip = load_wav(o.in);
    const auto segments = encode_clip(clip, codec, cfg);
    const auto lines = render_segments(segments);
    write_file_atomic(o.out, write_segments_file(lines));

    std::size_t chars = 0;
    for (const auto& s : segments) chars += s.payload.size();
    out << encode_summary(codec, chars, segments.size(), cfg.group_size) << "\n";
    return 0;
}

int cmd_decode(const Options& o, std::ostream& out) {
    const Codec codec = o.selected_codec();
    const ReassemblyPolicy policy = parse_policy(o.policy);
    const auto lines = read_segments_file(read_file(o.in));
    const auto segments = parse_segments(lines);
    const DecodedClip decoded = decode_segments(segments, codec, policy, o.rate, o.bits);
    write_file_atomic(o.out, as_string(write_wav(decoded.clip)));
    out << decode_summary(decoded, policy) << "\n";
    return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const ChannelConfig cfg = o.channel();
    const auto lines = split_lines(read_file(o.in));
    const auto result = transmit<std::string>(lines, cfg);
    write_file_atomic(o.out, join_lines(result.delivered));
    if (!o.log.empty()) write_file_atomic(o.log, result.log.dump());
    out << channel_summary(result.log) << "\n";
    return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
    std::vector<Codec> codecs;
    for (const auto& name : o.codecs) codecs.push_back(Codec::parse(name, o.decimation));
    const AudioClip clip = load_wav(o.in);
    const ComparisonTable table = compare(clip, codecs, o.segmentation(), o.words);
    if (o.format == "csv") {
        out << table.to_csv();
    } else {
        out << table.to_text();
    }
    return 0;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
    const Codec codec = o.selected_codec();
    const SegmentationConfig seg_cfg = o.segmentation();
    const ChannelConfig ch_cfg = o.channel();
    const ReassemblyPolicy policy = parse_policy(o.policy);
    const AudioClip clip = load_wav(o.in);

    const auto segments = encode_clip(clip, codec, seg_cfg);
    std::size_t chars = 0;
    for (const auto& s : segments) chars += s.payload.size();
    out << encode_summary(codec, chars, segments.size(), seg_cfg.group_size) << "\n";

    // Through text and back so the channel carries exactly what a handset would.
    const auto sent = render_segments(segments);
    const auto result = transmit<CodePoints>(sent, ch_cfg);
    out << channel_summary(result.log) << "\n";
    if (!o.log.empty()) write_file_atomic(o.log, result.log.dump());

    const auto received = read_segments_file(write_segments_file(result.delivered));
    const DecodedClip decoded =
        decode_segments(parse_segments(received), codec, policy, clip.sample_rate_hz(), clip.bit_depth());
    write_file_atomic(o.out, as_string(write_wav(decoded.clip)));
    out << decode_summary(decoded, policy) << "\n";
    return 0;
}

void add_segmentation_flags(CLI::App* app, Options& o) {
    app->add_option("--capacity", o.capacity, "Payload cost units per SMS")->check(CLI::PositiveNumber);
    app->add_option("--cost", o.cost, "Cost model")->check(CLI::IsMember({"uniform", "wide"}));
    app->add_option("--group", o.group, "Messages per connected message")->check(CLI::PositiveNumber);
}

void add_codec_flags(CLI::App* app, Options& o) {
    app->add_option("--codec", o.codec, "pcm, ulaw or toy");
    app->add_option("--decimation", o.decimation, "Decimation factor for toy")->check(CLI::PositiveNumber);
}

void add_channel_flags(CLI::App* app, Options& o) {
    app->add_option("--loss", o.loss, "Per-message loss probability")->check(CLI::Range(0.0, 1.0));
    app->add_option("--dup", o.dup, "Per-message duplication probability")->check(CLI::Range(0.0, 1.0));
    app->add_option("--delay", o.delay, "Maximum extra delay in ticks");
    app->add_option("--seed", o.seed, "Channel seed");
    app->add_option("--log", o.log, "Write the channel event log here");
}

void add_policy_flag(CLI::App* app, Options& o) {
    app->add_option("--policy", o.policy, "Reassembly policy")->check(CLI::IsMember({"strict", "loose"}));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Voice over concatenated SMS: encode, simulate, decode and account."};
    app.require_subcommand(1);
    Options o;

    auto* encode = app.add_subcommand("encode", "WAV to segments file");
    encode->add_option("--in", o.in, "Input WAV")->required();
    encode->add_option("--out", o.out, "Output segments file")->required();
    add_codec_flags(encode, o);
    add_segmentation_flags(encode, o);

    auto* decode = app.add_subcommand("decode", "Segments file to WAV");
    decode->add_option("--in", o.in, "Input segments file")->required();
    decode->add_option("--out", o.out, "Output WAV")->required();
    add_codec_flags(decode, o);
    add_policy_flag(decode, o);
    decode->add_option("--rate", o.rate, "Sample rate of the output WAV")->check(CLI::PositiveNumber);
    decode->add_option("--bits", o.bits, "PCM bit depth")->check(CLI::IsMember({8, 16}));

    auto* simulate = app.add_subcommand("simulate", "Pass a segments file through the lossy channel");
    simulate->add_option("--in", o.in, "Input segments file")->required();
    simulate->add_option("--out", o.out, "Delivered segments file")->required();
    add_channel_flags(simulate, o);

    auto* stats = app.add_subcommand("stats", "Character and message accounting per codec");
    stats->add_option("--in", o.in, "Input WAV")->required();
    stats->add_option("--codec", o.codecs, "Codecs to compare")->delimiter(',');
    stats->add_option("--decimation", o.decimation, "Decimation factor for toy")->check(CLI::PositiveNumber);
    add_segmentation_flags(stats, o);
    stats->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    stats->add_option("--words", o.words, "Spoken word count to echo in the report");

    auto* roundtrip = app.add_subcommand("roundtrip", "Encode, simulate and decode in one process");
    roundtrip->add_option("--in", o.in, "Input WAV")->required();
    roundtrip->add_option("--out", o.out, "Output WAV")->required();
    add_codec_flags(roundtrip, o);
    add_segmentation_flags(roundtrip, o);
    add_channel_flags(roundtrip, o);
    add_policy_flag(roundtrip, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "smsvoice: error: InvalidArgument: " << e.what() << "\n";
        return 2;
    }

    try {
        if (encode->parsed()) return cmd_encode(o, out);
        if (decode->parsed()) return cmd_decode(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (stats->parsed()) return cmd_stats(o, out);
        if (roundtrip->parsed()) return cmd_roundtrip(o, out);
    } catch (const Error& e) {
        err << "smsvoice: error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "smsvoice: error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace smsvoice::cli
