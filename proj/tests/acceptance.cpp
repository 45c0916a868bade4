// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smsvoice/audio.hpp"
#include "smsvoice/channel_sim.hpp"
#include "smsvoice/cli.hpp"
#include "smsvoice/error.hpp"
#include "smsvoice/metrics.hpp"
#include "smsvoice/payload_codec.hpp"
#include "smsvoice/pipeline.hpp"
#include "smsvoice/reassembly.hpp"
#include "smsvoice/segmentation.hpp"
#include "smsvoice/segments_file.hpp"
#include "support.hpp"

using namespace smsvoice;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Verdict()> body;
};

// 1. Shift-codec bijection over all 256 bytes.
Verdict shift_bijection() {
    Verdict o;
    std::vector<std::uint8_t> all(256);
    for (int i = 0; i < 256; ++i) all[i] = static_cast<std::uint8_t>(i);
    const CodePoints points = bytes_to_codepoints(all);
    for (char32_t p : points) o.require((p >= 32 && p <= 255) || (p >= 256 && p <= 287), "point outside bands");
    o.require(points[0] == 256 && points[31] == 287, "0 -> 256 and 31 -> 287");
    o.require(codepoints_to_bytes(points) == all, "round trip");
    return o;
}

// 2. Connected-message counts from the reported table (267 -> 90 excluded).
Verdict connected_counts() {
    Verdict o;
    const std::pair<std::size_t, std::size_t> cells[] = {{25, 9},  {23, 8},  {3, 1},  {85, 29},
                                                         {71, 24}, {16, 6}, {241, 81}};
    for (auto [m, c] : cells) {
        o.require(connected_group_count(m, 3) == c, std::to_string(m) + " -> " + std::to_string(c));
    }
    return o;
}

// 3. 10 s lossless end-to-end.
Verdict lossless_round_trip() {
    Verdict o;
    const AudioClip clip = test::synthetic_speech(10.0);
    // 160000 characters do not fit 1000 parts of 157; use the smallest
    // capacity that does.
    const std::size_t chars = codec_encode(clip, Codec::pcm()).size();
    const std::size_t capacity = std::max(kDefaultCapacity, (chars + kMaxSegments - 1) / kMaxSegments);
    const SegmentationConfig cfg{capacity, CostModel::Uniform, 3};
    const auto lines = render_segments(encode_clip(clip, Codec::pcm(), cfg));
    const auto delivered = transmit<CodePoints>(lines, ChannelConfig{}).delivered;
    const auto received = read_segments_file(write_segments_file(delivered));
    const DecodedClip back =
        decode_segments(parse_segments(received), Codec::pcm(), ReassemblyPolicy::Strict, 8000, 16);
    o.require(wav_data_chunk(back.clip) == wav_data_chunk(clip), "data chunk differs");
    o.require(write_wav(back.clip) == write_wav(clip), "container differs");
    return o;
}

// 4. reassemble(segment(s), STRICT) = s with cost bound, 1000 random streams.
Verdict segmentation_inverse() {
    Verdict o;
    std::mt19937_64 rng(0x5E6);
    for (int trial = 0; trial < 1000 && o.pass; ++trial) {
        const auto model = trial % 2 ? CostModel::Wide : CostModel::Uniform;
        const std::size_t capacity = 1 + rng() % 500;
        // Keep within the index space: a part always holds >= capacity/2 points
        // (>= capacity under uniform cost). Capacity 1 under wide cost only
        // admits one-unit points.
        const bool narrow_only = model == CostModel::Wide && capacity == 1;
        const std::size_t per_part = model == CostModel::Uniform ? capacity : std::max<std::size_t>(1, capacity / 2);
        const std::size_t max_len = std::min<std::size_t>(50000, 1000 * per_part);
        const CodePoints s = test::random_stream(rng, rng() % (max_len + 1), !narrow_only);
        const SegmentationConfig cfg{capacity, model, 3};
        const auto segs = segment(s, cfg);
        for (const auto& seg : segs) o.require(payload_cost(seg.payload, model) <= capacity, "cost bound");
        o.require(reassemble(segs, ReassemblyPolicy::Strict).stream == s, "inverse");
    }
    return o;
}

// 5. Loose reassembly against filter-and-sort over 1000 channel trials.
Verdict loose_oracle() {
    Verdict o;
    std::mt19937_64 rng(0x1005E);
    const double losses[] = {0.0, 0.1, 0.5};
    const double dups[] = {0.0, 0.1};
    const std::uint64_t delays[] = {0, 10};
    for (int trial = 0; trial < 1000 && o.pass; ++trial) {
        const ChannelConfig ch{losses[trial % 3], dups[(trial / 3) % 2], delays[(trial / 6) % 2],
                               static_cast<std::uint64_t>(trial) * 7919 + 1};
        const CodePoints stream = test::random_stream(rng, rng() % 20000);
        const auto segs = segment(stream, SegmentationConfig{});
        const auto result = transmit<Segment>(segs, ch);
        const auto got = reassemble(result.delivered, ReassemblyPolicy::Loose).stream;

        std::vector<bool> kept(segs.size(), false);
        for (const auto& e : result.log.events) kept[e.input_position] = !e.ticks.empty();
        CodePoints expected;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (kept[i]) expected += segs[i].payload;
        }
        o.require(got == expected, "trial " + std::to_string(trial));
    }
    return o;
}

// 6. Exhaustive mu-law scan against the chord/step formula.
Verdict ulaw_bound() {
    Verdict o;
    for (int x = -8192; x <= 8191; ++x) {
        const std::uint8_t e = ulaw_encode_sample(x);
        o.require(ulaw_encode_sample(ulaw_decode_sample(e)) == e, "idempotence at " + std::to_string(x));
        const int m = std::min(std::abs(x), 8159) + 33;
        const int chord = std::min(7, static_cast<int>(std::floor(std::log2(static_cast<double>(m)))) - 5);
        o.require(std::abs(ulaw_decode_sample(e) - x) <= (1 << (chord + 1)), "bound at " + std::to_string(x));
    }
    return o;
}

// 7. Codec ordering on clips of at least one second.
Verdict compression_trend() {
    Verdict o;
    const SegmentationConfig cfg{};
    std::vector<AudioClip> clips;
    for (double secs : {1.0, 2.0, 6.0}) clips.push_back(test::synthetic_speech(secs));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        AudioClip r = test::random_clip(rng, 16, 20000);
        std::vector<std::int16_t> s(r.samples().begin(), r.samples().end());
        s.resize(std::max<std::size_t>(s.size(), r.sample_rate_hz()));
        clips.emplace_back(r.sample_rate_hz(), 16, std::move(s));
    }
    for (const auto& clip : clips) {
        const auto pcm = analyze(clip, Codec::pcm(), cfg);
        const auto ulaw = analyze(clip, Codec::ulaw(), cfg);
        const auto toy = analyze(clip, Codec::toy(4), cfg);
        o.require(toy.message_count < ulaw.message_count && ulaw.message_count < pcm.message_count,
                  "message ordering");
        o.require(ulaw.char_count * 2 == pcm.char_count, "ulaw = pcm / 2");
    }
    return o;
}

// 8. Index-space boundary.
Verdict overflow_boundary() {
    Verdict o;
    const SegmentationConfig cfg{157, CostModel::Uniform, 3};
    const auto ok = segment(CodePoints(157000, U'a'), cfg);
    o.require(ok.size() == 1000 && ok.back().index == 999, "157000 points");
    bool raised = false;
    try {
        segment(CodePoints(157001, U'a'), cfg);
    } catch (const SegmentOverflowError&) {
        raised = true;
    }
    o.require(raised, "157001 points must overflow");
    return o;
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "smsvoice");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int status = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    return status;
}

// 9. Simulator determinism through the CLI plus the binomial bound.
Verdict channel_determinism() {
    Verdict o;
    test::TempDir dir;
    std::string lines;
    for (int i = 0; i < 10000; ++i) lines += "msg" + std::to_string(i) + "\n";
    test::spit(dir.file("in.seg"), lines);
    std::string s1, s2;
    const std::vector<std::string> base{"simulate", "--in", dir.file("in.seg"), "--loss", "0.5", "--dup", "0.1",
                                        "--delay", "10", "--seed", "2024"};
    auto a = base, b = base;
    a.insert(a.end(), {"--out", dir.file("a.seg"), "--log", dir.file("a.log")});
    b.insert(b.end(), {"--out", dir.file("b.seg"), "--log", dir.file("b.log")});
    o.require(cli(a, &s1) == 0 && cli(b, &s2) == 0, "simulate failed");
    o.require(s1 == s2, "summaries differ");
    o.require(test::slurp(dir.file("a.seg")) == test::slurp(dir.file("b.seg")), "outputs differ");
    o.require(test::slurp(dir.file("a.log")) == test::slurp(dir.file("b.log")), "logs differ");

    const auto msgs = split_lines(lines);
    const auto half = transmit<std::string>(msgs, ChannelConfig{0.5, 0.0, 0, 2024});
    const double delivered = static_cast<double>(half.delivered.size());
    o.require(std::abs(delivered - 5000.0) <= 150.0, "delivered " + std::to_string(half.delivered.size()));
    return o;
}

// 10. Rendered lines carry no control scalars and survive the file format.
Verdict line_safety() {
    Verdict o;
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const AudioClip clip = test::random_clip(rng, 16, 30000);
        const auto lines = render_segments(encode_clip(clip, i % 2 ? Codec::pcm() : Codec::ulaw(), SegmentationConfig{}));
        for (const auto& line : lines) {
            o.require(std::none_of(line.begin(), line.end(), [](char32_t c) { return c < 32; }), "control scalar");
        }
        const std::string file = write_segments_file(lines);
        o.require(std::count(file.begin(), file.end(), '\n') == static_cast<std::ptrdiff_t>(lines.size()),
                  "line count");
        o.require(read_segments_file(file) == lines, "file round trip");
    }
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "shift-codec bijection", 0.001, shift_bijection},
        {2, "connected-message counts", 0.0, connected_counts},
        {3, "10 s lossless round trip", 1.0, lossless_round_trip},
        {4, "segmentation inverse (1000 streams)", 10.0, segmentation_inverse},
        {5, "loose reassembly oracle (1000 trials)", 10.0, loose_oracle},
        {6, "mu-law exhaustive bound", 0.1, ulaw_bound},
        {7, "compression trend", 0.0, compression_trend},
        {8, "index-space overflow boundary", 0.0, overflow_boundary},
        {9, "channel determinism and loss rate", 5.0, channel_determinism},
        {10, "payload line safety", 0.0, line_safety},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict result;
        const auto start = Clock::now();
        try {
            result = c.body();
        } catch (const std::exception& e) {
            result.pass = false;
            result.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (result.pass && c.time_limit_s > 0 && secs > c.time_limit_s) {
            result.pass = false;
            result.note = "exceeded " + std::to_string(c.time_limit_s) + " s";
        }
        std::printf("[%s] AC%-2d %-40s %9.4f s%s%s\n", result.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    result.note.empty() ? "" : "  ", result.note.c_str());
        if (!result.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
