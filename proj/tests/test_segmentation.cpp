#include <doctest.h>

#include <random>

#include "smsvoice/error.hpp"
#include "smsvoice/segmentation.hpp"
#include "support.hpp"

using namespace smsvoice;

namespace {

SegmentationConfig uniform(std::size_t capacity) { return {capacity, CostModel::Uniform, 3}; }

CodePoints concat(const std::vector<Segment>& segs) {
    CodePoints out;
    for (const auto& s : segs) out += s.payload;
    return out;
}

} // namespace

TEST_CASE("exact fit and one-over boundary") {
    CodePoints s(157, U'a');
    auto one = segment(s, uniform(157));
    REQUIRE(one.size() == 1);
    CHECK(one[0].index == 0);

    s.push_back(U'b');
    auto two = segment(s, uniform(157));
    REQUIRE(two.size() == 2);
    CHECK(two[0].payload.size() == 157);
    CHECK(two[1].payload == U"b");
    CHECK(two[1].index == 1);
}

TEST_CASE("empty stream yields no segments") {
    CHECK(segment(U"", SegmentationConfig{}).empty());
    CHECK(count_segments(U"", SegmentationConfig{}) == 0);
}

TEST_CASE("index space overflow") {
    const CodePoints full(157000, U'x');
    auto segs = segment(full, uniform(157));
    REQUIRE(segs.size() == 1000);
    CHECK(segs.back().index == 999);

    const CodePoints over(157001, U'x');
    try {
        segment(over, uniform(157));
        FAIL("no overflow");
    } catch (const SegmentOverflowError& e) {
        CHECK(e.kind() == ErrorKind::SegmentOverflow);
        CHECK(e.required_segments() == 1001);
        CHECK(e.char_count() == 157001);
    }
}

TEST_CASE("wide cost never splits a two-unit point") {
    const CodePoints s{U'a', 256, U'b', 257, 258};
    SegmentationConfig cfg{3, CostModel::Wide, 3};
    auto segs = segment(s, cfg);
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].payload == CodePoints{U'a', 256});
    CHECK(segs[1].payload == CodePoints{U'b', 257});
    CHECK(segs[2].payload == CodePoints{258});

    SegmentationConfig tiny{1, CostModel::Wide, 3};
    try {
        segment(s, tiny);
        FAIL("two-unit point fit in one unit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapacityTooSmall);
    }
    CHECK(segment(U"abc", tiny).size() == 3);
}

TEST_CASE("invalid configuration") {
    CHECK_THROWS_AS(segment(U"a", {0, CostModel::Uniform, 3}), Error);
    CHECK_THROWS_AS(connected_group_count(3, 0), Error);
}

TEST_CASE("rendering") {
    CHECK(render_segment({0, U"Hi"}) == U"000Hi");
    CHECK(render_segment({7, CodePoints{256}}) == CodePoints{U'0', U'0', U'7', 0x100});
    CHECK(render_segment({999, U" "}) == U"999 ");
    CHECK(render_segment({42, U""}).size() == 3);
    CHECK_THROWS_AS(render_segment({1000, U"x"}), Error);
}

TEST_CASE("connected message grouping reproduces the reported table") {
    const std::pair<std::size_t, std::size_t> table[] = {{25, 9}, {23, 8}, {3, 1},  {85, 29},
                                                         {71, 24}, {16, 6}, {241, 81}, {0, 0}};
    for (auto [messages, connected] : table) CHECK(connected_group_count(messages, 3) == connected);
    // The remaining reported cell (267 -> 90) disagrees with ceil(267 / 3).
    CHECK(connected_group_count(267, 3) == 89);
    std::size_t prev = 0;
    for (std::size_t n = 0; n < 200; ++n) {
        for (std::size_t g = 1; g < 6; ++g) CHECK(connected_group_count(n, g) == (n + g - 1) / g);
        CHECK(connected_group_count(n, 3) >= prev);
        prev = connected_group_count(n, 3);
    }
}

TEST_CASE("segmentation properties over random streams") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const auto model = trial % 2 ? CostModel::Wide : CostModel::Uniform;
        const std::size_t capacity = 2 + rng() % 200;
        // Every part holds at least capacity / 2 points, so this never overflows.
        const std::size_t max_len = std::min<std::size_t>(5000, 1000 * (capacity / 2));
        const CodePoints s = test::random_stream(rng, rng() % (max_len + 1));
        const SegmentationConfig cfg{capacity, model, 3};
        const auto segs = segment(s, cfg);

        CHECK(concat(segs) == s);
        CHECK(segs.size() == count_segments(s, cfg));
        for (std::size_t k = 0; k < segs.size(); ++k) {
            CHECK(segs[k].index == static_cast<int>(k));
            CHECK(!segs[k].payload.empty());
            CHECK(payload_cost(segs[k].payload, model) <= capacity);
            if (k + 1 < segs.size()) {
                // Greedy maximality: the next point would not have fitted.
                const char32_t next = segs[k + 1].payload.front();
                CHECK(payload_cost(segs[k].payload, model) + point_cost(next, model) > capacity);
            }
        }
        if (model == CostModel::Uniform) CHECK(segs.size() == (s.size() + capacity - 1) / capacity);
    }
}
