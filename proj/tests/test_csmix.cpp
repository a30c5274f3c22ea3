#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "layoutforge/csmix.hpp"
#include "layoutforge/objectives.hpp"

using namespace layoutforge;

namespace {

LabeledSample tagged_sample(int tag, std::size_t n, std::size_t d) {
    std::vector<double> f(n * d);
    std::vector<double> depth(n);
    std::vector<double> height(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t c = 0; c < d; ++c) f[col * d + c] = tag * 1000.0 + col + 0.001 * c;
        depth[col] = 1.0 + tag * 100.0 + col;
        height[col] = 2.0 + tag + 0.01 * col;
    }
    return {FeatureSequence(n, d, std::move(f)), DepthSequence(depth), HeightSequence(height)};
}

} // namespace

TEST_CASE("mix spec validation and sampling") {
    CHECK_NOTHROW(validate(MixSpec{0, 0, 6}, 6));
    CHECK_THROWS_AS(validate(MixSpec{0, 0, 0}, 6), Error);
    CHECK_THROWS_AS(validate(MixSpec{5, 0, 2}, 6), Error);
    CHECK_THROWS_AS(validate(MixSpec{0, 0, 7}, 6), Error);

    CHECK(sample_mix_spec(1, 123) == MixSpec{0, 0, 1});
    CHECK(sample_mix_spec(50, 9) == sample_mix_spec(50, 9));

    for (std::uint64_t seed = 0; seed < 100000; ++seed) {
        const MixSpec s = sample_mix_spec(37, seed);
        REQUIRE(s.w >= 1);
        REQUIRE(s.c_a + s.w <= 37);
        REQUIRE(s.c_b + s.w <= 37);
    }
}

TEST_CASE("window width is uniform (chi-square)") {
    std::array<int, 9> counts{};
    const int draws = 100000;
    for (int seed = 0; seed < draws; ++seed) {
        ++counts[sample_mix_spec(8, static_cast<std::uint64_t>(seed) * 7919 + 1).w];
    }
    CHECK(counts[0] == 0);
    double chi2 = 0.0;
    const double expected = draws / 8.0;
    for (int w = 1; w <= 8; ++w) chi2 += (counts[w] - expected) * (counts[w] - expected) / expected;
    // 7 degrees of freedom, upper 1% point.
    CHECK(chi2 < 18.475);
}

TEST_CASE("splice index arithmetic") {
    const std::vector<std::string> a{"a0", "a1", "a2", "a3", "a4", "a5"};
    const std::vector<std::string> b{"b0", "b1", "b2", "b3", "b4", "b5"};
    const auto [ma, mb] = splice(a, b, MixSpec{1, 3, 2});
    CHECK(ma == std::vector<std::string>{"a0", "b3", "b4", "a3", "a4", "a5"});
    CHECK(mb == std::vector<std::string>{"b0", "b1", "b2", "a1", "a2", "b5"});

    const auto [sa, sb] = splice(a, b, MixSpec{0, 0, 6});
    CHECK(sa == b);
    CHECK(sb == a);
}

TEST_CASE("column multiset conservation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 1000);
        const std::size_t w = 1 + rng() % n;
        const std::size_t c = rng() % (n - w + 1);
        const auto [ma, mb] = splice(a, b, MixSpec{c, c, w});
        std::multiset<int> in(a.begin(), a.end());
        in.insert(b.begin(), b.end());
        std::multiset<int> out(ma.begin(), ma.end());
        out.insert(mb.begin(), mb.end());
        REQUIRE(in == out);
    }

    // Splicing a sequence with itself is the identity only for aligned windows.
    const std::vector<int> x{1, 2, 3, 4, 5};
    const auto [same_a, same_b] = splice(x, x, MixSpec{2, 2, 2});
    CHECK(same_a == x);
    CHECK(same_b == x);
    const auto [off_a, off_b] = splice(x, x, MixSpec{0, 3, 2});
    CHECK(off_a == std::vector<int>{4, 5, 3, 4, 5});
    CHECK(off_b == std::vector<int>{1, 2, 3, 1, 2});
}

TEST_CASE("splice sample shares provenance across features and labels") {
    const std::size_t n = 24, d = 3;
    const LabeledSample a = tagged_sample(0, n, d);
    const LabeledSample b = tagged_sample(1, n, d);
    const MixSpec spec{5, 11, 7};
    const auto [ma, mb] = splice_sample(a, b, spec);
    const auto [pa, pb] = splice_provenance(n, spec);
    for (std::size_t col = 0; col < n; ++col) {
        for (const auto& [mixed, prov] : {std::pair{&ma, &pa}, std::pair{&mb, &pb}}) {
            const ColumnSource src = (*prov)[col];
            const LabeledSample& from = src.sample == 0 ? a : b;
            CHECK(mixed->features.at(col, 2) == from.features.at(src.column, 2));
            CHECK(mixed->depths[col] == from.depths[src.column]);
            CHECK(mixed->heights[col] == from.heights[src.column]);
        }
        const bool in_window = col >= spec.c_a && col < spec.c_a + spec.w;
        CHECK(ma.heights[col] == (in_window ? b.heights[spec.c_b + col - spec.c_a] : a.heights[col]));
    }

    const auto [swap_a, swap_b] = splice_sample(a, b, MixSpec{0, 0, n});
    CHECK(swap_a.features == b.features);
    CHECK(swap_a.depths == b.depths);
    CHECK(swap_b.features == a.features);
    CHECK(swap_b.heights == a.heights);

    const auto grid = sample_longitudes(n);
    CHECK(layout_objective(ma.depths, ma.depths, ma.heights, ma.heights, grid, -1.6).total == 0.0);

    const LabeledSample shorter = tagged_sample(2, n - 1, d);
    CHECK_THROWS_AS(splice_sample(a, shorter, MixSpec{0, 0, 1}), Error);
}
