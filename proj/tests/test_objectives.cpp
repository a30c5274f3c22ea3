#include <doctest.h>

#include <random>
#include <vector>

#include "layoutforge/objectives.hpp"
#include "oracles.hpp"

using namespace layoutforge;

namespace {

std::vector<double> square_depths(const LongitudeGrid& grid, double half) {
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = std::abs(std::sin(grid[i]));
        const double c = std::abs(std::cos(grid[i]));
        d[i] = half / std::max(s, c);
    }
    return d;
}

} // namespace

TEST_CASE("l1 sequence loss") {
    const std::vector<double> a{2, 2}, b{2.5, 1.5};
    CHECK(l1_sequence_loss(a, b) == 0.5);
    const std::vector<double> c{1, 2, 3}, d{2, 2, 3};
    CHECK(l1_sequence_loss(c, d) == doctest::Approx(1.0 / 3.0));
    CHECK(l1_sequence_loss(c, c) == 0.0);
    CHECK_THROWS_AS(l1_sequence_loss(a, c), Error);
}

TEST_CASE("wall normals") {
    // Flat wall z = 2 seen across a fan of longitudes; the closing segment is
    // the only one that does not lie on the wall.
    const std::vector<double> thetas{-0.6, -0.3, 0.0, 0.3, 0.6};
    std::vector<double> depths;
    for (double t : thetas) depths.push_back(2.0 / std::cos(t));
    const LongitudeGrid grid(thetas);
    const NormalSequence n = wall_normals(DepthSequence(depths), grid, -1.6);
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
        CHECK(std::abs(n[i].x - 0.0) < 1e-9);
        CHECK(n[i].v == 0.0);
        CHECK(std::abs(n[i].z + 1.0) < 1e-9);
        // Orthogonal to the segment and facing the camera.
        const FloorPoint p = point_from_depth(thetas[i], depths[i], -1.6);
        const FloorPoint q = point_from_depth(thetas[i + 1], depths[i + 1], -1.6);
        CHECK(std::abs(n[i].x * (q.x - p.x) + n[i].z * (q.z - p.z)) < 1e-12);
        CHECK(n[i].x * p.x + n[i].z * p.z < 0.0);
    }

    const auto g = sample_longitudes(256);
    const NormalSequence sq = wall_normals(DepthSequence(square_depths(g, 1.5)), g, -1.6);
    std::vector<Vec3> distinct;
    for (const Vec3& v : sq.values()) {
        bool seen = false;
        for (const Vec3& d : distinct) {
            seen = seen || (std::abs(d.x - v.x) < 1e-6 && std::abs(d.z - v.z) < 1e-6);
        }
        if (!seen) distinct.push_back(v);
    }
    // The grid samples the four corners exactly, so every segment lies on a wall.
    CHECK(distinct.size() == 4);

    CHECK_THROWS_AS(wall_normals(DepthSequence({1.0, 1.0}), LongitudeGrid({0.0, 0.0}), -1.6), Error);
}

TEST_CASE("normal loss values") {
    const NormalSequence a({{1, 0, 0}, {0, 0, 1}});
    const NormalSequence ortho({{0, 0, 1}, {-1, 0, 0}});
    const NormalSequence opposite({{-1, 0, 0}, {0, 0, -1}});
    CHECK(normal_loss(a, a) == 0.0);
    CHECK(normal_loss(a, ortho) == doctest::Approx(1.0));
    CHECK(normal_loss(a, opposite) == doctest::Approx(2.0));
    CHECK_THROWS_AS(NormalSequence({{0, 1, 0}}), Error);
    CHECK_THROWS_AS(NormalSequence({{2, 0, 0}}), Error);
}

TEST_CASE("sequence gradients and gradient loss") {
    const NormalSequence same({{1, 0, 0}, {1, 0, 0}});
    const GradientPair g = sequence_gradients(same, DepthSequence({2.0, 2.5}));
    CHECK(g.normal_grads[0] == 0.0);
    CHECK(g.depth_grads[0] == 0.5);
    CHECK(g.depth_grads[1] == -0.5);

    const NormalSequence corner({{1, 0, 0}, {0, 0, 1}});
    CHECK(sequence_gradients(corner, DepthSequence({1.0, 1.0})).normal_grads[0] ==
          doctest::Approx(kPi / 2));

    GradientPair shifted = g;
    for (double& d : shifted.depth_grads) d += 0.2;
    CHECK(gradient_loss(g, g) == 0.0);
    CHECK(gradient_loss(g, shifted) == doctest::Approx(0.2));

    const GradientPair one{{kPi / 2}, {1.0}};
    const GradientPair zero{{0.0}, {0.0}};
    CHECK(gradient_loss(one, zero) == doctest::Approx(kPi / 2 + 1.0));
}

TEST_CASE("layout objective") {
    const auto grid = sample_longitudes(64);
    const DepthSequence d(square_depths(grid, 2.0));
    const HeightSequence h(std::vector<double>(64, 2.8));
    const LossBreakdown zero = layout_objective(d, d, h, h, grid, -1.6);
    CHECK(zero.total == 0.0);
    CHECK(zero.depth == 0.0);
    CHECK(zero.height == 0.0);
    CHECK(zero.normal == 0.0);
    CHECK(zero.gradient == 0.0);

    const HeightSequence h2(std::vector<double>(64, 2.9));
    const LossBreakdown heights = layout_objective(d, d, h, h2, grid, -1.6);
    CHECK(heights.total == doctest::Approx(0.1));
    CHECK(heights.depth == 0.0);
    CHECK(heights.height == doctest::Approx(0.1));
    CHECK(heights.normal == 0.0);
    CHECK(heights.gradient == 0.0);
}

TEST_CASE("layout objective agrees with an independent implementation") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> eps(-0.05, 0.05);
    const auto grid = sample_longitudes(128);
    const std::vector<double> gt = square_depths(grid, 2.0);
    const std::vector<double> gh(128, 2.7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> pd = gt, ph = gh;
        for (double& v : pd) v += eps(rng);
        for (double& v : ph) v += eps(rng);
        const LossBreakdown got = layout_objective(DepthSequence(gt), DepthSequence(pd), HeightSequence(gh),
                                                   HeightSequence(ph), grid, -1.6);
        const oracle::Objective want = oracle::layout_objective(gt, pd, gh, ph, grid.thetas());
        CHECK(got.depth == doctest::Approx(want.depth).epsilon(1e-12));
        CHECK(got.height == doctest::Approx(want.height).epsilon(1e-12));
        CHECK(got.normal == doctest::Approx(want.normal).epsilon(1e-9));
        CHECK(got.gradient == doctest::Approx(want.gradient).epsilon(1e-9));
        CHECK(got.total == doctest::Approx(want.total()).epsilon(1e-9));
    }
}

TEST_CASE("overall objective") {
    CHECK(overall_objective(1, 2, 3, {}) == doctest::Approx(1.23));
    CHECK(overall_objective(1, 2, 3, {0.0, 0.0}) == 1.0);
    CHECK(overall_objective(0, 0, 0, {}) == 0.0);
    CHECK_THROWS_AS(overall_objective(1, 2, 3, {-0.1, 0.0}), Error);
}
