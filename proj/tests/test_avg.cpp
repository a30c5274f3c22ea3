#include <doctest.h>

#include <random>

#include "layoutforge/avg.hpp"
#include "oracles.hpp"

using namespace layoutforge;

namespace {

FeatureSequence random_features(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::normal_distribution<double> g(0.3, 2.0);
    std::vector<double> v(n * d);
    for (double& x : v) x = g(rng);
    return FeatureSequence(n, d, std::move(v));
}

std::vector<double> channel(const FeatureSequence& z, std::size_t c) {
    std::vector<double> out;
    for (std::size_t col = 0; col < z.columns(); ++col) out.push_back(z.at(col, c));
    return out;
}

} // namespace

TEST_CASE("feature sequence shape checks") {
    CHECK_THROWS_AS(FeatureSequence(1, 1, {1.0}), Error);
    CHECK_THROWS_AS(FeatureSequence(2, 0, {}), Error);
    CHECK_THROWS_AS(FeatureSequence(2, 2, {1.0, 2.0, 3.0}), Error);
    CHECK_THROWS_AS(FeatureSequence(2, 1, {1.0, std::nan("")}), Error);
}

TEST_CASE("channel stats") {
    const ChannelStats s = channel_stats(FeatureSequence(2, 1, {1.0, 3.0}));
    CHECK(s.mean[0] == 2.0);
    CHECK(s.std[0] == 1.0);

    const ChannelStats c = channel_stats(FeatureSequence(3, 2, {4, 4, 4, 4, 4, 4}));
    CHECK(c.std[0] == 0.0);
    CHECK(c.std[1] == 0.0);

    std::mt19937_64 rng(3);
    const FeatureSequence z = random_features(rng, 256, 8);
    const ChannelStats r = channel_stats(z);
    for (std::size_t k = 0; k < 8; ++k) {
        const auto [mean, sd] = oracle::two_pass_stats(channel(z, k));
        CHECK(std::abs(r.mean[k] - mean) < 1e-12);
        CHECK(std::abs(r.std[k] - sd) < 1e-12);
    }
}

TEST_CASE("variation loss") {
    std::mt19937_64 rng(4);
    const FeatureSequence z = random_features(rng, 32, 5);
    CHECK(variation_loss(z, z) == 0.0);

    const FeatureSequence a(2, 2, {-1, -1, 1, 1});
    const FeatureSequence b(2, 2, {2, 3, 4, 5});
    CHECK(variation_loss(a, b) == doctest::Approx(5.0));

    std::vector<double> shifted(z.data().begin(), z.data().end());
    for (double& x : shifted) x += 1.0;
    CHECK(variation_loss(z, FeatureSequence(32, 5, shifted)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("style sampling") {
    const StylePrior prior{1.0, 0.5, 99};
    const ChannelStats a = sample_style(prior, 16);
    const ChannelStats b = sample_style(prior, 16);
    CHECK(a.mean == b.mean);
    CHECK(a.std == b.std);
    for (double s : a.std) CHECK(s > 0.0);

    const ChannelStats flat = sample_style({0.0, 0.0, 5}, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        CHECK(flat.mean[c] == 0.0);
        CHECK(flat.std[c] == 1.0 + 1e-6);
    }

    const ChannelStats many = sample_style({1.0, 0.5, 7}, 10000);
    const auto [mean, sd] = oracle::two_pass_stats(many.mean);
    CHECK(std::abs(sd * sd - 1.0) < 0.05);
    CHECK(std::abs(mean) < 0.05);

    CHECK_THROWS_AS(sample_style({-1.0, 0.5, 0}, 4), Error);
}

TEST_CASE("adain transfer") {
    const FeatureSequence z(2, 1, {1.0, 3.0});
    const FeatureSequence out = adain_transfer(z, ChannelStats{{5.0}, {3.0}});
    CHECK(out.at(0, 0) == 2.0);
    CHECK(out.at(1, 0) == 8.0);

    std::mt19937_64 rng(8);
    const FeatureSequence content = random_features(rng, 64, 6);
    const FeatureSequence same = adain_transfer(content, channel_stats(content));
    for (std::size_t i = 0; i < content.data().size(); ++i) {
        CHECK(std::abs(same.data()[i] - content.data()[i]) < 1e-9);
    }

    const FeatureSequence style_source = random_features(rng, 64, 6);
    const FeatureSequence styled = adain_transfer(content, style_source);
    const ChannelStats want = channel_stats(style_source);
    for (std::size_t c = 0; c < 6; ++c) {
        const auto [mean, sd] = oracle::two_pass_stats(channel(styled, c));
        CHECK(std::abs(mean - want.mean[c]) < 1e-6);
        CHECK(std::abs(sd - want.std[c]) < 1e-6);
    }

    // Constant channels carry no contrast to rescale and pass through.
    const FeatureSequence flat(3, 2, {1.0, 7.0, 2.0, 7.0, 3.0, 7.0});
    const FeatureSequence kept = adain_transfer(flat, ChannelStats{{0.0, 0.0}, {2.0, 2.0}});
    CHECK(kept.at(0, 1) == 7.0);
    CHECK(kept.at(2, 1) == 7.0);

    CHECK_THROWS_AS(adain_transfer(z, ChannelStats{{1.0, 2.0}, {1.0, 1.0}}), Error);
}

TEST_CASE("stylize keeps labels") {
    std::mt19937_64 rng(12);
    const LabeledSample s{random_features(rng, 8, 3), DepthSequence(std::vector<double>(8, 2.0)),
                          HeightSequence(std::vector<double>(8, 2.8))};
    const LabeledSample out = stylize(s, sample_style({}, 3));
    CHECK(out.depths == s.depths);
    CHECK(out.heights == s.heights);
    CHECK_FALSE(out.features == s.features);
}
