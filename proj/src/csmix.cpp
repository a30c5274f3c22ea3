#include "layoutforge/csmix.hpp"

#include <random>
#include <string>

namespace layoutforge {

void validate(const MixSpec& spec, std::size_t n) {
    if (spec.w < 1 || spec.w > n || spec.c_a > n - spec.w || spec.c_b > n - spec.w) {
        fail(ErrorKind::InvalidArgument, "mix spec (" + std::to_string(spec.c_a) + ", " +
                                             std::to_string(spec.c_b) + ", " + std::to_string(spec.w) +
                                             ") is invalid for N=" + std::to_string(n));
    }
}

MixSpec sample_mix_spec(std::size_t n, std::uint64_t seed, const MixSampling& sampling) {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "sample_mix_spec needs at least one column");
    }
    const std::size_t max_width = sampling.max_width == 0 ? n : sampling.max_width;
    if (sampling.min_width < 1 || sampling.min_width > max_width || max_width > n) {
        fail(ErrorKind::InvalidArgument, "mix width range is invalid for N=" + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    MixSpec spec;
    spec.w = std::uniform_int_distribution<std::size_t>(sampling.min_width, max_width)(rng);
    std::uniform_int_distribution<std::size_t> start(0, n - spec.w);
    spec.c_a = start(rng);
    spec.c_b = start(rng);
    return spec;
}

std::pair<std::vector<ColumnSource>, std::vector<ColumnSource>> splice_provenance(std::size_t n,
                                                                                 const MixSpec& spec) {
    std::vector<ColumnSource> a(n);
    std::vector<ColumnSource> b(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = {0, k};
        b[k] = {1, k};
    }
    return splice(a, b, spec);
}

std::pair<FeatureSequence, FeatureSequence> splice(const FeatureSequence& a, const FeatureSequence& b,
                                                   const MixSpec& spec) {
    if (a.columns() != b.columns() || a.channels() != b.channels()) {
        fail(ErrorKind::InvalidArgument, "splice: feature sequences differ in shape");
    }
    const std::size_t n = a.columns();
    const std::size_t d = a.channels();
    const auto [from_a, from_b] = splice_provenance(n, spec);

    const auto gather = [&](const std::vector<ColumnSource>& sources) {
        std::vector<double> data;
        data.reserve(n * d);
        for (const ColumnSource& src : sources) {
            const auto col = (src.sample == 0 ? a : b).column(src.column);
            data.insert(data.end(), col.begin(), col.end());
        }
        return FeatureSequence(n, d, std::move(data));
    };
    return {gather(from_a), gather(from_b)};
}

std::pair<LabeledSample, LabeledSample> splice_sample(const LabeledSample& a, const LabeledSample& b,
                                                      const MixSpec& spec) {
    const std::size_t n = a.features.columns();
    for (const LabeledSample* s : {&a, &b}) {
        if (s->features.columns() != n || s->depths.size() != n || s->heights.size() != n) {
            fail(ErrorKind::InvalidArgument,
                 "splice_sample: features, depths and heights must share one length N");
        }
    }
    auto [features_a, features_b] = splice(a.features, b.features, spec);
    auto [depths_a, depths_b] = splice(a.depths.vector(), b.depths.vector(), spec);
    auto [heights_a, heights_b] = splice(a.heights.vector(), b.heights.vector(), spec);
    return {LabeledSample{std::move(features_a), DepthSequence(std::move(depths_a)),
                          HeightSequence(std::move(heights_a))},
            LabeledSample{std::move(features_b), DepthSequence(std::move(depths_b)),
                          HeightSequence(std::move(heights_b))}};
}

} // namespace layoutforge
