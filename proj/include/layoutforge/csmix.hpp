#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "layoutforge/feature_sequence.hpp"

namespace layoutforge {

// Exchange window: columns [c_a, c_a + w) of sample A trade places with
// columns [c_b, c_b + w) of sample B.
struct MixSpec {
    std::size_t c_a = 0;
    std::size_t c_b = 0;
    std::size_t w = 1;

    friend bool operator==(const MixSpec&, const MixSpec&) = default;
};

// Window widths are drawn uniformly from [min_width, max_width]; a zero
// max_width means N.
struct MixSampling {
    std::size_t min_width = 1;
    std::size_t max_width = 0;
};

void validate(const MixSpec& spec, std::size_t n);

MixSpec sample_mix_spec(std::size_t n, std::uint64_t seed, const MixSampling& sampling = {});

// Where a spliced column came from: sample 0 is A, sample 1 is B.
struct ColumnSource {
    int sample = 0;
    std::size_t column = 0;

    friend bool operator==(const ColumnSource&, const ColumnSource&) = default;
};

/// Source of every column of the two spliced outputs.
std::pair<std::vector<ColumnSource>, std::vector<ColumnSource>> splice_provenance(std::size_t n,
                                                                                 const MixSpec& spec);

/// A' = a[0:c_a] + b[c_b:c_b+w] + a[c_a+w:N]
/// B' = b[0:c_b] + a[c_a:c_a+w] + b[c_b+w:N]
template <class T>
std::pair<std::vector<T>, std::vector<T>> splice(std::span<const T> a, std::span<const T> b,
                                                 const MixSpec& spec) {
    if (a.size() != b.size()) {
        fail(ErrorKind::InvalidArgument, "splice: sequences differ in length");
    }
    validate(spec, a.size());
    std::vector<T> mixed_a;
    std::vector<T> mixed_b;
    mixed_a.reserve(a.size());
    mixed_b.reserve(b.size());

    mixed_a.insert(mixed_a.end(), a.begin(), a.begin() + spec.c_a);
    mixed_a.insert(mixed_a.end(), b.begin() + spec.c_b, b.begin() + spec.c_b + spec.w);
    mixed_a.insert(mixed_a.end(), a.begin() + spec.c_a + spec.w, a.end());

    mixed_b.insert(mixed_b.end(), b.begin(), b.begin() + spec.c_b);
    mixed_b.insert(mixed_b.end(), a.begin() + spec.c_a, a.begin() + spec.c_a + spec.w);
    mixed_b.insert(mixed_b.end(), b.begin() + spec.c_b + spec.w, b.end());
    return {std::move(mixed_a), std::move(mixed_b)};
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> splice(const std::vector<T>& a, const std::vector<T>& b,
                                                 const MixSpec& spec) {
    return splice(std::span<const T>(a), std::span<const T>(b), spec);
}

/// Column splice of two feature sequences with equal shape.
std::pair<FeatureSequence, FeatureSequence> splice(const FeatureSequence& a, const FeatureSequence& b,
                                                   const MixSpec& spec);

/// Applies one spec to features, depths and heights of both samples.
std::pair<LabeledSample, LabeledSample> splice_sample(const LabeledSample& a, const LabeledSample& b,
                                                      const MixSpec& spec);

} // namespace layoutforge
