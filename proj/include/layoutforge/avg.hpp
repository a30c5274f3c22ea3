#pragma once

#include <cstdint>
#include <vector>

#include "layoutforge/feature_sequence.hpp"

namespace layoutforge {

struct ChannelStats {
    std::vector<double> mean;
    std::vector<double> std;
};

// Prior over synthetic styles; the sampler stands in for decoding a latent
// drawn from N(0, I).
struct StylePrior {
    double mean_scale = 1.0;
    double std_scale = 0.5;
    std::uint64_t seed = 0;
};

// Channels whose std falls below this pass through adain_transfer unchanged.
inline constexpr double kDegenerateStd = 1e-6;

/// Per-channel mean and population standard deviation over the N columns.
ChannelStats channel_stats(const FeatureSequence& z);

/// ||mu(z) - mu(z_hat)||_2 + ||sigma(z) - sigma(z_hat)||_2.
double variation_loss(const FeatureSequence& z, const FeatureSequence& z_hat);

/// mean[c] ~ N(0, mean_scale^2), std[c] = |N(1, std_scale^2)| + 1e-6.
/// Deterministic in prior.seed.
ChannelStats sample_style(const StylePrior& prior, std::size_t channels);

/// Re-normalises every channel of content to the target statistics.
FeatureSequence adain_transfer(const FeatureSequence& content, const ChannelStats& style);

/// Same as above with the target statistics taken from caller-supplied
/// style features.
FeatureSequence adain_transfer(const FeatureSequence& content, const FeatureSequence& style_features);

/// Stylises the features of a labelled sample; depth and height labels are
/// carried over unchanged.
LabeledSample stylize(const LabeledSample& sample, const ChannelStats& style);

} // namespace layoutforge
