#include "layoutforge/avg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace layoutforge {

namespace {

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace

ChannelStats channel_stats(const FeatureSequence& z) {
    const std::size_t n = z.columns();
    const std::size_t d = z.channels();
    if (n < 2) {
        fail(ErrorKind::InvalidArgument, "channel_stats needs at least 2 columns");
    }
    // Welford update per channel.
    std::vector<double> mean(d, 0.0);
    std::vector<double> m2(d, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        const double count = static_cast<double>(col + 1);
        for (std::size_t c = 0; c < d; ++c) {
            const double x = z.at(col, c);
            const double delta = x - mean[c];
            mean[c] += delta / count;
            m2[c] += delta * (x - mean[c]);
        }
    }
    ChannelStats out{std::move(mean), std::vector<double>(d)};
    for (std::size_t c = 0; c < d; ++c) {
        out.std[c] = std::sqrt(std::max(0.0, m2[c]) / static_cast<double>(n));
    }
    return out;
}

double variation_loss(const FeatureSequence& z, const FeatureSequence& z_hat) {
    if (z.columns() != z_hat.columns() || z.channels() != z_hat.channels()) {
        fail(ErrorKind::InvalidArgument, "variation_loss: feature shapes differ");
    }
    const ChannelStats a = channel_stats(z);
    const ChannelStats b = channel_stats(z_hat);
    return l2_distance(a.mean, b.mean) + l2_distance(a.std, b.std);
}

ChannelStats sample_style(const StylePrior& prior, std::size_t channels) {
    if (channels < 1) {
        fail(ErrorKind::InvalidArgument, "sample_style needs at least one channel");
    }
    if (!(prior.mean_scale >= 0.0 && prior.std_scale >= 0.0)) {
        fail(ErrorKind::InvalidArgument, "style prior scales must be non-negative");
    }
    std::mt19937_64 rng(prior.seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    ChannelStats out{std::vector<double>(channels), std::vector<double>(channels)};
    for (std::size_t c = 0; c < channels; ++c) {
        out.mean[c] = prior.mean_scale * unit(rng);
        out.std[c] = std::abs(1.0 + prior.std_scale * unit(rng)) + 1e-6;
    }
    return out;
}

FeatureSequence adain_transfer(const FeatureSequence& content, const ChannelStats& style) {
    const std::size_t d = content.channels();
    if (style.mean.size() != d || style.std.size() != d) {
        fail(ErrorKind::InvalidArgument, "adain_transfer: content has " + std::to_string(d) +
                                             " channels, style has " +
                                             std::to_string(style.mean.size()));
    }
    const ChannelStats source = channel_stats(content);
    std::vector<double> out(content.data().begin(), content.data().end());
    for (std::size_t col = 0; col < content.columns(); ++col) {
        for (std::size_t c = 0; c < d; ++c) {
            if (source.std[c] < kDegenerateStd) {
                continue;
            }
            double& x = out[col * d + c];
            x = style.std[c] * ((x - source.mean[c]) / source.std[c]) + style.mean[c];
        }
    }
    return FeatureSequence(content.columns(), d, std::move(out));
}

FeatureSequence adain_transfer(const FeatureSequence& content, const FeatureSequence& style_features) {
    return adain_transfer(content, channel_stats(style_features));
}

LabeledSample stylize(const LabeledSample& sample, const ChannelStats& style) {
    return {adain_transfer(sample.features, style), sample.depths, sample.heights};
}

} // namespace layoutforge
