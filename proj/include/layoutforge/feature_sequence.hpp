#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "layoutforge/geometry.hpp"

namespace layoutforge {

// N x D column sequence, stored row-major by column index:
// data[column * channels + channel].
class FeatureSequence {
public:
    FeatureSequence() = default;
    FeatureSequence(std::size_t columns, std::size_t channels, std::vector<double> data);

    std::size_t columns() const { return columns_; }
    std::size_t channels() const { return channels_; }

    double at(std::size_t column, std::size_t channel) const {
        return data_[column * channels_ + channel];
    }
    std::span<const double> column(std::size_t c) const {
        return {data_.data() + c * channels_, channels_};
    }
    std::span<const double> data() const { return data_; }

    friend bool operator==(const FeatureSequence&, const FeatureSequence&) = default;

private:
    std::size_t columns_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> data_;
};

// Features with their per-column layout labels.
struct LabeledSample {
    FeatureSequence features;
    DepthSequence depths;
    HeightSequence heights;
};

} // namespace layoutforge
