#include "layoutforge/feature_sequence.hpp"

#include <cmath>
#include <string>

namespace layoutforge {

FeatureSequence::FeatureSequence(std::size_t columns, std::size_t channels, std::vector<double> data)
    : columns_(columns), channels_(channels), data_(std::move(data)) {
    if (columns_ < 2 || channels_ < 1) {
        fail(ErrorKind::InvalidArgument, "feature sequence needs N >= 2 columns and D >= 1 channels, got " +
                                             std::to_string(columns_) + "x" + std::to_string(channels_));
    }
    if (data_.size() != columns_ * channels_) {
        fail(ErrorKind::InvalidArgument, "feature data size does not match N x D");
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            fail(ErrorKind::InvalidArgument, "feature sequence contains a non-finite entry");
        }
    }
}

} // namespace layoutforge
