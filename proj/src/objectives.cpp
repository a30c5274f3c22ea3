#include "layoutforge/objectives.hpp"

#include <algorithm>
#include <string>

namespace layoutforge {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": length mismatch (" +
                                             std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace

NormalSequence::NormalSequence(std::vector<Vec3> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const Vec3& n = values_[i];
        if (n.v != 0.0 || std::abs(std::sqrt(dot(n, n)) - 1.0) > 1e-9) {
            fail(ErrorKind::InvalidArgument,
                 "normal " + std::to_string(i) + " is not a horizontal unit vector");
        }
    }
}

double l1_sequence_loss(std::span<const double> gt, std::span<const double> pred) {
    require_same_length(gt.size(), pred.size(), "l1_sequence_loss");
    if (gt.empty()) {
        fail(ErrorKind::InvalidArgument, "l1_sequence_loss: empty sequences");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        sum += std::abs(gt[i] - pred[i]);
    }
    return sum / static_cast<double>(gt.size());
}

NormalSequence wall_normals(const DepthSequence& depths, const LongitudeGrid& grid, double floor_v) {
    require_same_length(depths.size(), grid.size(), "wall_normals");
    const std::size_t n = depths.size();
    if (n < 2) {
        fail(ErrorKind::InvalidArgument, "wall_normals needs at least 2 samples");
    }
    std::vector<Vec3> normals(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const FloorPoint p = point_from_depth(grid[i], depths[i], floor_v);
        const FloorPoint q = point_from_depth(grid[j], depths[j], floor_v);
        const double dx = q.x - p.x;
        const double dz = q.z - p.z;
        const double len = std::hypot(dx, dz);
        if (len < 1e-12) {
            fail(ErrorKind::DegenerateSegment,
                 "boundary points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        }
        // Rotation by +pi/2 about v: (x, z) -> (z, -x).
        normals[i] = {dz / len, 0.0, -dx / len};
    }
    return NormalSequence(std::move(normals));
}

double normal_loss(const NormalSequence& gt, const NormalSequence& pred) {
    require_same_length(gt.size(), pred.size(), "normal_loss");
    if (gt.size() == 0) {
        fail(ErrorKind::InvalidArgument, "normal_loss: empty sequences");
    }
    // For unit vectors 1 - a.b == |a - b|^2 / 2; the squared form is exactly
    // zero for identical inputs where 1 - a.b can leave an ulp of residue.
    double sum = 0.0;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        const double dx = gt[i].x - pred[i].x;
        const double dz = gt[i].z - pred[i].z;
        sum += 0.5 * (dx * dx + dz * dz);
    }
    return sum / static_cast<double>(gt.size());
}

GradientPair sequence_gradients(const NormalSequence& normals, const DepthSequence& depths) {
    require_same_length(normals.size(), depths.size(), "sequence_gradients");
    const std::size_t n = normals.size();
    if (n < 2) {
        fail(ErrorKind::InvalidArgument, "sequence_gradients needs at least 2 samples");
    }
    GradientPair out;
    out.normal_grads.resize(n);
    out.depth_grads.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        out.normal_grads[i] = std::acos(std::clamp(dot(normals[i], normals[j]), -1.0, 1.0));
        out.depth_grads[i] = depths[j] - depths[i];
    }
    return out;
}

double gradient_loss(const GradientPair& gt, const GradientPair& pred) {
    const std::size_t n = gt.normal_grads.size();
    require_same_length(n, gt.depth_grads.size(), "gradient_loss (ground truth)");
    require_same_length(pred.normal_grads.size(), pred.depth_grads.size(), "gradient_loss (prediction)");
    require_same_length(n, pred.normal_grads.size(), "gradient_loss");
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "gradient_loss: empty sequences");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += std::abs(gt.normal_grads[i] - pred.normal_grads[i]) +
               std::abs(gt.depth_grads[i] - pred.depth_grads[i]);
    }
    return sum / static_cast<double>(n);
}

LossBreakdown layout_objective(const DepthSequence& gt_depths, const DepthSequence& pred_depths,
                               const HeightSequence& gt_heights, const HeightSequence& pred_heights,
                               const LongitudeGrid& grid, double floor_v) {
    const NormalSequence gt_normals = wall_normals(gt_depths, grid, floor_v);
    const NormalSequence pred_normals = wall_normals(pred_depths, grid, floor_v);

    LossBreakdown out;
    out.depth = l1_sequence_loss(gt_depths.values(), pred_depths.values());
    out.height = l1_sequence_loss(gt_heights.values(), pred_heights.values());
    out.normal = normal_loss(gt_normals, pred_normals);
    out.gradient = gradient_loss(sequence_gradients(gt_normals, gt_depths),
                                 sequence_gradients(pred_normals, pred_depths));
    out.total = out.depth + out.height + out.normal + out.gradient;
    return out;
}

void validate(const LossWeights& weights) {
    if (!(std::isfinite(weights.alpha) && weights.alpha >= 0.0 && std::isfinite(weights.beta) &&
          weights.beta >= 0.0)) {
        fail(ErrorKind::InvalidArgument, "loss weights must be finite and non-negative");
    }
}

double overall_objective(double l_real, double l_avg, double l_csmix, const LossWeights& weights) {
    validate(weights);
    if (!(l_real >= 0.0 && l_avg >= 0.0 && l_csmix >= 0.0)) {
        fail(ErrorKind::InvalidArgument, "overall_objective: losses must be non-negative");
    }
    return l_real + weights.alpha * l_avg + weights.beta * l_csmix;
}

} // namespace layoutforge
