#pragma once

#include <span>
#include <vector>

#include "layoutforge/geometry.hpp"

namespace layoutforge {

struct Vec3 {
    double x = 0.0;
    double v = 0.0;
    double z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.v * b.v + a.z * b.z; }

// Horizontal unit wall normals, one per boundary sample.
class NormalSequence {
public:
    NormalSequence() = default;
    explicit NormalSequence(std::vector<Vec3> values);

    std::size_t size() const { return values_.size(); }
    const Vec3& operator[](std::size_t i) const { return values_[i]; }
    std::span<const Vec3> values() const { return values_; }

private:
    std::vector<Vec3> values_;
};

struct GradientPair {
    std::vector<double> normal_grads; // radians in [0, pi]
    std::vector<double> depth_grads;  // signed meters
};

struct LossWeights {
    double alpha = 0.1;
    double beta = 0.01;
};

struct LossBreakdown {
    double depth = 0.0;
    double height = 0.0;
    double normal = 0.0;
    double gradient = 0.0;
    double total = 0.0;
};

/// Mean absolute difference; used for both the depth and the height term.
double l1_sequence_loss(std::span<const double> gt, std::span<const double> pred);

/// Lifts each depth to a 3D point at height floor_v, takes the circular
/// forward difference and rotates it by +pi/2 about the vertical axis, so
/// normals face the camera for boundaries traversed in increasing longitude.
NormalSequence wall_normals(const DepthSequence& depths, const LongitudeGrid& grid, double floor_v);

/// (1/N) sum (1 - n_i . n_hat_i); zero when every pair is aligned.
double normal_loss(const NormalSequence& gt, const NormalSequence& pred);

/// Circular forward differences: angle between neighbouring normals, and
/// d_{i+1} - d_i.
GradientPair sequence_gradients(const NormalSequence& normals, const DepthSequence& depths);

double gradient_loss(const GradientPair& gt, const GradientPair& pred);

/// Unweighted sum of the depth, height, normal and gradient losses, with the
/// individual terms kept for reporting.
LossBreakdown layout_objective(const DepthSequence& gt_depths, const DepthSequence& pred_depths,
                               const HeightSequence& gt_heights, const HeightSequence& pred_heights,
                               const LongitudeGrid& grid, double floor_v);

/// l_real + alpha * l_avg + beta * l_csmix.
double overall_objective(double l_real, double l_avg, double l_csmix, const LossWeights& weights);

void validate(const LossWeights& weights);

} // namespace layoutforge
