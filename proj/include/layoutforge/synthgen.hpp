#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "layoutforge/geometry.hpp"
#include "layoutforge/imbalance.hpp"

namespace layoutforge {

using Rng = std::mt19937_64;

struct Range {
    double min = 0.0;
    double max = 0.0;
};

struct GenConfig {
    // Probability per corner bucket, in kCornerBuckets order.
    std::array<double, 7> corner_distribution{0.55, 0.05, 0.16, 0.04, 0.10, 0.03, 0.07};
    double non_manhattan_fraction = 0.15; // share of even-corner rooms that get sheared
    double secondary_fraction = 0.35;
    Range size_range{3.0, 8.0};           // extents of the base rectangle, meters
    double camera_margin = 0.4;
    Range ceiling_range{2.4, 3.2};
    double camera_height = kDefaultCameraHeight;
    double max_shear = 0.3;
    double angle_tol = kDefaultAngleTolerance;
    std::uint64_t seed = 0;
};

void validate(const GenConfig& config);

/// splitmix64 of seed and index; the per-sample seed of sample `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Axis-aligned footprint with exactly k vertices (k even, >= 4), built by
/// cutting rectangular notches from convex corners of a base rectangle.
/// Vertices run counter-clockwise in the oriented_area sense.
Polygon rectilinear_footprint(std::size_t k, const GenConfig& config, Rng& rng);

/// Rectilinear room with a camera placed for the requested pose; vertices
/// are camera-centred.
LayoutAnnotation gen_rectilinear_room(std::size_t k, const GenConfig& config, Pose pose, Rng& rng);

/// Shears a room about the camera by an angle drawn from
/// ((angle_tol + max_shear) / 2, max_shear] so at least one wall family leaves
/// both Manhattan axes. Requires 0 < max_shear < pi/4 and max_shear > angle_tol.
LayoutAnnotation gen_sheared_room(const LayoutAnnotation& base, double max_shear, Rng& rng,
                                  double angle_tol = kDefaultAngleTolerance);

/// Cuts a 45-degree chamfer across one convex corner, adding one vertex.
Polygon chamfer_corner(const Polygon& poly, Rng& rng);

/// Interior point at least `margin` from every edge. Primary poses take the
/// first feasible rejection sample; secondary poses take the feasible sample
/// closest to the walls out of several, which tends to hide parts of
/// non-convex rooms.
Vec2 place_camera(const Polygon& poly, double margin, Pose pose, Rng& rng);

/// Room number `index` of the dataset described by config.
LayoutAnnotation generate_room(const GenConfig& config, std::size_t index);

std::vector<LayoutAnnotation> generate_dataset(const GenConfig& config, std::size_t count);

/// True when some polygon vertex is hidden behind a nearer wall as seen
/// from the camera at the origin.
bool has_occlusion(const Polygon& camera_centred);

} // namespace layoutforge
