#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "layoutforge/geometry.hpp"

namespace layoutforge {

// Equirectangular depth map in meters, row-major, width == 2 * height.
class DepthMap {
public:
    DepthMap() = default;
    DepthMap(std::size_t height, std::size_t width, std::vector<double> values);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    double at(std::size_t row, std::size_t col) const { return values_[row * width_ + col]; }
    std::span<const double> values() const { return values_; }

    friend bool operator==(const DepthMap&, const DepthMap&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<double> values_;
};

struct MetricRecord {
    double iou2d = 0.0;
    double iou3d = 0.0;
    double rmse = 0.0;
    double delta1 = 0.0;
};

// Floor footprint plus floor-to-ceiling height.
struct RoomGeometry {
    Polygon floor;
    double ceiling_height = 0.0;
};

struct OverlapArea {
    double area = 0.0;
    bool degenerate_input = false;
};

inline constexpr double kDefaultCameraHeight = 1.6;
inline constexpr double kDefaultDeltaThreshold = 1.25;

/// Absolute shoelace area; throws InvalidPolygon for non-simple input.
double polygon_area(const Polygon& poly);

/// Area of the boolean intersection of two simple polygons (convex or not).
/// Zero-area inputs give 0 with degenerate_input set.
OverlapArea polygon_intersection_area(const Polygon& p, const Polygon& q);

double iou2d(const Polygon& gt, const Polygon& pred);

/// Volume IoU of two prisms standing on a common floor.
double iou3d(const Polygon& gt, double gt_height, const Polygon& pred, double pred_height);

/// Distance along the ray of longitude theta and latitude phi to the first of
/// wall, floor (camera_height below) or ceiling, given the horizontal wall
/// depth at that longitude.
double surface_distance(double wall_depth, double phi, double camera_height, double ceiling_height);

/// Pixel (row, col) samples the far edge of its cell, like the longitude grid:
/// theta = 2 pi ((col + 1) / W - 0.5), phi = pi / 2 - pi (row + 1) / H. The
/// last row looks straight down and row H/2 - 1 lies on the horizon.
DepthMap render_depth_map(const RoomGeometry& room, std::size_t height, std::size_t width,
                          double camera_height = kDefaultCameraHeight);

double rmse(std::span<const double> pred, std::span<const double> gt);
double rmse(const DepthMap& pred, const DepthMap& gt);

/// Fraction of entries with max(pred / gt, gt / pred) < threshold.
double delta1(std::span<const double> pred, std::span<const double> gt,
              double threshold = kDefaultDeltaThreshold);
double delta1(const DepthMap& pred, const DepthMap& gt, double threshold = kDefaultDeltaThreshold);

struct EvalOptions {
    std::size_t map_height = 512;
    std::size_t map_width = 1024;
    bool horizon_only = false;
};

/// Full metric record for one prediction, both sides taken through the
/// horizon-depth representation: footprint = boundary_polygon(depths),
/// ceiling = mean height.
MetricRecord evaluate_layout(const DepthSequence& gt_depths, const HeightSequence& gt_heights,
                             const DepthSequence& pred_depths, const HeightSequence& pred_heights,
                             const LongitudeGrid& grid, double camera_height, const EvalOptions& options);

double mean_of(std::span<const double> values);

} // namespace layoutforge
