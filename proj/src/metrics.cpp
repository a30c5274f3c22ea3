#include "layoutforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

namespace layoutforge {

namespace bg = boost::geometry;

namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;

constexpr double kSnapGrid = 1e-9;

double snap(double v) { return std::round(v / kSnapGrid) * kSnapGrid; }

// Snaps to the 1e-9 grid and drops vertices that collapse onto their predecessor.
Polygon snapped(const Polygon& poly) {
    Polygon out;
    out.reserve(poly.size());
    for (const Vec2& v : poly) {
        const Vec2 s{snap(v.x), snap(v.z)};
        if (out.empty() || !(out.back() == s)) {
            out.push_back(s);
        }
    }
    while (out.size() > 1 && out.front() == out.back()) {
        out.pop_back();
    }
    return out;
}

BgPolygon to_boost(const Polygon& poly) {
    BgPolygon out;
    for (const Vec2& v : poly) {
        bg::append(out.outer(), BgPoint(v.x, v.z));
    }
    bg::correct(out);
    return out;
}

void require_same_shape(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": shape mismatch");
    }
    if (a == 0) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": empty input");
    }
}

} // namespace

DepthMap::DepthMap(std::size_t height, std::size_t width, std::vector<double> values)
    : height_(height), width_(width), values_(std::move(values)) {
    if (height_ == 0 || width_ != 2 * height_) {
        fail(ErrorKind::InvalidArgument, "depth map must be H x 2H, got " + std::to_string(height_) +
                                             "x" + std::to_string(width_));
    }
    if (values_.size() != height_ * width_) {
        fail(ErrorKind::InvalidArgument, "depth map value count does not match H x W");
    }
    for (double v : values_) {
        if (!(std::isfinite(v) && v > 0.0)) {
            fail(ErrorKind::InvalidArgument, "depth map values must be positive and finite");
        }
    }
}

double polygon_area(const Polygon& poly) {
    if (!is_simple(poly)) {
        fail(ErrorKind::InvalidPolygon, "polygon with " + std::to_string(poly.size()) +
                                            " vertices is not simple");
    }
    return std::abs(oriented_area(poly));
}

OverlapArea polygon_intersection_area(const Polygon& p, const Polygon& q) {
    const Polygon a = snapped(p);
    const Polygon b = snapped(q);
    if (a.size() < 3 || b.size() < 3 || oriented_area(a) == 0.0 || oriented_area(b) == 0.0) {
        return {0.0, true};
    }
    if (!is_simple(a) || !is_simple(b)) {
        fail(ErrorKind::InvalidPolygon, "intersection requires simple polygons");
    }
    if (p == q) {
        return {std::abs(oriented_area(p)), false};
    }
    if (a == b) {
        return {std::abs(oriented_area(a)), false};
    }
    BgMultiPolygon overlap;
    try {
        bg::intersection(to_boost(a), to_boost(b), overlap);
    } catch (const bg::exception& e) {
        fail(ErrorKind::InvalidPolygon, std::string("polygon clipping failed: ") + e.what());
    }
    return {std::max(0.0, static_cast<double>(bg::area(overlap))), false};
}

double iou2d(const Polygon& gt, const Polygon& pred) {
    return iou3d(gt, 1.0, pred, 1.0);
}

double iou3d(const Polygon& gt, double gt_height, const Polygon& pred, double pred_height) {
    if (!(gt_height > 0.0 && pred_height > 0.0)) {
        fail(ErrorKind::InvalidArgument, "prism heights must be positive");
    }
    const double area_gt = polygon_area(gt);
    const double area_pred = polygon_area(pred);
    if (area_gt == 0.0 && area_pred == 0.0) {
        fail(ErrorKind::UndefinedMetric, "IoU of two degenerate polygons");
    }
    const double overlap = polygon_intersection_area(gt, pred).area;
    const double inter = overlap * std::min(gt_height, pred_height);
    const double uni = area_gt * gt_height + area_pred * pred_height - inter;
    if (inter == uni) {
        return 1.0;
    }
    return std::clamp(inter / uni, 0.0, 1.0);
}

double surface_distance(double wall_depth, double phi, double camera_height, double ceiling_height) {
    const double horizontal = std::cos(phi);
    const double vertical = std::sin(phi);
    double best = horizontal > 0.0 ? wall_depth / horizontal : std::numeric_limits<double>::infinity();
    if (vertical < 0.0) {
        best = std::min(best, camera_height / -vertical);
    } else if (vertical > 0.0) {
        best = std::min(best, (ceiling_height - camera_height) / vertical);
    }
    return best;
}

DepthMap render_depth_map(const RoomGeometry& room, std::size_t height, std::size_t width,
                          double camera_height) {
    if (height == 0 || width != 2 * height) {
        fail(ErrorKind::InvalidArgument, "render resolution must be H x 2H");
    }
    if (!(camera_height > 0.0 && room.ceiling_height > camera_height)) {
        fail(ErrorKind::Render, "ceiling must lie above the camera");
    }
    const double h = static_cast<double>(height);
    const double w = static_cast<double>(width);

    std::vector<double> wall(width);
    for (std::size_t col = 0; col < width; ++col) {
        const double theta = 2.0 * kPi * ((static_cast<double>(col) + 1.0) / w - 0.5);
        const auto hit = cast_ray(room.floor, theta);
        if (!hit) {
            fail(ErrorKind::Render, "ray of pixel column " + std::to_string(col) +
                                        " escapes the room (all rows affected)");
        }
        wall[col] = *hit;
    }

    std::vector<double> values(height * width);
    for (std::size_t row = 0; row < height; ++row) {
        const double phi = kPi / 2.0 - kPi * (static_cast<double>(row) + 1.0) / h;
        for (std::size_t col = 0; col < width; ++col) {
            const double d = surface_distance(wall[col], phi, camera_height, room.ceiling_height);
            if (!std::isfinite(d)) {
                fail(ErrorKind::Render, "ray of pixel (" + std::to_string(row) + ", " +
                                            std::to_string(col) + ") escapes the room");
            }
            values[row * width + col] = d;
        }
    }
    return DepthMap(height, width, std::move(values));
}

double rmse(std::span<const double> pred, std::span<const double> gt) {
    require_same_shape(pred.size(), gt.size(), "rmse");
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double d = pred[i] - gt[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(pred.size()));
}

double rmse(const DepthMap& pred, const DepthMap& gt) {
    if (pred.height() != gt.height() || pred.width() != gt.width()) {
        fail(ErrorKind::InvalidArgument, "rmse: depth maps differ in shape");
    }
    return rmse(pred.values(), gt.values());
}

double delta1(std::span<const double> pred, std::span<const double> gt, double threshold) {
    require_same_shape(pred.size(), gt.size(), "delta1");
    std::size_t within = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!(pred[i] > 0.0 && gt[i] > 0.0)) {
            fail(ErrorKind::InvalidArgument, "delta1: depths must be positive");
        }
        if (std::max(pred[i] / gt[i], gt[i] / pred[i]) < threshold) {
            ++within;
        }
    }
    return static_cast<double>(within) / static_cast<double>(pred.size());
}

double delta1(const DepthMap& pred, const DepthMap& gt, double threshold) {
    if (pred.height() != gt.height() || pred.width() != gt.width()) {
        fail(ErrorKind::InvalidArgument, "delta1: depth maps differ in shape");
    }
    return delta1(pred.values(), gt.values(), threshold);
}

double mean_of(std::span<const double> values) {
    if (values.empty()) {
        fail(ErrorKind::InvalidArgument, "mean of an empty sequence");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

MetricRecord evaluate_layout(const DepthSequence& gt_depths, const HeightSequence& gt_heights,
                             const DepthSequence& pred_depths, const HeightSequence& pred_heights,
                             const LongitudeGrid& grid, double camera_height, const EvalOptions& options) {
    if (gt_heights.size() != grid.size() || pred_heights.size() != grid.size()) {
        fail(ErrorKind::InvalidArgument, "height count does not match grid size");
    }
    const RoomGeometry gt{boundary_polygon(gt_depths, grid), mean_of(gt_heights.values())};
    const RoomGeometry pred{boundary_polygon(pred_depths, grid), mean_of(pred_heights.values())};

    MetricRecord record;
    record.iou2d = iou2d(gt.floor, pred.floor);
    record.iou3d = iou3d(gt.floor, gt.ceiling_height, pred.floor, pred.ceiling_height);
    if (options.horizon_only) {
        record.rmse = rmse(pred_depths.values(), gt_depths.values());
        record.delta1 = delta1(pred_depths.values(), gt_depths.values());
    } else {
        const DepthMap gt_map = render_depth_map(gt, options.map_height, options.map_width, camera_height);
        const DepthMap pred_map =
            render_depth_map(pred, options.map_height, options.map_width, camera_height);
        record.rmse = rmse(pred_map, gt_map);
        record.delta1 = delta1(pred_map, gt_map);
    }
    return record;
}

} // namespace layoutforge
