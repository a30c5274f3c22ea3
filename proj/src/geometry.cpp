#include "layoutforge/geometry.hpp"

#include <algorithm>
#include <limits>

namespace layoutforge {

namespace {

// Slack on the edge parameter so rays through a vertex still register a hit.
constexpr double kEdgeParamSlack = 1e-12;

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.z, b.z) <= p.z && p.z <= std::max(a.z, b.z);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    // Box rejection keeps disjoint near-collinear segments from tripping on
    // rounding noise in the orientation signs.
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.z, b.z) < std::min(c.z, d.z) || std::max(c.z, d.z) < std::min(a.z, b.z)) {
        return false;
    }
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

} // namespace

const char* to_string(Pose pose) {
    return pose == Pose::primary ? "primary" : "secondary";
}

LongitudeGrid sample_longitudes(std::size_t n) {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "longitude count must be at least 1");
    }
    std::vector<double> thetas(n);
    const double count = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        thetas[i] = 2.0 * kPi * (static_cast<double>(i + 1) / count - 0.5);
    }
    return LongitudeGrid(std::move(thetas));
}

double horizon_depth(const FloorPoint& p) {
    if (p.x == 0.0 && p.z == 0.0) {
        fail(ErrorKind::DegeneratePoint, "horizon depth undefined on the camera axis");
    }
    return std::hypot(p.x, p.z);
}

FloorPoint point_from_depth(double theta, double depth, double v) {
    if (!(depth > 0.0)) {
        fail(ErrorKind::InvalidArgument, "depth must be positive");
    }
    return {depth * std::sin(theta), v, depth * std::cos(theta)};
}

std::optional<double> cast_ray(const Polygon& polygon, double theta) {
    const Vec2 dir{std::sin(theta), std::cos(theta)};
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = polygon[i];
        const Vec2 edge = polygon[(i + 1) % n] - a;
        const double denom = cross(dir, edge);
        if (std::abs(denom) <= 1e-15 * norm(edge)) {
            continue; // parallel; a collinear edge is also caught by its neighbours
        }
        const double t = cross(a, edge) / denom;
        const double s = cross(a, dir) / denom;
        if (t > 0.0 && s >= -kEdgeParamSlack && s <= 1.0 + kEdgeParamSlack) {
            best = std::min(best, t);
        }
    }
    if (!std::isfinite(best)) {
        return std::nullopt;
    }
    return best;
}

BoundarySample visible_boundary(const LayoutAnnotation& layout, const LongitudeGrid& grid) {
    std::vector<double> depths(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto hit = cast_ray(layout.vertices, grid[i]);
        if (!hit) {
            fail(ErrorKind::InconsistentAnnotation,
                 "layout '" + layout.id + "': ray at longitude " + std::to_string(grid[i]) +
                     " hits no wall (camera outside polygon?)");
        }
        depths[i] = *hit;
    }
    return {DepthSequence(std::move(depths)),
            HeightSequence(std::vector<double>(grid.size(), layout.ceiling_height))};
}

Polygon boundary_polygon(const DepthSequence& depths, const LongitudeGrid& grid) {
    if (depths.size() != grid.size()) {
        fail(ErrorKind::InvalidArgument, "depth count " + std::to_string(depths.size()) +
                                             " does not match grid size " +
                                             std::to_string(grid.size()));
    }
    Polygon poly(depths.size());
    for (std::size_t i = 0; i < depths.size(); ++i) {
        poly[i] = {depths[i] * std::sin(grid[i]), depths[i] * std::cos(grid[i])};
    }
    return poly;
}

double oriented_area(const Polygon& polygon) {
    double twice = 0.0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[(i + 1) % n];
        twice += a.z * b.x - a.x * b.z;
    }
    return 0.5 * twice;
}

bool is_simple(const Polygon& polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[(i + 1) % n];
        if (a == b) {
            return false;
        }
        // Adjacent edges may only share their common vertex.
        const Vec2 c = polygon[(i + 2) % n];
        if (orientation(a, b, c) == 0 && dot(a - b, c - b) > 0.0) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) {
                continue;
            }
            if (segments_intersect(polygon[i], polygon[(i + 1) % n], polygon[j],
                                   polygon[(j + 1) % n])) {
                return false;
            }
        }
    }
    return true;
}

bool contains(const Polygon& polygon, Vec2 p) {
    bool inside = false;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[j];
        if ((a.z > p.z) != (b.z > p.z)) {
            const double x_cross = a.x + (p.z - a.z) / (b.z - a.z) * (b.x - a.x);
            if (p.x < x_cross) {
                inside = !inside;
            }
        }
    }
    return inside;
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

double distance_to_boundary(const Polygon& polygon, Vec2 p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, distance_to_segment(p, polygon[i], polygon[(i + 1) % n]));
    }
    return best;
}

void validate(const LayoutAnnotation& layout) {
    const auto reject = [&](const std::string& why) {
        fail(ErrorKind::InconsistentAnnotation, "layout '" + layout.id + "': " + why);
    };
    if (layout.vertices.size() < 3) {
        reject("needs at least 3 vertices");
    }
    for (const Vec2& v : layout.vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.z)) {
            reject("non-finite vertex");
        }
    }
    if (!(std::isfinite(layout.camera_height) && layout.camera_height > 0.0)) {
        reject("camera_height must be positive");
    }
    if (!(std::isfinite(layout.ceiling_height) && layout.ceiling_height > layout.camera_height)) {
        reject("ceiling_height must exceed camera_height");
    }
    if (!is_simple(layout.vertices)) {
        reject("polygon is not simple");
    }
    if (!(oriented_area(layout.vertices) > 0.0)) {
        reject("vertices are not counter-clockwise");
    }
    if (!contains(layout.vertices, {0.0, 0.0}) || distance_to_boundary(layout.vertices, {}) == 0.0) {
        reject("camera (origin) is not strictly inside the polygon");
    }
}

} // namespace layoutforge
