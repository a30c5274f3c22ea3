#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layoutforge/error.hpp"

namespace layoutforge {

inline constexpr double kPi = 3.14159265358979323846;

// A point in the horizontal floor plane. The camera sits at the origin; the
// direction of longitude theta is (sin theta, cos theta).
struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
    friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.z - a.z * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.z); }

using Polygon = std::vector<Vec2>;

// 3D point with v as the vertical (up-positive) coordinate.
struct FloorPoint {
    double x = 0.0;
    double v = 0.0;
    double z = 0.0;
};

enum class Pose { primary, secondary };

const char* to_string(Pose pose);

struct LayoutAnnotation {
    std::string id;
    Polygon vertices;
    double camera_height = 1.6;
    double ceiling_height = 2.8;
    Pose pose = Pose::primary;

    double floor_v() const { return -camera_height; }
    double ceiling_v() const { return ceiling_height - camera_height; }
};

/// Throws InconsistentAnnotation naming the first violated invariant:
/// at least 3 vertices, simple, counter-clockwise (see oriented_area),
/// camera strictly inside, 0 < camera_height < ceiling_height.
void validate(const LayoutAnnotation& layout);

class LongitudeGrid {
public:
    explicit LongitudeGrid(std::vector<double> thetas) : thetas_(std::move(thetas)) {}

    std::size_t size() const { return thetas_.size(); }
    double operator[](std::size_t i) const { return thetas_[i]; }
    std::span<const double> thetas() const { return thetas_; }

private:
    std::vector<double> thetas_;
};

// Sequence of strictly positive finite values; Tag keeps depths and heights
// from being mixed up at call sites.
template <class Tag>
class PositiveSequence {
public:
    PositiveSequence() = default;
    explicit PositiveSequence(std::vector<double> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
                fail(ErrorKind::InvalidArgument, std::string(Tag::name) + "[" + std::to_string(i) +
                                                     "] must be positive and finite");
            }
        }
    }

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }
    const std::vector<double>& vector() const { return values_; }

    friend bool operator==(const PositiveSequence&, const PositiveSequence&) = default;

private:
    std::vector<double> values_;
};

struct DepthTag { static constexpr const char* name = "depth"; };
struct HeightTag { static constexpr const char* name = "height"; };

using DepthSequence = PositiveSequence<DepthTag>;
using HeightSequence = PositiveSequence<HeightTag>;

struct BoundarySample {
    DepthSequence depths;
    HeightSequence heights;
};

/// thetas[i] = 2*pi*((i + 1) / n - 0.5), i.e. the 1-based longitude formula.
LongitudeGrid sample_longitudes(std::size_t n);

double horizon_depth(const FloorPoint& p);

FloorPoint point_from_depth(double theta, double depth, double v);

/// Distance from the origin to the nearest polygon edge hit by the ray of
/// longitude theta, or nullopt when the ray misses every edge.
std::optional<double> cast_ray(const Polygon& polygon, double theta);

/// Nearest-hit horizon depths at every grid longitude plus the constant
/// per-point room height.
BoundarySample visible_boundary(const LayoutAnnotation& layout, const LongitudeGrid& grid);

/// Inverse of the horizon-depth representation: vertex i = d_i (sin theta_i, cos theta_i).
Polygon boundary_polygon(const DepthSequence& depths, const LongitudeGrid& grid);

// Polygon helpers shared with the metrics and generator modules.

/// Signed shoelace area, positive when the vertices run in the direction of
/// increasing longitude (counter-clockwise seen from above with v up).
double oriented_area(const Polygon& polygon);

/// True when no two edges intersect except adjacent edges at their shared vertex.
bool is_simple(const Polygon& polygon);

/// Even-odd parity test; points on the boundary may go either way.
bool contains(const Polygon& polygon, Vec2 p);

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);

/// Minimum distance from p to any polygon edge.
double distance_to_boundary(const Polygon& polygon, Vec2 p);

} // namespace layoutforge
