#include "layoutforge/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace layoutforge {

namespace {

constexpr int kRetryBudget = 100;
constexpr int kPlacementSamples = 1000;
constexpr int kSecondaryCandidates = 24;
constexpr double kMinWall = 0.3;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec2 unit(Vec2 v) {
    const double n = norm(v);
    return {v.x / n, v.z / n};
}

// Convex corner in the oriented_area sense (see interior_angles).
bool is_convex_corner(const Polygon& poly, std::size_t i) {
    const std::size_t n = poly.size();
    const Vec2 in = poly[i] - poly[(i + n - 1) % n];
    const Vec2 out = poly[(i + 1) % n] - poly[i];
    return cross(in, out) < 0.0;
}

// Replaces vertex i by the given points.
Polygon replace_vertex(const Polygon& poly, std::size_t i, std::initializer_list<Vec2> with) {
    Polygon out(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), with);
    out.insert(out.end(), poly.begin() + static_cast<std::ptrdiff_t>(i) + 1, poly.end());
    return out;
}

bool inside_box(Vec2 p, Vec2 a, Vec2 b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.z, b.z) <= p.z &&
           p.z <= std::max(a.z, b.z);
}

Polygon translated(const Polygon& poly, Vec2 offset) {
    Polygon out(poly.size());
    std::transform(poly.begin(), poly.end(), out.begin(), [&](Vec2 v) { return v - offset; });
    return out;
}

LayoutAnnotation annotate(const Polygon& footprint, const GenConfig& config, Pose pose, Rng& rng) {
    const Vec2 camera = place_camera(footprint, config.camera_margin, pose, rng);
    LayoutAnnotation room;
    room.vertices = translated(footprint, camera);
    room.camera_height = config.camera_height;
    room.ceiling_height = uniform(rng, config.ceiling_range.min, config.ceiling_range.max);
    room.pose = pose;
    return room;
}

} // namespace

void validate(const GenConfig& config) {
    const double total = std::accumulate(config.corner_distribution.begin(),
                                         config.corner_distribution.end(), 0.0);
    const bool probabilities_ok =
        std::all_of(config.corner_distribution.begin(), config.corner_distribution.end(),
                    [](double p) { return p >= 0.0; }) &&
        std::abs(total - 1.0) <= 1e-9;
    if (!probabilities_ok) {
        fail(ErrorKind::InvalidArgument, "corner distribution must be non-negative and sum to 1");
    }
    if (!(config.non_manhattan_fraction >= 0.0 && config.non_manhattan_fraction <= 1.0) ||
        !(config.secondary_fraction >= 0.0 && config.secondary_fraction <= 1.0)) {
        fail(ErrorKind::InvalidArgument, "fractions must lie in [0, 1]");
    }
    if (!(config.camera_margin > 0.0)) {
        fail(ErrorKind::InvalidArgument, "camera margin must be positive");
    }
    if (!(config.size_range.min > 2.0 * config.camera_margin &&
          config.size_range.max >= config.size_range.min)) {
        fail(ErrorKind::InvalidArgument, "size range must exceed twice the camera margin");
    }
    if (!(config.camera_height > 0.0 && config.ceiling_range.min > config.camera_height &&
          config.ceiling_range.max >= config.ceiling_range.min)) {
        fail(ErrorKind::InvalidArgument, "ceiling range must lie above the camera height");
    }
    if (!(config.max_shear > config.angle_tol && config.max_shear < kPi / 4.0)) {
        fail(ErrorKind::InvalidArgument, "max shear must lie in (angle_tol, pi/4)");
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Polygon rectilinear_footprint(std::size_t k, const GenConfig& config, Rng& rng) {
    if (k < 4 || k % 2 != 0) {
        fail(ErrorKind::InvalidArgument, "rectilinear rooms need an even corner count >= 4");
    }
    const double width = uniform(rng, config.size_range.min, config.size_range.max);
    const double depth = uniform(rng, config.size_range.min, config.size_range.max);
    Polygon poly{{0.0, 0.0}, {0.0, depth}, {width, depth}, {width, 0.0}};

    int budget = kRetryBudget;
    while (poly.size() < k) {
        if (budget-- <= 0) {
            fail(ErrorKind::Generation, "notch budget exhausted building a " + std::to_string(k) +
                                            "-corner room");
        }
        const std::size_t n = poly.size();
        const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (!is_convex_corner(poly, i)) {
            continue;
        }
        const Vec2 v = poly[i];
        const Vec2 prev = poly[(i + n - 1) % n];
        const Vec2 next = poly[(i + 1) % n];
        const double len_prev = norm(prev - v);
        const double len_next = norm(next - v);
        const double a = uniform(rng, 0.25, 0.6) * len_prev;
        const double b = uniform(rng, 0.25, 0.6) * len_next;
        if (a < kMinWall || b < kMinWall || len_prev - a < kMinWall || len_next - b < kMinWall) {
            continue;
        }
        const Vec2 v1 = v + a * unit(prev - v);
        const Vec2 v3 = v + b * unit(next - v);
        const Vec2 v2 = v1 + (v3 - v);
        bool blocked = false;
        for (std::size_t j = 0; j < n && !blocked; ++j) {
            blocked = j != i && inside_box(poly[j], v, v2);
        }
        if (blocked) {
            continue;
        }
        Polygon candidate = replace_vertex(poly, i, {v1, v2, v3});
        if (is_simple(candidate)) {
            poly = std::move(candidate);
        }
    }
    return poly;
}

Polygon chamfer_corner(const Polygon& poly, Rng& rng) {
    const std::size_t n = poly.size();
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (!is_convex_corner(poly, i)) {
            continue;
        }
        const Vec2 v = poly[i];
        const Vec2 prev = poly[(i + n - 1) % n];
        const Vec2 next = poly[(i + 1) % n];
        const double shortest = std::min(norm(prev - v), norm(next - v));
        const double cut = uniform(rng, 0.2, 0.45) * shortest;
        if (cut < kMinWall / 2.0) {
            continue;
        }
        Polygon candidate = replace_vertex(poly, i, {v + cut * unit(prev - v), v + cut * unit(next - v)});
        if (is_simple(candidate)) {
            return candidate;
        }
    }
    fail(ErrorKind::Generation, "no corner admits a chamfer");
}

Vec2 place_camera(const Polygon& poly, double margin, Pose pose, Rng& rng) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_z = min_x;
    double max_x = -min_x;
    double max_z = -min_x;
    for (const Vec2& v : poly) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_z = std::min(min_z, v.z);
        max_z = std::max(max_z, v.z);
    }
    const int wanted = pose == Pose::primary ? 1 : kSecondaryCandidates;
    int found = 0;
    Vec2 best{};
    double best_clearance = std::numeric_limits<double>::infinity();
    for (int s = 0; s < kPlacementSamples && found < wanted; ++s) {
        const Vec2 p{uniform(rng, min_x, max_x), uniform(rng, min_z, max_z)};
        if (!contains(poly, p)) {
            continue;
        }
        const double clearance = distance_to_boundary(poly, p);
        if (clearance < margin) {
            continue;
        }
        ++found;
        if (clearance < best_clearance) {
            best_clearance = clearance;
            best = p;
        }
    }
    if (found == 0) {
        fail(ErrorKind::Placement, "no interior point keeps the camera margin");
    }
    return best;
}

LayoutAnnotation gen_rectilinear_room(std::size_t k, const GenConfig& config, Pose pose, Rng& rng) {
    return annotate(rectilinear_footprint(k, config, rng), config, pose, rng);
}

LayoutAnnotation gen_sheared_room(const LayoutAnnotation& base, double max_shear, Rng& rng,
                                  double angle_tol) {
    if (!(max_shear > 0.0 && max_shear < kPi / 4.0)) {
        fail(ErrorKind::InvalidArgument, "max_shear must lie in (0, pi/4)");
    }
    if (!(max_shear > angle_tol)) {
        fail(ErrorKind::Generation, "max_shear does not exceed the Manhattan tolerance");
    }
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        const double angle = uniform(rng, 0.5 * (angle_tol + max_shear), max_shear);
        const double slope = std::tan(angle) * (std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0);
        const bool along_x = std::bernoulli_distribution(0.5)(rng);
        LayoutAnnotation room = base;
        for (Vec2& v : room.vertices) {
            if (along_x) {
                v.x += slope * v.z;
            } else {
                v.z += slope * v.x;
            }
        }
        if (is_simple(room.vertices) && classify_room_type(room, angle_tol) == RoomClass::non_manhattan) {
            return room;
        }
    }
    fail(ErrorKind::Generation, "shear did not produce a simple non-Manhattan room");
}

bool has_occlusion(const Polygon& camera_centred) {
    for (const Vec2& v : camera_centred) {
        const double dist = norm(v);
        const auto hit = cast_ray(camera_centred, std::atan2(v.x, v.z));
        if (hit && *hit < dist - 1e-9 * std::max(1.0, dist)) {
            return true;
        }
    }
    return false;
}

LayoutAnnotation generate_room(const GenConfig& config, std::size_t index) {
    validate(config);
    Rng rng(derive_seed(config.seed, index));
    std::discrete_distribution<std::size_t> bucket_dist(config.corner_distribution.begin(),
                                                        config.corner_distribution.end());
    const CornerBucket bucket = kCornerBuckets[bucket_dist(rng)];
    std::size_t k = static_cast<std::size_t>(bucket) + 4;
    if (bucket == CornerBucket::c10_plus) {
        k = std::uniform_int_distribution<std::size_t>(10, 12)(rng);
    }
    const Pose pose = std::bernoulli_distribution(config.secondary_fraction)(rng) ? Pose::secondary
                                                                                  : Pose::primary;
    const bool shear = k % 2 == 0 && std::bernoulli_distribution(config.non_manhattan_fraction)(rng);

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        try {
            LayoutAnnotation room;
            if (k % 2 == 0) {
                room = gen_rectilinear_room(k, config, pose, rng);
                if (shear) {
                    room = gen_sheared_room(room, config.max_shear, rng, config.angle_tol);
                }
            } else {
                room = annotate(chamfer_corner(rectilinear_footprint(k - 1, config, rng), rng), config,
                                pose, rng);
            }
            char id[32];
            std::snprintf(id, sizeof id, "room_%05zu", index);
            room.id = id;
            validate(room);
            return room;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Generation && e.kind() != ErrorKind::Placement &&
                e.kind() != ErrorKind::InconsistentAnnotation) {
                throw;
            }
        }
    }
    fail(ErrorKind::Generation, "room " + std::to_string(index) + ": retry budget exhausted");
}

std::vector<LayoutAnnotation> generate_dataset(const GenConfig& config, std::size_t count) {
    std::vector<LayoutAnnotation> rooms;
    rooms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        rooms.push_back(generate_room(config, i));
    }
    return rooms;
}

} // namespace layoutforge
