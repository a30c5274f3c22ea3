#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "layoutforge/geometry.hpp"
#include "layoutforge/metrics.hpp"

namespace layoutforge {

// Corner-count buckets 4, 5, ..., 9 and "10+".
enum class CornerBucket { c4, c5, c6, c7, c8, c9, c10_plus };
inline constexpr std::array kCornerBuckets{CornerBucket::c4, CornerBucket::c5, CornerBucket::c6,
                                           CornerBucket::c7, CornerBucket::c8, CornerBucket::c9,
                                           CornerBucket::c10_plus};

enum class RoomClass { cuboid, manhattan_l, manhattan_g, non_manhattan };
inline constexpr std::array kRoomClasses{RoomClass::cuboid, RoomClass::manhattan_l,
                                         RoomClass::manhattan_g, RoomClass::non_manhattan};

inline constexpr std::array kPoses{Pose::primary, Pose::secondary};

enum class Grouping { corners, room_type, pose };
inline constexpr std::array kGroupings{Grouping::corners, Grouping::room_type, Grouping::pose};

inline constexpr double kDefaultAngleTolerance = 0.035;

const char* to_string(CornerBucket bucket);
const char* to_string(RoomClass cls);
const char* to_string(Grouping grouping);
Grouping parse_grouping(const std::string& name);

/// Smallest bucket that holds the given vertex count (>= 10 maps to 10+).
CornerBucket bucket_for_count(std::size_t vertices);

CornerBucket corner_bucket(const LayoutAnnotation& layout);

/// cuboid: 4 vertices with every interior angle within angle_tol of pi/2.
/// Manhattan: every wall within angle_tol of one of two orthogonal axes,
/// the axes fit from the wall directions modulo pi/2. manhattan_l is the
/// 6-vertex (L-shaped) case, manhattan_g every other Manhattan non-cuboid.
RoomClass classify_room_type(const Polygon& vertices, double angle_tol = kDefaultAngleTolerance);
RoomClass classify_room_type(const LayoutAnnotation& layout, double angle_tol = kDefaultAngleTolerance);

/// Interior angles in radians, one per vertex; they sum to (n - 2) pi.
std::vector<double> interior_angles(const Polygon& vertices);

// The three grouping keys of one room.
struct RoomKeys {
    CornerBucket corners = CornerBucket::c4;
    RoomClass room_type = RoomClass::cuboid;
    Pose pose = Pose::primary;
};

RoomKeys room_keys(const LayoutAnnotation& layout, double angle_tol = kDefaultAngleTolerance);

std::string group_key(const RoomKeys& keys, Grouping grouping);

/// All keys of a grouping in report order.
std::vector<std::string> group_keys(Grouping grouping);

struct KeyedRecord {
    RoomKeys keys;
    MetricRecord metrics;
};

struct GroupEntry {
    std::string key;
    std::size_t count = 0;
    MetricRecord mean;
};

struct GroupReport {
    Grouping grouping = Grouping::corners;
    std::vector<GroupEntry> groups;         // non-empty groups in report order
    std::vector<std::string> empty_groups;  // omitted keys
    MetricRecord macro_average;             // unweighted mean of group means
    MetricRecord micro_average;             // mean over all records
    std::size_t total = 0;
};

// Running metric sums; merge is associative and commutative.
struct MetricSums {
    std::size_t count = 0;
    double iou2d = 0.0;
    double iou3d = 0.0;
    double rmse = 0.0;
    double delta1 = 0.0;

    void add(const MetricRecord& r);
    void merge(const MetricSums& other);
    MetricRecord mean() const;
};

GroupReport group_metrics(std::span<const KeyedRecord> records, Grouping grouping);

struct BucketShare {
    std::string key;
    std::size_t count = 0;
    double fraction = 0.0;
};

struct DistributionStats {
    std::size_t total = 0;
    std::vector<BucketShare> corners;
    std::vector<BucketShare> room_type;
    std::vector<BucketShare> pose;
};

/// Counts and fractions per bucket for all three groupings; every key of a
/// grouping is listed, including zero counts.
DistributionStats distribution_stats(std::span<const LayoutAnnotation> layouts,
                                     double angle_tol = kDefaultAngleTolerance);
DistributionStats distribution_stats(std::span<const RoomKeys> keys);

} // namespace layoutforge
