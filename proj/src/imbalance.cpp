#include "layoutforge/imbalance.hpp"

#include <algorithm>
#include <cmath>

namespace layoutforge {

namespace {

constexpr double kQuarterTurn = kPi / 2.0;

// Wall direction folded into [0, pi/2).
double folded_direction(Vec2 edge) {
    double a = std::fmod(std::atan2(edge.z, edge.x), kQuarterTurn);
    if (a < 0.0) {
        a += kQuarterTurn;
    }
    return a >= kQuarterTurn ? 0.0 : a;
}

// Signed difference a - b on the circle of period pi/2, in [-pi/4, pi/4).
double folded_difference(double a, double b) {
    double d = std::fmod(a - b, kQuarterTurn);
    if (d < -kQuarterTurn / 2.0) {
        d += kQuarterTurn;
    } else if (d >= kQuarterTurn / 2.0) {
        d -= kQuarterTurn;
    }
    return d;
}

bool all_walls_near(const std::vector<double>& directions, double axis, double angle_tol) {
    return std::all_of(directions.begin(), directions.end(), [&](double a) {
        return std::abs(folded_difference(a, axis)) <= angle_tol;
    });
}

bool is_manhattan(const Polygon& poly, double angle_tol) {
    const std::size_t n = poly.size();
    std::vector<double> directions(n);
    std::vector<double> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 edge = poly[(i + 1) % n] - poly[i];
        directions[i] = folded_direction(edge);
        lengths[i] = norm(edge);
    }
    // Histogram vote: each wall proposes its own direction as the axis and
    // collects the length of the walls that agree with it.
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double score = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(folded_difference(directions[j], directions[i])) <= angle_tol) {
                score += lengths[j];
            }
        }
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    const double candidate = directions[best];
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = folded_difference(directions[j], candidate);
        if (std::abs(d) <= angle_tol) {
            weighted += lengths[j] * d;
            total += lengths[j];
        }
    }
    const double refined = candidate + weighted / total;
    return all_walls_near(directions, candidate, angle_tol) ||
           all_walls_near(directions, refined, angle_tol);
}

void accumulate_shares(std::vector<BucketShare>& shares, std::size_t total) {
    for (BucketShare& s : shares) {
        s.fraction = total == 0 ? 0.0 : static_cast<double>(s.count) / static_cast<double>(total);
    }
}

std::size_t index_of(const std::vector<std::string>& keys, const std::string& key) {
    return static_cast<std::size_t>(std::find(keys.begin(), keys.end(), key) - keys.begin());
}

} // namespace

const char* to_string(CornerBucket bucket) {
    switch (bucket) {
    case CornerBucket::c4: return "4";
    case CornerBucket::c5: return "5";
    case CornerBucket::c6: return "6";
    case CornerBucket::c7: return "7";
    case CornerBucket::c8: return "8";
    case CornerBucket::c9: return "9";
    case CornerBucket::c10_plus: return "10+";
    }
    return "?";
}

const char* to_string(RoomClass cls) {
    switch (cls) {
    case RoomClass::cuboid: return "cuboid";
    case RoomClass::manhattan_l: return "manhattan_l";
    case RoomClass::manhattan_g: return "manhattan_g";
    case RoomClass::non_manhattan: return "non_manhattan";
    }
    return "?";
}

const char* to_string(Grouping grouping) {
    switch (grouping) {
    case Grouping::corners: return "corners";
    case Grouping::room_type: return "room_type";
    case Grouping::pose: return "pose";
    }
    return "?";
}

Grouping parse_grouping(const std::string& name) {
    for (Grouping g : kGroupings) {
        if (name == to_string(g)) {
            return g;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown grouping '" + name + "'");
}

CornerBucket bucket_for_count(std::size_t vertices) {
    if (vertices < 4) {
        fail(ErrorKind::InvalidArgument,
             "corner count " + std::to_string(vertices) + " is below the smallest bucket (4)");
    }
    return kCornerBuckets[std::min<std::size_t>(vertices, 10) - 4];
}

CornerBucket corner_bucket(const LayoutAnnotation& layout) {
    return bucket_for_count(layout.vertices.size());
}

std::vector<double> interior_angles(const Polygon& vertices) {
    const std::size_t n = vertices.size();
    const double orientation = oriented_area(vertices) >= 0.0 ? 1.0 : -1.0;
    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 in = vertices[i] - vertices[(i + n - 1) % n];
        const Vec2 out = vertices[(i + 1) % n] - vertices[i];
        // oriented_area runs opposite to the usual x/z handedness, hence the minus.
        const double turn = std::atan2(-orientation * cross(in, out), dot(in, out));
        angles[i] = kPi - turn;
    }
    return angles;
}

RoomClass classify_room_type(const Polygon& vertices, double angle_tol) {
    if (vertices.size() == 4) {
        const auto angles = interior_angles(vertices);
        if (std::all_of(angles.begin(), angles.end(),
                        [&](double a) { return std::abs(a - kQuarterTurn) <= angle_tol; })) {
            return RoomClass::cuboid;
        }
    }
    if (!is_manhattan(vertices, angle_tol)) {
        return RoomClass::non_manhattan;
    }
    return vertices.size() == 6 ? RoomClass::manhattan_l : RoomClass::manhattan_g;
}

RoomClass classify_room_type(const LayoutAnnotation& layout, double angle_tol) {
    return classify_room_type(layout.vertices, angle_tol);
}

RoomKeys room_keys(const LayoutAnnotation& layout, double angle_tol) {
    return {corner_bucket(layout), classify_room_type(layout, angle_tol), layout.pose};
}

std::string group_key(const RoomKeys& keys, Grouping grouping) {
    switch (grouping) {
    case Grouping::corners: return to_string(keys.corners);
    case Grouping::room_type: return to_string(keys.room_type);
    case Grouping::pose: return to_string(keys.pose);
    }
    return {};
}

std::vector<std::string> group_keys(Grouping grouping) {
    std::vector<std::string> keys;
    switch (grouping) {
    case Grouping::corners:
        for (CornerBucket b : kCornerBuckets) keys.emplace_back(to_string(b));
        break;
    case Grouping::room_type:
        for (RoomClass c : kRoomClasses) keys.emplace_back(to_string(c));
        break;
    case Grouping::pose:
        for (Pose p : kPoses) keys.emplace_back(to_string(p));
        break;
    }
    return keys;
}

void MetricSums::add(const MetricRecord& r) {
    ++count;
    iou2d += r.iou2d;
    iou3d += r.iou3d;
    rmse += r.rmse;
    delta1 += r.delta1;
}

void MetricSums::merge(const MetricSums& other) {
    count += other.count;
    iou2d += other.iou2d;
    iou3d += other.iou3d;
    rmse += other.rmse;
    delta1 += other.delta1;
}

MetricRecord MetricSums::mean() const {
    if (count == 0) {
        fail(ErrorKind::InvalidArgument, "mean of an empty group");
    }
    const double c = static_cast<double>(count);
    return {iou2d / c, iou3d / c, rmse / c, delta1 / c};
}

GroupReport group_metrics(std::span<const KeyedRecord> records, Grouping grouping) {
    if (records.empty()) {
        fail(ErrorKind::InvalidArgument, "group_metrics needs at least one record");
    }
    const std::vector<std::string> keys = group_keys(grouping);
    std::vector<MetricSums> sums(keys.size());
    MetricSums all;
    for (const KeyedRecord& r : records) {
        sums[index_of(keys, group_key(r.keys, grouping))].add(r.metrics);
        all.add(r.metrics);
    }

    GroupReport report;
    report.grouping = grouping;
    report.total = records.size();
    report.micro_average = all.mean();
    MetricSums of_means;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (sums[k].count == 0) {
            report.empty_groups.push_back(keys[k]);
            continue;
        }
        const MetricRecord mean = sums[k].mean();
        report.groups.push_back({keys[k], sums[k].count, mean});
        of_means.add(mean);
    }
    report.macro_average = of_means.mean();
    return report;
}

DistributionStats distribution_stats(std::span<const RoomKeys> keys) {
    if (keys.empty()) {
        fail(ErrorKind::InvalidArgument, "distribution_stats needs at least one layout");
    }
    DistributionStats out;
    out.total = keys.size();
    const auto tally = [&](Grouping grouping, std::vector<BucketShare>& shares) {
        const std::vector<std::string> names = group_keys(grouping);
        for (const std::string& name : names) {
            shares.push_back({name, 0, 0.0});
        }
        for (const RoomKeys& k : keys) {
            ++shares[index_of(names, group_key(k, grouping))].count;
        }
        accumulate_shares(shares, out.total);
    };
    tally(Grouping::corners, out.corners);
    tally(Grouping::room_type, out.room_type);
    tally(Grouping::pose, out.pose);
    return out;
}

DistributionStats distribution_stats(std::span<const LayoutAnnotation> layouts, double angle_tol) {
    std::vector<RoomKeys> keys;
    keys.reserve(layouts.size());
    for (const LayoutAnnotation& l : layouts) {
        keys.push_back(room_keys(l, angle_tol));
    }
    return distribution_stats(std::span<const RoomKeys>(keys));
}

} // namespace layoutforge
