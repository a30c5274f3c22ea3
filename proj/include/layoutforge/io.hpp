#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "layoutforge/feature_sequence.hpp"
#include "layoutforge/geometry.hpp"
#include "layoutforge/metrics.hpp"

namespace layoutforge {

inline constexpr const char* kToolVersion = "0.3.0";

struct ParseOptions {
    bool strict = false;                    // reject unknown keys instead of warning
    std::vector<std::string>* warnings = nullptr;
};

// Layout annotation JSON: {id, vertices: [[x, z], ...], camera_height,
// ceiling_height, pose: "primary" | "secondary"}.
LayoutAnnotation layout_from_json(const nlohmann::json& j, const ParseOptions& options = {});
nlohmann::json to_json(const LayoutAnnotation& layout);
LayoutAnnotation read_layout(const std::filesystem::path& path, const ParseOptions& options = {});

// Prediction of depths and heights at the N grid longitudes.
struct SequencePair {
    DepthSequence depths;
    HeightSequence heights;
};

// Optional predictions on augmented copies of the same sample, used for the
// weighted overall objective. The CSMix entry carries its own (mixed) labels.
struct MixedPrediction {
    SequencePair labels;
    SequencePair prediction;
};

struct Prediction {
    std::string id;
    SequencePair values;
    std::optional<SequencePair> avg;
    std::optional<MixedPrediction> csmix;
};

Prediction prediction_from_json(const nlohmann::json& j, const ParseOptions& options = {});
nlohmann::json to_json(const Prediction& prediction);
Prediction read_prediction(const std::filesystem::path& path, const ParseOptions& options = {});

nlohmann::json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

// "LFSQ" | u32 N | u32 D | N*D float32, all little-endian.
FeatureSequence read_feature_sequence(const std::filesystem::path& path);
void write_feature_sequence(const std::filesystem::path& path, const FeatureSequence& features);

// "LDPM" | u32 H | u32 W | H*W float32, all little-endian.
DepthMap read_depth_map(const std::filesystem::path& path);
void write_depth_map(const std::filesystem::path& path, const DepthMap& map);

std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t value);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

} // namespace layoutforge
