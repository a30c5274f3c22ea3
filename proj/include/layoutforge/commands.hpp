#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "layoutforge/csmix.hpp"
#include "layoutforge/imbalance.hpp"
#include "layoutforge/objectives.hpp"
#include "layoutforge/synthgen.hpp"

namespace layoutforge {

enum ExitCode : int {
    kExitOk = 0,
    kExitPairing = 2,
    kExitParse = 3,
    kExitFormat = 4,
    kExitInternal = 5,
};

// Settings shared by every command.
struct RunConfig {
    std::size_t n_samples = 256;  // longitude count N
    std::size_t map_height = 512;
    std::size_t map_width = 1024;
    std::uint64_t seed = 0;
    LossWeights weights;
    bool strict = false;
    bool keep_going = false;
    bool horizon_only = false;
};

void validate(const RunConfig& config);

/// Parses "HxW" into (H, W).
std::pair<std::size_t, std::size_t> parse_resolution(const std::string& text);

struct GenCommand {
    std::filesystem::path out_dir;
    std::size_t count = 100;
    GenConfig config;
    std::optional<std::filesystem::path> labels_dir;    // prediction-format labels at N
    std::optional<std::filesystem::path> features_dir;  // stand-in feature sequences
    std::size_t feature_channels = 16;
};

struct EvalCommand {
    std::filesystem::path annotations_dir;
    std::filesystem::path predictions_dir;
    std::filesystem::path out_dir;
};

struct ReportCommand {
    std::filesystem::path metrics_csv;
    std::filesystem::path annotations_dir;
    std::filesystem::path out_dir;
    std::optional<Grouping> grouping;  // all three when empty
};

enum class AugmentMode { avg, csmix };

struct AugmentCommand {
    AugmentMode mode = AugmentMode::avg;
    std::vector<std::filesystem::path> features;  // one (avg) or two (csmix)
    std::vector<std::filesystem::path> labels;
    std::filesystem::path out_dir;
    std::optional<MixSpec> spec;                  // csmix: replay instead of sampling
    double mean_scale = 1.0;
    double std_scale = 0.5;
};

struct RenderCommand {
    std::filesystem::path input;
    bool is_prediction = false;
    std::filesystem::path output;
    std::optional<double> camera_height;  // annotation's own height, else 1.6
};

int run_gen(const RunConfig& run, const GenCommand& cmd, std::ostream& log);
int run_eval(const RunConfig& run, const EvalCommand& cmd, std::ostream& log);
int run_report(const RunConfig& run, const ReportCommand& cmd, std::ostream& log);
int run_augment(const RunConfig& run, const AugmentCommand& cmd, std::ostream& log);
int run_render(const RunConfig& run, const RenderCommand& cmd, std::ostream& log);

/// {tool, version, command, seed, config_hash} where the hash covers the
/// canonical JSON of the command configuration.
nlohmann::json provenance(const std::string& command, std::uint64_t seed, const nlohmann::json& config);
std::string provenance_comment(const nlohmann::json& prov);

/// CSV for a group report: provenance comment, header, one row per
/// non-empty group and a __macro_average__ row.
std::string report_csv(const GroupReport& report, const nlohmann::json& prov);
nlohmann::json report_json(const GroupReport& report, const nlohmann::json& prov);

std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& id, const MetricRecord& record);

/// Reads rows written by eval; comment lines are skipped.
std::vector<std::pair<std::string, MetricRecord>> read_metrics_csv(const std::filesystem::path& path);

} // namespace layoutforge
