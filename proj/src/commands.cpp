#include "layoutforge/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "layoutforge/avg.hpp"
#include "layoutforge/io.hpp"
#include "layoutforge/metrics.hpp"
#include "layoutforge/parallel.hpp"

namespace layoutforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Samples evaluated between two flushes of the per-sample outputs.
constexpr std::size_t kEvalChunk = 64;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::Format: return kExitFormat;
    default: return kExitInternal;
    }
}

// Parse beats pairing beats internal when several kinds of failure occur.
int combine_exit(int current, int next) {
    const auto rank = [](int code) {
        switch (code) {
        case kExitParse: return 4;
        case kExitFormat: return 3;
        case kExitPairing: return 2;
        case kExitInternal: return 1;
        default: return 0;
        }
    };
    return rank(next) > rank(current) ? next : current;
}

std::vector<fs::path> list_json(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        fail(ErrorKind::Parse, dir.string() + ": not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            entry.path().filename() != "manifest.json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

json run_config_json(const RunConfig& run) {
    return {{"n", run.n_samples},
            {"resolution", {run.map_height, run.map_width}},
            {"seed", run.seed},
            {"alpha", run.weights.alpha},
            {"beta", run.weights.beta},
            {"strict", run.strict},
            {"horizon_only", run.horizon_only}};
}

json gen_config_json(const GenConfig& c) {
    json dist = json::object();
    for (std::size_t b = 0; b < kCornerBuckets.size(); ++b) {
        dist[to_string(kCornerBuckets[b])] = c.corner_distribution[b];
    }
    return {{"corner_distribution", dist},
            {"non_manhattan_fraction", c.non_manhattan_fraction},
            {"secondary_fraction", c.secondary_fraction},
            {"size_range", {c.size_range.min, c.size_range.max}},
            {"camera_margin", c.camera_margin},
            {"ceiling_range", {c.ceiling_range.min, c.ceiling_range.max}},
            {"camera_height", c.camera_height},
            {"max_shear", c.max_shear},
            {"angle_tol", c.angle_tol},
            {"seed", c.seed}};
}

json distribution_json(const DistributionStats& stats) {
    const auto shares = [](const std::vector<BucketShare>& v) {
        json out = json::array();
        for (const BucketShare& s : v) {
            out.push_back({{"key", s.key}, {"count", s.count}, {"fraction", s.fraction}});
        }
        return out;
    };
    return {{"total", stats.total},
            {"corners", shares(stats.corners)},
            {"room_type", shares(stats.room_type)},
            {"pose", shares(stats.pose)}};
}

json metric_json(const MetricRecord& r) {
    return {{"iou2d", r.iou2d}, {"iou3d", r.iou3d}, {"rmse", r.rmse}, {"delta1", r.delta1}};
}

void write_group_reports(const fs::path& out_dir, std::span<const KeyedRecord> records,
                         const std::vector<Grouping>& groupings, const json& prov) {
    for (Grouping g : groupings) {
        const GroupReport report = group_metrics(records, g);
        const std::string stem = std::string("report_") + to_string(g);
        write_text(out_dir / (stem + ".csv"), report_csv(report, prov));
        write_json(out_dir / (stem + ".json"), report_json(report, prov));
    }
}

// Deterministic stand-in for extractor output: each channel is a fixed
// mixture of the depth and height labels plus seeded noise.
FeatureSequence stand_in_features(const BoundarySample& labels, std::size_t channels, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> noise(0.0, 0.05);
    const std::size_t n = labels.depths.size();
    std::vector<double> data(n * channels);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t c = 0; c < channels; ++c) {
            const double k = static_cast<double>(c);
            data[col * channels + c] = labels.depths[col] * std::cos(0.7 * k) +
                                       labels.heights[col] * std::sin(0.3 * k) + noise(rng);
        }
    }
    return FeatureSequence(n, channels, std::move(data));
}

struct SampleOutcome {
    std::optional<MetricRecord> metrics;
    json losses;
    std::string error;
    int exit = kExitOk;
};

SampleOutcome evaluate_sample(const LayoutAnnotation& layout, const Prediction& pred,
                              const LongitudeGrid& grid, const RunConfig& run) {
    SampleOutcome out;
    try {
        if (pred.values.depths.size() != grid.size()) {
            fail(ErrorKind::Parse, "prediction '" + pred.id + "' has " +
                                       std::to_string(pred.values.depths.size()) +
                                       " samples, expected N=" + std::to_string(grid.size()));
        }
        const BoundarySample gt = visible_boundary(layout, grid);
        const double floor_v = layout.floor_v();
        const LossBreakdown real = layout_objective(gt.depths, pred.values.depths, gt.heights,
                                                    pred.values.heights, grid, floor_v);
        double l_avg = 0.0;
        double l_csmix = 0.0;
        out.losses = {{"id", layout.id},       {"L_d", real.depth},    {"L_h", real.height},
                      {"L_n", real.normal},    {"L_g", real.gradient}, {"total", real.total}};
        if (pred.avg) {
            l_avg = layout_objective(gt.depths, pred.avg->depths, gt.heights, pred.avg->heights, grid,
                                     floor_v)
                        .total;
            out.losses["L_avg"] = l_avg;
        }
        if (pred.csmix) {
            const auto& c = *pred.csmix;
            l_csmix = layout_objective(c.labels.depths, c.prediction.depths, c.labels.heights,
                                       c.prediction.heights, grid, floor_v)
                          .total;
            out.losses["L_csmix"] = l_csmix;
        }
        out.losses["overall"] = overall_objective(real.total, l_avg, l_csmix, run.weights);

        EvalOptions options;
        options.map_height = run.map_height;
        options.map_width = run.map_width;
        options.horizon_only = run.horizon_only;
        out.metrics = evaluate_layout(gt.depths, gt.heights, pred.values.depths, pred.values.heights,
                                      grid, layout.camera_height, options);
    } catch (const Error& e) {
        out.error = layout.id + ": " + e.what();
        out.exit = exit_code_for(e.kind());
    } catch (const std::exception& e) {
        out.error = layout.id + ": " + e.what();
        out.exit = kExitInternal;
    }
    return out;
}

} // namespace

void validate(const RunConfig& config) {
    if (config.n_samples < 2) {
        fail(ErrorKind::InvalidArgument, "--n must be at least 2");
    }
    if (config.map_height == 0 || config.map_width != 2 * config.map_height) {
        fail(ErrorKind::InvalidArgument, "--resolution must be HxW with W = 2H");
    }
    validate(config.weights);
}

std::pair<std::size_t, std::size_t> parse_resolution(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument(text);
        }
        std::size_t used = 0;
        const std::string h_text = text.substr(0, x);
        const std::string w_text = text.substr(x + 1);
        const unsigned long h = std::stoul(h_text, &used);
        if (used != h_text.size()) throw std::invalid_argument(text);
        const unsigned long w = std::stoul(w_text, &used);
        if (used != w_text.size()) throw std::invalid_argument(text);
        return {h, w};
    } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidArgument, "resolution '" + text + "' is not of the form HxW");
    }
}

json provenance(const std::string& command, std::uint64_t seed, const json& config) {
    return {{"tool", "layoutforge"},
            {"version", kToolVersion},
            {"command", command},
            {"seed", seed},
            {"config_hash", hex64(fnv1a64(config.dump()))}};
}

std::string provenance_comment(const json& prov) {
    return "# " + prov.at("tool").get<std::string>() + " " + prov.at("version").get<std::string>() +
           " command=" + prov.at("command").get<std::string>() +
           " seed=" + std::to_string(prov.at("seed").get<std::uint64_t>()) +
           " config=" + prov.at("config_hash").get<std::string>() + "\n";
}

std::string metrics_csv_header() { return "id,iou2d,iou3d,rmse,delta1\n"; }

std::string metrics_csv_row(const std::string& id, const MetricRecord& r) {
    return id + "," + format_double(r.iou2d) + "," + format_double(r.iou3d) + "," +
           format_double(r.rmse) + "," + format_double(r.delta1) + "\n";
}

std::string report_csv(const GroupReport& report, const json& prov) {
    std::string out = provenance_comment(prov);
    out += "group,count,iou2d,iou3d,rmse,delta1\n";
    for (const GroupEntry& g : report.groups) {
        out += metrics_csv_row(g.key + "," + std::to_string(g.count), g.mean);
    }
    out += metrics_csv_row("__macro_average__," + std::to_string(report.total), report.macro_average);
    return out;
}

json report_json(const GroupReport& report, const json& prov) {
    json groups = json::array();
    for (const GroupEntry& g : report.groups) {
        json entry = metric_json(g.mean);
        entry["group"] = g.key;
        entry["count"] = g.count;
        groups.push_back(std::move(entry));
    }
    return {{"provenance", prov},
            {"grouping", to_string(report.grouping)},
            {"total", report.total},
            {"groups", std::move(groups)},
            {"empty_groups", report.empty_groups},
            {"macro_average", metric_json(report.macro_average)},
            {"micro_average", metric_json(report.micro_average)}};
}

std::vector<std::pair<std::string, MetricRecord>> read_metrics_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Parse, path.string() + ": cannot open");
    }
    std::vector<std::pair<std::string, MetricRecord>> rows;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            if (line + "\n" != metrics_csv_header()) {
                fail(ErrorKind::Parse, path.string() + ": unexpected header '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells.size() != 5) {
            fail(ErrorKind::Parse, path.string() + ":" + std::to_string(line_no) + ": expected 5 columns");
        }
        try {
            rows.push_back({cells[0],
                            {std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
                             std::stod(cells[4])}});
        } catch (const std::logic_error&) {
            fail(ErrorKind::Parse, path.string() + ":" + std::to_string(line_no) + ": bad number");
        }
    }
    return rows;
}

int run_gen(const RunConfig& run, const GenCommand& cmd, std::ostream& log) {
    try {
        validate(run);
        GenConfig config = cmd.config;
        config.seed = run.seed;
        validate(config);
        fs::create_directories(cmd.out_dir);
        if (cmd.labels_dir) fs::create_directories(*cmd.labels_dir);
        if (cmd.features_dir) fs::create_directories(*cmd.features_dir);

        std::vector<std::optional<LayoutAnnotation>> rooms(cmd.count);
        std::vector<std::string> errors(cmd.count);
        parallel_for(cmd.count, worker_count(), [&](std::size_t i) {
            try {
                rooms[i] = generate_room(config, i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
        for (const std::string& e : errors) {
            if (!e.empty()) {
                log << "gen: " << e << "\n";
                return kExitInternal;
            }
        }

        json cfg = run_config_json(run);
        cfg["generator"] = gen_config_json(config);
        cfg["count"] = cmd.count;
        cfg["feature_channels"] = cmd.features_dir ? cmd.feature_channels : 0;
        const json prov = provenance("gen", run.seed, cfg);
        const LongitudeGrid grid = sample_longitudes(run.n_samples);

        json files = json::array();
        std::vector<LayoutAnnotation> layouts;
        layouts.reserve(cmd.count);
        for (std::size_t i = 0; i < cmd.count; ++i) {
            const LayoutAnnotation& room = *rooms[i];
            const std::string name = room.id + ".json";
            write_json(cmd.out_dir / name, to_json(room));
            files.push_back(name);
            if (cmd.labels_dir || cmd.features_dir) {
                const BoundarySample labels = visible_boundary(room, grid);
                if (cmd.labels_dir) {
                    write_json(*cmd.labels_dir / name,
                               to_json(Prediction{room.id, {labels.depths, labels.heights}, {}, {}}));
                }
                if (cmd.features_dir) {
                    write_feature_sequence(*cmd.features_dir / (room.id + ".lfsq"),
                                           stand_in_features(labels, cmd.feature_channels,
                                                             derive_seed(run.seed ^ 0x5eed5eedULL, i)));
                }
            }
            layouts.push_back(room);
        }
        write_json(cmd.out_dir / "manifest.json",
                   {{"provenance", prov},
                    {"config", cfg},
                    {"rooms", files},
                    {"distribution", distribution_json(distribution_stats(
                                         std::span<const LayoutAnnotation>(layouts), config.angle_tol))}});
        log << "gen: wrote " << cmd.count << " rooms to " << cmd.out_dir.string() << "\n";
        return kExitOk;
    } catch (const Error& e) {
        log << "gen: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        log << "gen: " << e.what() << "\n";
        return kExitInternal;
    }
}

int run_eval(const RunConfig& run, const EvalCommand& cmd, std::ostream& log) {
    int exit = kExitOk;
    try {
        validate(run);
        std::vector<std::string> warnings;
        const ParseOptions parse{run.strict, &warnings};

        // Parse everything first; failures are reported per file.
        std::map<std::string, LayoutAnnotation> layouts;
        std::map<std::string, Prediction> predictions;
        std::vector<std::string> errors;
        const auto note = [&](int code, const std::string& msg) {
            errors.push_back(msg);
            exit = combine_exit(exit, code);
        };
        for (const fs::path& p : list_json(cmd.annotations_dir)) {
            try {
                LayoutAnnotation l = read_layout(p, parse);
                const std::string id = l.id;
                if (!layouts.emplace(id, std::move(l)).second) {
                    note(kExitPairing, p.string() + ": duplicate annotation id '" + id + "'");
                }
            } catch (const Error& e) {
                note(exit_code_for(e.kind()), e.what());
            }
        }
        for (const fs::path& p : list_json(cmd.predictions_dir)) {
            try {
                Prediction pr = read_prediction(p, parse);
                const std::string id = pr.id;
                if (!predictions.emplace(id, std::move(pr)).second) {
                    note(kExitPairing, p.string() + ": duplicate prediction id '" + id + "'");
                }
            } catch (const Error& e) {
                note(exit_code_for(e.kind()), e.what());
            }
        }
        for (const std::string& w : warnings) {
            log << "eval: warning: " << w << "\n";
        }

        std::vector<std::string> ids;
        for (const auto& [id, layout] : layouts) {
            if (predictions.count(id)) {
                ids.push_back(id);
            } else {
                note(kExitPairing, "annotation '" + id + "' has no prediction");
            }
        }
        for (const auto& [id, pred] : predictions) {
            if (!layouts.count(id)) {
                note(kExitPairing, "prediction '" + id + "' has no annotation");
            }
        }
        if (exit != kExitOk && !run.keep_going) {
            for (const std::string& e : errors) log << "eval: " << e << "\n";
            return exit;
        }

        fs::create_directories(cmd.out_dir / "losses");
        const json cfg = run_config_json(run);
        const json prov = provenance("eval", run.seed, cfg);
        const LongitudeGrid grid = sample_longitudes(run.n_samples);

        std::ofstream metrics_out(cmd.out_dir / "metrics.csv", std::ios::binary | std::ios::trunc);
        metrics_out << provenance_comment(prov) << metrics_csv_header();

        std::vector<KeyedRecord> records;
        const std::size_t workers = worker_count();
        for (std::size_t start = 0; start < ids.size(); start += kEvalChunk) {
            const std::size_t count = std::min(kEvalChunk, ids.size() - start);
            std::vector<SampleOutcome> outcomes(count);
            parallel_for(count, workers, [&](std::size_t k) {
                const std::string& id = ids[start + k];
                outcomes[k] = evaluate_sample(layouts.at(id), predictions.at(id), grid, run);
            });
            for (std::size_t k = 0; k < count; ++k) {
                const std::string& id = ids[start + k];
                SampleOutcome& o = outcomes[k];
                if (!o.metrics) {
                    note(o.exit, o.error);
                    continue;
                }
                metrics_out << metrics_csv_row(id, *o.metrics);
                json loss = {{"provenance", prov}};
                loss.update(o.losses);
                write_json(cmd.out_dir / "losses" / (id + ".json"), loss);
                records.push_back({room_keys(layouts.at(id)), *o.metrics});
            }
            metrics_out.flush();
            if (exit != kExitOk && !run.keep_going) {
                break;
            }
        }
        metrics_out.close();

        if (!records.empty()) {
            write_group_reports(cmd.out_dir, records, {kGroupings.begin(), kGroupings.end()}, prov);
        }
        for (const std::string& e : errors) log << "eval: " << e << "\n";
        log << "eval: " << records.size() << " of " << ids.size() << " paired samples evaluated\n";
        return exit;
    } catch (const Error& e) {
        log << "eval: " << e.what() << "\n";
        return combine_exit(exit, exit_code_for(e.kind()));
    } catch (const std::exception& e) {
        log << "eval: " << e.what() << "\n";
        return combine_exit(exit, kExitInternal);
    }
}

int run_report(const RunConfig& run, const ReportCommand& cmd, std::ostream& log) {
    try {
        const auto rows = read_metrics_csv(cmd.metrics_csv);
        std::map<std::string, RoomKeys> keys;
        std::vector<std::string> warnings;
        for (const fs::path& p : list_json(cmd.annotations_dir)) {
            const LayoutAnnotation l = read_layout(p, {run.strict, &warnings});
            keys.emplace(l.id, room_keys(l));
        }
        for (const std::string& w : warnings) {
            log << "report: warning: " << w << "\n";
        }
        std::vector<KeyedRecord> records;
        for (const auto& [id, metrics] : rows) {
            const auto it = keys.find(id);
            if (it == keys.end()) {
                log << "report: metrics row '" << id << "' has no annotation\n";
                return kExitPairing;
            }
            records.push_back({it->second, metrics});
        }
        json cfg = run_config_json(run);
        cfg["grouping"] = cmd.grouping ? to_string(*cmd.grouping) : "all";
        const json prov = provenance("report", run.seed, cfg);
        fs::create_directories(cmd.out_dir);
        std::vector<Grouping> groupings(kGroupings.begin(), kGroupings.end());
        if (cmd.grouping) {
            groupings = {*cmd.grouping};
        }
        write_group_reports(cmd.out_dir, records, groupings, prov);
        return kExitOk;
    } catch (const Error& e) {
        log << "report: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        log << "report: " << e.what() << "\n";
        return kExitInternal;
    }
}

namespace {

LabeledSample load_sample(const fs::path& features, const fs::path& labels, bool strict,
                          std::string& id) {
    FeatureSequence z = read_feature_sequence(features);
    Prediction p = read_prediction(labels, {strict, nullptr});
    if (p.values.depths.size() != z.columns()) {
        fail(ErrorKind::Parse, labels.string() + ": " + std::to_string(p.values.depths.size()) +
                                   " labels for " + std::to_string(z.columns()) + " feature columns");
    }
    id = p.id;
    return {std::move(z), p.values.depths, p.values.heights};
}

void write_sample(const fs::path& out_dir, const std::string& stem, const std::string& id,
                  const LabeledSample& s) {
    write_feature_sequence(out_dir / (stem + ".lfsq"), s.features);
    write_json(out_dir / (stem + ".json"), to_json(Prediction{id, {s.depths, s.heights}, {}, {}}));
}

} // namespace

int run_augment(const RunConfig& run, const AugmentCommand& cmd, std::ostream& log) {
    try {
        const std::size_t inputs = cmd.mode == AugmentMode::avg ? 1 : 2;
        if (cmd.features.size() != inputs || cmd.labels.size() != inputs) {
            fail(ErrorKind::InvalidArgument, "augment needs " + std::to_string(inputs) +
                                                 " feature file(s) and as many label files");
        }
        fs::create_directories(cmd.out_dir);
        json cfg = run_config_json(run);

        if (cmd.mode == AugmentMode::avg) {
            std::string id;
            const LabeledSample sample = load_sample(cmd.features[0], cmd.labels[0], run.strict, id);
            const StylePrior prior{cmd.mean_scale, cmd.std_scale, run.seed};
            const ChannelStats style = sample_style(prior, sample.features.channels());
            const LabeledSample out = stylize(sample, style);

            const ChannelStats source = channel_stats(sample.features);
            std::vector<std::size_t> passthrough;
            for (std::size_t c = 0; c < source.std.size(); ++c) {
                if (source.std[c] < kDegenerateStd) passthrough.push_back(c);
            }
            cfg["mode"] = "avg";
            cfg["mean_scale"] = cmd.mean_scale;
            cfg["std_scale"] = cmd.std_scale;
            const json prov = provenance("augment", run.seed, cfg);
            const std::string stem = id + "_avg";
            write_sample(cmd.out_dir, stem, id + "_avg", out);
            write_json(cmd.out_dir / (stem + ".sidecar.json"),
                       {{"provenance", prov},
                        {"mode", "avg"},
                        {"seed", run.seed},
                        {"source", {{"id", id}, {"features", cmd.features[0].filename().string()}}},
                        {"style", {{"mean", style.mean}, {"std", style.std}}},
                        {"passthrough_channels", passthrough},
                        {"outputs", {stem + ".lfsq", stem + ".json"}}});
            log << "augment: stylised '" << id << "'\n";
            return kExitOk;
        }

        std::string id_a;
        std::string id_b;
        const LabeledSample a = load_sample(cmd.features[0], cmd.labels[0], run.strict, id_a);
        const LabeledSample b = load_sample(cmd.features[1], cmd.labels[1], run.strict, id_b);
        if (a.features.columns() != b.features.columns() || a.features.channels() != b.features.channels()) {
            fail(ErrorKind::Parse, "csmix inputs differ in shape");
        }
        const MixSpec spec = cmd.spec ? *cmd.spec : sample_mix_spec(a.features.columns(), run.seed);
        const auto [mixed_a, mixed_b] = splice_sample(a, b, spec);
        cfg["mode"] = "csmix";
        cfg["spec"] = {spec.c_a, spec.c_b, spec.w};
        const json prov = provenance("augment", run.seed, cfg);
        write_sample(cmd.out_dir, "csmix_a", id_a + "+" + id_b, mixed_a);
        write_sample(cmd.out_dir, "csmix_b", id_b + "+" + id_a, mixed_b);
        write_json(cmd.out_dir / "csmix.sidecar.json",
                   {{"provenance", prov},
                    {"mode", "csmix"},
                    {"seed", run.seed},
                    {"spec", {{"c_a", spec.c_a}, {"c_b", spec.c_b}, {"w", spec.w}}},
                    {"inputs", {id_a, id_b}},
                    {"outputs", {"csmix_a.lfsq", "csmix_a.json", "csmix_b.lfsq", "csmix_b.json"}}});
        log << "augment: spliced '" << id_a << "' and '" << id_b << "' with window (" << spec.c_a << ", "
            << spec.c_b << ", " << spec.w << ")\n";
        return kExitOk;
    } catch (const Error& e) {
        log << "augment: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        log << "augment: " << e.what() << "\n";
        return kExitInternal;
    }
}

int run_render(const RunConfig& run, const RenderCommand& cmd, std::ostream& log) {
    try {
        if (run.map_height == 0 || run.map_width != 2 * run.map_height) {
            fail(ErrorKind::InvalidArgument, "--resolution must be HxW with W = 2H");
        }
        RoomGeometry room;
        double camera_height = cmd.camera_height.value_or(kDefaultCameraHeight);
        if (cmd.is_prediction) {
            const Prediction p = read_prediction(cmd.input, {run.strict, nullptr});
            room = {boundary_polygon(p.values.depths, sample_longitudes(p.values.depths.size())),
                    mean_of(p.values.heights.values())};
        } else {
            const LayoutAnnotation l = read_layout(cmd.input, {run.strict, nullptr});
            room = {l.vertices, l.ceiling_height};
            camera_height = cmd.camera_height.value_or(l.camera_height);
        }
        write_depth_map(cmd.output, render_depth_map(room, run.map_height, run.map_width, camera_height));
        return kExitOk;
    } catch (const Error& e) {
        log << "render-depth: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        log << "render-depth: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace layoutforge
