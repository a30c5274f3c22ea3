#include <iostream>

#include <CLI11.hpp>

#include "layoutforge/commands.hpp"
#include "layoutforge/io.hpp"

using namespace layoutforge;

namespace {

MixSpec spec_from_sidecar(const std::filesystem::path& path) {
    const nlohmann::json j = read_json(path);
    try {
        const auto& s = j.at("spec");
        return {s.at("c_a").get<std::size_t>(), s.at("c_b").get<std::size_t>(), s.at("w").get<std::size_t>()};
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"layoutforge: horizon-depth room layout toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kToolVersion));

    RunConfig run;
    std::string resolution = "512x1024";
    std::string grouping;
    app.add_option("--n", run.n_samples, "Longitude sample count N")->capture_default_str();
    app.add_option("--resolution", resolution, "Depth map size HxW (W = 2H)")->capture_default_str();
    app.add_option("--seed", run.seed, "Root seed")->capture_default_str();
    app.add_option("--alpha", run.weights.alpha, "Normal loss weight")->capture_default_str();
    app.add_option("--beta", run.weights.beta, "Gradient loss weight")->capture_default_str();
    app.add_option("--grouping", grouping, "Report a single grouping")
        ->check(CLI::IsMember({"corners", "room_type", "pose"}));
    app.add_flag("--strict", run.strict, "Reject unknown JSON keys");
    app.add_flag("--keep-going", run.keep_going, "Continue past per-file errors");
    app.add_flag("--horizon-only", run.horizon_only, "Depth metrics on horizon depths instead of rendered maps");

    GenCommand gen;
    std::string labels_dir;
    std::string features_dir;
    std::vector<double> corner_distribution;
    auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic room annotations");
    gen_cmd->add_option("out", gen.out_dir, "Output directory")->required();
    gen_cmd->add_option("--count", gen.count, "Number of rooms")->capture_default_str();
    gen_cmd->add_option("--corner-distribution", corner_distribution,
                        "Probabilities for buckets 4,5,6,7,8,9,10+")
        ->expected(7)
        ->delimiter(',');
    gen_cmd->add_option("--non-manhattan-fraction", gen.config.non_manhattan_fraction)->capture_default_str();
    gen_cmd->add_option("--secondary-fraction", gen.config.secondary_fraction)->capture_default_str();
    gen_cmd->add_option("--labels-dir", labels_dir, "Also write prediction-format labels at N");
    gen_cmd->add_option("--features-dir", features_dir, "Also write stand-in feature sequences");
    gen_cmd->add_option("--channels", gen.feature_channels, "Channels of the stand-in features")
        ->capture_default_str();

    EvalCommand eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate predictions against annotations");
    eval_cmd->add_option("annotations", eval.annotations_dir)->required()->check(CLI::ExistingDirectory);
    eval_cmd->add_option("predictions", eval.predictions_dir)->required()->check(CLI::ExistingDirectory);
    eval_cmd->add_option("out", eval.out_dir)->required();

    ReportCommand report;
    auto* report_cmd = app.add_subcommand("report", "Regroup a metrics CSV by imbalance keys");
    report_cmd->add_option("metrics", report.metrics_csv)->required()->check(CLI::ExistingFile);
    report_cmd->add_option("annotations", report.annotations_dir)->required()->check(CLI::ExistingDirectory);
    report_cmd->add_option("out", report.out_dir)->required();

    AugmentCommand augment;
    std::string mode = "avg";
    std::string replay;
    std::vector<std::size_t> spec;
    auto* augment_cmd = app.add_subcommand("augment", "Apply AVG or CSMix to serialized samples");
    augment_cmd->add_option("--mode", mode)->check(CLI::IsMember({"avg", "csmix"}))->capture_default_str();
    augment_cmd->add_option("--features", augment.features, "Feature sequence file(s)")->required();
    augment_cmd->add_option("--labels", augment.labels, "Label JSON file(s)")->required();
    augment_cmd->add_option("--out", augment.out_dir)->required();
    augment_cmd->add_option("--spec", spec, "Window as c_a,c_b,w")->expected(3)->delimiter(',');
    augment_cmd->add_option("--replay", replay, "Sidecar JSON whose window is reused");
    augment_cmd->add_option("--mean-scale", augment.mean_scale)->capture_default_str();
    augment_cmd->add_option("--std-scale", augment.std_scale)->capture_default_str();

    RenderCommand render;
    double camera_height = 0.0;
    auto* render_cmd = app.add_subcommand("render-depth", "Render an equirectangular depth map");
    render_cmd->add_option("input", render.input)->required()->check(CLI::ExistingFile);
    render_cmd->add_option("output", render.output)->required();
    render_cmd->add_flag("--prediction", render.is_prediction, "Input is a prediction JSON");
    auto* camera_opt = render_cmd->add_option("--camera-height", camera_height);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const auto [h, w] = parse_resolution(resolution);
        run.map_height = h;
        run.map_width = w;
        if (!grouping.empty()) {
            report.grouping = parse_grouping(grouping);
        }
        if (*gen_cmd) {
            if (!labels_dir.empty()) gen.labels_dir = labels_dir;
            if (!features_dir.empty()) gen.features_dir = features_dir;
            if (!corner_distribution.empty()) {
                std::copy(corner_distribution.begin(), corner_distribution.end(),
                          gen.config.corner_distribution.begin());
            }
            return run_gen(run, gen, std::cerr);
        }
        if (*eval_cmd) {
            return run_eval(run, eval, std::cerr);
        }
        if (*report_cmd) {
            return run_report(run, report, std::cerr);
        }
        if (*augment_cmd) {
            augment.mode = mode == "avg" ? AugmentMode::avg : AugmentMode::csmix;
            if (!spec.empty()) {
                augment.spec = MixSpec{spec[0], spec[1], spec[2]};
            } else if (!replay.empty()) {
                augment.spec = spec_from_sidecar(replay);
            }
            return run_augment(run, augment, std::cerr);
        }
        if (*render_cmd) {
            if (camera_opt->count() > 0) render.camera_height = camera_height;
            return run_render(run, render, std::cerr);
        }
    } catch (const Error& e) {
        std::cerr << "layoutforge: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? kExitParse : kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "layoutforge: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
