#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "landuse/config.hpp"
#include "landuse/errors.hpp"
#include "landuse/pipeline.hpp"
#include "landuse/synthcity.hpp"

namespace {

struct StageOptions {
    std::string config_path;
    std::string out_dir;
    std::int64_t seed = -1; // -1 = keep the config's seed
};

void add_stage_options(CLI::App* cmd, StageOptions& opt) {
    cmd->add_option("--config", opt.config_path, "pipeline configuration file")->required();
    cmd->add_option("--out-dir", opt.out_dir, "artifact directory (default: config directory)");
    cmd->add_option("--seed", opt.seed, "override the config seed");
}

landuse::PipelineConfig resolve(const StageOptions& opt, std::string& out_dir) {
    landuse::PipelineConfig cfg = landuse::load_config(opt.config_path);
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    out_dir = opt.out_dir.empty()
                  ? std::filesystem::path(opt.config_path).parent_path().string()
                  : opt.out_dir;
    if (out_dir.empty()) out_dir = ".";
    std::filesystem::create_directories(out_dir);
    return cfg;
}

int run_stage(const char* name, const StageOptions& opt,
              void (*stage)(const landuse::PipelineConfig&, const std::string&)) {
    try {
        std::string out_dir;
        const landuse::PipelineConfig cfg = resolve(opt, out_dir);
        stage(cfg, out_dir);
        return 0;
    } catch (const landuse::InputError& e) {
        std::cerr << "[" << name << "] error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "[" << name << "] error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Land-use classification from aggregated per-tower call counts"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // synth
    std::string preset_name;
    std::string synth_out = ".";
    std::int64_t synth_seed = -1;
    bool list_presets = false;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic dataset");
    synth->add_option("--preset", preset_name, "scenario preset name");
    synth->add_option("--out-dir", synth_out, "output directory");
    synth->add_option("--seed", synth_seed, "override the preset seed");
    synth->add_flag("--list", list_presets, "list available presets");

    StageOptions grid_opt, train_opt, cluster_opt, classify_opt, evaluate_opt, pipeline_opt;
    add_stage_options(app.add_subcommand("grid", "interpolate call layers onto the grid"),
                      grid_opt);
    add_stage_options(app.add_subcommand("train", "sweep beta on labeled samples"), train_opt);
    add_stage_options(app.add_subcommand("cluster", "fuzzy c-means with cluster-count selection"),
                      cluster_opt);
    add_stage_options(app.add_subcommand("classify", "assign clusters to land-use classes"),
                      classify_opt);
    add_stage_options(app.add_subcommand("evaluate", "compare against ground truth"),
                      evaluate_opt);
    add_stage_options(app.add_subcommand("pipeline", "run all stages"), pipeline_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        app.exit(e);
        return 2;
    }

    if (synth->parsed()) {
        try {
            if (list_presets) {
                for (const auto& cfg : landuse::scenario_presets()) {
                    std::cout << cfg.name << "\n";
                }
                return 0;
            }
            if (preset_name.empty()) {
                std::cerr << "[synth] error: --preset (or --list) is required\n";
                return 2;
            }
            landuse::SynthConfig cfg = landuse::preset(preset_name);
            if (synth_seed >= 0) cfg.seed = static_cast<std::uint64_t>(synth_seed);
            std::filesystem::create_directories(synth_out);
            const auto summary = landuse::generate_city(cfg, synth_out);
            std::cout << "generated " << summary.n_towers << " towers, "
                      << cfg.grid.n_cells() << " cells, preset " << cfg.name << "\n";
            return 0;
        } catch (const landuse::InputError& e) {
            std::cerr << "[synth] error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "[synth] error: " << e.what() << "\n";
            return 1;
        }
    }
    if (app.get_subcommand("grid")->parsed()) {
        return run_stage("grid", grid_opt, landuse::grid_stage);
    }
    if (app.get_subcommand("train")->parsed()) {
        return run_stage("train", train_opt, landuse::train_stage);
    }
    if (app.get_subcommand("cluster")->parsed()) {
        return run_stage("cluster", cluster_opt, landuse::cluster_stage);
    }
    if (app.get_subcommand("classify")->parsed()) {
        return run_stage("classify", classify_opt, landuse::classify_stage);
    }
    if (app.get_subcommand("evaluate")->parsed()) {
        return run_stage("evaluate", evaluate_opt, landuse::evaluate_stage);
    }
    if (app.get_subcommand("pipeline")->parsed()) {
        return run_stage("pipeline", pipeline_opt, landuse::run_pipeline);
    }
    return 2;
}
