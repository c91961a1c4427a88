#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "disagree/config.hpp"
#include "disagree/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Two-period team production with model disagreement"};
    disagree::RunManifest m;
    std::uint64_t seed = 0;
    int grid = 0;
    std::uint64_t mc = 0;
    std::string family;

    auto* config = app.add_option("--config", m.config_path, "configuration file (JSON, comments allowed)")->envname("DISAGREE_CONFIG");
    auto* experiment = app.add_option("--experiment", m.experiment, "experiment to run")
                           ->envname("DISAGREE_EXPERIMENT")
                           ->check(CLI::IsMember(disagree::experiment_names()));
    app.add_option("--out", m.out_dir, "output directory")->envname("DISAGREE_OUT");
    auto* seed_opt = app.add_option("--seed", seed, "seed for Monte Carlo evaluation")->envname("DISAGREE_SEED");
    auto* grid_opt = app.add_option("--grid", grid, "effort grid points")->envname("DISAGREE_GRID")->check(CLI::Range(3, 1000000));
    auto* mc_opt = app.add_option("--mc", mc, "Monte Carlo paths (requires a seed)")->envname("DISAGREE_MC");
    auto* tmpl = app.add_option("--template", family, "print a config template for a view family and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : disagree::kExitInvalid;
    }

    if (*tmpl) {
        const auto f = disagree::parse_family(family);
        if (!f) {
            std::cerr << "error: unknown family \"" << family
                      << "\" (DiscreteBandit, AdditiveNoise, UniformLinear, InverseInfoLinear)\n";
            return disagree::kExitInvalid;
        }
        std::cout << disagree::config_template(*f);
        return disagree::kExitOk;
    }
    if (!*config || !*experiment) {
        std::cerr << "error: --config and --experiment are required\n" << app.help();
        return disagree::kExitInvalid;
    }
    if (*seed_opt) m.seed = seed;
    if (*grid_opt) m.grid = grid;
    if (*mc_opt) m.mc = mc;
    return disagree::run(m, std::cerr);
}
