// mkdvb-lab: run one experiment, write CSV tables plus a JSON manifest.
//
// Exit codes: 0 full run, 2 partial run (some sweep members aborted),
// 1 invalid input or internal failure.

#include "mkdvb/errors.hpp"
#include "mkdvb/harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mkdvb::DataError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral laboratory for the (M)KdV-Burgers family"};
    app.require_subcommand(1);

    std::string config_path, out_dir, seed_str;
    for (const char* kind : {"evolve", "conserve", "inviscid-sweep", "scaling", "miura",
                             "jbounds", "linfs", "strichartz"}) {
        auto* sub = app.add_subcommand(kind);
        sub->add_option("--config", config_path, "JSON experiment config");
        sub->add_option("--out", out_dir, "output directory (overrides config)");
        sub->add_option("--seed", seed_str, "RNG seed (overrides config)");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string kind = app.get_subcommands().front()->get_name();

    try {
        std::string text = config_path.empty() ? "{}" : read_file(config_path);
        mkdvb::ExperimentConfig cfg = mkdvb::parse_config(text, kind);
        cfg.kind = mkdvb::kind_from_name(kind); // subcommand wins over the file
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!seed_str.empty()) cfg.seed = std::stoull(seed_str);

        auto start = std::chrono::steady_clock::now();
        mkdvb::RunReport report = mkdvb::run(cfg);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        for (const std::string& path : mkdvb::emit_tables(report, cfg.out_dir))
            std::cout << "wrote " << path << "\n";
        // Wall-clock stays out of the deterministic report files.
        std::ofstream(std::filesystem::path(cfg.out_dir) / "timing.txt")
            << "wall_seconds " << secs << "\n";

        for (const std::string& note : report.notes) std::cerr << note << "\n";
        std::cout << "status: " << report.status << "\n";
        return report.status == "full" ? 0 : 2;
    } catch (const mkdvb::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
