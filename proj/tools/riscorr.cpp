// SPDX-License-Identifier: Apache-2.0
//
// riscorr — Monte Carlo simulation and closed-form analytics for the
// correlation between cascade channels sharing a common BS-RIS link
// Copyright (C) 2026 the riscorr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. Subcommands cover one Monte Carlo point and the
// standard one-dimensional sweeps; every run emits a CSV, a manifest that
// reproduces it bit for bit, and optionally a gnuplot script.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riscorr/riscorr.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::string name;
    std::uint64_t seed = 42;
    int threads = 0;
    bool plot = false;
    int realizations = 0;
    int m = 0, n1 = 0, n2 = 0;
    double kappa = 0.0, kappa_db = 0.0;
    int paths_k = 0, paths_l = 0;
    std::string phase_mode;
    double equal_phase = 0.0;
    std::string values;
};

void add_common_options(CLI::App* cmd, CliOptions& o, bool is_sweep) {
    cmd->add_option("--config", o.config_path, "configuration file (key = value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out_dir, "output directory (default .)");
    cmd->add_option("--name", o.name, "basename for output files");
    cmd->add_option("--seed", o.seed, "master seed (default 42)");
    cmd->add_option("--threads", o.threads, "worker threads, 0 = auto; never changes results");
    cmd->add_flag("--plot", o.plot, "also emit a gnuplot script");
    cmd->add_option("--realizations", o.realizations, "channel realizations per point");
    cmd->add_option("--m", o.m, "BS antennas");
    cmd->add_option("--n1", o.n1, "RIS elements, horizontal");
    cmd->add_option("--n2", o.n2, "RIS elements, vertical");
    cmd->add_option("--kappa", o.kappa, "Rician factor, linear");
    cmd->add_option("--kappa-db", o.kappa_db, "Rician factor in dB");
    cmd->add_option("--paths-k", o.paths_k, "resolvable paths of user k");
    cmd->add_option("--paths-l", o.paths_l, "resolvable paths of user l");
    cmd->add_option("--phase-mode", o.phase_mode, "equal | random | codebook");
    cmd->add_option("--equal-phase", o.equal_phase, "shared phase in radians for equal mode");
    if (is_sweep)
        cmd->add_option("--values", o.values, "comma-separated sweep values");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string default_sweep_values(riscorr::SweepKind kind, const riscorr::KeyValues& map) {
    const auto it = map.find("phase_mode");
    const bool codebook = it != map.end() && it->second == "codebook";
    switch (kind) {
        case riscorr::SweepKind::over_n:
            return codebook ? "16,64,256,1024"
                            : "16,36,64,100,144,196,256,324,400,576,784,1024";
        case riscorr::SweepKind::over_m:
            return "1,2,4,8";
        case riscorr::SweepKind::over_kappa:
            return "0,1,2,3,4,5,6,7,8,9,10";
        case riscorr::SweepKind::none:
            break;
    }
    return "";
}

riscorr::ExperimentConfig resolve_from_cli(const CLI::App* sub, const CliOptions& o,
                                           riscorr::SweepKind kind) {
    riscorr::KeyValues map;
    if (sub->count("--config"))
        map = riscorr::parse_key_values(read_file(o.config_path));

    map["sweep"] = riscorr::sweep_kind_name(kind);
    if (kind == riscorr::SweepKind::none)
        map.erase("sweep_values");

    if (sub->count("--m")) map["m"] = std::to_string(o.m);
    if (sub->count("--n1")) map["n1"] = std::to_string(o.n1);
    if (sub->count("--n2")) map["n2"] = std::to_string(o.n2);
    if (sub->count("--kappa")) {
        map["kappa"] = riscorr::format_exact(o.kappa);
        if (!sub->count("--kappa-db"))
            map.erase("kappa_db");
    }
    if (sub->count("--kappa-db")) {
        map["kappa_db"] = riscorr::format_exact(o.kappa_db);
        if (!sub->count("--kappa"))
            map.erase("kappa");
    }
    if (sub->count("--paths-k")) map["paths_k"] = std::to_string(o.paths_k);
    if (sub->count("--paths-l")) map["paths_l"] = std::to_string(o.paths_l);
    if (sub->count("--realizations")) map["realizations"] = std::to_string(o.realizations);
    if (sub->count("--phase-mode")) map["phase_mode"] = o.phase_mode;
    if (sub->count("--equal-phase"))
        map["equal_phase_value"] = riscorr::format_exact(o.equal_phase);
    if (sub->count("--seed")) map["master_seed"] = std::to_string(o.seed);
    if (sub->count("--out")) map["output_dir"] = o.out_dir;
    const CLI::Option* values_opt = sub->get_option_no_throw("--values");
    if (values_opt != nullptr && values_opt->count() > 0)
        map["sweep_values"] = o.values;

    if (kind != riscorr::SweepKind::none && map.find("sweep_values") == map.end())
        map["sweep_values"] = default_sweep_values(kind, map);

    riscorr::ExperimentConfig config = riscorr::resolve_config(map);
    config.threads = o.threads;
    return config;
}

void print_point_summary(const riscorr::SweepPoint& p) {
    std::printf("  N=%-5d M=%-2d kappa=%-8.4g  E[rho^2] %.5f +- %.5f (closed form %.5f)"
                "  E[rho] %.5f (bound %.5f)\n",
                p.config.params.geometry.ris_elements(), p.config.params.geometry.m,
                p.config.params.kappa, p.stats.rho_sq.mean(), p.stats.rho_sq.std_error(),
                p.prediction.mean_rho_sq, p.stats.rho.mean(), p.prediction.mean_rho_upper);
}

int run(riscorr::SweepKind kind, bool components, const CLI::App* sub,
        const CliOptions& o, const std::string& default_name) {
    riscorr::ExperimentConfig config = resolve_from_cli(sub, o, kind);
    const std::string name = o.name.empty() ? default_name : o.name;
    const fs::path dir = config.output_dir;
    if (!dir.empty())
        fs::create_directories(dir);
    const fs::path csv_path = dir / (name + ".csv");
    const fs::path manifest_path = dir / (name + ".manifest.txt");
    const fs::path plot_path = dir / (name + ".plot");

    std::printf("riscorr %s | phase mode %s | seed %llu | %d realizations per point\n",
                riscorr::kToolVersion, riscorr::phase_mode_name(config.phase_mode),
                static_cast<unsigned long long>(config.master_seed), config.realizations);

    std::vector<std::string> outputs;
    if (components) {
        const auto rows = riscorr::component_power_report(config);
        riscorr::emit_components_csv(rows, csv_path);
        outputs.push_back(csv_path.filename().string());
        for (const auto& row : rows)
            std::printf("  N=%-5g |H_LOS|^2 %.4g (theory %.4g)  |H_NLOS|^2 %.4g (theory %.4g)"
                        "  worst pair mean %.2g\n",
                        row.ris_elements, row.los_power_sim, row.los_power_theory,
                        row.nlos_power_sim, row.nlos_power_theory, row.max_pair_abs_mean);
        if (o.plot) {
            riscorr::emit_plot_script(csv_path, riscorr::FigureKind::components, plot_path);
            outputs.push_back(plot_path.filename().string());
        }
    } else {
        std::vector<riscorr::SweepPoint> results;
        if (kind == riscorr::SweepKind::none) {
            riscorr::SweepPoint point;
            point.sweep_value = config.params.geometry.ris_elements();
            point.config = config;
            point.stats = riscorr::run_point(config);
            point.prediction = riscorr::predict_correlation(
                config.params.geometry.m, config.params.geometry.ris_elements(),
                config.params.kappa);
            results.push_back(std::move(point));
        } else {
            results = riscorr::run_sweep(config);
        }
        riscorr::emit_csv(results, csv_path);
        outputs.push_back(csv_path.filename().string());
        for (const auto& point : results)
            print_point_summary(point);
        if (o.plot) {
            if (kind == riscorr::SweepKind::none)
                throw std::invalid_argument(
                    "--plot needs a sweep subcommand; a single point has nothing to plot");
            riscorr::FigureKind fig = riscorr::FigureKind::vs_n;
            if (kind == riscorr::SweepKind::over_m)
                fig = riscorr::FigureKind::vs_m;
            else if (kind == riscorr::SweepKind::over_kappa)
                fig = riscorr::FigureKind::vs_kappa;
            riscorr::emit_plot_script(csv_path, fig, plot_path);
            outputs.push_back(plot_path.filename().string());
        }
    }

    riscorr::write_manifest(config, outputs, manifest_path);
    outputs.push_back(manifest_path.filename().string());
    std::printf("wrote");
    for (const std::string& file : outputs)
        std::printf(" %s", file.c_str());
    std::printf("\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo and closed-form correlation between two RIS cascade channels"};
    app.require_subcommand(1);

    CliOptions o;
    CLI::App* point = app.add_subcommand("point", "single parameter point");
    CLI::App* sweep_n = app.add_subcommand("sweep-n", "sweep the number of RIS elements");
    CLI::App* sweep_m = app.add_subcommand("sweep-m", "sweep the number of BS antennas");
    CLI::App* sweep_kappa = app.add_subcommand("sweep-kappa", "sweep the Rician factor");
    CLI::App* components =
        app.add_subcommand("components", "component mean powers over an element sweep");
    add_common_options(point, o, false);
    add_common_options(sweep_n, o, true);
    add_common_options(sweep_m, o, true);
    add_common_options(sweep_kappa, o, true);
    add_common_options(components, o, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (point->parsed())
            return run(riscorr::SweepKind::none, false, point, o, "point");
        if (sweep_n->parsed())
            return run(riscorr::SweepKind::over_n, false, sweep_n, o, "sweep_n");
        if (sweep_m->parsed())
            return run(riscorr::SweepKind::over_m, false, sweep_m, o, "sweep_m");
        if (sweep_kappa->parsed())
            return run(riscorr::SweepKind::over_kappa, false, sweep_kappa, o, "sweep_kappa");
        if (components->parsed())
            return run(riscorr::SweepKind::over_n, true, components, o, "components");
    } catch (const std::exception& e) {
        std::cerr << "riscorr: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
