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

#ifndef RISCORR_OUTPUT_HPP
#define RISCORR_OUTPUT_HPP

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "riscorr/config.hpp"
#include "riscorr/experiments.hpp"
#include "riscorr/version.hpp"

namespace riscorr {

/// Data values are printed with 9 significant digits.
inline std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Exact round-trip formatting, used in manifests so a re-run reproduces
/// the original bit-for-bit.
inline std::string format_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        out.push_back(line.substr(begin, comma == std::string::npos ? std::string::npos
                                                                    : comma - begin));
        if (comma == std::string::npos)
            break;
        begin = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Reads a CSV file back as rows of fields (header included). The emitted
/// files never quote fields, so a plain comma split is exact.
inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            rows.push_back(detail::split_csv_line(line));
    }
    return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "sweep_var,n1,n2,n,m,kappa_linear,realizations,phase_mode,"
    "rho_sq_sim,rho_sq_se,rho_sq_theory,rho_sim,rho_se,rho_theory_upper,asymptote";

/// Writes one row per sweep point: the resolved scenario, the Monte Carlo
/// estimates with their standard errors, and the closed-form predictions.
/// Output is deterministic: fixed row order, fixed formatting, '\n' endings.
inline void emit_csv(const std::vector<SweepPoint>& results,
                     const std::filesystem::path& path) {
    if (results.empty())
        throw std::invalid_argument("emit_csv: no results to write");
    std::ofstream out = detail::open_out(path);
    out << kSweepCsvHeader << '\n';
    for (const SweepPoint& point : results) {
        const SystemParams& params = point.config.params;
        out << format_sig9(point.sweep_value) << ','
            << params.geometry.n1 << ',' << params.geometry.n2 << ','
            << params.geometry.ris_elements() << ',' << params.geometry.m << ','
            << format_sig9(params.kappa) << ',' << point.config.realizations << ','
            << phase_mode_name(point.config.phase_mode) << ','
            << format_sig9(point.stats.rho_sq.mean()) << ','
            << format_sig9(point.stats.rho_sq.std_error()) << ','
            << format_sig9(point.prediction.mean_rho_sq) << ','
            << format_sig9(point.stats.rho.mean()) << ','
            << format_sig9(point.stats.rho.std_error()) << ','
            << format_sig9(point.prediction.mean_rho_upper) << ','
            << format_sig9(point.prediction.asymptote) << '\n';
    }
}

inline constexpr const char* kComponentsCsvHeader =
    "n,n1,n2,m,kappa_linear,realizations,"
    "los_power_sim,los_power_theory,nlos_power_sim,nlos_power_theory,"
    "loslos_sim,loslos_theory,losnlos_sim,losnlos_theory,"
    "nloslos_sim,nloslos_theory,nlosnlos_sim,nlosnlos_theory,"
    "cross_abs_mean,cross_se,max_pair_abs_mean,max_pair_se";

inline void emit_components_csv(const std::vector<ComponentRow>& rows,
                                const std::filesystem::path& path) {
    if (rows.empty())
        throw std::invalid_argument("emit_components_csv: no rows to write");
    std::ofstream out = detail::open_out(path);
    out << kComponentsCsvHeader << '\n';
    for (const ComponentRow& row : rows) {
        const int side = static_cast<int>(std::llround(std::sqrt(row.ris_elements)));
        out << format_sig9(row.ris_elements) << ',' << side << ',' << side << ','
            << row.bs_antennas << ',' << format_sig9(row.kappa) << ','
            << row.realizations << ','
            << format_sig9(row.los_power_sim) << ',' << format_sig9(row.los_power_theory) << ','
            << format_sig9(row.nlos_power_sim) << ',' << format_sig9(row.nlos_power_theory) << ','
            << format_sig9(row.loslos_sim) << ',' << format_sig9(row.loslos_theory) << ','
            << format_sig9(row.losnlos_sim) << ',' << format_sig9(row.losnlos_theory) << ','
            << format_sig9(row.nloslos_sim) << ',' << format_sig9(row.nloslos_theory) << ','
            << format_sig9(row.nlosnlos_sim) << ',' << format_sig9(row.nlosnlos_theory) << ','
            << format_sig9(row.cross_abs_mean) << ',' << format_sig9(row.cross_se) << ','
            << format_sig9(row.max_pair_abs_mean) << ',' << format_sig9(row.max_pair_se) << '\n';
    }
}

/// Writes the run manifest: metadata as comments, then the resolved
/// configuration in config-file syntax, so the manifest itself can be fed
/// back through --config to reproduce the CSV byte for byte. Doubles are
/// printed with exact round-trip precision for that reason.
inline void write_manifest(const ExperimentConfig& config,
                           const std::vector<std::string>& outputs,
                           const std::filesystem::path& path) {
    std::ofstream out = detail::open_out(path);
    out << "# riscorr run manifest\n";
    out << "# tool_version: " << kToolVersion << '\n';
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated_utc: " << stamp << '\n';
    for (const std::string& file : outputs)
        out << "# output: " << file << '\n';
    out << "# resolved configuration; re-run with --config <this file>\n";
    out << "m = " << config.params.geometry.m << '\n';
    out << "n1 = " << config.params.geometry.n1 << '\n';
    out << "n2 = " << config.params.geometry.n2 << '\n';
    out << "kappa = " << format_exact(config.params.kappa) << '\n';
    out << "paths_k = " << config.params.paths_k << '\n';
    out << "paths_l = " << config.params.paths_l << '\n';
    out << "realizations = " << config.realizations << '\n';
    out << "phase_mode = " << phase_mode_name(config.phase_mode) << '\n';
    out << "equal_phase_value = " << format_exact(config.equal_phase_value) << '\n';
    out << "master_seed = " << config.master_seed << '\n';
    out << "sweep = " << sweep_kind_name(config.sweep) << '\n';
    if (!config.sweep_values.empty()) {
        out << "sweep_values = ";
        for (std::size_t i = 0; i < config.sweep_values.size(); ++i)
            out << (i ? "," : "") << format_exact(config.sweep_values[i]);
        out << '\n';
    }
    out << "output_dir = " << config.output_dir << '\n';
}

enum class FigureKind { vs_n, vs_m, vs_kappa, components };

namespace detail {

inline void plot_preamble(std::ofstream& out, const std::filesystem::path& csv) {
    out << "# gnuplot script generated by riscorr " << kToolVersion << "\n"
        << "# render with: gnuplot -p " << csv.stem().string() << ".plot\n"
        << "csv = '" << csv.filename().string() << "'\n"
        << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set key top right\n"
        << "set grid\n";
}

}  // namespace detail

/// Writes a self-contained gnuplot script next to an existing CSV:
/// simulated points with 3-SE error bars plus the closed-form curves.
inline void emit_plot_script(const std::filesystem::path& csv_path, FigureKind kind,
                             const std::filesystem::path& out_path) {
    const auto rows = read_csv(csv_path);  // also validates that the CSV exists
    if (rows.size() < 2)
        throw std::invalid_argument("emit_plot_script: CSV has no data rows");
    std::ofstream out = detail::open_out(out_path);
    detail::plot_preamble(out, csv_path);

    switch (kind) {
        case FigureKind::vs_n:
            out << "set xlabel 'Number of RIS elements N'\n"
                << "set ylabel 'Correlation coefficient'\n"
                << "set logscale x 2\n"
                << "plot csv using 4:9:(3*column(10)) with yerrorbars pt 7 title 'E[rho^2] simulated', \\\n"
                << "     csv using 4:11 with lines lw 2 title 'E[rho^2] closed form', \\\n"
                << "     csv using 4:12:(3*column(13)) with yerrorbars pt 5 title 'E[rho] simulated', \\\n"
                << "     csv using 4:14 with lines lw 2 title 'E[rho] upper bound', \\\n"
                << "     csv using 4:($15*$15) with lines dt 2 title '1/M'\n";
            break;
        case FigureKind::vs_m:
            out << "set xlabel 'Number of BS antennas M'\n"
                << "set ylabel 'Correlation coefficient'\n"
                << "plot csv using 5:9:(3*column(10)) with yerrorbars pt 7 title 'E[rho^2] simulated', \\\n"
                << "     csv using 5:11 with lines lw 2 title 'E[rho^2] closed form', \\\n"
                << "     csv using 5:12:(3*column(13)) with yerrorbars pt 5 title 'E[rho] simulated', \\\n"
                << "     csv using 5:14 with lines lw 2 title 'E[rho] upper bound', \\\n"
                << "     csv using 5:($15*$15) with lines dt 2 title '1/M'\n";
            break;
        case FigureKind::vs_kappa: {
            // one curve per distinct element count found in the CSV
            std::vector<std::string> element_counts;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const std::string& n = rows[i].at(3);
                bool seen = false;
                for (const std::string& known : element_counts)
                    seen = seen || known == n;
                if (!seen)
                    element_counts.push_back(n);
            }
            out << "set xlabel 'Rician factor kappa (linear)'\n"
                << "set ylabel 'E[rho^2]'\n"
                << "plot ";
            for (std::size_t i = 0; i < element_counts.size(); ++i) {
                const std::string& n = element_counts[i];
                if (i)
                    out << ", \\\n     ";
                out << "csv using (column(4)==" << n << "?column(6):1/0):9:(3*column(10)) "
                    << "with yerrorbars title 'simulated, N=" << n << "', \\\n     "
                    << "csv using (column(4)==" << n << "?column(6):1/0):11 "
                    << "with lines title 'closed form, N=" << n << "'";
            }
            out << "\n";
            break;
        }
        case FigureKind::components: {
            // normalize every curve to its first sweep point, as the
            // component comparison is about decay rates
            const std::vector<std::string>& first = rows.at(1);
            const auto scale = [&first](int col) {
                return first.at(static_cast<std::size_t>(col) - 1);
            };
            out << "set xlabel 'Number of RIS elements N'\n"
                << "set ylabel 'Normalized mean component power'\n"
                << "set logscale x 2\n"
                << "set logscale y 10\n"
                << "plot csv using 1:($7/" << scale(8) << ") with points pt 7 title '|H_LOS|^2 simulated', \\\n"
                << "     csv using 1:($8/" << scale(8) << ") with lines title '|H_LOS|^2 closed form', \\\n"
                << "     csv using 1:($9/" << scale(10) << ") with points pt 5 title '|H_NLOS|^2 simulated', \\\n"
                << "     csv using 1:($10/" << scale(10) << ") with lines title '|H_NLOS|^2 closed form', \\\n"
                << "     csv using 1:($11/" << scale(12) << ") with points pt 9 title 'LoSxLoS inner simulated', \\\n"
                << "     csv using 1:($12/" << scale(12) << ") with lines title 'LoSxLoS inner closed form', \\\n"
                << "     csv using 1:($13/" << scale(14) << ") with points pt 11 title 'LoSxNLoS inner simulated', \\\n"
                << "     csv using 1:($14/" << scale(14) << ") with lines title 'LoSxNLoS inner closed form', \\\n"
                << "     csv using 1:($17/" << scale(18) << ") with points pt 13 title 'NLoSxNLoS inner simulated', \\\n"
                << "     csv using 1:($18/" << scale(18) << ") with lines title 'NLoSxNLoS inner closed form'\n";
            break;
        }
    }
}

}  // namespace riscorr

#endif  // RISCORR_OUTPUT_HPP
