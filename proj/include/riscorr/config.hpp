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

#ifndef RISCORR_CONFIG_HPP
#define RISCORR_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riscorr/experiments.hpp"

namespace riscorr {

inline double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

/// Ordered key-value bag; later assignments to the same key win, so CLI
/// flags can be layered on top of a config file before resolving.
using KeyValues = std::map<std::string, std::string>;

namespace detail {

inline std::string trim(std::string_view s) {
    const auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    };
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" +
                                    value + "'");
    }
    if (used != value.size() || !std::isfinite(v))
        throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" +
                                    value + "'");
    return v;
}

inline long long parse_integer(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        throw std::invalid_argument("config: key '" + key + "' must be an integer, got '" +
                                    value + "'");
    return static_cast<long long>(v);
}

inline int parse_int_range(const std::string& key, const std::string& value,
                           long long lo, long long hi) {
    const long long v = parse_integer(key, value);
    if (v < lo || v > hi)
        throw std::invalid_argument("config: key '" + key + "' must lie in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) +
                                    "], got '" + value + "'");
    return static_cast<int>(v);
}

inline std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("config: key '" + key +
                                    "' must be a non-negative integer, got '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' is out of range: '" +
                                    value + "'");
    }
}

inline std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::size_t begin = 0;
    while (begin <= value.size()) {
        const std::size_t comma = value.find(',', begin);
        const std::string item =
            trim(value.substr(begin, comma == std::string::npos ? std::string::npos
                                                                : comma - begin));
        if (item.empty())
            throw std::invalid_argument("config: key '" + key + "' has an empty list entry");
        out.push_back(parse_double(key, item));
        if (comma == std::string::npos)
            break;
        begin = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Parses flat "key = value" text. '#' starts a comment; blank lines are
/// skipped; repeated keys keep the last value.
inline KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::string stripped = detail::trim(line);
        if (!stripped.empty()) {
            const std::size_t eq = stripped.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                            " is not of the form key = value");
            const std::string key = detail::trim(std::string_view(stripped).substr(0, eq));
            const std::string value = detail::trim(std::string_view(stripped).substr(eq + 1));
            if (key.empty())
                throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                            " has an empty key");
            out[key] = value;
        }
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return out;
}

/// Applies defaults and validates a resolved key-value bag. Unknown keys,
/// the kappa/kappa_db conflict, and codebook-incompatible element counts
/// are all rejected with the offending key named.
inline ExperimentConfig resolve_config(const KeyValues& keys) {
    static const std::map<std::string, int> known = {
        {"m", 0},          {"n1", 0},          {"n2", 0},
        {"kappa", 0},      {"kappa_db", 0},    {"paths_k", 0},
        {"paths_l", 0},    {"realizations", 0}, {"phase_mode", 0},
        {"equal_phase_value", 0}, {"master_seed", 0}, {"sweep", 0},
        {"sweep_values", 0}, {"output_dir", 0},
    };
    for (const auto& [key, value] : keys)
        if (known.find(key) == known.end())
            throw std::invalid_argument("config: unknown key '" + key + "'");

    ExperimentConfig config;

    const auto get = [&keys](const char* key) -> const std::string* {
        const auto it = keys.find(key);
        return it == keys.end() ? nullptr : &it->second;
    };

    constexpr long long kMaxDim = 1 << 20;
    if (const std::string* v = get("m"))
        config.params.geometry.m = detail::parse_int_range("m", *v, 1, kMaxDim);
    if (const std::string* v = get("n1"))
        config.params.geometry.n1 = detail::parse_int_range("n1", *v, 1, kMaxDim);
    if (const std::string* v = get("n2"))
        config.params.geometry.n2 = detail::parse_int_range("n2", *v, 1, kMaxDim);

    const std::string* kappa = get("kappa");
    const std::string* kappa_db = get("kappa_db");
    if (kappa && kappa_db)
        throw std::invalid_argument(
            "config: 'kappa' and 'kappa_db' are mutually exclusive; give one");
    if (kappa)
        config.params.kappa = detail::parse_double("kappa", *kappa);
    else if (kappa_db)
        config.params.kappa = db_to_linear(detail::parse_double("kappa_db", *kappa_db));

    if (const std::string* v = get("paths_k"))
        config.params.paths_k = detail::parse_int_range("paths_k", *v, 1, kMaxDim);
    if (const std::string* v = get("paths_l"))
        config.params.paths_l = detail::parse_int_range("paths_l", *v, 1, kMaxDim);
    if (const std::string* v = get("realizations"))
        config.realizations =
            detail::parse_int_range("realizations", *v, 2, 2'000'000'000);

    if (const std::string* v = get("phase_mode")) {
        if (*v == "equal")
            config.phase_mode = PhaseMode::equal;
        else if (*v == "random")
            config.phase_mode = PhaseMode::random;
        else if (*v == "codebook")
            config.phase_mode = PhaseMode::codebook;
        else
            throw std::invalid_argument(
                "config: phase_mode must be equal|random|codebook, got '" + *v + "'");
    }

    if (const std::string* v = get("equal_phase_value"))
        config.equal_phase_value = detail::parse_double("equal_phase_value", *v);

    if (const std::string* v = get("master_seed"))
        config.master_seed = detail::parse_seed("master_seed", *v);

    if (const std::string* v = get("sweep")) {
        if (*v == "none")
            config.sweep = SweepKind::none;
        else if (*v == "n")
            config.sweep = SweepKind::over_n;
        else if (*v == "m")
            config.sweep = SweepKind::over_m;
        else if (*v == "kappa")
            config.sweep = SweepKind::over_kappa;
        else
            throw std::invalid_argument("config: sweep must be none|n|m|kappa, got '" +
                                        *v + "'");
    }

    if (const std::string* v = get("sweep_values"))
        config.sweep_values = detail::parse_list("sweep_values", *v);

    if (const std::string* v = get("output_dir"))
        config.output_dir = *v;

    config.validate();
    return config;
}

/// Parses a flat key-value configuration document into a fully resolved,
/// validated experiment configuration.
inline ExperimentConfig parse_config(std::string_view source) {
    return resolve_config(parse_key_values(source));
}

}  // namespace riscorr

#endif  // RISCORR_CONFIG_HPP
