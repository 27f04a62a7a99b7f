// Copyright 2026 The qcfnest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "scenario_config.h"

namespace qcfnest::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Raised inside command handlers; carries the process exit code.
struct CommandFailure {
    int code;
    std::string message;
};

ElementProfile default_sweep_profile() {
    return ElementProfile{"custom", 0.8, 0.8, 0.5};
}

std::size_t worker_count() {
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char *cap = std::getenv(kWorkerCapVariable)) {
        char *end = nullptr;
        unsigned long value = std::strtoul(cap, &end, 10);
        if (end == cap || *end != '\0' || value == 0) {
            throw CommandFailure{kExitInputError, std::string(kWorkerCapVariable) + " must be a positive integer"};
        }
        workers = std::min<std::size_t>(workers, value);
    }
    return workers;
}

void emit(const std::string &text, const std::string &output_path, std::ostream &out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw CommandFailure{kExitIoError, "cannot write '" + output_path + "'"};
    }
    file << text;
    file.flush();
    if (!file) {
        throw CommandFailure{kExitIoError, "failed writing '" + output_path + "'"};
    }
}

ScenarioConfig load_or_fail(const std::string &path) {
    try {
        return load_config(path);
    } catch (const ConfigError &e) {
        throw CommandFailure{kExitInputError, e.what()};
    }
}

ordered_json number_or_null(double value) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return round_significant(value);
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double round_significant(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

void write_table1_csv(const std::vector<Table1Row> &rows, std::ostream &out) {
    out << "N,element_prob,cheat_prob,bias\n";
    char buf[128];
    for (const auto &row : rows) {
        std::snprintf(
            buf, sizeof(buf), "%zu,%.2f,%.4f,%.4f\n", row.depth, round_half_up(row.element_prob, 2),
            round_half_up(row.nested_prob, 4), round_half_up(row.bias, 4));
        out << buf;
    }
}

void write_sweep_csv(const SweepResult &sweep, std::ostream &out) {
    out << "p_e";
    for (const auto &[label, values] : sweep.curves) {
        out << ',' << label;
    }
    out << '\n';
    for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
        out << format_number(sweep.grid[i]);
        for (const auto &[label, values] : sweep.curves) {
            out << ',' << format_number(values[i]);
        }
        out << '\n';
    }
}

double sigma_distance(const TrialStats &stats, double analytic) {
    double diff = std::abs(stats.estimate - analytic);
    double se = stats.std_error;
    if (se == 0.0) {
        se = std::sqrt(analytic * (1 - analytic) / static_cast<double>(stats.trials));
    }
    if (se == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return diff / se;
}

std::string simulate_json(Scenario scenario, const TrialStats &stats, double analytic) {
    ordered_json j;
    j["scenario"] = to_string(scenario);
    j["trials"] = stats.trials;
    j["seed"] = stats.seed;
    j["estimate"] = round_significant(stats.estimate);
    j["std_error"] = round_significant(stats.std_error);
    j["analytic"] = round_significant(analytic);
    j["sigma_distance"] = number_or_null(sigma_distance(stats, analytic));
    return j.dump(2) + "\n";
}

std::string fair_bbbg09_json(const FairSolution &solution) {
    ordered_json j;
    j["element"] = "bbbg09";
    j["coefficient"] = to_string(solution.coefficient_used);
    j["alpha_sq"] = round_significant(solution.alpha_sq);
    j["beta_sq"] = round_significant(solution.beta_sq);
    j["common_cheat_prob"] = round_significant(solution.common_cheat_prob);
    j["framework_bias"] = round_significant(solution.framework_bias);
    j["residual"] = round_significant(solution.residual);
    return j.dump(2) + "\n";
}

std::string fair_symmetric_json(const std::string &element, const SymmetricFairResult &result) {
    ordered_json j;
    j["element"] = element;
    j["coefficient"] = nullptr;
    j["alpha_sq"] = nullptr;
    j["beta_sq"] = nullptr;
    j["common_cheat_prob"] = round_significant(result.common_cheat_prob);
    j["framework_bias"] = round_significant(result.framework_bias);
    j["residual"] = 0.0;
    return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Nested quantum coin-flipping simulator and analysis toolkit", "qcfnest"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string output_path;
    app.add_option("--seed", seed, "Override the scenario seed");
    app.add_option("--trials", trials, "Override the scenario trial count")->check(CLI::PositiveNumber);
    app.add_option("--output", output_path, "Write results to this file instead of standard output");

    auto *table1_cmd = app.add_subcommand("table1", "Nested cheat probabilities for ideal elements, N = 2..6");

    auto *sweep_cmd = app.add_subcommand("sweep", "Alice's nested cheat probability as a function of P_e");
    std::string sweep_config;
    std::string panel;
    std::vector<std::size_t> depths{1, 2, 3};
    std::vector<double> cheat_probs{0.6, 0.7, 0.8};
    std::size_t panel_b_depth = 2;
    double grid_step = 0.01;
    double grid_max = 0.5;
    sweep_cmd->add_option("config", sweep_config, "Scenario file; its first element is the base profile");
    sweep_cmd->add_option("--panel", panel, "a: vary N, b: vary p")->required()->check(CLI::IsMember({"a", "b"}));
    sweep_cmd->add_option("--depths", depths, "Depths for panel a")->delimiter(',');
    sweep_cmd->add_option("--cheat-probs", cheat_probs, "Values of p for panel b")->delimiter(',');
    sweep_cmd->add_option("--depth", panel_b_depth, "Depth used by panel b");
    sweep_cmd->add_option("--grid-step", grid_step, "Spacing of the P_e grid");
    sweep_cmd->add_option("--grid-max", grid_max, "Largest P_e on the grid (<= 0.5)");

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run checked against the closed form");
    std::string simulate_config;
    std::string scenario_name;
    simulate_cmd->add_option("config", simulate_config, "Scenario file")->required();
    simulate_cmd->add_option("scenario", scenario_name, "honest_failure | cheat_alice | cheat_bob | honest_coin0")
        ->required();

    auto *fair_cmd = app.add_subcommand("solve-fair", "Fair parameters of an element composed with a perfect one");
    std::string fair_element;
    std::optional<std::string> coefficient;
    double tolerance = 1e-12;
    fair_cmd->add_option("element", fair_element, "bbbg09 | chailloux")
        ->required()
        ->check(CLI::IsMember({"bbbg09", "chailloux"}));
    fair_cmd->add_option("--coefficient", coefficient, "half (default) | quarter; bbbg09 only")
        ->check(CLI::IsMember({"half", "quarter"}));
    fair_cmd->add_option("--tolerance", tolerance, "Residual tolerance for the root finder");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (table1_cmd->parsed()) {
            std::ostringstream csv;
            write_table1_csv(table1(), csv);
            emit(csv.str(), output_path, out);
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            ElementProfile base = default_sweep_profile();
            if (!sweep_config.empty()) {
                base = to_profile(load_or_fail(sweep_config).elements.front());
            }
            auto grid = p_e_grid(grid_step, grid_max);
            SweepResult sweep = panel == "a" ? sweep_alice_by_depth(base, depths, grid)
                                             : sweep_alice_by_cheat_prob(base, cheat_probs, panel_b_depth, grid);
            std::ostringstream csv;
            write_sweep_csv(sweep, csv);
            emit(csv.str(), output_path, out);
            return kExitOk;
        }

        if (simulate_cmd->parsed()) {
            Scenario scenario = parse_scenario(scenario_name);
            ScenarioConfig config = load_or_fail(simulate_config);
            if (seed) {
                config.seed = *seed;
            }
            if (trials) {
                config.trials = *trials;
            }
            FrameworkSpec spec = to_framework(config);
            TrialStats stats = estimate(spec, scenario, config.trials, config.seed, worker_count());
            double analytic = analytic_value(spec, scenario);
            emit(simulate_json(scenario, stats, analytic), output_path, out);
            if (!(sigma_distance(stats, analytic) <= 5.0)) {
                err << "self-check failed: estimate is more than 5 standard errors from the closed form\n";
                return kExitSelfCheckFailed;
            }
            return kExitOk;
        }

        if (fair_cmd->parsed()) {
            std::string json;
            if (fair_element == "chailloux") {
                if (coefficient) {
                    throw CommandFailure{kExitInputError, "--coefficient applies only to bbbg09"};
                }
                json = fair_symmetric_json("chailloux", fair_with_perfect(profile_chailloux()));
            } else {
                auto c = parse_coefficient(coefficient.value_or("half"));
                json = fair_bbbg09_json(solve_fair_bbbg09(c, tolerance));
            }
            emit(json, output_path, out);
            return kExitOk;
        }
    } catch (const CommandFailure &e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qcfnest::cli
