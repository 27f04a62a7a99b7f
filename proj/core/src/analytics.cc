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

#include "qcfnest/analytics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qcfnest {

namespace {

std::string format_label(const char *prefix, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s=%g", prefix, value);
    return buf;
}

std::vector<double> alice_curve(const ElementProfile &element, std::size_t depth, std::span<const double> grid) {
    std::vector<double> curve;
    curve.reserve(grid.size());
    for (double pe : grid) {
        curve.push_back(nested_prob_noisy(FrameworkSpec::uniform(element, depth, NoiseSetting{pe}), Party::alice));
    }
    return curve;
}

}  // namespace

double nested_prob(std::span<const double> level_probs) {
    if (level_probs.empty()) {
        throw std::invalid_argument("nested_prob needs at least one level");
    }
    double total = 0.0;
    double reach = 1.0;
    for (double p : level_probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("level probability must lie in [0, 1], got " + std::to_string(p));
        }
        total += p * reach;
        reach *= 1 - p;
    }
    return total;
}

double nested_prob_noisy(const FrameworkSpec &spec, Party party) {
    auto probs = party == Party::alice ? spec.noisy_alice_probs() : spec.noisy_bob_probs();
    return nested_prob(probs);
}

bool check_nested_bound(std::span<const double> level_probs) {
    if (level_probs.empty()) {
        throw PreconditionError("check_nested_bound needs at least one level");
    }
    for (double p : level_probs) {
        if (!(p > 0.5 && p < 1.0)) {
            throw PreconditionError("level probability must lie in (0.5, 1), got " + std::to_string(p));
        }
    }
    return nested_prob(level_probs) < 1.0;
}

double justice_error(std::span<const double> p_stars, double p_e) {
    if (p_stars.empty()) {
        throw std::invalid_argument("justice_error needs at least one level");
    }
    if (!(p_e >= 0.0 && p_e <= 0.5)) {
        throw std::invalid_argument("p_e must lie in [0, 0.5], got " + std::to_string(p_e));
    }
    double rate = 1.0;
    for (double s : p_stars) {
        if (!(s >= 0.0 && s <= 1.0)) {
            throw std::invalid_argument("p_star must lie in [0, 1], got " + std::to_string(s));
        }
        rate *= (1 - s) * p_e;
    }
    return rate;
}

double analytic_value(const FrameworkSpec &spec, Scenario scenario) {
    switch (scenario) {
        case Scenario::honest_failure:
            return justice_error(spec.p_stars(), spec.noise().p_e);
        case Scenario::cheat_alice:
            return nested_prob_noisy(spec, Party::alice);
        case Scenario::cheat_bob:
            return nested_prob_noisy(spec, Party::bob);
        case Scenario::honest_coin0:
            return 0.5;
    }
    throw std::invalid_argument("unknown scenario");
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    const auto ideal = profile_ideal();
    for (std::size_t depth = 2; depth <= 6; ++depth) {
        double value = nested_prob_noisy(FrameworkSpec::uniform(ideal, depth), Party::alice);
        rows.push_back(Table1Row{depth, ideal.p, value, value - 0.5});
    }
    return rows;
}

double round_half_up(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::copysign(std::floor(std::abs(value) * scale + 0.5) / scale, value);
}

std::vector<double> p_e_grid(double step, double max) {
    if (!(step > 0.0) || !(max >= 0.0 && max <= 0.5)) {
        throw std::invalid_argument("p_e grid needs step > 0 and max in [0, 0.5]");
    }
    std::vector<double> grid;
    auto count = static_cast<std::size_t>(std::floor(max / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) {
        // Snap to 12 decimals so 7 * 0.01 lands on 0.07.
        grid.push_back(std::min(max, std::round(static_cast<double>(i) * step * 1e12) / 1e12));
    }
    return grid;
}

SweepResult sweep_alice_by_depth(
    const ElementProfile &base, std::span<const std::size_t> depths, std::span<const double> grid) {
    if (depths.empty() || grid.empty()) {
        throw std::invalid_argument("sweep needs at least one depth and one grid point");
    }
    SweepResult result{{grid.begin(), grid.end()}, {}};
    for (std::size_t depth : depths) {
        result.curves.emplace_back(format_label("N", static_cast<double>(depth)), alice_curve(base, depth, grid));
    }
    return result;
}

SweepResult sweep_alice_by_cheat_prob(
    const ElementProfile &base, std::span<const double> p_values, std::size_t depth, std::span<const double> grid) {
    if (p_values.empty() || grid.empty()) {
        throw std::invalid_argument("sweep needs at least one p value and one grid point");
    }
    SweepResult result{{grid.begin(), grid.end()}, {}};
    for (double p : p_values) {
        ElementProfile element = base;
        element.p = p;
        element.name = format_label("p", p);
        result.curves.emplace_back(element.name, alice_curve(element, depth, grid));
    }
    return result;
}

}  // namespace qcfnest
