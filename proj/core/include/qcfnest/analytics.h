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

#ifndef QCFNEST_ANALYTICS_H
#define QCFNEST_ANALYTICS_H

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcfnest/elements.h"
#include "qcfnest/engine.h"

namespace qcfnest {

/// Raised when a caller breaks a documented precondition that is stricter
/// than plain argument validation (e.g. the open interval of check_nested_bound).
class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Win probability of a party facing a chain of levels, where it wins level
/// i with probability P_i and otherwise falls through to level i + 1:
///   sum_i P_i prod_{j<i} (1 - P_j)
/// Throws std::invalid_argument on an empty list or entries outside [0, 1].
double nested_prob(std::span<const double> level_probs);

enum class Party { alice, bob };

double nested_prob_noisy(const FrameworkSpec &spec, Party party);

/// True when nested_prob(level_probs) < 1. Every entry must lie strictly
/// inside (0.5, 1); otherwise throws PreconditionError.
bool check_nested_bound(std::span<const double> level_probs);

/// Rate at which an honest Alice is judged a cheater:
///   prod_i (1 - p_star_i) * P_e^N
double justice_error(std::span<const double> p_stars, double p_e);

/// Closed-form counterpart of `estimate` for the same scenario.
double analytic_value(const FrameworkSpec &spec, Scenario scenario);

struct Table1Row {
    std::size_t depth;
    double element_prob;
    double nested_prob;
    double bias;
};

/// Ideal elements (cheat probability 0.5) nested to depths 2 through 6.
/// Values are exact; round only when printing.
std::vector<Table1Row> table1();

/// Rounds half away from zero to `decimals` places.
double round_half_up(double value, int decimals);

struct SweepResult {
    std::vector<double> grid;
    std::vector<std::pair<std::string, std::vector<double>>> curves;
};

/// P_e in {0, step, 2 step, ...} up to `max` inclusive. Defaults to 0..0.5 by 0.01.
std::vector<double> p_e_grid(double step = 0.01, double max = 0.5);

/// One curve per depth, labelled "N=<depth>", of Alice's noisy nested cheat
/// probability for a framework of identical `base` elements.
SweepResult sweep_alice_by_depth(
    const ElementProfile &base, std::span<const std::size_t> depths, std::span<const double> grid);

/// One curve per cheat probability p, labelled "p=<p>", with `base.p_star`
/// held fixed and the depth set to `depth`.
SweepResult sweep_alice_by_cheat_prob(
    const ElementProfile &base, std::span<const double> p_values, std::size_t depth, std::span<const double> grid);

}  // namespace qcfnest

#endif
