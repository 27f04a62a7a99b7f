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

#ifndef QCFNEST_TOOLS_COMMANDS_H
#define QCFNEST_TOOLS_COMMANDS_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcfnest/analytics.h"
#include "qcfnest/fairness.h"

namespace qcfnest::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitIoError = 3,
    kExitSelfCheckFailed = 4,
};

/// Name of the environment variable that caps estimator threads.
inline constexpr const char *kWorkerCapVariable = "QCFNEST_MAX_WORKERS";

/// Formats with 12 significant digits; used for CSV cells and JSON numbers.
std::string format_number(double value);
/// Rounds to 12 significant digits so JSON serialization is stable.
double round_significant(double value);

void write_table1_csv(const std::vector<Table1Row> &rows, std::ostream &out);
void write_sweep_csv(const SweepResult &sweep, std::ostream &out);

/// |estimate - analytic| in units of the estimate's standard error. When the
/// empirical error is zero the analytic binomial error is used instead;
/// when both vanish the distance is 0 for a match and infinite otherwise.
double sigma_distance(const TrialStats &stats, double analytic);

std::string simulate_json(Scenario scenario, const TrialStats &stats, double analytic);
std::string fair_bbbg09_json(const FairSolution &solution);
std::string fair_symmetric_json(const std::string &element, const SymmetricFairResult &result);

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcfnest::cli

#endif
