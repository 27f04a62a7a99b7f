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

#ifndef QCFNEST_FAIRNESS_H
#define QCFNEST_FAIRNESS_H

#include <optional>
#include <stdexcept>

#include "qcfnest/elements.h"

namespace qcfnest {

class SolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two-level framework whose second level is a perfect element:
/// p + (1 - p) * 0.5. Throws std::invalid_argument unless p is in [0.5, 1).
double nested_with_perfect(double p);

struct FairSolution {
    double alpha_sq = 0.0;
    double beta_sq = 0.0;
    double common_cheat_prob = 0.0;
    /// Bias of the two-level framework; equals common_cheat_prob / 2.
    double framework_bias = 0.0;
    Bbbg09Coefficient coefficient_used = Bbbg09Coefficient::half;
    /// |3/4 + c sqrt(s (1 - s)) - s| at the returned s.
    double residual = 0.0;
    int iterations = 0;
};

/// Finds alpha^2 = s in [0.75, 1) where Alice's and Bob's cheat probabilities
/// match, 3/4 + c sqrt(s (1 - s)) = s, by bisection. Since nested_with_perfect
/// is strictly increasing this is also the fair point of the two-level
/// framework. Throws std::invalid_argument unless 0 < tolerance <= 1e-6 and
/// SolverError if no bracketed root meets the tolerance within 200 halvings.
FairSolution solve_fair_bbbg09(Bbbg09Coefficient coefficient, double tolerance = 1e-12);

/// Fair result for an element that is already symmetric (p == q), composed
/// with a perfect second level.
struct SymmetricFairResult {
    double common_cheat_prob;
    double framework_bias;
};

/// Throws std::invalid_argument unless profile.p == profile.q.
SymmetricFairResult fair_with_perfect(const ElementProfile &profile);

}  // namespace qcfnest

#endif
