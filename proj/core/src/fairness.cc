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

#include "qcfnest/fairness.h"

#include <cmath>

namespace qcfnest {

namespace {

constexpr double kBracketLow = 0.75;
constexpr double kBracketHigh = 1 - 1e-9;
constexpr int kMaxIterations = 200;

}  // namespace

double nested_with_perfect(double p) {
    if (!(p >= 0.5 && p < 1.0)) {
        throw std::invalid_argument("cheat probability must lie in [0.5, 1), got " + std::to_string(p));
    }
    return p + (1 - p) * 0.5;
}

FairSolution solve_fair_bbbg09(Bbbg09Coefficient coefficient, double tolerance) {
    if (!(tolerance > 0.0 && tolerance <= 1e-6)) {
        throw std::invalid_argument("tolerance must lie in (0, 1e-6], got " + std::to_string(tolerance));
    }
    const double c = coefficient_value(coefficient);
    auto gap = [c](double s) { return 0.75 + c * std::sqrt(s * (1 - s)) - s; };

    double lo = kBracketLow;
    double hi = kBracketHigh;
    double f_lo = gap(lo);
    double f_hi = gap(hi);
    if (f_lo * f_hi > 0) {
        throw SolverError("fair condition has no sign change on [0.75, 1)");
    }

    double s = lo;
    double f = f_lo;
    int iterations = 0;
    while (true) {
        if (std::abs(f_lo) <= tolerance) {
            s = lo;
            f = f_lo;
            break;
        }
        if (std::abs(f_hi) <= tolerance) {
            s = hi;
            f = f_hi;
            break;
        }
        if (iterations == kMaxIterations) {
            throw SolverError("bisection did not reach the requested tolerance");
        }
        ++iterations;
        double mid = 0.5 * (lo + hi);
        double f_mid = gap(mid);
        if (mid == lo || mid == hi) {
            // Interval cannot shrink further in double precision.
            s = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
            f = gap(s);
            if (std::abs(f) > tolerance) {
                throw SolverError("bisection stalled above the requested tolerance");
            }
            break;
        }
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    FairSolution solution;
    solution.alpha_sq = s;
    solution.beta_sq = 1 - s;
    solution.common_cheat_prob = s;
    solution.framework_bias = nested_with_perfect(s) - 0.5;
    solution.coefficient_used = coefficient;
    solution.residual = std::abs(f);
    solution.iterations = iterations;
    return solution;
}

SymmetricFairResult fair_with_perfect(const ElementProfile &profile) {
    validate(profile);
    if (profile.p != profile.q) {
        throw std::invalid_argument("element is not symmetric: p != q");
    }
    return SymmetricFairResult{profile.p, nested_with_perfect(profile.p) - 0.5};
}

}  // namespace qcfnest
