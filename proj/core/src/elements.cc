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

#include "qcfnest/elements.h"

#include <cmath>
#include <stdexcept>

namespace qcfnest {

namespace {

constexpr double kChaillouxBias = 0.359;

std::string describe(const ElementProfile &profile) {
    return profile.name.empty() ? std::string("element") : "element '" + profile.name + "'";
}

}  // namespace

void validate(const ElementProfile &profile) {
    if (!(profile.p >= 0.5 && profile.p < 1.0)) {
        throw std::invalid_argument(describe(profile) + ": p must lie in [0.5, 1), got " + std::to_string(profile.p));
    }
    if (!(profile.q >= 0.5 && profile.q < 1.0)) {
        throw std::invalid_argument(describe(profile) + ": q must lie in [0.5, 1), got " + std::to_string(profile.q));
    }
    if (!(profile.p_star >= 0.0 && profile.p_star <= profile.p)) {
        throw std::invalid_argument(
            describe(profile) + ": p_star must lie in [0, p], got " + std::to_string(profile.p_star));
    }
}

void validate(const NoiseSetting &noise) {
    if (!(noise.p_e >= 0.0 && noise.p_e <= 0.5)) {
        throw std::invalid_argument("p_e must lie in [0, 0.5], got " + std::to_string(noise.p_e));
    }
}

double noisy_alice_prob(const ElementProfile &profile, const NoiseSetting &noise) {
    double pe = noise.p_e;
    return profile.p_star + (profile.p - profile.p_star) * (1 - pe) + (1 - profile.p) * pe;
}

double noisy_bob_prob(const ElementProfile &profile, const NoiseSetting &noise) {
    double pe = noise.p_e;
    return profile.q * (1 - pe) + (1 - profile.q) * pe;
}

double coefficient_value(Bbbg09Coefficient c) {
    return c == Bbbg09Coefficient::half ? 0.5 : 0.25;
}

const char *to_string(Bbbg09Coefficient c) {
    return c == Bbbg09Coefficient::half ? "half" : "quarter";
}

Bbbg09Coefficient parse_coefficient(const std::string &text) {
    if (text == "half") {
        return Bbbg09Coefficient::half;
    }
    if (text == "quarter") {
        return Bbbg09Coefficient::quarter;
    }
    throw std::invalid_argument("coefficient must be 'half' or 'quarter', got '" + text + "'");
}

ElementProfile profile_ideal() {
    return ElementProfile{"ideal", 0.5, 0.5, 0.0};
}

ElementProfile profile_bbbg09(double alpha_sq, Bbbg09Coefficient coefficient) {
    if (!(alpha_sq >= 0.5 && alpha_sq < 1.0)) {
        throw std::invalid_argument("alpha_sq must lie in [0.5, 1), got " + std::to_string(alpha_sq));
    }
    double alpha_beta = std::sqrt(alpha_sq * (1 - alpha_sq));
    ElementProfile profile{"bbbg09", 0.75 + coefficient_value(coefficient) * alpha_beta, alpha_sq, 0.5};
    validate(profile);
    return profile;
}

ElementProfile profile_chailloux() {
    return ElementProfile{"chailloux", 0.5 + kChaillouxBias, 0.5 + kChaillouxBias, 0.5};
}

}  // namespace qcfnest
