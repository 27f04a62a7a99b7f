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

#ifndef QCFNEST_ELEMENTS_H
#define QCFNEST_ELEMENTS_H

#include <string>

namespace qcfnest {

/// Security signature of one single-shot coin-flipping protocol in a noiseless channel.
struct ElementProfile {
    std::string name;
    /// Maximum probability that a cheating Alice wins against an honest Bob.
    double p = 0.5;
    /// Maximum probability that a cheating Bob wins against an honest Alice.
    double q = 0.5;
    /// Probability that Bob cannot verify Alice's commitment at all.
    double p_star = 0.0;

    /// A profile with p = q = 0.5 and p_star = 0.
    bool is_perfect() const {
        return p == 0.5 && q == 0.5 && p_star == 0.0;
    }

    bool operator==(const ElementProfile &) const = default;
};

/// Throws std::invalid_argument unless 0.5 <= p < 1, 0.5 <= q < 1, 0 <= p_star <= p.
void validate(const ElementProfile &profile);

/// Channel noise as seen by the protocol. Loss is not modelled: eta is always 1.
struct NoiseSetting {
    /// Quantum bit error rate, in [0, 0.5].
    double p_e = 0.0;
    static constexpr double eta = 1.0;

    bool operator==(const NoiseSetting &) const = default;
};

/// Throws std::invalid_argument unless 0 <= p_e <= 0.5.
void validate(const NoiseSetting &noise);

/// Alice's cheat probability once noise is present:
///   p_star + (p - p_star)(1 - P_e) + (1 - p) P_e
double noisy_alice_prob(const ElementProfile &profile, const NoiseSetting &noise);

/// Bob's cheat probability once noise is present: q (1 - P_e) + (1 - q) P_e.
double noisy_bob_prob(const ElementProfile &profile, const NoiseSetting &noise);

enum class Bbbg09Coefficient { half, quarter };

double coefficient_value(Bbbg09Coefficient c);
const char *to_string(Bbbg09Coefficient c);
/// Accepts "half" or "quarter"; throws std::invalid_argument otherwise.
Bbbg09Coefficient parse_coefficient(const std::string &text);

ElementProfile profile_ideal();

/// Loss-tolerant BB84-template protocol with overlap alpha^2:
/// p = 3/4 + c alpha beta, q = alpha^2, p_star = 0.5, with beta^2 = 1 - alpha^2.
/// Throws std::invalid_argument if alpha_sq is outside [0.5, 1) or the
/// resulting profile is invalid (p reaches 1).
ElementProfile profile_bbbg09(double alpha_sq, Bbbg09Coefficient coefficient = Bbbg09Coefficient::half);

/// Encrypted variant with bias 0.359 for both parties.
ElementProfile profile_chailloux();

}  // namespace qcfnest

#endif
