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

#ifndef QCFNEST_ENGINE_H
#define QCFNEST_ENGINE_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qcfnest/elements.h"

namespace qcfnest {

/// Upper bound on the number of nested levels.
inline constexpr std::size_t kMaxLevels = 64;

/// An ordered chain of element protocols plus the channel noise they share.
/// The depth is fixed at construction.
class FrameworkSpec {
   public:
    /// Throws std::invalid_argument when the element list is empty, longer
    /// than kMaxLevels, or any profile / the noise setting is invalid.
    FrameworkSpec(std::vector<ElementProfile> elements, NoiseSetting noise);

    /// `depth` copies of the same profile.
    static FrameworkSpec uniform(const ElementProfile &profile, std::size_t depth, NoiseSetting noise = {});

    std::size_t depth() const {
        return elements_.size();
    }
    const std::vector<ElementProfile> &elements() const {
        return elements_;
    }
    const NoiseSetting &noise() const {
        return noise_;
    }

    std::vector<double> noisy_alice_probs() const;
    std::vector<double> noisy_bob_probs() const;
    std::vector<double> p_stars() const;

   private:
    std::vector<ElementProfile> elements_;
    NoiseSetting noise_;
};

/// Counter-based generator: the stream for trial i is a pure function of
/// (seed, i), so results do not depend on how trials are scheduled.
class TrialRng {
   public:
    using result_type = std::uint64_t;

    TrialRng(std::uint64_t seed, std::uint64_t trial_index);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()();

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform();
    /// True with probability p; p = 0 never fires and p = 1 always does.
    bool bernoulli(double p);

   private:
    std::uint64_t state_;
};

/// Result of one honest execution of the framework.
struct RunOutcome {
    /// Coin emitted by the halting level; empty when BA occurred at the last level.
    std::optional<int> coin;
    std::size_t levels_used = 0;
    /// ba_trace[i] is true when BA occurred at level i + 1; one entry per visited level.
    std::vector<bool> ba_trace;

    bool is_failure() const {
        return !coin.has_value();
    }
};

enum class CheatOutcome { win, lose };

/// Honest Alice and Bob. At each level BA happens with probability
/// (1 - p_star) P_e and hands control to the next level; otherwise the
/// level emits a fair coin and the run halts. BA at the last level is a failure.
RunOutcome run_honest(const FrameworkSpec &spec, TrialRng &rng);

/// Cheating Alice: wins at level i with probability noisy_alice_prob, else
/// BA escalates; running out of levels is a loss.
CheatOutcome run_cheat_alice(const FrameworkSpec &spec, TrialRng &rng);

/// Mirror of run_cheat_alice using noisy_bob_prob.
CheatOutcome run_cheat_bob(const FrameworkSpec &spec, TrialRng &rng);

enum class Scenario { honest_failure, cheat_alice, cheat_bob, honest_coin0 };

const char *to_string(Scenario scenario);
/// Throws std::invalid_argument on an unknown name.
Scenario parse_scenario(const std::string &name);

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const TrialStats &) const = default;
};

TrialStats make_trial_stats(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed);

/// Monte Carlo estimate of a scenario's success probability.
///
///   honest_failure  run_honest ends in failure
///   cheat_alice     run_cheat_alice wins
///   cheat_bob       run_cheat_bob wins
///   honest_coin0    coin is 0, conditioned on non-failure (failed runs are
///                   redrawn from the same trial stream)
///
/// Trials are split over `workers` threads (0 picks the hardware
/// concurrency); the result is identical for any worker count.
/// Throws std::invalid_argument if trials == 0.
TrialStats estimate(
    const FrameworkSpec &spec, Scenario scenario, std::uint64_t trials, std::uint64_t seed, std::size_t workers = 0);

}  // namespace qcfnest

#endif
