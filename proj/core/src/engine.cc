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

#include "qcfnest/engine.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcfnest {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

template <typename LevelProb>
CheatOutcome run_cheater(const FrameworkSpec &spec, TrialRng &rng, LevelProb level_prob) {
    for (const auto &element : spec.elements()) {
        if (rng.bernoulli(level_prob(element, spec.noise()))) {
            return CheatOutcome::win;
        }
    }
    return CheatOutcome::lose;
}

bool run_trial(const FrameworkSpec &spec, Scenario scenario, TrialRng &rng) {
    switch (scenario) {
        case Scenario::honest_failure:
            return run_honest(spec, rng).is_failure();
        case Scenario::cheat_alice:
            return run_cheat_alice(spec, rng) == CheatOutcome::win;
        case Scenario::cheat_bob:
            return run_cheat_bob(spec, rng) == CheatOutcome::win;
        case Scenario::honest_coin0:
            while (true) {
                auto outcome = run_honest(spec, rng);
                if (!outcome.is_failure()) {
                    return *outcome.coin == 0;
                }
            }
    }
    return false;
}

std::uint64_t count_successes(
    const FrameworkSpec &spec, Scenario scenario, std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t successes = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        TrialRng rng(seed, i);
        successes += run_trial(spec, scenario, rng) ? 1 : 0;
    }
    return successes;
}

}  // namespace

FrameworkSpec::FrameworkSpec(std::vector<ElementProfile> elements, NoiseSetting noise)
    : elements_(std::move(elements)), noise_(noise) {
    if (elements_.empty() || elements_.size() > kMaxLevels) {
        throw std::invalid_argument(
            "framework depth must lie in [1, " + std::to_string(kMaxLevels) + "], got " +
            std::to_string(elements_.size()));
    }
    for (const auto &e : elements_) {
        validate(e);
    }
    validate(noise_);
}

FrameworkSpec FrameworkSpec::uniform(const ElementProfile &profile, std::size_t depth, NoiseSetting noise) {
    return FrameworkSpec(std::vector<ElementProfile>(depth, profile), noise);
}

std::vector<double> FrameworkSpec::noisy_alice_probs() const {
    std::vector<double> out;
    out.reserve(elements_.size());
    for (const auto &e : elements_) {
        out.push_back(noisy_alice_prob(e, noise_));
    }
    return out;
}

std::vector<double> FrameworkSpec::noisy_bob_probs() const {
    std::vector<double> out;
    out.reserve(elements_.size());
    for (const auto &e : elements_) {
        out.push_back(noisy_bob_prob(e, noise_));
    }
    return out;
}

std::vector<double> FrameworkSpec::p_stars() const {
    std::vector<double> out;
    out.reserve(elements_.size());
    for (const auto &e : elements_) {
        out.push_back(e.p_star);
    }
    return out;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index) {
    std::uint64_t s = seed;
    std::uint64_t t = trial_index ^ 0x6A09E667F3BCC909ULL;
    state_ = splitmix64(s) ^ splitmix64(t);
}

TrialRng::result_type TrialRng::operator()() {
    return splitmix64(state_);
}

double TrialRng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) {
    return uniform() < p;
}

RunOutcome run_honest(const FrameworkSpec &spec, TrialRng &rng) {
    RunOutcome outcome;
    const double pe = spec.noise().p_e;
    for (const auto &element : spec.elements()) {
        ++outcome.levels_used;
        bool ba = rng.bernoulli((1 - element.p_star) * pe);
        outcome.ba_trace.push_back(ba);
        if (!ba) {
            outcome.coin = rng.bernoulli(0.5) ? 1 : 0;
            return outcome;
        }
    }
    return outcome;
}

CheatOutcome run_cheat_alice(const FrameworkSpec &spec, TrialRng &rng) {
    return run_cheater(spec, rng, noisy_alice_prob);
}

CheatOutcome run_cheat_bob(const FrameworkSpec &spec, TrialRng &rng) {
    return run_cheater(spec, rng, noisy_bob_prob);
}

const char *to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::honest_failure:
            return "honest_failure";
        case Scenario::cheat_alice:
            return "cheat_alice";
        case Scenario::cheat_bob:
            return "cheat_bob";
        case Scenario::honest_coin0:
            return "honest_coin0";
    }
    return "?";
}

Scenario parse_scenario(const std::string &name) {
    for (auto s : {Scenario::honest_failure, Scenario::cheat_alice, Scenario::cheat_bob, Scenario::honest_coin0}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw std::invalid_argument(
        "unknown scenario '" + name + "' (expected honest_failure, cheat_alice, cheat_bob or honest_coin0)");
}

TrialStats make_trial_stats(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    double est = static_cast<double>(successes) / static_cast<double>(trials);
    return TrialStats{trials, successes, est, std::sqrt(est * (1 - est) / static_cast<double>(trials)), seed};
}

TrialStats estimate(
    const FrameworkSpec &spec, Scenario scenario, std::uint64_t trials, std::uint64_t seed, std::size_t workers) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    if (workers == 0) {
        workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    workers = static_cast<std::size_t>(std::min<std::uint64_t>(workers, trials));

    if (workers == 1) {
        return make_trial_stats(trials, count_successes(spec, scenario, seed, 0, trials), seed);
    }

    std::vector<std::uint64_t> partial(workers, 0);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            std::uint64_t begin = trials * w / workers;
            std::uint64_t end = trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                partial[w] = count_successes(spec, scenario, seed, begin, end);
            });
        }
    }
    std::uint64_t successes = 0;
    for (auto s : partial) {
        successes += s;
    }
    return make_trial_stats(trials, successes, seed);
}

}  // namespace qcfnest
