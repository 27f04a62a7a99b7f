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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "json.hpp"
#include "qcfnest/analytics.h"
#include "qcfnest/fairness.h"
#include "qcfnest/quantum.h"

using namespace qcfnest;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;
    std::function<Check()> body;
};

std::string cli_output(const std::vector<std::string> &args, int &code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run_cli(args, out, err);
    return out.str();
}

std::string fmt(const char *format, double a, double b = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

Check table1_reproduction() {
    Check c;
    int code = 0;
    std::string csv = cli_output({"table1"}, code);
    c.require(code == 0, "table1 exit code " + std::to_string(code));
    c.require(
        csv ==
            "N,element_prob,cheat_prob,bias\n"
            "2,0.50,0.7500,0.2500\n"
            "3,0.50,0.8750,0.3750\n"
            "4,0.50,0.9375,0.4375\n"
            "5,0.50,0.9688,0.4688\n"
            "6,0.50,0.9844,0.4844\n",
        "table1 CSV differs:\n" + csv);
    for (const auto &row : table1()) {
        double exact = 1 - std::pow(0.5, static_cast<double>(row.depth));
        c.require(std::abs(row.nested_prob - exact) <= 1e-12, fmt("N=%g pre-rounding mismatch", row.depth));
    }
    return c;
}

Check fair_parameters() {
    Check c;
    int code = 0;
    auto half = nlohmann::json::parse(cli_output({"solve-fair", "bbbg09", "--coefficient", "half"}, code));
    c.require(code == 0, "solve-fair bbbg09 failed");
    double alpha_sq = half["alpha_sq"].get<double>();
    double beta_sq = half["beta_sq"].get<double>();
    double bias = half["framework_bias"].get<double>();
    c.require(std::abs(alpha_sq - 0.9) <= 1e-9, fmt("alpha_sq = %.15g", alpha_sq));
    c.require(std::abs(beta_sq - 0.1) <= 1e-9, fmt("beta_sq = %.15g", beta_sq));
    c.require(std::abs(bias - 0.45) <= 1e-9, fmt("bbbg09 bias = %.15g", bias));
    auto chailloux = nlohmann::json::parse(cli_output({"solve-fair", "chailloux"}, code));
    c.require(code == 0, "solve-fair chailloux failed");
    double cb = chailloux["framework_bias"].get<double>();
    c.require(std::abs(cb - 0.4295) <= 5e-4, fmt("chailloux bias = %.15g", cb));
    return c;
}

Check justice_bounds() {
    Check c;
    double one = justice_error(std::vector<double>{0.5}, 0.5);
    double two = justice_error(std::vector<double>{0.5, 0.5}, 0.5);
    c.require(one == 0.25, fmt("N=1 gives %.17g", one));
    c.require(two == 0.0625, fmt("N=2 gives %.17g", two));
    c.require(std::abs(round_half_up(two, 3) - 0.063) <= 1e-15, "N=2 does not round to 0.063");
    return c;
}

Check monte_carlo_agreement() {
    Check c;
    constexpr int kSpecs = 24;
    constexpr std::uint64_t kTrials = 100000;
    std::mt19937_64 gen(20260419);
    std::uniform_real_distribution<double> prob(0.5, 0.95);
    std::uniform_real_distribution<double> noise(0.0, 0.5);
    std::uniform_int_distribution<int> depth(1, 6);

    const Scenario scenarios[] = {Scenario::cheat_alice, Scenario::cheat_bob, Scenario::honest_failure};
    int within[3] = {0, 0, 0};
    for (int s = 0; s < kSpecs; ++s) {
        std::vector<ElementProfile> elements;
        int n = depth(gen);
        for (int i = 0; i < n; ++i) {
            elements.push_back(ElementProfile{"random", prob(gen), prob(gen), gen() % 2 ? 0.5 : 0.0});
        }
        FrameworkSpec spec(elements, NoiseSetting{noise(gen)});
        for (int k = 0; k < 3; ++k) {
            auto stats = estimate(spec, scenarios[k], kTrials, 1000003ULL * static_cast<std::uint64_t>(s) + k);
            within[k] += cli::sigma_distance(stats, analytic_value(spec, scenarios[k])) <= 4.0;
        }
    }
    for (int k = 0; k < 3; ++k) {
        c.require(
            within[k] * 100 >= 95 * kSpecs,
            std::string(to_string(scenarios[k])) + ": " + std::to_string(within[k]) + "/" +
                std::to_string(kSpecs) + " within 4 SE");
    }
    if (c.ok) {
        c.detail = std::to_string(kSpecs) + " specs; within 4 SE: alice " + std::to_string(within[0]) + ", bob " +
                   std::to_string(within[1]) + ", failure " + std::to_string(within[2]);
    }
    return c;
}

Check nested_bound_suite() {
    Check c;
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.5, 1.0);
    std::uniform_int_distribution<int> len(1, 10);
    for (int i = 0; i < 10000 && c.ok; ++i) {
        std::vector<double> probs(static_cast<std::size_t>(len(gen)));
        double survive = 1.0;
        for (auto &p : probs) {
            do {
                p = u(gen);
            } while (p == 0.5);
            survive *= 1 - p;
        }
        c.require(check_nested_bound(probs), "nested_prob reached 1");
        c.require(std::abs((1 - nested_prob(probs)) - survive) <= 1e-12, "complement identity off by > 1e-12");
    }
    return c;
}

Check noisy_structure() {
    Check c;
    for (double p : {0.5, 0.55, 0.6, 0.7, 0.8, 0.859, 0.9, 0.95, 0.99}) {
        for (double p_star : {0.0, 0.1, 0.25, 0.5}) {
            if (p_star > p) {
                continue;
            }
            for (double q : {0.5, 0.6, 0.75, 0.9, 0.99}) {
                ElementProfile e{"grid", p, q, p_star};
                c.require(noisy_alice_prob(e, {0.0}) == p, "alice P_e=0 endpoint");
                c.require(noisy_bob_prob(e, {0.0}) == q, "bob P_e=0 endpoint");
                for (int i = 0; i < 5; ++i) {
                    double a = i / 10.0;
                    double b = (i + 1) / 10.0;
                    double slope_a = (noisy_alice_prob(e, {b}) - noisy_alice_prob(e, {a})) / (b - a);
                    double slope_b = (noisy_bob_prob(e, {b}) - noisy_bob_prob(e, {a})) / (b - a);
                    c.require(std::abs(slope_a - (1 + p_star - 2 * p)) <= 1e-12, fmt("alice slope at p=%g", p));
                    c.require(std::abs(slope_b - (1 - 2 * q)) <= 1e-12, fmt("bob slope at q=%g", q));
                }
                if (p_star == 0.0) {
                    c.require(noisy_alice_prob(e, {0.5}) == 0.5, fmt("alice P_e=0.5 at p=%g", p));
                    c.require(noisy_bob_prob(e, {0.5}) == 0.5, fmt("bob P_e=0.5 at q=%g", q));
                }
            }
        }
    }
    return c;
}

Check channel_suite() {
    Check c;
    std::mt19937_64 gen(7);
    std::normal_distribution<double> g;
    auto random_density = [&](Eigen::Index n) {
        ComplexMatrix a(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) = Complex(g(gen), g(gen));
            }
        }
        ComplexMatrix rho = a * a.adjoint();
        rho /= rho.trace().real();
        return DensityOperator(0.5 * (rho + rho.adjoint()));
    };
    auto random_channel = [&](Eigen::Index d, Eigen::Index k) {
        ComplexMatrix a(d * k, d);
        for (Eigen::Index i = 0; i < d * k; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                a(i, j) = Complex(g(gen), g(gen));
            }
        }
        Eigen::HouseholderQR<ComplexMatrix> qr(a);
        ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(d * k, d);
        KrausChannel kraus;
        for (Eigen::Index i = 0; i < k; ++i) {
            kraus.operators.push_back(v.block(i * d, 0, d, d));
        }
        return QuantumChannel(std::move(kraus));
    };

    int cases = 0;
    for (Eigen::Index d = 2; d <= 4; ++d) {
        for (Eigen::Index k = 1; k <= 3; ++k) {
            for (int i = 0; i < 15; ++i, ++cases) {
                auto out = apply_channel(random_channel(d, k), random_density(d));
                c.require(std::abs(out.matrix().trace().real() - 1) <= 1e-10, "trace not preserved");
                c.require(min_hermitian_eigenvalue(out.matrix()) >= -1e-8, "positivity lost");
            }
        }
    }
    c.require(cases >= 100, "fewer than 100 random channel cases");

    for (auto kind : {StandardChannelKind::bit_flip, StandardChannelKind::depolarizing}) {
        for (double param : {0.0, 0.1, 0.2, 0.5, 0.9, 1.0}) {
            auto kraus = make_standard_channel({kind, param});
            auto dil = make_standard_dilation({kind, param});
            c.require(dil.dilation().env_dim <= 3, "dilation environment larger than 3");
            for (int i = 0; i < 4; ++i) {
                auto rho = random_density(2);
                double diff =
                    (apply_channel(kraus, rho).matrix() - apply_channel(dil, rho).matrix()).cwiseAbs().maxCoeff();
                c.require(diff <= 1e-9, fmt("Kraus/dilation mismatch %.3g at parameter %g", diff, param));
            }
        }
    }

    auto z = Povm::computational(2);
    auto zero = DensityOperator::basis_state(2, 0);
    double e_id = error_rate(make_standard_channel({StandardChannelKind::identity}), zero, z, 1);
    double e_flip = error_rate(make_standard_channel({StandardChannelKind::bit_flip, 0.1}), zero, z, 1);
    double e_dep = error_rate(make_standard_channel({StandardChannelKind::depolarizing, 0.2}), zero, z, 1);
    c.require(std::abs(e_id) <= 1e-10, fmt("identity error rate %.3g", e_id));
    c.require(std::abs(e_flip - 0.1) <= 1e-10, fmt("bit-flip error rate %.17g", e_flip));
    c.require(std::abs(e_dep - 0.1) <= 1e-10, fmt("depolarizing error rate %.17g", e_dep));
    return c;
}

Check sweep_endpoints() {
    Check c;
    ElementProfile base{"fig2", 0.8, 0.8, 0.5};
    auto grid = p_e_grid();
    std::vector<std::size_t> depths{1, 2, 3, 4};
    auto by_depth = sweep_alice_by_depth(base, depths, grid);
    c.require(std::abs(by_depth.curves[0].second.front() - 0.8) <= 1e-12, "N=1 endpoint");
    c.require(std::abs(by_depth.curves[1].second.front() - 0.96) <= 1e-12, "N=2 endpoint");
    std::vector<double> ps{0.76, 0.8, 0.9};
    auto by_p = sweep_alice_by_cheat_prob(base, ps, 2, grid);
    c.require(std::abs(by_p.curves[1].second.front() - 0.96) <= 1e-12, "p=0.8 endpoint");
    for (const auto *sweep : {&by_depth, &by_p}) {
        for (const auto &[label, curve] : sweep->curves) {
            for (std::size_t i = 1; i < curve.size(); ++i) {
                c.require(curve[i] <= curve[i - 1], label + " increases at P_e index " + std::to_string(i));
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Ideal-element table reproduction", 1.0, table1_reproduction},
        {2, "Fair-parameter reproduction", 1.0, fair_parameters},
        {3, "Justice-error bounds", 1.0, justice_bounds},
        {4, "Nested cheat / failure Monte Carlo agreement", 60.0, monte_carlo_agreement},
        {5, "Nested bound property suite", 5.0, nested_bound_suite},
        {6, "Noisy cheat probability structure", 1.0, noisy_structure},
        {7, "Quantum channel suite", 5.0, channel_suite},
        {8, "P_e sweep endpoints and monotonicity", 1.0, sweep_endpoints},
    };

    int failed = 0;
    for (const auto &criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.body();
        } catch (const std::exception &e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.ok && seconds >= criterion.time_limit_seconds) {
            result.ok = false;
            result.detail = fmt("took %.3f s, limit %.0f s", seconds, criterion.time_limit_seconds);
        }
        failed += !result.ok;
        std::printf(
            "[%s] criterion %d: %s (%.3f s)%s%s\n", result.ok ? "PASS" : "FAIL", criterion.id,
            criterion.name.c_str(), seconds, result.detail.empty() ? "" : " - ", result.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
