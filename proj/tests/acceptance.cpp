/*
 * Copyright 2026 The wallcross Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All comparisons are exact.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <wallcross/dt_transforms.hpp>
#include <wallcross/git_numerics.hpp>
#include <wallcross/pt_rationality.hpp>
#include <wallcross/scenario.hpp>
#include <wallcross/verify/oracles.hpp>
#include <wallcross/verify/suites.hpp>

using namespace wallcross;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }

    void absorb(const verify::SuiteResult& r)
    {
        for (const auto& f : r.failures) {
            expect(false, r.name + ": " + f);
        }
        detail += (detail.empty() ? "" : "; ") + std::to_string(r.cases) + " cases";
    }
};

EffectiveClass C(std::int64_t m) { return EffectiveClass{m}; }

InvariantTable conifold_table(const SlopeContext& ctx)
{
    InvariantTable N(ctx.geometry());
    const auto mu = *ctx.mu().to_int64();
    for (std::int64_t m = 1; m <= ctx.geometry().truncation(); ++m) {
        N.set(mu * m, C(m), Rational(1, m * m));
    }
    return N;
}

ConeSeries<Rational> one_plus_qmu_t(const SlopeContext& ctx)
{
    auto s = ConeSeries<Rational>::one(ctx.geometry());
    s.add_term(*ctx.mu().to_int64(), C(1), Rational(1));
    return s;
}

verify::SuiteOptions options(std::uint64_t seed, std::int64_t max_d) { return verify::SuiteOptions{seed, max_d, 1.0}; }

Outcome conifold_forward()
{
    Outcome o;
    for (std::int64_t mu : {0, 1, 2}) {
        const SlopeContext ctx(Geometry::single(1, 1, 6), Rational(mu));
        o.expect(dt_par_from_N(ctx, conifold_table(ctx)) == one_plus_qmu_t(ctx), "mu = " + std::to_string(mu));
    }
    return o;
}

Outcome conifold_inverse()
{
    Outcome o;
    for (std::int64_t mu : {0, 1, 2}) {
        const SlopeContext ctx(Geometry::single(1, 1, 6), Rational(mu));
        o.expect(N_from_dt_par(ctx, one_plus_qmu_t(ctx)) == conifold_table(ctx), "mu = " + std::to_string(mu));
    }
    return o;
}

Outcome multcover_equivalence()
{
    Outcome o;
    o.absorb(verify::multcover_suite(options(3, 6), 100));
    return o;
}

Outcome lie_cross_check()
{
    Outcome o;
    o.absorb(verify::lie_transform_suite(options(4, 5), 50));
    return o;
}

Outcome lie_axioms()
{
    Outcome o;
    o.absorb(verify::lie_axioms_suite(options(5, 6), 500));
    return o;
}

Outcome pt_rationality()
{
    Outcome o;
    const auto g = Geometry::single(1, 1, 1);
    GVTable gv(g);
    gv.set(0, C(1), 1);
    const auto f = pt_beta(gv_expand(g, gv), C(1));
    const auto expected = RatFun::canonical(Polynomial{Rational(0), Rational(1)},
                                            Polynomial{Rational(1), Rational(2), Rational(1)});
    o.expect(f == expected, "pt_beta = " + to_string(f));
    o.expect(to_string(f) == "q / 1 + 2*q + q^2", "canonical form " + to_string(f));
    o.expect(rationality_check(f), "not fixed by q <-> 1/q");
    const auto product = oracle::gv_genus0_truncated_product(1, 40, 30, 1);
    o.expect(f.laurent_expansion(30) == product[1], "q-expansion differs from the truncated product");
    return o;
}

Outcome l_series()
{
    Outcome o;
    const auto g = Geometry::single(1, 1, 4);
    GVTable gv(g);
    gv.set(0, C(1), 1);
    PTInvariantData data(g);
    data.multiple_cover.set(1, C(1), Rational(1));
    const auto L = l_series_solve(g, gv_expand(g, gv), data);
    const auto report = l_symmetry_report(L);
    o.expect(report.all_ok(), "some f_beta is not a symmetric Laurent polynomial");
    o.expect(L.coefficient(0, C(1)).is_zero(), "f_[C] != 0");
    for (std::int64_t m = 1; m <= 4; ++m) {
        o.expect(pt_beta(L, C(m)).is_zero(), "f_[" + std::to_string(m) + "] != 0");
    }
    return o;
}

Outcome local_to_global()
{
    Outcome o;
    o.absorb(verify::local_global_suite(options(8, 5), 50));
    return o;
}

Outcome exp_log_oracle()
{
    Outcome o;
    o.absorb(verify::exp_log_suite(options(9, 6), 200));
    return o;
}

Outcome git_numerics()
{
    Outcome o;
    const auto P = [](std::string_view s) { return parse_polynomial(s, "l"); };

    WeightData trivial;
    trivial.totals = WeightTotals{4, P("2 + 2*l"), 3};
    trivial.steps = {FiltrationStep{4, P("2 + 2*l"), 3}};
    o.expect(hm_weight(trivial).is_zero(), "trivial filtration has nonzero weight");

    WeightData w;
    w.totals = WeightTotals{2, P("1 + 2*l"), 3};
    w.steps = {FiltrationStep{1, P("l"), 1}, FiltrationStep{2, P("1 + 2*l"), 3}};
    WeightData doubled;
    doubled.totals = WeightTotals{4, P("2 + 4*l"), 6};
    doubled.steps = {FiltrationStep{2, P("2*l"), 2}, FiltrationStep{4, P("2 + 4*l"), 6}};
    o.expect(hm_weight(w) == Polynomial(-1), "weight example is " + to_string(hm_weight(w), "l"));
    o.expect(hm_weight(doubled) == hm_weight(w) * Rational(2), "weight not degree-1 homogeneous");

    const auto fixture = scenario::load(std::string(WALLCROSS_SCENARIOS) + "/git_example.json");
    const auto& totals = fixture.weight_data->totals;
    const auto sub = *fixture.subspace;
    o.expect(git_stability_test(totals, sub) == Sign::negative, "fixture subspace does not destabilize");
    auto enough_sections = sub;
    enough_sections.dim_a = 2;
    o.expect(git_stability_test(totals, enough_sections) == Sign::positive, "dim A' = 2 is not positive");
    const WeightTotals totals3{totals.dim_v * 3, totals.chi_f * Rational(3), totals.dim_a * 3};
    const SubspaceDatum sub3{sub.dim_v * 3, sub.chi_f * Rational(3), sub.dim_a * 3};
    o.expect(git_stability_test(totals3, sub3) == Sign::negative, "sign changes under scaling");

    o.absorb(verify::git_suite(options(10, 6), 200));
    return o;
}

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args)
{
    Run r;
    const std::string command = std::string("\"") + WALLCROSS_CLI + "\" " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Outcome cli_determinism()
{
    Outcome o;
    const auto args = "run \"" + std::string(WALLCROSS_SCENARIOS) + "/conifold.json\"";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    o.expect(a.status == 0, "first run exited " + std::to_string(a.status));
    o.expect(b.status == 0, "second run exited " + std::to_string(b.status));
    o.expect(!a.out.empty(), "no output");
    o.expect(a.out == b.out, "outputs differ");
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> check;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "conifold forward transform", 1.0, conifold_forward},
        {2, "conifold inverse transform", 1.0, conifold_inverse},
        {3, "multiple-cover equivalence on random data", 30.0, multcover_equivalence},
        {4, "adjoint expansion vs product formula", 30.0, lie_cross_check},
        {5, "Lie algebra axioms", 0.0, lie_axioms},
        {6, "PT rationality", 5.0, pt_rationality},
        {7, "L-series symmetry", 5.0, l_series},
        {8, "local-to-global", 10.0, local_to_global},
        {9, "exp/log oracle", 0.0, exp_log_oracle},
        {10, "GIT numerics", 0.0, git_numerics},
        {11, "CLI determinism", 0.0, cli_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (c.limit_seconds > 0 && elapsed.count() >= c.limit_seconds) {
            o.expect(false, "took longer than " + std::to_string(c.limit_seconds) + " s");
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << elapsed.count()
             << " s)";
        if (!o.detail.empty()) {
            line << " [" << o.detail << "]";
        }
        std::cout << line.str() << std::endl;
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
