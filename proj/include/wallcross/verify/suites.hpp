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

#pragma once

/**
 * @file suites.hpp
 * @brief Randomized property and oracle suites.
 *
 * Each suite draws its cases from a seeded engine, so a (seed, count, max_d)
 * triple reproduces a run exactly. Failures carry a short description of the
 * offending case.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <wallcross/chow_integration.hpp>
#include <wallcross/cone_series.hpp>
#include <wallcross/dt_transforms.hpp>
#include <wallcross/git_numerics.hpp>
#include <wallcross/lie_algebra.hpp>
#include <wallcross/pt_rationality.hpp>
#include <wallcross/verify/oracles.hpp>
#include <wallcross/verify/random.hpp>

namespace wallcross::verify {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }

    void expect(bool condition, const std::string& what)
    {
        if (!condition && failures.size() < 20) {
            failures.push_back(what);
        } else if (!condition) {
            failures.back() = "(further failures truncated)";
        }
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::int64_t max_d = 6;
    /// Multiplies every suite's default case count.
    double scale = 1.0;
};

namespace detail {

inline std::size_t scaled(const SuiteOptions& o, std::size_t base)
{
    const auto n = static_cast<std::size_t>(static_cast<double>(base) * o.scale);
    return n == 0 ? 1 : n;
}

inline oracle::NaiveGeometry naive(const Geometry& g)
{
    oracle::NaiveGeometry out;
    for (const auto& gen : g.generators()) {
        out.omega.push_back(gen.omega_degree);
        out.h.push_back(gen.h_degree);
    }
    out.d = g.truncation();
    return out;
}

inline oracle::NaiveSeries naive(const ConeSeries<Rational>& s)
{
    oracle::NaiveSeries out;
    for (const auto& [k, c] : s.terms()) {
        out[{k.n, k.beta.multiplicities()}] = c;
    }
    return out;
}

inline std::string describe(const Geometry& g, const Rational& mu)
{
    std::string s = "geometry{";
    for (const auto& gen : g.generators()) {
        s += "(" + std::to_string(gen.omega_degree) + "," + std::to_string(gen.h_degree) + ")";
    }
    return s + " d=" + std::to_string(g.truncation()) + "} mu=" + mu.to_string();
}

} // namespace detail

/// Field axioms on RatFun, q <-> 1/q involution, gcd scaling, Laurent vs RatFun products.
inline SuiteResult algebra_suite(const SuiteOptions& o, std::size_t base = 200)
{
    SuiteResult r{"algebra", 0, {}};
    random::Engine rng(o.seed);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto a = random::ratfun(rng);
        const auto b = random::ratfun(rng);
        const auto c = random::ratfun(rng);
        r.expect((a + b) + c == a + (b + c), "RatFun addition not associative");
        r.expect((a * b) * c == a * (b * c), "RatFun multiplication not associative");
        r.expect(a * (b + c) == a * b + a * c, "RatFun distributivity fails");
        if (!a.is_zero()) {
            r.expect(a * a.inverse() == RatFun(1), "RatFun inverse fails for " + to_string(a));
        }
        r.expect(a.q_inverse().q_inverse() == a, "q-inversion not an involution on " + to_string(a));

        const auto pa = random::polynomial(rng);
        const auto pb = random::polynomial(rng);
        const auto pc = random::nonzero_polynomial(rng);
        r.expect(poly_gcd(pa * pc, pb * pc) == pc.monic() * poly_gcd(pa, pb), "gcd scaling property fails");

        const auto la = random::laurent(rng);
        const auto lb = random::laurent(rng);
        r.expect(RatFun::from_laurent(la * lb) == RatFun::from_laurent(la) * RatFun::from_laurent(lb),
                 "Laurent product differs from RatFun product");
    }
    return r;
}

/// series_exp against the naive Taylor sum; log(exp(a)) = a; exp(log(1 + a)) = 1 + a.
inline SuiteResult exp_log_suite(const SuiteOptions& o, std::size_t base = 200)
{
    SuiteResult r{"exp-log oracle", 0, {}};
    random::Engine rng(o.seed + 1);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 3, o.max_d);
        const auto a = random::positive_series(rng, g);
        const auto e = series_exp(a);
        const auto ng = detail::naive(g);
        const auto expected = oracle::naive_exp(ng, detail::naive(a), g.truncation() / g.min_omega_degree() + 1);
        r.expect(detail::naive(e) == expected, "exp differs from Taylor oracle on " + detail::describe(g, 0));
        r.expect(series_log(e) == a, "log(exp(a)) != a on " + detail::describe(g, 0));
        const auto unit = ConeSeries<Rational>::one(g) + a;
        r.expect(series_exp(series_log(unit)) == unit, "exp(log(1 + a)) != 1 + a on " + detail::describe(g, 0));
    }
    return r;
}

/**
 * Product formula on the multiple-cover extension equals the product side;
 * every check flag is true; perturbing one N entry flips exactly that flag.
 */
inline SuiteResult multcover_suite(const SuiteOptions& o, std::size_t base = 100)
{
    SuiteResult r{"multiple-cover equivalence", 0, {}};
    random::Engine rng(o.seed + 2);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 3, o.max_d);
        const SlopeContext ctx(g, random::slope(rng));
        const auto n1 = random::primitive_table(rng, g);
        const auto N = multiple_cover_extend(ctx, n1);
        const auto where = detail::describe(g, ctx.mu());

        r.expect(dt_par_from_N(ctx, N) == gv_product_side(ctx, n1), "product sides differ on " + where);
        const auto report = check_multcover_equiv(ctx, N, n1);
        r.expect(report.all_ok(), "check flags not all true on " + where);

        for (const auto& [nb, beta] : ctx.admissible_keys()) {
            const auto brute = oracle::brute_force_divisor_sum(
                [&] {
                    std::map<std::vector<std::int64_t>, Rational> m;
                    for (const auto& [k, v] : n1.entries()) {
                        m[k.beta.multiplicities()] = v;
                    }
                    return m;
                }(),
                nb, beta.multiplicities());
            r.expect(N.get(nb, beta) == brute, "divisor sum differs from brute force at " + beta.to_string());
        }

        const auto keys = ctx.admissible_keys();
        if (keys.empty()) {
            continue;
        }
        const auto& [pn, pbeta] = random::pick(rng, keys);
        auto perturbed = N;
        perturbed.add(pn, pbeta, random::nonzero_rational(rng, 2, 3));
        const auto failing = check_multcover_equiv(ctx, perturbed, n1).failing_keys();
        r.expect(failing.size() == 1 && failing.front().first == pn && failing.front().second == pbeta,
                 "perturbing (" + std::to_string(pn) + ", " + pbeta.to_string() + ") did not flip exactly that flag on "
                     + where);
    }
    return r;
}

/// Adjoint expansion against the product formula.
inline SuiteResult lie_transform_suite(const SuiteOptions& o, std::size_t base = 50)
{
    SuiteResult r{"adjoint expansion vs product formula", 0, {}};
    random::Engine rng(o.seed + 3);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 3, std::min<std::int64_t>(o.max_d, 5));
        const SlopeContext ctx(g, random::slope(rng));
        const auto N = random::admissible_table(rng, ctx);
        r.expect(lie_transform_check(ctx, N).all_ok(), "mismatch on " + detail::describe(g, ctx.mu()));
    }
    return r;
}

/// Antisymmetry and the Jacobi identity on random triples.
inline SuiteResult lie_axioms_suite(const SuiteOptions& o, std::size_t base = 500)
{
    SuiteResult r{"Lie axioms", 0, {}};
    random::Engine rng(o.seed + 4);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 3, o.max_d);
        const SlopeContext ctx(g, random::slope(rng));
        const auto x = random::lie_element(rng, ctx);
        const auto y = random::lie_element(rng, ctx);
        const auto z = random::lie_element(rng, ctx);
        const auto where = detail::describe(g, ctx.mu());
        r.expect(lie_bracket(x, y) == -lie_bracket(y, x), "antisymmetry fails on " + where);
        r.expect(lie_bracket(x, x).is_zero(), "[x, x] != 0 on " + where);
        const auto jacobi =
            lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
        r.expect(jacobi.is_zero(), "Jacobi fails on " + where);
    }
    return r;
}

/**
 * q <-> 1/q symmetry of every PT coefficient from random GV data, and the
 * one-class genus-0 case against the truncated product.
 */
inline SuiteResult pt_suite(const SuiteOptions& o, std::size_t base = 30)
{
    SuiteResult r{"PT rationality", 0, {}};
    random::Engine rng(o.seed + 5);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 2, std::min<std::int64_t>(o.max_d, 4));
        const auto gv = random::gv_table(rng, g, 2);
        const auto pt = gv_expand(g, gv);
        for (const auto& [k, f] : pt.terms()) {
            r.expect(rationality_check(f), "coefficient at " + k.beta.to_string() + " not symmetric: " + to_string(f));
        }
    }

    // One class, n_0 = a: compare q-expansions of t^m coefficients with the truncated product.
    for (std::int64_t a = -2; a <= 2; ++a, ++r.cases) {
        if (a == 0) {
            continue;
        }
        const auto g = Geometry::single(1, 1, 3);
        GVTable gv(g);
        gv.set(0, EffectiveClass{1}, a);
        const auto pt = gv_expand(g, gv);
        const auto product = oracle::gv_genus0_truncated_product(a, 40, 30, 3);
        for (std::int64_t m = 1; m <= 3; ++m) {
            const auto f = pt.coefficient(0, EffectiveClass{m});
            r.expect(f.laurent_expansion(30) == product[static_cast<std::size_t>(m)],
                     "t^" + std::to_string(m) + " coefficient differs from truncated product for n0 = "
                         + std::to_string(a));
        }
    }
    return r;
}

/// PT from GV data with N built from the genus-0 invariants: every L coefficient
/// is a symmetric Laurent polynomial and the pure genus-0 part cancels.
inline SuiteResult l_series_suite(const SuiteOptions& o, std::size_t base = 20)
{
    SuiteResult r{"L-series", 0, {}};
    random::Engine rng(o.seed + 6);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto g = random::geometry(rng, 2, std::min<std::int64_t>(o.max_d, 4));
        const auto gv = random::gv_table(rng, g, 2);
        PTInvariantData data(g);
        GVTable genus0(g);
        for (const auto& [k, v] : gv.entries()) {
            if (k.genus == 0) {
                data.multiple_cover.set(1, k.beta, Rational(v));
                genus0.set(0, k.beta, v);
            }
        }
        const auto L = l_series_solve(g, gv_expand(g, gv), data);
        r.expect(l_symmetry_report(L).all_ok(), "L not symmetric Laurent on " + detail::describe(g, 0));
        r.expect(l_series_solve(g, gv_expand(g, genus0), data) == PTSeries::one(g),
                 "genus-0 part does not cancel on " + detail::describe(g, 0));
    }
    return r;
}

/// Random Chow models with locally consistent strata pass the global check.
inline SuiteResult local_global_suite(const SuiteOptions& o, std::size_t base = 50)
{
    SuiteResult r{"local-to-global", 0, {}};
    random::Engine rng(o.seed + 7);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        const auto mu = random::slope(rng);
        const auto model = random::consistent_chow_model(rng, mu, std::min<std::int64_t>(o.max_d, 5));
        const auto report = local_to_global_check(model, mu);
        const auto where = detail::describe(model.geometry(), mu) + " beta=" + model.beta().to_string();
        r.expect(report.inconsistent_strata().empty(), "generated stratum not consistent on " + where);
        r.expect(report.global_ok, "global check fails on " + where);
        r.expect(report.n_hat_global == report.n_hat_global_reindexed, "summation orders disagree on " + where);
    }
    return r;
}

/// Trivial filtrations, homogeneity, and scaling invariance of the stability sign.
inline SuiteResult git_suite(const SuiteOptions& o, std::size_t base = 200)
{
    SuiteResult r{"GIT numerics", 0, {}};
    random::Engine rng(o.seed + 8);
    const auto count = detail::scaled(o, base);
    for (std::size_t i = 0; i < count; ++i, ++r.cases) {
        auto w = random::weight_data(rng);
        WeightData trivial{w.totals, {FiltrationStep{w.totals.dim_v, w.totals.chi_f, w.totals.dim_a}}};
        r.expect(hm_weight(trivial).is_zero(), "trivial filtration has nonzero weight");

        const auto k = random::uniform(rng, 2, 4);
        auto scaled = w;
        scaled.totals.dim_v *= k;
        scaled.totals.dim_a *= k;
        scaled.totals.chi_f = scaled.totals.chi_f * Rational(k);
        for (auto& s : scaled.steps) {
            s.dim_v *= k;
            s.dim_a *= k;
            s.chi_f = s.chi_f * Rational(k);
        }
        r.expect(hm_weight(scaled) == hm_weight(w) * Rational(k), "weight not degree-1 homogeneous");

        if (w.totals.dim_v >= 2) {
            SubspaceDatum sub{random::uniform(rng, 1, w.totals.dim_v - 1),
                              Polynomial{random::rational(rng, 4, 1), random::rational(rng, 4, 1)},
                              random::uniform(rng, 0, w.totals.dim_a)};
            SubspaceDatum sub_k{sub.dim_v * k, sub.chi_f * Rational(k), sub.dim_a * k};
            WeightTotals totals_k{w.totals.dim_v * k, w.totals.chi_f * Rational(k), w.totals.dim_a * k};
            r.expect(git_stability_test(w.totals, sub) == git_stability_test(totals_k, sub_k),
                     "stability sign not scale invariant");

            // Two-step grading V_{<=0} = V', V_{<=1} = V: weight sign agrees with the subspace test.
            WeightData two{w.totals,
                           {FiltrationStep{sub.dim_v, sub.chi_f, sub.dim_a},
                            FiltrationStep{w.totals.dim_v, w.totals.chi_f, w.totals.dim_a}}};
            r.expect(asymptotic_sign(hm_weight(two)) == git_stability_test(w.totals, sub),
                     "two-step weight sign differs from subspace test");
        }
    }
    return r;
}

inline std::vector<SuiteResult> run_all(const SuiteOptions& o)
{
    return {algebra_suite(o),      exp_log_suite(o), multcover_suite(o),    lie_transform_suite(o), lie_axioms_suite(o),
            pt_suite(o),           l_series_suite(o), local_global_suite(o), git_suite(o)};
}

} // namespace wallcross::verify
