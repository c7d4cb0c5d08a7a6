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

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <wallcross/chow_integration.hpp>
#include <wallcross/dt_transforms.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/git_numerics.hpp>
#include <wallcross/invariant_table.hpp>
#include <wallcross/laurent.hpp>
#include <wallcross/lie_algebra.hpp>
#include <wallcross/polynomial.hpp>
#include <wallcross/pt_rationality.hpp>
#include <wallcross/ratfun.hpp>

namespace wallcross::random {

using Engine = std::mt19937_64;

inline std::int64_t uniform(Engine& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Engine& rng, int percent = 50) { return uniform(rng, 0, 99) < percent; }

template <typename T>
const T& pick(Engine& rng, const std::vector<T>& v)
{
    return v.at(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1)));
}

/// num/den with |num| <= bound, 1 <= den <= max_den.
inline Rational rational(Engine& rng, std::int64_t bound = 5, std::int64_t max_den = 4)
{
    return Rational(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
}

inline Rational nonzero_rational(Engine& rng, std::int64_t bound = 5, std::int64_t max_den = 4)
{
    for (;;) {
        auto r = rational(rng, bound, max_den);
        if (!r.is_zero()) {
            return r;
        }
    }
}

inline Polynomial polynomial(Engine& rng, std::int64_t max_degree = 3)
{
    std::vector<Rational> c;
    const auto deg = uniform(rng, 0, max_degree);
    for (std::int64_t i = 0; i <= deg; ++i) {
        c.push_back(rational(rng, 4, 3));
    }
    Polynomial p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        p += Polynomial::monomial(c[i], i);
    }
    return p;
}

inline Polynomial nonzero_polynomial(Engine& rng, std::int64_t max_degree = 3)
{
    for (;;) {
        auto p = polynomial(rng, max_degree);
        if (!p.is_zero()) {
            return p;
        }
    }
}

inline LaurentPoly laurent(Engine& rng, std::int64_t span = 3)
{
    LaurentPoly p;
    const auto count = uniform(rng, 0, 4);
    for (std::int64_t i = 0; i < count; ++i) {
        p += LaurentPoly::monomial(rational(rng, 4, 3), uniform(rng, -span, span));
    }
    return p;
}

inline RatFun ratfun(Engine& rng) { return RatFun::canonical(polynomial(rng), nonzero_polynomial(rng)); }

inline RatFun nonzero_ratfun(Engine& rng)
{
    return RatFun::canonical(nonzero_polynomial(rng), nonzero_polynomial(rng));
}

/// 1..max_arity generators with omega in 1..2, H in 1..3, and d in [min omega, max_d].
inline Geometry geometry(Engine& rng, std::int64_t max_arity, std::int64_t max_d)
{
    std::vector<Generator> gens;
    const auto arity = uniform(rng, 1, max_arity);
    std::int64_t min_omega = 2;
    for (std::int64_t i = 0; i < arity; ++i) {
        const auto w = uniform(rng, 1, 2);
        min_omega = std::min(min_omega, w);
        gens.push_back(Generator{"C" + std::to_string(i + 1), w, uniform(rng, 1, 3)});
    }
    const auto d = uniform(rng, min_omega, std::max(min_omega, max_d));
    return Geometry(std::move(gens), d);
}

inline Rational slope(Engine& rng)
{
    static const std::vector<Rational> slopes{Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2),
                                              Rational(3, 2), Rational(1, 3)};
    return pick(rng, slopes);
}

/// Random N_{1,beta} on a random subset of the classes within the truncation.
inline InvariantTable primitive_table(Engine& rng, const Geometry& g)
{
    InvariantTable t(g);
    for (const auto& beta : g.positive_classes()) {
        if (coin(rng, 60)) {
            t.set(1, beta, rational(rng, 3, 3));
        }
    }
    return t;
}

/// Random values on a random subset of the admissible keys.
inline InvariantTable admissible_table(Engine& rng, const SlopeContext& ctx)
{
    InvariantTable t(ctx.geometry());
    for (const auto& [n, beta] : ctx.admissible_keys()) {
        if (coin(rng, 70)) {
            t.set(n, beta, rational(rng, 3, 3));
        }
    }
    return t;
}

/// Series with no beta = 0 part; q-exponents in [-2, 2].
inline ConeSeries<Rational> positive_series(Engine& rng, const Geometry& g)
{
    ConeSeries<Rational> s(g);
    for (const auto& beta : g.positive_classes()) {
        const auto count = uniform(rng, 0, 2);
        for (std::int64_t i = 0; i < count; ++i) {
            s.add_term(uniform(rng, -2, 2), beta, rational(rng, 3, 3));
        }
    }
    return s;
}

/// Random element of the Lie algebra: r in 0..2, keys on the slope.
inline LieElement lie_element(Engine& rng, const SlopeContext& ctx)
{
    const auto& g = ctx.geometry();
    LieElement e(ctx);
    auto classes = g.positive_classes();
    classes.push_back(EffectiveClass::zero(g.arity()));
    const auto count = uniform(rng, 1, 4);
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& beta = pick(rng, classes);
        const auto n = beta.is_zero() ? std::optional<std::int64_t>(0) : ctx.slope_n(beta);
        if (!n) {
            continue;
        }
        const auto r = uniform(rng, 0, 2);
        if (r == 0 && beta.is_zero()) {
            continue;
        }
        e.add_term(GammaElement{r, beta, *n}, nonzero_rational(rng, 3, 2));
    }
    return e;
}

/// n_g^beta for g <= max_genus on a random subset of classes.
inline GVTable gv_table(Engine& rng, const Geometry& g, std::int64_t max_genus)
{
    GVTable t(g);
    for (const auto& beta : g.positive_classes()) {
        for (std::int64_t genus = 0; genus <= max_genus; ++genus) {
            if (coin(rng, 40)) {
                t.set(genus, beta, uniform(rng, -3, 3));
            }
        }
    }
    return t;
}

namespace detail {

/// Fills a stratum's local tables so that the stratum satisfies the local
/// relation by construction: DT^par is the product formula applied to the
/// multiple-cover extension of a random primitive table.
inline void fill_consistent(Engine& rng, ChowStratum& s, const Rational& mu)
{
    const SlopeContext local_ctx(s.local(), mu);
    const auto n1 = primitive_table(rng, s.local());
    const auto dt = dt_par_from_N(local_ctx, multiple_cover_extend(local_ctx, n1));
    for (const auto& [k, c] : dt.terms()) {
        if (!k.beta.is_zero()) {
            s.local_dtpar.set(k.n, k.beta, c);
        }
    }
    s.local_n1 = n1;
}

} // namespace detail

/**
 * A Chow model for a random class beta whose strata each satisfy the local
 * relation. Supports are either the global generators, a single component
 * beta/a with multiplicity a, or two components adding up to beta.
 */
inline ChowModel consistent_chow_model(Engine& rng, const Rational& mu, std::int64_t max_d)
{
    for (;;) {
        const auto g = geometry(rng, 2, max_d);
        std::vector<EffectiveClass> candidates;
        for (const auto& b : g.positive_classes()) {
            if ((mu * Rational(g.omega_degree(b))).is_integer()) {
                candidates.push_back(b);
            }
        }
        if (candidates.empty()) {
            continue;
        }
        const auto beta = pick(rng, candidates);
        ChowModel model(g, beta);
        const auto count = uniform(rng, 1, 3);
        for (std::int64_t i = 0; i < count; ++i) {
            const auto label = "s" + std::to_string(i + 1);
            const auto chi = uniform(rng, -3, 3);
            const auto kind = uniform(rng, 0, 2);
            std::vector<EffectiveClass> comps;
            std::vector<std::int64_t> gamma;
            if (kind == 0) {
                for (std::size_t j = 0; j < g.arity(); ++j) {
                    comps.push_back(g.unit(j));
                    gamma.push_back(beta[j]);
                }
            } else if (kind == 1) {
                std::vector<std::int64_t> divisors;
                for (std::int64_t a = 1; a <= beta.content(); ++a) {
                    if (beta.content() % a == 0) {
                        divisors.push_back(a);
                    }
                }
                const auto a = pick(rng, divisors);
                comps.push_back(beta.divided_by(a));
                gamma.push_back(a);
            } else {
                std::vector<EffectiveClass> parts;
                for (const auto& c : g.positive_classes()) {
                    if (c.dominated_by(beta) && !(c == beta)) {
                        parts.push_back(c);
                    }
                }
                if (parts.empty()) {
                    comps.push_back(beta);
                    gamma.push_back(1);
                } else {
                    const auto c1 = pick(rng, parts);
                    comps.push_back(c1);
                    comps.push_back(beta - c1);
                    gamma = {1, 1};
                }
            }
            auto& s = model.add_stratum(label, chi, comps, EffectiveClass(gamma));
            detail::fill_consistent(rng, s, mu);
        }
        return model;
    }
}

/// Weakly increasing filtration ending at random totals.
inline WeightData weight_data(Engine& rng)
{
    WeightData w;
    w.totals.dim_v = uniform(rng, 1, 6);
    w.totals.dim_a = uniform(rng, 0, 6);
    w.totals.chi_f = Polynomial{Rational(uniform(rng, -3, 5)), Rational(uniform(rng, 1, 4))};
    const auto steps = uniform(rng, 0, 3);
    std::int64_t v = 0;
    std::int64_t a = 0;
    for (std::int64_t i = 0; i < steps; ++i) {
        v = uniform(rng, v, w.totals.dim_v);
        a = uniform(rng, a, w.totals.dim_a);
        w.steps.push_back(FiltrationStep{v, Polynomial{rational(rng, 4, 1), rational(rng, 4, 1)}, a});
    }
    w.steps.push_back(FiltrationStep{w.totals.dim_v, w.totals.chi_f, w.totals.dim_a});
    return w;
}

} // namespace wallcross::random
