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

// Hilbert-Mumford weights of filtrations of pair data, as polynomials in l,
// and the asymptotic (l >> 0) sign test for a single subspace.

#include <cstdint>
#include <string>
#include <vector>

#include <wallcross/errors.hpp>
#include <wallcross/polynomial.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

struct FiltrationStep {
    std::int64_t dim_v = 0;
    Polynomial chi_f;
    std::int64_t dim_a = 0;
};

struct WeightTotals {
    std::int64_t dim_v = 0;
    Polynomial chi_f;
    std::int64_t dim_a = 0;
};

struct WeightData {
    WeightTotals totals;
    std::vector<FiltrationStep> steps;
};

struct SubspaceDatum {
    std::int64_t dim_v = 0;
    Polynomial chi_f;
    std::int64_t dim_a = 0;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline std::string to_string(Sign s)
{
    switch (s) {
    case Sign::negative:
        return "negative";
    case Sign::zero:
        return "zero";
    case Sign::positive:
        return "positive";
    }
    return "zero";
}

inline void validate(const WeightData& w)
{
    if (w.totals.dim_v <= 0) {
        throw malformed_filtration("dim V must be positive");
    }
    if (w.totals.dim_a < 0 || w.totals.chi_f.degree() > 1) {
        throw malformed_filtration("totals need dim A >= 0 and a Hilbert polynomial of degree <= 1");
    }
    if (w.steps.empty()) {
        throw malformed_filtration("filtration has no steps");
    }
    std::int64_t prev_v = 0;
    std::int64_t prev_a = 0;
    for (const auto& s : w.steps) {
        if (s.dim_v < prev_v || s.dim_a < prev_a) {
            throw malformed_filtration("filtration dimensions must be weakly increasing");
        }
        if (s.chi_f.degree() > 1) {
            throw malformed_filtration("step Hilbert polynomial has degree > 1");
        }
        prev_v = s.dim_v;
        prev_a = s.dim_a;
    }
    if (prev_v != w.totals.dim_v || prev_a != w.totals.dim_a) {
        throw malformed_filtration("last step must equal the totals");
    }
}

/// dim V (chi_{F<=k} + dim A_{<=k}) - dim V_{<=k} (chi_F + dim A)
inline Polynomial hm_weight_summand(const WeightTotals& t, const FiltrationStep& s)
{
    return (s.chi_f + Polynomial(Rational(s.dim_a))) * Rational(t.dim_v)
         - (t.chi_f + Polynomial(Rational(t.dim_a))) * Rational(s.dim_v);
}

/// (1 / dim V) * sum over steps of hm_weight_summand.
inline Polynomial hm_weight(const WeightData& w)
{
    validate(w);
    Polynomial sum;
    for (const auto& s : w.steps) {
        sum += hm_weight_summand(w.totals, s);
    }
    return sum * Rational(1, w.totals.dim_v);
}

/// Sign of p(l) for l >> 0: the leading nonzero coefficient decides.
inline Sign asymptotic_sign(const Polynomial& p)
{
    const auto lead = p.leading().sign();
    return lead > 0 ? Sign::positive : lead < 0 ? Sign::negative : Sign::zero;
}

/// Sign of dim V (chi_{F'} + dim A') - dim V' (chi_F + dim A) for l >> 0.
inline Sign git_stability_test(const WeightTotals& t, const SubspaceDatum& sub)
{
    if (sub.dim_v <= 0 || sub.dim_v >= t.dim_v) {
        throw not_proper_subspace("need 0 < dim V' < dim V, got dim V' = " + std::to_string(sub.dim_v)
                                  + ", dim V = " + std::to_string(t.dim_v));
    }
    const auto lhs = (sub.chi_f + Polynomial(Rational(sub.dim_a))) * Rational(t.dim_v)
                   - (t.chi_f + Polynomial(Rational(t.dim_a))) * Rational(sub.dim_v);
    return asymptotic_sign(lhs);
}

} // namespace wallcross
