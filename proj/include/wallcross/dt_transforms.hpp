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
 * @file dt_transforms.hpp
 * @brief Transforms between generalized DT invariants N_{n,beta} and the
 *        parabolic pair series DT^par(mu, d) at a fixed slope.
 *
 *   DT^par(mu, d) = prod_{(n,beta) admissible} exp((-1)^{h-1} N_{n,beta} q^n t^beta)^h,
 *   h = beta.H
 *
 * and its logarithmic inverse. The multiple cover formula
 *
 *   N_{n,beta} = sum_{k | (n,beta)} N_{1,beta/k} / k^2
 *
 * holds on a key exactly when the log coefficient of DT^par there equals
 * (-1)^{h-1} h times the divisor sum; check_multcover_equiv reports that
 * comparison key by key.
 *
 * Primitive tables ("N1") hold N_{1,beta}: every key has n = 1 and the key
 * need not be admissible for the slope.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <wallcross/cone_series.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/invariant_table.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

using SlopeSeries = ConeSeries<Rational>;

namespace detail {

inline void require_same_geometry(const SlopeContext& ctx, const Geometry& g)
{
    if (!(ctx.geometry() == g)) {
        throw geometry_mismatch("table geometry differs from the slope context");
    }
}

inline void require_admissible(const SlopeContext& ctx, std::int64_t n, const EffectiveClass& beta)
{
    ctx.geometry().check(beta);
    if (!ctx.geometry().within_truncation(beta)) {
        throw inadmissible_key("class " + beta.to_string() + " lies beyond the truncation");
    }
    if (!ctx.admissible(n, beta)) {
        throw inadmissible_key("(" + std::to_string(n) + ", " + beta.to_string() + ") is not on slope "
                               + ctx.mu().to_string());
    }
}

inline void require_admissible(const SlopeContext& ctx, const InvariantTable& table)
{
    require_same_geometry(ctx, table.geometry());
    for (const auto& [k, v] : table.entries()) {
        require_admissible(ctx, k.n, k.beta);
    }
}

inline void require_primitive(const SlopeContext& ctx, const InvariantTable& n1)
{
    require_same_geometry(ctx, n1.geometry());
    for (const auto& [k, v] : n1.entries()) {
        if (k.n != 1) {
            throw bad_primitive_table("primitive table has key with n = " + std::to_string(k.n));
        }
        if (k.beta.is_zero()) {
            throw bad_primitive_table("primitive table has the zero class");
        }
        if (k.omega > ctx.geometry().truncation()) {
            throw out_of_truncation("primitive class " + k.beta.to_string() + " lies beyond the truncation");
        }
    }
}

/// (-1)^{h-1}
inline Rational odd_sign(std::int64_t h) { return Rational(sign_power(h - 1)); }

inline Rational divisor_sum(const InvariantTable& n1, std::int64_t n, const EffectiveClass& beta)
{
    Rational sum(0);
    const auto e = divisibility(n, beta);
    for (std::int64_t k = 1; k <= e; ++k) {
        if (e % k == 0) {
            sum += n1.get(1, beta.divided_by(k)) * Rational(1, k * k);
        }
    }
    return sum;
}

} // namespace detail

/// The product formula for DT^par(mu, d).
inline SlopeSeries dt_par_from_N(const SlopeContext& ctx, const InvariantTable& N)
{
    detail::require_admissible(ctx, N);
    const auto& g = ctx.geometry();
    auto result = SlopeSeries::one(g);
    for (const auto& [k, value] : N.entries()) {
        const auto h = g.h_degree(k.beta);
        const auto factor = series_exp(SlopeSeries::monomial(g, detail::odd_sign(h) * value, k.n, k.beta));
        auto powered = factor;
        for (std::int64_t i = 1; i < h; ++i) {
            powered = powered * factor;
        }
        result = result * powered;
    }
    return result;
}

/// Inverts dt_par_from_N through the logarithm.
inline InvariantTable N_from_dt_par(const SlopeContext& ctx, const SlopeSeries& s)
{
    if (!(s.geometry() == ctx.geometry())) {
        throw geometry_mismatch("series geometry differs from the slope context");
    }
    for (const auto& [k, c] : s.terms()) {
        if (!k.beta.is_zero()) {
            detail::require_admissible(ctx, k.n, k.beta);
        }
    }
    const auto log_s = series_log(s);
    InvariantTable out(ctx.geometry());
    for (const auto& [k, c] : log_s.terms()) {
        const auto h = ctx.geometry().h_degree(k.beta);
        out.set(k.n, k.beta, detail::odd_sign(h) * c / Rational(h));
    }
    return out;
}

/// N_{n,beta} = sum_{k | (n,beta)} N_{1,beta/k} / k^2 on every admissible key.
inline InvariantTable multiple_cover_extend(const SlopeContext& ctx, const InvariantTable& n1)
{
    detail::require_primitive(ctx, n1);
    InvariantTable out(ctx.geometry());
    for (const auto& [n, beta] : ctx.admissible_keys()) {
        out.set(n, beta, detail::divisor_sum(n1, n, beta));
    }
    return out;
}

/// prod (1 - (-1)^h q^n t^beta)^{h N_{1,beta}} over admissible keys.
inline SlopeSeries gv_product_side(const SlopeContext& ctx, const InvariantTable& n1)
{
    detail::require_primitive(ctx, n1);
    const auto& g = ctx.geometry();
    auto result = SlopeSeries::one(g);
    for (const auto& [n, beta] : ctx.admissible_keys()) {
        const auto value = n1.get(1, beta);
        if (value.is_zero()) {
            continue;
        }
        const auto h = g.h_degree(beta);
        auto base = SlopeSeries::one(g);
        base.add_term(n, beta, Rational(-sign_power(h)));
        result = result * series_pow(base, Rational(h) * value);
    }
    return result;
}

/// Coefficient of q^n t^beta in log s.
inline Rational dt_hat(const SlopeContext& ctx, const SlopeSeries& s, std::int64_t n, const EffectiveClass& beta)
{
    if (!ctx.geometry().within_truncation(beta)) {
        throw out_of_truncation("class " + beta.to_string() + " lies beyond the truncation");
    }
    detail::require_admissible(ctx, n, beta);
    return coefficient(series_log(s), n, beta);
}

/// sum_{k | (n,beta)} N_{1,beta/k} / k^2
inline Rational n_hat(const SlopeContext& ctx, const InvariantTable& n1, std::int64_t n, const EffectiveClass& beta)
{
    if (!ctx.geometry().within_truncation(beta)) {
        throw out_of_truncation("class " + beta.to_string() + " lies beyond the truncation");
    }
    detail::require_admissible(ctx, n, beta);
    detail::require_primitive(ctx, n1);
    return detail::divisor_sum(n1, n, beta);
}

struct EquivalenceRow {
    std::int64_t n = 0;
    EffectiveClass beta;
    Rational dt_hat;
    /// (-1)^{h-1} h N-hat
    Rational expected;
    bool ok = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;

    bool all_ok() const
    {
        for (const auto& r : rows) {
            if (!r.ok) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::pair<std::int64_t, EffectiveClass>> failing_keys() const
    {
        std::vector<std::pair<std::int64_t, EffectiveClass>> out;
        for (const auto& r : rows) {
            if (!r.ok) {
                out.emplace_back(r.n, r.beta);
            }
        }
        return out;
    }
};

/**
 * Compares, on every admissible key, the log coefficient of dt_par_from_N(N)
 * with (-1)^{h-1} h N-hat computed from the primitive table @p n1.
 */
inline EquivalenceReport check_multcover_equiv(const SlopeContext& ctx, const InvariantTable& N,
                                               const InvariantTable& n1)
{
    const auto log_dt = series_log(dt_par_from_N(ctx, N));
    detail::require_primitive(ctx, n1);
    EquivalenceReport report;
    for (const auto& [n, beta] : ctx.admissible_keys()) {
        const auto h = ctx.geometry().h_degree(beta);
        EquivalenceRow row;
        row.n = n;
        row.beta = beta;
        row.dt_hat = log_dt.coefficient(n, beta);
        row.expected = detail::odd_sign(h) * Rational(h) * detail::divisor_sum(n1, n, beta);
        row.ok = row.dt_hat == row.expected;
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Same, with the primitive data taken from the n = 1 entries of N.
inline EquivalenceReport check_multcover_equiv(const SlopeContext& ctx, const InvariantTable& N)
{
    return check_multcover_equiv(ctx, N, N.primitive_slice());
}

/// "n<TAB>[beta]<TAB>dt_hat<TAB>expected<TAB>ok" per admissible key.
inline std::string to_tsv(const EquivalenceReport& r)
{
    std::string out;
    for (const auto& row : r.rows) {
        out += std::to_string(row.n) + '\t' + row.beta.to_string() + '\t' + row.dt_hat.to_string() + '\t'
             + row.expected.to_string() + '\t' + (row.ok ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace wallcross
