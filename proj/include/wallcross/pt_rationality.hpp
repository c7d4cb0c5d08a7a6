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
 * @file pt_rationality.hpp
 * @brief PT-type series with rational-function coefficients.
 *
 * The q-dependence lives in RatFun coefficients; keys keep n = 0. Infinite
 * products in q are summed in closed form inside the logarithm using
 *
 *   sum_{j >= 1} j y^j = y / (1 - y)^2,
 *
 * so every t^beta coefficient comes out as an exact rational function.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <wallcross/cone_series.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/invariant_table.hpp>
#include <wallcross/rational.hpp>
#include <wallcross/ratfun.hpp>

namespace wallcross {

using PTSeries = ConeSeries<RatFun>;

/// Integer invariants n_g^beta keyed by (genus, class).
class GVTable {
public:
    struct Key {
        std::int64_t genus = 0;
        EffectiveClass beta;

        friend bool operator==(const Key&, const Key&) = default;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    explicit GVTable(Geometry geometry) : geometry_(std::move(geometry)) {}

    const Geometry& geometry() const { return geometry_; }
    const std::map<Key, std::int64_t>& entries() const { return entries_; }

    void set(std::int64_t genus, const EffectiveClass& beta, std::int64_t value)
    {
        geometry_.check(beta);
        if (genus < 0) {
            throw inadmissible_key("negative genus in GV table");
        }
        if (beta.is_zero()) {
            throw inadmissible_key("GV table keys need beta > 0");
        }
        if (value == 0) {
            entries_.erase(Key{genus, beta});
        } else {
            entries_[Key{genus, beta}] = value;
        }
    }

    std::int64_t get(std::int64_t genus, const EffectiveClass& beta) const
    {
        const auto it = entries_.find(Key{genus, beta});
        return it == entries_.end() ? 0 : it->second;
    }

private:
    Geometry geometry_;
    std::map<Key, std::int64_t> entries_;
};

namespace detail {

inline Rational binomial(std::int64_t n, std::int64_t k)
{
    Rational r(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * Rational(n - k + i, i);
    }
    return r;
}

/// (-q)^e as a RatFun, e of any sign.
inline RatFun minus_q_power(std::int64_t e) { return RatFun::monomial(Rational(sign_power(e)), e); }

/// sum_{j >= 1} j ((-q)^m)^j = y / (1 - y)^2 with y = (-q)^m, m >= 1.
inline RatFun weighted_geometric(std::int64_t m)
{
    const auto y = Polynomial::monomial(Rational(sign_power(m)), static_cast<std::size_t>(m));
    const auto one_minus_y = Polynomial(1) - y;
    return RatFun::canonical(y, one_minus_y * one_minus_y);
}

} // namespace detail

/// log of the Gopakumar-Vafa product; exposed for tests and reports.
inline PTSeries gv_log(const Geometry& geometry, const GVTable& gv)
{
    if (!(gv.geometry() == geometry)) {
        throw geometry_mismatch("GV table geometry differs");
    }
    PTSeries log_pt(geometry);
    for (const auto& [key, value] : gv.entries()) {
        const auto& beta = key.beta;
        if (!geometry.within_truncation(beta)) {
            throw out_of_truncation("GV class " + beta.to_string() + " lies beyond the truncation");
        }
        const auto omega = geometry.omega_degree(beta);
        for (std::int64_t m = 1; m * omega <= geometry.truncation(); ++m) {
            const auto target = beta.scaled(m);
            if (key.genus == 0) {
                // log prod_j (1 - (-q)^j x)^{j n0} = -n0 sum_m x^m/m sum_j j ((-q)^m)^j
                log_pt.add_term(0, target, detail::weighted_geometric(m) * Rational(-value, m));
            } else {
                const auto g = key.genus;
                for (std::int64_t k = 0; k <= 2 * g - 2; ++k) {
                    const auto exponent = Rational(sign_power(k + g) * value) * detail::binomial(2 * g - 2, k);
                    const auto p = g - 1 - k;
                    // e * log(1 - (-q)^p x) contributes -e (-q)^{pm} / m at x^m.
                    log_pt.add_term(0, target, detail::minus_q_power(p * m) * (-exponent / Rational(m)));
                }
            }
        }
    }
    return log_pt;
}

/// The PT series in Gopakumar-Vafa form, truncated at the geometry's d.
inline PTSeries gv_expand(const Geometry& geometry, const GVTable& gv) { return series_exp(gv_log(geometry, gv)); }

inline RatFun pt_beta(const PTSeries& s, const EffectiveClass& beta) { return s.coefficient(0, beta); }

/// f(q) == f(1/q)
inline bool rationality_check(const RatFun& f) { return f.q_inverse() == f; }

/**
 * N_{n,beta} for all n > 0 (no slope restriction), given as an explicit finite
 * table plus an optional primitive table whose multiple-cover extension
 *   N_{n,beta} += sum_{k | (n,beta)} N_{1,beta/k} / k^2
 * is applied for every n > 0. The second part has infinite n-support and is
 * summed in closed form.
 */
struct PTInvariantData {
    InvariantTable explicit_values;
    InvariantTable multiple_cover;

    explicit PTInvariantData(const Geometry& g) : explicit_values(g), multiple_cover(g) {}
};

/// prod_{n > 0, beta > 0} exp((-1)^{n-1} N_{n,beta} q^n t^beta)^n
inline PTSeries pt_prefactor(const Geometry& geometry, const PTInvariantData& data)
{
    if (!(data.explicit_values.geometry() == geometry) || !(data.multiple_cover.geometry() == geometry)) {
        throw geometry_mismatch("invariant table geometry differs");
    }
    PTSeries log_pre(geometry);
    for (const auto& [k, v] : data.explicit_values.entries()) {
        if (k.n <= 0 || k.beta.is_zero() || k.omega > geometry.truncation()) {
            throw inadmissible_key("PT prefactor entries need n > 0, beta > 0 within the truncation");
        }
        log_pre.add_term(0, k.beta, RatFun::monomial(Rational(sign_power(k.n - 1) * k.n) * v, k.n));
    }
    for (const auto& [k, v] : data.multiple_cover.entries()) {
        if (k.n != 1) {
            throw bad_primitive_table("primitive table has key with n = " + std::to_string(k.n));
        }
        if (k.beta.is_zero() || k.omega > geometry.truncation()) {
            throw inadmissible_key("primitive classes need beta > 0 within the truncation");
        }
        // Contribution at t^{k beta'}: (v/k^2) sum_{n>0, k|n} n (-1)^{n-1} q^n = -(v/k) y/(1-y)^2, y = (-q)^k.
        for (std::int64_t m = 1; m * k.omega <= geometry.truncation(); ++m) {
            log_pre.add_term(0, k.beta.scaled(m), detail::weighted_geometric(m) * (-v / Rational(m)));
        }
    }
    return series_exp(log_pre);
}

/// L = PT / prefactor.
inline PTSeries l_series_solve(const Geometry& geometry, const PTSeries& pt, const PTInvariantData& data)
{
    if (!(pt.geometry() == geometry)) {
        throw geometry_mismatch("PT series geometry differs");
    }
    if (!pt.is_unit_normalized()) {
        throw constant_term_not_one("PT series must have constant term 1");
    }
    return pt * series_invert(pt_prefactor(geometry, data));
}

struct SymmetryRow {
    EffectiveClass beta;
    RatFun f;
    bool symmetric = false;
    bool laurent = false;
};

struct SymmetryReport {
    std::vector<SymmetryRow> rows;

    bool all_ok() const
    {
        for (const auto& r : rows) {
            if (!r.symmetric || !r.laurent) {
                return false;
            }
        }
        return true;
    }
};

/// Per class beta > 0 in the support: is f_beta q <-> 1/q symmetric, is it a Laurent polynomial.
inline SymmetryReport l_symmetry_report(const PTSeries& L)
{
    if (!L.is_unit_normalized()) {
        throw constant_term_not_one("L series must have constant term 1");
    }
    // Fold any q^n key into the coefficient so each class gets one RatFun.
    std::vector<std::pair<EffectiveClass, RatFun>> folded;
    for (const auto& [k, c] : L.terms()) {
        if (k.beta.is_zero()) {
            continue;
        }
        const auto term = c * RatFun::monomial(Rational(1), k.n);
        if (!folded.empty() && folded.back().first == k.beta) {
            folded.back().second += term;
        } else {
            folded.emplace_back(k.beta, term);
        }
    }
    SymmetryReport report;
    for (auto& [beta, f] : folded) {
        if (f.is_zero()) {
            continue;
        }
        SymmetryRow row{beta, f, rationality_check(f), f.is_laurent_polynomial()};
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// "[beta]<TAB>f<TAB>symmetric<TAB>laurent" per row.
inline std::string to_tsv(const SymmetryReport& r)
{
    std::string out;
    for (const auto& row : r.rows) {
        out += row.beta.to_string() + '\t' + to_string(row.f) + '\t' + (row.symmetric ? "true" : "false") + '\t'
             + (row.laurent ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace wallcross
