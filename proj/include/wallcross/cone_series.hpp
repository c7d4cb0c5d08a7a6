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
 * @file cone_series.hpp
 * @brief Series graded by q-exponent and effective class, truncated at
 *        omega-degree d.
 *
 * A ConeSeries is a finite sum of c * q^n t^beta with omega(beta) <= d.
 * Every monomial with omega(beta) > d is zero in the ring, so positive-degree
 * elements are nilpotent of order at most floor(d / min omega-degree) + 1 and
 * exp/log/pow/inverse reduce to finite sums.
 *
 * Terms iterate in ascending (omega(beta), beta, n) order. That order is also
 * the rendering order of every text form.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <wallcross/coefficient_ring.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

struct MonomialKey {
    std::int64_t omega = 0;
    EffectiveClass beta;
    std::int64_t n = 0;

    friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

template <CoefficientRing C>
class ConeSeries {
public:
    using coefficient_type = C;
    using terms_type = std::map<MonomialKey, C>;

    /// The zero series.
    explicit ConeSeries(Geometry geometry) : geometry_(std::move(geometry)) {}

    static ConeSeries one(const Geometry& g)
    {
        ConeSeries s(g);
        s.add_term(0, EffectiveClass::zero(g.arity()), ring_one<C>());
        return s;
    }

    /// c q^n t^beta; zero when beta lies beyond the truncation.
    static ConeSeries monomial(const Geometry& g, const C& c, std::int64_t n, const EffectiveClass& beta)
    {
        ConeSeries s(g);
        s.add_term(n, beta, c);
        return s;
    }

    const Geometry& geometry() const { return geometry_; }
    const terms_type& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    MonomialKey key(std::int64_t n, const EffectiveClass& beta) const
    {
        return MonomialKey{geometry_.omega_degree(beta), beta, n};
    }

    /// Accumulates c into the (n, beta) coefficient. Terms past the truncation
    /// are discarded, zeros are pruned.
    void add_term(std::int64_t n, const EffectiveClass& beta, const C& c)
    {
        const auto omega = geometry_.omega_degree(beta);
        if (omega > geometry_.truncation() || c.is_zero()) {
            return;
        }
        accumulate(MonomialKey{omega, beta, n}, c);
    }

    C coefficient(std::int64_t n, const EffectiveClass& beta) const
    {
        const auto omega = geometry_.omega_degree(beta);
        if (omega > geometry_.truncation()) {
            throw out_of_truncation("class " + beta.to_string() + " has omega-degree " + std::to_string(omega)
                                    + " > d = " + std::to_string(geometry_.truncation()));
        }
        const auto it = terms_.find(MonomialKey{omega, beta, n});
        return it == terms_.end() ? C{} : it->second;
    }

    C constant_term() const { return coefficient(0, EffectiveClass::zero(geometry_.arity())); }

    /// True when every term has beta > 0.
    bool has_positive_support() const
    {
        for (const auto& [k, c] : terms_) {
            if (k.beta.is_zero()) {
                return false;
            }
        }
        return true;
    }

    /// The beta = 0 part is exactly 1 * q^0.
    bool is_unit_normalized() const
    {
        bool seen_one = false;
        for (const auto& [k, c] : terms_) {
            if (!k.beta.is_zero()) {
                break;
            }
            if (k.n != 0 || !(c == ring_one<C>())) {
                return false;
            }
            seen_one = true;
        }
        return seen_one;
    }

    ConeSeries operator-() const
    {
        ConeSeries r = *this;
        for (auto& [k, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    ConeSeries& operator+=(const ConeSeries& o)
    {
        check_same_geometry(o);
        for (const auto& [k, c] : o.terms_) {
            accumulate(k, c);
        }
        return *this;
    }

    ConeSeries& operator-=(const ConeSeries& o) { return *this += -o; }

    friend ConeSeries operator+(ConeSeries a, const ConeSeries& b) { return a += b; }
    friend ConeSeries operator-(ConeSeries a, const ConeSeries& b) { return a -= b; }

    friend ConeSeries operator*(const ConeSeries& a, const Rational& s)
    {
        ConeSeries r(a.geometry_);
        if (s.is_zero()) {
            return r;
        }
        for (const auto& [k, c] : a.terms_) {
            r.terms_.emplace(k, c * s);
        }
        return r;
    }

    friend ConeSeries operator*(const ConeSeries& a, const ConeSeries& b)
    {
        a.check_same_geometry(b);
        ConeSeries r(a.geometry_);
        const auto d = a.geometry_.truncation();
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                // Keys iterate by ascending omega, so the rest of b is out of range too.
                if (ka.omega + kb.omega > d) {
                    break;
                }
                r.accumulate(MonomialKey{ka.omega + kb.omega, ka.beta + kb.beta, ka.n + kb.n}, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const ConeSeries&, const ConeSeries&) = default;

    void check_same_geometry(const ConeSeries& o) const
    {
        if (!(geometry_ == o.geometry_)) {
            throw geometry_mismatch("series over different geometries");
        }
    }

private:
    void accumulate(const MonomialKey& k, const C& c)
    {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
        }
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    Geometry geometry_;
    terms_type terms_;
};

template <CoefficientRing C>
ConeSeries<C> series_mul(const ConeSeries<C>& a, const ConeSeries<C>& b)
{
    return a * b;
}

/// exp(a) = sum_{k <= K} a^k / k!, K the nilpotency bound; a must have no beta = 0 part.
template <CoefficientRing C>
ConeSeries<C> series_exp(const ConeSeries<C>& a)
{
    if (!a.has_positive_support()) {
        throw nonzero_constant_term("exp requires a series without beta = 0 terms");
    }
    auto sum = ConeSeries<C>::one(a.geometry());
    auto term = sum;
    const auto bound = a.geometry().nilpotency_bound();
    for (std::int64_t k = 1; k <= bound; ++k) {
        term = (term * a) * Rational(1, k);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum;
}

namespace detail {

template <CoefficientRing C>
ConeSeries<C> unit_deviation(const ConeSeries<C>& a, const char* what)
{
    if (!a.is_unit_normalized()) {
        throw constant_term_not_one(std::string(what) + " requires constant term 1 and no other beta = 0 terms");
    }
    return a - ConeSeries<C>::one(a.geometry());
}

} // namespace detail

/// log(a) = sum_{l >= 1} (-1)^{l-1} (a - 1)^l / l, a with constant term 1.
template <CoefficientRing C>
ConeSeries<C> series_log(const ConeSeries<C>& a)
{
    const auto x = detail::unit_deviation(a, "log");
    ConeSeries<C> sum(a.geometry());
    auto power = x;
    const auto bound = a.geometry().nilpotency_bound();
    for (std::int64_t l = 1; l <= bound && !power.is_zero(); ++l) {
        sum += power * Rational(l % 2 == 1 ? 1 : -1, l);
        power = power * x;
    }
    return sum;
}

template <CoefficientRing C>
ConeSeries<C> series_pow(const ConeSeries<C>& a, const Rational& e)
{
    return series_exp(series_log(a) * e);
}

/// 1/a as the finite geometric sum in (1 - a).
template <CoefficientRing C>
ConeSeries<C> series_invert(const ConeSeries<C>& a)
{
    const auto x = -detail::unit_deviation(a, "invert");
    auto sum = ConeSeries<C>::one(a.geometry());
    auto power = x;
    const auto bound = a.geometry().nilpotency_bound();
    for (std::int64_t k = 1; k <= bound && !power.is_zero(); ++k) {
        sum += power;
        power = power * x;
    }
    return sum;
}

template <CoefficientRing C>
C coefficient(const ConeSeries<C>& a, std::int64_t n, const EffectiveClass& beta)
{
    return a.coefficient(n, beta);
}

/// Moves the q-exponent of every key into a LaurentPoly coefficient.
inline ConeSeries<LaurentPoly> collapse_q(const ConeSeries<Rational>& a)
{
    ConeSeries<LaurentPoly> out(a.geometry());
    for (const auto& [k, c] : a.terms()) {
        out.add_term(0, k.beta, LaurentPoly::monomial(c, k.n));
    }
    return out;
}

inline ConeSeries<RatFun> to_ratfun_series(const ConeSeries<LaurentPoly>& a)
{
    ConeSeries<RatFun> out(a.geometry());
    for (const auto& [k, c] : a.terms()) {
        out.add_term(k.n, k.beta, RatFun::from_laurent(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

/// One line per monomial: "n<TAB>[beta]<TAB>coefficient".
template <CoefficientRing C>
std::string to_tsv(const ConeSeries<C>& a)
{
    std::string out;
    for (const auto& [k, c] : a.terms()) {
        out += std::to_string(k.n);
        out += '\t';
        out += k.beta.to_string();
        out += '\t';
        out += to_string(c);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string monomial_text(const Geometry& g, std::int64_t n, const EffectiveClass& beta)
{
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) {
            s += ' ';
        }
        s += part;
    };
    if (n != 0) {
        append(n == 1 ? std::string("q") : "q^" + std::to_string(n));
    }
    for (std::size_t i = 0; i < g.arity(); ++i) {
        if (beta[i] == 0) {
            continue;
        }
        std::string t = g.arity() == 1 ? std::string("t") : "t_" + g.generators()[i].name;
        if (beta[i] != 1) {
            t += "^" + std::to_string(beta[i]);
        }
        append(t);
    }
    return s;
}

template <CoefficientRing C>
std::string coefficient_text(const C& c)
{
    return "(" + to_string(c) + ")";
}

template <>
inline std::string coefficient_text<Rational>(const Rational& c)
{
    return c.to_string();
}

} // namespace detail

/// Human-readable sum, e.g. "1 + q t" or "1 - 2 q t + 1/2 q^2 t^2".
template <CoefficientRing C>
std::string to_expression(const ConeSeries<C>& a)
{
    std::string out;
    for (const auto& [k, c] : a.terms()) {
        const auto mono = detail::monomial_text(a.geometry(), k.n, k.beta);
        std::string coeff;
        bool negative = false;
        if constexpr (std::is_same_v<C, Rational>) {
            negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            coeff = (mag.is_one() && !mono.empty()) ? std::string() : mag.to_string();
        } else {
            coeff = (c == ring_one<C>() && !mono.empty()) ? std::string() : detail::coefficient_text(c);
        }
        std::string term = coeff;
        if (!mono.empty()) {
            term += term.empty() ? mono : " " + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace wallcross
