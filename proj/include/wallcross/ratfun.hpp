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
 * @file ratfun.hpp
 * @brief The field Q(q) of rational functions in one variable.
 *
 * Every RatFun is kept in canonical form: numerator and denominator coprime,
 * denominator monic. Two values are equal iff their fields are equal.
 *
 * Text form is "num / den" with both polynomials written in ascending powers
 * of q, e.g. "q / 1 + 2*q + q^2".
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <wallcross/errors.hpp>
#include <wallcross/laurent.hpp>
#include <wallcross/polynomial.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(int c) : RatFun(Rational(c)) {}
    RatFun(const Polynomial& p) : num_(p), den_(1) {}

    /// Canonical form of num/den; throws zero_denominator when den = 0.
    static RatFun canonical(const Polynomial& num, const Polynomial& den)
    {
        if (den.is_zero()) {
            throw zero_denominator("rational function with zero denominator");
        }
        RatFun r;
        if (num.is_zero()) {
            return r;
        }
        const Polynomial g = poly_gcd(num, den);
        auto n = Polynomial::divmod(num, g).first;
        auto d = Polynomial::divmod(den, g).first;
        const Rational lead_inv = d.leading().inverse();
        r.num_ = n * lead_inv;
        r.den_ = d * lead_inv;
        return r;
    }

    /// c * q^k for any integer k.
    static RatFun monomial(const Rational& c, std::int64_t k)
    {
        if (k >= 0) {
            return RatFun(Polynomial::monomial(c, static_cast<std::size_t>(k)));
        }
        return canonical(Polynomial(c), Polynomial::monomial(Rational(1), static_cast<std::size_t>(-k)));
    }

    static RatFun from_laurent(const LaurentPoly& p)
    {
        RatFun r;
        for (const auto& [k, c] : p.terms()) {
            r += monomial(c, k);
        }
        return r;
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// True when the denominator is a pure power of q, i.e. the value is a
    /// Laurent polynomial.
    bool is_laurent_polynomial() const
    {
        const auto& c = den_.coefficients();
        return std::count_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); }) == 1;
    }

    /// Converts to a Laurent polynomial; only valid when is_laurent_polynomial().
    LaurentPoly to_laurent() const
    {
        if (!is_laurent_polynomial()) {
            throw error("rational function is not a Laurent polynomial");
        }
        const auto shift = den_.degree();
        LaurentPoly::terms_type t;
        const auto& c = num_.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_zero()) {
                t.emplace(static_cast<std::int64_t>(i) - shift, c[i]);
            }
        }
        return LaurentPoly(std::move(t));
    }

    RatFun operator-() const
    {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b)
    {
        if (a.den_ == b.den_) {
            return canonical(a.num_ + b.num_, a.den_);
        }
        return canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return canonical(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFun operator*(RatFun a, const Rational& s)
    {
        if (s.is_zero()) {
            return {};
        }
        a.num_ = a.num_ * s;
        return a;
    }

    friend RatFun operator/(const RatFun& a, const RatFun& b)
    {
        if (b.is_zero()) {
            throw zero_denominator("division by zero rational function");
        }
        return canonical(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    RatFun inverse() const { return RatFun(1) / *this; }

    friend bool operator==(const RatFun&, const RatFun&) = default;

    /**
     * f(1/q) in canonical form: substitute, multiply numerator and denominator
     * by q^max(deg num, deg den), re-canonicalize.
     */
    RatFun q_inverse() const
    {
        if (is_zero()) {
            return *this;
        }
        const auto m = static_cast<std::size_t>(std::max(num_.degree(), den_.degree()));
        return canonical(num_.reversed(m), den_.reversed(m));
    }

    /**
     * Coefficients of the Laurent expansion around q = 0 for every exponent
     * strictly below @p order.
     */
    std::map<std::int64_t, Rational> laurent_expansion(std::int64_t order) const
    {
        std::map<std::int64_t, Rational> out;
        if (is_zero()) {
            return out;
        }
        const auto v = static_cast<std::int64_t>(den_.valuation());
        const Polynomial unit = den_.shifted_down(static_cast<std::size_t>(v));
        const Rational c0_inv = unit.coefficient(0).inverse();
        // num / unit = sum s_k q^k, and f = q^{-v} * that.
        std::vector<Rational> s;
        for (std::int64_t k = 0; k - v < order; ++k) {
            Rational acc = num_.coefficient(static_cast<std::size_t>(k));
            const auto top = std::min<std::int64_t>(k, unit.degree());
            for (std::int64_t i = 1; i <= top; ++i) {
                acc -= unit.coefficient(static_cast<std::size_t>(i)) * s[static_cast<std::size_t>(k - i)];
            }
            s.push_back(acc * c0_inv);
            if (!s.back().is_zero()) {
                out.emplace(k - v, s.back());
            }
        }
        return out;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

inline RatFun ratfun_canonical(const Polynomial& num, const Polynomial& den) { return RatFun::canonical(num, den); }

inline RatFun ratfun_q_inverse(const RatFun& f) { return f.q_inverse(); }

inline std::string to_string(const RatFun& f)
{
    return to_string(f.numerator(), "q") + " / " + to_string(f.denominator(), "q");
}

/// Accepts "num / den" or a bare polynomial "num".
inline RatFun parse_ratfun(std::string_view text)
{
    const auto split = text.find(" / ");
    if (split == std::string_view::npos) {
        return RatFun(parse_polynomial(text, "q"));
    }
    return RatFun::canonical(parse_polynomial(text.substr(0, split), "q"),
                             parse_polynomial(text.substr(split + 3), "q"));
}

} // namespace wallcross
