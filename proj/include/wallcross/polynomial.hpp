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
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Used for the numerator and denominator of rational functions in q and for
 * Hilbert polynomials in l. Coefficients are stored in ascending order with
 * no trailing zeros, so the zero polynomial has an empty coefficient vector.
 */

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wallcross/errors.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// c * x^k
    static Polynomial monomial(const Rational& c, std::size_t k)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) {
                return i;
            }
        }
        return 0;
    }

    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    Polynomial monic() const
    {
        if (is_zero()) {
            return *this;
        }
        return *this * leading().inverse();
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial a, const Rational& s)
    {
        if (s.is_zero()) {
            return {};
        }
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        return a;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero()) {
            throw zero_denominator("polynomial division by zero");
        }
        Polynomial rem = a;
        std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
        const Rational lead_inv = b.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rational f = rem.leading() * lead_inv;
            quot[shift] = f;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                rem.coeffs_[shift + j] -= f * b.coeffs_[j];
            }
            rem.trim();
        }
        return {Polynomial(std::move(quot)), rem};
    }

    /// a(1/x) * x^m, requires m >= deg a.
    Polynomial reversed(std::size_t m) const
    {
        std::vector<Rational> out(m + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[m - i] = coeffs_[i];
        }
        return Polynomial(std::move(out));
    }

    /// Divides by x^k; the low k coefficients must be zero.
    Polynomial shifted_down(std::size_t k) const
    {
        if (k >= coeffs_.size()) {
            return {};
        }
        return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Rational evaluate(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace detail {

/// Appends one term "c*x^k" to a term list in the shared polynomial grammar.
inline void append_term(std::string& out, const Rational& c, std::int64_t k, std::string_view var)
{
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (k == 0) {
        out += mag.to_string();
        return;
    }
    if (!mag.is_one()) {
        out += mag.to_string();
        out += "*";
    }
    out += var;
    if (k != 1) {
        out += "^";
        out += std::to_string(k);
    }
}

/// Renders sparse (exponent -> coefficient) data in ascending exponent order.
inline std::string render_terms(const std::map<std::int64_t, Rational>& terms, std::string_view var)
{
    std::string out;
    for (const auto& [k, c] : terms) {
        append_term(out, c, k, var);
    }
    return out.empty() ? "0" : out;
}

/// Parses "c1*x^k1 + c2*x^k2 - ..." into an exponent map; exponents may be negative.
inline std::map<std::int64_t, Rational> parse_terms(std::string_view text, std::string_view var)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') {
            s += ch;
        }
    }
    if (s.empty()) {
        throw parse_error("empty polynomial");
    }
    std::map<std::int64_t, Rational> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw parse_error("expected '+' or '-' in polynomial '" + std::string(text) + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && !(s[end] == '-' && end > pos && s[end - 1] != '^')) {
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) {
            throw parse_error("empty term in polynomial '" + std::string(text) + "'");
        }
        Rational coeff(1);
        std::int64_t exponent = 0;
        const auto var_at = term.find(var);
        if (var_at == std::string::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string head = term.substr(0, var_at);
            if (!head.empty()) {
                if (head.back() != '*') {
                    throw parse_error("expected '*' before variable in '" + term + "'");
                }
                head.pop_back();
                coeff = Rational::parse(head);
            }
            const std::string tail = term.substr(var_at + var.size());
            if (tail.empty()) {
                exponent = 1;
            } else if (tail[0] == '^') {
                const auto e = Rational::parse(tail.substr(1)).to_int64();
                if (!e) {
                    throw parse_error("bad exponent in '" + term + "'");
                }
                exponent = *e;
            } else {
                throw parse_error("unexpected text after variable in '" + term + "'");
            }
        }
        out[exponent] += sign > 0 ? coeff : -coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace detail

inline std::string to_string(const Polynomial& p, std::string_view var = "q")
{
    std::map<std::int64_t, Rational> terms;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            terms.emplace(static_cast<std::int64_t>(i), c[i]);
        }
    }
    return detail::render_terms(terms, var);
}

inline Polynomial parse_polynomial(std::string_view text, std::string_view var = "q")
{
    const auto terms = detail::parse_terms(text, var);
    if (terms.empty()) {
        return {};
    }
    if (terms.begin()->first < 0) {
        throw parse_error("negative exponent in polynomial '" + std::string(text) + "'");
    }
    std::vector<Rational> v(static_cast<std::size_t>(terms.rbegin()->first) + 1);
    for (const auto& [k, c] : terms) {
        v[static_cast<std::size_t>(k)] = c;
    }
    return Polynomial(std::move(v));
}

} // namespace wallcross
