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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <wallcross/polynomial.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

/// Sparse Laurent polynomial in q; no zero coefficients are ever stored.
class LaurentPoly {
public:
    using terms_type = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c)
    {
        if (!c.is_zero()) {
            terms_.emplace(0, c);
        }
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    explicit LaurentPoly(terms_type terms) : terms_(std::move(terms)) { prune(); }

    static LaurentPoly monomial(const Rational& c, std::int64_t exponent)
    {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.terms_.emplace(exponent, c);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const terms_type& terms() const { return terms_; }

    Rational coefficient(std::int64_t k) const
    {
        const auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::int64_t min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    std::int64_t max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& [k, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [k, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    terms_.erase(it);
                }
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        terms_type out;
        for (const auto& [i, x] : a.terms_) {
            for (const auto& [j, y] : b.terms_) {
                out[i + j] += x * y;
            }
        }
        return LaurentPoly(std::move(out));
    }

    friend LaurentPoly operator*(LaurentPoly a, const Rational& s)
    {
        if (s.is_zero()) {
            return {};
        }
        for (auto& [k, c] : a.terms_) {
            c *= s;
        }
        return a;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// p(1/q)
    LaurentPoly q_inverse() const
    {
        terms_type out;
        for (const auto& [k, c] : terms_) {
            out.emplace(-k, c);
        }
        return LaurentPoly(std::move(out));
    }

private:
    void prune()
    {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    terms_type terms_;
};

inline std::string to_string(const LaurentPoly& p) { return detail::render_terms(p.terms(), "q"); }

inline LaurentPoly parse_laurent(std::string_view text) { return LaurentPoly(detail::parse_terms(text, "q")); }

} // namespace wallcross
