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
 * @file rational.hpp
 * @brief Exact rationals backed by GMP.
 *
 * Values are always stored in lowest terms with a positive denominator, so
 * equality is structural. Text form is "p/q", or "p" when q = 1.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <wallcross/errors.hpp>

namespace wallcross {

class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(mpz_class(std::to_string(v))) {}
    explicit Rational(const mpz_class& v) : value_(v) {}

    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0) {
            throw zero_denominator("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long long num, long long den)
        : Rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)))
    {
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// The value as a machine integer, if it is an integer that fits.
    std::optional<std::int64_t> to_int64() const
    {
        if (!is_integer() || !value_.get_num().fits_slong_p()) {
            return std::nullopt;
        }
        return static_cast<std::int64_t>(value_.get_num().get_si());
    }

    Rational operator-() const
    {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw zero_denominator("division by zero rational");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const { return Rational(1) / *this; }

    std::string to_string() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    /// Parses "p", "-p", "p/q" (optional surrounding whitespace).
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string_view::npos) {
                return std::string_view{};
            }
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        };
        text = trim(text);
        const auto slash = text.find('/');
        const auto num_text = trim(text.substr(0, slash));
        const auto den_text = slash == std::string_view::npos ? std::string_view{"1"}
                                                              : trim(text.substr(slash + 1));
        return Rational(parse_integer(num_text, text), parse_integer(den_text, text));
    }

    const mpq_class& raw() const { return value_; }

private:
    static mpz_class parse_integer(std::string_view s, std::string_view whole)
    {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            throw parse_error("malformed rational: '" + std::string(whole) + "'");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw parse_error("malformed rational: '" + std::string(whole) + "'");
            }
        }
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return mpz_class(digits, 10);
    }

    mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline std::string to_string(const Rational& r) { return r.to_string(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// (-1)^e for a signed exponent.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace wallcross
