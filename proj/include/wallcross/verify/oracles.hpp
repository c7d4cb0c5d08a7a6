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
 * @file oracles.hpp
 * @brief Deliberately naive reference computations.
 *
 * Nothing here uses ConeSeries arithmetic or the transforms; each oracle is a
 * direct transcription of a definition over plain std::map data so it can be
 * compared against the library's results. Only used by the test suites and
 * the `verify` command.
 */

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <wallcross/rational.hpp>

namespace wallcross::oracle {

/// (n, multiplicities) -> coefficient.
using NaiveSeries = std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, Rational>;

struct NaiveGeometry {
    std::vector<std::int64_t> omega;
    std::vector<std::int64_t> h;
    std::int64_t d = 0;

    std::int64_t omega_of(const std::vector<std::int64_t>& m) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            s += m[i] * omega[i];
        }
        return s;
    }

    std::int64_t h_of(const std::vector<std::int64_t>& m) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            s += m[i] * h[i];
        }
        return s;
    }
};

inline void naive_prune(NaiveSeries& s)
{
    for (auto it = s.begin(); it != s.end();) {
        it = it->second.is_zero() ? s.erase(it) : std::next(it);
    }
}

inline NaiveSeries naive_add(NaiveSeries a, const NaiveSeries& b, const Rational& scale = Rational(1))
{
    for (const auto& [k, c] : b) {
        a[k] += c * scale;
    }
    naive_prune(a);
    return a;
}

/// Plain double loop; products with omega > d are dropped.
inline NaiveSeries naive_mul(const NaiveGeometry& g, const NaiveSeries& a, const NaiveSeries& b)
{
    NaiveSeries out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            std::vector<std::int64_t> m(ka.second.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ka.second[i] + kb.second[i];
            }
            if (g.omega_of(m) > g.d) {
                continue;
            }
            out[{ka.first + kb.first, m}] += ca * cb;
        }
    }
    naive_prune(out);
    return out;
}

inline NaiveSeries naive_one(std::size_t arity)
{
    return NaiveSeries{{{0, std::vector<std::int64_t>(arity, 0)}, Rational(1)}};
}

/// Taylor sum: each a^k formed by k-fold repeated multiplication from scratch,
/// divided by k! computed directly, for k = 0..K.
inline NaiveSeries naive_exp(const NaiveGeometry& g, const NaiveSeries& a, std::int64_t terms)
{
    const std::size_t arity = g.omega.size();
    NaiveSeries sum = naive_one(arity);
    for (std::int64_t k = 1; k <= terms; ++k) {
        NaiveSeries power = naive_one(arity);
        for (std::int64_t i = 0; i < k; ++i) {
            power = naive_mul(g, power, a);
        }
        Rational factorial(1);
        for (std::int64_t i = 2; i <= k; ++i) {
            factorial *= Rational(i);
        }
        sum = naive_add(sum, power, factorial.inverse());
    }
    return sum;
}

/// N-hat by scanning every k up to the largest multiplicity.
inline Rational brute_force_divisor_sum(const std::map<std::vector<std::int64_t>, Rational>& n1, std::int64_t n,
                                        const std::vector<std::int64_t>& beta)
{
    std::int64_t top = n < 0 ? -n : n;
    for (auto m : beta) {
        top = std::max(top, m);
    }
    Rational sum(0);
    for (std::int64_t k = 1; k <= top; ++k) {
        bool divides = n % k == 0;
        std::vector<std::int64_t> quotient;
        for (auto m : beta) {
            divides = divides && m % k == 0;
            quotient.push_back(m / std::max<std::int64_t>(k, 1));
        }
        if (!divides) {
            continue;
        }
        const auto it = n1.find(quotient);
        if (it != n1.end()) {
            sum += it->second / Rational(k * k);
        }
    }
    return sum;
}

/// Truncated power series in q: exponent -> coefficient, exponents < order.
using QSeries = std::map<std::int64_t, Rational>;

/**
 * prod_{j=1}^{J} (1 - (-q)^j t)^{j n0} for one curve class, expanded as a
 * polynomial in t of degree <= t_degree whose coefficients are q-series
 * truncated below q^order. Each factor is expanded by the generalized
 * binomial series, which handles negative exponents.
 *
 * Returns, for m = 0..t_degree, the q-series coefficient of t^m.
 */
inline std::vector<QSeries> gv_genus0_truncated_product(std::int64_t n0, std::int64_t J, std::int64_t order,
                                                        std::int64_t t_degree)
{
    std::vector<QSeries> acc(static_cast<std::size_t>(t_degree) + 1);
    acc[0][0] = Rational(1);
    for (std::int64_t j = 1; j <= J; ++j) {
        const std::int64_t e = j * n0;
        // (1 + x)^e = sum_m binom(e, m) x^m with x = -(-q)^j t.
        std::vector<QSeries> factor(static_cast<std::size_t>(t_degree) + 1);
        Rational binom(1);
        for (std::int64_t m = 0; m <= t_degree; ++m) {
            if (m > 0) {
                binom = binom * Rational(e - m + 1) / Rational(m);
            }
            if (binom.is_zero()) {
                break;
            }
            // x^m = (-1)^m (-1)^{jm} q^{jm} t^m
            const std::int64_t qexp = j * m;
            if (qexp < order) {
                const int s = ((m + j * m) % 2 == 0) ? 1 : -1;
                factor[static_cast<std::size_t>(m)][qexp] = binom * Rational(s);
            }
        }
        std::vector<QSeries> next(static_cast<std::size_t>(t_degree) + 1);
        for (std::int64_t a = 0; a <= t_degree; ++a) {
            for (std::int64_t b = 0; a + b <= t_degree; ++b) {
                for (const auto& [ea, ca] : acc[static_cast<std::size_t>(a)]) {
                    for (const auto& [eb, cb] : factor[static_cast<std::size_t>(b)]) {
                        if (ea + eb < order) {
                            next[static_cast<std::size_t>(a + b)][ea + eb] += ca * cb;
                        }
                    }
                }
            }
        }
        for (auto& s : next) {
            for (auto it = s.begin(); it != s.end();) {
                it = it->second.is_zero() ? s.erase(it) : std::next(it);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace wallcross::oracle
