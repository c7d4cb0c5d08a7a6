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
 * @file geometry.hpp
 * @brief Curve-class generators, effective classes and the truncation bound.
 *
 * An EffectiveClass is a non-negative combination of named generators. The
 * Geometry attaches to each generator its omega-degree (which drives the
 * truncation) and its H-degree (which drives signs and exponents).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <wallcross/errors.hpp>

namespace wallcross {

class EffectiveClass {
public:
    EffectiveClass() = default;
    EffectiveClass(std::initializer_list<std::int64_t> m) : mult_(m) { validate(); }
    explicit EffectiveClass(std::vector<std::int64_t> m) : mult_(std::move(m)) { validate(); }

    static EffectiveClass zero(std::size_t arity) { return EffectiveClass(std::vector<std::int64_t>(arity, 0)); }

    std::size_t arity() const { return mult_.size(); }
    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    std::int64_t operator[](std::size_t i) const { return mult_[i]; }

    bool is_zero() const
    {
        return std::all_of(mult_.begin(), mult_.end(), [](std::int64_t m) { return m == 0; });
    }

    /// gcd of all multiplicities (0 for the zero class).
    std::int64_t content() const
    {
        std::int64_t g = 0;
        for (auto m : mult_) {
            g = std::gcd(g, m);
        }
        return g;
    }

    bool divisible_by(std::int64_t k) const
    {
        return std::all_of(mult_.begin(), mult_.end(), [k](std::int64_t m) { return m % k == 0; });
    }

    EffectiveClass divided_by(std::int64_t k) const
    {
        auto m = mult_;
        for (auto& x : m) {
            x /= k;
        }
        return EffectiveClass(std::move(m));
    }

    EffectiveClass scaled(std::int64_t k) const
    {
        auto m = mult_;
        for (auto& x : m) {
            x *= k;
        }
        return EffectiveClass(std::move(m));
    }

    /// Componentwise <=.
    bool dominated_by(const EffectiveClass& o) const
    {
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (mult_[i] > o.mult_[i]) {
                return false;
            }
        }
        return true;
    }

    friend EffectiveClass operator+(const EffectiveClass& a, const EffectiveClass& b)
    {
        check_arity(a, b);
        auto m = a.mult_;
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] += b.mult_[i];
        }
        return EffectiveClass(std::move(m));
    }

    /// Componentwise difference; requires b <= a.
    friend EffectiveClass operator-(const EffectiveClass& a, const EffectiveClass& b)
    {
        check_arity(a, b);
        auto m = a.mult_;
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] -= b.mult_[i];
        }
        return EffectiveClass(std::move(m));
    }

    friend bool operator==(const EffectiveClass&, const EffectiveClass&) = default;
    friend auto operator<=>(const EffectiveClass&, const EffectiveClass&) = default;

    /// "[a,b,c]"
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (i != 0) {
                s += ",";
            }
            s += std::to_string(mult_[i]);
        }
        return s + "]";
    }

private:
    static void check_arity(const EffectiveClass& a, const EffectiveClass& b)
    {
        if (a.arity() != b.arity()) {
            throw geometry_mismatch("class arity mismatch: " + a.to_string() + " vs " + b.to_string());
        }
    }

    void validate() const
    {
        for (auto m : mult_) {
            if (m < 0) {
                throw invalid_geometry("effective class with negative multiplicity");
            }
        }
    }

    std::vector<std::int64_t> mult_;
};

inline std::string to_string(const EffectiveClass& b) { return b.to_string(); }

struct Generator {
    std::string name;
    std::int64_t omega_degree = 1;
    std::int64_t h_degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class Geometry {
public:
    Geometry(std::vector<Generator> generators, std::int64_t truncation)
        : generators_(std::move(generators)), truncation_(truncation)
    {
        if (generators_.empty()) {
            throw invalid_geometry("geometry needs at least one generator");
        }
        for (const auto& g : generators_) {
            if (g.omega_degree < 1 || g.h_degree < 1) {
                throw invalid_geometry("generator '" + g.name + "' must have positive omega and H degrees");
            }
        }
        if (truncation_ < min_omega_degree()) {
            throw invalid_geometry("truncation below the smallest omega-degree leaves the cone empty");
        }
    }

    /// One generator named "C".
    static Geometry single(std::int64_t omega_degree, std::int64_t h_degree, std::int64_t truncation)
    {
        return Geometry({Generator{"C", omega_degree, h_degree}}, truncation);
    }

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t arity() const { return generators_.size(); }
    std::int64_t truncation() const { return truncation_; }

    Geometry with_truncation(std::int64_t d) const { return Geometry(generators_, d); }

    std::int64_t min_omega_degree() const
    {
        std::int64_t m = generators_.front().omega_degree;
        for (const auto& g : generators_) {
            m = std::min(m, g.omega_degree);
        }
        return m;
    }

    /// Largest k for which a product of k positive-degree monomials survives.
    std::int64_t nilpotency_bound() const { return truncation_ / min_omega_degree(); }

    std::int64_t omega_degree(const EffectiveClass& b) const
    {
        check(b);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            s += b[i] * generators_[i].omega_degree;
        }
        return s;
    }

    std::int64_t h_degree(const EffectiveClass& b) const
    {
        check(b);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            s += b[i] * generators_[i].h_degree;
        }
        return s;
    }

    bool within_truncation(const EffectiveClass& b) const { return omega_degree(b) <= truncation_; }

    EffectiveClass unit(std::size_t i) const
    {
        std::vector<std::int64_t> m(arity(), 0);
        m.at(i) = 1;
        return EffectiveClass(std::move(m));
    }

    /// Every nonzero class with omega-degree <= truncation, lexicographic order.
    std::vector<EffectiveClass> positive_classes() const
    {
        std::vector<EffectiveClass> out;
        std::vector<std::int64_t> m(arity(), 0);
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t budget) {
            if (i == arity()) {
                EffectiveClass c(m);
                if (!c.is_zero()) {
                    out.push_back(std::move(c));
                }
                return;
            }
            for (std::int64_t k = 0; k * generators_[i].omega_degree <= budget; ++k) {
                m[i] = k;
                rec(i + 1, budget - k * generators_[i].omega_degree);
            }
            m[i] = 0;
        };
        rec(0, truncation_);
        std::sort(out.begin(), out.end());
        return out;
    }

    void check(const EffectiveClass& b) const
    {
        if (b.arity() != arity()) {
            throw geometry_mismatch("class " + b.to_string() + " does not match generator arity "
                                    + std::to_string(arity()));
        }
    }

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    std::vector<Generator> generators_;
    std::int64_t truncation_;
};

/// gcd(|n|, multiplicities of beta); gcd(0, x) = x.
inline std::int64_t divisibility(std::int64_t n, const EffectiveClass& beta)
{
    return std::gcd(n < 0 ? -n : n, beta.content());
}

} // namespace wallcross
