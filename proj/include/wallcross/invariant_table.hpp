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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

/// A geometry together with a slope mu. (n, beta) is admissible iff beta > 0,
/// omega(beta) <= d and n = mu * omega(beta).
class SlopeContext {
public:
    SlopeContext(Geometry geometry, Rational mu) : geometry_(std::move(geometry)), mu_(std::move(mu)) {}

    const Geometry& geometry() const { return geometry_; }
    const Rational& mu() const { return mu_; }

    /// The n tied to beta by the slope, or nothing when mu * omega(beta) is not an integer.
    std::optional<std::int64_t> slope_n(const EffectiveClass& beta) const
    {
        return (mu_ * Rational(geometry_.omega_degree(beta))).to_int64();
    }

    bool admissible(std::int64_t n, const EffectiveClass& beta) const
    {
        if (beta.is_zero() || !geometry_.within_truncation(beta)) {
            return false;
        }
        const auto s = slope_n(beta);
        return s && *s == n;
    }

    /// All admissible (n, beta) in canonical order.
    std::vector<std::pair<std::int64_t, EffectiveClass>> admissible_keys() const
    {
        std::vector<std::pair<std::int64_t, EffectiveClass>> out;
        std::vector<std::tuple<std::int64_t, EffectiveClass, std::int64_t>> sortable;
        for (auto& beta : geometry_.positive_classes()) {
            if (const auto n = slope_n(beta)) {
                sortable.emplace_back(geometry_.omega_degree(beta), beta, *n);
            }
        }
        std::sort(sortable.begin(), sortable.end());
        for (auto& [w, beta, n] : sortable) {
            out.emplace_back(n, std::move(beta));
        }
        return out;
    }

private:
    Geometry geometry_;
    Rational mu_;
};

/// Finite map (n, beta) -> rational, iterated in (omega(beta), beta, n) order.
/// Zero values are never stored.
class InvariantTable {
public:
    struct Key {
        std::int64_t omega = 0;
        EffectiveClass beta;
        std::int64_t n = 0;

        friend bool operator==(const Key&, const Key&) = default;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using entries_type = std::map<Key, Rational>;

    explicit InvariantTable(Geometry geometry) : geometry_(std::move(geometry)) {}

    const Geometry& geometry() const { return geometry_; }
    const entries_type& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    void set(std::int64_t n, const EffectiveClass& beta, const Rational& value)
    {
        const Key k{geometry_.omega_degree(beta), beta, n};
        if (value.is_zero()) {
            entries_.erase(k);
        } else {
            entries_[k] = value;
        }
    }

    void add(std::int64_t n, const EffectiveClass& beta, const Rational& value)
    {
        set(n, beta, get(n, beta) + value);
    }

    Rational get(std::int64_t n, const EffectiveClass& beta) const
    {
        const auto it = entries_.find(Key{geometry_.omega_degree(beta), beta, n});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    /// Entries with n = 1, as a new table.
    InvariantTable primitive_slice() const
    {
        InvariantTable out(geometry_);
        for (const auto& [k, v] : entries_) {
            if (k.n == 1) {
                out.entries_.emplace(k, v);
            }
        }
        return out;
    }

    friend bool operator==(const InvariantTable&, const InvariantTable&) = default;

private:
    Geometry geometry_;
    entries_type entries_;
};

/// "n<TAB>[beta]<TAB>value" per entry.
inline std::string to_tsv(const InvariantTable& t)
{
    std::string out;
    for (const auto& [k, v] : t.entries()) {
        out += std::to_string(k.n) + '\t' + k.beta.to_string() + '\t' + v.to_string() + '\n';
    }
    return out;
}

} // namespace wallcross
