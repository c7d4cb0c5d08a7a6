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
 * @file chow_integration.hpp
 * @brief Euler-characteristic integration over finite stratifications and
 *        the local-to-global aggregation of log-coefficients.
 *
 * A ChowModel is a finite stratification of the cycle space of a class beta.
 * Each stratum is a family of cycles gamma with a common support type: the
 * support's irreducible components (as global classes), the multiplicities of
 * gamma along them, an Euler characteristic, and the local invariants of the
 * support curve keyed by local classes. The local lattice is what decides the
 * divisibility div(gamma, n); it can differ from the divisibility of beta.
 */

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <wallcross/dt_transforms.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/invariant_table.hpp>
#include <wallcross/rational.hpp>

namespace wallcross {

struct Stratum {
    std::string label;
    std::int64_t euler_char = 0;
    Rational value;
};

class StratifiedFunction {
public:
    StratifiedFunction() = default;
    explicit StratifiedFunction(std::vector<Stratum> strata) : strata_(std::move(strata))
    {
        std::set<std::string> seen;
        for (const auto& s : strata_) {
            if (!seen.insert(s.label).second) {
                throw invalid_model("duplicate stratum label '" + s.label + "'");
            }
        }
    }

    const std::vector<Stratum>& strata() const { return strata_; }

private:
    std::vector<Stratum> strata_;
};

/// sum_i value_i * chi_i
inline Rational euler_integrate(const StratifiedFunction& f)
{
    Rational sum(0);
    for (const auto& s : f.strata()) {
        sum += s.value * Rational(s.euler_char);
    }
    return sum;
}

/// Geometry of a support curve: one generator per component, degrees pulled
/// back from the global classes, truncation d.
inline Geometry local_geometry(const Geometry& global, const std::vector<EffectiveClass>& components, std::int64_t d)
{
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (c.is_zero()) {
            throw invalid_model("support component with zero class");
        }
        gens.push_back(Generator{"C" + std::to_string(i + 1), global.omega_degree(c), global.h_degree(c)});
    }
    return Geometry(std::move(gens), d);
}

struct ChowStratum {
    std::string label;
    std::int64_t euler_char = 0;
    /// Global classes of the irreducible components of the support.
    std::vector<EffectiveClass> components;
    /// Local multiplicities of gamma along the components.
    EffectiveClass gamma;
    /// Local DT^par_{n', gamma'} for local classes gamma' <= gamma.
    InvariantTable local_dtpar;
    /// Local N_{1, gamma'}.
    InvariantTable local_n1;

    ChowStratum(std::string label_, std::int64_t chi, std::vector<EffectiveClass> components_, EffectiveClass gamma_,
                const Geometry& local)
        : label(std::move(label_)), euler_char(chi), components(std::move(components_)), gamma(std::move(gamma_)),
          local_dtpar(local), local_n1(local)
    {
    }

    const Geometry& local() const { return local_dtpar.geometry(); }

    /// i_* gamma as a global class.
    EffectiveClass pushforward(std::size_t global_arity) const
    {
        auto out = EffectiveClass::zero(global_arity);
        for (std::size_t i = 0; i < components.size(); ++i) {
            out = out + components[i].scaled(gamma[i]);
        }
        return out;
    }
};

class ChowModel {
public:
    ChowModel(Geometry geometry, EffectiveClass beta) : geometry_(std::move(geometry)), beta_(std::move(beta))
    {
        geometry_.check(beta_);
        if (beta_.is_zero()) {
            throw invalid_model("Chow model needs beta > 0");
        }
    }

    const Geometry& geometry() const { return geometry_; }
    const EffectiveClass& beta() const { return beta_; }
    const std::vector<ChowStratum>& strata() const { return strata_; }

    /// Local geometry for a support with the given components (d = omega(beta)).
    Geometry local_geometry_for(const std::vector<EffectiveClass>& components) const
    {
        for (const auto& c : components) {
            geometry_.check(c);
        }
        return local_geometry(geometry_, components, geometry_.omega_degree(beta_));
    }

    /// Support equal to the global generators, gamma given in global coordinates.
    ChowStratum& add_stratum(std::string label, std::int64_t chi, EffectiveClass gamma)
    {
        std::vector<EffectiveClass> comps;
        for (std::size_t i = 0; i < geometry_.arity(); ++i) {
            comps.push_back(geometry_.unit(i));
        }
        return add_stratum(std::move(label), chi, std::move(comps), std::move(gamma));
    }

    ChowStratum& add_stratum(std::string label, std::int64_t chi, std::vector<EffectiveClass> components,
                             EffectiveClass gamma)
    {
        for (const auto& s : strata_) {
            if (s.label == label) {
                throw invalid_model("duplicate stratum label '" + label + "'");
            }
        }
        const auto local = local_geometry_for(components);
        local.check(gamma);
        ChowStratum s(std::move(label), chi, std::move(components), std::move(gamma), local);
        if (!(s.pushforward(geometry_.arity()) == beta_)) {
            throw invalid_model("stratum '" + s.label + "' pushes forward to " + s.pushforward(geometry_.arity()).to_string()
                                + ", not " + beta_.to_string());
        }
        strata_.push_back(std::move(s));
        return strata_.back();
    }

private:
    Geometry geometry_;
    EffectiveClass beta_;
    std::vector<ChowStratum> strata_;
};

/// DT^par_{n,beta} = sum over strata of chi * local DT^par_{n,gamma}.
inline Rational aggregate_local(const ChowModel& model, std::int64_t n)
{
    std::vector<Stratum> pieces;
    for (const auto& s : model.strata()) {
        pieces.push_back(Stratum{s.label, s.euler_char, s.local_dtpar.get(n, s.gamma)});
    }
    return euler_integrate(StratifiedFunction(std::move(pieces)));
}

struct LocalRow {
    std::string label;
    std::int64_t euler_char = 0;
    /// div(gamma, n) in the local lattice.
    std::int64_t divisibility = 0;
    Rational dt_hat;
    Rational n_hat;
    bool consistent = false;
};

struct LocalGlobalReport {
    std::int64_t n = 0;
    EffectiveClass beta;
    std::vector<LocalRow> strata;
    Rational dt_hat_global;
    /// Divisibility-stratified integral, summed as sum_a sum_{k|a}.
    Rational n_hat_global;
    /// Same integral re-indexed as sum_{k|e} sum_{a: k|a|e}.
    Rational n_hat_global_reindexed;
    /// (-1)^{h-1} h n_hat_global
    Rational expected;
    bool global_ok = false;

    std::vector<std::string> inconsistent_strata() const
    {
        std::vector<std::string> out;
        for (const auto& r : strata) {
            if (!r.consistent) {
                out.push_back(r.label);
            }
        }
        return out;
    }
};

namespace detail {

inline SlopeSeries local_series(const SlopeContext& ctx, const ChowStratum& s)
{
    auto series = SlopeSeries::one(ctx.geometry());
    for (const auto& [k, v] : s.local_dtpar.entries()) {
        if (!ctx.admissible(k.n, k.beta)) {
            throw invalid_model("stratum '" + s.label + "' has local DT^par entry off the slope: ("
                                + std::to_string(k.n) + ", " + k.beta.to_string() + ")");
        }
        series.add_term(k.n, k.beta, v);
    }
    return series;
}

} // namespace detail

/**
 * Integrates the local log-coefficients and the local divisor sums over the
 * strata at (n, beta), n = mu * omega(beta), and compares
 *   DT-hat_global  with  (-1)^{h-1} h N-hat_global.
 * Strata failing their own local relation are listed, not thrown.
 */
inline LocalGlobalReport local_to_global_check(const ChowModel& model, const Rational& mu)
{
    const auto& g = model.geometry();
    const auto& beta = model.beta();
    const auto n_opt = (mu * Rational(g.omega_degree(beta))).to_int64();
    if (!n_opt) {
        throw inadmissible_key("mu * omega(beta) is not an integer");
    }
    const auto n = *n_opt;
    const auto h = g.h_degree(beta);
    const auto sign_h = detail::odd_sign(h) * Rational(h);

    LocalGlobalReport report;
    report.n = n;
    report.beta = beta;

    std::vector<Stratum> dt_pieces;
    std::vector<Stratum> n_pieces;
    for (const auto& s : model.strata()) {
        const SlopeContext local_ctx(s.local(), mu);
        const auto log_local = series_log(detail::local_series(local_ctx, s));
        LocalRow row;
        row.label = s.label;
        row.euler_char = s.euler_char;
        row.divisibility = divisibility(n, s.gamma);
        row.dt_hat = log_local.coefficient(n, s.gamma);
        row.n_hat = detail::divisor_sum(s.local_n1, n, s.gamma);
        // gamma.H equals beta.H since H-degrees are pulled back.
        row.consistent = row.dt_hat == sign_h * row.n_hat;
        dt_pieces.push_back(Stratum{s.label, s.euler_char, row.dt_hat});
        report.strata.push_back(std::move(row));
    }
    report.dt_hat_global = euler_integrate(StratifiedFunction(std::move(dt_pieces)));

    // sum_a  sum_{k|a} 1/k^2  int_{div = a} N_{1, gamma/k}
    Rational by_stratum(0);
    for (std::size_t i = 0; i < model.strata().size(); ++i) {
        const auto& s = model.strata()[i];
        const auto a = report.strata[i].divisibility;
        for (std::int64_t k = 1; k <= a; ++k) {
            if (a % k == 0) {
                by_stratum += Rational(s.euler_char) * s.local_n1.get(1, s.gamma.divided_by(k)) * Rational(1, k * k);
            }
        }
    }
    report.n_hat_global = by_stratum;

    // sum_{k|e} 1/k^2  sum_{a: k|a|e}  int_{div = a} N_{1, gamma/k}
    const auto e = divisibility(n, beta);
    Rational reindexed(0);
    for (std::int64_t k = 1; k <= e; ++k) {
        if (e % k != 0) {
            continue;
        }
        Rational inner(0);
        for (std::int64_t a = k; a <= e; a += k) {
            if (e % a != 0) {
                continue;
            }
            std::vector<Stratum> pieces;
            for (std::size_t i = 0; i < model.strata().size(); ++i) {
                const auto& s = model.strata()[i];
                if (report.strata[i].divisibility == a) {
                    pieces.push_back(Stratum{s.label, s.euler_char, s.local_n1.get(1, s.gamma.divided_by(k))});
                }
            }
            inner += euler_integrate(StratifiedFunction(std::move(pieces)));
        }
        reindexed += inner * Rational(1, k * k);
    }
    report.n_hat_global_reindexed = reindexed;

    report.expected = sign_h * report.n_hat_global;
    report.global_ok = report.dt_hat_global == report.expected;
    return report;
}

/// One row per stratum, then a "global" row.
inline std::string to_tsv(const LocalGlobalReport& r)
{
    std::string out;
    for (const auto& s : r.strata) {
        out += s.label + '\t' + std::to_string(s.euler_char) + '\t' + std::to_string(s.divisibility) + '\t'
             + s.dt_hat.to_string() + '\t' + s.n_hat.to_string() + '\t' + (s.consistent ? "true" : "false") + '\n';
    }
    out += "global\t" + std::to_string(r.n) + '\t' + r.beta.to_string() + '\t' + r.dt_hat_global.to_string() + '\t'
         + r.expected.to_string() + '\t' + (r.global_ok ? "true" : "false") + '\n';
    return out;
}

} // namespace wallcross
