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
 * @file io.hpp
 * @brief JSON encoding of geometries, classes, tables and series.
 *
 * Rationals are written as strings ("3/4", "-2") and read from strings or
 * JSON integers; floating-point numbers are rejected. Objects are checked
 * against a list of allowed keys so that typos fail loudly.
 */

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <wallcross/chow_integration.hpp>
#include <wallcross/cone_series.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/geometry.hpp>
#include <wallcross/git_numerics.hpp>
#include <wallcross/invariant_table.hpp>
#include <wallcross/polynomial.hpp>
#include <wallcross/pt_rationality.hpp>
#include <wallcross/rational.hpp>

namespace wallcross::io {

using json = nlohmann::ordered_json;

inline void allow_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    if (!j.is_object()) {
        throw parse_error(std::string(where) + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (auto a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw parse_error(std::string(where) + ": unknown key '" + key + "'");
        }
    }
}

inline const json& require(const json& j, std::string_view where, const char* key)
{
    if (!j.contains(key)) {
        throw parse_error(std::string(where) + ": missing key '" + key + "'");
    }
    return j.at(key);
}

inline std::int64_t read_int(const json& j, std::string_view where)
{
    if (!j.is_number_integer()) {
        throw parse_error(std::string(where) + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

inline Rational read_rational(const json& j, std::string_view where)
{
    if (j.is_number_integer()) {
        return Rational(static_cast<long long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const error& e) {
            throw parse_error(std::string(where) + ": " + e.what());
        }
    }
    throw parse_error(std::string(where) + ": expected an exact rational (string or integer)");
}

inline std::string read_string(const json& j, std::string_view where)
{
    if (!j.is_string()) {
        throw parse_error(std::string(where) + ": expected a string");
    }
    return j.get<std::string>();
}

inline EffectiveClass read_class(const json& j, std::string_view where, std::size_t arity)
{
    if (!j.is_array()) {
        throw parse_error(std::string(where) + ": expected an array of multiplicities");
    }
    std::vector<std::int64_t> m;
    for (const auto& x : j) {
        const auto v = read_int(x, where);
        if (v < 0) {
            throw parse_error(std::string(where) + ": negative multiplicity");
        }
        m.push_back(v);
    }
    if (m.size() != arity) {
        throw parse_error(std::string(where) + ": class has " + std::to_string(m.size())
                          + " entries, geometry has " + std::to_string(arity) + " generators");
    }
    return EffectiveClass(std::move(m));
}

inline json write_class(const EffectiveClass& b) { return json(b.multiplicities()); }

inline Polynomial read_polynomial(const json& j, std::string_view where, std::string_view var)
{
    if (j.is_number_integer()) {
        return Polynomial(Rational(static_cast<long long>(j.get<std::int64_t>())));
    }
    try {
        return parse_polynomial(read_string(j, where), var);
    } catch (const error& e) {
        throw parse_error(std::string(where) + ": " + e.what());
    }
}

inline Geometry read_geometry(const json& j)
{
    allow_keys(j, "geometry", {"generators", "d"});
    const auto& gens = require(j, "geometry", "generators");
    if (!gens.is_array()) {
        throw parse_error("geometry.generators: expected an array");
    }
    std::vector<Generator> out;
    for (const auto& g : gens) {
        allow_keys(g, "geometry.generators[]", {"name", "omega", "h"});
        out.push_back(Generator{read_string(require(g, "generator", "name"), "generator.name"),
                                read_int(require(g, "generator", "omega"), "generator.omega"),
                                read_int(require(g, "generator", "h"), "generator.h")});
    }
    try {
        return Geometry(std::move(out), read_int(require(j, "geometry", "d"), "geometry.d"));
    } catch (const invalid_geometry& e) {
        throw parse_error(std::string("geometry: ") + e.what());
    }
}

inline json write_geometry(const Geometry& g)
{
    json gens = json::array();
    for (const auto& gen : g.generators()) {
        gens.push_back(json{{"name", gen.name}, {"omega", gen.omega_degree}, {"h", gen.h_degree}});
    }
    return json{{"generators", gens}, {"d", g.truncation()}};
}

/// [{"n": int, "beta": [..], "value": rational}]; n defaults to 1 when @p primitive.
inline InvariantTable read_table(const json& j, const Geometry& g, std::string_view where, bool primitive = false)
{
    if (!j.is_array()) {
        throw parse_error(std::string(where) + ": expected an array of entries");
    }
    InvariantTable t(g);
    for (const auto& e : j) {
        allow_keys(e, where, {"n", "beta", "value"});
        std::int64_t n = 1;
        if (e.contains("n")) {
            n = read_int(e.at("n"), where);
        } else if (!primitive) {
            throw parse_error(std::string(where) + ": missing key 'n'");
        }
        const auto beta = read_class(require(e, where, "beta"), where, g.arity());
        if (beta.is_zero()) {
            throw parse_error(std::string(where) + ": entries need beta > 0");
        }
        if (t.get(n, beta) != Rational(0)) {
            throw parse_error(std::string(where) + ": duplicate entry (" + std::to_string(n) + ", " + beta.to_string() + ")");
        }
        t.set(n, beta, read_rational(require(e, where, "value"), where));
    }
    return t;
}

inline json write_table(const InvariantTable& t)
{
    json out = json::array();
    for (const auto& [k, v] : t.entries()) {
        out.push_back(json{{"n", k.n}, {"beta", write_class(k.beta)}, {"value", v.to_string()}});
    }
    return out;
}

/// Series terms [{"n", "beta", "value"}]; every term, including the constant, is listed.
inline ConeSeries<Rational> read_series(const json& j, const Geometry& g, std::string_view where)
{
    if (!j.is_array()) {
        throw parse_error(std::string(where) + ": expected an array of terms");
    }
    ConeSeries<Rational> s(g);
    for (const auto& e : j) {
        allow_keys(e, where, {"n", "beta", "value"});
        const auto beta = read_class(require(e, where, "beta"), where, g.arity());
        if (!g.within_truncation(beta)) {
            throw parse_error(std::string(where) + ": term " + beta.to_string() + " lies beyond the truncation");
        }
        s.add_term(read_int(require(e, where, "n"), where), beta, read_rational(require(e, where, "value"), where));
    }
    return s;
}

template <CoefficientRing C>
json write_series(const ConeSeries<C>& s)
{
    json out = json::array();
    for (const auto& [k, c] : s.terms()) {
        out.push_back(json{{"n", k.n}, {"beta", write_class(k.beta)}, {"value", to_string(c)}});
    }
    return out;
}

/// [{"genus", "beta", "value": int}]
inline GVTable read_gv(const json& j, const Geometry& g)
{
    if (!j.is_array()) {
        throw parse_error("gv: expected an array of entries");
    }
    GVTable t(g);
    for (const auto& e : j) {
        allow_keys(e, "gv", {"genus", "beta", "value"});
        const auto genus = e.contains("genus") ? read_int(e.at("genus"), "gv.genus") : 0;
        const auto beta = read_class(require(e, "gv", "beta"), "gv.beta", g.arity());
        try {
            t.set(genus, beta, read_int(require(e, "gv", "value"), "gv.value"));
        } catch (const inadmissible_key& x) {
            throw parse_error(std::string("gv: ") + x.what());
        }
    }
    return t;
}

/// {"explicit": table, "multiple_cover": primitive table}
inline PTInvariantData read_pt_table(const json& j, const Geometry& g)
{
    allow_keys(j, "pt_n_table", {"explicit", "multiple_cover"});
    PTInvariantData d(g);
    if (j.contains("explicit")) {
        d.explicit_values = read_table(j.at("explicit"), g, "pt_n_table.explicit");
    }
    if (j.contains("multiple_cover")) {
        d.multiple_cover = read_table(j.at("multiple_cover"), g, "pt_n_table.multiple_cover", true);
    }
    return d;
}

/**
 * {"beta": [..], "strata": [{"label", "chi", "components"?, "gamma", "dtpar", "n1"}]}
 *
 * Without "components" the support is the global generators and gamma is a
 * global class; otherwise gamma and the local tables use one entry per
 * component. "dtpar" is either {"n": value} (values at gamma) or
 * [{"n", "gamma", "value"}] (any local class); "n1" is either
 * {"[a,b]": value} or [{"gamma", "value"}].
 */
inline ChowModel read_chow_model(const json& j, const Geometry& g)
{
    allow_keys(j, "chow_model", {"beta", "strata"});
    ChowModel model(g, read_class(require(j, "chow_model", "beta"), "chow_model.beta", g.arity()));
    const auto& strata = require(j, "chow_model", "strata");
    if (!strata.is_array()) {
        throw parse_error("chow_model.strata: expected an array");
    }
    for (const auto& s : strata) {
        allow_keys(s, "chow_model.strata[]", {"label", "chi", "components", "gamma", "dtpar", "n1"});
        const auto label = read_string(require(s, "stratum", "label"), "stratum.label");
        const auto where = "stratum '" + label + "'";
        const auto chi = read_int(require(s, where, "chi"), where + ".chi");
        std::vector<EffectiveClass> comps;
        if (s.contains("components")) {
            if (!s.at("components").is_array()) {
                throw parse_error(where + ".components: expected an array of classes");
            }
            for (const auto& c : s.at("components")) {
                comps.push_back(read_class(c, where + ".components", g.arity()));
            }
        } else {
            for (std::size_t i = 0; i < g.arity(); ++i) {
                comps.push_back(g.unit(i));
            }
        }
        const auto gamma = read_class(require(s, where, "gamma"), where + ".gamma", comps.size());
        ChowStratum* added = nullptr;
        try {
            added = &model.add_stratum(label, chi, comps, gamma);
        } catch (const error& e) {
            throw parse_error(where + ": " + e.what());
        }
        const auto& local = added->local();
        if (s.contains("dtpar")) {
            const auto& dt = s.at("dtpar");
            if (dt.is_object()) {
                // {"n": value} at gamma itself.
                for (const auto& [key, value] : dt.items()) {
                    std::int64_t n = 0;
                    try {
                        const auto r = Rational::parse(key).to_int64();
                        if (!r) {
                            throw parse_error("not an integer");
                        }
                        n = *r;
                    } catch (const error&) {
                        throw parse_error(where + ".dtpar: key '" + key + "' is not an integer");
                    }
                    added->local_dtpar.set(n, gamma, read_rational(value, where + ".dtpar"));
                }
            } else if (dt.is_array()) {
                for (const auto& e : dt) {
                    allow_keys(e, where + ".dtpar", {"n", "gamma", "value"});
                    const auto cls = read_class(require(e, where, "gamma"), where + ".dtpar.gamma", local.arity());
                    if (cls.is_zero()) {
                        throw parse_error(where + ".dtpar: entries need gamma > 0");
                    }
                    added->local_dtpar.set(read_int(require(e, where, "n"), where + ".dtpar.n"), cls,
                                           read_rational(require(e, where, "value"), where + ".dtpar.value"));
                }
            } else {
                throw parse_error(where + ".dtpar: expected an object or an array");
            }
        }
        if (s.contains("n1")) {
            const auto& n1 = s.at("n1");
            if (n1.is_object()) {
                // {"[a,b]": value}
                for (const auto& [key, value] : n1.items()) {
                    json cls_json;
                    try {
                        cls_json = json::parse(key);
                    } catch (const json::exception&) {
                        throw parse_error(where + ".n1: key '" + key + "' is not a class like [1,0]");
                    }
                    const auto cls = read_class(cls_json, where + ".n1", local.arity());
                    if (cls.is_zero()) {
                        throw parse_error(where + ".n1: entries need gamma > 0");
                    }
                    added->local_n1.set(1, cls, read_rational(value, where + ".n1"));
                }
            } else if (n1.is_array()) {
                for (const auto& e : n1) {
                    allow_keys(e, where + ".n1", {"gamma", "value"});
                    const auto cls = read_class(require(e, where, "gamma"), where + ".n1.gamma", local.arity());
                    if (cls.is_zero()) {
                        throw parse_error(where + ".n1: entries need gamma > 0");
                    }
                    added->local_n1.set(1, cls, read_rational(require(e, where, "value"), where + ".n1.value"));
                }
            } else {
                throw parse_error(where + ".n1: expected an object or an array");
            }
        }
    }
    return model;
}

inline WeightTotals read_totals(const json& j, std::string_view where)
{
    allow_keys(j, where, {"dim_v", "chi_f", "dim_a"});
    return WeightTotals{read_int(require(j, where, "dim_v"), where),
                        read_polynomial(require(j, where, "chi_f"), where, "l"),
                        read_int(require(j, where, "dim_a"), where)};
}

/// {"totals": {...}, "steps": [{"dim_v", "chi_f", "dim_a"}]}; chi_f is a polynomial in l.
inline WeightData read_weight_data(const json& j)
{
    allow_keys(j, "weight_data", {"totals", "steps"});
    WeightData w;
    w.totals = read_totals(require(j, "weight_data", "totals"), "weight_data.totals");
    const auto& steps = require(j, "weight_data", "steps");
    if (!steps.is_array()) {
        throw parse_error("weight_data.steps: expected an array");
    }
    for (const auto& s : steps) {
        const auto t = read_totals(s, "weight_data.steps[]");
        w.steps.push_back(FiltrationStep{t.dim_v, t.chi_f, t.dim_a});
    }
    return w;
}

inline SubspaceDatum read_subspace(const json& j)
{
    const auto t = read_totals(j, "subspace");
    return SubspaceDatum{t.dim_v, t.chi_f, t.dim_a};
}

} // namespace wallcross::io
