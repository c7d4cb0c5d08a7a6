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
 * @file scenario.hpp
 * @brief Scenario files: data blocks plus a list of commands, each producing
 *        one Report.
 *
 * A scenario is validated completely (syntax, keys, arities, presence of the
 * data each command needs) before any command runs.
 */

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <wallcross/chow_integration.hpp>
#include <wallcross/dt_transforms.hpp>
#include <wallcross/git_numerics.hpp>
#include <wallcross/io.hpp>
#include <wallcross/lie_algebra.hpp>
#include <wallcross/pt_rationality.hpp>
#include <wallcross/verify/suites.hpp>

namespace wallcross::scenario {

using io::json;

enum class Status { ok, fail };

inline std::string to_string(Status s) { return s == Status::ok ? "ok" : "fail"; }

struct Report {
    std::string command;
    Status status = Status::ok;
    /// (key, value) lines shown above the rows.
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json payload = json::object();
};

struct Command {
    std::string name;
    json args = json::object();
};

struct Scenario {
    std::optional<Geometry> geometry;
    std::optional<Rational> mu;
    std::optional<InvariantTable> N;
    std::optional<InvariantTable> N1;
    std::optional<ConeSeries<Rational>> dtpar_series;
    std::optional<GVTable> gv;
    std::optional<PTInvariantData> pt_n_table;
    std::optional<ChowModel> chow_model;
    std::optional<WeightData> weight_data;
    std::optional<SubspaceDatum> subspace;
    std::vector<Command> run;
};

namespace detail {

struct CommandSpec {
    const char* name;
    std::vector<const char*> needs;
    std::vector<std::string_view> args;
};

inline const std::vector<CommandSpec>& command_specs()
{
    static const std::vector<CommandSpec> specs{
        {"forward", {"geometry", "mu", "N"}, {}},
        {"inverse", {"geometry", "mu", "dtpar_series"}, {}},
        {"multcover", {"geometry", "mu", "N1"}, {}},
        {"check-equiv", {"geometry", "mu", "N"}, {}},
        {"lie-check", {"geometry", "mu", "N"}, {}},
        {"gv-expand", {"geometry", "gv"}, {}},
        {"pt-rationality", {"geometry", "gv"}, {}},
        {"l-solve", {"geometry", "gv", "pt_n_table"}, {}},
        {"l-symmetry", {"geometry", "gv", "pt_n_table"}, {}},
        {"chow-aggregate", {"geometry", "chow_model"}, {"n"}},
        {"local-global", {"geometry", "mu", "chow_model"}, {}},
        {"hm-weight", {"weight_data"}, {}},
        {"git-test", {"weight_data", "subspace"}, {}},
        {"verify", {}, {"seed", "max_d", "scale"}},
    };
    return specs;
}

inline const CommandSpec& find_spec(const std::string& name)
{
    for (const auto& s : command_specs()) {
        if (name == s.name) {
            return s;
        }
    }
    throw parse_error("unknown command '" + name + "'");
}

inline bool has_block(const Scenario& s, std::string_view block)
{
    if (block == "geometry") return s.geometry.has_value();
    if (block == "mu") return s.mu.has_value();
    if (block == "N") return s.N.has_value();
    if (block == "N1") return s.N1.has_value();
    if (block == "dtpar_series") return s.dtpar_series.has_value();
    if (block == "gv") return s.gv.has_value();
    if (block == "pt_n_table") return s.pt_n_table.has_value();
    if (block == "chow_model") return s.chow_model.has_value();
    if (block == "weight_data") return s.weight_data.has_value();
    if (block == "subspace") return s.subspace.has_value();
    return false;
}

inline std::vector<std::string> series_row(std::int64_t n, const EffectiveClass& beta, std::string value)
{
    return {std::to_string(n), beta.to_string(), std::move(value)};
}

template <CoefficientRing C>
void put_series(Report& r, const ConeSeries<C>& s)
{
    r.columns = {"n", "beta", "coefficient"};
    for (const auto& [k, c] : s.terms()) {
        r.rows.push_back(series_row(k.n, k.beta, to_string(c)));
    }
    r.summary.emplace_back("series", to_expression(s));
    r.payload["geometry"] = io::write_geometry(s.geometry());
    r.payload["terms"] = io::write_series(s);
    r.payload["expression"] = to_expression(s);
}

inline void put_table(Report& r, const InvariantTable& t, const char* name)
{
    r.columns = {"n", "beta", "value"};
    for (const auto& [k, v] : t.entries()) {
        r.rows.push_back(series_row(k.n, k.beta, v.to_string()));
    }
    r.payload[name] = io::write_table(t);
}

inline const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace detail

/// Parses a scenario document; throws parse_error on any structural problem.
inline Scenario parse(const json& doc)
{
    io::allow_keys(doc, "scenario",
                   {"geometry", "mu", "N", "N1", "dtpar_series", "gv", "pt_n_table", "chow_model", "weight_data",
                    "subspace", "run"});
    Scenario s;
    if (doc.contains("geometry")) {
        s.geometry = io::read_geometry(doc.at("geometry"));
    }
    if (doc.contains("mu")) {
        s.mu = io::read_rational(doc.at("mu"), "mu");
    }
    const char* geometric[] = {"N", "N1", "dtpar_series", "gv", "pt_n_table", "chow_model"};
    for (const auto* key : geometric) {
        if (doc.contains(key) && !s.geometry) {
            throw parse_error(std::string("block '") + key + "' needs a geometry block");
        }
    }
    if (doc.contains("N")) {
        s.N = io::read_table(doc.at("N"), *s.geometry, "N");
    }
    if (doc.contains("N1")) {
        s.N1 = io::read_table(doc.at("N1"), *s.geometry, "N1", true);
    }
    if (doc.contains("dtpar_series")) {
        s.dtpar_series = io::read_series(doc.at("dtpar_series"), *s.geometry, "dtpar_series");
    }
    if (doc.contains("gv")) {
        s.gv = io::read_gv(doc.at("gv"), *s.geometry);
    }
    if (doc.contains("pt_n_table")) {
        s.pt_n_table = io::read_pt_table(doc.at("pt_n_table"), *s.geometry);
    }
    if (doc.contains("chow_model")) {
        try {
            s.chow_model = io::read_chow_model(doc.at("chow_model"), *s.geometry);
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            throw parse_error(std::string("chow_model: ") + e.what());
        }
    }
    if (doc.contains("weight_data")) {
        s.weight_data = io::read_weight_data(doc.at("weight_data"));
    }
    if (doc.contains("subspace")) {
        s.subspace = io::read_subspace(doc.at("subspace"));
    }
    if (doc.contains("run")) {
        const auto& run = doc.at("run");
        if (!run.is_array()) {
            throw parse_error("run: expected an array of commands");
        }
        for (const auto& c : run) {
            Command cmd;
            if (c.is_string()) {
                cmd.name = c.get<std::string>();
            } else if (c.is_object()) {
                cmd.name = io::read_string(io::require(c, "run[]", "command"), "run[].command");
                for (const auto& [k, v] : c.items()) {
                    if (k != "command") {
                        cmd.args[k] = v;
                    }
                }
            } else {
                throw parse_error("run[]: expected a command name or an object with a 'command' key");
            }
            const auto& spec = detail::find_spec(cmd.name);
            for (const auto& [k, v] : cmd.args.items()) {
                bool known = false;
                for (auto a : spec.args) {
                    known = known || k == a;
                }
                if (!known) {
                    throw parse_error("command '" + cmd.name + "': unknown argument '" + k + "'");
                }
                io::read_int(v, "command '" + cmd.name + "' argument '" + k + "'");
            }
            for (const auto* need : spec.needs) {
                if (!detail::has_block(s, need)) {
                    throw parse_error("command '" + cmd.name + "' needs a '" + need + "' block");
                }
            }
            s.run.push_back(std::move(cmd));
        }
    }
    return s;
}

inline Scenario parse_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed scenario document: ") + e.what());
    }
    return parse(doc);
}

inline Scenario load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

/// Runs one command. Library errors propagate to the caller.
inline Report execute(const Scenario& s, const Command& c)
{
    Report r;
    r.command = c.name;
    auto ctx = [&] { return SlopeContext(*s.geometry, *s.mu); };

    if (c.name == "forward") {
        detail::put_series(r, dt_par_from_N(ctx(), *s.N));
    } else if (c.name == "inverse") {
        detail::put_table(r, N_from_dt_par(ctx(), *s.dtpar_series), "N");
    } else if (c.name == "multcover") {
        detail::put_table(r, multiple_cover_extend(ctx(), *s.N1), "N");
    } else if (c.name == "check-equiv") {
        const auto report = s.N1 ? check_multcover_equiv(ctx(), *s.N, *s.N1) : check_multcover_equiv(ctx(), *s.N);
        r.columns = {"n", "beta", "dt_hat", "expected", "ok"};
        r.payload["rows"] = json::array();
        for (const auto& row : report.rows) {
            r.rows.push_back({std::to_string(row.n), row.beta.to_string(), row.dt_hat.to_string(),
                              row.expected.to_string(), detail::flag(row.ok)});
            r.payload["rows"].push_back(json{{"n", row.n},
                                             {"beta", io::write_class(row.beta)},
                                             {"dt_hat", row.dt_hat.to_string()},
                                             {"expected", row.expected.to_string()},
                                             {"ok", row.ok}});
        }
        r.summary.emplace_back("failing", std::to_string(report.failing_keys().size()));
        r.status = report.all_ok() ? Status::ok : Status::fail;
    } else if (c.name == "lie-check") {
        const auto report = lie_transform_check(ctx(), *s.N);
        r.columns = {"n", "beta", "lie", "dt_par", "ok"};
        r.payload["rows"] = json::array();
        for (const auto& row : report.rows) {
            r.rows.push_back({std::to_string(row.n), row.beta.to_string(), row.lie_coefficient.to_string(),
                              row.dt_par.to_string(), detail::flag(row.ok)});
            r.payload["rows"].push_back(json{{"n", row.n},
                                             {"beta", io::write_class(row.beta)},
                                             {"lie", row.lie_coefficient.to_string()},
                                             {"dt_par", row.dt_par.to_string()},
                                             {"ok", row.ok}});
        }
        r.status = report.all_ok() ? Status::ok : Status::fail;
    } else if (c.name == "gv-expand") {
        detail::put_series(r, gv_expand(*s.geometry, *s.gv));
    } else if (c.name == "pt-rationality") {
        const auto pt = gv_expand(*s.geometry, *s.gv);
        r.columns = {"beta", "pt", "symmetric"};
        r.payload["rows"] = json::array();
        bool all = true;
        for (const auto& [k, f] : pt.terms()) {
            if (k.beta.is_zero()) {
                continue;
            }
            const bool sym = rationality_check(f);
            all = all && sym;
            r.rows.push_back({k.beta.to_string(), to_string(f), detail::flag(sym)});
            r.payload["rows"].push_back(
                json{{"beta", io::write_class(k.beta)}, {"pt", to_string(f)}, {"symmetric", sym}});
        }
        r.status = all ? Status::ok : Status::fail;
    } else if (c.name == "l-solve") {
        detail::put_series(r, l_series_solve(*s.geometry, gv_expand(*s.geometry, *s.gv), *s.pt_n_table));
    } else if (c.name == "l-symmetry") {
        const auto L = l_series_solve(*s.geometry, gv_expand(*s.geometry, *s.gv), *s.pt_n_table);
        const auto report = l_symmetry_report(L);
        r.columns = {"beta", "f", "symmetric", "laurent"};
        r.payload["rows"] = json::array();
        for (const auto& row : report.rows) {
            r.rows.push_back({row.beta.to_string(), to_string(row.f), detail::flag(row.symmetric),
                              detail::flag(row.laurent)});
            r.payload["rows"].push_back(json{{"beta", io::write_class(row.beta)},
                                             {"f", to_string(row.f)},
                                             {"symmetric", row.symmetric},
                                             {"laurent", row.laurent}});
        }
        r.status = report.all_ok() ? Status::ok : Status::fail;
    } else if (c.name == "chow-aggregate") {
        const auto& model = *s.chow_model;
        std::int64_t n = 0;
        if (c.args.contains("n")) {
            n = c.args.at("n").get<std::int64_t>();
        } else if (s.mu) {
            const auto slope = (*s.mu * Rational(model.geometry().omega_degree(model.beta()))).to_int64();
            if (!slope) {
                throw inadmissible_key("mu * omega(beta) is not an integer");
            }
            n = *slope;
        } else {
            throw parse_error("command 'chow-aggregate' needs an 'n' argument or a 'mu' block");
        }
        r.columns = {"label", "chi", "local_dtpar"};
        for (const auto& st : model.strata()) {
            r.rows.push_back({st.label, std::to_string(st.euler_char), st.local_dtpar.get(n, st.gamma).to_string()});
        }
        const auto total = aggregate_local(model, n);
        r.summary.emplace_back("dt_par", std::to_string(n) + '\t' + model.beta().to_string() + '\t' + total.to_string());
        r.payload = json{{"n", n}, {"beta", io::write_class(model.beta())}, {"dt_par", total.to_string()}};
    } else if (c.name == "local-global") {
        const auto report = local_to_global_check(*s.chow_model, *s.mu);
        r.columns = {"label", "chi", "divisibility", "dt_hat", "n_hat", "consistent"};
        r.payload["strata"] = json::array();
        for (const auto& row : report.strata) {
            r.rows.push_back({row.label, std::to_string(row.euler_char), std::to_string(row.divisibility),
                              row.dt_hat.to_string(), row.n_hat.to_string(), detail::flag(row.consistent)});
            r.payload["strata"].push_back(json{{"label", row.label},
                                               {"chi", row.euler_char},
                                               {"divisibility", row.divisibility},
                                               {"dt_hat", row.dt_hat.to_string()},
                                               {"n_hat", row.n_hat.to_string()},
                                               {"consistent", row.consistent}});
        }
        r.summary.emplace_back("dt_hat_global", report.dt_hat_global.to_string());
        r.summary.emplace_back("expected", report.expected.to_string());
        r.summary.emplace_back("n_hat_global", report.n_hat_global.to_string());
        r.summary.emplace_back("n_hat_global_reindexed", report.n_hat_global_reindexed.to_string());
        r.summary.emplace_back("global_ok", detail::flag(report.global_ok));
        r.payload["n"] = report.n;
        r.payload["beta"] = io::write_class(report.beta);
        r.payload["dt_hat_global"] = report.dt_hat_global.to_string();
        r.payload["expected"] = report.expected.to_string();
        r.payload["n_hat_global"] = report.n_hat_global.to_string();
        r.payload["n_hat_global_reindexed"] = report.n_hat_global_reindexed.to_string();
        r.payload["global_ok"] = report.global_ok;
        const bool orders_agree = report.n_hat_global == report.n_hat_global_reindexed;
        r.status = report.global_ok && orders_agree ? Status::ok : Status::fail;
    } else if (c.name == "hm-weight") {
        const auto w = hm_weight(*s.weight_data);
        r.columns = {"step", "summand"};
        for (std::size_t i = 0; i < s.weight_data->steps.size(); ++i) {
            r.rows.push_back({std::to_string(i + 1),
                              to_string(hm_weight_summand(s.weight_data->totals, s.weight_data->steps[i]), "l")});
        }
        r.summary.emplace_back("weight", to_string(w, "l"));
        r.summary.emplace_back("sign", to_string(asymptotic_sign(w)));
        r.payload = json{{"weight", to_string(w, "l")}, {"sign", to_string(asymptotic_sign(w))}};
    } else if (c.name == "git-test") {
        const auto sign = git_stability_test(s.weight_data->totals, *s.subspace);
        r.summary.emplace_back("sign", to_string(sign));
        r.payload = json{{"sign", to_string(sign)}};
    } else if (c.name == "verify") {
        verify::SuiteOptions o;
        if (c.args.contains("seed")) {
            o.seed = c.args.at("seed").get<std::uint64_t>();
        }
        if (c.args.contains("max_d")) {
            o.max_d = c.args.at("max_d").get<std::int64_t>();
        }
        if (c.args.contains("scale")) {
            o.scale = static_cast<double>(c.args.at("scale").get<std::int64_t>());
        }
        r.columns = {"suite", "cases", "ok", "detail"};
        bool all = true;
        r.payload["suites"] = json::array();
        for (const auto& res : verify::run_all(o)) {
            all = all && res.ok();
            std::string detail;
            for (const auto& f : res.failures) {
                detail += (detail.empty() ? "" : "; ") + f;
            }
            r.rows.push_back({res.name, std::to_string(res.cases), detail::flag(res.ok()), detail});
            r.payload["suites"].push_back(
                json{{"suite", res.name}, {"cases", res.cases}, {"ok", res.ok()}, {"failures", res.failures}});
        }
        r.status = all ? Status::ok : Status::fail;
    } else {
        throw parse_error("unknown command '" + c.name + "'");
    }
    return r;
}

/// "# command<TAB>status", summary lines as "# key<TAB>value", a column header, then the rows.
inline std::string render_tsv(const Report& r)
{
    std::string out = "# " + r.command + '\t' + to_string(r.status) + '\n';
    for (const auto& [k, v] : r.summary) {
        out += "# " + k + '\t' + v + '\n';
    }
    if (!r.columns.empty()) {
        out += "#";
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            out += (i == 0 ? " " : "\t") + r.columns[i];
        }
        out += '\n';
    }
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i == 0 ? "" : "\t") + row[i];
        }
        out += '\n';
    }
    return out;
}

inline json render_doc(const Report& r)
{
    json j{{"command", r.command}, {"status", to_string(r.status)}};
    json summary = json::object();
    for (const auto& [k, v] : r.summary) {
        summary[k] = v;
    }
    j["summary"] = summary;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["payload"] = r.payload;
    return j;
}

} // namespace wallcross::scenario
