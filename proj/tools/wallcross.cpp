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

// wallcross run <file> [--out DIR] [--format tsv|doc]
// wallcross verify [--seed INT] [--max-d INT]
//
// Exit status: 0 success, 1 a check failed, 2 the input was rejected.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wallcross/scenario.hpp>
#include <wallcross/verify/suites.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_rejected = 2;

std::string file_name(std::size_t index, const std::string& command, const std::string& ext)
{
    auto number = std::to_string(index + 1);
    if (number.size() < 2) {
        number.insert(0, "0");
    }
    return number + "-" + command + "." + ext;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

int run_scenario(const std::string& path, const std::string& out_dir, const std::string& format)
{
    using namespace wallcross;
    std::vector<scenario::Report> reports;
    try {
        const auto s = scenario::load(path);
        for (const auto& c : s.run) {
            reports.push_back(scenario::execute(s, c));
        }
    } catch (const error& e) {
        std::cerr << "wallcross: " << e.what() << '\n';
        return exit_rejected;
    }

    bool failed = false;
    for (const auto& r : reports) {
        failed = failed || r.status == scenario::Status::fail;
    }

    const bool doc = format == "doc";
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            const auto name = file_name(i, r.command, doc ? "json" : "tsv");
            write_file(std::filesystem::path(out_dir) / name,
                       doc ? scenario::render_doc(r).dump(2) + '\n' : scenario::render_tsv(r));
        }
    } else if (doc) {
        scenario::json all = scenario::json::array();
        for (const auto& r : reports) {
            all.push_back(scenario::render_doc(r));
        }
        std::cout << scenario::json{{"reports", all}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::cout << (i == 0 ? "" : "\n") << scenario::render_tsv(reports[i]);
        }
    }

    for (const auto& r : reports) {
        if (r.status == scenario::Status::fail) {
            std::cerr << "wallcross: check failed in '" << r.command << "'\n";
        }
    }
    return failed ? exit_check_failed : exit_ok;
}

int run_verify(std::uint64_t seed, std::int64_t max_d)
{
    wallcross::verify::SuiteOptions o;
    o.seed = seed;
    o.max_d = max_d;
    bool all = true;
    for (const auto& r : wallcross::verify::run_all(o)) {
        all = all && r.ok();
        std::cout << (r.ok() ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.cases << " cases\n";
        for (const auto& f : r.failures) {
            std::cout << "\t- " << f << '\n';
        }
    }
    return all ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact wall-crossing transforms and consistency checks"};
    app.require_subcommand(1);

    std::string path;
    std::string out_dir;
    std::string format = "tsv";
    auto* run = app.add_subcommand("run", "Run the commands listed in a scenario file");
    run->add_option("file", path, "Scenario file (JSON)")->required();
    run->add_option("--out", out_dir, "Write one report file per command into DIR");
    run->add_option("--format", format, "Report format")->check(CLI::IsMember({"tsv", "doc"}));

    std::uint64_t seed = 1;
    std::int64_t max_d = 6;
    auto* verify = app.add_subcommand("verify", "Run the randomized property and oracle suites");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--max-d", max_d, "Largest truncation degree drawn")->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_rejected;
    }

    try {
        if (*run) {
            return run_scenario(path, out_dir, format);
        }
        return run_verify(seed, max_d);
    } catch (const std::exception& e) {
        std::cerr << "wallcross: " << e.what() << '\n';
        return exit_rejected;
    }
}
