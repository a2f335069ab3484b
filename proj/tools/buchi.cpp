/*
   Copyright 2026 The buchi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input error, 3 resource cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "buchi/arith.hpp"
#include "buchi/formulas.hpp"
#include "buchi/output.hpp"
#include "buchi/search.hpp"
#include "buchi/sweep.hpp"
#include "buchi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0')
        throw buchi::InvalidInput(std::string(name) + " must be a positive integer, got '" +
                                  v + "'");
    return static_cast<std::uint64_t>(parsed);
}

// The closed-form engine as used by the CLI. A test build can corrupt one
// branch to prove the verification harness actually detects differences.
buchi::Length cli_formula_opt(const buchi::PrimePowerModulus& mod,
                              const buchi::Residue& f2, std::uint64_t cap) {
    buchi::Length v = buchi::formula_opt(mod, f2, cap);
#ifdef BUCHI_FAULT_INJECTION
    const buchi::UnitPart u = buchi::unit_part(f2);
    if (u.ord.is_finite() && u.ord.value() % 2 == 1) v = v.successor();
#endif
    return v;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    buchi::write_file_atomic(out_path, content);
}

struct CommonArgs {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::uint64_t cap = buchi::kDefaultModulusCap;

    buchi::PrimePowerModulus modulus() const {
        if (p < 3) throw buchi::InvalidInput("p must be an odd prime >= 3");
        if (s < 1) throw buchi::InvalidInput("s must be >= 1");
        return buchi::PrimePowerModulus(static_cast<std::uint64_t>(p),
                                        static_cast<std::uint64_t>(s), cap);
    }
};

int cmd_length(const CommonArgs& a, std::int64_t f2, std::int64_t f1, std::int64_t f0) {
    const buchi::PrimePowerModulus mod = a.modulus();
    const buchi::SquareTable tbl(mod, a.cap);
    const buchi::LinearSquareIndex idx(mod, a.cap);
    const buchi::QuadPoly f(mod, f2, f1, f0);
    buchi::LengthRecord rec;
    rec.p = mod.p();
    rec.s = mod.s();
    rec.modulus = mod.m();
    rec.f2 = f.f2;
    rec.f1 = f.f1;
    rec.f0 = f.f0;
    rec.length = buchi::buchi_length(f, tbl);
    rec.trivial = buchi::is_square_poly(f, idx);
    std::cout << buchi::to_json(rec).dump(2) << "\n";
    return kExitOk;
}

int cmd_opt(const CommonArgs& a, std::int64_t f2_in, const std::string& method,
            unsigned jobs, bool timing) {
    const buchi::PrimePowerModulus mod = a.modulus();
    const buchi::Residue f2 = mod.residue(f2_in);
    const bool want_formula = method == "formula" || method == "both";
    const bool want_brute = method == "brute" || method == "both";

    buchi::OutputRecord rec;
    rec.p = mod.p();
    rec.s = mod.s();
    rec.modulus = mod.m();
    rec.f2 = f2.value;
    rec.t2 = buchi::padic_ord(f2);
    rec.g2_character = buchi::g2_character_of(f2);

    const auto start = std::chrono::steady_clock::now();
    if (want_formula) rec.opt_formula = cli_formula_opt(mod, f2, a.cap);
    if (want_brute) {
        const buchi::SquareTable tbl(mod, a.cap);
        const buchi::LinearSquareIndex idx(mod, a.cap);
        const buchi::SearchOutcome so = buchi::ml_opt(f2, tbl, idx, jobs);
        rec.opt_brute = so.length.successor();
        rec.ml = so.length;
        if (so.witness) rec.witness = buchi::Witness{so.witness->f1, so.witness->f0};
        rec.trivial_only = so.trivial_only;
    } else {
        rec.ml = rec.opt_formula->predecessor();
    }
    if (timing) {
        const auto end = std::chrono::steady_clock::now();
        rec.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    }
    std::cout << buchi::to_json(rec).dump(2) << "\n";
    if (want_formula && want_brute && *rec.opt_formula != *rec.opt_brute) {
        std::cerr << "mismatch: formula " << *rec.opt_formula << " vs brute "
                  << *rec.opt_brute << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_sweep(const CommonArgs& a, buchi::F2Selection sel, const std::string& format,
              const std::string& out_path, unsigned jobs, bool timing) {
    const buchi::PrimePowerModulus mod = a.modulus();
    std::vector<buchi::SweepRecord> records = buchi::sweep(mod, sel, jobs, timing, a.cap);
#ifdef BUCHI_FAULT_INJECTION
    for (auto& r : records)
        r.opt_formula = cli_formula_opt(mod, buchi::Residue{r.f2, mod}, a.cap);
#endif
    std::string content;
    if (format == "csv") {
        std::string csv(buchi::kSweepCsvHeader);
        csv += "\n";
        for (const auto& r : records) {
            csv += buchi::to_csv_row(buchi::to_output_record(r));
            csv += "\n";
        }
        content = std::move(csv);
    } else {
        buchi::json arr = buchi::json::array();
        for (const auto& r : records) arr.push_back(buchi::to_json(buchi::to_output_record(r)));
        content = arr.dump(2) + "\n";
    }
    emit(content, out_path);
    return kExitOk;
}

buchi::GridSpec load_grid(const std::string& spec, std::uint64_t cap, unsigned jobs,
                          bool timing, const std::vector<std::string>& disabled) {
    buchi::GridSpec grid;
    if (spec == "default") {
        grid = buchi::default_grid();
    } else {
        std::ifstream in(spec);
        if (!in) throw buchi::InvalidInput("cannot open grid file: " + spec);
        buchi::json j;
        try {
            in >> j;
        } catch (const buchi::json::exception& e) {
            throw buchi::InvalidInput("bad grid file " + spec + ": " + e.what());
        }
        if (!j.is_array()) throw buchi::InvalidInput("grid file must hold a JSON array");
        for (const auto& item : j) {
            buchi::GridPoint pt;
            pt.p = item.at("p").get<std::uint64_t>();
            pt.s = item.at("s").get<std::uint64_t>();
            pt.mode = buchi::f2_selection_from(item.value("mode", "all"));
            grid.points.push_back(pt);
        }
    }
    grid.cap = cap;
    grid.jobs = jobs;
    grid.timing = timing;
    grid.disabled_checks.insert(disabled.begin(), disabled.end());
    return grid;
}

void print_verify_summary(const buchi::VerifyReport& report) {
    std::cerr << "point            mode             compared  mismatches\n";
    for (const auto& pt : report.points) {
        std::ostringstream head;
        head << pt.point.p << "^" << pt.point.s;
        std::ostringstream line;
        line.width(16);
        line.setf(std::ios::left);
        line << head.str();
        std::ostringstream mode;
        mode << buchi::f2_selection_name(pt.point.mode);
        std::cerr << line.str();
        std::cerr.width(17);
        std::cerr.setf(std::ios::left);
        std::cerr << mode.str();
        if (pt.skipped)
            std::cerr << "SKIPPED (" << pt.skip_reason << ")\n";
        else
            std::cerr << pt.compared << "         " << pt.mismatches.size() << "\n";
    }
    for (const auto& c : report.checks) {
        std::cerr << "check " << c.name << ": ";
        if (c.skipped)
            std::cerr << "SKIPPED (" << c.skip_reason << ")\n";
        else
            std::cerr << c.checked << " checked, " << c.failures << " failed\n";
    }
    std::cerr << (report.pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const std::string& grid_spec, const std::string& format,
               const std::string& out_path, std::uint64_t cap, unsigned jobs, bool timing,
               const std::vector<std::string>& disabled) {
    const buchi::GridSpec grid = load_grid(grid_spec, cap, jobs, timing, disabled);
    buchi::VerifyReport report = buchi::verify_main(
        grid, [cap](const buchi::PrimePowerModulus& mod, const buchi::Residue& f2) {
            return cli_formula_opt(mod, f2, cap);
        });
    buchi::VerifyReport lemmas = buchi::verify_lemmas(grid);
    for (auto& c : lemmas.checks) report.checks.push_back(std::move(c));
    if (format == "json") emit(buchi::to_json(report).dump(2) + "\n", out_path);
    print_verify_summary(report);
    return report.pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal lengths of non-trivial Büchi sequences of quadratic "
                 "polynomials modulo odd prime powers: closed-form and brute-force "
                 "engines with cross-verification."};
    app.require_subcommand(1);

    try {
        const std::uint64_t cap = env_u64("BUCHI_MAX_MODULUS", buchi::kDefaultModulusCap);
        const unsigned default_jobs =
            static_cast<unsigned>(env_u64("BUCHI_JOBS", 1));

        CommonArgs common;
        common.cap = cap;

        // length
        auto* length_cmd =
            app.add_subcommand("length", "Length and triviality of one polynomial");
        std::int64_t lf2 = 0, lf1 = 0, lf0 = 0;
        length_cmd->add_option("--p", common.p, "odd prime")->required();
        length_cmd->add_option("--s", common.s, "exponent")->required();
        length_cmd->add_option("--f2", lf2, "x^2 coefficient")->required();
        length_cmd->add_option("--f1", lf1, "x coefficient")->required();
        length_cmd->add_option("--f0", lf0, "constant coefficient")->required();

        // opt
        auto* opt_cmd = app.add_subcommand("opt", "Optimal bound for a given f2");
        std::int64_t of2 = 0;
        std::string method = "both";
        unsigned opt_jobs = default_jobs;
        bool opt_timing = false;
        opt_cmd->add_option("--p", common.p, "odd prime")->required();
        opt_cmd->add_option("--s", common.s, "exponent")->required();
        opt_cmd->add_option("--f2", of2, "x^2 coefficient")->required();
        opt_cmd->add_option("--method", method, "formula|brute|both")
            ->check(CLI::IsMember({"formula", "brute", "both"}));
        opt_cmd->add_option("--jobs", opt_jobs, "worker threads");
        opt_cmd->add_flag("--timing", opt_timing, "record wall-clock timings");

        // sweep
        auto* sweep_cmd = app.add_subcommand("sweep", "One record per f2 class");
        bool all = false, representatives = false;
        std::string sweep_format = "csv", sweep_out;
        unsigned sweep_jobs = default_jobs;
        bool sweep_timing = false;
        sweep_cmd->add_option("--p", common.p, "odd prime")->required();
        sweep_cmd->add_option("--s", common.s, "exponent")->required();
        auto* all_flag = sweep_cmd->add_flag("--all", all, "every f2 class");
        sweep_cmd->add_flag("--representatives", representatives,
                            "one f2 per (order, character) shape")
            ->excludes(all_flag);
        sweep_cmd->add_option("--format", sweep_format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sweep_cmd->add_option("--out", sweep_out, "output file (written atomically)");
        sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
        sweep_cmd->add_flag("--timing", sweep_timing, "record wall-clock timings");

        // verify
        auto* verify_cmd =
            app.add_subcommand("verify", "Formula vs brute force plus property suite");
        std::string grid_spec = "default", verify_format = "json", verify_out;
        unsigned verify_jobs = default_jobs;
        bool verify_timing = false;
        std::vector<std::string> disabled;
        verify_cmd->add_option("--grid", grid_spec, "'default' or a JSON grid file");
        verify_cmd->add_option("--format", verify_format, "json")
            ->check(CLI::IsMember({"json"}));
        verify_cmd->add_option("--out", verify_out, "report file (written atomically)");
        verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
        verify_cmd->add_flag("--timing", verify_timing, "record wall-clock timings");
        verify_cmd->add_option("--skip-check", disabled, "disable a named check");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return kExitUsage;
        }

        if (length_cmd->parsed()) return cmd_length(common, lf2, lf1, lf0);
        if (opt_cmd->parsed()) return cmd_opt(common, of2, method, opt_jobs, opt_timing);
        if (sweep_cmd->parsed()) {
            const buchi::F2Selection sel = representatives
                ? buchi::F2Selection::kRepresentatives
                : buchi::F2Selection::kAll;
            return cmd_sweep(common, sel, sweep_format, sweep_out, sweep_jobs,
                             sweep_timing);
        }
        if (verify_cmd->parsed())
            return cmd_verify(grid_spec, verify_format, verify_out, cap, verify_jobs,
                              verify_timing, disabled);
        return kExitUsage;
    } catch (const buchi::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const buchi::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
