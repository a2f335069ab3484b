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

// Output records and their CSV/JSON forms. Infinity is serialized as the
// literal string "inf" in both formats so the schemas stay type-stable
// across finite and infinite results.

#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "buchi/arith.hpp"
#include "buchi/length.hpp"
#include "buchi/sweep.hpp"
#include "buchi/verify.hpp"

namespace buchi {

using json = nlohmann::json;

inline json length_to_json(Length v) {
    return v.is_infinite() ? json("inf") : json(v.value());
}

inline Length length_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Length::infinite();
        throw InvalidInput("bad length value: " + j.dump());
    }
    return Length::finite(j.get<std::uint64_t>());
}

inline json ext_order_to_json(ExtOrder o) {
    return o.is_infinite() ? json("inf") : json(o.value());
}

inline ExtOrder ext_order_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtOrder::infinity();
        throw InvalidInput("bad order value: " + j.dump());
    }
    return ExtOrder::finite(j.get<std::uint64_t>());
}

inline std::string_view g2_character_name(G2Character c) {
    switch (c) {
        case G2Character::kSquare: return "square";
        case G2Character::kNonSquare: return "nonsquare";
        case G2Character::kZero: return "zero";
    }
    return "zero";
}

inline G2Character g2_character_from(std::string_view name) {
    if (name == "square") return G2Character::kSquare;
    if (name == "nonsquare") return G2Character::kNonSquare;
    if (name == "zero") return G2Character::kZero;
    throw InvalidInput("bad g2_character: " + std::string(name));
}

// One result row; opt_formula/opt_brute are null when the engine was not
// requested, witness is null when no non-trivial polynomial was found.
struct OutputRecord {
    std::uint64_t p = 0, s = 0, modulus = 0, f2 = 0;
    ExtOrder t2 = ExtOrder::finite(0);
    G2Character g2_character = G2Character::kZero;
    std::optional<Length> opt_formula;
    std::optional<Length> opt_brute;
    Length ml;
    std::optional<Witness> witness;
    bool trivial_only = false;
    std::uint64_t elapsed_ms = 0;

    friend bool operator==(const OutputRecord& a, const OutputRecord& b) {
        return a.p == b.p && a.s == b.s && a.modulus == b.modulus && a.f2 == b.f2 &&
               a.t2 == b.t2 && a.g2_character == b.g2_character &&
               a.opt_formula == b.opt_formula && a.opt_brute == b.opt_brute &&
               a.ml == b.ml &&
               ((!a.witness && !b.witness) ||
                (a.witness && b.witness && *a.witness == *b.witness)) &&
               a.trivial_only == b.trivial_only && a.elapsed_ms == b.elapsed_ms;
    }
};

inline OutputRecord to_output_record(const SweepRecord& r) {
    OutputRecord o;
    o.p = r.p;
    o.s = r.s;
    o.modulus = r.modulus;
    o.f2 = r.f2;
    o.t2 = r.t2;
    o.g2_character = r.g2_character;
    o.opt_formula = r.opt_formula;
    o.opt_brute = r.opt_brute;
    o.ml = r.ml;
    o.witness = r.witness;
    o.trivial_only = r.trivial_only;
    o.elapsed_ms = r.elapsed_ms;
    return o;
}

inline json to_json(const OutputRecord& r) {
    json j;
    j["p"] = r.p;
    j["s"] = r.s;
    j["modulus"] = r.modulus;
    j["f2"] = r.f2;
    j["t2"] = ext_order_to_json(r.t2);
    j["g2_character"] = std::string(g2_character_name(r.g2_character));
    j["opt_formula"] = r.opt_formula ? length_to_json(*r.opt_formula) : json(nullptr);
    j["opt_brute"] = r.opt_brute ? length_to_json(*r.opt_brute) : json(nullptr);
    j["ml"] = length_to_json(r.ml);
    j["witness"] = r.witness
        ? json{{"f1", r.witness->f1}, {"f0", r.witness->f0}}
        : json(nullptr);
    j["trivial_only"] = r.trivial_only;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline OutputRecord output_record_from_json(const json& j) {
    OutputRecord r;
    r.p = j.at("p").get<std::uint64_t>();
    r.s = j.at("s").get<std::uint64_t>();
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.f2 = j.at("f2").get<std::uint64_t>();
    r.t2 = ext_order_from_json(j.at("t2"));
    r.g2_character = g2_character_from(j.at("g2_character").get<std::string>());
    if (!j.at("opt_formula").is_null()) r.opt_formula = length_from_json(j.at("opt_formula"));
    if (!j.at("opt_brute").is_null()) r.opt_brute = length_from_json(j.at("opt_brute"));
    r.ml = length_from_json(j.at("ml"));
    if (!j.at("witness").is_null())
        r.witness = Witness{j.at("witness").at("f1").get<std::uint64_t>(),
                            j.at("witness").at("f0").get<std::uint64_t>()};
    r.trivial_only = j.at("trivial_only").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    return r;
}

inline constexpr std::string_view kSweepCsvHeader =
    "p,s,modulus,f2,t2,g2_character,opt_formula,opt_brute,ml,witness_f1,witness_f0,"
    "trivial_only,elapsed_ms";

inline std::string to_csv_row(const OutputRecord& r) {
    std::ostringstream os;
    os << r.p << ',' << r.s << ',' << r.modulus << ',' << r.f2 << ',' << r.t2 << ','
       << g2_character_name(r.g2_character) << ',';
    if (r.opt_formula) os << *r.opt_formula;
    os << ',';
    if (r.opt_brute) os << *r.opt_brute;
    os << ',' << r.ml << ',';
    if (r.witness) os << r.witness->f1;
    os << ',';
    if (r.witness) os << r.witness->f0;
    os << ',' << (r.trivial_only ? "true" : "false") << ',' << r.elapsed_ms;
    return os.str();
}

// Result of a single-polynomial length query.
struct LengthRecord {
    std::uint64_t p = 0, s = 0, modulus = 0, f2 = 0, f1 = 0, f0 = 0;
    Length length;
    bool trivial = false;
};

inline json to_json(const LengthRecord& r) {
    json j;
    j["p"] = r.p;
    j["s"] = r.s;
    j["modulus"] = r.modulus;
    j["f2"] = r.f2;
    j["f1"] = r.f1;
    j["f0"] = r.f0;
    j["length"] = length_to_json(r.length);
    j["trivial"] = r.trivial;
    return j;
}

inline std::string_view f2_selection_name(F2Selection sel) {
    return sel == F2Selection::kAll ? "all" : "representatives";
}

inline F2Selection f2_selection_from(std::string_view name) {
    if (name == "all") return F2Selection::kAll;
    if (name == "representatives") return F2Selection::kRepresentatives;
    throw InvalidInput("bad f2 selection mode: " + std::string(name));
}

inline json to_json(const VerifyReport& report) {
    json points = json::array();
    for (const auto& pt : report.points) {
        json j;
        j["p"] = pt.point.p;
        j["s"] = pt.point.s;
        j["mode"] = std::string(f2_selection_name(pt.point.mode));
        j["modulus"] = pt.modulus;
        j["skipped"] = pt.skipped;
        if (pt.skipped) j["skip_reason"] = pt.skip_reason;
        j["compared"] = pt.compared;
        json ms = json::array();
        for (const auto& m : pt.mismatches) {
            json mj;
            mj["f2"] = m.f2;
            mj["opt_formula"] = length_to_json(m.opt_formula);
            mj["opt_brute"] = length_to_json(m.opt_brute);
            mj["witness"] = m.witness
                ? json{{"f1", m.witness->f1}, {"f0", m.witness->f0}}
                : json(nullptr);
            ms.push_back(mj);
        }
        j["mismatches"] = ms;
        j["elapsed_ms"] = pt.elapsed_ms;
        points.push_back(j);
    }
    json checks = json::array();
    for (const auto& c : report.checks) {
        json j;
        j["name"] = c.name;
        j["checked"] = c.checked;
        j["failures"] = c.failures;
        j["failure_samples"] = c.failure_samples;
        j["skipped"] = c.skipped;
        if (c.skipped) j["skip_reason"] = c.skip_reason;
        j["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(j);
    }
    return json{{"points", points},
                {"checks", checks},
                {"status", report.pass() ? "PASS" : "FAIL"}};
}

// Write via a temp file in the same directory plus rename, so readers never
// observe a half-written report.
inline void write_file_atomic(const std::filesystem::path& path,
                              std::string_view content) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp =
        dir / (path.filename().string() + ".tmp" +
               std::to_string(static_cast<unsigned long>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace buchi
