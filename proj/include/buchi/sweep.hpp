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

// Grid driver: one record per f2 class with both the brute-force and the
// closed-form value, in deterministic ascending-f2 order.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "buchi/arith.hpp"
#include "buchi/formulas.hpp"
#include "buchi/parallel.hpp"
#include "buchi/search.hpp"

namespace buchi {

enum class F2Selection { kAll, kRepresentatives };

enum class G2Character { kSquare, kNonSquare, kZero };

inline G2Character g2_character_of(const Residue& f2) {
    const UnitPart u = unit_part(f2);
    if (u.ord.is_infinite()) return G2Character::kZero;
    return qr_mod_p(u.unit_mod_p, f2.mod.p()) ? G2Character::kSquare
                                              : G2Character::kNonSquare;
}

struct SweepRecord {
    std::uint64_t p, s, modulus, f2;
    ExtOrder t2;
    G2Character g2_character;
    Length opt_formula;
    Length opt_brute;
    Length ml;  // brute-force maximal length
    std::optional<Witness> witness;
    bool trivial_only;
    std::uint64_t elapsed_ms;

    SweepRecord() : p(0), s(0), modulus(0), f2(0), t2(ExtOrder::finite(0)),
                    g2_character(G2Character::kZero), trivial_only(false), elapsed_ms(0) {}
};

// All f2 classes, or one representative per (order, character) shape:
// f2 = p^t * g with g in {1, least non-residue} for each t < s, plus f2 = 0.
inline std::vector<std::uint64_t> f2_selection(const PrimePowerModulus& mod,
                                               F2Selection sel) {
    std::vector<std::uint64_t> out;
    if (sel == F2Selection::kAll) {
        out.resize(mod.m());
        for (std::uint64_t i = 0; i < mod.m(); ++i) out[i] = i;
        return out;
    }
    out.push_back(0);
    const std::uint64_t n = least_nonresidue(mod.p());
    std::uint64_t pt = 1;
    for (std::uint64_t t = 0; t < mod.s(); ++t) {
        out.push_back(pt);
        out.push_back(pt * n);
        pt *= mod.p();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One record per selected f2 class. Workers share only the immutable tables;
// records land at their f2's position, so the output is deterministic for
// any jobs count. elapsed_ms stays 0 unless timing is requested.
inline std::vector<SweepRecord> sweep(const PrimePowerModulus& mod, F2Selection sel,
                                      unsigned jobs = 1, bool timing = false,
                                      std::uint64_t cap = kDefaultModulusCap) {
    const SquareTable tbl(mod, cap);
    const LinearSquareIndex idx(mod, cap);
    const std::vector<std::uint64_t> chosen = f2_selection(mod, sel);
    std::vector<SweepRecord> records(chosen.size());
    chunked_apply(chosen.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const auto start = std::chrono::steady_clock::now();
            const Residue f2{chosen[i], mod};
            const SearchOutcome brute = ml_opt(f2, tbl, idx);
            SweepRecord& r = records[i];
            r.p = mod.p();
            r.s = mod.s();
            r.modulus = mod.m();
            r.f2 = f2.value;
            r.t2 = padic_ord(f2);
            r.g2_character = g2_character_of(f2);
            r.opt_formula = formula_opt(mod, f2, cap);
            r.opt_brute = brute.length.successor();
            r.ml = brute.length;
            if (brute.witness)
                r.witness = Witness{brute.witness->f1, brute.witness->f0};
            r.trivial_only = brute.trivial_only;
            if (timing) {
                const auto end = std::chrono::steady_clock::now();
                r.elapsed_ms = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
                        .count());
            }
        }
    });
    return records;
}

}  // namespace buchi
