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

// Brute-force semantics: the run length of squares produced by a quadratic
// polynomial, with infinity detected through periodicity, and maximization
// over the free coefficients restricted to non-trivial polynomials.

#pragma once

#include <cstdint>
#include <optional>

#include "buchi/arith.hpp"
#include "buchi/errors.hpp"
#include "buchi/length.hpp"
#include "buchi/parallel.hpp"
#include "buchi/poly.hpp"

namespace buchi {

struct Witness {
    std::uint64_t f1, f0;

    friend bool operator==(Witness a, Witness b) { return a.f1 == b.f1 && a.f0 == b.f0; }
};

struct SearchOutcome {
    Length length;
    std::optional<QuadPoly> witness;  // attaining polynomial, lexicographically least
    bool trivial_only;                // true iff every candidate was trivial
};

// Largest N such that f(1), ..., f(N) are all squares mod m; Infinite iff
// the first m values are all squares (f is periodic in x with period m, so
// one period decides every larger window).
inline Length buchi_length(const QuadPoly& f, const SquareTable& tbl) {
    if (f.mod != tbl.mod())
        throw ModulusMismatch("polynomial and square table moduli differ");
    const std::uint64_t m = f.mod.m();
    // f(x+1) - f(x) = 2*f2*x + f2 + f1; the second difference is constant.
    std::uint64_t v = (f.f2 + f.f1 + f.f0) % m;  // f(1)
    std::uint64_t d = (3 * f.f2 + f.f1) % m;     // f(2) - f(1)
    const std::uint64_t dd = 2 * f.f2 % m;
    for (std::uint64_t x = 1; x <= m; ++x) {
        if (!tbl.contains(v)) return Length::finite(x - 1);
        v += d;
        if (v >= m) v -= m;
        d += dd;
        if (d >= m) d -= m;
    }
    return Length::infinite();
}

// Maximal length over f0 of non-trivial polynomials (f2, f1, f0); length 0
// with trivial_only set if every f0 yields a trivial polynomial. The witness
// is the attaining polynomial with smallest f0.
inline SearchOutcome ml_f1(const Residue& f2, const Residue& f1, const SquareTable& tbl,
                           const LinearSquareIndex& idx) {
    if (f2.mod != f1.mod || f2.mod != tbl.mod() || f2.mod != idx.mod())
        throw ModulusMismatch("ml_f1 arguments built for different moduli");
    const PrimePowerModulus& mod = f2.mod;
    const std::uint64_t m = mod.m();
    bool any = false;
    Length best = Length::finite(0);
    std::uint64_t best_f0 = 0;
    for (std::uint64_t f0 = 0; f0 < m; ++f0) {
        QuadPoly f(mod, static_cast<std::int64_t>(f2.value),
                   static_cast<std::int64_t>(f1.value), static_cast<std::int64_t>(f0));
        if (is_square_poly(f, idx)) continue;
        const Length len = buchi_length(f, tbl);
        if (!any || best < len) {
            any = true;
            best = len;
            best_f0 = f0;
            if (best.is_infinite()) break;  // later f0 can at most tie
        }
    }
    if (!any) return {Length::finite(0), std::nullopt, true};
    return {best,
            QuadPoly(mod, static_cast<std::int64_t>(f2.value),
                     static_cast<std::int64_t>(f1.value), static_cast<std::int64_t>(best_f0)),
            false};
}

// Maximal length over f1 (and f0) of non-trivial polynomials with the given
// f2. The witness tie-break is the smallest (f1, f0) lexicographically; with
// jobs > 1 the f1 range is partitioned into contiguous chunks and merged in
// order, so the outcome is independent of scheduling.
inline SearchOutcome ml_opt(const Residue& f2, const SquareTable& tbl,
                            const LinearSquareIndex& idx, unsigned jobs = 1) {
    if (f2.mod != tbl.mod() || f2.mod != idx.mod())
        throw ModulusMismatch("ml_opt arguments built for different moduli");
    const PrimePowerModulus& mod = f2.mod;
    const std::uint64_t m = mod.m();

    struct Best {
        bool any = false;
        Length len;
        std::uint64_t f1 = 0, f0 = 0;
    };
    auto run = [&](std::uint64_t lo, std::uint64_t hi) {
        Best b;
        for (std::uint64_t f1 = lo; f1 < hi; ++f1) {
            const SearchOutcome so =
                ml_f1(f2, Residue{f1, mod}, tbl, idx);
            if (so.trivial_only) continue;
            if (!b.any || b.len < so.length) {
                b.any = true;
                b.len = so.length;
                b.f1 = f1;
                b.f0 = so.witness->f0;
                if (b.len.is_infinite()) break;
            }
        }
        return b;
    };
    auto fold = [](Best acc, Best chunk) {
        if (!chunk.any) return acc;
        if (!acc.any || acc.len < chunk.len) return chunk;
        return acc;
    };
    const Best total = chunked_reduce(m, jobs, Best{}, run, fold);
    if (!total.any) return {Length::finite(0), std::nullopt, true};
    return {total.len,
            QuadPoly(mod, static_cast<std::int64_t>(f2.value),
                     static_cast<std::int64_t>(total.f1), static_cast<std::int64_t>(total.f0)),
            false};
}

}  // namespace buchi
