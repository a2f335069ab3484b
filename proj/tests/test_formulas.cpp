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

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "buchi/formulas.hpp"

using namespace buchi;

TEST_CASE("base constants", "[formulas]") {
    // Values fixed by independent exhaustive enumeration at modulus p.
    struct Row {
        std::uint64_t p;
        Length lin, unit, nonsq;
    };
    const Row rows[] = {
        {3, Length::finite(3), Length::finite(3), Length::infinite()},
        {5, Length::finite(4), Length::finite(4), Length::finite(5)},
        {7, Length::finite(4), Length::finite(5), Length::finite(6)},
        {11, Length::finite(4), Length::finite(7), Length::finite(7)},
        {13, Length::finite(5), Length::finite(6), Length::finite(7)},
    };
    for (const Row& r : rows) {
        const BaseConstants& c = base_constants(r.p);
        CHECK(c.opt_linear == r.lin);
        CHECK(c.opt_unit_square == r.unit);
        CHECK(c.opt_nonsquare == r.nonsq);
        CHECK(c.opt_linear <= Length::finite((r.p + 3) / 2));
    }
    CHECK(base_constants(3).nonresidue == 2);
    CHECK(base_constants(7).nonresidue == 3);
}

TEST_CASE("base constants are safe under concurrent first access", "[formulas]") {
    std::vector<std::thread> threads;
    std::vector<Length> seen(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { seen[i] = base_constants(17).opt_linear; });
    for (auto& t : threads) t.join();
    for (int i = 1; i < 8; ++i) CHECK(seen[i] == seen[0]);
    CHECK(seen[0] <= Length::finite(10));  // (17+3)/2
}

TEST_CASE("closed form on the pinned examples", "[formulas]") {
    const PrimePowerModulus m625(5, 4);
    CHECK(formula_opt(m625, m625.residue(25)) == Length::finite(5));

    const PrimePowerModulus m27(3, 3);
    CHECK(formula_opt(m27, m27.residue(2)) == Length::finite(5));
    CHECK(formula_opt(m27, m27.residue(18)) == Length::infinite());

    const PrimePowerModulus m49(7, 2);
    CHECK(formula_opt(m49, m49.residue(0)) == base_constants(7).opt_linear);

    const PrimePowerModulus m3(3, 1);
    CHECK(formula_opt(m3, m3.residue(2)) == Length::infinite());

    const PrimePowerModulus m81(3, 4);
    CHECK(formula_opt(m81, m81.residue(9)) == Length::finite(3));

    CHECK_THROWS_AS(formula_opt(m27, m3.residue(2)), ModulusMismatch);
}

TEST_CASE("closed form equals brute force on small grids", "[formulas]") {
    for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 1}, {3, 2}, {3, 3},
                        {5, 1}, {5, 2}, {7, 1}}) {
        const PrimePowerModulus mod(p, s);
        const SquareTable tbl(mod);
        const LinearSquareIndex idx(mod);
        for (std::uint64_t f2 = 0; f2 < mod.m(); ++f2) {
            const Residue r = mod.residue(static_cast<std::int64_t>(f2));
            REQUIRE(formula_opt(mod, r) == ml_opt(r, tbl, idx).length.successor());
        }
    }
}

TEST_CASE("special-case closed form", "[formulas]") {
    CHECK(corollary_opt(5, 4, 2) == Length::finite(5));
    CHECK(corollary_opt(3, 4, 2) == Length::finite(3));
    CHECK(corollary_opt(3, 6, 2) == Length::finite(9));

    CHECK_THROWS_AS(corollary_opt(7, 2, 0), InvalidInput);   // t2 must be positive
    CHECK_THROWS_AS(corollary_opt(5, 4, 3), InvalidInput);   // t2 must be even
    CHECK_THROWS_AS(corollary_opt(5, 3, 2), InvalidInput);   // s must be even
    CHECK_THROWS_AS(corollary_opt(5, 4, 4), InvalidInput);   // t2 < s
    CHECK_THROWS_AS(corollary_opt(4, 4, 2), InvalidInput);   // p must be an odd prime
}

TEST_CASE("special case agrees with the general engine", "[formulas]") {
    for (auto [p, s, t2] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{3, 4, 2},
                            {5, 4, 2}, {3, 6, 2}, {3, 6, 4}}) {
        const PrimePowerModulus mod(p, s);
        const std::uint64_t sub_m = detail::ipow(p, s - t2);
        const std::uint64_t pt2 = detail::ipow(p, t2);
        for (std::uint64_t g2 = 1; g2 < sub_m; ++g2) {
            if (g2 % p == 0 || !qr_mod_p(g2 % p, p)) continue;
            REQUIRE(corollary_opt(p, s, t2) ==
                    formula_opt(mod, mod.residue(static_cast<std::int64_t>(pt2 * g2))));
        }
    }
}

TEST_CASE("formula value depends only on order and character", "[formulas]") {
    for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 4}, {5, 4}}) {
        const PrimePowerModulus mod(p, s);
        // order -> character -> value
        std::map<std::pair<std::uint64_t, bool>, Length> seen;
        for (std::uint64_t f2 = 1; f2 < mod.m(); ++f2) {
            const Residue r = mod.residue(static_cast<std::int64_t>(f2));
            const UnitPart u = unit_part(r);
            const auto key = std::make_pair(u.ord.value(), qr_mod_p(u.unit_mod_p, p));
            const Length v = formula_opt(mod, r);
            auto [it, inserted] = seen.try_emplace(key, v);
            REQUIRE(it->second == v);
        }
    }
}

TEST_CASE("finiteness split", "[formulas]") {
    // p >= 5: every value finite
    for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{5, 1}, {5, 2}, {7, 2},
                        {11, 1}, {13, 1}}) {
        const PrimePowerModulus mod(p, s);
        for (std::uint64_t f2 = 0; f2 < mod.m(); ++f2)
            REQUIRE(formula_opt(mod, mod.residue(static_cast<std::int64_t>(f2))).is_finite());
    }
    // p = 3: infinite exactly when the descent lands on (s' = 1, non-square unit)
    for (std::uint64_t s = 1; s <= 4; ++s) {
        const PrimePowerModulus mod(3, s);
        for (std::uint64_t f2 = 0; f2 < mod.m(); ++f2) {
            const Residue r = mod.residue(static_cast<std::int64_t>(f2));
            const UnitPart u = unit_part(r);
            const bool predicted = u.ord.is_even_finite() && s - u.ord.value() == 1 &&
                                   u.unit_mod_p == 2;
            REQUIRE(formula_opt(mod, r).is_infinite() == predicted);
        }
    }
}

TEST_CASE("unit-square towers multiply by p per two exponent steps", "[formulas]") {
    // opt(p^(2r), unit square) = p^r and opt(p^(2r+1), 1) = opt(p, 1) * p^r
    const PrimePowerModulus m9(3, 2);
    CHECK(formula_opt(m9, m9.residue(1)) == Length::finite(3));
    const PrimePowerModulus m27(3, 3);
    CHECK(formula_opt(m27, m27.residue(1)) == base_constants(3).opt_unit_square.times(3));
    const PrimePowerModulus m25(5, 2);
    CHECK(formula_opt(m25, m25.residue(1)) == Length::finite(5));
    const PrimePowerModulus m125(5, 3);
    CHECK(formula_opt(m125, m125.residue(1)) == base_constants(5).opt_unit_square.times(5));
    const PrimePowerModulus m49(7, 2);
    CHECK(formula_opt(m49, m49.residue(1)) == Length::finite(7));
}
