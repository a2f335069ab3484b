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

// Cross-verification harness: formula vs. brute force over (p, s) grids,
// plus the property suite of structural facts the search results must obey.
// Reports are deterministic for a fixed grid (ordered merges, no wall-clock
// content unless timing is requested).

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "buchi/arith.hpp"
#include "buchi/formulas.hpp"
#include "buchi/parallel.hpp"
#include "buchi/poly.hpp"
#include "buchi/search.hpp"
#include "buchi/sweep.hpp"

namespace buchi {

struct GridPoint {
    std::uint64_t p = 3, s = 1;
    F2Selection mode = F2Selection::kAll;
};

struct GridSpec {
    std::vector<GridPoint> points;
    unsigned jobs = 1;
    std::uint64_t cap = kDefaultModulusCap;
    bool timing = false;
    std::set<std::string> disabled_checks;

    bool enabled(const std::string& name) const {
        return disabled_checks.count(name) == 0;
    }
};

// Exhaustive f2 up to m = 125, representatives above; exercises every branch
// of the case split, both parities of the order and both unit characters.
inline GridSpec default_grid() {
    GridSpec g;
    for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 1}, {3, 2}, {3, 3},
                        {3, 4}, {3, 5}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {7, 1}, {7, 2},
                        {11, 1}, {13, 1}}) {
        const std::uint64_t m = detail::ipow(p, s);
        g.points.push_back({p, s, m <= 125 ? F2Selection::kAll : F2Selection::kRepresentatives});
    }
    return g;
}

struct Mismatch {
    std::uint64_t f2 = 0;
    Length opt_formula;
    Length opt_brute;
    std::optional<Witness> witness;
};

struct PointReport {
    GridPoint point;
    std::uint64_t modulus = 0;
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t compared = 0;
    std::vector<Mismatch> mismatches;
    std::uint64_t elapsed_ms = 0;
};

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_samples;  // capped
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t elapsed_ms = 0;

    void fail(const std::string& what) {
        ++failures;
        if (failure_samples.size() < 8) failure_samples.push_back(what);
    }
};

struct VerifyReport {
    std::vector<PointReport> points;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& pt : points)
            if (!pt.mismatches.empty()) return false;
        for (const auto& c : checks)
            if (c.failures != 0) return false;
        return true;
    }

    std::uint64_t total_compared() const {
        std::uint64_t n = 0;
        for (const auto& pt : points) n += pt.compared;
        return n;
    }
    std::uint64_t total_mismatches() const {
        std::uint64_t n = 0;
        for (const auto& pt : points) n += pt.mismatches.size();
        return n;
    }
};

using FormulaFn = std::function<Length(const PrimePowerModulus&, const Residue&)>;

namespace detail {

// Direct evaluation over an explicit window; no finite differences, so it
// re-checks both the arithmetic and the one-period infinity rule.
inline Length window_length(const QuadPoly& f, const SquareTable& tbl,
                            std::uint64_t horizon) {
    for (std::uint64_t x = 1; x <= horizon; ++x)
        if (!tbl.contains(eval(f, static_cast<std::int64_t>(x)).value))
            return Length::finite(x - 1);
    return Length::finite(horizon);
}

struct Tables {
    PrimePowerModulus mod;
    SquareTable tbl;
    LinearSquareIndex idx;

    Tables(std::uint64_t p, std::uint64_t s, std::uint64_t cap)
        : mod(p, s, cap), tbl(mod, cap), idx(mod, cap) {}
};

class Stopwatch {
 public:
    explicit Stopwatch(bool enabled) : enabled_(enabled) {
        if (enabled_) start_ = std::chrono::steady_clock::now();
    }
    std::uint64_t elapsed_ms() const {
        if (!enabled_) return 0;
        const auto end = std::chrono::steady_clock::now();
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start_).count());
    }

 private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

template <typename Body>
void run_check(std::vector<CheckResult>& out, const GridSpec& grid,
               const std::string& name, Body&& body) {
    if (!grid.enabled(name)) return;
    CheckResult r;
    r.name = name;
    const Stopwatch sw(grid.timing);
    try {
        body(r);
    } catch (const CapExceeded& e) {
        r.skipped = true;
        r.skip_reason = e.what();
    }
    r.elapsed_ms = sw.elapsed_ms();
    out.push_back(std::move(r));
}

inline bool predicted_infinite(const PrimePowerModulus& mod, const Residue& f2) {
    const UnitPart u = unit_part(f2);
    if (!u.ord.is_even_finite()) return false;
    return mod.p() == 3 && mod.s() - u.ord.value() == 1 && u.unit_mod_p == 2;
}

}  // namespace detail

// Compares the closed form against exhaustive search on every selected f2 of
// every grid point, and checks that infinite brute-force answers appear
// exactly where the case split predicts them. Points beyond the cap are
// reported as skipped, never as passing.
inline VerifyReport verify_main(const GridSpec& grid, const FormulaFn& formula = {}) {
    const FormulaFn fn = formula
        ? formula
        : FormulaFn([cap = grid.cap](const PrimePowerModulus& mod, const Residue& f2) {
              return formula_opt(mod, f2, cap);
          });
    VerifyReport report;
    CheckResult inf_check;
    inf_check.name = "infinite_characterization";
    for (const GridPoint& pt : grid.points) {
        PointReport pr;
        pr.point = pt;
        const detail::Stopwatch sw(grid.timing);
        try {
            const detail::Tables t(pt.p, pt.s, grid.cap);
            pr.modulus = t.mod.m();
            const std::vector<std::uint64_t> chosen = f2_selection(t.mod, pt.mode);
            std::vector<Length> brute(chosen.size()), form(chosen.size());
            std::vector<std::optional<Witness>> wit(chosen.size());
            chunked_apply(chosen.size(), grid.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t i = lo; i < hi; ++i) {
                    const Residue f2{chosen[i], t.mod};
                    const SearchOutcome so = ml_opt(f2, t.tbl, t.idx);
                    brute[i] = so.length.successor();
                    form[i] = fn(t.mod, f2);
                    if (so.witness) wit[i] = Witness{so.witness->f1, so.witness->f0};
                }
            });
            pr.compared = chosen.size();
            for (std::uint64_t i = 0; i < chosen.size(); ++i) {
                if (form[i] != brute[i])
                    pr.mismatches.push_back({chosen[i], form[i], brute[i], wit[i]});
                ++inf_check.checked;
                const Residue f2{chosen[i], t.mod};
                if (brute[i].is_infinite() != detail::predicted_infinite(t.mod, f2)) {
                    std::ostringstream os;
                    os << "m=" << t.mod.m() << " f2=" << chosen[i] << " brute="
                       << brute[i] << " predicted_infinite="
                       << (detail::predicted_infinite(t.mod, f2) ? "yes" : "no");
                    inf_check.fail(os.str());
                }
            }
        } catch (const CapExceeded& e) {
            pr.skipped = true;
            pr.skip_reason = e.what();
        }
        pr.elapsed_ms = sw.elapsed_ms();
        report.points.push_back(std::move(pr));
    }
    report.checks.push_back(std::move(inf_check));
    return report;
}

namespace detail {

inline void check_table_equivalence(const GridSpec& grid, std::vector<CheckResult>& out) {
    run_check(out, grid, "square_residue_table_equivalence", [&](CheckResult& r) {
        for (const GridPoint& pt : grid.points) {
            Tables t(pt.p, pt.s, grid.cap);
            for (std::uint64_t y = 0; y < t.mod.m(); ++y) {
                ++r.checked;
                if (is_square_residue(Residue{y, t.mod}) != t.tbl.contains(y))
                    r.fail("m=" + std::to_string(t.mod.m()) + " y=" + std::to_string(y));
            }
        }
    });
}

inline void check_window_equivalence(const GridSpec& grid, std::vector<CheckResult>& out) {
    run_check(out, grid, "infinite_detection_window", [&](CheckResult& r) {
        const Tables t(3, 2, grid.cap);
        const std::uint64_t m = t.mod.m();
        for (std::uint64_t f2 = 0; f2 < m; ++f2)
            for (std::uint64_t f1 = 0; f1 < m; ++f1)
                for (std::uint64_t f0 = 0; f0 < m; ++f0) {
                    ++r.checked;
                    const QuadPoly f(t.mod, static_cast<std::int64_t>(f2),
                                     static_cast<std::int64_t>(f1),
                                     static_cast<std::int64_t>(f0));
                    const Length lib = buchi_length(f, t.tbl);
                    const Length win = window_length(f, t.tbl, 10 * m);
                    const bool agree = lib.is_infinite()
                        ? win == Length::finite(10 * m)
                        : win == lib;
                    if (!agree) {
                        std::ostringstream os;
                        os << f << " lib=" << lib << " window=" << win;
                        r.fail(os.str());
                    }
                }
    });
}

inline void check_dominant_nonsquare_constant(const GridSpec& grid,
                                              std::vector<CheckResult>& out) {
    run_check(out, grid, "dominant_nonsquare_constant", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {3, 3}, {5, 2}}) {
            const Tables t(p, s, grid.cap);
            const std::uint64_t m = t.mod.m();
            for (std::uint64_t f2 = 0; f2 < m; ++f2)
                for (std::uint64_t f1 = 0; f1 < m; ++f1)
                    for (std::uint64_t f0 = 0; f0 < m; ++f0) {
                        const ExtOrder o0 = padic_ord(Residue{f0, t.mod});
                        const ExtOrder o12 = std::min(padic_ord(Residue{f1, t.mod}),
                                                      padic_ord(Residue{f2, t.mod}));
                        if (!(o0 < o12) || is_square_residue(Residue{f0, t.mod})) continue;
                        ++r.checked;
                        const QuadPoly f(t.mod, static_cast<std::int64_t>(f2),
                                         static_cast<std::int64_t>(f1),
                                         static_cast<std::int64_t>(f0));
                        if (buchi_length(f, t.tbl) != Length::finite(0)) {
                            std::ostringstream os;
                            os << f << " has nonzero length";
                            r.fail(os.str());
                        }
                    }
        }
    });
}

inline void check_odd_min_order_cap(const GridSpec& grid, std::vector<CheckResult>& out) {
    run_check(out, grid, "odd_min_order_length_cap", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 3}, {5, 2}}) {
            const Tables t(p, s, grid.cap);
            const std::uint64_t m = t.mod.m();
            for (std::uint64_t f2 = 0; f2 < m; ++f2)
                for (std::uint64_t f1 = 0; f1 < m; ++f1) {
                    const ExtOrder o = std::min(padic_ord(Residue{f1, t.mod}),
                                                padic_ord(Residue{f2, t.mod}));
                    if (!o.is_finite() || o.value() % 2 == 0) continue;
                    ++r.checked;
                    const SearchOutcome so =
                        ml_f1(Residue{f2, t.mod}, Residue{f1, t.mod}, t.tbl, t.idx);
                    if (so.length > Length::finite(2)) {
                        std::ostringstream os;
                        os << "m=" << m << " f2=" << f2 << " f1=" << f1 << " ml="
                           << so.length;
                        r.fail(os.str());
                    }
                }
        }
    });
}

inline void check_linear_odd_order_cap(const GridSpec& grid,
                                       std::vector<CheckResult>& out) {
    run_check(out, grid, "linear_odd_order_length_cap", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 3}, {5, 2}, {5, 3}}) {
            const Tables t(p, s, grid.cap);
            const std::uint64_t m = t.mod.m();
            for (std::uint64_t f1 = 0; f1 < m; ++f1) {
                const ExtOrder o = padic_ord(Residue{f1, t.mod});
                if (!o.is_finite() || o.value() % 2 == 0) continue;
                ++r.checked;
                const SearchOutcome so =
                    ml_f1(Residue{0, t.mod}, Residue{f1, t.mod}, t.tbl, t.idx);
                if (so.length > Length::finite(1)) {
                    std::ostringstream os;
                    os << "m=" << m << " f1=" << f1 << " ml=" << so.length;
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_short_witness_lower_bounds(const GridSpec& grid,
                                             std::vector<CheckResult>& out) {
    run_check(out, grid, "short_witness_lower_bounds", [&](CheckResult& r) {
        for (const GridPoint& pt : grid.points) {
            const Tables t(pt.p, pt.s, grid.cap);
            // The linear family always admits a length >= 1 sequence.
            ++r.checked;
            const SearchOutcome zero = ml_opt(Residue{0, t.mod}, t.tbl, t.idx);
            if (zero.length < Length::finite(1))
                r.fail("m=" + std::to_string(t.mod.m()) + " ml(m, 0) < 1");
            // For f2 of positive or infinite order, f1 = 1 - 3*f2 and
            // f0 = 2*f2 - 1 give f(1) = 0 and f(2) = 1, and the polynomial
            // is not a square, so ml(m, f2) >= 2.
            for (std::uint64_t f2 : f2_selection(t.mod, pt.mode)) {
                if (padic_ord(Residue{f2, t.mod}) == ExtOrder::finite(0)) continue;
                ++r.checked;
                const auto sf2 = static_cast<std::int64_t>(f2);
                const QuadPoly f(t.mod, sf2, 1 - 3 * sf2, 2 * sf2 - 1);
                const bool nontrivial = !is_square_poly(f, t.idx);
                const Length len = buchi_length(f, t.tbl);
                if (!nontrivial || len < Length::finite(2)) {
                    std::ostringstream os;
                    os << f << " nontrivial=" << nontrivial << " len=" << len;
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_unit_square_scaling(const GridSpec& grid,
                                      std::vector<CheckResult>& out) {
    run_check(out, grid, "unit_square_scaling", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 2}}) {
            const Tables t(p, s, grid.cap);
            const std::uint64_t m = t.mod.m();
            std::vector<Length> len(m);
            for (std::uint64_t f2 = 0; f2 < m; ++f2)
                len[f2] = ml_opt(Residue{f2, t.mod}, t.tbl, t.idx).length;
            for (std::uint64_t f2 = 0; f2 < m; ++f2)
                for (std::uint64_t c = 1; c < m; ++c) {
                    if (c % p == 0) continue;
                    ++r.checked;
                    const std::uint64_t scaled = c * c % m * f2 % m;
                    if (len[scaled] != len[f2]) {
                        std::ostringstream os;
                        os << "m=" << m << " f2=" << f2 << " c=" << c << " ml "
                           << len[f2] << " vs " << len[scaled];
                        r.fail(os.str());
                    }
                }
        }
    });
}

inline void check_unit_linear_reduction(const GridSpec& grid,
                                        std::vector<CheckResult>& out) {
    run_check(out, grid, "unit_linear_reduction", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {3, 3}, {5, 2}}) {
            const Tables big(p, s, grid.cap);
            const Tables base(p, 1, grid.cap);
            const std::uint64_t m = big.mod.m();
            for (std::uint64_t f1 = 0; f1 < m; ++f1) {
                if (f1 % p == 0) continue;  // f1 must be a unit
                for (std::uint64_t f2 = 0; f2 < m; ++f2) {
                    if (f2 % p != 0) continue;  // f2 must not be a unit
                    ++r.checked;
                    const Length lhs =
                        ml_f1(Residue{f2, big.mod}, Residue{f1, big.mod}, big.tbl, big.idx)
                            .length;
                    const Length rhs =
                        ml_f1(Residue{0, base.mod}, Residue{f1 % p, base.mod}, base.tbl,
                              base.idx)
                            .length;
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "m=" << m << " f2=" << f2 << " f1=" << f1 << " ml "
                           << lhs << " vs " << rhs << " at modulus p";
                        r.fail(os.str());
                    }
                }
            }
        }
    });
}

inline void check_even_order_descent(const GridSpec& grid,
                                     std::vector<CheckResult>& out) {
    run_check(out, grid, "even_order_descent", [&](CheckResult& r) {
        for (auto [p, s] : {std::pair<std::uint64_t, std::uint64_t>{3, 3}, {5, 2}}) {
            const Tables t(p, s, grid.cap);
            const std::uint64_t m = t.mod.m();
            for (std::uint64_t f2 = 0; f2 < m; ++f2) {
                const ExtOrder t2 = padic_ord(Residue{f2, t.mod});
                if (!t2.is_even_finite()) continue;
                for (std::uint64_t f1 = 0; f1 < m; ++f1) {
                    if (padic_ord(Residue{f1, t.mod}) < t2) continue;
                    ++r.checked;
                    const std::uint64_t pt2 = ipow(p, t2.value());
                    const Tables sub(p, s - t2.value(), grid.cap);
                    const std::uint64_t sm = sub.mod.m();
                    const Length lhs =
                        ml_f1(Residue{f2, t.mod}, Residue{f1, t.mod}, t.tbl, t.idx)
                            .length.successor();
                    const Length rhs = ml_f1(Residue{(f2 / pt2) % sm, sub.mod},
                                             Residue{(f1 / pt2) % sm, sub.mod}, sub.tbl,
                                             sub.idx)
                                           .length.successor();
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "m=" << m << " f2=" << f2 << " f1=" << f1 << " opt "
                           << lhs << " vs " << rhs;
                        r.fail(os.str());
                    }
                }
            }
        }
    });
}

inline void check_unit_square_below_p(const GridSpec& grid,
                                      std::vector<CheckResult>& out) {
    run_check(out, grid, "unit_square_length_below_p", [&](CheckResult& r) {
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            const Tables t(p, 1, grid.cap);
            for (std::uint64_t f2 = 1; f2 < p; ++f2) {
                if (!qr_mod_p(f2, p)) continue;
                ++r.checked;
                const Length len = ml_opt(Residue{f2, t.mod}, t.tbl, t.idx).length;
                if (!(len < Length::finite(p))) {
                    std::ostringstream os;
                    os << "p=" << p << " f2=" << f2 << " ml=" << len;
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_nonresidue_independence(const GridSpec& grid,
                                          std::vector<CheckResult>& out) {
    run_check(out, grid, "nonresidue_choice_independence", [&](CheckResult& r) {
        for (std::uint64_t p : {5ull, 7ull, 11ull}) {
            const Tables t(p, 1, grid.cap);
            std::optional<Length> first;
            for (std::uint64_t n = 2; n < p; ++n) {
                if (qr_mod_p(n, p)) continue;
                const Length len = ml_opt(Residue{n, t.mod}, t.tbl, t.idx).length;
                if (!first) {
                    first = len;
                    continue;
                }
                ++r.checked;
                if (len != *first) {
                    std::ostringstream os;
                    os << "p=" << p << " n=" << n << " ml=" << len << " expected "
                       << *first;
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_linear_opt_bound(const GridSpec& grid, std::vector<CheckResult>& out) {
    run_check(out, grid, "linear_opt_bound", [&](CheckResult& r) {
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            const Tables t(p, 1, grid.cap);
            ++r.checked;
            const Length opt =
                ml_opt(Residue{0, t.mod}, t.tbl, t.idx).length.successor();
            if (!(opt <= Length::finite((p + 3) / 2))) {
                std::ostringstream os;
                os << "p=" << p << " opt(p, 0)=" << opt << " above (p+3)/2";
                r.fail(os.str());
            }
        }
    });
}

inline void check_oracle_equivalence(const GridSpec& grid,
                                     std::vector<CheckResult>& out) {
    run_check(out, grid, "square_poly_oracle_equivalence", [&](CheckResult& r) {
        {
            const Tables t(3, 2, grid.cap);
            const SquarePolyOracle oracle(t.mod, 4);
            const std::uint64_t m = t.mod.m();
            for (std::uint64_t f2 = 0; f2 < m; ++f2)
                for (std::uint64_t f1 = 0; f1 < m; ++f1)
                    for (std::uint64_t f0 = 0; f0 < m; ++f0) {
                        ++r.checked;
                        const QuadPoly f(t.mod, static_cast<std::int64_t>(f2),
                                         static_cast<std::int64_t>(f1),
                                         static_cast<std::int64_t>(f0));
                        if (is_square_poly(f, t.idx) != oracle.contains(f)) {
                            std::ostringstream os;
                            os << f << " decision/oracle disagree";
                            r.fail(os.str());
                        }
                    }
        }
        {
            const Tables t(3, 3, grid.cap);
            const SquarePolyOracle oracle(t.mod, 4);
            const std::uint64_t m = t.mod.m();
            std::mt19937 gen(0x5eedu);
            for (int i = 0; i < 2000; ++i) {
                ++r.checked;
                const QuadPoly f(t.mod, static_cast<std::int64_t>(gen() % m),
                                 static_cast<std::int64_t>(gen() % m),
                                 static_cast<std::int64_t>(gen() % m));
                if (is_square_poly(f, t.idx) != oracle.contains(f)) {
                    std::ostringstream os;
                    os << f << " decision/oracle disagree";
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_formula_character_dependence(const GridSpec& grid,
                                               std::vector<CheckResult>& out) {
    run_check(out, grid, "formula_character_dependence", [&](CheckResult& r) {
        for (const GridPoint& pt : grid.points) {
            const PrimePowerModulus mod(pt.p, pt.s, grid.cap);
            // Key: (order, character); zero order stands in for infinity.
            std::map<std::pair<std::uint64_t, int>, Length> seen;
            for (std::uint64_t f2 = 0; f2 < mod.m(); ++f2) {
                ++r.checked;
                const Residue res{f2, mod};
                const UnitPart u = unit_part(res);
                const std::pair<std::uint64_t, int> key{
                    u.ord.is_infinite() ? mod.s() : u.ord.value(),
                    u.ord.is_infinite() ? 2 : (qr_mod_p(u.unit_mod_p, mod.p()) ? 1 : 0)};
                const Length v = formula_opt(mod, res, grid.cap);
                auto [it, inserted] = seen.try_emplace(key, v);
                if (!inserted && it->second != v) {
                    std::ostringstream os;
                    os << "m=" << mod.m() << " f2=" << f2 << " formula " << v
                       << " differs within (order, character) class";
                    r.fail(os.str());
                }
            }
        }
    });
}

inline void check_corollary_consistency(const GridSpec& grid,
                                        std::vector<CheckResult>& out) {
    run_check(out, grid, "corollary_consistency", [&](CheckResult& r) {
        for (const GridPoint& pt : grid.points) {
            if (pt.s % 2 != 0) continue;
            const PrimePowerModulus mod(pt.p, pt.s, grid.cap);
            for (std::uint64_t t2 = 2; t2 < pt.s; t2 += 2) {
                const std::uint64_t pt2 = ipow(pt.p, t2);
                const std::uint64_t sub_m = ipow(pt.p, pt.s - t2);
                for (std::uint64_t g2 = 1; g2 < sub_m; ++g2) {
                    if (g2 % pt.p == 0 || !qr_mod_p(g2 % pt.p, pt.p)) continue;
                    ++r.checked;
                    const Length closed = corollary_opt(pt.p, pt.s, t2);
                    const Length general =
                        formula_opt(mod, mod.residue(static_cast<std::int64_t>(pt2 * g2)),
                                    grid.cap);
                    if (closed != general) {
                        std::ostringstream os;
                        os << "p=" << pt.p << " s=" << pt.s << " t2=" << t2
                           << " g2=" << g2 << " " << closed << " vs " << general;
                        r.fail(os.str());
                    }
                }
            }
        }
    });
}

}  // namespace detail

// Runs the full property suite (minus any disabled checks). The moduli of
// the exhaustive checks are fixed small values chosen so the whole suite
// stays in seconds; grid points participate in the per-point checks.
inline VerifyReport verify_lemmas(const GridSpec& grid) {
    VerifyReport report;
    detail::check_table_equivalence(grid, report.checks);
    detail::check_window_equivalence(grid, report.checks);
    detail::check_dominant_nonsquare_constant(grid, report.checks);
    detail::check_odd_min_order_cap(grid, report.checks);
    detail::check_linear_odd_order_cap(grid, report.checks);
    detail::check_short_witness_lower_bounds(grid, report.checks);
    detail::check_unit_square_scaling(grid, report.checks);
    detail::check_unit_linear_reduction(grid, report.checks);
    detail::check_even_order_descent(grid, report.checks);
    detail::check_unit_square_below_p(grid, report.checks);
    detail::check_nonresidue_independence(grid, report.checks);
    detail::check_linear_opt_bound(grid, report.checks);
    detail::check_oracle_equivalence(grid, report.checks);
    detail::check_formula_character_dependence(grid, report.checks);
    detail::check_corollary_consistency(grid, report.checks);
    return report;
}

}  // namespace buchi
