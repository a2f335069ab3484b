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

// Quadratic polynomials over Z/p^s Z: evaluation, the square-of-a-polynomial
// decision, and the precomputed set of squares of linear polynomials.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "buchi/arith.hpp"
#include "buchi/errors.hpp"

namespace buchi {

// Coefficient triple (f2, f1, f0), each canonical in [0, m). f2 may be zero,
// making the polynomial effectively linear or constant.
struct QuadPoly {
    PrimePowerModulus mod;
    std::uint64_t f2, f1, f0;

    QuadPoly(const PrimePowerModulus& modulus, std::int64_t c2, std::int64_t c1,
             std::int64_t c0)
        : mod(modulus),
          f2(modulus.residue(c2).value),
          f1(modulus.residue(c1).value),
          f0(modulus.residue(c0).value) {}

    friend bool operator==(const QuadPoly& a, const QuadPoly& b) {
        return a.mod == b.mod && a.f2 == b.f2 && a.f1 == b.f1 && a.f0 == b.f0;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadPoly& f) {
        return os << "(" << f.f2 << "," << f.f1 << "," << f.f0 << ") mod " << f.mod.m();
    }
};

// f2*x^2 + f1*x + f0 reduced mod m; x is reduced first, so any integer x works.
inline Residue eval(const QuadPoly& f, std::int64_t x) {
    const std::uint64_t m = f.mod.m();
    const std::uint64_t xr = f.mod.residue(x).value;
    const std::uint64_t v = (f.f2 * xr % m * xr + f.f1 * xr + f.f0) % m;
    return Residue{v, f.mod};
}

// The set of coefficient triples (a^2, 2ab, b^2) mod m over all a, b: the
// squares of polynomials of degree at most one. Built once per modulus in
// O(m^2) and shared across a whole sweep.
class LinearSquareIndex {
 public:
    explicit LinearSquareIndex(const PrimePowerModulus& mod,
                               std::uint64_t cap = kDefaultModulusCap)
        : mod_(mod), m_(mod.m()) {
        if (m_ > cap)
            throw CapExceeded("linear-square index for m = " + std::to_string(m_) +
                              " exceeds cap " + std::to_string(cap));
        // Packed keys need m^3 < 2^63.
        if (m_ >= (std::uint64_t{1} << 21))
            throw CapExceeded("linear-square index requires m < 2^21, got " +
                              std::to_string(m_));
        dense_ = m_ <= 1024;
        if (dense_) bits_.assign(m_ * m_ * m_, false);
        if (!dense_) keys_.reserve(m_ * m_);
        for (std::uint64_t a = 0; a < m_; ++a) {
            const std::uint64_t a2 = a * a % m_;
            const std::uint64_t two_a = 2 * a % m_;
            for (std::uint64_t b = 0; b < m_; ++b) {
                const std::uint64_t k = key(a2, two_a * b % m_, b * b % m_);
                if (dense_)
                    bits_[k] = true;
                else
                    keys_.push_back(k);
            }
        }
        if (!dense_) {
            std::sort(keys_.begin(), keys_.end());
            keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
        }
    }

    // Membership of the triple (x^2 coefficient, x coefficient, constant).
    bool contains(std::uint64_t c2, std::uint64_t c1, std::uint64_t c0) const {
        const std::uint64_t k = key(c2, c1, c0);
        if (dense_) return bits_[k];
        return std::binary_search(keys_.begin(), keys_.end(), k);
    }

    const PrimePowerModulus& mod() const { return mod_; }

    std::uint64_t size() const {
        if (!dense_) return keys_.size();
        std::uint64_t n = 0;
        for (bool b : bits_) n += b;
        return n;
    }

 private:
    std::uint64_t key(std::uint64_t c2, std::uint64_t c1, std::uint64_t c0) const {
        return (c2 * m_ + c1) * m_ + c0;
    }

    PrimePowerModulus mod_;
    std::uint64_t m_;
    bool dense_ = false;
    std::vector<bool> bits_;
    std::vector<std::uint64_t> keys_;
};

inline bool is_square_of_linear(const QuadPoly& f, const LinearSquareIndex& idx) {
    if (f.mod != idx.mod())
        throw ModulusMismatch("polynomial and index moduli differ");
    return idx.contains(f.f2, f.f1, f.f0);
}

// True iff some polynomial phi (of any degree) satisfies phi^2 = f mod p^s:
// either ord(f0) < min(ord(f1), ord(f2)) with f0 a square residue, or f is
// the square of a polynomial of degree at most one.
inline bool is_square_poly(const QuadPoly& f, const LinearSquareIndex& idx) {
    if (f.mod != idx.mod())
        throw ModulusMismatch("polynomial and index moduli differ");
    const ExtOrder o0 = padic_ord(Residue{f.f0, f.mod});
    const ExtOrder o1 = padic_ord(Residue{f.f1, f.mod});
    const ExtOrder o2 = padic_ord(Residue{f.f2, f.mod});
    if (o0 < std::min(o1, o2) && is_square_residue(Residue{f.f0, f.mod})) return true;
    return idx.contains(f.f2, f.f1, f.f0);
}

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 26;

namespace detail {

// Walks every coefficient vector of phi with degree <= degree_bound and
// entries in [0, m); reports each phi whose square has no coefficient above
// X^2, as (c2, c1, c0, deg phi). visit returning false stops the walk.
template <typename Visit>
void enumerate_poly_squares(const PrimePowerModulus& mod, unsigned degree_bound,
                            std::uint64_t budget, Visit&& visit) {
    const std::uint64_t m = mod.m();
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= degree_bound; ++i) {
        if (total > budget / m)
            throw BudgetExceeded("m^(d+1) = " + std::to_string(m) + "^" +
                                 std::to_string(degree_bound + 1) +
                                 " exceeds budget " + std::to_string(budget));
        total *= m;
    }
    std::vector<std::uint64_t> c(degree_bound + 1, 0);
    std::vector<std::uint64_t> sq(2 * degree_bound + 1, 0);
    for (;;) {
        bool quadratic = true;
        for (unsigned k = 0; k <= 2 * degree_bound && quadratic; ++k) {
            std::uint64_t acc = 0;
            const unsigned lo = k > degree_bound ? k - degree_bound : 0;
            for (unsigned i = lo; i <= k && i <= degree_bound; ++i)
                acc = (acc + c[i] * c[k - i]) % m;
            sq[k] = acc;
            if (k >= 3 && acc != 0) quadratic = false;
        }
        if (quadratic) {
            unsigned deg = 0;
            for (unsigned i = 0; i <= degree_bound; ++i)
                if (c[i] != 0) deg = i;
            if (!visit(sq[2], sq[1], sq[0], deg)) return;
        }
        unsigned i = 0;
        while (i <= degree_bound && ++c[i] == m) c[i++] = 0;
        if (i > degree_bound) return;
    }
}

}  // namespace detail

// Batch form of the bounded square decision: one enumeration of all phi up
// to the degree bound, then O(1) queries. Also remembers the least witness
// degree per reachable triple, so a too-small bound can be observed.
class SquarePolyOracle {
 public:
    SquarePolyOracle(const PrimePowerModulus& mod, unsigned degree_bound,
                     std::uint64_t budget = kDefaultOracleBudget)
        : mod_(mod), m_(mod.m()), degree_bound_(degree_bound) {
        detail::enumerate_poly_squares(
            mod, degree_bound, budget,
            [this](std::uint64_t c2, std::uint64_t c1, std::uint64_t c0, unsigned deg) {
                const std::uint64_t k = (c2 * m_ + c1) * m_ + c0;
                auto [it, inserted] = reachable_.try_emplace(k, deg);
                if (!inserted && deg < it->second) it->second = deg;
                return true;
            });
    }

    bool contains(const QuadPoly& f) const {
        if (f.mod != mod_) throw ModulusMismatch("polynomial and oracle moduli differ");
        return reachable_.count((f.f2 * m_ + f.f1) * m_ + f.f0) != 0;
    }

    std::optional<unsigned> witness_degree(const QuadPoly& f) const {
        if (f.mod != mod_) throw ModulusMismatch("polynomial and oracle moduli differ");
        auto it = reachable_.find((f.f2 * m_ + f.f1) * m_ + f.f0);
        if (it == reachable_.end()) return std::nullopt;
        return it->second;
    }

    unsigned degree_bound() const { return degree_bound_; }
    std::uint64_t size() const { return reachable_.size(); }

 private:
    PrimePowerModulus mod_;
    std::uint64_t m_;
    unsigned degree_bound_;
    std::unordered_map<std::uint64_t, unsigned> reachable_;
};

// True iff some phi of degree <= degree_bound squares to f coefficientwise
// mod m. Single-query form; stops at the first witness.
inline bool oracle_is_square_poly_bounded(const QuadPoly& f, unsigned degree_bound,
                                          std::uint64_t budget = kDefaultOracleBudget) {
    bool found = false;
    detail::enumerate_poly_squares(
        f.mod, degree_bound, budget,
        [&](std::uint64_t c2, std::uint64_t c1, std::uint64_t c0, unsigned) {
            if (c2 == f.f2 && c1 == f.f1 && c0 == f.f0) {
                found = true;
                return false;
            }
            return true;
        });
    return found;
}

}  // namespace buchi
