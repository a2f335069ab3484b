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

// Exact residue arithmetic modulo odd prime powers p^s: canonical
// representatives, order at p, quadratic-residue decisions, and the
// precomputed table of squares.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "buchi/errors.hpp"

namespace buchi {

// Default cap on p^s. Keeps tables small and every product m*m inside uint64.
inline constexpr std::uint64_t kDefaultModulusCap = std::uint64_t{1} << 20;

namespace detail {

// Residue products must fit uint64 no matter how far the cap is raised.
inline constexpr std::uint64_t kHardModulusLimit = std::uint64_t{1} << 30;

inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace detail

struct Residue;

// A validated pair (p, s) with p an odd prime and s >= 1; carries m = p^s.
class PrimePowerModulus {
 public:
    PrimePowerModulus(std::uint64_t p, std::uint64_t s,
                      std::uint64_t cap = kDefaultModulusCap)
        : p_(p), s_(s) {
        if (!detail::is_odd_prime(p))
            throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
        if (s < 1) throw InvalidInput("s must be >= 1");
        const std::uint64_t limit = cap < detail::kHardModulusLimit ? cap : detail::kHardModulusLimit;
        std::uint64_t m = 1;
        for (std::uint64_t i = 0; i < s; ++i) {
            if (m > limit / p)
                throw CapExceeded("p^s = " + std::to_string(p) + "^" + std::to_string(s) +
                                  " exceeds the modulus cap " + std::to_string(limit));
            m *= p;
        }
        m_ = m;
    }

    std::uint64_t p() const { return p_; }
    std::uint64_t s() const { return s_; }
    std::uint64_t m() const { return m_; }

    // Canonical representative in [0, m); negative inputs allowed.
    Residue residue(std::int64_t v) const;

    friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return a.p_ == b.p_ && a.s_ == b.s_;
    }
    friend bool operator!=(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return !(a == b);
    }

 private:
    std::uint64_t p_, s_, m_ = 0;
};

// A canonical residue in [0, m) together with its modulus.
struct Residue {
    std::uint64_t value;
    PrimePowerModulus mod;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.mod == b.mod && a.value == b.value;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
        return os << r.value << " (mod " << r.mod.m() << ")";
    }
};

inline Residue PrimePowerModulus::residue(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(m_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return Residue{static_cast<std::uint64_t>(r), *this};
}

// Order at p extended with infinity for the zero class. Infinity compares
// greater than every finite value; parity is only defined for finite values
// (is_even_finite), never for infinity.
class ExtOrder {
 public:
    static constexpr ExtOrder finite(std::uint64_t t) { return ExtOrder(t); }
    static constexpr ExtOrder infinity() { return ExtOrder(kInf); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }
    constexpr std::uint64_t value() const { return v_; }  // finite only
    constexpr bool is_even_finite() const { return is_finite() && v_ % 2 == 0; }

    friend constexpr bool operator==(ExtOrder a, ExtOrder b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtOrder a, ExtOrder b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtOrder a, ExtOrder b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(ExtOrder a, ExtOrder b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(ExtOrder a, ExtOrder b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(ExtOrder a, ExtOrder b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, ExtOrder o) {
        if (o.is_infinite()) return os << "inf";
        return os << o.v_;
    }

 private:
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};
    explicit constexpr ExtOrder(std::uint64_t v) : v_(v) {}
    std::uint64_t v_;
};

// ord_p of a canonical residue; infinity exactly for the zero class, so
// finite results are always < s.
inline ExtOrder padic_ord(const Residue& x) {
    if (x.value == 0) return ExtOrder::infinity();
    std::uint64_t v = x.value, t = 0;
    const std::uint64_t p = x.mod.p();
    while (v % p == 0) {
        v /= p;
        ++t;
    }
    return ExtOrder::finite(t);
}

struct UnitPart {
    ExtOrder ord;
    std::uint64_t unit_mod_p;  // 0 when ord is infinite
};

// Factors x = p^t * g with g a unit; reports g mod p (its quadratic
// character is the only property consumed downstream).
inline UnitPart unit_part(const Residue& x) {
    if (x.value == 0) return {ExtOrder::infinity(), 0};
    std::uint64_t v = x.value, t = 0;
    const std::uint64_t p = x.mod.p();
    while (v % p == 0) {
        v /= p;
        ++t;
    }
    return {ExtOrder::finite(t), v % p};
}

// True iff u is a square mod p (0 counts). Euler's criterion; agrees with
// exhaustive squaring of 0..p-1.
inline bool qr_mod_p(std::uint64_t u, std::uint64_t p) {
    u %= p;
    if (u == 0) return true;
    return detail::pow_mod(u, (p - 1) / 2, p) == 1;
}

inline std::uint64_t least_nonresidue(std::uint64_t p) {
    for (std::uint64_t n = 2; n < p; ++n)
        if (!qr_mod_p(n, p)) return n;
    throw InvalidInput("no quadratic non-residue modulo " + std::to_string(p));
}

// True iff y = x^2 mod p^s has a solution: y = 0, or y = p^t * g with t even
// and g a quadratic residue mod p (the unit square lifts to every power).
inline bool is_square_residue(const Residue& y) {
    if (y.value == 0) return true;
    const UnitPart u = unit_part(y);
    return u.ord.is_even_finite() && qr_mod_p(u.unit_mod_p, y.mod.p());
}

// Exactly { x^2 mod m : 0 <= x < m }, with O(1) membership.
class SquareTable {
 public:
    explicit SquareTable(const PrimePowerModulus& mod,
                         std::uint64_t cap = kDefaultModulusCap)
        : mod_(mod) {
        const std::uint64_t m = mod.m();
        if (m > cap)
            throw CapExceeded("square table for m = " + std::to_string(m) +
                              " exceeds cap " + std::to_string(cap));
        bits_.assign(m, false);
        for (std::uint64_t x = 0; x < m; ++x) bits_[x * x % m] = true;
    }

    bool contains(std::uint64_t canonical) const { return bits_[canonical]; }
    const PrimePowerModulus& mod() const { return mod_; }

    std::vector<std::uint64_t> values() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = 0; v < bits_.size(); ++v)
            if (bits_[v]) out.push_back(v);
        return out;
    }

 private:
    PrimePowerModulus mod_;
    std::vector<bool> bits_;
};

}  // namespace buchi
