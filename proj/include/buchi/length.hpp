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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace buchi {

// A sequence length or optimal bound: Finite(n >= 0) or Infinite. Infinite
// is the top of the order and absorbs successor and scaling.
class Length {
 public:
    constexpr Length() : v_(0) {}

    static constexpr Length finite(std::uint64_t n) { return Length(n); }
    static constexpr Length infinite() { return Length(kInf); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }
    constexpr std::uint64_t value() const { return v_; }  // finite only

    constexpr Length successor() const { return is_infinite() ? *this : Length(v_ + 1); }
    constexpr Length predecessor() const {
        return is_infinite() ? *this : Length(v_ == 0 ? 0 : v_ - 1);
    }
    constexpr Length times(std::uint64_t k) const {
        return is_infinite() ? *this : Length(v_ * k);
    }

    friend constexpr bool operator==(Length a, Length b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Length a, Length b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Length a, Length b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Length a, Length b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Length a, Length b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Length a, Length b) { return a.v_ >= b.v_; }

    friend constexpr Length max(Length a, Length b) { return a < b ? b : a; }

    friend std::ostream& operator<<(std::ostream& os, Length v) {
        if (v.is_infinite()) return os << "inf";
        return os << v.v_;
    }

 private:
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};
    explicit constexpr Length(std::uint64_t v) : v_(v) {}
    std::uint64_t v_;
};

inline std::string to_string(Length v) {
    return v.is_infinite() ? "inf" : std::to_string(v.value());
}

// Optimal-bound values share the length representation.
using OptValue = Length;

}  // namespace buchi
