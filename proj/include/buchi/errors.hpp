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

#include <stdexcept>

namespace buchi {

// Bad mathematical input: even or composite p, s < 1, out-of-range parameters.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Objects built for different moduli were combined.
struct ModulusMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A modulus or precomputed table would exceed the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace buchi
