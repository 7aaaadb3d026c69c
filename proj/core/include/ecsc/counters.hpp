/*
 * Copyright (C) 2026 The ecsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

namespace ecsc {

/// Observational operation counters. Every counting operation takes an
/// optional `OpCounters*` sink; passing nullptr disables counting and
/// never changes any computed value.
///
/// Protocol-level counters tally the top-level units of the scheme's
/// cost accounting: a scalar-point multiplication counts one `ecpm` and
/// does not additionally contribute its internal point additions to
/// `ecpa`. Field-level counters tally the arithmetic inside the curve
/// group formulas; squarings count as multiplications.
struct OpCounters {
    // protocol level
    std::uint64_t ecpm = 0;     ///< scalar-point multiplications
    std::uint64_t ecpa = 0;     ///< point additions outside any ecpm
    std::uint64_t mod_mul = 0;  ///< modular multiplications mod n
    std::uint64_t mod_add = 0;  ///< modular additions/subtractions mod n
    std::uint64_t hash = 0;     ///< hash / HMAC / KDF invocations

    // field level (inside curve formulas)
    std::uint64_t field_mul = 0;
    std::uint64_t field_add = 0;
    std::uint64_t field_inv = 0;
};

}  // namespace ecsc
