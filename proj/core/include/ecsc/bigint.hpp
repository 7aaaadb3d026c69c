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

#include <boost/multiprecision/cpp_int.hpp>

#include "ecsc/bytes.hpp"

namespace ecsc {

using BigInt = boost::multiprecision::cpp_int;

/// Canonical residue of a in [0, m).
BigInt mod(const BigInt& a, const BigInt& m);

BigInt mod_add(const BigInt& a, const BigInt& b, const BigInt& m);
BigInt mod_sub(const BigInt& a, const BigInt& b, const BigInt& m);
BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& m);
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);

/// Multiplicative inverse of x modulo m. Throws ZeroInverse when
/// x == 0 (mod m) or no inverse exists.
BigInt mod_inverse(const BigInt& x, const BigInt& m);

/// Number of bits in x; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// Miller-Rabin with the given number of rounds (default gives an
/// error bound below 2^-128 for composites).
bool is_probable_prime(const BigInt& n, unsigned rounds = 64);

/// Big-endian encoding into exactly `width` bytes. Throws Error if
/// x is negative or does not fit.
Bytes encode_be(const BigInt& x, std::size_t width);
BigInt decode_be(std::span<const std::uint8_t> data);

std::string to_hex(const BigInt& x);

/// Parses a non-negative integer written in decimal or 0x-prefixed or
/// plain hex. Throws ParseError on anything else.
BigInt parse_bigint(std::string_view text);

}  // namespace ecsc
