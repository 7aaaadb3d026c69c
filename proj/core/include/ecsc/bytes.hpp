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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecsc {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);

void append_bytes(Bytes& out, std::span<const std::uint8_t> data);
void append_u16_be(Bytes& out, std::uint16_t v);
void append_u32_be(Bytes& out, std::uint32_t v);
void append_u64_be(Bytes& out, std::uint64_t v);

Bytes to_bytes(std::string_view text);

/// Comparison whose running time depends only on the lengths.
bool equal_constant_time(std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b);

/// Best-effort erase of secret material (not optimized away).
void secure_wipe(std::span<std::uint8_t> data);

}  // namespace ecsc
