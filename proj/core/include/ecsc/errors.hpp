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
#include <stdexcept>
#include <string>

namespace ecsc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic / encoding
struct ModulusMismatch : Error {
    using Error::Error;
};
struct ZeroInverse : Error {
    using Error::Error;
};
struct NotOnCurve : Error {
    using Error::Error;
};
struct DecodeError : Error {
    using Error::Error;
};

// Files and environment
struct IoError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct RandomnessFailure : Error {
    using Error::Error;
};

// Protocol
struct RetryNeeded : Error {
    using Error::Error;
};
struct DegenerateSharedPoint : Error {
    using Error::Error;
};
struct InvalidEphemeralPoint : Error {
    InvalidEphemeralPoint(char condition, const std::string& what)
        : Error(what), condition(condition) {}
    char condition;  // 'a', 'b' or 'c'
};
struct SignatureInvalid : Error {
    using Error::Error;
};
struct IdentityMismatch : Error {
    using Error::Error;
};
struct CertificateInvalid : Error {
    CertificateInvalid(std::string which, const std::string& what)
        : Error(what), which(std::move(which)) {}
    std::string which;  // "sender" or "recipient"
};
struct ReplayWindowViolation : Error {
    ReplayWindowViolation(std::int64_t delta, const std::string& what)
        : Error(what), delta(delta) {}
    std::int64_t delta;  // observed T_B - T_A
};
struct VariantError : Error {
    using Error::Error;
};

// PKI
struct InvalidPublicKey : Error {
    using Error::Error;
};
struct InvalidValidityWindow : Error {
    using Error::Error;
};

// Cost model
struct UnknownScheme : Error {
    using Error::Error;
};
struct UnsupportedCoordinate : Error {
    using Error::Error;
};

}  // namespace ecsc
