// Copyright 2026 The qaf developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qaf {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Thrown when an operation receives arguments that violate its contract.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace detail

} // namespace qaf
