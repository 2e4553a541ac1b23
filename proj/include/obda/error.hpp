/*
   Copyright 2026 The obda Authors

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
#include <string>

namespace obda {

enum class ErrorKind {
    invalid_input,
    config,
    domain,
    decode,
    dimension,
    framing,
    degenerate,
    vacuous_bound,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library.  The kind decides
/// the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A convergence bound whose scaling-factor denominator is not positive.
class VacuousBoundError : public Error {
public:
    VacuousBoundError(const std::string& what, double denominator)
        : Error(ErrorKind::vacuous_bound, what), denominator_(denominator) {}

    double denominator() const noexcept { return denominator_; }

private:
    double denominator_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace obda
