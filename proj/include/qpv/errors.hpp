// Copyright 2026 The qpv authors
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

#include <stdexcept>
#include <string>

namespace qpv {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

struct NotPositive : Error {
    explicit NotPositive(const std::string& what) : Error(what) {}
};

struct EmptyAmbient : Error {
    explicit EmptyAmbient(const std::string& what) : Error(what) {}
};

struct NonPositiveScale : Error {
    explicit NonPositiveScale(const std::string& what) : Error(what) {}
};

struct UnknownProcess : Error {
    explicit UnknownProcess(const std::string& what) : Error(what) {}
};

struct InvalidState : Error {
    explicit InvalidState(const std::string& what) : Error(what) {}
};

struct TooManyProcesses : Error {
    explicit TooManyProcesses(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Conditions the underlying theory rules out. Reaching one means a bug in
/// this library, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

struct SingularSystem : InternalError {
    explicit SingularSystem(const std::string& what) : InternalError(what) {}
};

struct NonConvergence : InternalError {
    explicit NonConvergence(const std::string& what) : InternalError(what) {}
};

}  // namespace qpv
