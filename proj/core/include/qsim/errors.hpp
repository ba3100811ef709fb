// Copyright 2026 The qsim authors
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

namespace qsim {

/// Base class for all qsim errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch between matrix/vector operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Invalid argument value (qubit index out of range, bad phase, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Name not present in a registry.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Data fails a structural requirement (non-unitary matrix, bad format, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a configured resource limit.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace qsim
