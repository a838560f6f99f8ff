/*
   Copyright 2026 The vmhmc Authors

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

namespace vmhmc {

enum class ErrorKind {
    domain,       // argument outside the mathematical domain
    precondition, // caller violated an operation precondition
    invariant,    // internal consistency guard fired
    degenerate,   // zero-variance series
    config,       // invalid configuration
    io
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what)
        : Error(ErrorKind::precondition, what) {}
};

class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what)
        : Error(ErrorKind::invariant, what) {}
};

class DegenerateSeriesError : public Error {
public:
    explicit DegenerateSeriesError(const std::string& what)
        : Error(ErrorKind::degenerate, what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

} // namespace vmhmc
