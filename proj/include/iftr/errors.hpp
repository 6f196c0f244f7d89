// SPDX-License-Identifier: Apache-2.0
//
// iftr: statistics, simulation and fitting for two-ray fading channels
// Copyright (C) 2026 The iftr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IFTR_ERRORS_HPP
#define IFTR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iftr
{
    // Invalid parameter values or malformed inputs (CLI exit code 2)
    class ValidationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Series, quadrature or optimizer failed to converge (CLI exit code 3)
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Evaluation requested too close to a pole or contour singularity
    class SingularityError : public NumericalError
    {
    public:
        using NumericalError::NumericalError;
    };

    // File access and parse failures (CLI exit code 1)
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Parse failure with the offending line number (1-based)
    class ParseError : public IoError
    {
    public:
        ParseError(const std::string &what, std::size_t line)
            : IoError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };
}

#endif
