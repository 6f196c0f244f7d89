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

#ifndef IFTR_TEST_UTIL_HPP
#define IFTR_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <string>

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

inline double rel_err(std::complex<double> got, std::complex<double> want)
{
    return std::abs(got - want) / std::abs(want);
}

inline std::string tmp_path(const std::string &name) { return std::string(IFTR_TEST_TMP) + "/" + name; }

#endif
