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

#ifndef IFTR_LINK_HPP
#define IFTR_LINK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iftr/params.hpp"
#include "iftr/stats.hpp"

namespace iftr
{
    enum class BerMethod
    {
        lauricella_exact,
        mgf_quadrature,
        asymptotic,
        monte_carlo
    };

    std::string to_string(BerMethod m);

    struct BerResult
    {
        double value = 0.0;
        BerMethod method = BerMethod::lauricella_exact;
        double est_error = 0.0;      // relative
        double standard_error = 0.0; // absolute, Monte Carlo only
        std::string notice;          // set when the requested method was substituted
    };

    struct MonteCarloEstimate
    {
        double value;
        double standard_error;
    };

    // Closed form as a sum of Lauricella F_D functions. Needs an integer m1 or m2 and a
    // finite other shape; otherwise falls back to ber_mgf_quadrature and sets `notice`.
    BerResult ber_exact(const IftrParams &p, const ModulationSpec &mod);

    // (1/pi) sum_r alpha_r int_0^(pi/2) M(-beta_r / (2 sin^2 t)) dt, adaptive to 1e-10
    BerResult ber_mgf_quadrature(const IftrParams &p, const ModulationSpec &mod);

    // High-SNR asymptote: slope / 2 * sum_r alpha_r / beta_r
    BerResult ber_asymptotic(const IftrParams &p, const ModulationSpec &mod);

    // Average of the conditional error probability over simulated SNR samples
    BerResult ber_monte_carlo(const IftrParams &p, const ModulationSpec &mod, std::size_t n, std::uint64_t seed);

    // P(log2(1 + gamma) < rate) = F(2^rate - 1)
    StatValue outage(const IftrParams &p, double rate_threshold, const specfun::LaplaceInversionConfig &cfg = {});
    double outage_asymptotic(const IftrParams &p, double rate_threshold);

    // Mean conditional error probability over SNR samples, with its standard error
    MonteCarloEstimate cep_average(const std::vector<double> &snr, const ModulationSpec &mod);

    MonteCarloEstimate outage_monte_carlo(const IftrParams &p, double rate_threshold, std::size_t n, std::uint64_t seed);
}

#endif
