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

#ifndef IFTR_STATS_HPP
#define IFTR_STATS_HPP

#include <array>
#include <complex>
#include <vector>

#include "iftr/laplace.hpp"
#include "iftr/params.hpp"

namespace iftr
{
    using cdouble = std::complex<double>;

    // Constants shared by the MGF and its factorized form, in the labeling of the input:
    // shape m1 always pairs with power k_m1, whichever component that is.
    struct IftrDerived
    {
        double c = 1.0;          // 1 + K
        double mean = 1.0;       // mean SNR (or Omega)
        double m1 = 1.0, m2 = 1.0;
        double k_m1 = 0.0, k_m2 = 0.0;
        double a1 = 1.0;         // m1 + k_m1
        double a2 = 1.0;         // m1 k_m2 + m2 k_m1 + m1 m2
        std::array<double, 3> rates{}; // singularities of M(-p) sit at p = -rates[i]
        bool m1_limit = false, m2_limit = false; // shape above shape_limit
        std::array<double, 2> log_prefactors{}; // log(m1^m1 m2^m2 a1^(m2-m1)) and log(c / mean)

        static IftrDerived from(const IftrParams &p);

        // Contour shift used for density inversion: half way to the nearest singularity
        double contour_shift() const { return -0.5 * rates[2]; }
    };

    // MGF E[exp(s gamma)]; throws SingularityError if |1 + K - mean s| < 1e-12
    cdouble mgf(const IftrParams &p, cdouble s);

    // Finite-sum form for integer m1 (or integer m2, by relabeling); agrees with mgf()
    cdouble mgf_integer_m1(const IftrParams &p, cdouble s);

    // Nested models
    cdouble twdp_limit_mgf(double k, double delta, double mean_snr, cdouble s);
    cdouble rice_mgf(double k, double mean_snr, cdouble s);
    cdouble rician_shadowed_mgf(double k, double m, double mean_snr, cdouble s);

    struct StatValue
    {
        double value = 0.0;
        double est_error = 0.0;
        bool tolerance_met = true;
        int clamped = 0;
    };

    // Density and CDF by inversion of the MGF. In the envelope domain mean_snr is read as
    // Omega and x is the envelope r: f_r(r) = 2 r f(r^2), F_r(r) = F(r^2).
    StatValue pdf(const IftrParams &p, double x, DistributionDomain domain = DistributionDomain::snr,
                  const specfun::LaplaceInversionConfig &cfg = {});
    StatValue cdf(const IftrParams &p, double x, DistributionDomain domain = DistributionDomain::snr,
                  const specfun::LaplaceInversionConfig &cfg = {});
    // 1 - F(x) with relative accuracy in the upper tail; cdf() uses it above the mean
    StatValue ccdf(const IftrParams &p, double x, DistributionDomain domain = DistributionDomain::snr,
                   const specfun::LaplaceInversionConfig &cfg = {});

    // Closed forms for integer m1 (or m2): sums of confluent Phi_2 functions, each evaluated
    // by its own inversion. Used to cross-check pdf() and cdf().
    StatValue pdf_integer_m1(const IftrParams &p, double x, DistributionDomain domain = DistributionDomain::snr,
                             const specfun::LaplaceInversionConfig &cfg = {});
    StatValue cdf_integer_m1(const IftrParams &p, double x, DistributionDomain domain = DistributionDomain::snr,
                             const specfun::LaplaceInversionConfig &cfg = {});

    // Density written as f(x) = sum_n weight_n Phi_2(b_n; 1; -rates x), available when m1 or
    // m2 is an integer and the other shape is finite. The CDF uses the same terms with
    // x Phi_2(b_n; 2; -rates x).
    struct Phi2Term
    {
        double weight;
        std::array<double, 3> b;
    };
    struct Phi2Expansion
    {
        std::array<double, 3> rates;
        std::vector<Phi2Term> terms;
    };
    Phi2Expansion phi2_expansion(const IftrParams &p);

    // c such that F(x) ~ c x as x -> 0; also the density at the origin
    double cdf_asymptotic_slope(const IftrParams &p);

    // Distribution with precomputed constants for repeated evaluation
    class IftrDistribution
    {
    public:
        explicit IftrDistribution(const IftrParams &p, specfun::LaplaceInversionConfig cfg = {});

        const IftrParams &params() const { return params_; }
        const IftrDerived &derived() const { return derived_; }

        cdouble mgf(cdouble s) const;
        // Laplace transform of the SNR density, M(-p)
        cdouble transform(cdouble p) const { return mgf(-p); }

        StatValue pdf(double x, DistributionDomain domain = DistributionDomain::snr) const;
        StatValue cdf(double x, DistributionDomain domain = DistributionDomain::snr) const;
        StatValue ccdf(double x, DistributionDomain domain = DistributionDomain::snr) const;

        // SNR-domain CDF on a prebuilt rule (rule.abscissa() is the SNR value)
        StatValue cdf(const specfun::InversionRule &rule) const;

    private:
        IftrParams params_;
        IftrDerived derived_;
        specfun::LaplaceInversionConfig cfg_;
    };
}

#endif
