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

#ifndef IFTR_LAPLACE_HPP
#define IFTR_LAPLACE_HPP

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace iftr::specfun
{
    enum class InversionMethod
    {
        euler_summation, // Abate-Whitt Fourier series with Euler (binomial) averaging
        fixed_talbot     // Abate-Valko fixed Talbot contour
    };

    InversionMethod parse_inversion_method(const std::string &name);
    std::string to_string(InversionMethod m);

    struct LaplaceInversionConfig
    {
        InversionMethod method = InversionMethod::euler_summation;
        int terms = 64;                 // contour nodes, within [16, 512]
        double precision_target = 1e-10; // relative, within (1e-14, 1e-2)

        void validate() const;
    };

    struct InversionResult
    {
        double value = 0.0;
        double est_error = 0.0;      // |difference| against a coarser rule on the same contour
        bool tolerance_met = true;   // est_error within precision_target
        int clamped = 0;             // CDF values pulled back into [0, 1]
    };

    // Laplace transform F(p) = M(-p) of a density on (0, inf)
    using LaplaceTransform = std::function<std::complex<double>(std::complex<double>)>;

    // Quadrature rule on the Bromwich contour for a fixed abscissa:
    //   f(x) ~ sum_k Re(weight_k F(node_k))
    // Nodes depend only on x and the config, so a rule can be reused across transforms.
    class InversionRule
    {
    public:
        // shift < 0 moves the contour left, towards an abscissa of convergence below zero;
        // it keeps roundoff relative to a decaying density small.
        static InversionRule density(double x, const LaplaceInversionConfig &cfg, double shift = 0.0);
        // Same contour with the extra 1/p of the CDF transform folded into the weights
        static InversionRule cdf(double x, const LaplaceInversionConfig &cfg);

        std::span<const std::complex<double>> nodes() const { return nodes_; }
        double abscissa() const { return x_; }

        // Combine transform values at nodes() into the estimate
        InversionResult combine(std::span<const std::complex<double>> values) const;

        template <typename F>
        InversionResult apply(F &&transform) const
        {
            std::vector<std::complex<double>> values(nodes_.size());
            for (std::size_t k = 0; k < nodes_.size(); ++k)
                values[k] = transform(nodes_[k]);
            return combine(values);
        }

    private:
        InversionRule() = default;
        static InversionRule build(double x, const LaplaceInversionConfig &cfg, bool cdf, double shift);

        double x_ = 0.0;
        double precision_ = 0.0;
        bool cdf_ = false;
        std::vector<std::complex<double>> nodes_;
        std::vector<std::complex<double>> weights_;
        std::vector<std::complex<double>> alt_weights_;
    };

    // f(x) = L^-1[F](x). Throws SingularityError for x <= 0 or a non-finite transform value.
    InversionResult laplace_invert_density(const LaplaceTransform &transform, double x,
                                           const LaplaceInversionConfig &cfg = {}, double shift = 0.0);

    // F(x) = L^-1[F(p)/p](x), clamped to [0, 1]
    InversionResult laplace_invert_cdf(const LaplaceTransform &transform, double x,
                                       const LaplaceInversionConfig &cfg = {});

    // Confluent hypergeometric Phi_2 of three variables for y_i <= 0, from the pair
    //   L[x^(c-1) Phi_2(b; c; -r x) / Gamma(c)](p) = p^-c prod_i (1 + r_i / p)^-b_i
    // The error is absolute, about 1e-11 with the default config, so small values lose relative accuracy.
    double confluent_phi2(const std::array<double, 3> &b, double c, const std::array<double, 3> &y,
                          const LaplaceInversionConfig &cfg = {});
}

#endif
