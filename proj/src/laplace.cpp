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

#include "iftr/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iftr/errors.hpp"
#include "iftr/specfun.hpp"

namespace iftr::specfun
{
    namespace
    {
        using cd = std::complex<double>;

        // Euler summation split: terms = N + M + 1 nodes, M binomially averaged partial sums
        int euler_m(int terms) { return std::clamp(terms / 3, 8, 24); }

        // Talbot node counts for the estimate and the coarser cross-check
        int talbot_m(int terms) { return std::clamp(terms / 3, 12, 24); }
    }

    InversionMethod parse_inversion_method(const std::string &name)
    {
        if (name == "euler-summation" || name == "euler")
            return InversionMethod::euler_summation;
        if (name == "fixed-talbot" || name == "talbot")
            return InversionMethod::fixed_talbot;
        throw ValidationError("unknown inversion method '" + name + "'");
    }

    std::string to_string(InversionMethod m)
    {
        return m == InversionMethod::euler_summation ? "euler-summation" : "fixed-talbot";
    }

    void LaplaceInversionConfig::validate() const
    {
        if (terms < 16 || terms > 512)
            throw ValidationError("inversion terms must lie in [16, 512]");
        if (!(precision_target > 1e-14 && precision_target < 1e-2))
            throw ValidationError("inversion precision_target must lie in (1e-14, 1e-2)");
    }

    InversionRule InversionRule::density(double x, const LaplaceInversionConfig &cfg, double shift)
    {
        if (!std::isfinite(shift) || shift > 0.0)
            throw ValidationError("contour shift must be finite and <= 0");
        return build(x, cfg, false, shift);
    }

    InversionRule InversionRule::cdf(double x, const LaplaceInversionConfig &cfg)
    {
        return build(x, cfg, true, 0.0);
    }

    InversionRule InversionRule::build(double x, const LaplaceInversionConfig &cfg, bool cdf, double shift)
    {
        cfg.validate();
        if (!(x > 0.0) || !std::isfinite(x))
            throw SingularityError("Laplace inversion requires a finite abscissa x > 0");

        InversionRule rule;
        rule.x_ = x;
        rule.precision_ = cfg.precision_target;
        rule.cdf_ = cdf;

        if (cfg.method == InversionMethod::euler_summation)
        {
            const int m = euler_m(cfg.terms);
            const int n = cfg.terms - m - 1;
            // discretization error ~ e^-a, kept a decade below the target
            const double a = -std::log(0.1 * cfg.precision_target);
            const double scale = std::exp(0.5 * a + shift * x) / x;

            // Tail weights W_k = sum_{j >= k-N} C(M, j) 2^-M, and the same for M - 1
            auto tail_weights = [](int order)
            {
                std::vector<double> binom(order + 1);
                double c = std::ldexp(1.0, -order);
                for (int j = 0; j <= order; ++j)
                {
                    binom[j] = c;
                    c *= double(order - j) / double(j + 1);
                }
                std::vector<double> tail(order + 2, 0.0);
                for (int j = order; j >= 0; --j)
                    tail[j] = tail[j + 1] + binom[j];
                return tail;
            };
            const auto tail = tail_weights(m);
            const auto tail_alt = tail_weights(m - 1);

            const int count = n + m + 1;
            rule.nodes_.resize(count);
            rule.weights_.resize(count);
            rule.alt_weights_.resize(count);
            for (int k = 0; k < count; ++k)
            {
                const cd p(shift + a / (2.0 * x), std::numbers::pi * k / x);
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                const double half = (k == 0) ? 0.5 : 1.0;
                const double w_main = (k <= n) ? 1.0 : tail[k - n];
                const double w_alt = (k <= n) ? 1.0 : (k - n <= m - 1 ? tail_alt[k - n] : 0.0);
                cd base = scale * sign * half;
                if (cdf)
                    base /= p;
                rule.nodes_[k] = p;
                rule.weights_[k] = base * w_main;
                rule.alt_weights_[k] = base * w_alt;
            }
        }
        else
        {
            const int m = talbot_m(cfg.terms);
            const int m_alt = m - 6;
            auto append = [&](int order, bool main)
            {
                const double r = 2.0 * order / (5.0 * x);
                for (int k = 0; k < order; ++k)
                {
                    cd node, weight;
                    if (k == 0)
                    {
                        node = r;
                        weight = 0.5 * std::exp(r * x) * r / order;
                    }
                    else
                    {
                        const double theta = k * std::numbers::pi / order;
                        const double cot = std::cos(theta) / std::sin(theta);
                        node = cd(r * theta * cot, r * theta);
                        const double sigma = theta + (theta * cot - 1.0) * cot;
                        weight = std::exp(x * node) * cd(1.0, sigma) * (r / order);
                    }
                    if (cdf)
                        weight /= node;
                    weight *= std::exp(shift * x);
                    rule.nodes_.push_back(node + shift);
                    rule.weights_.push_back(main ? weight : cd(0.0));
                    rule.alt_weights_.push_back(main ? cd(0.0) : weight);
                }
            };
            append(m, true);
            append(m_alt, false);
        }
        return rule;
    }

    InversionResult InversionRule::combine(std::span<const cd> values) const
    {
        if (values.size() != nodes_.size())
            throw ValidationError("InversionRule::combine: value count does not match node count");
        double main = 0.0, alt = 0.0;
        for (std::size_t k = 0; k < values.size(); ++k)
        {
            if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag()))
                throw SingularityError("Laplace transform is not finite on the inversion contour");
            main += (weights_[k] * values[k]).real();
            alt += (alt_weights_[k] * values[k]).real();
        }
        InversionResult r;
        r.value = main;
        r.est_error = std::abs(main - alt);
        r.tolerance_met = r.est_error <= precision_ * std::abs(main) || r.est_error <= 1e-13;
        if (cdf_)
        {
            if (r.value < 0.0)
            {
                r.value = 0.0;
                r.clamped = 1;
            }
            else if (r.value > 1.0)
            {
                r.value = 1.0;
                r.clamped = 1;
            }
        }
        return r;
    }

    InversionResult laplace_invert_density(const LaplaceTransform &transform, double x,
                                           const LaplaceInversionConfig &cfg, double shift)
    {
        return InversionRule::density(x, cfg, shift).apply(transform);
    }

    InversionResult laplace_invert_cdf(const LaplaceTransform &transform, double x,
                                       const LaplaceInversionConfig &cfg)
    {
        return InversionRule::cdf(x, cfg).apply(transform);
    }

    double confluent_phi2(const std::array<double, 3> &b, double c, const std::array<double, 3> &y,
                          const LaplaceInversionConfig &cfg)
    {
        for (double v : y)
            if (!(v <= 0.0))
                throw ValidationError("confluent_phi2: arguments must be non-positive");
        if (!(c > 0.0))
            throw ValidationError("confluent_phi2: c must be positive");
        // Evaluate at x = 1 with rates r_i = -y_i
        auto transform = [&](cd p)
        {
            cd lg = -c * std::log(p);
            for (int i = 0; i < 3; ++i)
                if (b[i] != 0.0 && y[i] != 0.0)
                    lg -= b[i] * log1p(-y[i] / p);
            return std::exp(lg);
        };
        const auto r = InversionRule::density(1.0, cfg).apply(transform);
        return std::exp(log_gamma(c)) * r.value;
    }
}
