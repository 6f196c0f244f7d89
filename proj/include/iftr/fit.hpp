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

#ifndef IFTR_FIT_HPP
#define IFTR_FIT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iftr/laplace.hpp"
#include "iftr/params.hpp"

namespace iftr
{
    struct CdfPoint
    {
        double x;
        double f;
    };

    // Ordered (x, F) pairs. In the envelope domain x is the envelope r and the model is
    // compared through F(r) = F_gamma(r^2).
    struct EmpiricalCdf
    {
        std::vector<CdfPoint> points;
        DistributionDomain domain = DistributionDomain::snr;
        bool normalized = false; // power abscissae divided by the sample mean power

        // x > 0 strictly increasing, F nondecreasing in (0, 1], at least 8 points
        void validate() const;
        // Power-domain abscissae (r^2 for envelopes)
        std::vector<double> power_abscissae() const;
    };

    struct CdfFileOptions
    {
        DistributionDomain domain = DistributionDomain::snr;
    };

    // CSV with header "x,cdf" or "x_db,cdf"; '#' lines are comments. dB abscissae use
    // 10 log10 for SNR and 20 log10 for envelopes. Rows are sorted by x.
    EmpiricalCdf load_empirical_cdf(const std::string &path, const CdfFileOptions &opt = {});

    // Empirical CDF of samples on a quantile grid: `points` probabilities, log-spaced from
    // p_min (default 100 / n) to 0.5 and linear above. Samples are power values (SNR or r^2)
    // unless domain is envelope; `normalize` divides power by its sample mean.
    EmpiricalCdf empirical_cdf_from_samples(std::vector<double> samples, DistributionDomain domain,
                                            bool normalize = false, int points = 40, double p_min = 0.0);

    // max_i |log10 F_e(x_i) - log10 F_a(x_i)|; throws ValidationError naming the first point
    // where the model CDF is not positive
    double modified_ks(const EmpiricalCdf &emp, const std::function<double(double)> &model_cdf);

    enum class ModelFamily
    {
        iftr,
        iftr_integer_m1,
        rice,
        twdp,
        rician_shadowed
    };

    ModelFamily parse_model_family(const std::string &name);
    std::string to_string(ModelFamily f);

    struct Interval
    {
        double lo;
        double hi;
    };

    struct FitBounds
    {
        Interval k{1e-3, 1e6};
        Interval delta{0.0, 1.0};
        Interval m{0.05, INFINITY}; // shapes above shape_limit mean a constant ray
        double m_start_max = 1e3;   // random starting shapes are drawn below this
        Interval omega{1e-3, 1e3}; // relative to the data scale (power at F = 0.5)
    };

    struct FitConfig
    {
        ModelFamily family = ModelFamily::iftr;
        bool fit_scale = false;  // fit Omega; otherwise Omega = omega
        double omega = 1.0;
        FitBounds bounds;
        int restarts = 4;
        double tolerance = 1e-6; // on epsilon, simplex spread
        int max_evaluations = 800; // per restart
        std::uint64_t seed = 1;
        int m1_min = 1, m1_max = 60; // integer grid of iftr-integer-m1
        specfun::LaplaceInversionConfig inversion{specfun::InversionMethod::euler_summation, 32, 1e-6};

        void validate() const;
    };

    struct RestartTrace
    {
        std::vector<double> start; // optimizer coordinates
        double epsilon;
        int evaluations;
        bool converged;
    };

    struct FitResult
    {
        IftrParams params;
        double epsilon = 0.0;
        ModelFamily family = ModelFamily::iftr;
        int restarts = 0;
        int evaluations = 0;
        bool converged = true;
        int clamped = 0;
        std::vector<RestartTrace> trace;
    };

    // Model CDF evaluator with inversion rules fixed to the empirical abscissae
    class CdfObjective
    {
    public:
        CdfObjective(const EmpiricalCdf &emp, const specfun::LaplaceInversionConfig &cfg);
        // epsilon of the parameter set, +inf where the model CDF is not positive
        double epsilon(const IftrParams &p, int *clamped = nullptr) const;
        std::size_t size() const { return rules_.size(); }

    private:
        std::vector<specfun::InversionRule> rules_;
        std::vector<double> log_f_;
    };

    FitResult fit(const EmpiricalCdf &emp, const FitConfig &cfg);

    // Fits of {iftr, rice, twdp, rician-shadowed}; nested fits seed the iftr search, so the
    // iftr epsilon never exceeds theirs
    std::vector<FitResult> fit_compare(const EmpiricalCdf &emp, const FitConfig &cfg);

    nlohmann::json to_json(const FitResult &r);
}

#endif
