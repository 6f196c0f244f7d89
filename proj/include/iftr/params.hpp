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

#ifndef IFTR_PARAMS_HPP
#define IFTR_PARAMS_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace iftr
{
    // Shape parameters above this value are treated as a non-fluctuating specular component
    inline constexpr double shape_limit = 1.0e6;

    // Which random variable a statistic refers to. In the envelope domain the
    // mean_snr field of IftrParams is read as Omega = E{r^2}.
    enum class DistributionDomain
    {
        snr,
        envelope
    };

    DistributionDomain parse_domain(const std::string &name);
    std::string to_string(DistributionDomain d);

    // Channel parameters (K, Delta, m1, m2, mean SNR).
    //
    // Index 1 refers to the stronger specular component in canonical form. Setting
    // `m1_on_weaker` declares the opposite labeling, in which m1 belongs to the weaker
    // component; canonicalize() converts such a set back to canonical form.
    // Shapes may be +inf (or anything above shape_limit) for a constant specular amplitude.
    struct IftrParams
    {
        double k = 0.0;
        double delta = 0.0;
        double m1 = 1.0;
        double m2 = 1.0;
        double mean_snr = 1.0;
        bool m1_on_weaker = false;

        // Throws ValidationError naming the first violated bound
        void validate() const;

        // Shape of the stronger / weaker specular component
        double m_strong() const { return m1_on_weaker ? m2 : m1; }
        double m_weak() const { return m1_on_weaker ? m1 : m2; }

        bool operator==(const IftrParams &) const = default;
    };

    // Physical amplitudes equivalent to the (K, Delta) parameterization, v1 >= v2
    struct SpecularDecomposition
    {
        double v1 = 0.0;
        double v2 = 0.0;
        double sigma2 = 0.5;

        void validate() const;
    };

    // K, Delta and mean SNR of the amplitudes, with mean SNR = es_n0 * 2 sigma^2 (1 + K).
    // Shapes are left at their defaults; amplitudes given as v1 < v2 are relabeled.
    IftrParams params_from_amplitudes(const SpecularDecomposition &d, double es_n0, double m1 = 1.0, double m2 = 1.0);

    // Amplitudes for a given diffuse variance sigma2 (mean_snr is not used)
    SpecularDecomposition amplitudes_from_params(const IftrParams &p, double sigma2);

    // Equivalent parameter set in canonical labeling; K = 0 forces Delta = 0. Idempotent.
    IftrParams canonicalize(const IftrParams &p);

    // Power components V1^2/(2 sigma^2) and V2^2/(2 sigma^2) in canonical order
    struct SpecularPowers
    {
        double strong;
        double weak;
    };
    SpecularPowers specular_powers(double k, double delta);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double linear);

    // JSON parameter document {"K", "Delta", "m1", "m2", "mean_snr_db"}.
    // "mean_snr" (linear) or "Omega" are accepted in place of "mean_snr_db";
    // shapes may be given as the string "inf".
    IftrParams params_from_json(const nlohmann::json &doc);
    nlohmann::json params_to_json(const IftrParams &p);

    struct ModulationTerm
    {
        double alpha;
        double beta;
    };

    // Conditional error probability sum_r alpha_r Q(sqrt(beta_r gamma))
    class ModulationSpec
    {
    public:
        // Throws ValidationError if any beta_r <= 0 or the CEP leaves [0, 1] on a test grid
        explicit ModulationSpec(std::vector<ModulationTerm> terms);

        static ModulationSpec bpsk();

        std::span<const ModulationTerm> terms() const { return terms_; }
        double cep(double gamma) const;

    private:
        std::vector<ModulationTerm> terms_;
    };

    // Gaussian Q-function
    double q_function(double x);

    // Library version string
    std::string version();
}

#endif
