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

#ifndef IFTR_SIM_HPP
#define IFTR_SIM_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "iftr/params.hpp"

namespace iftr
{
    enum class SimModel
    {
        iftr,
        ftr,             // one Gamma(m1) fluctuation shared by both rays
        twdp,            // constant rays
        rice,            // one constant ray (Delta ignored)
        rician_shadowed  // one Gamma(m1) ray (Delta ignored)
    };

    enum class SimOutput
    {
        envelope,
        snr,
        complex_voltage
    };

    SimModel parse_sim_model(const std::string &name);
    std::string to_string(SimModel m);
    SimOutput parse_sim_output(const std::string &name);
    std::string to_string(SimOutput o);

    struct SimConfig
    {
        std::size_t n_samples = 1;
        std::uint64_t seed = 0;
        SimModel model = SimModel::iftr;
        SimOutput output = SimOutput::snr;
        double phase_rotation = 0.0; // common rotation added to both specular phases (rad)
        unsigned threads = 0;        // 0 = hardware concurrency; output does not depend on it

        void validate() const;
    };

    // Samples are generated in chunks of this many, chunk i drawing from Rng(seed, i)
    inline constexpr std::size_t sim_chunk = 1u << 16;

    struct SampleSet
    {
        SimOutput output = SimOutput::snr;
        std::vector<double> values;                  // envelope or SNR
        std::vector<std::complex<double>> voltages;  // complex baseband voltage
    };

    // V = sqrt(z1) V1 e^(j phi1) + sqrt(z2) V2 e^(j phi2) + X + jY with E|V|^2 = mean_snr.
    // Shapes above shape_limit give constant rays.
    SampleSet sample(const IftrParams &p, const SimConfig &cfg);

    SampleSet sample_iftr(const IftrParams &p, SimConfig cfg);
    SampleSet sample_ftr(double k, double delta, double m, double mean_power, SimConfig cfg);
    SampleSet sample_twdp(double k, double delta, double mean_power, SimConfig cfg);
    SampleSet sample_rice(double k, double mean_power, SimConfig cfg);
    SampleSet sample_rician_shadowed(double k, double m, double mean_power, SimConfig cfg);

    // Configuration record written into sample file headers
    nlohmann::json sim_provenance(const IftrParams &p, const SimConfig &cfg);

    // CSV: "# <json>" header line, then one value per line ("re,im" for voltages).
    void write_samples_csv(const std::string &path, const SampleSet &s, const nlohmann::json &header);
    // Binary: "IFTRSMP1", u64 header length, header JSON, u64 count, u8 complex flag,
    // then little-endian doubles
    void write_samples_binary(const std::string &path, const SampleSet &s, const nlohmann::json &header);

    struct LoadedSamples
    {
        nlohmann::json header;
        std::vector<double> values;
    };
    // Reads either format (detected from the magic); voltages are returned as |V|
    LoadedSamples read_samples(const std::string &path);
}

#endif
