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

#ifndef IFTR_PRESETS_HPP
#define IFTR_PRESETS_HPP

#include <string>
#include <vector>

#include "iftr/params.hpp"

namespace iftr
{
    struct PresetCurve
    {
        std::string label;
        IftrParams params;
    };

    // Figure-regeneration parameter sets. Envelope abscissae are in 20 log10(r) dB,
    // SNR abscissae and mean SNR in 10 log10 dB.
    struct Preset
    {
        std::string name;
        std::string quantity; // pdf-envelope, pdf-snr, cdf-snr, ber, outage
        double start, stop;
        int count;
        bool db_spacing;
        double rate = 0.0; // outage threshold Rs, bit/s/Hz
        std::vector<PresetCurve> curves;
        std::string description;
    };

    // fig1 .. fig5; throws ValidationError for other names
    Preset preset(const std::string &name);
    std::vector<std::string> preset_names();
}

#endif
