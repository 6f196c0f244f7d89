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

#include "iftr/presets.hpp"

#include <cmath>
#include <cstdio>

#include "iftr/errors.hpp"

namespace iftr
{
    namespace
    {
        std::string shape_label(double m)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", m);
            return buf;
        }

        PresetCurve curve(double k, double delta, double m1, double m2, double mean = 1.0)
        {
            const std::string label = "K=" + shape_label(k) + " Delta=" + shape_label(delta) + " m1=" + shape_label(m1) +
                                      " m2=" + shape_label(m2);
            return {label, IftrParams{k, delta, m1, m2, mean}};
        }

        std::vector<PresetCurve> outage_family()
        {
            std::vector<PresetCurve> c;
            for (double delta : {0.1, 0.9})
                for (double k : {10.0, 80.0})
                {
                    c.push_back(curve(k, delta, 2, 8));
                    c.push_back(curve(k, delta, 8, 2));
                }
            return c;
        }
    }

    std::vector<std::string> preset_names()
    {
        return {"fig1", "fig2", "fig3", "fig4", "fig5"};
    }

    Preset preset(const std::string &name)
    {
        Preset p;
        p.name = name;
        if (name == "fig1")
        {
            p.quantity = "pdf-envelope";
            p.start = 0.01;
            p.stop = 2.5;
            p.count = 250;
            p.db_spacing = false;
            p.curves = {curve(15, 0.9, 2, 2), curve(15, 0.9, 10, 10)};
            p.description = "envelope PDF, K=15, Delta=0.9, Omega=1, m=m1=m2 in {2, 10}; FTR counterpart via sample --model ftr";
        }
        else if (name == "fig2")
        {
            p.quantity = "pdf-snr";
            p.start = 0.01;
            p.stop = 4.0;
            p.count = 400;
            p.db_spacing = false;
            for (double delta : {0.9, 0.1})
            {
                p.curves.push_back(curve(15, delta, 3, 5));
                p.curves.push_back(curve(15, delta, 5, 3));
            }
            PresetCurve rs{"Rician-shadowed K=15 m=3", IftrParams{15, 0.0, 3, INFINITY, 1.0}};
            p.curves.push_back(rs);
            p.description = "SNR PDF, mean SNR 1, K=15, Delta in {0.9, 0.1}, Rician-shadowed m=3 reference";
        }
        else if (name == "fig3")
        {
            p.quantity = "cdf-snr";
            p.start = -40.0;
            p.stop = 10.0;
            p.count = 101;
            p.db_spacing = true;
            p.curves = outage_family();
            p.description = "SNR CDF, mean SNR 1, K in {10, 80}, Delta in {0.1, 0.9}, (m1, m2) in {(2, 8), (8, 2)}";
        }
        else if (name == "fig4")
        {
            p.quantity = "ber";
            p.start = 0.0;
            p.stop = 50.0;
            p.count = 51;
            p.db_spacing = true;
            for (double m1 : {2.0, 5.0, 40.0})
                p.curves.push_back(curve(15, 0.5, m1, 2));
            p.description = "BPSK BER, K=15, Delta=0.5, m2=2, m1 in {2, 5, 40}; FTR reference with m=m1 by simulation";
        }
        else if (name == "fig5")
        {
            p.quantity = "outage";
            p.start = 0.0;
            p.stop = 50.0;
            p.count = 51;
            p.db_spacing = true;
            p.rate = 2.0;
            p.curves = outage_family();
            p.description = "outage probability, Rs=2, K in {10, 80}, Delta in {0.1, 0.9}, (m1, m2) in {(2, 8), (8, 2)}";
        }
        else
            throw ValidationError("unknown preset '" + name + "' (expected fig1 .. fig5)");
        return p;
    }
}
