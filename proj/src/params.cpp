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

#include "iftr/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "iftr/errors.hpp"

namespace iftr
{
    namespace
    {
        std::string fmt(double v)
        {
            std::ostringstream os;
            os.precision(17);
            os << v;
            return os.str();
        }

        void require(bool ok, const std::string &msg)
        {
            if (!ok)
                throw ValidationError(msg);
        }

        bool valid_shape(double m)
        {
            return m > 0.0 && !std::isnan(m);
        }

        double shape_from_json(const nlohmann::json &v, const char *name)
        {
            if (v.is_number())
                return v.get<double>();
            if (v.is_string())
            {
                const auto s = v.get<std::string>();
                if (s == "inf" || s == "Inf" || s == "infinity")
                    return std::numeric_limits<double>::infinity();
            }
            throw ValidationError(std::string("parameter '") + name + "' must be a number or \"inf\"");
        }

        nlohmann::json shape_to_json(double m)
        {
            if (std::isinf(m))
                return "inf";
            return m;
        }
    }

    DistributionDomain parse_domain(const std::string &name)
    {
        if (name == "snr")
            return DistributionDomain::snr;
        if (name == "envelope")
            return DistributionDomain::envelope;
        throw ValidationError("unknown domain '" + name + "' (expected snr or envelope)");
    }

    std::string to_string(DistributionDomain d)
    {
        return d == DistributionDomain::snr ? "snr" : "envelope";
    }

    void IftrParams::validate() const
    {
        require(std::isfinite(k) && k >= 0.0, "K must be finite and >= 0 (got " + fmt(k) + ")");
        require(std::isfinite(delta) && delta >= 0.0 && delta <= 1.0, "Delta must lie in [0, 1] (got " + fmt(delta) + ")");
        require(valid_shape(m1), "m1 must be > 0 (got " + fmt(m1) + ")");
        require(valid_shape(m2), "m2 must be > 0 (got " + fmt(m2) + ")");
        require(std::isfinite(mean_snr) && mean_snr > 0.0, "mean SNR must be finite and > 0 (got " + fmt(mean_snr) + ")");
    }

    void SpecularDecomposition::validate() const
    {
        require(std::isfinite(v1) && v1 >= 0.0, "v1 must be finite and >= 0");
        require(std::isfinite(v2) && v2 >= 0.0, "v2 must be finite and >= 0");
        require(std::isfinite(sigma2) && sigma2 > 0.0, "sigma2 must be finite and > 0");
    }

    IftrParams params_from_amplitudes(const SpecularDecomposition &d, double es_n0, double m1, double m2)
    {
        d.validate();
        require(std::isfinite(es_n0) && es_n0 > 0.0, "Es/N0 must be finite and > 0");
        const double v1 = std::max(d.v1, d.v2);
        const double v2 = std::min(d.v1, d.v2);
        const double power = v1 * v1 + v2 * v2;

        IftrParams p;
        p.k = power / (2.0 * d.sigma2);
        p.delta = power > 0.0 ? std::min(1.0, 2.0 * v1 * v2 / power) : 0.0;
        p.m1 = m1;
        p.m2 = m2;
        p.mean_snr = es_n0 * 2.0 * d.sigma2 * (1.0 + p.k);
        return p;
    }

    SpecularPowers specular_powers(double k, double delta)
    {
        // 1 - sqrt(1 - D^2) written as D^2 / (1 + sqrt(1 - D^2)) to keep precision at small D
        const double root = std::sqrt(std::max(0.0, (1.0 - delta) * (1.0 + delta)));
        return {0.5 * k * (1.0 + root), 0.5 * k * delta * delta / (1.0 + root)};
    }

    SpecularDecomposition amplitudes_from_params(const IftrParams &p, double sigma2)
    {
        p.validate();
        require(std::isfinite(sigma2) && sigma2 > 0.0, "sigma2 must be finite and > 0");
        const auto pw = specular_powers(p.k, p.delta);
        return {std::sqrt(2.0 * sigma2 * pw.strong), std::sqrt(2.0 * sigma2 * pw.weak), sigma2};
    }

    IftrParams canonicalize(const IftrParams &p)
    {
        IftrParams q = p;
        if (q.m1_on_weaker)
        {
            std::swap(q.m1, q.m2);
            q.m1_on_weaker = false;
        }
        if (q.k == 0.0)
            q.delta = 0.0;
        return q;
    }

    double linear_to_db(double linear)
    {
        require(linear > 0.0, "dB conversion requires a positive value");
        return 10.0 * std::log10(linear);
    }

    IftrParams params_from_json(const nlohmann::json &doc)
    {
        if (!doc.is_object())
            throw ValidationError("parameter document must be a JSON object");
        auto number = [&](const char *key) -> double
        {
            const auto &v = doc.at(key);
            if (!v.is_number())
                throw ValidationError(std::string("parameter '") + key + "' must be a number");
            return v.get<double>();
        };
        IftrParams p;
        try
        {
            p.k = number("K");
            p.delta = doc.contains("Delta") ? number("Delta") : 0.0;
            p.m1 = doc.contains("m1") ? shape_from_json(doc.at("m1"), "m1") : std::numeric_limits<double>::infinity();
            p.m2 = doc.contains("m2") ? shape_from_json(doc.at("m2"), "m2") : std::numeric_limits<double>::infinity();
        }
        catch (const nlohmann::json::out_of_range &e)
        {
            throw ValidationError(std::string("parameter document: ") + e.what());
        }
        if (doc.contains("mean_snr_db"))
            p.mean_snr = db_to_linear(number("mean_snr_db"));
        else if (doc.contains("mean_snr"))
            p.mean_snr = number("mean_snr");
        else if (doc.contains("Omega"))
            p.mean_snr = number("Omega");
        else
            p.mean_snr = 1.0;
        if (doc.contains("m1_on_weaker"))
            p.m1_on_weaker = doc.at("m1_on_weaker").get<bool>();
        p.validate();
        return p;
    }

    nlohmann::json params_to_json(const IftrParams &p)
    {
        nlohmann::json j;
        j["K"] = p.k;
        j["Delta"] = p.delta;
        j["m1"] = shape_to_json(p.m1);
        j["m2"] = shape_to_json(p.m2);
        j["mean_snr_db"] = linear_to_db(p.mean_snr);
        if (p.m1_on_weaker)
            j["m1_on_weaker"] = true;
        return j;
    }

    std::string version()
    {
        return IFTR_VERSION;
    }

    double q_function(double x)
    {
        return 0.5 * std::erfc(x / std::numbers::sqrt2);
    }

    ModulationSpec::ModulationSpec(std::vector<ModulationTerm> terms) : terms_(std::move(terms))
    {
        require(!terms_.empty(), "modulation needs at least one (alpha, beta) term");
        for (const auto &t : terms_)
        {
            require(std::isfinite(t.alpha), "modulation weight alpha must be finite");
            require(std::isfinite(t.beta) && t.beta > 0.0, "modulation scale beta must be > 0");
        }
        // CEP must be a probability on 0 and a log grid spanning 1e-4 .. 1e4
        for (int i = -1; i <= 80; ++i)
        {
            const double g = (i < 0) ? 0.0 : std::pow(10.0, -4.0 + 0.1 * i);
            const double pe = cep(g);
            require(pe >= -1e-15 && pe <= 1.0 + 1e-15, "modulation CEP leaves [0, 1] at gamma = " + fmt(g));
        }
    }

    ModulationSpec ModulationSpec::bpsk()
    {
        return ModulationSpec({{1.0, 2.0}});
    }

    double ModulationSpec::cep(double gamma) const
    {
        double sum = 0.0;
        for (const auto &t : terms_)
            sum += t.alpha * q_function(std::sqrt(t.beta * gamma));
        return sum;
    }
}
