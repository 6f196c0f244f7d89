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

#include "iftr/link.hpp"

#include <cmath>
#include <numbers>

#include "iftr/errors.hpp"
#include "iftr/quadrature.hpp"
#include "iftr/sim.hpp"
#include "iftr/specfun.hpp"

namespace iftr
{
    namespace
    {
        void check_rate(double rate)
        {
            if (!(rate > 0.0) || !std::isfinite(rate))
                throw ValidationError("rate threshold must be finite and > 0");
        }
    }

    std::string to_string(BerMethod m)
    {
        switch (m)
        {
        case BerMethod::lauricella_exact: return "lauricella-exact";
        case BerMethod::mgf_quadrature: return "mgf-quadrature";
        case BerMethod::asymptotic: return "asymptotic";
        case BerMethod::monte_carlo: return "monte-carlo";
        }
        return "lauricella-exact";
    }

    BerResult ber_exact(const IftrParams &p, const ModulationSpec &mod)
    {
        Phi2Expansion e;
        try
        {
            e = phi2_expansion(p);
        }
        catch (const ValidationError &)
        {
            p.validate();
            auto r = ber_mgf_quadrature(p, mod);
            r.notice = "no integer shape with a finite partner; exact form unavailable, used MGF quadrature";
            return r;
        }
        BerResult r;
        for (const auto &t : mod.terms())
        {
            double sum = 0.0;
            for (const auto &term : e.terms)
            {
                const double w = -2.0 / t.beta;
                sum += term.weight * specfun::lauricella_fd3(1.5, term.b[0], term.b[1], term.b[2], 2.0,
                                                             w * e.rates[0], w * e.rates[1], w * e.rates[2]);
            }
            r.value += t.alpha / (2.0 * t.beta) * sum;
        }
        r.method = BerMethod::lauricella_exact;
        r.est_error = 1e-9;
        return r;
    }

    BerResult ber_mgf_quadrature(const IftrParams &p, const ModulationSpec &mod)
    {
        const IftrDistribution dist(p);
        BerResult r;
        r.method = BerMethod::mgf_quadrature;
        bool converged = true;
        double err = 0.0;
        for (const auto &t : mod.terms())
        {
            const auto q = quadrature::integrate(
                [&](double th)
                {
                    const double s = std::sin(th);
                    return dist.mgf(-t.beta / (2.0 * s * s)).real();
                },
                0.0, 0.5 * std::numbers::pi, 1e-11);
            r.value += t.alpha * q.value / std::numbers::pi;
            err += std::abs(t.alpha) * q.abs_error / std::numbers::pi;
            converged = converged && q.converged;
        }
        r.est_error = r.value != 0.0 ? err / std::abs(r.value) : err;
        if (!converged)
            throw NumericalError("BER quadrature did not converge");
        return r;
    }

    BerResult ber_asymptotic(const IftrParams &p, const ModulationSpec &mod)
    {
        double sum = 0.0;
        for (const auto &t : mod.terms())
            sum += t.alpha / t.beta;
        BerResult r;
        r.method = BerMethod::asymptotic;
        r.value = 0.5 * cdf_asymptotic_slope(p) * sum;
        return r;
    }

    BerResult ber_monte_carlo(const IftrParams &p, const ModulationSpec &mod, std::size_t n, std::uint64_t seed)
    {
        SimConfig cfg;
        cfg.n_samples = n;
        cfg.seed = seed;
        cfg.output = SimOutput::snr;
        const auto est = cep_average(sample_iftr(p, cfg).values, mod);
        BerResult r;
        r.method = BerMethod::monte_carlo;
        r.value = est.value;
        r.standard_error = est.standard_error;
        r.est_error = est.value > 0.0 ? est.standard_error / est.value : 0.0;
        return r;
    }

    MonteCarloEstimate cep_average(const std::vector<double> &snr, const ModulationSpec &mod)
    {
        if (snr.empty())
            throw ValidationError("no SNR samples");
        // Welford accumulation in index order keeps the result thread-count independent
        double mean = 0.0, m2 = 0.0;
        std::size_t k = 0;
        for (double g : snr)
        {
            const double e = mod.cep(g);
            ++k;
            const double d = e - mean;
            mean += d / double(k);
            m2 += d * (e - mean);
        }
        const double n = double(snr.size());
        return {mean, snr.size() > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0};
    }

    StatValue outage(const IftrParams &p, double rate_threshold, const specfun::LaplaceInversionConfig &cfg)
    {
        check_rate(rate_threshold);
        return cdf(p, std::exp2(rate_threshold) - 1.0, DistributionDomain::snr, cfg);
    }

    double outage_asymptotic(const IftrParams &p, double rate_threshold)
    {
        check_rate(rate_threshold);
        return cdf_asymptotic_slope(p) * (std::exp2(rate_threshold) - 1.0);
    }

    MonteCarloEstimate outage_monte_carlo(const IftrParams &p, double rate_threshold, std::size_t n, std::uint64_t seed)
    {
        check_rate(rate_threshold);
        SimConfig cfg;
        cfg.n_samples = n;
        cfg.seed = seed;
        const auto s = sample_iftr(p, cfg);
        const double th = std::exp2(rate_threshold) - 1.0;
        std::size_t below = 0;
        for (double g : s.values)
            below += g < th;
        const double f = double(below) / double(n);
        return {f, std::sqrt(f * (1.0 - f) / double(n))};
    }
}
