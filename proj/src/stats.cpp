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

#include "iftr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "iftr/errors.hpp"
#include "iftr/specfun.hpp"

namespace iftr
{
    namespace
    {
        using specfun::log1p;

        // Finite stand-in for a shape beyond shape_limit: large enough that the
        // fluctuation is invisible at double precision, small enough for the series
        double surrogate_shape(double c) { return std::max(1e15, 1e8 * c * c); }

        bool is_integer_shape(double m)
        {
            return m >= 1.0 && m <= shape_limit && m == std::floor(m);
        }

        // log(I0(z)) for complex z
        cdouble log_i0(cdouble z)
        {
            return std::log(specfun::bessel_i0e(z)) + std::abs(z.real());
        }

        // log(M(s) / B(s)) as a function of A(s)
        cdouble log_shape(const IftrDerived &d, cdouble a)
        {
            const double ka = d.k_m1, kb = d.k_m2;
            if (ka == 0.0 && kb == 0.0)
                return 0.0;
            if (d.m1_limit && d.m2_limit)
                return (ka + kb) * a + log_i0(2.0 * std::sqrt(ka * kb) * a);

            const double m1 = d.m1_limit ? surrogate_shape(d.c) : d.m1;
            const double m2 = d.m2_limit ? surrogate_shape(d.c) : d.m2;
            const cdouble u1 = -ka * a / m1;
            const cdouble u2 = -kb * a / m2;
            cdouble lg = -m1 * log1p(u1) - m2 * log1p(u2);
            if (ka > 0.0 && kb > 0.0 && a != 0.0)
            {
                const cdouble z = (ka / m1) * (kb / m2) * a * a / ((1.0 + u1) * (1.0 + u2));
                lg += specfun::log_gauss_2f1(m1, m2, 1.0, z);
            }
            return lg;
        }

        struct Bilinear
        {
            cdouble a;
            cdouble log_b;
        };

        Bilinear bilinear(double c, double mean, cdouble s)
        {
            const cdouble den = c - mean * s;
            if (std::abs(den) < 1e-12)
                throw SingularityError("MGF evaluated at its pole s = (1 + K) / mean");
            return {mean * s / den, std::log(c / den)};
        }

        // Integer shape first: (m_int, k_int, m_other, k_other)
        struct IntegerPair
        {
            int mi;
            double ki;
            double mo;
            double ko;
            bool other_limit;
        };

        IntegerPair integer_pair(const IftrDerived &d)
        {
            if (is_integer_shape(d.m1))
                return {int(d.m1), d.k_m1, d.m2, d.k_m2, d.m2_limit};
            if (is_integer_shape(d.m2))
                return {int(d.m2), d.k_m2, d.m1, d.k_m1, d.m1_limit};
            throw ValidationError("finite-sum form needs an integer shape m1 or m2 in [1, 1e6]");
        }

        cdouble log_sum_exp(const std::vector<cdouble> &logs)
        {
            double top = -INFINITY;
            for (const auto &l : logs)
                top = std::max(top, l.real());
            cdouble sum = 0.0;
            for (const auto &l : logs)
                sum += std::exp(l - top);
            return top + std::log(sum);
        }

        void check_abscissa(double x)
        {
            if (!(x >= 0.0) || std::isnan(x))
                throw ValidationError("abscissa must be >= 0");
        }

        template <typename SnrPdf>
        StatValue envelope_pdf(double r, SnrPdf &&f)
        {
            if (r == 0.0)
                return {};
            StatValue v = f(r * r);
            v.value *= 2.0 * r;
            v.est_error *= 2.0 * r;
            return v;
        }

        StatValue from_inversion(const specfun::InversionResult &r, bool density)
        {
            StatValue v{r.value, r.est_error, r.tolerance_met, r.clamped};
            if (density && v.value < 0.0)
            {
                v.value = 0.0;
                v.clamped = 1;
            }
            return v;
        }
    }

    IftrDerived IftrDerived::from(const IftrParams &p)
    {
        p.validate();
        IftrDerived d;
        const auto pw = specular_powers(p.k, p.delta);
        d.c = 1.0 + p.k;
        d.mean = p.mean_snr;
        d.m1 = p.m1;
        d.m2 = p.m2;
        d.k_m1 = p.m1_on_weaker ? pw.weak : pw.strong;
        d.k_m2 = p.m1_on_weaker ? pw.strong : pw.weak;
        d.m1_limit = p.m1 > shape_limit;
        d.m2_limit = p.m2 > shape_limit;
        d.a1 = d.m1 + d.k_m1;
        d.a2 = d.m1 * d.k_m2 + d.m2 * d.k_m1 + d.m1 * d.m2;

        const double x1 = d.m1_limit ? 0.0 : d.k_m1 / d.m1;
        const double x2 = d.m2_limit ? 0.0 : d.k_m2 / d.m2;
        const double r1 = d.c / d.mean;
        d.rates = {r1, r1 / (1.0 + x1), r1 / (1.0 + x1 + x2)};

        if (!d.m1_limit && !d.m2_limit)
            d.log_prefactors[0] = d.m1 * std::log(d.m1) + d.m2 * std::log(d.m2) + (d.m2 - d.m1) * std::log(d.a1);
        d.log_prefactors[1] = std::log(d.c / d.mean);
        return d;
    }

    cdouble mgf(const IftrParams &p, cdouble s)
    {
        const auto d = IftrDerived::from(p);
        const auto b = bilinear(d.c, d.mean, s);
        return std::exp(b.log_b + log_shape(d, b.a));
    }

    cdouble mgf_integer_m1(const IftrParams &p, cdouble s)
    {
        const auto d = IftrDerived::from(p);
        const auto ip = integer_pair(d);
        const auto b = bilinear(d.c, d.mean, s);
        if (ip.ki == 0.0 && ip.ko == 0.0)
            return std::exp(b.log_b);

        const double mo = ip.other_limit ? surrogate_shape(d.c) : ip.mo;
        const double mi = ip.mi;
        const cdouble u = -ip.ki * b.a / mi;
        const cdouble v = -ip.ko * b.a / mo;
        cdouble lg = b.log_b - mi * log1p(u) - mo * log1p(v / (1.0 + u));

        if (ip.ki > 0.0 && ip.ko > 0.0 && b.a != 0.0 && ip.mi > 1)
        {
            const cdouble log_q = std::log((ip.ki / mi) * (ip.ko / mo) * b.a * b.a / (1.0 + u + v));
            std::vector<cdouble> terms(ip.mi);
            terms[0] = 0.0;
            for (int n = 0; n + 1 < ip.mi; ++n)
                terms[n + 1] = terms[n] + std::log((mi - 1.0 - n) * (mo + n) / ((n + 1.0) * (n + 1.0))) + log_q;
            lg += log_sum_exp(terms);
        }
        return std::exp(lg);
    }

    cdouble twdp_limit_mgf(double k, double delta, double mean_snr, cdouble s)
    {
        IftrParams p{k, delta, INFINITY, INFINITY, mean_snr};
        return mgf(p, s);
    }

    cdouble rice_mgf(double k, double mean_snr, cdouble s)
    {
        return twdp_limit_mgf(k, 0.0, mean_snr, s);
    }

    cdouble rician_shadowed_mgf(double k, double m, double mean_snr, cdouble s)
    {
        IftrParams p{k, 0.0, m, INFINITY, mean_snr};
        p.validate();
        if (m > shape_limit)
            return rice_mgf(k, mean_snr, s);
        const auto b = bilinear(1.0 + k, mean_snr, s);
        return std::exp(b.log_b - m * log1p(-k * b.a / m));
    }

    double cdf_asymptotic_slope(const IftrParams &p)
    {
        const auto d = IftrDerived::from(p);
        return std::exp(d.log_prefactors[1] + log_shape(d, -1.0).real());
    }

    IftrDistribution::IftrDistribution(const IftrParams &p, specfun::LaplaceInversionConfig cfg)
        : params_(p), derived_(IftrDerived::from(p)), cfg_(cfg)
    {
        cfg_.validate();
    }

    cdouble IftrDistribution::mgf(cdouble s) const
    {
        const auto b = bilinear(derived_.c, derived_.mean, s);
        return std::exp(b.log_b + log_shape(derived_, b.a));
    }

    StatValue IftrDistribution::pdf(double x, DistributionDomain domain) const
    {
        check_abscissa(x);
        if (domain == DistributionDomain::envelope)
            return envelope_pdf(x, [&](double g) { return pdf(g, DistributionDomain::snr); });
        if (x == 0.0)
            return {std::exp(derived_.log_prefactors[1] + log_shape(derived_, -1.0).real())};
        if (std::isinf(x))
            return {};
        const double shift = derived_.contour_shift();
        if (!(shift < 0.0 && -shift < derived_.rates[2]))
            throw NumericalError("density contour shift is not right of the nearest singularity");
        const auto rule = specfun::InversionRule::density(x, cfg_, shift);
        return from_inversion(rule.apply([&](cdouble p) { return transform(p); }), true);
    }

    StatValue IftrDistribution::cdf(double x, DistributionDomain domain) const
    {
        check_abscissa(x);
        if (domain == DistributionDomain::envelope)
            x = x * x;
        if (x == 0.0)
            return {};
        if (std::isinf(x))
            return {1.0};
        if (x >= derived_.mean)
        {
            auto v = ccdf(x, DistributionDomain::snr);
            v.value = 1.0 - v.value;
            return v;
        }
        return cdf(specfun::InversionRule::cdf(x, cfg_));
    }

    StatValue IftrDistribution::ccdf(double x, DistributionDomain domain) const
    {
        check_abscissa(x);
        if (domain == DistributionDomain::envelope)
            x = x * x;
        if (x == 0.0)
            return {1.0};
        if (std::isinf(x))
            return {};
        // (1 - M(-p)) / p is regular at p = 0, so the contour can move left as for the density
        const auto rule = specfun::InversionRule::density(x, cfg_, derived_.contour_shift());
        const double tiny = 1e-8 * derived_.rates[2];
        auto v = from_inversion(rule.apply(
                                    [&](cdouble p)
                                    {
                                        if (std::abs(p) < tiny)
                                            return cdouble(derived_.mean);
                                        return (1.0 - transform(p)) / p;
                                    }),
                                true);
        if (v.value > 1.0)
        {
            v.value = 1.0;
            v.clamped = 1;
        }
        return v;
    }

    StatValue IftrDistribution::cdf(const specfun::InversionRule &rule) const
    {
        return from_inversion(rule.apply([&](cdouble p) { return transform(p); }), false);
    }

    StatValue pdf(const IftrParams &p, double x, DistributionDomain domain, const specfun::LaplaceInversionConfig &cfg)
    {
        return IftrDistribution(p, cfg).pdf(x, domain);
    }

    StatValue cdf(const IftrParams &p, double x, DistributionDomain domain, const specfun::LaplaceInversionConfig &cfg)
    {
        return IftrDistribution(p, cfg).cdf(x, domain);
    }

    StatValue ccdf(const IftrParams &p, double x, DistributionDomain domain, const specfun::LaplaceInversionConfig &cfg)
    {
        return IftrDistribution(p, cfg).ccdf(x, domain);
    }

    Phi2Expansion phi2_expansion(const IftrParams &p)
    {
        const auto d = IftrDerived::from(p);
        const auto ip = integer_pair(d);
        if (ip.other_limit)
            throw ValidationError("closed form needs finite shapes (<= 1e6)");
        const double mi = ip.mi, mo = ip.mo;
        const double a1 = mi + ip.ki;
        const double a2 = mi * ip.ko + mo * ip.ki + mi * mo;
        const double r1 = d.c / d.mean;

        Phi2Expansion e;
        e.rates = {r1, r1 * mi / a1, r1 * mi * mo / a2};
        const double base = std::log(d.c / d.mean) + mi * std::log(mi / a1) - mo * std::log1p(mi * ip.ko / (mo * a1));
        const int terms = (ip.ki * ip.ko > 0.0) ? ip.mi : 1;
        double rising = 0.0; // log Gamma(mo + n) / Gamma(mo)
        for (int n = 0; n < terms; ++n)
        {
            double lw = base + specfun::log_binomial(ip.mi - 1, n) - specfun::log_gamma(n + 1.0) + rising - n * std::log(a2);
            if (n > 0)
                lw += n * std::log(ip.ki * ip.ko);
            e.terms.push_back({std::exp(lw), {n + 1.0 - mi, mi - mo, mo + n}});
            rising += std::log(mo + n);
        }
        return e;
    }

    namespace
    {
        // c = 1 gives the density, c = 2 the CDF
        StatValue closed_form(const IftrParams &p, double x, double c, const specfun::LaplaceInversionConfig &cfg)
        {
            const auto e = phi2_expansion(p);
            const std::array<double, 3> y = {-e.rates[0] * x, -e.rates[1] * x, -e.rates[2] * x};
            StatValue out;
            for (const auto &t : e.terms)
                out.value += t.weight * (c == 2.0 ? x : 1.0) * specfun::confluent_phi2(t.b, c, y, cfg);
            out.est_error = std::abs(out.value) * cfg.precision_target;
            if (c == 2.0)
                out.value = std::clamp(out.value, 0.0, 1.0);
            return out;
        }
    }

    StatValue pdf_integer_m1(const IftrParams &p, double x, DistributionDomain domain, const specfun::LaplaceInversionConfig &cfg)
    {
        check_abscissa(x);
        if (domain == DistributionDomain::envelope)
            return envelope_pdf(x, [&](double g) { return pdf_integer_m1(p, g, DistributionDomain::snr, cfg); });
        if (x == 0.0)
            return {cdf_asymptotic_slope(p)};
        return closed_form(p, x, 1.0, cfg);
    }

    StatValue cdf_integer_m1(const IftrParams &p, double x, DistributionDomain domain, const specfun::LaplaceInversionConfig &cfg)
    {
        check_abscissa(x);
        if (domain == DistributionDomain::envelope)
            x = x * x;
        if (x == 0.0)
            return {};
        return closed_form(p, x, 2.0, cfg);
    }
}
