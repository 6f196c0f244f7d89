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

#include "iftr/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <numbers>

#include "iftr/errors.hpp"
#include "iftr/quadrature.hpp"

namespace iftr::specfun
{
    namespace
    {
        constexpr double eps = std::numeric_limits<double>::epsilon();
        constexpr int series_budget = 200000;
        constexpr int step_budget = 200000;
        constexpr int taylor_budget = 600;

        // value * exp(log_scale)
        struct Scaled
        {
            cdouble value;
            double log_scale;
        };

        // Power series of 2F1 and its derivative at z
        void hyp2f1_series(double a, double b, double c, cdouble z, cdouble &w, cdouble &dw)
        {
            cdouble term = 1.0, sum = 1.0, dsum = 0.0;
            for (int n = 0; n < series_budget; ++n)
            {
                term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
                sum += term;
                dsum += term * double(n + 1);
                if (std::abs(term) * (n + 1.0) <= 0.25 * eps * std::abs(sum) && n > 2)
                {
                    w = sum;
                    dw = (z == 0.0) ? cdouble(a * b / c) : dsum / z;
                    return;
                }
                if (term == 0.0)
                {
                    w = sum;
                    dw = (z == 0.0) ? cdouble(a * b / c) : dsum / z;
                    return;
                }
            }
            throw NumericalError("gauss_2f1: power series did not converge");
        }

        // Direct power series when it converges quickly without heavy cancellation
        bool hyp2f1_direct(double a, double b, double c, cdouble z, cdouble &w)
        {
            if (std::abs(z) > 0.6)
                return false;
            cdouble term = 1.0, sum = 1.0;
            double peak = 1.0;
            for (int n = 0; n < 400; ++n)
            {
                term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
                sum += term;
                peak = std::max(peak, std::abs(term));
                if ((std::abs(term) <= 0.25 * eps * std::abs(sum) && n > 2) || term == 0.0)
                {
                    w = sum;
                    return peak <= 1e3 * std::abs(sum);
                }
            }
            return false;
        }

        // Radius around the origin where the power series is well conditioned
        double series_radius(double a, double b, double c)
        {
            return std::min(0.25, 0.25 * std::abs(c) / std::max(1.0, std::abs(a * b)));
        }

        // Analytic continuation of 2F1 along the ray from the origin to z by Taylor
        // stepping of z(1-z) w'' + [c - (a+b+1) z] w' - a b w = 0.
        Scaled hyp2f1_continued(double a, double b, double c, cdouble z)
        {
            const double r0 = series_radius(a, b, c);
            const double az = std::abs(z);
            cdouble w, dw;
            if (az <= r0)
            {
                hyp2f1_series(a, b, c, z, w, dw);
                return {w, 0.0};
            }
            cdouble zc = z * (r0 / az);
            hyp2f1_series(a, b, c, zc, w, dw);

            const double q1 = -(a + b + 1.0);
            const double r = -a * b;
            double log_scale = 0.0;
            std::vector<cdouble> coef;
            coef.reserve(taylor_budget + 2);

            for (int step = 0; step < step_budget; ++step)
            {
                const cdouble rem = z - zc;
                const cdouble p0 = zc * (1.0 - zc);
                const cdouble p1 = 1.0 - 2.0 * zc;
                const cdouble q0 = c + q1 * zc;
                const double ap0 = std::abs(p0);

                double rho = 0.5 * std::min(std::abs(zc), std::abs(1.0 - zc));
                if (r != 0.0)
                    rho = std::min(rho, 1.5 / std::sqrt(std::abs(r) / ap0));
                if (std::abs(q0) > 0.0)
                    rho = std::min(rho, 8.0 * ap0 / std::abs(q0));
                if (!(rho > 0.0))
                    throw NumericalError("gauss_2f1: continuation path hits a singular point");

                const bool last = std::abs(rem) <= rho;
                const cdouble h = last ? rem : rem * (rho / std::abs(rem));

                coef.assign({w, dw});
                cdouble val = w + dw * h;
                cdouble der = dw;
                cdouble hk = h; // h^(k+1) after the update below
                int quiet = 0;
                int k = 0;
                for (; k < taylor_budget; ++k)
                {
                    const cdouble next = -((p1 * double(k) + q0) * double(k + 1) * coef[k + 1] +
                                           (-double(k) * (k - 1) + q1 * k + r) * coef[k]) /
                                         (p0 * double((k + 2) * (k + 1)));
                    coef.push_back(next);
                    const cdouble dterm = double(k + 2) * next * hk;
                    hk *= h;
                    const cdouble term = next * hk;
                    val += term;
                    der += dterm;
                    if (std::abs(term) <= eps * std::abs(val) && std::abs(dterm) <= eps * std::abs(der))
                    {
                        if (++quiet == 3)
                            break;
                    }
                    else
                        quiet = 0;
                }
                if (k == taylor_budget)
                    throw NumericalError("gauss_2f1: Taylor step did not converge");

                w = val;
                dw = der;
                zc += h;

                const double mag = std::abs(w);
                if (mag > 1e100 || (mag < 1e-100 && mag > 0.0))
                {
                    log_scale += std::log(mag);
                    w /= mag;
                    dw /= mag;
                }
                if (last)
                    return {w, log_scale};
            }
            throw NumericalError("gauss_2f1: continuation step budget exhausted");
        }

        cdouble unscale(const Scaled &s)
        {
            if (s.log_scale == 0.0)
                return s.value;
            if (s.log_scale > 700.0)
                throw NumericalError("gauss_2f1: result overflows double precision");
            return s.value * std::exp(s.log_scale);
        }

        double hyp2f1_real_series(double a, double b, double c, double z, bool &ok)
        {
            double term = 1.0, sum = 1.0;
            for (int n = 0; n < series_budget; ++n)
            {
                term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
                sum += term;
                if (!std::isfinite(sum))
                    break;
                if ((std::abs(term) <= 0.25 * eps * std::abs(sum) && n > 2) || term == 0.0)
                {
                    ok = true;
                    return sum;
                }
            }
            ok = false;
            return 0.0;
        }

        bool non_positive_integer(double c)
        {
            return c <= 0.0 && c == std::floor(c);
        }
    }

    double log_gamma(double x)
    {
#if defined(__GLIBC__)
        int sign = 0;
        return ::lgamma_r(x, &sign);
#else
        return std::lgamma(x);
#endif
    }

    double log_binomial(int n, int k)
    {
        return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
    }

    cdouble log1p(cdouble u)
    {
        const cdouble w = 1.0 + u;
        if (w == 1.0)
            return u;
        return std::log(w) * (u / (w - 1.0));
    }

    double gauss_2f1(double a, double b, double c, double z)
    {
        if (non_positive_integer(c))
            throw ValidationError("gauss_2f1: c must not be a non-positive integer");
        if (!(z < 1.0) || !std::isfinite(z))
            throw ValidationError("gauss_2f1: real argument must satisfy z < 1");
        if (z == 0.0)
            return 1.0;
        if (z < 0.0)
        {
            // Pfaff: (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) with z/(z-1) in (0, 1)
            const double zt = z / (z - 1.0);
            return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, zt);
        }
        if (z < 0.9)
        {
            bool ok = false;
            const double s = hyp2f1_real_series(a, b, c, z, ok);
            if (ok)
                return s;
        }
        return unscale(hyp2f1_continued(a, b, c, cdouble(z, 0.0))).real();
    }

    cdouble gauss_2f1(double a, double b, double c, cdouble z)
    {
        if (non_positive_integer(c))
            throw ValidationError("gauss_2f1: c must not be a non-positive integer");
        if (z.imag() == 0.0)
        {
            if (!(z.real() >= 1.0))
                return gauss_2f1(a, b, c, z.real());
            throw ValidationError("gauss_2f1: argument lies on the branch cut [1, inf)");
        }
        return unscale(hyp2f1_continued(a, b, c, z));
    }

    cdouble log_gauss_2f1(double a, double b, double c, cdouble z)
    {
        if (z.imag() == 0.0 && z.real() >= 1.0)
            throw ValidationError("gauss_2f1: argument lies on the branch cut [1, inf)");
        if (z == 0.0)
            return 0.0;
        cdouble w;
        if (hyp2f1_direct(a, b, c, z, w))
            return std::log(w);
        const Scaled s = hyp2f1_continued(a, b, c, z);
        return std::log(s.value) + s.log_scale;
    }

    double kummer_1f1(int m, double z)
    {
        if (m < 1)
            throw ValidationError("kummer_1f1: m must be a positive integer");
        if (std::abs(z) > 700.0)
        {
            const double lv = log_kummer_1f1(m, z);
            if (lv > 709.0)
                throw NumericalError("kummer_1f1: result overflows double precision");
            return std::exp(lv);
        }
        // e^z sum_n C(m-1, n) z^n / n!, with the term recurrence
        // t_{n+1} = t_n (m-1-n) z / (n+1)^2
        double term = 1.0, sum = 1.0;
        for (int n = 0; n < m - 1; ++n)
        {
            term *= (m - 1.0 - n) * z / ((n + 1.0) * (n + 1.0));
            sum += term;
        }
        return std::exp(z) * sum;
    }

    cdouble kummer_1f1(int m, cdouble z)
    {
        if (m < 1)
            throw ValidationError("kummer_1f1: m must be a positive integer");
        cdouble term = 1.0, sum = 1.0;
        for (int n = 0; n < m - 1; ++n)
        {
            term *= (m - 1.0 - n) * z / ((n + 1.0) * (n + 1.0));
            sum += term;
        }
        return std::exp(z) * sum;
    }

    double log_kummer_1f1(int m, double z)
    {
        if (m < 1)
            throw ValidationError("kummer_1f1: m must be a positive integer");
        if (z >= 0.0)
        {
            // All terms positive: log-sum-exp over log t_n
            double lt = 0.0, lmax = 0.0;
            std::vector<double> logs{0.0};
            const double lz = (z > 0.0) ? std::log(z) : -std::numeric_limits<double>::infinity();
            for (int n = 0; n < m - 1 && z > 0.0; ++n)
            {
                lt += std::log(m - 1.0 - n) + lz - 2.0 * std::log(n + 1.0);
                logs.push_back(lt);
                lmax = std::max(lmax, lt);
            }
            double acc = 0.0;
            for (double l : logs)
                acc += std::exp(l - lmax);
            return z + lmax + std::log(acc);
        }
        double term = 1.0, sum = 1.0;
        for (int n = 0; n < m - 1; ++n)
        {
            term *= (m - 1.0 - n) * z / ((n + 1.0) * (n + 1.0));
            sum += term;
        }
        if (!(sum > 0.0))
            throw NumericalError("log_kummer_1f1: function value is not positive");
        return z + std::log(sum);
    }

    // ---- Bessel I0 -----------------------------------------------------------

    namespace
    {
        constexpr double bessel_switch = 20.0;

        // exp(-|x|) I0(x) from the ascending series, |x| <= bessel_switch
        double i0e_series(double x)
        {
            const double q = 0.25 * x * x;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                term *= q / (double(k) * k);
                sum += term;
                if (term < eps * sum)
                    break;
            }
            return sum * std::exp(-std::abs(x));
        }

        // Hankel expansion for x > bessel_switch, scaled by exp(-x)
        double i0e_asymptotic(double x)
        {
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
                if (next > term)
                    break;
                term = next;
                sum += term;
                if (term < eps * sum)
                    break;
            }
            return sum / std::sqrt(2.0 * std::numbers::pi * x);
        }

        // Trapezoidal rule on (1/pi) int_0^pi exp(z cos t) dt, scaled by exp(-|Re z|).
        // The periodic integrand makes the rule exact up to I_{2N}(z).
        cdouble i0e_trapezoid(cdouble z)
        {
            const double shift = std::abs(z.real());
            constexpr int n = 96;
            cdouble sum = 0.0;
            for (int j = 0; j < n; ++j)
            {
                const double t = std::numbers::pi * (j + 0.5) / n;
                sum += std::exp(z * std::cos(t) - shift);
            }
            return sum / double(n);
        }

        // DLMF 10.40.5 with both exponentials, valid for Re z >= 0, |z| > bessel_switch
        cdouble i0e_asymptotic(cdouble z)
        {
            cdouble t = 1.0, dominant = 1.0, recessive = 1.0;
            double prev = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                t *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k) / z;
                const double mag = std::abs(t);
                if (mag > prev)
                    break;
                prev = mag;
                dominant += t;
                recessive += (k % 2 == 1) ? -t : t;
                if (mag < eps)
                    break;
            }
            const cdouble root = std::sqrt(2.0 * std::numbers::pi * z);
            const cdouble sign = (z.imag() >= 0.0) ? cdouble(0.0, 1.0) : cdouble(0.0, -1.0);
            // exp(z - Re z) = exp(i Im z), exp(-z - Re z)
            return (std::exp(cdouble(0.0, z.imag())) * dominant + sign * std::exp(-z - z.real()) * recessive) / root;
        }
    }

    double bessel_i0e(double x)
    {
        const double ax = std::abs(x);
        return ax <= bessel_switch ? i0e_series(ax) : i0e_asymptotic(ax);
    }

    double bessel_i0(double x)
    {
        const double ax = std::abs(x);
        if (ax <= bessel_switch)
        {
            const double q = 0.25 * x * x;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                term *= q / (double(k) * k);
                sum += term;
                if (term < eps * sum)
                    break;
            }
            return sum;
        }
        return i0e_asymptotic(ax) * std::exp(ax);
    }

    cdouble bessel_i0e(cdouble z)
    {
        if (z.imag() == 0.0)
            return bessel_i0e(z.real());
        const cdouble zr = (z.real() < 0.0) ? -z : z; // I0 is even
        if (std::abs(zr) <= bessel_switch)
            return i0e_trapezoid(zr);
        return i0e_asymptotic(zr);
    }

    cdouble bessel_i0(cdouble z)
    {
        return bessel_i0e(z) * std::exp(std::abs(z.real()));
    }

    // ---- Lauricella F_D ------------------------------------------------------

    double lauricella_fd3(double a, double b1, double b2, double b3, double c, double x, double y, double z)
    {
        if (!(c > a && a > 0.0))
            throw ValidationError("lauricella_fd3: requires c > a > 0");
        if (!(x < 1.0 && y < 1.0 && z < 1.0))
            throw ValidationError("lauricella_fd3: arguments must be below 1");

        // t = sin^2(theta):  t^(a-1) (1-t)^(c-a-1) dt = 2 sin^(2a-1) cos^(2c-2a-1) dtheta
        const double ps = 2.0 * a - 1.0;
        const double pc = 2.0 * (c - a) - 1.0;
        auto integrand = [&](double theta)
        {
            const double s = std::sin(theta), co = std::cos(theta);
            const double t = s * s;
            double lg = 0.0;
            if (b1 != 0.0)
                lg -= b1 * std::log1p(-x * t);
            if (b2 != 0.0)
                lg -= b2 * std::log1p(-y * t);
            if (b3 != 0.0)
                lg -= b3 * std::log1p(-z * t);
            const double ws = (ps == 0.0) ? 1.0 : std::pow(s, ps);
            const double wc = (pc == 0.0) ? 1.0 : std::pow(co, pc);
            return 2.0 * ws * wc * std::exp(lg);
        };
        const auto r = quadrature::integrate(integrand, 0.0, 0.5 * std::numbers::pi, 1e-13, 0.0, 4000);
        if (!r.converged && r.abs_error > 1e-10 * std::abs(r.value))
            throw NumericalError("lauricella_fd3: quadrature did not converge");
        const double log_norm = log_gamma(c) - log_gamma(a) - log_gamma(c - a);
        return std::exp(log_norm) * r.value;
    }
}
