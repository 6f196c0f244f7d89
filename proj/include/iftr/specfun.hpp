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

#ifndef IFTR_SPECFUN_HPP
#define IFTR_SPECFUN_HPP

#include <complex>

namespace iftr::specfun
{
    using cdouble = std::complex<double>;

    // Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
    // Power series for 0 <= z < 0.9, Pfaff transformation for z < 0 and analytic
    // continuation of the hypergeometric ODE by Taylor stepping for 0.9 <= z < 1.
    // Throws NumericalError when the node budget is exhausted.
    double gauss_2f1(double a, double b, double c, double z);

    // Complex argument, any z off the cut [1, inf). Series near the origin, otherwise
    // Taylor stepping of the ODE along the ray from the origin.
    cdouble gauss_2f1(double a, double b, double c, cdouble z);

    // log 2F1(a, b; c; z) for complex z off the cut; immune to overflow of the value
    cdouble log_gauss_2f1(double a, double b, double c, cdouble z);

    // 1F1(m; 1; z) for integer m >= 1 via the finite sum e^z sum_n C(m-1, n) z^n / n!.
    // Computed in log space for |z| > 700; throws NumericalError on overflow.
    double kummer_1f1(int m, double z);
    cdouble kummer_1f1(int m, cdouble z);

    // log of 1F1(m; 1; z) for integer m and real z
    double log_kummer_1f1(int m, double z);

    // Modified Bessel function I0. The scaled variants return I0(z) exp(-|Re z|).
    double bessel_i0(double x);
    double bessel_i0e(double x);
    cdouble bessel_i0(cdouble z);
    cdouble bessel_i0e(cdouble z);

    // Lauricella F_D of three variables from its one-dimensional Euler integral,
    // valid for c > a > 0 and x, y, z < 1. Relative accuracy 1e-10.
    double lauricella_fd3(double a, double b1, double b2, double b3, double c, double x, double y, double z);

    // log(1 + u) accurate for small |u|
    cdouble log1p(cdouble u);

    // log(Gamma(x)) for x > 0
    double log_gamma(double x);

    // log of the binomial coefficient C(n, k)
    double log_binomial(int n, int k);
}

#endif
