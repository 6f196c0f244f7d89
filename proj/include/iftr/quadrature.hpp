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

#ifndef IFTR_QUADRATURE_HPP
#define IFTR_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace iftr::quadrature
{
    struct Result
    {
        double value = 0.0;
        double abs_error = 0.0;
        int intervals = 0;
        bool converged = false;
    };

    namespace detail
    {
        // Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]
        inline constexpr std::array<double, 8> xgk = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        inline constexpr std::array<double, 8> wgk = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        inline constexpr std::array<double, 4> wg = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b, value, error;
            bool operator<(const Segment &o) const { return error < o.error; }
        };

        template <typename F>
        Segment gk15(F &f, double a, double b)
        {
            const double center = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const double fc = f(center);
            double kronrod = fc * wgk[7];
            double gauss = fc * wg[3];
            for (int j = 0; j < 7; ++j)
            {
                const double dx = half * xgk[j];
                const double sum = f(center - dx) + f(center + dx);
                kronrod += wgk[j] * sum;
                if (j % 2 == 1)
                    gauss += wg[j / 2] * sum;
            }
            return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
        }
    }

    // Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
    // Stops when the summed error estimate is below max(abs_tol, rel_tol |I|).
    template <typename F>
    Result integrate(F &&f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0.0, int max_intervals = 2000)
    {
        std::priority_queue<detail::Segment> heap;
        auto first = detail::gk15(f, a, b);
        heap.push(first);
        double value = first.value, error = first.error;
        int n = 1;
        while (error > std::max(abs_tol, rel_tol * std::abs(value)) && n < max_intervals)
        {
            const auto worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            const auto left = detail::gk15(f, worst.a, mid);
            const auto right = detail::gk15(f, mid, worst.b);
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            ++n;
        }
        // Re-sum to shed the accumulated rounding of the running totals
        value = 0.0;
        error = 0.0;
        while (!heap.empty())
        {
            value += heap.top().value;
            error += heap.top().error;
            heap.pop();
        }
        return {value, error, n, error <= std::max(abs_tol, rel_tol * std::abs(value))};
    }
}

#endif
