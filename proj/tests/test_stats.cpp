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

#include <doctest.h>

#include <cmath>

#include "iftr/errors.hpp"
#include "iftr/quadrature.hpp"
#include "iftr/rng.hpp"
#include "iftr/stats.hpp"
#include "test_util.hpp"

using namespace iftr;
using cd = std::complex<double>;

TEST_CASE("mgf reference values")
{
    CHECK(rel_err(mgf({15.0, 0.5, 3.0, 2.0, 1.0}, -1.0), 0.44519142060085371894) < 1e-12);
    CHECK(rel_err(mgf({15.0, 0.9, 5.0, 5.0, 1.0}, cd(-2.0, 3.0)), cd(0.11876175280303020558, 0.14174211548981499428)) < 1e-12);
    CHECK(rel_err(mgf({476.1, 0.8463, 9.0, 50.5, 1.0}, cd(-30.0, 100.0)),
                  cd(-0.00028272277990021061185, 0.0011257162472298511348)) < 1e-9);
    CHECK(rel_err(mgf({2.7457, 0.9997, 2.0, 0.1, 1.0}, cd(-0.5, 0.2)),
                  cd(0.68126820612823877066, 0.080202299139622860036)) < 1e-12);
    CHECK(rel_err(twdp_limit_mgf(15.0, 0.9, 1.0, -2.0), cd(0.27646740904439778732)) < 1e-12);
    CHECK(rel_err(twdp_limit_mgf(80.0, 0.6, 2.0, cd(-5.0, 7.0)),
                  cd(0.00023722135876907704075, -0.0018036064395457932606)) < 1e-10);
}

TEST_CASE("mgf basic identities")
{
    const IftrParams p{10.0, 0.4, 2.5, 6.0, 3.0};
    CHECK(std::abs(mgf(p, 0.0) - 1.0) < 1e-15);
    // Derivative at the origin is the mean SNR
    const double h = 1e-6;
    CHECK(rel_err((mgf(p, h) - mgf(p, -h)).real() / (2 * h), 3.0) < 1e-8);
    // Relabeling leaves the distribution unchanged
    IftrParams q = p;
    std::swap(q.m1, q.m2);
    q.m1_on_weaker = true;
    CHECK(rel_err(mgf(q, cd(-1.3, 2.0)), mgf(p, cd(-1.3, 2.0))) < 1e-13);
    CHECK_THROWS_AS(mgf(p, (1.0 + p.k) / p.mean_snr), SingularityError);
}

TEST_CASE("finite-sum mgf agrees with the hypergeometric form")
{
    Rng rng(3);
    for (int i = 0; i < 40; ++i)
    {
        const IftrParams p{0.1 + 40 * rng.uniform(), rng.uniform(), double(1 + i % 8), 0.3 + 20 * rng.uniform(), 2.0};
        for (double s : {-0.05, -0.5, -5.0})
            CHECK(rel_err(mgf_integer_m1(p, s), mgf(p, s)) < 1e-11);
        CHECK(rel_err(mgf_integer_m1(p, cd(-1.0, 4.0)), mgf(p, cd(-1.0, 4.0))) < 1e-11);
    }
    CHECK_THROWS_AS(mgf_integer_m1({5.0, 0.5, 1.5, 2.5, 1.0}, -1.0), ValidationError);
}

TEST_CASE("limit models")
{
    const cd s(-0.7, 1.1);
    // One ray: Rician shadowed
    CHECK(rel_err(mgf({12.0, 0.0, 3.5, 7.0, 2.0}, s), rician_shadowed_mgf(12.0, 3.5, 2.0, s)) < 1e-13);
    // Constant rays: TWDP
    CHECK(rel_err(mgf({12.0, 0.7, INFINITY, INFINITY, 2.0}, s), twdp_limit_mgf(12.0, 0.7, 2.0, s)) < 1e-13);
    CHECK(rel_err(mgf({12.0, 0.7, 1e5, 1e5, 2.0}, s), twdp_limit_mgf(12.0, 0.7, 2.0, s)) < 1e-3);
    // One constant ray: Rice
    CHECK(rel_err(mgf({12.0, 0.0, INFINITY, 2.0, 2.0}, s), rice_mgf(12.0, 2.0, s)) < 1e-12);
    // K = 0: Rayleigh
    CHECK(rel_err(mgf({0.0, 0.0, 2.0, 2.0, 2.0}, s), 1.0 / (1.0 - 2.0 * s)) < 1e-14);
    // One infinite shape with the other finite
    CHECK(rel_err(mgf({12.0, 0.7, INFINITY, 4.0, 2.0}, s), mgf({12.0, 0.7, 1e15, 4.0, 2.0}, s)) < 1e-6);
}

TEST_CASE("pdf and cdf reference values")
{
    CHECK(rel_err(cdf({10.0, 0.5, 3.0, 2.0, 1.0}, 0.1).value, 0.036568544644311169333) < 1e-9);
    CHECK(rel_err(cdf({10.0, 0.9, 2.0, 8.0, 1.0}, 0.01).value, 0.008749094701138981491) < 1e-9);
    CHECK(rel_err(pdf({15.0, 0.9, 10.0, 10.0, 1.0}, 1.0).value, 0.44374409881454323054) < 1e-9);
    CHECK(rel_err(pdf({15.0, 0.5, 2.5, 0.7, 2.0}, 0.5).value, 0.30139465865165118182) < 1e-9);
}

TEST_CASE("closed forms for integer shape agree with inversion")
{
    for (const IftrParams &p : {IftrParams{15.0, 0.5, 3.0, 2.0, 1.0}, IftrParams{4.0, 0.95, 1.0, 6.5, 2.0},
                                IftrParams{30.0, 0.2, 2.5, 5.0, 1.0}})
        for (double x : {0.01, 0.3, 1.0, 2.5})
        {
            CHECK(rel_err(pdf_integer_m1(p, x).value, pdf(p, x).value) < 1e-8);
            CHECK(rel_err(cdf_integer_m1(p, x).value, cdf(p, x).value) < 1e-8);
        }
    CHECK_THROWS_AS(pdf_integer_m1({5.0, 0.5, 1.5, 2.5, 1.0}, 1.0), ValidationError);
}

TEST_CASE("Rayleigh and domain conversions")
{
    const IftrParams p{0.0, 0.0, 1.0, 1.0, 2.0};
    for (double x : {0.05, 1.0, 6.0})
    {
        CHECK(rel_err(pdf(p, x).value, 0.5 * std::exp(-0.5 * x)) < 1e-9);
        CHECK(rel_err(cdf(p, x).value, -std::expm1(-0.5 * x)) < 1e-9);
    }
    const IftrParams q{15.0, 0.9, 2.0, 10.0, 1.0};
    for (double r : {0.2, 1.0, 1.7})
    {
        CHECK(rel_err(pdf(q, r, DistributionDomain::envelope).value, 2.0 * r * pdf(q, r * r).value) < 1e-12);
        CHECK(rel_err(cdf(q, r, DistributionDomain::envelope).value, cdf(q, r * r).value) < 1e-12);
    }
}

TEST_CASE("complementary CDF")
{
    const IftrParams r{0.0, 0.0, 1.0, 1.0, 2.0};
    for (double x : {0.5, 4.0, 20.0, 40.0})
        CHECK(rel_err(ccdf(r, x).value, std::exp(-0.5 * x)) < 1e-6);
    const IftrDistribution d({15.0, 0.9, 2.0, 10.0, 1.0});
    for (double x : {0.2, 0.7, 1.5, 3.0})
        CHECK(std::abs(d.cdf(x).value + d.ccdf(x).value - 1.0) < 1e-10);
    CHECK(d.ccdf(0.0).value == 1.0);
    CHECK(d.ccdf(1.2, DistributionDomain::envelope).value == doctest::Approx(d.ccdf(1.44).value).epsilon(1e-14));
    double last = 1.0;
    for (int i = 0; i <= 100; ++i)
    {
        const double v = d.ccdf(1.0 + 0.1 * i).value;
        CHECK(v <= last);
        CHECK(v > 0.0);
        last = v;
    }
}

TEST_CASE("behaviour at the origin")
{
    const IftrParams p{15.0, 0.9, 2.0, 10.0, 1.0};
    CHECK(pdf(p, 0.0).value == cdf_asymptotic_slope(p));
    CHECK(cdf(p, 0.0).value == 0.0);
    CHECK(rel_err(pdf(p, 1e-6).value, cdf_asymptotic_slope(p)) < 1e-4);
    CHECK(rel_err(cdf(p, 1e-7).value / 1e-7, cdf_asymptotic_slope(p)) < 1e-5);
    CHECK(cdf_asymptotic_slope({0.0, 0.0, 1.0, 1.0, 4.0}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(pdf(p, -1.0), ValidationError);
}

TEST_CASE("density integrates to one with the right mean")
{
    const IftrDistribution d({8.0, 0.6, 1.7, 4.0, 1.5});
    auto f = [&](double x) { return d.pdf(x).value; };
    auto xf = [&](double x) { return x * d.pdf(x).value; };
    const double tail = 40.0;
    const auto area = quadrature::integrate(f, 0.0, tail, 1e-10);
    const auto mean = quadrature::integrate(xf, 0.0, tail, 1e-10);
    CHECK(std::abs(area.value + (1.0 - d.cdf(tail).value) - 1.0) < 1e-7);
    CHECK(rel_err(mean.value, 1.5) < 1e-5);
}

TEST_CASE("cdf is monotone")
{
    const IftrDistribution d({20.0, 0.99, 0.8, 3.0, 1.0});
    double last = 0.0;
    for (int i = 0; i <= 200; ++i)
    {
        const double x = 1e-4 * std::pow(1e5, i / 200.0);
        const double v = d.cdf(x).value;
        CHECK(v >= last - 1e-12);
        last = v;
    }
    CHECK(last > 0.9999);
    CHECK(last < 1.0);
}

TEST_CASE("phi2 expansion")
{
    const IftrParams p{15.0, 0.5, 3.0, 2.0, 1.0};
    const auto e = phi2_expansion(p);
    CHECK(e.terms.size() == 3);
    const auto d = IftrDerived::from(p);
    CHECK(e.rates[0] == doctest::Approx(d.rates[0]));
    // Weights sum to f(0+) only through the Phi_2 values; at x = 0 every Phi_2 is one
    double sum = 0.0;
    for (const auto &t : e.terms)
        sum += t.weight;
    CHECK(rel_err(sum, cdf_asymptotic_slope(p)) < 1e-12);
}

TEST_CASE("distribution object reuses rules")
{
    const IftrDistribution d({15.0, 0.5, 3.0, 2.0, 1.0});
    const auto rule = specfun::InversionRule::cdf(0.4, {});
    CHECK(d.cdf(rule).value == doctest::Approx(d.cdf(0.4).value).epsilon(1e-14));
    CHECK(d.transform(cd(1.0, 0.0)) == d.mgf(cd(-1.0, 0.0)));
}
