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

#include "iftr/link.hpp"
#include "iftr/rng.hpp"
#include "test_util.hpp"

using namespace iftr;

TEST_CASE("BPSK BER reference values")
{
    const auto bpsk = ModulationSpec::bpsk();
    CHECK(rel_err(ber_exact({15.0, 0.5, 5.0, 2.0, std::pow(10.0, 2.5)}, bpsk).value, 7.9869251025999654771e-5) < 1e-9);
    CHECK(rel_err(ber_exact({10.0, 0.3, 1.5, 4.0, 10.0}, bpsk).value, 0.015673733909383129688) < 1e-9);
    // Rayleigh
    const double rayleigh = 0.5 * (1.0 - std::sqrt(10.0 / 11.0));
    CHECK(std::abs(ber_exact({0.0, 0.0, 1.0, 1.0, 10.0}, bpsk).value - rayleigh) < 1e-10);
    CHECK(std::abs(ber_mgf_quadrature({0.0, 0.0, 1.0, 1.0, 10.0}, bpsk).value - rayleigh) < 1e-10);
}

TEST_CASE("exact and quadrature BER agree")
{
    const auto bpsk = ModulationSpec::bpsk();
    const ModulationSpec qpsk_like({{1.0, 1.0}, {-0.25, 1.0}});
    Rng rng(21);
    for (int i = 0; i < 15; ++i)
    {
        const IftrParams p{0.5 + 30 * rng.uniform(), rng.uniform(), double(1 + i % 6), 0.5 + 10 * rng.uniform(),
                           std::pow(10.0, 3.0 * rng.uniform())};
        const auto e = ber_exact(p, bpsk);
        CHECK(e.method == BerMethod::lauricella_exact);
        CHECK(rel_err(e.value, ber_mgf_quadrature(p, bpsk).value) < 1e-6);
        CHECK(rel_err(ber_exact(p, qpsk_like).value, ber_mgf_quadrature(p, qpsk_like).value) < 1e-6);
    }
}

TEST_CASE("non-integer shapes fall back to quadrature")
{
    const auto r = ber_exact({10.0, 0.5, 1.5, 2.5, 10.0}, ModulationSpec::bpsk());
    CHECK(r.method == BerMethod::mgf_quadrature);
    CHECK_FALSE(r.notice.empty());
    CHECK(to_string(r.method) == "mgf-quadrature");
}

TEST_CASE("BER decreases with mean SNR and approaches the asymptote")
{
    const auto bpsk = ModulationSpec::bpsk();
    double last = 1.0;
    for (int db = 0; db <= 50; db += 5)
    {
        const IftrParams p{15.0, 0.5, 5.0, 2.0, std::pow(10.0, db / 10.0)};
        const double v = ber_exact(p, bpsk).value;
        CHECK(v < last);
        last = v;
    }
    const IftrParams hi{15.0, 0.5, 5.0, 2.0, 1e5};
    const double ratio = ber_exact(hi, bpsk).value / ber_asymptotic(hi, bpsk).value;
    CHECK(ratio > 0.95);
    CHECK(ratio < 1.05);
}

TEST_CASE("Monte Carlo BER within its standard error")
{
    const IftrParams p{15.0, 0.5, 5.0, 2.0, 100.0};
    const auto mc = ber_monte_carlo(p, ModulationSpec::bpsk(), 400000, 5);
    const double exact = ber_exact(p, ModulationSpec::bpsk()).value;
    CHECK(mc.method == BerMethod::monte_carlo);
    CHECK(mc.standard_error > 0.0);
    CHECK(std::abs(mc.value - exact) < 4.0 * mc.standard_error);
}

TEST_CASE("conditional error averaging")
{
    const auto est = cep_average({0.0, 0.0, 0.0}, ModulationSpec::bpsk());
    CHECK(est.value == doctest::Approx(0.5));
    CHECK(est.standard_error == 0.0);
}

TEST_CASE("outage probability")
{
    const auto r = outage({0.0, 0.0, 1.0, 1.0, 1.0}, 2.0);
    CHECK(std::abs(r.value - (1.0 - std::exp(-3.0))) < 1e-10);
    CHECK(outage_asymptotic({0.0, 0.0, 1.0, 1.0, 100.0}, 1.0) == doctest::Approx(0.01).epsilon(1e-14));
    const IftrParams p{10.0, 0.9, 2.0, 8.0, 30.0};
    auto p10 = p;
    p10.mean_snr *= 10.0;
    CHECK(outage_asymptotic(p, 2.0) / outage_asymptotic(p10, 2.0) == doctest::Approx(10.0).epsilon(1e-12));
    double last = 0.0;
    for (double rs : {0.25, 0.5, 1.0, 2.0, 4.0})
    {
        const double v = outage(p, rs).value;
        CHECK(v >= last);
        last = v;
    }
    CHECK(outage(p, 2.0).value >= outage(p10, 2.0).value);
    const auto mc = outage_monte_carlo(p, 2.0, 400000, 3);
    CHECK(std::abs(mc.value - outage(p, 2.0).value) < 4.0 * mc.standard_error);
}
