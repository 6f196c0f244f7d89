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
#include "iftr/params.hpp"
#include "test_util.hpp"

using namespace iftr;

TEST_CASE("validate rejects out-of-range parameters")
{
    IftrParams p{15.0, 0.5, 2.0, 3.0, 1.0};
    CHECK_NOTHROW(p.validate());
    auto bad = p;
    bad.k = -1.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.delta = 1.5;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.m1 = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.mean_snr = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.m2 = NAN;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.m2 = INFINITY;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("amplitude decomposition round trip")
{
    const SpecularDecomposition d{3.0, 1.0, 0.5};
    const auto p = params_from_amplitudes(d, 2.0);
    CHECK(p.k == doctest::Approx(10.0));
    CHECK(p.delta == doctest::Approx(0.6));
    CHECK(p.mean_snr == doctest::Approx(2.0 * 1.0 * 11.0));
    const auto back = amplitudes_from_params(p, 0.5);
    CHECK(back.v1 == doctest::Approx(3.0));
    CHECK(back.v2 == doctest::Approx(1.0));
    // Swapped amplitudes are relabeled
    const auto q = params_from_amplitudes({1.0, 3.0, 0.5}, 2.0);
    CHECK(q.delta == doctest::Approx(0.6));
}

TEST_CASE("specular powers")
{
    const auto s = specular_powers(10.0, 0.6);
    CHECK(s.strong == doctest::Approx(9.0));
    CHECK(s.weak == doctest::Approx(1.0));
    // Tiny Delta keeps relative accuracy in the weak power
    const auto t = specular_powers(1.0, 1e-9);
    CHECK(rel_err(t.weak, 0.25e-18) < 1e-9);
    const auto e = specular_powers(4.0, 1.0);
    CHECK(e.strong == doctest::Approx(2.0));
    CHECK(e.weak == doctest::Approx(2.0));
}

TEST_CASE("canonicalize")
{
    IftrParams p{15.0, 0.5, 2.0, 7.0, 3.0, true};
    const auto c = canonicalize(p);
    CHECK(c.m1 == 7.0);
    CHECK(c.m2 == 2.0);
    CHECK_FALSE(c.m1_on_weaker);
    CHECK(canonicalize(c) == c);
    IftrParams z{0.0, 0.7, 2.0, 3.0, 1.0};
    CHECK(canonicalize(z).delta == 0.0);
}

TEST_CASE("json parameter documents")
{
    const auto p = params_from_json(nlohmann::json::parse(R"({"K": 15, "Delta": 0.9, "m1": 2, "m2": "inf", "mean_snr_db": 10})"));
    CHECK(p.k == 15.0);
    CHECK(std::isinf(p.m2));
    CHECK(p.mean_snr == doctest::Approx(10.0));
    const auto back = params_from_json(params_to_json(p));
    CHECK(back.k == p.k);
    CHECK(back.delta == p.delta);
    CHECK(std::isinf(back.m2));
    CHECK(back.mean_snr == doctest::Approx(p.mean_snr).epsilon(1e-14));
    CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"K": "x"})")), ValidationError);
    CHECK_THROWS_AS(params_from_json(nlohmann::json::parse("[1, 2]")), ValidationError);
}

TEST_CASE("modulation spec")
{
    const auto b = ModulationSpec::bpsk();
    CHECK(b.cep(0.0) == doctest::Approx(0.5));
    CHECK(rel_err(b.cep(4.0), q_function(std::sqrt(8.0))) < 1e-15);
    CHECK_THROWS_AS(ModulationSpec({{1.0, -2.0}}), ValidationError);
    CHECK_THROWS_AS(ModulationSpec({{3.0, 2.0}}), ValidationError);
    CHECK(q_function(0.0) == 0.5);
}

TEST_CASE("domain names")
{
    CHECK(parse_domain("envelope") == DistributionDomain::envelope);
    CHECK(to_string(DistributionDomain::snr) == "snr");
    CHECK_THROWS_AS(parse_domain("power"), ValidationError);
}
