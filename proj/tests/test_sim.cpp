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

#include <algorithm>
#include <cmath>
#include <fstream>

#include "iftr/errors.hpp"
#include "iftr/rng.hpp"
#include "iftr/sim.hpp"
#include "iftr/stats.hpp"
#include "test_util.hpp"

using namespace iftr;

namespace
{
    double mean_of(const std::vector<double> &v)
    {
        double s = 0.0;
        for (double x : v)
            s += x;
        return s / double(v.size());
    }

    SimConfig config(std::size_t n, std::uint64_t seed, SimOutput out = SimOutput::snr)
    {
        SimConfig c;
        c.n_samples = n;
        c.seed = seed;
        c.output = out;
        return c;
    }
}

TEST_CASE("rng streams and variates")
{
    Rng a(5, 0), b(5, 0), c(5, 1);
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    Rng g(11);
    for (double shape : {0.3, 1.0, 4.5})
    {
        const int n = 200000;
        double s = 0.0, s2 = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double v = g.gamma(shape);
            s += v;
            s2 += v * v;
        }
        const double mean = s / n, var = s2 / n - mean * mean;
        CHECK(std::abs(mean - shape) < 5.0 * std::sqrt(shape / n));
        CHECK(rel_err(var, shape) < 0.05);
    }
}

TEST_CASE("samples are reproducible and independent of thread count")
{
    const IftrParams p{15.0, 0.9, 2.0, 10.0, 1.0};
    auto c1 = config(3 * sim_chunk + 17, 42);
    c1.threads = 1;
    auto c4 = c1;
    c4.threads = 4;
    const auto a = sample(p, c1), b = sample(p, c4);
    CHECK(a.values == b.values);
    auto c5 = c1;
    c5.seed = 43;
    CHECK(sample(p, c5).values != a.values);
}

TEST_CASE("mean power matches the parameter for every model")
{
    const std::size_t n = 400000;
    const IftrParams p{6.0, 0.7, 1.5, 3.0, 2.5};
    CHECK(rel_err(mean_of(sample(p, config(n, 1)).values), 2.5) < 0.01);
    CHECK(rel_err(mean_of(sample_ftr(6.0, 0.7, 1.5, 2.5, config(n, 2)).values), 2.5) < 0.01);
    CHECK(rel_err(mean_of(sample_twdp(6.0, 0.7, 2.5, config(n, 3)).values), 2.5) < 0.01);
    CHECK(rel_err(mean_of(sample_rice(6.0, 2.5, config(n, 4)).values), 2.5) < 0.01);
    CHECK(rel_err(mean_of(sample_rician_shadowed(6.0, 1.5, 2.5, config(n, 5)).values), 2.5) < 0.01);
}

TEST_CASE("output kinds are consistent")
{
    const IftrParams p{4.0, 0.3, 2.0, 2.0, 1.0};
    const auto snr = sample(p, config(1000, 9, SimOutput::snr));
    const auto env = sample(p, config(1000, 9, SimOutput::envelope));
    const auto vol = sample(p, config(1000, 9, SimOutput::complex_voltage));
    REQUIRE(vol.voltages.size() == 1000);
    for (std::size_t i = 0; i < 1000; ++i)
    {
        CHECK(env.values[i] == doctest::Approx(std::sqrt(snr.values[i])).epsilon(1e-14));
        CHECK(std::norm(vol.voltages[i]) == doctest::Approx(snr.values[i]).epsilon(1e-14));
    }
}

TEST_CASE("empirical CDF of samples follows the analytic CDF")
{
    const IftrParams p{10.0, 0.9, 2.0, 8.0, 1.0};
    auto s = sample(p, config(200000, 7)).values;
    std::sort(s.begin(), s.end());
    const IftrDistribution d(p);
    double sup = 0.0;
    for (int i = 1; i < 100; ++i)
    {
        const std::size_t k = s.size() * i / 100;
        const double x = s[k];
        sup = std::max(sup, std::abs(d.cdf(x).value - double(k + 1) / double(s.size())));
    }
    CHECK(sup < 0.005);
}

TEST_CASE("sample file round trips")
{
    const IftrParams p{3.0, 0.5, 2.0, 4.0, 1.0};
    const auto cfg = config(500, 3, SimOutput::envelope);
    const auto s = sample(p, cfg);
    const auto header = sim_provenance(p, cfg);
    write_samples_csv(tmp_path("s.csv"), s, header);
    write_samples_binary(tmp_path("s.bin"), s, header);
    const auto a = read_samples(tmp_path("s.csv"));
    const auto b = read_samples(tmp_path("s.bin"));
    CHECK(a.values == s.values);
    CHECK(b.values == s.values);
    CHECK(a.header == header);
    CHECK(b.header["seed"] == 3);

    const auto v = sample(p, config(50, 3, SimOutput::complex_voltage));
    write_samples_csv(tmp_path("v.csv"), v, header);
    const auto c = read_samples(tmp_path("v.csv"));
    REQUIRE(c.values.size() == 50);
    CHECK(c.values[7] == doctest::Approx(std::abs(v.voltages[7])).epsilon(1e-15));
}

TEST_CASE("sample file errors")
{
    CHECK_THROWS_AS(read_samples(tmp_path("does-not-exist.csv")), IoError);
    {
        std::ofstream f(tmp_path("bad.csv"));
        f << "# {}\n1.0\n2.0\nabc\n";
    }
    try
    {
        read_samples(tmp_path("bad.csv"));
        FAIL("expected ParseError");
    }
    catch (const ParseError &e)
    {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS(sample({1.0, 0.5, 1.0, 1.0, 1.0}, config(0, 1)), ValidationError);
    CHECK_THROWS_AS(parse_sim_model("nakagami"), ValidationError);
    CHECK(parse_sim_output("complex-voltage") == SimOutput::complex_voltage);
    CHECK(to_string(SimModel::rician_shadowed) == "rician-shadowed");
}
