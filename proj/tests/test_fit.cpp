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
#include <fstream>

#include "iftr/errors.hpp"
#include "iftr/fit.hpp"
#include "iftr/sim.hpp"
#include "iftr/stats.hpp"
#include "test_util.hpp"

using namespace iftr;

namespace
{
    std::string write_file(const std::string &name, const std::string &text)
    {
        const auto path = tmp_path(name);
        std::ofstream(path) << text;
        return path;
    }

    std::string rows(int n, bool db)
    {
        std::string s = db ? "x_db,cdf\n" : "x,cdf\n";
        for (int i = 1; i <= n; ++i)
        {
            const double x = 0.1 * i;
            s += std::to_string(db ? 10.0 * std::log10(x) : x) + "," + std::to_string(-std::expm1(-x)) + "\n";
        }
        return s;
    }

    std::size_t parse_line(const std::string &path)
    {
        try
        {
            load_empirical_cdf(path);
        }
        catch (const ParseError &e)
        {
            return e.line();
        }
        return 0;
    }
}

TEST_CASE("loading empirical CDF files")
{
    const auto a = load_empirical_cdf(write_file("lin.csv", "# comment\n" + rows(10, false)));
    REQUIRE(a.points.size() == 10);
    CHECK(a.points[2].x == doctest::Approx(0.3));
    const auto b = load_empirical_cdf(write_file("db.csv", rows(10, true)));
    CHECK(b.points[2].x == doctest::Approx(0.3).epsilon(1e-6));
    // Envelope abscissae in dB use 20 log10
    const auto c = load_empirical_cdf(write_file("env.csv", "x_db,cdf\n" "0,0.1\n" "6.020599913,0.2\n" "10,0.3\n"
                                                            "12,0.4\n" "13,0.5\n" "14,0.6\n" "15,0.7\n" "16,0.8\n"),
                                      {DistributionDomain::envelope});
    CHECK(c.points[1].x == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(c.power_abscissae()[1] == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("empirical CDF file errors carry line numbers")
{
    CHECK_THROWS_AS(load_empirical_cdf(tmp_path("missing.csv")), IoError);
    CHECK(parse_line(write_file("e1.csv", "x,cdf\n0.1,0.1\n0.2,abc\n")) == 3);
    CHECK(parse_line(write_file("e2.csv", "x,cdf\n0.1,0.1\n-0.2,0.2\n")) == 3);
    CHECK(parse_line(write_file("e3.csv", "x,cdf\n0.1,0.1\n0.2,1.2\n")) == 3);
    CHECK(parse_line(write_file("e4.csv", "x,cdf\n0.1,0.3\n0.2,0.2\n")) == 3);
    CHECK(parse_line(write_file("e5.csv", "x,cdf\n0.1,0.3\n0.1,0.3\n")) == 3);
    CHECK(parse_line(write_file("e6.csv", "power,prob\n0.1,0.3\n")) == 1);
    // Too few points
    CHECK_THROWS_AS(load_empirical_cdf(write_file("short.csv", rows(5, false))), ValidationError);
}

TEST_CASE("modified KS statistic")
{
    const auto e = load_empirical_cdf(write_file("exp.csv", rows(12, false)));
    CHECK(modified_ks(e, [](double x) { return -std::expm1(-x); }) < 1e-5);
    CHECK(modified_ks(e, [](double x) { return -std::expm1(-x) / 10.0; }) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(modified_ks(e, [](double) { return 0.0; }), ValidationError);
}

TEST_CASE("empirical CDF from samples")
{
    SimConfig cfg;
    cfg.n_samples = 100000;
    cfg.seed = 4;
    const IftrParams p{15.0, 0.9, 2.0, 10.0, 1.0};
    const auto s = sample(p, cfg);
    const auto e = empirical_cdf_from_samples(s.values, DistributionDomain::snr, false, 40);
    CHECK_NOTHROW(e.validate());
    CHECK(e.points.size() == 40);
    CHECK(e.points.front().f == doctest::Approx(1e-3).epsilon(1e-9));
    const CdfObjective obj(e, FitConfig{}.inversion);
    CHECK(obj.size() == 40);
    CHECK(obj.epsilon(p) < 0.05);
    IftrParams far = p;
    far.k = 0.5;
    CHECK(obj.epsilon(far) > obj.epsilon(p));

    auto env = s.values;
    for (auto &v : env)
        v = std::sqrt(v);
    const auto ee = empirical_cdf_from_samples(env, DistributionDomain::envelope, false, 40);
    CHECK(ee.power_abscissae()[10] == doctest::Approx(e.points[10].x).epsilon(1e-12));
}

TEST_CASE("fitting a Rice data set")
{
    SimConfig cfg;
    cfg.n_samples = 100000;
    cfg.seed = 8;
    const auto s = sample_rice(6.0, 1.0, cfg);
    const auto e = empirical_cdf_from_samples(s.values, DistributionDomain::snr);
    FitConfig fc;
    fc.family = ModelFamily::rice;
    fc.restarts = 2;
    const auto r = fit(e, fc);
    CHECK(r.converged);
    CHECK(r.family == ModelFamily::rice);
    CHECK(r.params.delta == 0.0);
    CHECK(std::isinf(r.params.m1));
    CHECK(r.params.k == doctest::Approx(6.0).epsilon(0.15));
    const CdfObjective obj(e, fc.inversion);
    CHECK(r.epsilon <= obj.epsilon({6.0, 0.0, INFINITY, INFINITY, 1.0}) + 1e-9);
    const auto j = to_json(r);
    CHECK(j["model"] == "rice");
    CHECK(j.contains("epsilon"));
    CHECK(j["params"]["m1"] == "inf");

    CHECK(to_json(fit(e, fc)).dump() == j.dump());
}

TEST_CASE("fit configuration")
{
    CHECK(parse_model_family("rician-shadowed") == ModelFamily::rician_shadowed);
    CHECK_THROWS_AS(parse_model_family("weibull"), ValidationError);
    FitConfig fc;
    fc.restarts = 0;
    CHECK_THROWS_AS(fc.validate(), ValidationError);
    fc = {};
    fc.bounds.delta = {0.0, 2.0};
    CHECK_THROWS_AS(fc.validate(), ValidationError);
}
