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

#include "iftr/errors.hpp"
#include "iftr/presets.hpp"

using namespace iftr;

TEST_CASE("figure presets")
{
    CHECK(preset_names() == std::vector<std::string>{"fig1", "fig2", "fig3", "fig4", "fig5"});
    for (const auto &name : preset_names())
    {
        const auto p = preset(name);
        CHECK(p.name == name);
        CHECK_FALSE(p.curves.empty());
        for (const auto &c : p.curves)
            CHECK_NOTHROW(c.params.validate());
    }
    const auto f4 = preset("fig4");
    REQUIRE(f4.curves.size() == 3);
    CHECK(f4.curves[2].params.m1 == 40.0);
    CHECK(f4.curves[0].params.m2 == 2.0);
    CHECK(preset("fig5").rate == 2.0);
    CHECK_THROWS_AS(preset("fig9"), ValidationError);
}
