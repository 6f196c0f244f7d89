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

#ifndef IFTR_RNG_HPP
#define IFTR_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace iftr
{
    // SplitMix64 step, used for seeding and stream derivation
    inline std::uint64_t splitmix64(std::uint64_t &state)
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // xoshiro256** generator. Stream `stream` of seed `seed` is an independent
    // sequence; samplers assign one stream per fixed-size chunk.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        {
            std::uint64_t sm = seed;
            const std::uint64_t mix = splitmix64(sm) ^ (stream * 0xD1B54A32D192ED03ULL);
            sm = mix;
            for (auto &w : s_)
                w = splitmix64(sm);
        }

        std::uint64_t next()
        {
            const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
            const std::uint64_t t = s_[1] << 17;
            s_[2] ^= s_[0];
            s_[3] ^= s_[1];
            s_[1] ^= s_[2];
            s_[0] ^= s_[3];
            s_[2] ^= t;
            s_[3] = rotl(s_[3], 45);
            return result;
        }

        // Uniform on [0, 1) with 53 random bits
        double uniform() { return double(next() >> 11) * 0x1.0p-53; }

        // Uniform on (0, 1]
        double uniform_pos() { return 1.0 - uniform(); }

        // Standard normal pair by the Box-Muller transform
        void normal_pair(double &a, double &b)
        {
            const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
            const double t = 2.0 * std::numbers::pi * uniform();
            a = r * std::cos(t);
            b = r * std::sin(t);
        }

        double normal()
        {
            double a, b;
            normal_pair(a, b);
            return a;
        }

        // Gamma(shape, scale 1), Marsaglia-Tsang squeeze; shapes below 1 are boosted
        // through Gamma(shape + 1) U^(1/shape)
        double gamma(double shape)
        {
            if (shape < 1.0)
            {
                const double g = gamma(shape + 1.0);
                return g * std::pow(uniform_pos(), 1.0 / shape);
            }
            const double d = shape - 1.0 / 3.0;
            const double c = 1.0 / std::sqrt(9.0 * d);
            for (;;)
            {
                double x, v;
                do
                {
                    x = normal();
                    v = 1.0 + c * x;
                } while (v <= 0.0);
                v = v * v * v;
                const double u = uniform_pos();
                const double x2 = x * x;
                if (u < 1.0 - 0.0331 * x2 * x2)
                    return d * v;
                if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
                    return d * v;
            }
        }

    private:
        static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
        std::uint64_t s_[4];
    };
}

#endif
