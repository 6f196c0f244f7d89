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

#include "iftr/sim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "iftr/errors.hpp"
#include "iftr/rng.hpp"

namespace iftr
{
    namespace
    {
        struct Generator
        {
            double v1 = 0.0, v2 = 0.0, sigma = 0.0;
            double m1 = INFINITY, m2 = INFINITY; // fluctuation shapes of rays 1 and 2
            bool shared = false;                 // one fluctuation for both rays
            double rotation = 0.0;

            static double unit_gamma(Rng &rng, double m)
            {
                return m > shape_limit ? 1.0 : rng.gamma(m) / m;
            }

            std::complex<double> draw(Rng &rng) const
            {
                double x, y;
                rng.normal_pair(x, y);
                const double phi1 = 2.0 * std::numbers::pi * rng.uniform() + rotation;
                const double phi2 = 2.0 * std::numbers::pi * rng.uniform() + rotation;
                const double z1 = unit_gamma(rng, m1);
                const double z2 = shared ? z1 : unit_gamma(rng, m2);
                const double a1 = std::sqrt(z1) * v1;
                const double a2 = std::sqrt(z2) * v2;
                return {a1 * std::cos(phi1) + a2 * std::cos(phi2) + sigma * x,
                        a1 * std::sin(phi1) + a2 * std::sin(phi2) + sigma * y};
            }
        };

        Generator make_generator(double k, double delta, double mean, double rotation)
        {
            IftrParams p{k, delta, 1.0, 1.0, mean};
            p.validate();
            const double sigma2 = mean / (2.0 * (1.0 + k));
            const auto amp = amplitudes_from_params(p, sigma2);
            Generator g;
            g.v1 = amp.v1;
            g.v2 = amp.v2;
            g.sigma = std::sqrt(sigma2);
            g.rotation = rotation;
            return g;
        }

        SampleSet run(const Generator &g, const SimConfig &cfg)
        {
            cfg.validate();
            SampleSet out;
            out.output = cfg.output;
            const bool complex = cfg.output == SimOutput::complex_voltage;
            if (complex)
                out.voltages.resize(cfg.n_samples);
            else
                out.values.resize(cfg.n_samples);

            const std::size_t chunks = (cfg.n_samples + sim_chunk - 1) / sim_chunk;
            std::atomic<std::size_t> next{0};
            auto worker = [&]
            {
                for (std::size_t c = next++; c < chunks; c = next++)
                {
                    Rng rng(cfg.seed, c);
                    const std::size_t begin = c * sim_chunk;
                    const std::size_t end = std::min(cfg.n_samples, begin + sim_chunk);
                    for (std::size_t i = begin; i < end; ++i)
                    {
                        const auto v = g.draw(rng);
                        if (complex)
                            out.voltages[i] = v;
                        else if (cfg.output == SimOutput::snr)
                            out.values[i] = std::norm(v);
                        else
                            out.values[i] = std::abs(v);
                    }
                }
            };
            unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
            threads = unsigned(std::min<std::size_t>(threads, chunks));
            if (threads <= 1)
                worker();
            else
            {
                std::vector<std::jthread> pool;
                for (unsigned t = 0; t < threads; ++t)
                    pool.emplace_back(worker);
            }
            return out;
        }

        std::string format_double(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        void write_u64(std::ostream &os, std::uint64_t v)
        {
            unsigned char b[8];
            for (int i = 0; i < 8; ++i)
                b[i] = static_cast<unsigned char>(v >> (8 * i));
            os.write(reinterpret_cast<const char *>(b), 8);
        }

        std::uint64_t read_u64(std::istream &is)
        {
            unsigned char b[8];
            if (!is.read(reinterpret_cast<char *>(b), 8))
                throw IoError("truncated binary sample file");
            std::uint64_t v = 0;
            for (int i = 0; i < 8; ++i)
                v |= std::uint64_t(b[i]) << (8 * i);
            return v;
        }

        constexpr char magic[8] = {'I', 'F', 'T', 'R', 'S', 'M', 'P', '1'};
    }

    SimModel parse_sim_model(const std::string &name)
    {
        if (name == "iftr")
            return SimModel::iftr;
        if (name == "ftr")
            return SimModel::ftr;
        if (name == "twdp")
            return SimModel::twdp;
        if (name == "rice")
            return SimModel::rice;
        if (name == "rician-shadowed")
            return SimModel::rician_shadowed;
        throw ValidationError("unknown model '" + name + "' (expected iftr, ftr, twdp, rice or rician-shadowed)");
    }

    std::string to_string(SimModel m)
    {
        switch (m)
        {
        case SimModel::iftr: return "iftr";
        case SimModel::ftr: return "ftr";
        case SimModel::twdp: return "twdp";
        case SimModel::rice: return "rice";
        case SimModel::rician_shadowed: return "rician-shadowed";
        }
        return "iftr";
    }

    SimOutput parse_sim_output(const std::string &name)
    {
        if (name == "envelope")
            return SimOutput::envelope;
        if (name == "snr")
            return SimOutput::snr;
        if (name == "complex-voltage" || name == "complex")
            return SimOutput::complex_voltage;
        throw ValidationError("unknown output '" + name + "' (expected envelope, snr or complex-voltage)");
    }

    std::string to_string(SimOutput o)
    {
        switch (o)
        {
        case SimOutput::envelope: return "envelope";
        case SimOutput::snr: return "snr";
        case SimOutput::complex_voltage: return "complex-voltage";
        }
        return "snr";
    }

    void SimConfig::validate() const
    {
        if (n_samples < 1)
            throw ValidationError("number of samples must be >= 1");
        if (!std::isfinite(phase_rotation))
            throw ValidationError("phase rotation must be finite");
    }

    SampleSet sample_iftr(const IftrParams &p, SimConfig cfg)
    {
        p.validate();
        auto g = make_generator(p.k, p.delta, p.mean_snr, cfg.phase_rotation);
        g.m1 = p.m_strong();
        g.m2 = p.m_weak();
        return run(g, cfg);
    }

    SampleSet sample_ftr(double k, double delta, double m, double mean_power, SimConfig cfg)
    {
        if (!(m > 0.0))
            throw ValidationError("m must be > 0");
        auto g = make_generator(k, delta, mean_power, cfg.phase_rotation);
        g.m1 = g.m2 = m;
        g.shared = true;
        return run(g, cfg);
    }

    SampleSet sample_twdp(double k, double delta, double mean_power, SimConfig cfg)
    {
        return run(make_generator(k, delta, mean_power, cfg.phase_rotation), cfg);
    }

    SampleSet sample_rice(double k, double mean_power, SimConfig cfg)
    {
        return sample_twdp(k, 0.0, mean_power, cfg);
    }

    SampleSet sample_rician_shadowed(double k, double m, double mean_power, SimConfig cfg)
    {
        if (!(m > 0.0))
            throw ValidationError("m must be > 0");
        auto g = make_generator(k, 0.0, mean_power, cfg.phase_rotation);
        g.m1 = m;
        return run(g, cfg);
    }

    SampleSet sample(const IftrParams &p, const SimConfig &cfg)
    {
        switch (cfg.model)
        {
        case SimModel::iftr: return sample_iftr(p, cfg);
        case SimModel::ftr: return sample_ftr(p.k, p.delta, p.m_strong(), p.mean_snr, cfg);
        case SimModel::twdp: return sample_twdp(p.k, p.delta, p.mean_snr, cfg);
        case SimModel::rice: return sample_rice(p.k, p.mean_snr, cfg);
        case SimModel::rician_shadowed: return sample_rician_shadowed(p.k, p.m_strong(), p.mean_snr, cfg);
        }
        throw ValidationError("unknown model");
    }

    nlohmann::json sim_provenance(const IftrParams &p, const SimConfig &cfg)
    {
        nlohmann::json j;
        j["model"] = to_string(cfg.model);
        j["params"] = params_to_json(p);
        j["params"]["mean_linear"] = p.mean_snr;
        j["n"] = cfg.n_samples;
        j["seed"] = cfg.seed;
        j["output"] = to_string(cfg.output);
        j["phase_rotation"] = cfg.phase_rotation;
        j["rng"] = "xoshiro256** (splitmix64 seeding), chunk " + std::to_string(sim_chunk);
        return j;
    }

    void write_samples_csv(const std::string &path, const SampleSet &s, const nlohmann::json &header)
    {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw IoError("cannot open '" + path + "' for writing");
        os << "# " << header.dump() << '\n';
        if (s.output == SimOutput::complex_voltage)
            for (const auto &v : s.voltages)
                os << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        else
            for (double v : s.values)
                os << format_double(v) << '\n';
        if (!os)
            throw IoError("write failed for '" + path + "'");
    }

    void write_samples_binary(const std::string &path, const SampleSet &s, const nlohmann::json &header)
    {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw IoError("cannot open '" + path + "' for writing");
        const std::string h = header.dump();
        os.write(magic, 8);
        write_u64(os, h.size());
        os.write(h.data(), std::streamsize(h.size()));
        const bool complex = s.output == SimOutput::complex_voltage;
        write_u64(os, complex ? s.voltages.size() : s.values.size());
        os.put(complex ? 1 : 0);
        auto put = [&](double v) { write_u64(os, std::bit_cast<std::uint64_t>(v)); };
        if (complex)
            for (const auto &v : s.voltages)
            {
                put(v.real());
                put(v.imag());
            }
        else
            for (double v : s.values)
                put(v);
        if (!os)
            throw IoError("write failed for '" + path + "'");
    }

    LoadedSamples read_samples(const std::string &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw IoError("cannot open '" + path + "'");
        LoadedSamples out;
        char head[8] = {};
        is.read(head, 8);
        if (is.gcount() == 8 && std::memcmp(head, magic, 8) == 0)
        {
            const auto hlen = read_u64(is);
            std::string h(hlen, '\0');
            if (!is.read(h.data(), std::streamsize(hlen)))
                throw IoError("truncated binary sample file");
            out.header = nlohmann::json::parse(h, nullptr, false);
            const auto n = read_u64(is);
            const bool complex = is.get() == 1;
            out.values.reserve(n);
            for (std::uint64_t i = 0; i < n; ++i)
            {
                const double re = std::bit_cast<double>(read_u64(is));
                if (complex)
                    out.values.push_back(std::hypot(re, std::bit_cast<double>(read_u64(is))));
                else
                    out.values.push_back(re);
            }
            return out;
        }

        is.clear();
        is.seekg(0);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line))
        {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            if (line[0] == '#')
            {
                if (out.header.is_null())
                    out.header = nlohmann::json::parse(line.substr(1), nullptr, false);
                continue;
            }
            const auto comma = line.find(',');
            char *end = nullptr;
            const double a = std::strtod(line.c_str(), &end);
            if (end == line.c_str() || (comma == std::string::npos && *end != '\0'))
                throw ParseError("not a number: '" + line + "'", lineno);
            if (comma != std::string::npos)
            {
                const char *rest = line.c_str() + comma + 1;
                const double b = std::strtod(rest, &end);
                if (end == rest || *end != '\0')
                    throw ParseError("malformed complex sample '" + line + "'", lineno);
                out.values.push_back(std::hypot(a, b));
            }
            else
                out.values.push_back(a);
        }
        if (out.values.empty())
            throw IoError("no samples in '" + path + "'");
        return out;
    }
}
