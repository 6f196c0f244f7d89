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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iftr/errors.hpp"
#include "iftr/fit.hpp"
#include "iftr/link.hpp"
#include "iftr/presets.hpp"
#include "iftr/sim.hpp"
#include "iftr/stats.hpp"

namespace py = pybind11;
using namespace iftr;

namespace
{
    using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

    template <typename F>
    Array map_array(const Array &x, F &&f)
    {
        Array out(x.request().shape);
        auto in = x.unchecked();
        double *o = out.mutable_data();
        const double *i = x.data();
        for (py::ssize_t k = 0; k < in.size(); ++k)
            o[k] = f(i[k]);
        return out;
    }

    specfun::LaplaceInversionConfig inversion(const std::string &method, int terms, double precision)
    {
        specfun::LaplaceInversionConfig c{specfun::parse_inversion_method(method), terms, precision};
        c.validate();
        return c;
    }

    ModulationSpec modulation(const std::vector<std::pair<double, double>> &terms)
    {
        if (terms.empty())
            return ModulationSpec::bpsk();
        std::vector<ModulationTerm> t;
        for (const auto &[a, b] : terms)
            t.push_back({a, b});
        return ModulationSpec(t);
    }

    FitConfig fit_config(const std::string &model, bool fit_scale, double omega, int restarts, std::uint64_t seed, int m1_max)
    {
        FitConfig c;
        c.family = parse_model_family(model);
        c.fit_scale = fit_scale;
        c.omega = omega;
        c.restarts = restarts;
        c.seed = seed;
        c.m1_max = m1_max;
        c.validate();
        return c;
    }

    std::string fit_json(const EmpiricalCdf &emp, const FitConfig &cfg, bool compare)
    {
        if (!compare)
            return to_json(fit(emp, cfg)).dump();
        nlohmann::json all = nlohmann::json::array();
        for (const auto &r : fit_compare(emp, cfg))
            all.push_back(to_json(r));
        return all.dump();
    }
}

PYBIND11_MODULE(_iftr, m)
{
    m.doc() = "Statistics, simulation, link performance and fitting for IFTR fading";
    m.attr("__version__") = version();

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<IftrParams>(m, "IftrParams")
        .def(py::init(
                 [](double K, double Delta, double m1, double m2, double mean_snr, bool m1_on_weaker)
                 {
                     IftrParams p{K, Delta, m1, m2, mean_snr, m1_on_weaker};
                     p.validate();
                     return p;
                 }),
             py::arg("K"), py::arg("Delta") = 0.0, py::arg("m1") = INFINITY, py::arg("m2") = INFINITY,
             py::arg("mean_snr") = 1.0, py::arg("m1_on_weaker") = false)
        .def_readwrite("K", &IftrParams::k)
        .def_readwrite("Delta", &IftrParams::delta)
        .def_readwrite("m1", &IftrParams::m1)
        .def_readwrite("m2", &IftrParams::m2)
        .def_readwrite("mean_snr", &IftrParams::mean_snr)
        .def_readwrite("m1_on_weaker", &IftrParams::m1_on_weaker)
        .def("validate", &IftrParams::validate)
        .def("canonical", [](const IftrParams &p) { return canonicalize(p); })
        .def("to_json", [](const IftrParams &p) { return params_to_json(p).dump(); })
        .def_static("from_json", [](const std::string &s) { return params_from_json(nlohmann::json::parse(s)); })
        .def("__eq__", [](const IftrParams &a, const IftrParams &b) { return a == b; })
        .def("__repr__",
             [](const IftrParams &p)
             {
                 return "IftrParams(K=" + std::to_string(p.k) + ", Delta=" + std::to_string(p.delta) + ", m1=" +
                        std::to_string(p.m1) + ", m2=" + std::to_string(p.m2) + ", mean_snr=" + std::to_string(p.mean_snr) + ")";
             });

    m.def("mgf", [](const IftrParams &p, std::complex<double> s) { return iftr::mgf(p, s); }, py::arg("params"), py::arg("s"),
          "MGF E[exp(s gamma)]");

    m.def(
        "pdf",
        [](const IftrParams &p, const Array &x, const std::string &domain, const std::string &method, int terms, double precision)
        {
            const IftrDistribution d(p, inversion(method, terms, precision));
            const auto dom = parse_domain(domain);
            return map_array(x, [&](double v) { return d.pdf(v, dom).value; });
        },
        py::arg("params"), py::arg("x"), py::arg("domain") = "snr", py::arg("method") = "euler-summation",
        py::arg("terms") = 64, py::arg("precision") = 1e-10, "Density of the SNR or the envelope");

    m.def(
        "cdf",
        [](const IftrParams &p, const Array &x, const std::string &domain, const std::string &method, int terms, double precision)
        {
            const IftrDistribution d(p, inversion(method, terms, precision));
            const auto dom = parse_domain(domain);
            return map_array(x, [&](double v) { return d.cdf(v, dom).value; });
        },
        py::arg("params"), py::arg("x"), py::arg("domain") = "snr", py::arg("method") = "euler-summation",
        py::arg("terms") = 64, py::arg("precision") = 1e-10, "CDF of the SNR or the envelope");

    m.def(
        "ccdf",
        [](const IftrParams &p, const Array &x, const std::string &domain, const std::string &method, int terms, double precision)
        {
            const IftrDistribution d(p, inversion(method, terms, precision));
            const auto dom = parse_domain(domain);
            return map_array(x, [&](double v) { return d.ccdf(v, dom).value; });
        },
        py::arg("params"), py::arg("x"), py::arg("domain") = "snr", py::arg("method") = "euler-summation",
        py::arg("terms") = 64, py::arg("precision") = 1e-10, "Complementary CDF, accurate in the upper tail");

    m.def("cdf_asymptotic_slope", &cdf_asymptotic_slope, py::arg("params"));

    m.def(
        "sample",
        [](const IftrParams &p, std::size_t n, std::uint64_t seed, const std::string &model, const std::string &output,
           double phase_rotation, unsigned threads) -> py::object
        {
            SimConfig c;
            c.n_samples = n;
            c.seed = seed;
            c.model = parse_sim_model(model);
            c.output = parse_sim_output(output);
            c.phase_rotation = phase_rotation;
            c.threads = threads;
            SampleSet s;
            {
                py::gil_scoped_release release;
                s = sample(p, c);
            }
            if (c.output == SimOutput::complex_voltage)
                return py::array_t<std::complex<double>>(py::ssize_t(s.voltages.size()), s.voltages.data());
            return py::array_t<double>(py::ssize_t(s.values.size()), s.values.data());
        },
        py::arg("params"), py::arg("n"), py::arg("seed") = 1, py::arg("model") = "iftr", py::arg("output") = "snr",
        py::arg("phase_rotation") = 0.0, py::arg("threads") = 0, "Channel samples");

    m.def(
        "ber",
        [](const IftrParams &p, const std::vector<std::pair<double, double>> &terms, const std::string &method,
           std::size_t n, std::uint64_t seed)
        {
            const auto mod = modulation(terms);
            BerResult r;
            if (method == "exact")
                r = ber_exact(p, mod);
            else if (method == "quadrature")
                r = ber_mgf_quadrature(p, mod);
            else if (method == "asymptotic")
                r = ber_asymptotic(p, mod);
            else if (method == "monte-carlo")
                r = ber_monte_carlo(p, mod, n, seed);
            else
                throw ValidationError("method must be exact, quadrature, asymptotic or monte-carlo");
            py::dict d;
            d["value"] = r.value;
            d["method"] = to_string(r.method);
            d["standard_error"] = r.standard_error;
            d["notice"] = r.notice;
            return d;
        },
        py::arg("params"), py::arg("modulation") = std::vector<std::pair<double, double>>{}, py::arg("method") = "exact",
        py::arg("n") = 1000000, py::arg("seed") = 1,
        "Average BER; modulation is a list of (alpha, beta) pairs, BPSK when empty");

    m.def("outage", [](const IftrParams &p, double rate) { return outage(p, rate).value; }, py::arg("params"), py::arg("rate"));
    m.def("outage_asymptotic", &outage_asymptotic, py::arg("params"), py::arg("rate"));

    m.def(
        "_fit_cdf",
        [](const std::vector<double> &x, const std::vector<double> &f, const std::string &domain, const std::string &model,
           bool compare, bool fit_scale, double omega, int restarts, std::uint64_t seed, int m1_max)
        {
            if (x.size() != f.size())
                throw ValidationError("x and cdf must have the same length");
            EmpiricalCdf emp;
            emp.domain = parse_domain(domain);
            for (std::size_t i = 0; i < x.size(); ++i)
                emp.points.push_back({x[i], f[i]});
            emp.validate();
            const auto cfg = fit_config(model, fit_scale, omega, restarts, seed, m1_max);
            py::gil_scoped_release release;
            return fit_json(emp, cfg, compare);
        });

    m.def(
        "_fit_samples",
        [](std::vector<double> samples, const std::string &domain, bool normalize, int points, const std::string &model,
           bool compare, bool fit_scale, double omega, int restarts, std::uint64_t seed, int m1_max)
        {
            const auto emp = empirical_cdf_from_samples(std::move(samples), parse_domain(domain), normalize, points);
            const auto cfg = fit_config(model, fit_scale, omega, restarts, seed, m1_max);
            py::gil_scoped_release release;
            return fit_json(emp, cfg, compare);
        });

    m.def("preset_names", &preset_names);
    m.def(
        "preset",
        [](const std::string &name)
        {
            const auto p = preset(name);
            py::dict d;
            d["name"] = p.name;
            d["quantity"] = p.quantity;
            d["start"] = p.start;
            d["stop"] = p.stop;
            d["count"] = p.count;
            d["db_spacing"] = p.db_spacing;
            d["rate"] = p.rate;
            py::list curves;
            for (const auto &c : p.curves)
                curves.append(py::make_tuple(c.label, c.params));
            d["curves"] = curves;
            return d;
        },
        py::arg("name"));
}
