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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iftr/errors.hpp"
#include "iftr/fit.hpp"
#include "iftr/link.hpp"
#include "iftr/params.hpp"
#include "iftr/presets.hpp"
#include "iftr/sim.hpp"
#include "iftr/stats.hpp"

using nlohmann::json;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_io = 1,
        exit_validation = 2,
        exit_numerical = 3
    };

    std::string fmt(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    double parse_shape(const std::string &s, const char *name)
    {
        if (s == "inf" || s == "Inf" || s == "infinity")
            return INFINITY;
        try
        {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos == s.size())
                return v;
        }
        catch (const std::exception &)
        {
        }
        throw iftr::ValidationError(std::string("--") + name + " must be a number or 'inf' (got '" + s + "')");
    }

    struct ParamFlags
    {
        std::optional<double> k, delta;
        std::string m1, m2;
        std::optional<double> gamma_bar, gamma_bar_db, omega;
        bool m1_on_weaker = false;
        std::string params_file;

        void add(CLI::App &app)
        {
            app.add_option("--K", k, "Specular-to-diffuse power ratio K >= 0");
            app.add_option("--Delta", delta, "Specular similarity Delta in [0, 1]");
            app.add_option("--m1", m1, "Shape of the fluctuation of ray 1 (or 'inf')");
            app.add_option("--m2", m2, "Shape of the fluctuation of ray 2 (or 'inf')");
            app.add_option("--gamma-bar", gamma_bar, "Mean SNR, linear");
            app.add_option("--gamma-bar-db", gamma_bar_db, "Mean SNR in dB");
            app.add_option("--Omega", omega, "Mean envelope power E{r^2}");
            app.add_flag("--m1-on-weaker", m1_on_weaker, "m1 belongs to the weaker ray");
            app.add_option("--params", params_file, "JSON parameter document");
        }

        bool any() const
        {
            return k || delta || !m1.empty() || !m2.empty() || gamma_bar || gamma_bar_db || omega || !params_file.empty();
        }

        // Flags override the JSON document, which overrides `base`
        iftr::IftrParams resolve(iftr::IftrParams base) const
        {
            if (!params_file.empty())
            {
                std::ifstream is(params_file);
                if (!is)
                    throw iftr::IoError("cannot open '" + params_file + "'");
                json doc;
                try
                {
                    doc = json::parse(is);
                }
                catch (const json::parse_error &e)
                {
                    throw iftr::IoError("'" + params_file + "': " + e.what());
                }
                base = iftr::params_from_json(doc);
            }
            if (k)
                base.k = *k;
            if (delta)
                base.delta = *delta;
            if (!m1.empty())
                base.m1 = parse_shape(m1, "m1");
            if (!m2.empty())
                base.m2 = parse_shape(m2, "m2");
            if (int(bool(gamma_bar)) + int(bool(gamma_bar_db)) + int(bool(omega)) > 1)
                throw iftr::ValidationError("give only one of --gamma-bar, --gamma-bar-db, --Omega");
            if (gamma_bar)
                base.mean_snr = *gamma_bar;
            if (gamma_bar_db)
                base.mean_snr = iftr::db_to_linear(*gamma_bar_db);
            if (omega)
                base.mean_snr = *omega;
            if (m1_on_weaker)
                base.m1_on_weaker = true;
            base.validate();
            return base;
        }
    };

    struct Grid
    {
        std::string spec;
        std::string spacing = "linear";
        std::vector<double> explicit_x;

        // Linear abscissae; dB grids use 10 log10 (or 20 log10 for envelopes)
        std::vector<double> points(bool envelope) const
        {
            if (!explicit_x.empty())
                return explicit_x;
            if (spec.empty())
                throw iftr::ValidationError("a grid is required (--grid start:stop:count, --x or --preset)");
            double start, stop;
            long count;
            char c1, c2;
            std::istringstream is(spec);
            if (!(is >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || !is.eof())
                throw iftr::ValidationError("grid must be start:stop:count (got '" + spec + "')");
            return make(start, stop, count, spacing == "db", envelope);
        }

        static std::vector<double> make(double start, double stop, long count, bool db, bool envelope)
        {
            if (count < 2 || count > 1000000)
                throw iftr::ValidationError("grid count must lie in [2, 1e6]");
            if (!(start < stop))
                throw iftr::ValidationError("grid start must be below stop");
            std::vector<double> x;
            for (long i = 0; i < count; ++i)
            {
                const double t = start + (stop - start) * double(i) / double(count - 1);
                x.push_back(db ? std::pow(10.0, t / (envelope ? 20.0 : 10.0)) : t);
            }
            return x;
        }
    };

    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };

    struct Output
    {
        std::string path;
        bool json_out = false;

        void add(CLI::App &app)
        {
            app.add_option("-o,--output", path, "Output file (default: stdout)");
            app.add_flag("--json", json_out, "Emit JSON instead of CSV");
        }

        void write(const Table &t, const json &provenance) const
        {
            std::ostringstream os;
            if (json_out)
            {
                json j;
                j["provenance"] = provenance;
                j["columns"] = t.columns;
                json rows = json::array();
                for (const auto &r : t.rows)
                {
                    json row = json::array();
                    for (const auto &cell : r)
                    {
                        char *end = nullptr;
                        const double v = std::strtod(cell.c_str(), &end);
                        if (!cell.empty() && *end == '\0')
                            row.push_back(v);
                        else
                            row.push_back(cell);
                    }
                    rows.push_back(row);
                }
                j["rows"] = rows;
                os << j.dump(2) << '\n';
            }
            else
            {
                for (std::size_t i = 0; i < t.columns.size(); ++i)
                    os << (i ? "," : "") << t.columns[i];
                os << '\n';
                for (const auto &r : t.rows)
                {
                    for (std::size_t i = 0; i < r.size(); ++i)
                        os << (i ? "," : "") << r[i];
                    os << '\n';
                }
                os << "# provenance: " << provenance.dump() << '\n';
            }
            emit(os.str());
        }

        void emit(const std::string &text) const
        {
            if (path.empty())
            {
                std::cout << text;
                std::cout.flush();
                return;
            }
            std::ofstream f(path, std::ios::binary);
            if (!f || !(f << text))
                throw iftr::IoError("cannot write '" + path + "'");
        }
    };

    json provenance(const std::string &command, const json &config)
    {
        return {{"tool", "iftr"}, {"version", iftr::version()}, {"command", command}, {"config", config}};
    }

    // Curves of a command: a preset or the single parameter set from flags
    std::vector<iftr::PresetCurve> curves_for(const std::optional<iftr::Preset> &pre, const ParamFlags &flags)
    {
        if (pre)
        {
            auto curves = pre->curves;
            if (flags.any())
                for (auto &c : curves)
                    c.params = flags.resolve(c.params);
            return curves;
        }
        iftr::IftrParams base;
        base.m1 = base.m2 = 1.0;
        if (!flags.k && flags.params_file.empty())
            throw iftr::ValidationError("--K (or --params / --preset) is required");
        return {{"", flags.resolve(base)}};
    }

    void warn_tolerance(bool met, double x)
    {
        if (!met)
            std::cerr << "warning: inversion error estimate above target at x = " << fmt(x) << '\n';
    }

    // ----- eval -----
    struct EvalCmd
    {
        ParamFlags params;
        Grid grid;
        Output out;
        std::string quantity;
        std::string preset_name;
        std::string method = "euler-summation";
        int terms = 64;
        double precision = 1e-10;

        int run()
        {
            std::optional<iftr::Preset> pre;
            if (!preset_name.empty())
                pre = iftr::preset(preset_name);
            if (quantity.empty() && pre)
                quantity = pre->quantity;
            static const std::vector<std::string> known = {"pdf-envelope", "pdf-snr", "cdf-snr", "cdf-envelope", "ccdf-envelope"};
            if (std::find(known.begin(), known.end(), quantity) == known.end())
                throw iftr::ValidationError("--quantity must be one of pdf-envelope, pdf-snr, cdf-snr, cdf-envelope, ccdf-envelope");
            const bool envelope = quantity.find("envelope") != std::string::npos;

            std::vector<double> xs;
            if (pre && grid.spec.empty() && grid.explicit_x.empty())
                xs = Grid::make(pre->start, pre->stop, pre->count, pre->db_spacing, envelope);
            else
                xs = grid.points(envelope);
            for (double x : xs)
                if (!(x >= 0.0))
                    throw iftr::ValidationError("abscissae must be >= 0");

            iftr::specfun::LaplaceInversionConfig cfg{iftr::specfun::parse_inversion_method(method), terms, precision};
            cfg.validate();
            const auto curves = curves_for(pre, params);
            const auto domain = envelope ? iftr::DistributionDomain::envelope : iftr::DistributionDomain::snr;

            Table t;
            t.columns = {"x", "value"};
            if (curves.size() > 1)
                t.columns.push_back("curve");
            json cfg_json = {{"quantity", quantity}, {"method", iftr::specfun::to_string(cfg.method)},
                             {"terms", cfg.terms}, {"precision_target", cfg.precision_target}};
            json curve_json = json::array();
            for (const auto &c : curves)
            {
                const iftr::IftrDistribution dist(c.params, cfg);
                curve_json.push_back({{"label", c.label}, {"params", iftr::params_to_json(c.params)}});
                for (double x : xs)
                {
                    iftr::StatValue v;
                    if (quantity.rfind("pdf", 0) == 0)
                        v = dist.pdf(x, domain);
                    else if (quantity == "ccdf-envelope")
                        v = dist.ccdf(x, domain);
                    else
                        v = dist.cdf(x, domain);
                    warn_tolerance(v.tolerance_met, x);
                    std::vector<std::string> row = {fmt(x), fmt(v.value)};
                    if (curves.size() > 1)
                        row.push_back(c.label);
                    t.rows.push_back(row);
                }
            }
            cfg_json["curves"] = curve_json;
            if (pre)
                cfg_json["preset"] = pre->name;
            out.write(t, provenance("eval", cfg_json));
            return exit_ok;
        }
    };

    // ----- sample -----
    struct SampleCmd
    {
        ParamFlags params;
        std::string preset_name;
        int curve = 0;
        std::string model = "iftr";
        std::string output_kind = "envelope";
        long long n = -1;
        std::uint64_t seed = 1;
        double rotation = 0.0;
        unsigned threads = 0;
        std::string path;
        bool binary = false;

        int run()
        {
            if (n < 1)
                throw iftr::ValidationError("--n must be >= 1");
            if (path.empty())
                throw iftr::ValidationError("--out is required");
            std::optional<iftr::Preset> pre;
            if (!preset_name.empty())
                pre = iftr::preset(preset_name);
            const auto curves = curves_for(pre, params);
            if (curve < 0 || curve >= int(curves.size()))
                throw iftr::ValidationError("--curve must lie in [0, " + std::to_string(curves.size() - 1) + "]");

            iftr::SimConfig cfg;
            cfg.n_samples = std::size_t(n);
            cfg.seed = seed;
            cfg.model = iftr::parse_sim_model(model);
            cfg.output = iftr::parse_sim_output(output_kind);
            cfg.phase_rotation = rotation;
            cfg.threads = threads;
            const auto &p = curves[std::size_t(curve)].params;
            const auto samples = iftr::sample(p, cfg);
            json header = iftr::sim_provenance(p, cfg);
            header["tool"] = "iftr";
            header["version"] = iftr::version();
            if (pre)
                header["preset"] = pre->name;
            if (binary)
                iftr::write_samples_binary(path, samples, header);
            else
                iftr::write_samples_csv(path, samples, header);
            return exit_ok;
        }
    };

    // ----- ber -----
    struct BerCmd
    {
        ParamFlags params;
        Grid grid;
        Output out;
        std::string preset_name;
        std::vector<double> alpha, beta;
        long long mc = 0;
        long long ftr_mc = -1;
        std::uint64_t seed = 1;

        int run()
        {
            std::optional<iftr::Preset> pre;
            if (!preset_name.empty())
                pre = iftr::preset(preset_name);
            if (pre && pre->quantity != "ber")
                throw iftr::ValidationError("preset " + pre->name + " is not a BER preset");
            if (alpha.size() != beta.size())
                throw iftr::ValidationError("--alpha and --beta need the same number of values");
            std::vector<iftr::ModulationTerm> terms;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                terms.push_back({alpha[i], beta[i]});
            const iftr::ModulationSpec mod = terms.empty() ? iftr::ModulationSpec::bpsk() : iftr::ModulationSpec(terms);
            if (mc < 0)
                throw iftr::ValidationError("--mc must be >= 0");
            const long long ftr = ftr_mc >= 0 ? ftr_mc : (pre ? 100000 : 0);

            std::vector<double> db = snr_grid_db(pre);
            const auto curves = curves_for(pre, params);
            Table t;
            t.columns = {"gamma_bar_db", "exact", "asymptotic"};
            if (mc > 0)
                t.columns.push_back("monte_carlo");
            if (ftr > 0)
                t.columns.push_back("ftr_monte_carlo");
            if (curves.size() > 1)
                t.columns.push_back("curve");
            std::string notice;
            json curve_json = json::array();
            for (const auto &c : curves)
            {
                curve_json.push_back({{"label", c.label}, {"params", iftr::params_to_json(c.params)}});
                for (std::size_t i = 0; i < db.size(); ++i)
                {
                    auto p = c.params;
                    p.mean_snr = iftr::db_to_linear(db[i]);
                    const auto ex = iftr::ber_exact(p, mod);
                    if (!ex.notice.empty())
                        notice = ex.notice;
                    std::vector<std::string> row = {fmt(db[i]), fmt(ex.value), fmt(iftr::ber_asymptotic(p, mod).value)};
                    if (mc > 0)
                        row.push_back(fmt(iftr::ber_monte_carlo(p, mod, std::size_t(mc), seed + i).value));
                    if (ftr > 0)
                    {
                        iftr::SimConfig sc;
                        sc.n_samples = std::size_t(ftr);
                        sc.seed = seed + i;
                        const auto s = iftr::sample_ftr(p.k, p.delta, p.m_strong(), p.mean_snr, sc);
                        row.push_back(fmt(iftr::cep_average(s.values, mod).value));
                    }
                    if (curves.size() > 1)
                        row.push_back(c.label);
                    t.rows.push_back(row);
                }
            }
            if (!notice.empty())
                std::cerr << "notice: " << notice << '\n';
            json mod_json = json::array();
            for (const auto &term : mod.terms())
                mod_json.push_back({{"alpha", term.alpha}, {"beta", term.beta}});
            json cfg = {{"modulation", mod_json}, {"monte_carlo_samples", mc}, {"ftr_monte_carlo_samples", ftr},
                        {"seed", seed}, {"curves", curve_json}};
            if (pre)
                cfg["preset"] = pre->name;
            out.write(t, provenance("ber", cfg));
            return exit_ok;
        }

        std::vector<double> snr_grid_db(const std::optional<iftr::Preset> &pre) const
        {
            if (!grid.explicit_x.empty())
                return grid.explicit_x;
            if (grid.spec.empty() && pre)
                return Grid::make(pre->start, pre->stop, pre->count, false, false);
            Grid g = grid;
            g.spacing = "linear";
            return g.points(false);
        }
    };

    // ----- outage -----
    struct OutageCmd
    {
        ParamFlags params;
        Grid grid;
        Output out;
        std::string preset_name;
        std::optional<double> rate;
        long long mc = 0;
        std::uint64_t seed = 1;

        int run()
        {
            std::optional<iftr::Preset> pre;
            if (!preset_name.empty())
                pre = iftr::preset(preset_name);
            if (pre && pre->quantity != "outage")
                throw iftr::ValidationError("preset " + pre->name + " is not an outage preset");
            const double rs = rate ? *rate : (pre ? pre->rate : 0.0);
            if (!(rs > 0.0))
                throw iftr::ValidationError("--rate must be > 0");
            if (mc < 0)
                throw iftr::ValidationError("--mc must be >= 0");
            std::vector<double> db;
            if (!grid.explicit_x.empty())
                db = grid.explicit_x;
            else if (grid.spec.empty() && pre)
                db = Grid::make(pre->start, pre->stop, pre->count, false, false);
            else
            {
                Grid g = grid;
                g.spacing = "linear";
                db = g.points(false);
            }
            const auto curves = curves_for(pre, params);
            Table t;
            t.columns = {"gamma_bar_db", "exact", "asymptotic"};
            if (mc > 0)
                t.columns.push_back("monte_carlo");
            if (curves.size() > 1)
                t.columns.push_back("curve");
            json curve_json = json::array();
            for (const auto &c : curves)
            {
                curve_json.push_back({{"label", c.label}, {"params", iftr::params_to_json(c.params)}});
                for (std::size_t i = 0; i < db.size(); ++i)
                {
                    auto p = c.params;
                    p.mean_snr = iftr::db_to_linear(db[i]);
                    const auto ex = iftr::outage(p, rs);
                    warn_tolerance(ex.tolerance_met, std::exp2(rs) - 1.0);
                    std::vector<std::string> row = {fmt(db[i]), fmt(ex.value), fmt(iftr::outage_asymptotic(p, rs))};
                    if (mc > 0)
                        row.push_back(fmt(iftr::outage_monte_carlo(p, rs, std::size_t(mc), seed + i).value));
                    if (curves.size() > 1)
                        row.push_back(c.label);
                    t.rows.push_back(row);
                }
            }
            json cfg = {{"rate", rs}, {"monte_carlo_samples", mc}, {"seed", seed}, {"curves", curve_json}};
            if (pre)
                cfg["preset"] = pre->name;
            out.write(t, provenance("outage", cfg));
            return exit_ok;
        }
    };

    // ----- fit -----
    struct FitCmd
    {
        std::string input;
        std::string format = "auto";
        std::string domain = "envelope";
        std::string model = "iftr";
        bool compare = false;
        bool fit_scale = false;
        bool normalize = false;
        double omega = 1.0;
        int restarts = 4;
        std::uint64_t seed = 1;
        int m1_max = 60;
        int points = 40;
        double tolerance = 1e-6;
        int max_evaluations = 800;
        std::string path;

        int run()
        {
            if (input.empty())
                throw iftr::ValidationError("--input is required");
            const auto dom = iftr::parse_domain(domain);
            iftr::EmpiricalCdf emp = load(dom);

            iftr::FitConfig cfg;
            cfg.family = iftr::parse_model_family(model);
            cfg.fit_scale = fit_scale;
            cfg.omega = omega;
            cfg.restarts = restarts;
            cfg.seed = seed;
            cfg.m1_max = m1_max;
            cfg.tolerance = tolerance;
            cfg.max_evaluations = max_evaluations;
            cfg.validate();

            json config = {{"input", input}, {"format", format}, {"domain", iftr::to_string(emp.domain)}, {"model", model},
                           {"compare", compare}, {"fit_scale", fit_scale}, {"normalize", emp.normalized},
                           {"omega", omega}, {"restarts", restarts}, {"seed", seed}, {"m1_max", m1_max},
                           {"points", emp.points.size()}, {"tolerance", tolerance},
                           {"max_evaluations", max_evaluations}};
            json doc;
            doc["provenance"] = provenance("fit", config);
            bool converged = true;
            if (compare)
            {
                const auto results = iftr::fit_compare(emp, cfg);
                json models = json::array();
                for (const auto &r : results)
                {
                    models.push_back(iftr::to_json(r));
                    converged = converged && r.converged;
                }
                doc["models"] = models;
            }
            else
            {
                const auto r = iftr::fit(emp, cfg);
                converged = r.converged;
                const json fitted = iftr::to_json(r);
                for (const auto &[key, value] : fitted.items())
                    doc[key] = value;
            }
            Output o{path, true};
            o.emit(doc.dump(2) + "\n");
            if (!converged)
            {
                std::cerr << "error: optimizer did not converge; best parameters so far were written\n";
                return exit_numerical;
            }
            return exit_ok;
        }

        iftr::EmpiricalCdf load(iftr::DistributionDomain dom)
        {
            std::string fmt_used = format;
            if (fmt_used == "auto")
            {
                std::ifstream is(input, std::ios::binary);
                if (!is)
                    throw iftr::IoError("cannot open '" + input + "'");
                std::string first;
                char magic[8] = {};
                is.read(magic, 8);
                if (is.gcount() == 8 && std::string(magic, 8) == "IFTRSMP1")
                    fmt_used = "samples";
                else
                {
                    is.clear();
                    is.seekg(0);
                    while (std::getline(is, first))
                        if (!first.empty() && first[0] != '#')
                            break;
                    fmt_used = (first.find("cdf") != std::string::npos) ? "cdf" : "samples";
                }
            }
            if (fmt_used == "cdf")
            {
                auto e = iftr::load_empirical_cdf(input, {dom});
                e.normalized = normalize;
                return e;
            }
            if (fmt_used != "samples")
                throw iftr::ValidationError("--format must be auto, cdf or samples");
            auto loaded = iftr::read_samples(input);
            auto d = dom;
            if (loaded.header.is_object() && loaded.header.contains("output"))
            {
                const auto kind = loaded.header["output"].get<std::string>();
                if (kind == "snr")
                    d = iftr::DistributionDomain::snr;
                else
                    d = iftr::DistributionDomain::envelope;
            }
            return iftr::empirical_cdf_from_samples(std::move(loaded.values), d, normalize, points);
        }
    };

    int report(const std::exception &e, int code)
    {
        std::cerr << "error: " << e.what() << '\n';
        return code;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"iftr: statistics, simulation, link performance and fitting for IFTR fading"};
    app.require_subcommand(1);
    app.set_version_flag("--version", iftr::version());

    EvalCmd eval;
    auto *ev = app.add_subcommand("eval", "Evaluate PDF/CDF curves");
    eval.params.add(*ev);
    ev->add_option("--quantity", eval.quantity, "pdf-envelope, pdf-snr, cdf-snr, cdf-envelope or ccdf-envelope");
    ev->add_option("--grid", eval.grid.spec, "start:stop:count");
    ev->add_option("--spacing", eval.grid.spacing, "linear or db")->check(CLI::IsMember({"linear", "db"}));
    ev->add_option("--x", eval.grid.explicit_x, "Explicit abscissae")->delimiter(',');
    ev->add_option("--preset", eval.preset_name, "fig1 .. fig5");
    ev->add_option("--method", eval.method, "euler-summation or fixed-talbot");
    ev->add_option("--terms", eval.terms, "Inversion nodes");
    ev->add_option("--precision", eval.precision, "Inversion precision target");
    eval.out.add(*ev);

    SampleCmd sample;
    auto *sa = app.add_subcommand("sample", "Generate channel samples");
    sample.params.add(*sa);
    sa->add_option("--preset", sample.preset_name, "fig1 .. fig5");
    sa->add_option("--curve", sample.curve, "Curve index within the preset");
    sa->add_option("--model", sample.model, "iftr, ftr, twdp, rice or rician-shadowed");
    sa->add_option("--kind", sample.output_kind, "envelope, snr or complex-voltage");
    sa->add_option("--n", sample.n, "Number of samples")->required();
    sa->add_option("--seed", sample.seed, "RNG seed");
    sa->add_option("--phase-rotation", sample.rotation, "Common specular phase rotation (rad)");
    sa->add_option("--threads", sample.threads, "Worker threads (0 = all cores)");
    sa->add_option("--out", sample.path, "Output file")->required();
    sa->add_flag("--binary", sample.binary, "Binary instead of CSV");

    BerCmd ber;
    auto *be = app.add_subcommand("ber", "Average BER versus mean SNR");
    ber.params.add(*be);
    be->add_option("--grid", ber.grid.spec, "Mean SNR grid in dB, start:stop:count");
    be->add_option("--x", ber.grid.explicit_x, "Explicit mean SNR values in dB")->delimiter(',');
    be->add_option("--preset", ber.preset_name, "fig4");
    be->add_option("--alpha", ber.alpha, "CEP weights alpha_r")->delimiter(',');
    be->add_option("--beta", ber.beta, "CEP scales beta_r")->delimiter(',');
    be->add_option("--mc", ber.mc, "Monte Carlo samples per point (0 = off)");
    be->add_option("--ftr-mc", ber.ftr_mc, "FTR Monte Carlo samples per point");
    be->add_option("--seed", ber.seed, "RNG seed");
    ber.out.add(*be);

    OutageCmd outage;
    auto *ou = app.add_subcommand("outage", "Outage probability versus mean SNR");
    outage.params.add(*ou);
    ou->add_option("--grid", outage.grid.spec, "Mean SNR grid in dB, start:stop:count");
    ou->add_option("--x", outage.grid.explicit_x, "Explicit mean SNR values in dB")->delimiter(',');
    ou->add_option("--preset", outage.preset_name, "fig5");
    ou->add_option("--rate", outage.rate, "Rate threshold Rs in bit/s/Hz");
    ou->add_option("--mc", outage.mc, "Monte Carlo samples per point (0 = off)");
    ou->add_option("--seed", outage.seed, "RNG seed");
    outage.out.add(*ou);

    FitCmd fit;
    auto *fi = app.add_subcommand("fit", "Fit model families to an empirical CDF or a sample file");
    fi->add_option("--input", fit.input, "CSV 'x,cdf' / 'x_db,cdf' or a sample file")->required();
    fi->add_option("--format", fit.format, "auto, cdf or samples");
    fi->add_option("--domain", fit.domain, "snr or envelope abscissae");
    fi->add_option("--model", fit.model, "iftr, iftr-integer-m1, rice, twdp or rician-shadowed");
    fi->add_flag("--compare", fit.compare, "Fit iftr, rice, twdp and rician-shadowed");
    fi->add_flag("--fit-scale", fit.fit_scale, "Fit Omega as well");
    fi->add_flag("--normalize", fit.normalize, "Divide sample power by its mean");
    fi->add_option("--omega", fit.omega, "Fixed Omega when not fitted");
    fi->add_option("--restarts", fit.restarts, "Random restarts per family");
    fi->add_option("--seed", fit.seed, "Seed of the restart generator");
    fi->add_option("--m1-max", fit.m1_max, "Upper end of the integer m1 grid");
    fi->add_option("--points", fit.points, "Quantile grid size for sample files");
    fi->add_option("--tolerance", fit.tolerance, "Optimizer tolerance on epsilon");
    fi->add_option("--max-evaluations", fit.max_evaluations, "Objective evaluations per restart");
    fi->add_option("-o,--output", fit.path, "Output file (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_validation;
    }

    try
    {
        if (ev->parsed())
            return eval.run();
        if (sa->parsed())
            return sample.run();
        if (be->parsed())
            return ber.run();
        if (ou->parsed())
            return outage.run();
        if (fi->parsed())
            return fit.run();
    }
    catch (const iftr::ValidationError &e)
    {
        return report(e, exit_validation);
    }
    catch (const iftr::IoError &e)
    {
        return report(e, exit_io);
    }
    catch (const iftr::NumericalError &e)
    {
        return report(e, exit_numerical);
    }
    catch (const std::exception &e)
    {
        return report(e, exit_numerical);
    }
    return exit_validation;
}
