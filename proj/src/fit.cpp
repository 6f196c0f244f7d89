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

#include "iftr/fit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "iftr/errors.hpp"
#include "iftr/rng.hpp"
#include "iftr/stats.hpp"

namespace iftr
{
    namespace
    {
        std::string trim(std::string s)
        {
            auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
            s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
            s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
            return s;
        }

        std::string lower(std::string s)
        {
            for (auto &c : s)
                c = char(std::tolower(static_cast<unsigned char>(c)));
            return s;
        }

        double parse_number(const std::string &field, std::size_t line)
        {
            const std::string t = trim(field);
            char *end = nullptr;
            const double v = std::strtod(t.c_str(), &end);
            if (t.empty() || *end != '\0')
                throw ParseError("not a number: '" + t + "'", line);
            return v;
        }

        constexpr double infeasible = std::numeric_limits<double>::infinity();
    }

    void EmpiricalCdf::validate() const
    {
        if (points.size() < 8)
            throw ValidationError("empirical CDF needs at least 8 points (got " + std::to_string(points.size()) + ")");
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const auto &p = points[i];
            if (!(p.x > 0.0) || !std::isfinite(p.x))
                throw ValidationError("empirical CDF point " + std::to_string(i + 1) + ": x must be finite and > 0");
            if (!(p.f > 0.0 && p.f <= 1.0))
                throw ValidationError("empirical CDF point " + std::to_string(i + 1) + ": F must lie in (0, 1]");
            if (i > 0 && !(p.x > points[i - 1].x))
                throw ValidationError("empirical CDF point " + std::to_string(i + 1) + ": x is not strictly increasing");
            if (i > 0 && p.f < points[i - 1].f)
                throw ValidationError("empirical CDF point " + std::to_string(i + 1) + ": F decreases");
        }
    }

    std::vector<double> EmpiricalCdf::power_abscissae() const
    {
        std::vector<double> x;
        x.reserve(points.size());
        for (const auto &p : points)
            x.push_back(domain == DistributionDomain::envelope ? p.x * p.x : p.x);
        return x;
    }

    EmpiricalCdf load_empirical_cdf(const std::string &path, const CdfFileOptions &opt)
    {
        std::ifstream is(path);
        if (!is)
            throw IoError("cannot open '" + path + "'");
        struct Row
        {
            double x, f;
            std::size_t line;
        };
        std::vector<Row> rows;
        bool have_header = false, db = false;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line))
        {
            ++lineno;
            line = trim(line);
            if (line.empty() || line[0] == '#')
                continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
                throw ParseError("expected two comma-separated columns", lineno);
            const std::string a = trim(line.substr(0, comma)), b = trim(line.substr(comma + 1));
            if (!have_header)
            {
                const std::string ha = lower(a), hb = lower(b);
                if (hb != "cdf" || (ha != "x" && ha != "x_db"))
                    throw ParseError("header must be 'x,cdf' or 'x_db,cdf'", lineno);
                db = ha == "x_db";
                have_header = true;
                continue;
            }
            double x = parse_number(a, lineno);
            const double f = parse_number(b, lineno);
            if (db)
                x = std::pow(10.0, x / (opt.domain == DistributionDomain::envelope ? 20.0 : 10.0));
            if (!(x > 0.0) || !std::isfinite(x))
                throw ParseError("abscissa must be finite and > 0", lineno);
            if (!(f > 0.0 && f <= 1.0))
                throw ParseError("CDF value must lie in (0, 1]", lineno);
            rows.push_back({x, f, lineno});
        }
        if (!have_header)
            throw IoError("'" + path + "' has no 'x,cdf' header");
        std::stable_sort(rows.begin(), rows.end(), [](const Row &l, const Row &r) { return l.x < r.x; });
        EmpiricalCdf e;
        e.domain = opt.domain;
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i > 0 && rows[i].x == rows[i - 1].x)
                throw ParseError("duplicate abscissa", rows[i].line);
            if (i > 0 && rows[i].f < rows[i - 1].f)
                throw ParseError("CDF decreases with increasing x", rows[i].line);
            e.points.push_back({rows[i].x, rows[i].f});
        }
        e.validate();
        return e;
    }

    EmpiricalCdf empirical_cdf_from_samples(std::vector<double> samples, DistributionDomain domain, bool normalize,
                                            int points, double p_min)
    {
        const std::size_t n = samples.size();
        if (n < 16)
            throw ValidationError("need at least 16 samples for an empirical CDF");
        if (points < 8)
            throw ValidationError("quantile grid needs at least 8 points");
        for (double v : samples)
            if (!(v > 0.0) || !std::isfinite(v))
                throw ValidationError("samples must be finite and > 0");
        EmpiricalCdf e;
        e.domain = domain;
        e.normalized = normalize;
        if (normalize)
        {
            double power = 0.0;
            for (double v : samples)
                power += domain == DistributionDomain::envelope ? v * v : v;
            power /= double(n);
            const double scale = domain == DistributionDomain::envelope ? 1.0 / std::sqrt(power) : 1.0 / power;
            for (double &v : samples)
                v *= scale;
        }
        std::sort(samples.begin(), samples.end());

        if (!(p_min > 0.0))
            p_min = std::min(0.01, 100.0 / double(n));
        p_min = std::clamp(p_min, 1.0 / double(n), 0.25);
        const int low = (points * 3) / 4;
        const int high = points - low;
        std::vector<double> probs;
        for (int i = 0; i < low; ++i)
            probs.push_back(p_min * std::pow(0.5 / p_min, double(i) / double(low - 1)));
        for (int i = 1; i <= high; ++i)
            probs.push_back(0.5 + 0.49 * double(i) / double(high));

        for (double p : probs)
        {
            const auto idx = std::size_t(std::max(1.0, std::ceil(p * double(n)))) - 1;
            const double x = samples[idx];
            // ties: use the last sample equal to x
            const auto last = std::size_t(std::upper_bound(samples.begin(), samples.end(), x) - samples.begin());
            const double f = double(last) / double(n);
            if (!e.points.empty() && x <= e.points.back().x)
                continue;
            e.points.push_back({x, f});
        }
        e.validate();
        return e;
    }

    double modified_ks(const EmpiricalCdf &emp, const std::function<double(double)> &model_cdf)
    {
        double eps = 0.0;
        for (std::size_t i = 0; i < emp.points.size(); ++i)
        {
            const auto &p = emp.points[i];
            const double fa = model_cdf(p.x);
            if (!(fa > 0.0))
                throw ValidationError("model CDF is not positive at point " + std::to_string(i + 1) + " (x = " +
                                      std::to_string(p.x) + ")");
            eps = std::max(eps, std::abs(std::log10(p.f) - std::log10(fa)));
        }
        return eps;
    }

    ModelFamily parse_model_family(const std::string &name)
    {
        if (name == "iftr")
            return ModelFamily::iftr;
        if (name == "iftr-integer-m1")
            return ModelFamily::iftr_integer_m1;
        if (name == "rice")
            return ModelFamily::rice;
        if (name == "twdp")
            return ModelFamily::twdp;
        if (name == "rician-shadowed")
            return ModelFamily::rician_shadowed;
        throw ValidationError("unknown model family '" + name + "'");
    }

    std::string to_string(ModelFamily f)
    {
        switch (f)
        {
        case ModelFamily::iftr: return "iftr";
        case ModelFamily::iftr_integer_m1: return "iftr-integer-m1";
        case ModelFamily::rice: return "rice";
        case ModelFamily::twdp: return "twdp";
        case ModelFamily::rician_shadowed: return "rician-shadowed";
        }
        return "iftr";
    }

    void FitConfig::validate() const
    {
        auto check = [](const Interval &i, const char *name, bool allow_inf)
        {
            if (!(i.lo <= i.hi) || !std::isfinite(i.lo) || (!allow_inf && !std::isfinite(i.hi)))
                throw ValidationError(std::string("invalid bounds for ") + name);
        };
        check(bounds.k, "K", false);
        check(bounds.delta, "Delta", false);
        check(bounds.m, "m", true);
        check(bounds.omega, "Omega", false);
        if (bounds.k.lo <= 0.0 || bounds.m.lo <= 0.0 || bounds.omega.lo <= 0.0)
            throw ValidationError("K, m and Omega bounds must be positive");
        if (bounds.delta.lo < 0.0 || bounds.delta.hi > 1.0)
            throw ValidationError("Delta bounds must lie within [0, 1]");
        if (restarts < 1)
            throw ValidationError("restarts must be >= 1");
        if (!(tolerance > 0.0))
            throw ValidationError("optimizer tolerance must be > 0");
        if (max_evaluations < 10)
            throw ValidationError("max evaluations must be >= 10");
        if (m1_min < 1 || m1_max < m1_min || m1_max > 1000)
            throw ValidationError("integer m1 grid must satisfy 1 <= min <= max <= 1000");
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw ValidationError("Omega must be finite and > 0");
        inversion.validate();
    }

    CdfObjective::CdfObjective(const EmpiricalCdf &emp, const specfun::LaplaceInversionConfig &cfg)
    {
        emp.validate();
        for (double x : emp.power_abscissae())
            rules_.push_back(specfun::InversionRule::cdf(x, cfg));
        for (const auto &p : emp.points)
            log_f_.push_back(std::log10(p.f));
    }

    double CdfObjective::epsilon(const IftrParams &p, int *clamped) const
    {
        const IftrDistribution dist(p);
        double eps = 0.0;
        for (std::size_t i = 0; i < rules_.size(); ++i)
        {
            const auto v = dist.cdf(rules_[i]);
            if (clamped)
                *clamped += v.clamped;
            if (!(v.value > 0.0))
                return infeasible;
            eps = std::max(eps, std::abs(log_f_[i] - std::log10(v.value)));
        }
        return eps;
    }

    namespace
    {
        // Optimizer coordinates: log K, Delta, log m1, log m2, log Omega, each optional
        struct Layout
        {
            bool delta = false, m1 = false, m2 = false, omega = false;
            double fixed_m1 = INFINITY; // used when m1 is not a coordinate
            std::vector<Interval> box;
            std::vector<Interval> start_box;

            int dims() const { return int(box.size()); }
        };

        struct Problem
        {
            const CdfObjective *objective;
            Layout layout;
            double omega_fixed;
        };

        double shape_from(double u)
        {
            return u > std::log(shape_limit) ? INFINITY : std::exp(u);
        }

        double shape_coordinate(double m, double hi)
        {
            return std::isinf(m) ? hi : std::clamp(std::log(m), -700.0, hi);
        }

        Layout make_layout(ModelFamily family, const FitConfig &cfg, double scale)
        {
            Layout l;
            const auto &b = cfg.bounds;
            const double m_hi = std::isinf(b.m.hi) ? std::log(2.0 * shape_limit) : std::log(b.m.hi);
            const Interval m_box{std::log(b.m.lo), m_hi};
            const Interval m_start{std::log(b.m.lo), std::min(m_hi, std::log(b.m_start_max))};
            l.box.push_back({std::log(b.k.lo), std::log(b.k.hi)});
            l.start_box.push_back({std::max(std::log(b.k.lo), std::log(0.1)), std::min(std::log(b.k.hi), std::log(1e3))});
            auto add = [&](bool &flag, Interval box, Interval start)
            {
                flag = true;
                l.box.push_back(box);
                l.start_box.push_back(start);
            };
            switch (family)
            {
            case ModelFamily::rice:
                break;
            case ModelFamily::twdp:
                add(l.delta, b.delta, b.delta);
                break;
            case ModelFamily::rician_shadowed:
                add(l.m1, m_box, m_start);
                break;
            case ModelFamily::iftr:
                add(l.delta, b.delta, b.delta);
                add(l.m1, m_box, m_start);
                add(l.m2, m_box, m_start);
                break;
            case ModelFamily::iftr_integer_m1:
                add(l.delta, b.delta, b.delta);
                add(l.m2, m_box, m_start);
                break;
            }
            if (cfg.fit_scale)
            {
                const Interval om{std::log(b.omega.lo * scale), std::log(b.omega.hi * scale)};
                add(l.omega, om, {std::log(0.5 * scale), std::log(2.0 * scale)});
            }
            return l;
        }

        IftrParams to_params(const Layout &l, const std::vector<double> &u, double omega_fixed)
        {
            IftrParams p;
            int i = 0;
            p.k = std::exp(u[i++]);
            p.delta = l.delta ? u[i++] : 0.0;
            p.m1 = l.m1 ? shape_from(u[i++]) : l.fixed_m1;
            p.m2 = l.m2 ? shape_from(u[i++]) : INFINITY;
            p.mean_snr = l.omega ? std::exp(u[i++]) : omega_fixed;
            return p;
        }

        std::vector<double> to_coordinates(const Layout &l, const IftrParams &p)
        {
            std::vector<double> u;
            int i = 0;
            auto push = [&](double v)
            {
                u.push_back(std::clamp(v, l.box[i].lo, l.box[i].hi));
                ++i;
            };
            push(std::log(p.k));
            if (l.delta)
                push(p.delta);
            if (l.m1)
                push(shape_coordinate(p.m1, l.box[i].hi));
            if (l.m2)
                push(shape_coordinate(p.m2, l.box[i].hi));
            if (l.omega)
                push(std::log(p.mean_snr));
            return u;
        }

        struct Evaluator
        {
            const Problem &pb;
            int evaluations = 0;
            int clamped = 0;

            double operator()(std::vector<double> &u)
            {
                for (int i = 0; i < pb.layout.dims(); ++i)
                    u[i] = std::clamp(u[i], pb.layout.box[i].lo, pb.layout.box[i].hi);
                ++evaluations;
                try
                {
                    return pb.objective->epsilon(to_params(pb.layout, u, pb.omega_fixed), &clamped);
                }
                catch (const std::exception &)
                {
                    return infeasible;
                }
            }
        };

        struct Optimum
        {
            std::vector<double> u;
            double f;
            bool converged;
        };

        // Nelder-Mead with dimension-adapted coefficients on the box-projected simplex
        Optimum nelder_mead(Evaluator &eval, std::vector<double> start, double step_scale, double tol, int budget)
        {
            const int n = int(start.size());
            const double alpha = 1.0, beta = 1.0 + 2.0 / n, gam = 0.75 - 0.5 / n, delta = 1.0 - 1.0 / n;
            std::vector<std::vector<double>> x(n + 1, start);
            std::vector<double> f(n + 1);
            for (int i = 0; i < n; ++i)
            {
                const auto &b = eval.pb.layout.box[i];
                double step = step_scale * std::max(0.1, std::min(1.0, b.hi - b.lo));
                if (x[i + 1][i] + step > b.hi)
                    step = -step;
                x[i + 1][i] += step;
            }
            const int used0 = eval.evaluations;
            for (int i = 0; i <= n; ++i)
                f[i] = eval(x[i]);

            std::vector<int> order(n + 1);
            bool converged = false;
            while (eval.evaluations - used0 < budget)
            {
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
                {
                    std::vector<std::vector<double>> xs;
                    std::vector<double> fs;
                    for (int i : order)
                    {
                        xs.push_back(x[i]);
                        fs.push_back(f[i]);
                    }
                    x.swap(xs);
                    f.swap(fs);
                }
                double size = 0.0;
                for (int i = 1; i <= n; ++i)
                    for (int j = 0; j < n; ++j)
                        size = std::max(size, std::abs(x[i][j] - x[0][j]));
                if (std::isfinite(f[n]) && f[n] - f[0] <= tol && size <= 1e-4)
                {
                    converged = true;
                    break;
                }
                if (size <= 1e-10)
                {
                    converged = true;
                    break;
                }

                std::vector<double> c(n, 0.0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        c[j] += x[i][j] / n;
                auto along = [&](double t)
                {
                    std::vector<double> y(n);
                    for (int j = 0; j < n; ++j)
                        y[j] = c[j] + t * (x[n][j] - c[j]);
                    return y;
                };
                auto xr = along(-alpha);
                const double fr = eval(xr);
                if (fr < f[0])
                {
                    auto xe = along(-alpha * beta);
                    const double fe = eval(xe);
                    if (fe < fr)
                    {
                        x[n] = xe;
                        f[n] = fe;
                    }
                    else
                    {
                        x[n] = xr;
                        f[n] = fr;
                    }
                    continue;
                }
                if (fr < f[n - 1])
                {
                    x[n] = xr;
                    f[n] = fr;
                    continue;
                }
                const bool outside = fr < f[n];
                auto xc = along(outside ? -alpha * gam : gam);
                const double fc = eval(xc);
                if (fc < (outside ? fr : f[n]))
                {
                    x[n] = xc;
                    f[n] = fc;
                    continue;
                }
                for (int i = 1; i <= n; ++i)
                {
                    for (int j = 0; j < n; ++j)
                        x[i][j] = x[0][j] + delta * (x[i][j] - x[0][j]);
                    f[i] = eval(x[i]);
                }
            }
            const auto best = std::min_element(f.begin(), f.end()) - f.begin();
            return {x[best], f[best], converged};
        }

        // Runs from one start, then restarts the simplex at the optimum until it stops improving
        RestartTrace optimize_from(const Problem &pb, const std::vector<double> &start, const FitConfig &cfg,
                                   Optimum &best, int &clamped)
        {
            Evaluator eval{pb};
            std::vector<double> s = start;
            auto opt = nelder_mead(eval, s, 0.5, cfg.tolerance, cfg.max_evaluations);
            for (int polish = 0; polish < 3 && eval.evaluations < cfg.max_evaluations; ++polish)
            {
                auto again = nelder_mead(eval, opt.u, 0.1, cfg.tolerance, cfg.max_evaluations - eval.evaluations);
                const bool improved = again.f < opt.f - cfg.tolerance;
                if (again.f < opt.f)
                    opt = again;
                if (!improved)
                    break;
            }
            clamped += eval.clamped;
            if (opt.f < best.f || (opt.f == best.f && opt.u < best.u))
                best = opt;
            return {start, opt.f, eval.evaluations, opt.converged};
        }

        double data_scale(const EmpiricalCdf &emp)
        {
            const auto x = emp.power_abscissae();
            for (std::size_t i = 0; i < emp.points.size(); ++i)
                if (emp.points[i].f >= 0.5)
                    return x[i];
            return x.back();
        }

        std::vector<double> random_start(const Layout &l, Rng &rng)
        {
            std::vector<double> u;
            for (const auto &b : l.start_box)
                u.push_back(b.lo + (b.hi - b.lo) * rng.uniform());
            return u;
        }

        FitResult run_family(const EmpiricalCdf &emp, const CdfObjective &obj, const FitConfig &cfg, ModelFamily family,
                             const std::vector<IftrParams> &seeds, double fixed_m1 = INFINITY)
        {
            const double scale = data_scale(emp);
            Problem pb{&obj, make_layout(family, cfg, scale), cfg.omega};
            pb.layout.fixed_m1 = fixed_m1;

            std::vector<std::vector<double>> starts;
            for (const auto &p : seeds)
                starts.push_back(to_coordinates(pb.layout, p));
            Rng rng(cfg.seed, std::uint64_t(family) * 1000 + std::uint64_t(std::isinf(fixed_m1) ? 0 : fixed_m1));
            for (int r = 0; r < cfg.restarts; ++r)
                starts.push_back(random_start(pb.layout, rng));

            FitResult res;
            res.family = family;
            Optimum best{{}, infeasible, false};
            for (const auto &s : starts)
            {
                res.trace.push_back(optimize_from(pb, s, cfg, best, res.clamped));
                res.evaluations += res.trace.back().evaluations;
            }
            res.restarts = int(starts.size());
            res.converged = std::any_of(res.trace.begin(), res.trace.end(), [](const RestartTrace &t) { return t.converged; });
            if (!std::isfinite(best.f))
                throw NumericalError("fit: no parameter set gave a positive model CDF at every point");
            res.params = to_params(pb.layout, best.u, cfg.omega);
            res.epsilon = best.f;
            return res;
        }

        IftrParams scaled_default(const FitConfig &cfg, double scale)
        {
            IftrParams p;
            p.k = 1.0;
            p.delta = 0.0;
            p.m1 = p.m2 = INFINITY;
            p.mean_snr = cfg.fit_scale ? scale : cfg.omega;
            return p;
        }

        FitResult fit_integer_m1(const EmpiricalCdf &emp, const CdfObjective &obj, const FitConfig &cfg,
                                 const std::vector<IftrParams> &nested)
        {
            FitResult best;
            best.epsilon = infeasible;
            FitConfig inner = cfg;
            inner.restarts = 1;
            std::vector<IftrParams> warm = nested;
            int evaluations = 0, clamped = 0;
            std::vector<RestartTrace> trace;
            for (int m1 = cfg.m1_min; m1 <= cfg.m1_max; ++m1)
            {
                auto r = run_family(emp, obj, inner, ModelFamily::iftr_integer_m1, warm, double(m1));
                evaluations += r.evaluations;
                clamped += r.clamped;
                trace.insert(trace.end(), r.trace.begin(), r.trace.end());
                warm = {r.params};
                if (r.epsilon < best.epsilon)
                    best = r;
            }
            best.evaluations = evaluations;
            best.clamped = clamped;
            best.trace = std::move(trace);
            best.restarts = int(best.trace.size());
            return best;
        }
    }

    FitResult fit(const EmpiricalCdf &emp, const FitConfig &cfg)
    {
        if (cfg.family == ModelFamily::iftr)
            return fit_compare(emp, cfg).front();
        cfg.validate();
        const CdfObjective obj(emp, cfg.inversion);
        const double scale = data_scale(emp);
        if (cfg.family == ModelFamily::iftr_integer_m1)
        {
            const auto twdp = run_family(emp, obj, cfg, ModelFamily::twdp, {scaled_default(cfg, scale)});
            return fit_integer_m1(emp, obj, cfg, {twdp.params});
        }
        return run_family(emp, obj, cfg, cfg.family, {scaled_default(cfg, scale)});
    }

    std::vector<FitResult> fit_compare(const EmpiricalCdf &emp, const FitConfig &cfg)
    {
        cfg.validate();
        const CdfObjective obj(emp, cfg.inversion);
        const double scale = data_scale(emp);
        const auto start = scaled_default(cfg, scale);

        auto rice = run_family(emp, obj, cfg, ModelFamily::rice, {start});
        auto twdp = run_family(emp, obj, cfg, ModelFamily::twdp, {rice.params});
        auto rs = run_family(emp, obj, cfg, ModelFamily::rician_shadowed, {rice.params});
        auto iftr = run_family(emp, obj, cfg, ModelFamily::iftr, {twdp.params, rs.params, rice.params});

        // A nested optimum is itself an IFTR parameter set
        for (const auto *nested : {&rice, &twdp, &rs})
            if (nested->epsilon < iftr.epsilon)
            {
                iftr.epsilon = nested->epsilon;
                iftr.params = nested->params;
            }
        return {iftr, rice, twdp, rs};
    }

    nlohmann::json to_json(const FitResult &r)
    {
        nlohmann::json j;
        j["model"] = to_string(r.family);
        j["epsilon"] = r.epsilon;
        j["params"] = params_to_json(r.params);
        j["params"]["Omega"] = r.params.mean_snr;
        j["restarts"] = r.restarts;
        j["evaluations"] = r.evaluations;
        j["converged"] = r.converged;
        j["clamped"] = r.clamped;
        nlohmann::json trace = nlohmann::json::array();
        for (const auto &t : r.trace)
            trace.push_back({{"start", t.start}, {"epsilon", t.epsilon}, {"evaluations", t.evaluations}, {"converged", t.converged}});
        j["trace"] = trace;
        return j;
    }
}
