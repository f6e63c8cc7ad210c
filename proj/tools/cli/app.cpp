#include "cli/app.hpp"

#include "cli/report.hpp"
#include "cli/suites.hpp"

#include "cdgamma/asymptotic.hpp"
#include "cdgamma/beta.hpp"
#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"
#include "cdgamma/gamma.hpp"
#include "cdgamma/hankel.hpp"
#include "cdgamma/parse.hpp"
#include "cdgamma/sampling.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

namespace cdgamma::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

struct CommonOptions {
    std::string format = "text";
    std::string output;
    bool timing = false;
    unsigned jobs = 1;
    std::optional<double> quad_tol;
    std::optional<int> level;
};

struct EvalOptions {
    std::string fn = "gamma";
    std::string z, p, q;
    std::string method = "slice_lanczos";
    int terms = -1;
    long n = 100000;
    double delta = 0.5;
};

struct CompareOptions {
    std::string fn = "gamma";
    std::string z;
    std::vector<std::string> methods;
    std::vector<long> ns = {100, 1000, 10000, 100000};
    int grid = 0;
    std::uint64_t seed = 7;
};

struct VerifyOptions {
    std::string suite;
    std::vector<int> levels;
    std::optional<int> samples;
    int nmax = 10;
    std::uint64_t seed = 7;
    std::optional<double> tol;
};

struct SweepOptions {
    std::string kind;
    double from = 1, to = 8, step = 1;
    std::vector<double> values;
    double x = 0.5;
    double radius = 50.0;
    double angle = 0.0;
    int terms = 5;
    std::uint64_t seed = 7;
};

void add_common(CLI::App* sub, CommonOptions& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", c.output, "Write the report to this file instead of stdout");
    sub->add_flag("--timing", c.timing, "Record wall-clock seconds per case (makes reports non-reproducible)");
    sub->add_option("--jobs", c.jobs, "Worker threads for independent cases")->check(CLI::Range(1u, 1024u));
    sub->add_option("--quad-tol", c.quad_tol, std::string("Quadrature abs/rel tolerance (default from ") +
                                                  kToleranceEnv + " or 1e-12)")
        ->check(CLI::PositiveNumber);
}

QuadratureConfig quadrature_config(const CommonOptions& c) {
    QuadratureConfig q;
    if (c.quad_tol) {
        q.abs_tol = q.rel_tol = *c.quad_tol;
    } else if (const char* env = std::getenv(kToleranceEnv); env && *env) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (*end != '\0' || !(v > 0.0)) {
            throw CLI::ValidationError(kToleranceEnv, std::string("must be a positive number, got '") + env + "'");
        }
        q.abs_tol = q.rel_tol = v;
    }
    q.validate();
    return q;
}

OutputFormat format_of(const CommonOptions& c) {
    if (c.format == "json") return OutputFormat::json;
    if (c.format == "csv") return OutputFormat::csv;
    return OutputFormat::text;
}

void add_quadrature_config(Report& r, const QuadratureConfig& q) {
    r.config.emplace_back("abs_tol", num(q.abs_tol));
    r.config.emplace_back("rel_tol", num(q.rel_tol));
    r.config.emplace_back("max_refinements", std::to_string(q.max_refinements));
    r.config.emplace_back("truncation_radius", num(q.truncation_radius));
}

void stamp_hashes(Report& r) {
    const std::string base = r.config_hash();
    for (Record& rec : r.records) rec.config_hash = fnv1a_hex(base + '|' + rec.suite + '|' + rec.method);
}

CDNumber parse_arg(const std::string& name, const std::string& text, std::optional<int> level) {
    if (text.empty()) throw CLI::RequiredError("--" + name);
    return parse_cd(text, level);
}

Record value_record(std::string suite, std::string input, std::string method, const CDNumber& v, double err) {
    Record r;
    r.suite = std::move(suite);
    r.input = std::move(input);
    r.method = std::move(method);
    r.value = coords_of(v);
    r.residual = kNaN;
    r.tolerance = kNaN;
    r.error_estimate = err;
    return r;
}

constexpr double kRounding = std::numeric_limits<double>::epsilon();

// ---- eval ---------------------------------------------------------------

Report cmd_eval(const EvalOptions& e, const CommonOptions& c) {
    const QuadratureConfig quad = quadrature_config(c);
    Report rep;
    rep.command = "eval";
    rep.subject = e.fn;
    rep.config = {{"fn", e.fn}};
    if (e.fn != "beta") rep.config.emplace_back("method", e.method);
    add_quadrature_config(rep, quad);

    if (e.fn == "beta") {
        CDNumber p = parse_arg("p", e.p, c.level), q = parse_arg("q", e.q, c.level);
        const int level = std::max(p.level(), q.level());
        p = parse_cd(e.p, level);
        q = parse_cd(e.q, level);
        const IntegralResult r = beta_detailed(p, q, quad);
        rep.records.push_back(value_record("beta", "p=" + format_cd(p) + "; q=" + format_cd(q), "tanh_sinh", r.value,
                                           r.error_estimate));
        return rep;
    }

    const CDNumber z = parse_arg("z", e.z, c.level);
    const std::string input = format_cd(z);
    if (e.fn == "gamma") {
        const auto method = parse_gamma_method(e.method);
        if (!method) throw CLI::ValidationError("--method", "unknown gamma method '" + e.method + "'");
        GammaOptions opt;
        opt.quadrature = quad;
        if (e.terms > 0) opt.phi_terms = e.terms;
        opt.limit_n = opt.product_factors = e.n;
        opt.hankel_delta = e.delta;
        rep.config.emplace_back("n", std::to_string(e.n));
        rep.config.emplace_back("phi_terms", std::to_string(opt.phi_terms));
        rep.config.emplace_back("delta", num(e.delta));
        const GammaValue v = evaluate_gamma(*method, z, opt);
        rep.records.push_back(value_record("gamma", input, to_string(*method), v.value, v.error_estimate));
    } else if (e.fn == "reciprocal_gamma") {
        if (e.method == "hankel") {
            HankelConfig hc;
            hc.delta = e.delta;
            hc.quadrature = quad;
            const HankelResult r = hankel_reciprocal_gamma_detailed(z, hc);
            rep.records.push_back(value_record("reciprocal_gamma", input, "hankel", r.value, r.error_estimate));
            rep.records.back().diagnostics = {{"truncation", r.truncation}};
        } else if (e.method == "slice_lanczos") {
            const CDNumber v = cd_inverse(gamma(z));
            rep.records.push_back(value_record("reciprocal_gamma", input, "slice_lanczos", v, 1e-13 * v.norm()));
        } else {
            throw CLI::ValidationError("--method", "reciprocal_gamma supports hankel or slice_lanczos");
        }
    } else if (e.fn == "lngamma") {
        const int terms = e.terms >= 0 ? e.terms : 5;
        rep.config.emplace_back("terms", std::to_string(terms));
        const AsymptoticValue v = ln_gamma_stirling_detailed(z, terms);
        rep.records.push_back(value_record("lngamma", input, "stirling", v.value, v.error_bound));
        rep.records.back().diagnostics = {{"terms_used", static_cast<double>(v.terms_used)}};
    } else if (e.fn == "exp" || e.fn == "ln" || e.fn == "sin") {
        const CDNumber v = e.fn == "exp" ? cd_exp(z) : e.fn == "ln" ? cd_ln(z) : cd_sin(z);
        rep.records.push_back(value_record(e.fn, input, "slice", v, 4 * kRounding * v.norm()));
    } else {
        throw CLI::ValidationError("--fn", "unknown function '" + e.fn + "'");
    }
    return rep;
}

// ---- compare ------------------------------------------------------------

Report cmd_compare(const CompareOptions& o, const CommonOptions& c) {
    const QuadratureConfig quad = quadrature_config(c);
    Report rep;
    rep.command = "compare";
    rep.subject = o.fn;
    add_quadrature_config(rep, quad);
    if (o.fn != "gamma") throw CLI::ValidationError("--fn", "compare supports gamma");

    if (o.grid > 0) {
        // Hankel reciprocal against the slice route on a random slice
        rep.seed = o.seed;
        rep.config.emplace_back("grid", std::to_string(o.grid));
        rep.config.emplace_back("seed", std::to_string(o.seed));
        Sampler rng(o.seed);
        const int level = c.level.value_or(2);
        const PureImaginaryUnit m = rng.axis(level);
        std::vector<CDNumber> points;
        for (int i = 0; i < o.grid; ++i) {
            CDNumber z = m.value() * rng.uniform(-3.0, 3.0);
            z[0] = rng.uniform(-2.0, 4.0);
            points.push_back(z);
        }
        rep.records.resize(points.size());
        parallel_for(points.size(), c.jobs, [&](std::size_t i) {
            HankelConfig hc;
            hc.quadrature = quad;
            const HankelResult h = hankel_reciprocal_gamma_detailed(points[i], hc);
            const CDNumber ref = cd_inverse(gamma(points[i]));
            Record r = value_record("hankel_grid", format_cd(points[i]), "hankel~slice_lanczos", h.value, h.error_estimate);
            r.residual = distance(h.value, ref);
            r.tolerance = 1e-6;
            r.asserted = true;
            r.passed = r.residual <= r.tolerance;
            r.note = "1/Gamma by contour against the slice route";
            rep.records[i] = std::move(r);
        });
        return rep;
    }

    const CDNumber z = parse_arg("z", o.z, c.level);
    const std::string input = format_cd(z);
    std::vector<GammaMethod> methods;
    if (o.methods.empty()) {
        methods.assign(std::begin(kAllGammaMethods), std::end(kAllGammaMethods));
    } else {
        for (const std::string& name : o.methods) {
            const auto m = parse_gamma_method(name);
            if (!m) throw CLI::ValidationError("--methods", "unknown gamma method '" + name + "'");
            methods.push_back(*m);
        }
    }
    std::string method_list;
    for (GammaMethod m : methods) method_list += std::string(to_string(m)) + ',';
    rep.config.emplace_back("methods", method_list);

    GammaOptions opt;
    opt.quadrature = quad;
    std::vector<std::optional<GammaValue>> values(methods.size());
    std::vector<std::string> failures(methods.size());
    parallel_for(methods.size(), c.jobs, [&](std::size_t i) {
        try {
            values[i] = evaluate_gamma(methods[i], z, opt);
        } catch (const Error& e) {
            failures[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (values[i]) {
            rep.records.push_back(value_record("value", input, to_string(methods[i]), values[i]->value,
                                               values[i]->error_estimate));
        } else {
            Record r = value_record("value", input, to_string(methods[i]), CDNumber(z.level()), kNaN);
            r.value.clear();
            r.note = "not applicable: " + failures[i];
            rep.records.push_back(std::move(r));
        }
    }
    // pairwise residual matrix: relative distance against the combined error estimates
    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            if (!values[i] || !values[j]) continue;
            const double scale = std::max(1.0, values[j]->value.norm());
            Record r = value_record("pairwise", input, std::string(to_string(methods[i])) + "~" + to_string(methods[j]),
                                    values[i]->value - values[j]->value,
                                    values[i]->error_estimate + values[j]->error_estimate);
            r.residual = distance(values[i]->value, values[j]->value) / scale;
            r.tolerance = std::max(1e-6, 2.0 * r.error_estimate / scale);
            r.asserted = true;
            r.passed = r.residual <= r.tolerance;
            rep.records.push_back(std::move(r));
        }
    }
    // convergence columns for the limit and product forms
    try {
        const CDNumber exact = gamma(z);
        for (GammaMethod m : {GammaMethod::limit_form, GammaMethod::euler_product}) {
            for (long n : o.ns) {
                const CDNumber v = m == GammaMethod::limit_form ? gamma_limit(z, n) : gamma_euler_product(z, n);
                Record r = value_record("convergence", input, std::string(to_string(m)) + "@n=" + std::to_string(n), v,
                                        v.norm() * (z * (z + 1.0)).norm() / (2.0 * static_cast<double>(n)));
                r.residual = distance(v, exact) / exact.norm();
                r.note = "relative error against slice_lanczos";
                rep.records.push_back(std::move(r));
            }
        }
    } catch (const Error& e) {
        Record r = value_record("convergence", input, "limit_form", CDNumber(z.level()), kNaN);
        r.value.clear();
        r.note = std::string("not applicable: ") + e.what();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

// ---- verify -------------------------------------------------------------

Report cmd_verify(const VerifyOptions& v, const CommonOptions& c) {
    if (!is_suite(v.suite)) throw CLI::ValidationError("--suite", "unknown suite '" + v.suite + "'");
    SuiteOptions so;
    so.levels = v.levels;
    if (c.level && so.levels.empty()) so.levels = {*c.level};
    so.samples = v.samples;
    so.seed = v.seed;
    so.tolerance = v.tol;
    so.nmax = v.nmax;
    so.quadrature = quadrature_config(c);
    so.jobs = c.jobs;
    so.timing = c.timing;

    Report rep;
    rep.command = "verify";
    rep.subject = v.suite;
    rep.seed = v.seed;
    std::string levels;
    for (int l : so.levels) levels += std::to_string(l) + ',';
    rep.config = {{"levels", levels.empty() ? "default" : levels},
                  {"samples", so.samples ? std::to_string(*so.samples) : "default"},
                  {"nmax", std::to_string(so.nmax)},
                  {"seed", std::to_string(so.seed)},
                  {"tol", so.tolerance ? num(*so.tolerance) : "default"}};
    add_quadrature_config(rep, so.quadrature);
    rep.records = run_suite(v.suite, so);
    return rep;
}

// ---- sweep --------------------------------------------------------------

std::vector<double> sweep_points(const SweepOptions& s) {
    if (!s.values.empty()) return s.values;
    if (!(s.step > 0.0)) throw CLI::ValidationError("--step", "must be positive");
    std::vector<double> pts;
    for (long i = 0;; ++i) {
        const double x = s.from + static_cast<double>(i) * s.step;
        if (x > s.to + 1e-12 * std::abs(s.step)) break;
        pts.push_back(x);
    }
    return pts;
}

double wrap_angle(double a) { return a - 2 * std::numbers::pi * std::round(a / (2 * std::numbers::pi)); }

Record stirling_record(const CDNumber& z, int terms, const PureImaginaryUnit& m) {
    const AsymptoticValue v = ln_gamma_stirling_detailed(z, terms);
    const CDNumber ref = cd_ln(gamma(z));
    Record r = value_record("stirling", format_cd(z), "stirling/" + std::to_string(terms), v.value, v.error_bound);
    const double dre = v.value.re() - ref.re();
    const double dim = wrap_angle(inner(v.value, m.value()) - inner(ref, m.value()));
    r.residual = std::hypot(dre, dim);
    r.note = "against ln of slice_lanczos, pure part mod 2 pi";
    r.diagnostics = {{"terms_used", static_cast<double>(v.terms_used)}};
    return r;
}

Report cmd_sweep(const SweepOptions& s, const CommonOptions& c) {
    Report rep;
    rep.command = "sweep";
    rep.subject = s.kind;
    rep.seed = s.seed;
    std::string pts_desc;
    for (double x : s.values) pts_desc += num(x) + ',';
    rep.config = {{"from", num(s.from)}, {"to", num(s.to)}, {"step", num(s.step)}, {"values", pts_desc},
                  {"x", num(s.x)},       {"radius", num(s.radius)}, {"angle", num(s.angle)},
                  {"terms", std::to_string(s.terms)}, {"seed", std::to_string(s.seed)}};
    const std::vector<double> pts = sweep_points(s);
    Sampler rng(s.seed);
    const int level = c.level.value_or(2);
    const PureImaginaryUnit m = rng.axis(level);
    rep.records.resize(pts.size());

    if (s.kind == "stirling_terms") {
        CDNumber z = m.value() * (s.radius * std::sin(s.angle));
        z[0] = s.radius * std::cos(s.angle);
        parallel_for(pts.size(), c.jobs,
                     [&](std::size_t i) { rep.records[i] = stirling_record(z, static_cast<int>(std::lround(pts[i])), m); });
    } else if (s.kind == "stirling_radius") {
        parallel_for(pts.size(), c.jobs, [&](std::size_t i) {
            CDNumber z = m.value() * (pts[i] * std::sin(s.angle));
            z[0] = pts[i] * std::cos(s.angle);
            rep.records[i] = stirling_record(z, s.terms, m);
        });
    } else if (s.kind == "magnitude") {
        parallel_for(pts.size(), c.jobs, [&](std::size_t i) {
            CDNumber z = m.value() * pts[i];
            z[0] = s.x;
            const double ratio = gamma(z).norm() / gamma_magnitude_asymptotic(s.x, pts[i]);
            Record r = value_record("magnitude", format_cd(z), "slice_lanczos/asymptotic", CDNumber::real(level, ratio),
                                    1e-13 * ratio);
            r.value = {ratio};
            r.residual = std::abs(ratio - 1.0);
            r.note = "|Gamma(x + yM)| over the modulus asymptote";
            rep.records[i] = std::move(r);
        });
    } else {
        throw CLI::ValidationError("--kind", "unknown sweep '" + s.kind + "'");
    }
    return rep;
}

int emit(Report rep, const CommonOptions& c, std::ostream& out, std::ostream& err) {
    stamp_hashes(rep);
    if (c.output.empty()) {
        write_report(rep, format_of(c), out);
    } else {
        std::ofstream file(c.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << c.output << "' for writing\n";
            return kExitUsage;
        }
        write_report(rep, format_of(c), file);
    }
    return rep.failures() == 0 ? kExitPass : kExitAssertionFailure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gamma and Beta functions of Cayley-Dickson arguments", "cdgamma"};
    app.require_subcommand(1);

    CommonOptions common;
    EvalOptions eval;
    CompareOptions compare;
    VerifyOptions verify;
    SweepOptions sweep;

    CLI::App* s_eval = app.add_subcommand("eval", "Evaluate one function at one argument");
    add_common(s_eval, common);
    s_eval->add_option("--fn", eval.fn, "gamma, reciprocal_gamma, lngamma, beta, exp, ln or sin")->capture_default_str();
    s_eval->add_option("--z", eval.z, "Argument in the Cayley-Dickson grammar, e.g. \"1.5 - 2e1 + 0.25e7\"");
    s_eval->add_option("--p", eval.p, "First Beta argument");
    s_eval->add_option("--q", eval.q, "Second Beta argument");
    s_eval->add_option("--method", eval.method, "Gamma route")->capture_default_str();
    s_eval->add_option("--level", common.level, "Cayley-Dickson level (default: smallest that fits, at least 2)")
        ->check(CLI::Range(1, kMaxLevel));
    s_eval->add_option("--terms", eval.terms, "Series terms (phi_psi_series, lngamma)");
    s_eval->add_option("--n", eval.n, "n for limit_form / euler_product")->capture_default_str()->check(CLI::PositiveNumber);
    s_eval->add_option("--delta", eval.delta, "Hankel cut-circle radius")->capture_default_str()->check(CLI::PositiveNumber);

    CLI::App* s_compare = app.add_subcommand("compare", "Compare Gamma routes at one argument, or Hankel on a grid");
    add_common(s_compare, common);
    s_compare->add_option("--fn", compare.fn, "Function (gamma)")->capture_default_str();
    s_compare->add_option("--z", compare.z, "Argument");
    s_compare->add_option("--methods", compare.methods, "Routes to compare (default: all)");
    s_compare->add_option("--ns", compare.ns, "n values for the convergence columns")->capture_default_str();
    s_compare->add_option("--grid", compare.grid, "Random grid points in (-2,4)x(-3,3) for Hankel vs slice")
        ->check(CLI::NonNegativeNumber);
    s_compare->add_option("--seed", compare.seed, "Seed for --grid")->capture_default_str();
    s_compare->add_option("--level", common.level, "Cayley-Dickson level")->check(CLI::Range(1, kMaxLevel));

    CLI::App* s_verify = app.add_subcommand("verify", "Run a seeded identity-verification suite");
    add_common(s_verify, common);
    std::vector<std::string> suites(std::begin(kSuiteNames), std::end(kSuiteNames));
    suites.emplace_back("all");
    s_verify->add_option("--suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    s_verify->add_option("--level", verify.levels, "Levels to sample (repeatable)")->check(CLI::Range(1, kMaxLevel));
    s_verify->add_option("--n", verify.samples, "Samples per level")->check(CLI::PositiveNumber);
    s_verify->add_option("--nmax", verify.nmax, "Largest pole index for residues")->capture_default_str()->check(CLI::NonNegativeNumber);
    s_verify->add_option("--seed", verify.seed, "PRNG seed")->capture_default_str();
    s_verify->add_option("--tol", verify.tol, "Override the suite's assertion tolerance")->check(CLI::PositiveNumber);

    CLI::App* s_sweep = app.add_subcommand("sweep", "Tabulate an error or ratio over a parameter range");
    add_common(s_sweep, common);
    s_sweep->add_option("--kind", sweep.kind, "stirling_terms, stirling_radius or magnitude")
        ->required()
        ->check(CLI::IsMember({"stirling_terms", "stirling_radius", "magnitude"}));
    s_sweep->add_option("--from", sweep.from, "Range start")->capture_default_str();
    s_sweep->add_option("--to", sweep.to, "Range end (inclusive)")->capture_default_str();
    s_sweep->add_option("--step", sweep.step, "Range step")->capture_default_str();
    s_sweep->add_option("--values", sweep.values, "Explicit parameter values (override the range)");
    s_sweep->add_option("--x", sweep.x, "Real part for the magnitude sweep")->capture_default_str();
    s_sweep->add_option("--radius", sweep.radius, "|z| for stirling_terms")->capture_default_str();
    s_sweep->add_option("--angle", sweep.angle, "Arg z within the slice for Stirling sweeps")->capture_default_str();
    s_sweep->add_option("--terms", sweep.terms, "Stirling terms for stirling_radius")->capture_default_str();
    s_sweep->add_option("--seed", sweep.seed, "Seed for the random slice axis")->capture_default_str();
    s_sweep->add_option("--level", common.level, "Cayley-Dickson level")->check(CLI::Range(1, kMaxLevel));

    try {
        app.parse(argc, argv);
        if (common.jobs == 0) common.jobs = 1;
        if (s_eval->parsed()) return emit(cmd_eval(eval, common), common, out, err);
        if (s_compare->parsed()) return emit(cmd_compare(compare, common), common, out, err);
        if (s_verify->parsed()) return emit(cmd_verify(verify, common), common, out, err);
        return emit(cmd_sweep(sweep, common), common, out, err);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const Error& e) {
        err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace cdgamma::cli
