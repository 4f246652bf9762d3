// gbesov: declarative configs in, norms / reports / plot-ready CSV out.
//
// Subcommands: eval | norm | besov | op | verify
// Exit codes:  0 all-pass, 1 check failure, 2 config error, 3 numerical error

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>

#include "gbesov/besov.hpp"
#include "gbesov/exponents.hpp"
#include "gbesov/hermite.hpp"
#include "gbesov/operators.hpp"
#include "gbesov/report_io.hpp"
#include "gbesov/semigroups.hpp"
#include "gbesov/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gbesov;

namespace {

constexpr const char* kDefaultsVersion = "1";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const json& require(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("config: missing key '") + key + "'");
    return j.at(key);
}

double num(const json& j, const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

struct RunConfig {
    json doc;
    int dimension = 1;
    std::uint64_t seed = 0;
    int refine = 1;
    QuadratureRule rule = QuadratureRule::gauss(1, 64);
    TimeGrid grid = TimeGrid::standard();

    static RunConfig load(const std::string& path, int refine, std::optional<std::uint64_t> seed);
};

QuadratureRule parse_rule(const json& j, int dimension, int refine) {
    std::string kind = "gauss";
    int points = 64;
    double half_width = 10.0;
    if (!j.is_null()) {
        kind = j.value("kind", kind);
        points = static_cast<int>(num(j, "points", points));
        half_width = num(j, "half_width", half_width);
    }
    if (kind == "gauss") return QuadratureRule::gauss(dimension, std::min(200, points * refine));
    if (kind == "uniform")
        return QuadratureRule::uniform(dimension, half_width, points * refine);
    throw ConfigError("config: quadrature.kind must be gauss|uniform");
}

TimeGrid parse_grid(const json& j, int refine) {
    double t_min = 1e-3, t_max = 50.0;
    int count = 400;
    if (!j.is_null()) {
        t_min = num(j, "t_min", t_min);
        t_max = num(j, "t_max", t_max);
        count = static_cast<int>(num(j, "count", count));
    }
    return TimeGrid(t_min, t_max, count * refine);
}

RunConfig RunConfig::load(const std::string& path, int refine, std::optional<std::uint64_t> seed) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    RunConfig cfg;
    try {
        in >> cfg.doc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
    }
    cfg.dimension = static_cast<int>(num(cfg.doc, "dimension", 1));
    if (cfg.dimension < 1 || cfg.dimension > 4) throw ConfigError("config: dimension must be 1..4");
    cfg.seed = static_cast<std::uint64_t>(num(cfg.doc, "seed", 0));
    if (seed) cfg.seed = *seed;
    cfg.refine = refine;
    cfg.rule = parse_rule(cfg.doc.value("quadrature", json()), cfg.dimension, refine);
    cfg.grid = parse_grid(cfg.doc.value("time_grid", json()), refine);
    return cfg;
}

ExponentFunction parse_exponent(const json& j, ExponentFunction::Domain domain,
                                const char* label) {
    if (j.is_null()) return ExponentFunction::constant(domain, 2.0);
    const std::string kind = j.value("kind", "constant");
    try {
        if (kind == "constant") return ExponentFunction::constant(domain, num(j, "value", 2.0));
        if (kind == "rational_decay")
            return ExponentFunction::rational_decay(domain, require(j, "limit").get<double>(),
                                                    num(j, "amplitude", 1.0),
                                                    num(j, "offset", std::numbers::e),
                                                    num(j, "power", 2.0));
        if (kind == "table")
            return ExponentFunction::table(domain, require(j, "radii").get<std::vector<double>>(),
                                           require(j, "values").get<std::vector<double>>());
        if (kind == "infinity") {
            if (domain != ExponentFunction::Domain::halfline)
                throw ConfigError(std::string("config: ") + label + ": infinity only valid for q");
            return ExponentFunction::infinity();
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + label + ": " + e.what());
    }
    throw ConfigError(std::string("config: ") + label +
                      ".kind must be constant|rational_decay|table|infinity");
}

HermiteExpansion parse_expansion(const json& j, int dimension) {
    if (j.is_null()) throw ConfigError("config: missing 'expansion'");
    const std::string kind = j.value("kind", "basis");
    if (kind == "basis") {
        auto idx = require(j, "index").get<std::vector<int>>();
        if (static_cast<int>(idx.size()) != dimension)
            throw ConfigError("config: expansion.index length must equal dimension");
        return HermiteExpansion::basis(MultiIndex(idx), num(j, "value", 1.0));
    }
    if (kind == "coefficients") {
        HermiteExpansion f(dimension);
        for (const auto& term : require(j, "terms")) {
            auto idx = require(term, "index").get<std::vector<int>>();
            if (static_cast<int>(idx.size()) != dimension)
                throw ConfigError("config: expansion term index length must equal dimension");
            f.add(MultiIndex(idx), require(term, "value").get<double>());
        }
        return f;
    }
    throw ConfigError("config: expansion.kind must be basis|coefficients");
}

HermiteExpansion apply_operator(const json& j, const HermiteExpansion& f, const RunConfig& cfg) {
    if (j.is_null()) return f;
    const std::string kind = j.value("kind", "");
    const std::string form = j.value("form", "spectral");
    try {
        if (kind == "bessel_potential") {
            const double beta = require(j, "beta").get<double>();
            return form == "integral" ? bessel_potential_integral(f, beta, cfg.grid)
                                      : bessel_potential_spectral(f, beta);
        }
        if (kind == "bessel_derivative") {
            const double beta = require(j, "beta").get<double>();
            return form == "integral" ? bessel_derivative_integral(f, beta, cfg.grid)
                                      : bessel_derivative_spectral(f, beta);
        }
        if (kind == "ou") return ou_apply_spectral(f, require(j, "t").get<double>());
        if (kind == "poisson") {
            const double t = require(j, "t").get<double>();
            if (form == "subordination")
                return poisson_apply_subordination(f, t, SubordinationQuadrature::build());
            const int k = static_cast<int>(num(j, "derivative", 0));
            return k > 0 ? poisson_derivative(f, t, k) : poisson_apply_spectral(f, t);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: operator: ") + e.what());
    }
    throw ConfigError("config: operator.kind must be bessel_potential|bessel_derivative|ou|poisson");
}

// The effective defaults table echoed into every report header.
std::string defaults_json(const RunConfig& cfg) {
    JsonWriter w;
    w.begin_object();
    w.key("version").value(std::string(kDefaultsVersion));
    w.key("dimension").value_int(cfg.dimension);
    w.key("seed").value_int(static_cast<long long>(cfg.seed));
    w.key("refine").value_int(cfg.refine);
    w.key("quadrature_points").value_int(cfg.rule.points_per_axis());
    w.key("time_grid").begin_object();
    w.key("t_min").value(cfg.grid.t_min());
    w.key("t_max").value(cfg.grid.t_max());
    w.key("count").value_int(cfg.grid.count());
    w.end_object();
    w.key("stability_slack").value(kStabilitySlack);
    w.end_object();
    return w.str();
}

void write_output(const fs::path& out_dir, const std::string& name, const std::string& contents) {
    fs::create_directories(out_dir);
    write_file((out_dir / name).string(), contents);
}

// ---------------------------------------------------------------- eval/op --

int cmd_eval(const RunConfig& cfg, const fs::path& out_dir) {
    const auto f = apply_operator(cfg.doc.value("operator", json()),
                                  parse_expansion(cfg.doc.value("expansion", json()), cfg.dimension),
                                  cfg);
    const json eg = cfg.doc.value("eval_grid", json());
    const double lo = num(eg, "min", -2.0), hi = num(eg, "max", 2.0);
    const int count = static_cast<int>(num(eg, "count", 81));
    if (count < 1 || hi < lo) throw ConfigError("config: bad eval_grid");

    std::string csv;
    for (int a = 0; a < cfg.dimension; ++a) csv += "x" + std::to_string(a + 1) + ",";
    csv += "value\n";
    std::vector<double> x(static_cast<std::size_t>(cfg.dimension), 0.0);
    for (int i = 0; i < count; ++i) {
        const double c = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
        for (auto& xv : x) xv = c;  // diagonal sweep in d > 1
        for (double xv : x) csv += format_double(xv) + ",";
        csv += format_double(expansion_eval(f, x)) + "\n";
    }
    write_output(out_dir, "eval.csv", csv);
    return 0;
}

int cmd_op(const RunConfig& cfg, const fs::path& out_dir) {
    const auto f = parse_expansion(cfg.doc.value("expansion", json()), cfg.dimension);
    const auto g = apply_operator(require(cfg.doc, "operator"), f, cfg);
    std::string csv;
    for (int a = 0; a < cfg.dimension; ++a) csv += "nu" + std::to_string(a + 1) + ",";
    csv += "coefficient\n";
    for (const auto& [nu, c] : g.coefficients()) {
        for (int a = 0; a < cfg.dimension; ++a) csv += std::to_string(nu[a]) + ",";
        csv += format_double(c) + "\n";
    }
    write_output(out_dir, "op.csv", csv);
    return 0;
}

// ------------------------------------------------------------ norm/besov --

int cmd_norm(const RunConfig& cfg, const fs::path& out_dir) {
    const auto f = parse_expansion(require(cfg.doc, "expansion"), cfg.dimension);
    const auto p = parse_exponent(cfg.doc.value("p", json()), ExponentFunction::Domain::gaussian, "p");
    auto fd = DiscretizedFunction::from_rule(
        cfg.rule, [&](std::span<const double> x) { return expansion_eval(f, x); });
    const double norm = luxemburg_norm(fd, p);
    double modular_at_norm = 0.0;
    if (norm > 0.0) {
        auto scaled = fd;
        for (auto& v : scaled.values) v /= norm;
        modular_at_norm = modular(scaled, p);
    }
    JsonWriter w;
    w.begin_object();
    w.key("defaults").raw(defaults_json(cfg));
    w.key("norm").value(norm);
    w.key("modular_at_norm").value(modular_at_norm);
    w.end_object();
    write_output(out_dir, "norm.json", w.str() + "\n");
    return 0;
}

int cmd_besov(const RunConfig& cfg, const fs::path& out_dir) {
    const auto f = parse_expansion(require(cfg.doc, "expansion"), cfg.dimension);
    const auto p = parse_exponent(cfg.doc.value("p", json()), ExponentFunction::Domain::gaussian, "p");
    const auto q = parse_exponent(cfg.doc.value("q", json()), ExponentFunction::Domain::halfline, "q");
    const json bj = cfg.doc.value("besov", json());
    const double alpha = num(bj, "alpha", 0.5);
    const int k_override = static_cast<int>(num(bj, "k", 0));
    BesovParams params = [&] {
        try {
            return BesovParams(alpha, p, q, cfg.rule, cfg.grid, k_override);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: besov: ") + e.what());
        }
    }();

    const double norm = besov_norm(f, params);
    JsonWriter w;
    w.begin_object();
    w.key("defaults").raw(defaults_json(cfg));
    w.key("alpha").value(alpha);
    w.key("k").value_int(params.k);
    w.key("besov_norm").value(norm);
    if (q.is_infinity()) {
        const auto ak = besov_infty_constant(f, params);
        w.key("a_k").value(ak.value);
        w.key("t_at_max").value(ak.t_at_max);
        w.key("boundary_attained").value(ak.boundary_attained);
        w.key("envelope_ok").value(ak.envelope_ok);
    } else {
        const auto sem = besov_seminorm(f, params);
        w.key("seminorm").value(sem.value);
        w.key("tail_residual").value(sem.tail_residual);
        const bool resolved = sem.tail_residual < 1e-4 && !sem.boundary_attained;
        w.key("status").value(resolved ? std::string("resolved")
                                       : std::string("not in the space at this resolution"));
        std::string csv = "t,g\n";
        for (std::size_t i = 0; i < sem.t.size(); ++i)
            csv += format_double(sem.t[i]) + "," + format_double(sem.g[i]) + "\n";
        write_output(out_dir, "besov_trace.csv", csv);
    }
    w.end_object();
    write_output(out_dir, "besov.json", w.str() + "\n");
    return 0;
}

// ---------------------------------------------------------------- verify --

std::function<double(double)> named_test_function(const std::string& name) {
    if (name == "exp") return [](double y) { return std::exp(-y); };
    if (name == "yexp") return [](double y) { return y * std::exp(-y); };
    if (name == "y2exp") return [](double y) { return y * y * std::exp(-y); };
    if (name == "linear_cut") return [](double y) { return y <= 1.0 ? y : 0.0; };
    if (name == "zero") return [](double) { return 0.0; };
    throw ConfigError("config: unknown test function '" + name + "'");
}

json default_checks() {
    return json::parse(R"([
      {"name":"classical_hardy","phi":"exp","p":2.0,"r":1.0},
      {"name":"classical_hardy","phi":"linear_cut","p":1.0,"r":1.0},
      {"name":"variable_hardy","g":"y2exp","q":{"kind":"constant","value":2.0},"r":1.0},
      {"name":"variable_hardy","g":"yexp","q":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"offset":1.0,"power":1.0},"r":0.5},
      {"name":"norm_conjugate","p":{"kind":"constant","value":2.0}},
      {"name":"norm_conjugate","p":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"power":2.0}},
      {"name":"holder","q":{"kind":"constant","value":2.0},"r":{"kind":"constant","value":2.0}},
      {"name":"holder","q":{"kind":"constant","value":2.0},"r":{"kind":"constant","value":100.0}},
      {"name":"kdecay","k":1,"p":{"kind":"constant","value":2.0}},
      {"name":"kdecay","k":2,"p":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"power":2.0}},
      {"name":"forward_difference_norm","k":1,"n":1,"p":{"kind":"constant","value":2.0}},
      {"name":"forward_difference_norm","k":2,"n":0,"p":{"kind":"constant","value":2.0}},
      {"name":"theorem_jbeta_infty","alpha":0.5,"beta":1.0,"p":{"kind":"constant","value":2.0}},
      {"name":"theorem_jbeta_infty","alpha":0.5,"beta":1.0,"p":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"power":2.0}},
      {"name":"theorem_jbeta","alpha":0.5,"beta":0.5,"p":{"kind":"constant","value":2.0},"q":{"kind":"constant","value":2.0}},
      {"name":"theorem_jbeta","alpha":0.5,"beta":0.5,"p":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"power":2.0},"q":{"kind":"rational_decay","limit":2.0,"amplitude":1.0,"offset":1.0,"power":1.0}},
      {"name":"theorem_dbeta","alpha":1.5,"beta":0.5,"p":{"kind":"constant","value":2.0},"q":{"kind":"constant","value":2.0}},
      {"name":"inclusion","alpha1":1.0,"q1":{"kind":"constant","value":2.0},"alpha2":0.5,"q2":{"kind":"constant","value":2.0},"p":{"kind":"constant","value":2.0}},
      {"name":"inclusion","alpha1":0.5,"q1":{"kind":"constant","value":2.0},"alpha2":0.5,"q2":{"kind":"constant","value":4.0},"p":{"kind":"constant","value":2.0}},
      {"name":"inclusion","alpha1":0.5,"q1":{"kind":"constant","value":2.0},"alpha2":1.0,"q2":{"kind":"constant","value":2.0},"p":{"kind":"constant","value":2.0},"family":"squares"}
    ])");
}

struct VerifyContext {
    const RunConfig& cfg;
    std::vector<HermiteExpansion> family;
    std::vector<HermiteExpansion> extension;
    std::vector<HermiteExpansion> squares;  // |nu| in {1,4,9,16,25}
};

VerificationReport run_check(const VerifyContext& ctx, const json& spec) {
    const std::string name = require(spec, "name").get<std::string>();
    const auto& cfg = ctx.cfg;
    const auto gaussian = ExponentFunction::Domain::gaussian;
    const auto halfline = ExponentFunction::Domain::halfline;
    const auto axis_index = [&](int n) {
        std::vector<int> iv(static_cast<std::size_t>(cfg.dimension), 0);
        iv[0] = n;
        return MultiIndex(iv);
    };

    if (name == "classical_hardy")
        return check_classical_hardy(named_test_function(require(spec, "phi").get<std::string>()),
                                     require(spec, "p").get<double>(),
                                     require(spec, "r").get<double>(), cfg.grid);
    if (name == "variable_hardy")
        return check_variable_hardy(named_test_function(require(spec, "g").get<std::string>()),
                                    parse_exponent(require(spec, "q"), halfline, "q"),
                                    require(spec, "r").get<double>(), cfg.grid);
    if (name == "norm_conjugate") {
        const auto p = parse_exponent(require(spec, "p"), gaussian, "p");
        const auto f = DiscretizedFunction::from_rule(cfg.rule, [&](std::span<const double> x) {
            return hermite_eval(axis_index(1), x);
        });
        return check_norm_conjugate(f, p, cfg.seed);
    }
    if (name == "holder") {
        const auto f = DiscretizedFunction::from_rule(
            cfg.rule, [&](std::span<const double> x) { return hermite_eval(axis_index(1), x); });
        const auto g = DiscretizedFunction::from_rule(
            cfg.rule, [&](std::span<const double> x) { return hermite_eval(axis_index(2), x); });
        return check_holder(f, g, parse_exponent(require(spec, "q"), gaussian, "q"),
                            parse_exponent(require(spec, "r"), gaussian, "r"));
    }
    if (name == "kdecay") {
        HermiteExpansion mixed(cfg.dimension);
        for (int n = 0; n <= 9; ++n) mixed.set(axis_index(n), 1.0);
        return check_kdecay(mixed, static_cast<int>(num(spec, "k", 1)),
                            parse_exponent(require(spec, "p"), gaussian, "p"), cfg.rule, cfg.grid);
    }
    if (name == "forward_difference_norm") {
        HermiteExpansion mixed(cfg.dimension);
        for (int n = 0; n <= 9; ++n) mixed.set(axis_index(n), 1.0);
        return check_forward_difference_norm(mixed, static_cast<int>(num(spec, "k", 1)),
                                             static_cast<int>(num(spec, "n", 0)),
                                             parse_exponent(require(spec, "p"), gaussian, "p"),
                                             cfg.rule, cfg.grid);
    }
    if (name == "theorem_jbeta_infty")
        return check_theorem_jbeta_infty(ctx.family, require(spec, "alpha").get<double>(),
                                         require(spec, "beta").get<double>(),
                                         parse_exponent(require(spec, "p"), gaussian, "p"),
                                         cfg.rule, cfg.grid, &ctx.extension);
    if (name == "theorem_jbeta")
        return check_theorem_jbeta(ctx.family, require(spec, "alpha").get<double>(),
                                   require(spec, "beta").get<double>(),
                                   parse_exponent(require(spec, "p"), gaussian, "p"),
                                   parse_exponent(require(spec, "q"), halfline, "q"), cfg.rule,
                                   cfg.grid, &ctx.extension);
    if (name == "theorem_dbeta")
        return check_theorem_dbeta(ctx.family, require(spec, "alpha").get<double>(),
                                   require(spec, "beta").get<double>(),
                                   parse_exponent(require(spec, "p"), gaussian, "p"),
                                   parse_exponent(require(spec, "q"), halfline, "q"), cfg.rule,
                                   cfg.grid, &ctx.extension);
    if (name == "inclusion") {
        const bool squares = spec.value("family", "") == std::string("squares");
        return inclusion_diagnostic(squares ? ctx.squares : ctx.family,
                                    require(spec, "alpha1").get<double>(),
                                    parse_exponent(require(spec, "q1"), halfline, "q1"),
                                    require(spec, "alpha2").get<double>(),
                                    parse_exponent(require(spec, "q2"), halfline, "q2"),
                                    parse_exponent(require(spec, "p"), gaussian, "p"), cfg.rule,
                                    cfg.grid, squares ? nullptr : &ctx.extension);
    }
    throw ConfigError("config: unknown check '" + name + "'");
}

void validate_check(const json& spec) {
    const std::string name = require(spec, "name").get<std::string>();
    if (name == "theorem_dbeta") {
        const double alpha = require(spec, "alpha").get<double>();
        const double beta = require(spec, "beta").get<double>();
        if (!(beta > 0.0) || !(beta < alpha))
            throw ConfigError("config: theorem_dbeta requires 0 < beta < alpha");
    }
}

int cmd_verify(const RunConfig& cfg, const fs::path& out_dir) {
    if (cfg.dimension != 1)
        throw ConfigError("config: the verify battery runs over the dimension-1 family");
    json checks = cfg.doc.value("checks", json());
    if (checks.is_null()) checks = default_checks();
    if (!checks.is_array() || checks.empty()) throw ConfigError("config: 'checks' must be a non-empty array");
    for (const auto& spec : checks) validate_check(spec);

    const json fam = cfg.doc.value("family", json());
    VerifyContext ctx{cfg,
                      default_family(static_cast<int>(num(fam, "max_order", 16)),
                                     static_cast<int>(num(fam, "random_count", 20)),
                                     static_cast<int>(num(fam, "random_max_order", 9)), cfg.seed),
                      eigenfunction_range(static_cast<int>(num(fam, "max_order", 16)) + 1,
                                          static_cast<int>(num(fam, "extension_max_order", 25))),
                      {}};
    for (int m : {1, 4, 9, 16, 25}) ctx.squares.push_back(HermiteExpansion::basis(MultiIndex{m}));

    // checks are independent pure functions; run them concurrently and
    // aggregate deterministically by (name, position)
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(checks.size());
    for (const auto& spec : checks)
        futures.push_back(std::async(std::launch::async, [&ctx, spec] { return run_check(ctx, spec); }));
    std::vector<VerificationReport> reports;
    reports.reserve(futures.size());
    for (auto& fut : futures) reports.push_back(fut.get());
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });

    write_output(out_dir, "verify.json", reports_to_json(defaults_json(cfg), reports));
    write_output(out_dir, "verify_summary.csv", reports_to_csv(reports));

    bool all_pass = true;
    for (const auto& r : reports) {
        std::printf("[%s] %-28s ratio=%-12.6g delta=%-10.3g %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.ratio, r.stability_delta, r.note.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

void print_schema() {
    std::puts(R"(gbesov config schema (JSON object; all keys optional unless marked):
  dimension      : 1..4                                     (default 1)
  seed           : u64 RNG seed                              (default 0)
  quadrature     : {kind:"gauss"|"uniform", points:int, half_width:real}
  time_grid      : {t_min:real, t_max:real, count:int}
  expansion      : {kind:"basis", index:[int]*d, value:real}
                 | {kind:"coefficients", terms:[{index:[...], value:real}]}
  p, q           : {kind:"constant", value:real}
                 | {kind:"rational_decay", limit:real, amplitude:real, offset:real, power:real}
                 | {kind:"table", radii:[...], values:[...]}
                 | {kind:"infinity"}                         (q only)
  besov          : {alpha:real, k:int (0 = smallest integer > alpha)}
  operator       : {kind:"bessel_potential"|"bessel_derivative", beta:real, form:"spectral"|"integral"}
                 | {kind:"ou"|"poisson", t:real, derivative:int, form:"spectral"|"subordination"}
  eval_grid      : {min:real, max:real, count:int}
  family         : {max_order:int, random_count:int, random_max_order:int, extension_max_order:int}
  checks         : [{name:"classical_hardy"|"variable_hardy"|"norm_conjugate"|"holder"|
                     "kdecay"|"forward_difference_norm"|"theorem_jbeta_infty"|
                     "theorem_jbeta"|"theorem_dbeta"|"inclusion", ...params}]
Outputs land in --out (default .): eval.csv, op.csv, norm.json, besov.json,
besov_trace.csv, verify.json, verify_summary.csv.)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian-measure operator calculus toolkit"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir = ".";
    int refine = 1;
    std::optional<std::uint64_t> seed;
    bool schema = false;
    app.add_flag("--print-schema", schema, "print the config schema and exit");

    std::array<CLI::App*, 5> subs{};
    const char* names[5] = {"eval", "norm", "besov", "op", "verify"};
    for (int i = 0; i < 5; ++i) {
        subs[static_cast<std::size_t>(i)] = app.add_subcommand(names[i]);
        auto* sc = subs[static_cast<std::size_t>(i)];
        sc->add_option("--config", config_path, "JSON config path")->required();
        sc->add_option("--out", out_dir, "output directory");
        sc->add_option("--refine", refine, "grid refinement factor")->check(CLI::PositiveNumber);
        sc->add_option("--seed", [&seed](const std::vector<std::string>& v) {
            seed = std::stoull(v.at(0));
            return true;
        }, "override config seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (schema) {
        print_schema();
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << "usage: gbesov [--print-schema] {eval|norm|besov|op|verify} --config <path>\n";
        return 2;
    }

    try {
        const RunConfig cfg = RunConfig::load(config_path, refine, seed);
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "eval") return cmd_eval(cfg, out_dir);
        if (cmd == "norm") return cmd_norm(cfg, out_dir);
        if (cmd == "besov") return cmd_besov(cfg, out_dir);
        if (cmd == "op") return cmd_op(cfg, out_dir);
        if (cmd == "verify") return cmd_verify(cfg, out_dir);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
