#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gbesov/exponents.hpp"
#include "gbesov/hermite.hpp"
#include "oracles.hpp"

using namespace gbesov;
using Domain = ExponentFunction::Domain;

namespace {

ExponentFunction variable_p() {
    // p(x) = 2 + 1/(e + |x|)^2, the paper's model family
    return ExponentFunction::rational_decay(Domain::gaussian, 2.0, 1.0, std::numbers::e, 2.0);
}

ExponentFunction q_of_choice() {
    return ExponentFunction::rational_decay(Domain::halfline, 2.0, 1.0, 1.0, 1.0);
}

DiscretizedFunction h1_on(const QuadratureRule& rule) {
    return DiscretizedFunction::from_rule(
        rule, [](std::span<const double> x) { return hermite_eval(MultiIndex{1}, x); });
}

}  // namespace

TEST_SUITE("exponents") {

TEST_CASE("exponent families and declared bounds") {
    const auto c = ExponentFunction::constant(Domain::gaussian, 2.5);
    CHECK(c.at(0.0) == 2.5);
    CHECK(c.p_minus() == 2.5);
    CHECK(c.p_plus() == 2.5);

    const auto p = variable_p();
    CHECK(p.at(0.0) == doctest::Approx(2.0 + 1.0 / (std::numbers::e * std::numbers::e)));
    CHECK(p.p_minus() == 2.0);
    CHECK(p.limit_value() == 2.0);
    CHECK(p.p_plus() == doctest::Approx(p.at(0.0)));

    const auto tab = ExponentFunction::table(Domain::halfline, {0.0, 1.0, 2.0}, {3.0, 2.0, 2.5});
    CHECK(tab.at(0.5) == doctest::Approx(2.5));
    CHECK(tab.at(5.0) == 2.5);  // clamped
    CHECK(tab.p_minus() == 2.0);
    CHECK(tab.p_plus() == 3.0);

    CHECK(ExponentFunction::infinity().is_infinity());
    CHECK_THROWS_AS(ExponentFunction::infinity().at(1.0), std::invalid_argument);

    const auto pc = ExponentFunction::constant(Domain::gaussian, 2.0).conjugate();
    CHECK(pc.at(3.0) == doctest::Approx(2.0));
    const auto vc = variable_p().conjugate();
    const double pv = variable_p().at(1.0);
    CHECK(vc.at(1.0) == doctest::Approx(pv / (pv - 1.0)));
    CHECK_THROWS_AS(ExponentFunction::constant(Domain::gaussian, 1.0).conjugate(),
                    std::invalid_argument);
}

TEST_CASE("declared bounds hold at sampled points") {
    std::vector<double> radii;
    for (int i = 0; i <= 500; ++i) radii.push_back(20.0 * i / 500.0);
    const auto check_bounds = [&](const ExponentFunction& p) {
        for (double r : radii) {
            CHECK(p.at(r) >= p.p_minus() - 1e-12);
            CHECK(p.at(r) <= p.p_plus() + 1e-12);
        }
    };
    check_bounds(ExponentFunction::constant(Domain::gaussian, 2.7));
    check_bounds(variable_p());
    check_bounds(ExponentFunction::table(Domain::halfline, {0.0, 0.5, 3.0}, {2.0, 3.5, 2.5}));
    check_bounds(variable_p().conjugate());
}

TEST_CASE("modular: trivial and definitional cases") {
    const auto rule = gauss_rule(1, 32);
    const auto ones = DiscretizedFunction::from_rule(rule, [](std::span<const double>) { return 1.0; });
    CHECK(modular(ones, variable_p()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(modular(ones, ExponentFunction::constant(Domain::gaussian, 7.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // constant exponent: modular is the discretized int |f|^p
    const auto f = h1_on(rule);
    const double direct = rule.integrate([](std::span<const double> x) {
        return std::pow(std::fabs(hermite_eval(MultiIndex{1}, x)), 3.0);
    });
    CHECK(modular(f, ExponentFunction::constant(Domain::gaussian, 3.0)) ==
          doctest::Approx(direct).epsilon(1e-13));

    auto bad = f;
    bad.values[0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(modular(bad, variable_p()), NumericalError);
}

TEST_CASE("modular of the variable example matches a dense-grid oracle") {
    // |h_1|^{p(x)} has an |x|-type kink at 0, so the carrier is the uniform
    // gamma rule; the oracle is an independent dense trapezoid.
    const auto rule = QuadratureRule::uniform(1, 10.0, 20001);
    const auto f = h1_on(rule);
    const double got = modular(f, variable_p());
    const double want = oracles::trapezoid(
        [&](double x) {
            const double p = 2.0 + 1.0 / std::pow(std::numbers::e + std::fabs(x), 2.0);
            return std::pow(std::fabs(std::sqrt(2.0) * x), p) * std::exp(-x * x) /
                   std::sqrt(std::numbers::pi);
        },
        -12.0, 12.0, 800001);
    CHECK(got == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("luxemburg norm: constants, closed forms, zero") {
    const auto rule = gauss_rule(1, 48);
    for (double c : {0.2, 1.0, 17.0}) {
        const auto f =
            DiscretizedFunction::from_rule(rule, [c](std::span<const double>) { return c; });
        CHECK(luxemburg_norm(f, variable_p()) == doctest::Approx(c).epsilon(1e-12));
    }

    const auto f = h1_on(rule);
    CHECK(luxemburg_norm(f, ExponentFunction::constant(Domain::gaussian, 2.0)) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // ||h_1||_4 = (int 4 x^4)^{1/4} = 3^{1/4}
    CHECK(luxemburg_norm(f, ExponentFunction::constant(Domain::gaussian, 4.0)) ==
          doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-10));

    const auto zero = DiscretizedFunction::from_rule(rule, [](std::span<const double>) { return 0.0; });
    CHECK(luxemburg_norm(zero, variable_p()) == 0.0);
}

TEST_CASE("luxemburg norm: homogeneity, monotone modular, unit ball") {
    const auto rule = gauss_rule(1, 48);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    HermiteExpansion f(1);
    for (int n = 0; n <= 6; ++n) f.set(MultiIndex{n}, gauss(rng));
    auto fd = DiscretizedFunction::from_rule(
        rule, [&](std::span<const double> x) { return expansion_eval(f, x); });
    const auto p = variable_p();
    const double norm = luxemburg_norm(fd, p);

    for (double c : {0.1, 1.0, 10.0}) {
        auto scaled = fd;
        for (auto& v : scaled.values) v *= c;
        CHECK(luxemburg_norm(scaled, p) == doctest::Approx(c * norm).epsilon(1e-10));
    }

    double prev = std::numeric_limits<double>::infinity();
    for (double lambda = 0.25 * norm; lambda <= 4.0 * norm; lambda *= 1.3) {
        auto scaled = fd;
        for (auto& v : scaled.values) v /= lambda;
        const double rho = modular(scaled, p);
        CHECK(rho <= prev * (1.0 + 1e-12));
        prev = rho;
    }

    auto unit = fd;
    for (auto& v : unit.values) v /= norm;
    CHECK(modular(unit, p) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("luxemburg norm: variable exponent against the lambda-scan oracle") {
    const auto rule = QuadratureRule::uniform(1, 10.0, 4001);
    const auto f = h1_on(rule);
    const auto p = variable_p();
    const double got = luxemburg_norm(f, p);

    std::vector<double> ps(f.values.size());
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = p(f.point(i));
    const double scan =
        oracles::lambda_grid_scan(f.values, f.weights, ps, 0.9 * got, 1.1 * got, 1e-6);
    CHECK(got == doctest::Approx(scan).epsilon(1e-5));
}

TEST_CASE("luxemburg norm flags non-normalizable input") {
    DiscretizedFunction f;
    f.dimension = 1;
    f.points = {0.0, 1.0};
    f.values = {1.0, 1.0};
    f.weights = {1e30, 1e30};  // nearly-flat exponent cannot bring the modular below 1
    const auto p = ExponentFunction::constant(Domain::gaussian, 1.01);
    std::vector<double> ps{1.01, 1.01};
    CHECK_THROWS_AS(luxemburg_norm(f.values, f.weights, ps), NumericalError);
}

TEST_CASE("haar norm: Gamma closed form, zero, sup branch") {
    const TimeGrid grid(1e-6, 200.0, 2000);
    for (double q : {1.0, 2.0, 3.0}) {
        const auto g = DiscretizedFunction::on_time_grid(
            grid, [](double t) { return std::pow(t, 1.2) * std::exp(-0.7 * t); });
        const double want = oracles::gamma_halfline_norm(1.2, 0.7, q);
        CHECK(haar_norm(g, ExponentFunction::constant(Domain::halfline, q)) ==
              doctest::Approx(want).epsilon(1e-6));
    }

    const auto zero = DiscretizedFunction::on_time_grid(grid, [](double) { return 0.0; });
    CHECK(haar_norm(zero, ExponentFunction::constant(Domain::halfline, 2.0)) == 0.0);

    // q = infinity branch: sup of t e^{-t} on a grid containing t = 1
    const TimeGrid sym(0.01, 100.0, 401);
    const auto g = DiscretizedFunction::on_time_grid(sym, [](double t) { return t * std::exp(-t); });
    CHECK(haar_norm(g, ExponentFunction::infinity()) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("haar identity: dt/t norm equals flat norm of t^{-1/q} f") {
    const TimeGrid grid(1e-4, 80.0, 900);
    const auto q = ExponentFunction::rational_decay(Domain::halfline, 2.0, 1.0, 1.0, 1.0);
    const auto g = DiscretizedFunction::on_time_grid(
        grid, [](double t) { return t * std::exp(-0.5 * t); });
    const double lhs = haar_norm(g, q);

    DiscretizedFunction flat = g;
    for (std::size_t i = 0; i < flat.values.size(); ++i) {
        const double t = grid.point(i);
        flat.values[i] = std::pow(t, -1.0 / q.at(t)) * g.values[i];
        flat.weights[i] = grid.flat_weight(i);
    }
    const double rhs = luxemburg_norm(flat, q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("haar norm homogeneity and the sup branch scale linearly") {
    const TimeGrid grid(1e-4, 80.0, 600);
    const auto q = q_of_choice();
    const auto g = DiscretizedFunction::on_time_grid(
        grid, [](double t) { return std::sqrt(t) * std::exp(-0.3 * t); });
    const double base = haar_norm(g, q);
    const double sup_base = haar_norm(g, ExponentFunction::infinity());
    for (double c : {0.1, 2.0, 25.0}) {
        auto scaled = g;
        for (auto& v : scaled.values) v *= c;
        CHECK(haar_norm(scaled, q) == doctest::Approx(c * base).epsilon(1e-10));
        CHECK(haar_norm(scaled, ExponentFunction::infinity()) ==
              doctest::Approx(c * sup_base).epsilon(1e-12));
    }
}

TEST_CASE("log-Holder certificates") {
    std::vector<double> radii;
    for (int i = 0; i <= 400; ++i) radii.push_back(10.0 * i / 400.0);

    const auto c = ExponentFunction::constant(Domain::gaussian, 2.0);
    const auto est = check_log_holder(c, radii);
    CHECK(est.c_local == 0.0);
    CHECK(est.c_infinity == 0.0);

    const auto p = variable_p();
    const auto estp = check_log_holder(p, radii);
    CHECK(std::isfinite(estp.c_local));
    CHECK(std::isfinite(estp.c_infinity));
    CHECK(pgamma_constant(p, radii) < 2.0);  // P^inf_{gamma_d} membership certificate

    // a step exponent blows up under grid refinement
    const auto step = ExponentFunction::derived(
        Domain::gaussian, [](double r) { return r < 1.0 ? 2.0 : 3.0; }, 2.0, 3.0, 3.0);
    const auto coarse = check_log_holder(step, std::vector<double>{0.9, 1.1});
    const auto fine = check_log_holder(step, std::vector<double>{0.999, 1.001});
    const auto finer = check_log_holder(step, std::vector<double>{0.999999, 1.000001});
    CHECK(fine.c_local > coarse.c_local);
    CHECK(finer.c_local > fine.c_local);
}

TEST_CASE("P_{0,inf} constants for the half-line family") {
    std::vector<double> times;
    for (int i = 0; i <= 2000; ++i) times.push_back(1e-3 * std::pow(1e5 / 1e-3, i / 2000.0));
    const auto q = ExponentFunction::rational_decay(Domain::halfline, 2.0, 1.0, 1.0, 1.0);
    CHECK(q.value_at_zero() == doctest::Approx(3.0));
    CHECK(q.limit_value() == 2.0);
    const auto est = p0inf_constants(q, times);
    CHECK(est.a_zero < 1.0);
    CHECK(est.a_inf < 1.0);
    CHECK(est.a_zero > 0.0);
    CHECK(est.a_inf > 0.0);
}

}  // TEST_SUITE
