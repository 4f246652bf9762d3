#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gbesov/hermite.hpp"
#include "gbesov/verify.hpp"
#include "oracles.hpp"

using namespace gbesov;
using Domain = ExponentFunction::Domain;

namespace {

ExponentFunction p_const(double v) { return ExponentFunction::constant(Domain::gaussian, v); }
ExponentFunction q_const(double v) { return ExponentFunction::constant(Domain::halfline, v); }
ExponentFunction p_var() {
    return ExponentFunction::rational_decay(Domain::gaussian, 2.0, 1.0, std::numbers::e, 2.0);
}
ExponentFunction q_var() {
    return ExponentFunction::rational_decay(Domain::halfline, 2.0, 1.0, 1.0, 1.0);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("classical hardy inequalities on the listed functions") {
    const auto grid = TimeGrid::standard();

    const auto exp_rep = check_classical_hardy([](double y) { return std::exp(-y); }, 2.0, 1.0, grid);
    CHECK(exp_rep.pass);
    CHECK(exp_rep.ratio < 1.0);
    CHECK(exp_rep.ratio > 0.5);

    const auto zero_rep = check_classical_hardy([](double) { return 0.0; }, 2.0, 1.0, grid);
    CHECK(zero_rep.pass);
    CHECK(zero_rep.vacuous);

    // sharp case: phi = y on [0,1], p = r = 1 sits at equality
    const auto sharp = check_classical_hardy([](double y) { return y <= 1.0 ? y : 0.0; }, 1.0, 1.0, grid);
    CHECK(sharp.pass);
    CHECK(sharp.ratio == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sharp.ratio <= 1.0 + 1e-6);

    CHECK_THROWS_AS(check_classical_hardy([](double) { return 0.0; }, 0.5, 1.0, grid),
                    std::invalid_argument);
}

TEST_CASE("variable hardy certificates") {
    const auto grid = TimeGrid::standard();
    const auto r1 = check_variable_hardy([](double y) { return y * y * std::exp(-y); },
                                         q_const(2.0), 1.0, grid);
    CHECK(r1.pass);
    CHECK(std::isfinite(r1.ratio));
    CHECK(r1.ratio > 0.0);
    CHECK(r1.stability_delta <= kStabilitySlack);

    const auto r2 = check_variable_hardy([](double) { return 0.0; }, q_const(2.0), 1.0, grid);
    CHECK(r2.pass);
    CHECK(r2.vacuous);

    const auto r3 = check_variable_hardy([](double y) { return y * std::exp(-y); }, q_var(), 0.5, grid);
    CHECK(r3.pass);
    CHECK(std::isfinite(r3.ratio));
}

TEST_CASE("norm conjugate estimates") {
    const auto rule = gauss_rule(1, 48);
    const auto f = DiscretizedFunction::from_rule(
        rule, [](std::span<const double> x) { return hermite_eval(MultiIndex{1}, x); });

    const auto const_rep = check_norm_conjugate(f, p_const(2.0), 0);
    CHECK(const_rep.pass);
    CHECK(const_rep.ratio == doctest::Approx(1.0).epsilon(1e-6));

    const auto zero = DiscretizedFunction::from_rule(rule, [](std::span<const double>) { return 0.0; });
    const auto zero_rep = check_norm_conjugate(zero, p_const(2.0), 0);
    CHECK(zero_rep.pass);
    CHECK(zero_rep.vacuous);

    const auto var_rep = check_norm_conjugate(f, p_var(), 0);
    CHECK(var_rep.pass);
    CHECK(var_rep.ratio >= 0.45);
    CHECK(var_rep.ratio <= 2.0 + 1e-9);

    CHECK_THROWS_AS(check_norm_conjugate(f, p_const(1.0), 0), std::invalid_argument);
}

TEST_CASE("holder inequality certificates") {
    const auto rule = gauss_rule(1, 48);
    const auto f = DiscretizedFunction::from_rule(
        rule, [](std::span<const double> x) { return hermite_eval(MultiIndex{1}, x); });
    const auto g = DiscretizedFunction::from_rule(
        rule, [](std::span<const double> x) { return hermite_eval(MultiIndex{2}, x); });

    const auto cs = check_holder(f, g, q_const(2.0), q_const(2.0));
    CHECK(cs.pass);
    CHECK(cs.ratio <= 1.0);

    // large-r stress case standing in for r = infinity
    const auto ones = DiscretizedFunction::from_rule(rule, [](std::span<const double>) { return 1.0; });
    const auto stress = check_holder(f, ones, q_const(2.0), q_const(100.0));
    CHECK(stress.pass);

    const auto zero = DiscretizedFunction::from_rule(rule, [](std::span<const double>) { return 0.0; });
    const auto vac = check_holder(zero, zero, q_const(2.0), q_const(2.0));
    CHECK(vac.pass);
    CHECK(vac.vacuous);
}

TEST_CASE("k-decay certificates") {
    const auto rule = gauss_rule(1, 64);
    const auto grid = TimeGrid::standard();

    // eigenfunction at constant p: t -> a^k e^{-ta} is literally decreasing
    const auto eig = check_kdecay(HermiteExpansion::basis(MultiIndex{3}), 1, p_const(2.0), rule, grid);
    CHECK(eig.pass);
    for (const auto& [k, v] : eig.params)
        if (k == "monotone_constant") CHECK(v <= 1.0 + 1e-9);

    const auto vac = check_kdecay(HermiteExpansion::basis(MultiIndex{0}), 1, p_const(2.0), rule, grid);
    CHECK(vac.pass);
    CHECK(vac.vacuous);

    HermiteExpansion mixed(1);
    for (int n = 0; n <= 9; ++n) mixed.set(MultiIndex{n}, 1.0);
    const auto rep = check_kdecay(mixed, 2, p_var(), rule, grid);
    CHECK(rep.pass);
    CHECK(std::isfinite(rep.ratio));
    CHECK(rep.stability_delta <= kStabilitySlack);
}

TEST_CASE("forward difference norm bound (finite + stable)") {
    const auto rule = gauss_rule(1, 64);
    HermiteExpansion mixed(1);
    for (int n = 0; n <= 9; ++n) mixed.set(MultiIndex{n}, 1.0);

    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}}) {
        const auto rep =
            check_forward_difference_norm(mixed, k, n, p_const(2.0), rule, TimeGrid::standard());
        CHECK(rep.pass);
        CHECK(std::isfinite(rep.ratio));
        CHECK(rep.ratio > 0.0);
        CHECK(rep.stability_delta <= kStabilitySlack);
    }

    const auto vac = check_forward_difference_norm(HermiteExpansion::basis(MultiIndex{0}), 1, 0,
                                                   p_const(2.0), rule, TimeGrid::standard());
    CHECK(vac.pass);
    CHECK(vac.vacuous);
}

TEST_CASE("boundedness certificate: J_beta on the sup spaces") {
    const auto rule = gauss_rule(1, 64);
    const auto grid = TimeGrid(1e-4, 60.0, 600);
    const auto family = eigenfunction_range(1, 9);
    const auto ext = eigenfunction_range(10, 16);

    const auto rep = check_theorem_jbeta_infty(family, 0.5, 1.0, p_const(2.0), rule, grid, &ext);
    CHECK(rep.pass);
    CHECK(std::isfinite(rep.ratio));
    CHECK(rep.stability_delta <= kStabilitySlack);

    // scale invariance of the ratio
    std::vector<HermiteExpansion> scaled;
    for (const auto& f : family) scaled.push_back(3.0 * f);
    const auto rep2 = check_theorem_jbeta_infty(scaled, 0.5, 1.0, p_const(2.0), rule, grid);
    CHECK(rep2.ratio == doctest::Approx(rep.ratio).epsilon(1e-9));
}

TEST_CASE("boundedness certificates: J_beta and D_beta on mixed-norm spaces") {
    const auto rule = gauss_rule(1, 64);
    const TimeGrid grid(1e-10, 60.0, 400);
    const auto family = eigenfunction_range(1, 9);
    const auto ext = eigenfunction_range(10, 12);

    const auto jb = check_theorem_jbeta(family, 0.5, 0.5, p_const(2.0), q_const(2.0), rule, grid, &ext);
    CHECK(jb.pass);
    CHECK(std::isfinite(jb.ratio));

    const auto db = check_theorem_dbeta(family, 1.5, 0.5, p_const(2.0), q_const(2.0), rule, grid, &ext);
    CHECK(db.pass);
    for (const auto& [k, v] : db.params)
        if (k == "spectral_crosscheck") CHECK(v <= 1e-6);

    CHECK_THROWS_AS(
        check_theorem_dbeta(family, 0.5, 1.5, p_const(2.0), q_const(2.0), rule, grid, nullptr),
        std::invalid_argument);

    // variable-exponent stress case
    const auto stress = check_theorem_jbeta(family, 0.5, 0.5, p_var(), q_var(), rule, grid, nullptr);
    CHECK(stress.pass);
}

TEST_CASE("inclusion diagnostics") {
    const auto rule = gauss_rule(1, 64);
    const TimeGrid grid(1e-10, 60.0, 500);
    const auto family = eigenfunction_range(1, 9);
    const auto ext = eigenfunction_range(10, 12);

    const auto dir1 =
        inclusion_diagnostic(family, 1.0, q_const(2.0), 0.5, q_const(2.0), p_const(2.0), rule, grid, &ext);
    CHECK(dir1.pass);
    CHECK(std::isfinite(dir1.ratio));

    const auto dir2 =
        inclusion_diagnostic(family, 0.5, q_const(2.0), 0.5, q_const(4.0), p_const(2.0), rule, grid, &ext);
    CHECK(dir2.pass);

    // reversed direction: growth exponent (alpha2 - alpha1)/2 in |nu|
    std::vector<HermiteExpansion> squares;
    for (int m : {1, 4, 9, 16, 25}) squares.push_back(HermiteExpansion::basis(MultiIndex{m}));
    const auto rev =
        inclusion_diagnostic(squares, 0.5, q_const(2.0), 1.0, q_const(2.0), p_const(2.0), rule, grid);
    CHECK(rev.pass);
    double measured = 0.0;
    for (const auto& [k, v] : rev.params)
        if (k == "growth_exponent") measured = v;
    CHECK(measured == doctest::Approx(0.25).epsilon(0.1));
}

TEST_CASE("default family is deterministic in the seed") {
    const auto fam1 = default_family(8, 4, 5, 123);
    const auto fam2 = default_family(8, 4, 5, 123);
    const auto fam3 = default_family(8, 4, 5, 124);
    REQUIRE(fam1.size() == 12);
    bool all_equal = true, any_differs = false;
    for (std::size_t i = 8; i < 12; ++i) {
        for (const auto& [nu, c] : fam1[i].coefficients()) {
            all_equal = all_equal && fam2[i].coefficient(nu) == c;
            any_differs = any_differs || fam3[i].coefficient(nu) != c;
        }
    }
    CHECK(all_equal);
    CHECK(any_differs);
    CHECK(describe(fam1[0]) == "h_(1)");
}

TEST_CASE("reports are self-certifying") {
    const auto grid = TimeGrid::standard();
    const auto rule = gauss_rule(1, 48);
    std::vector<VerificationReport> reports;
    reports.push_back(check_classical_hardy([](double y) { return std::exp(-y); }, 2.0, 1.0, grid));
    reports.push_back(check_variable_hardy([](double y) { return y * std::exp(-y); }, q_var(), 0.5, grid));
    reports.push_back(check_kdecay(HermiteExpansion::basis(MultiIndex{2}), 1, p_const(2.0), rule, grid));
    for (const auto& r : reports) CHECK(r.pass == r.recompute_pass());

    // tampering with a stored field flips the recomputed flag
    auto tampered = reports[0];
    tampered.ratio = tampered.bound * 2.0;
    CHECK_FALSE(tampered.recompute_pass());
}

}  // TEST_SUITE
