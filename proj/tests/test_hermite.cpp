#include <doctest.h>

#include <cmath>
#include <random>

#include "gbesov/hermite.hpp"
#include "oracles.hpp"

using namespace gbesov;

namespace {

double df(std::initializer_list<double> x, const MultiIndex& nu) {
    return hermite_eval(nu, std::vector<double>(x));
}

}  // namespace

TEST_SUITE("hermite") {

TEST_CASE("multi-index order, factorial and invariants") {
    MultiIndex nu{2, 0, 3};
    CHECK(nu.dimension() == 3);
    CHECK(nu.order() == 5);
    CHECK(nu.factorial() == doctest::Approx(12.0).epsilon(1e-15));  // 2! * 0! * 3!

    // factorial against an independent long-double product
    MultiIndex big{14, 9};
    long double expect = 1.0L;
    for (int m = 2; m <= 14; ++m) expect *= m;
    for (int m = 2; m <= 9; ++m) expect *= m;
    CHECK(big.factorial() == doctest::Approx(static_cast<double>(expect)).epsilon(1e-14));

    CHECK(MultiIndex::zeros(2).order() == 0);
    CHECK(MultiIndex::zeros(2).factorial() == 1.0);
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
}

TEST_CASE("hermite_eval matches the coefficient-table oracle") {
    CHECK(df({0.37}, MultiIndex{0}) == 1.0);
    CHECK(df({1.0}, MultiIndex{1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(df({1.0}, MultiIndex{2}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int n = 0; n <= 10; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const double x = unif(rng);
            CHECK(df({x}, MultiIndex{n}) ==
                  doctest::Approx(oracles::hermite_normalized(n, x)).epsilon(1e-11));
        }
    }

    // tensor product in d = 2
    const double x0 = 0.8, x1 = -1.3;
    CHECK(df({x0, x1}, MultiIndex{3, 2}) ==
          doctest::Approx(oracles::hermite_normalized(3, x0) * oracles::hermite_normalized(2, x1))
              .epsilon(1e-12));

    CHECK_THROWS_AS(df({1.0, 2.0}, MultiIndex{1}), std::invalid_argument);
}

TEST_CASE("gauss rule: probability weights and moment exactness") {
    for (int n : {1, 2, 7, 40, 120, 200}) {
        const auto rule = gauss_rule(1, n);
        double sum = 0.0;
        for (double w : rule.weights()) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    // int x^{2m} gamma_1(dx) = (2m-1)!! / 2^m, exact while 2m <= 2n-1
    const auto rule = gauss_rule(1, 10);
    double moment = 1.0;
    for (int m = 1; m <= 9; ++m) {
        moment *= (2.0 * m - 1.0) / 2.0;
        const double got =
            rule.integrate([m](std::span<const double> x) { return std::pow(x[0], 2 * m); });
        CHECK(got == doctest::Approx(moment).epsilon(1e-12));
    }

    CHECK(gauss_rule(1, 5).integrate([](std::span<const double>) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gauss_rule(1, 3).integrate([](std::span<const double> x) { return x[0] * x[0]; }) ==
          doctest::Approx(0.5).epsilon(1e-13));

    CHECK_THROWS_AS(gauss_rule(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(1, 201), std::invalid_argument);
}

TEST_CASE("gauss rule in d = 2: tensor orthonormality") {
    const auto rule = gauss_rule(2, 3);
    const MultiIndex nu{1, 1};
    const double got = rule.integrate(
        [&](std::span<const double> x) { const double h = hermite_eval(nu, x); return h * h; });
    CHECK(got == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthonormality up to order 12") {
    const auto rule = gauss_rule(1, 24);
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= 12; ++m) {
            const double got = fourier_coefficient(
                [n](std::span<const double> x) { return hermite_eval(MultiIndex{n}, x); },
                MultiIndex{m}, rule);
            CHECK(std::fabs(got - (n == m ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("orthonormality of tensor products in d = 2") {
    const auto rule = gauss_rule(2, 14);
    const std::vector<MultiIndex> basis{{0, 0}, {1, 0}, {0, 2}, {2, 1}, {3, 3}, {6, 0}};
    for (const auto& nu : basis) {
        for (const auto& mu : basis) {
            const double got = fourier_coefficient(
                [&](std::span<const double> x) { return hermite_eval(nu, x); }, mu, rule);
            CHECK(std::fabs(got - (nu == mu ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("fourier coefficients: identity function and constants") {
    const auto rule = gauss_rule(1, 16);
    CHECK(fourier_coefficient([](std::span<const double> x) { return x[0]; }, MultiIndex{1},
                              rule) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fourier_coefficient([](std::span<const double>) { return 3.25; }, MultiIndex{0}, rule) ==
          doctest::Approx(3.25).epsilon(1e-12));
    CHECK_THROWS_AS(fourier_coefficient([](std::span<const double>) { return 0.0; },
                                        MultiIndex{1, 1}, rule),
                    std::invalid_argument);
}

TEST_CASE("chaos projection selects by total order") {
    HermiteExpansion f(1);
    f.set(MultiIndex{0}, 1.0);
    f.set(MultiIndex{1}, 2.0);
    f.set(MultiIndex{2}, 3.0);

    const auto j1 = chaos_projection(f, 1);
    CHECK(j1.size() == 1);
    CHECK(j1.coefficient(MultiIndex{1}) == 2.0);
    CHECK(chaos_projection(f, 5).empty());

    // projections resum to f
    HermiteExpansion resum(1);
    for (int n = 0; n <= f.max_order(); ++n) resum += chaos_projection(f, n);
    for (const auto& [nu, c] : f.coefficients()) CHECK(resum.coefficient(nu) == c);

    const auto h3 = HermiteExpansion::basis(MultiIndex{3});
    CHECK(chaos_projection(h3, 3).coefficient(MultiIndex{3}) == 1.0);
    CHECK(chaos_projection(h3, 2).empty());
}

TEST_CASE("expansion evaluation") {
    CHECK(expansion_eval(HermiteExpansion(1), std::vector<double>{0.3}) == 0.0);
    CHECK(expansion_eval(HermiteExpansion::basis(MultiIndex{1}), std::vector<double>{1.0}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    HermiteExpansion f(1);
    f.set(MultiIndex{0}, 1.0);
    f.set(MultiIndex{2}, 1.0);
    CHECK(expansion_eval(f, std::vector<double>{0.0}) ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(expansion_eval(f, std::vector<double>{0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("analysis-synthesis round trip recovers coefficients") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);

    HermiteExpansion f(1);
    for (int n = 0; n <= 8; ++n) f.set(MultiIndex{n}, gauss(rng));
    const auto rule = gauss_rule(1, 24);
    for (int n = 0; n <= 8; ++n) {
        const double got = fourier_coefficient(
            [&](std::span<const double> x) { return expansion_eval(f, x); }, MultiIndex{n}, rule);
        CHECK(got == doctest::Approx(f.coefficient(MultiIndex{n})).epsilon(1e-10));
    }

    HermiteExpansion g(2);
    g.set(MultiIndex{1, 2}, 0.7);
    g.set(MultiIndex{0, 1}, -1.4);
    g.set(MultiIndex{3, 0}, 0.2);
    const auto rule2 = gauss_rule(2, 12);
    for (const auto& [nu, c] : g.coefficients()) {
        const double got = fourier_coefficient(
            [&](std::span<const double> x) { return expansion_eval(g, x); }, nu, rule2);
        CHECK(got == doctest::Approx(c).epsilon(1e-10));
    }
}

TEST_CASE("l2 norm equals quadrature norm") {
    HermiteExpansion f(1);
    f.set(MultiIndex{0}, 0.5);
    f.set(MultiIndex{3}, -1.25);
    f.set(MultiIndex{6}, 0.3);
    const auto rule = gauss_rule(1, 16);
    const double quad = std::sqrt(rule.integrate([&](std::span<const double> x) {
        const double v = expansion_eval(f, x);
        return v * v;
    }));
    CHECK(f.l2_norm() == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("expand_function reproduces polynomials") {
    const auto rule = gauss_rule(1, 12);
    const auto f = expand_function([](std::span<const double> x) { return x[0] * x[0]; }, 4, rule);
    CHECK(f.coefficient(MultiIndex{0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.coefficient(MultiIndex{2}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(f.coefficient(MultiIndex{4})) < 1e-12);
}

TEST_CASE("sampler agrees with pointwise evaluation") {
    HermiteExpansion f(2);
    f.set(MultiIndex{2, 1}, 1.3);
    f.set(MultiIndex{0, 4}, -0.8);
    const auto rule = gauss_rule(2, 9);
    const ExpansionSampler sampler(rule, f);
    const auto values = sampler.sample();
    for (std::size_t i = 0; i < rule.size(); ++i)
        CHECK(values[i] == doctest::Approx(expansion_eval(f, rule.node(i))).epsilon(1e-12));

    // multiplier path
    const auto halved = sampler.sample([](const MultiIndex&) { return 0.5; });
    for (std::size_t i = 0; i < rule.size(); ++i)
        CHECK(halved[i] == doctest::Approx(0.5 * values[i]).epsilon(1e-13));
}

TEST_CASE("uniform rule integrates gamma accurately") {
    const auto rule = QuadratureRule::uniform(1, 10.0, 4001);
    double sum = 0.0;
    for (double w : rule.weights()) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rule.integrate([](std::span<const double> x) { return x[0] * x[0]; }) ==
          doctest::Approx(0.5).epsilon(1e-10));
}

}  // TEST_SUITE
