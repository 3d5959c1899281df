#include <doctest.h>

#include <cmath>
#include <thread>

#include "fracops/oracle.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/verify.hpp"

using namespace fracops;

TEST_CASE("Gauss-Jacobi rule integrates polynomials against the weight")
{
    const double a = -0.35;
    const double b = -0.6;
    const auto r = gauss_jacobi(20, a, b);
    REQUIRE(r.size() == 20);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.nodes[i] < 1.0);
        CHECK(std::abs(r.nodes[i] + r.complements[i] - 1.0) < 1e-15);
        CHECK(r.weights[i] > 0.0);
        if (i > 0)
            CHECK(r.nodes[i] > r.nodes[i - 1]);
    }
    // int x^m (1-x)^a x^b dx = B(b + m + 1, a + 1), exact for m < 2n.
    for (int m = 0; m < 39; m += 3) {
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i)
            sum += r.weights[i] * std::pow(r.nodes[i], m);
        const double want = beta_fn(b + m + 1.0, a + 1.0).real();
        CHECK(std::abs(sum - want) / want < 1e-13);
    }
}

TEST_CASE("Gauss-Jacobi rule with Legendre weight")
{
    const auto r = gauss_jacobi(3, 0.0, 0.0);
    CHECK(r.nodes[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.weights[1] == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), DomainError);
}

TEST_CASE("rule cache is shared and safe under concurrent readers")
{
    const auto first = cached_gauss_jacobi(48, -0.2, -0.1);
    std::vector<std::shared_ptr<const GaussJacobiRule>> seen(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t)
        threads.emplace_back([&, t] { seen[t] = cached_gauss_jacobi(48, -0.2, -0.1); });
    for (auto& th : threads)
        th.join();
    for (const auto& s : seen)
        CHECK(s.get() == first.get());
}

TEST_CASE("branch_kernel")
{
    const OperatorParams p{0.9, 0.4, 0.0};
    CHECK(std::abs(branch_kernel(0.3, 0.0, p) - 1.0) < 1e-15);
    CHECK(std::abs(branch_kernel(0.3, 0.5, p) - std::sqrt(2.0)) < 1e-15);
    CHECK(branch_kernel(0.3, 0.7, {0.5, 0.5, 1.0}) == cplx(1.0));
    CHECK_THROWS_AS(branch_kernel(0.3, 1.0, p), DomainError);
}

TEST_CASE("inner integral of a constant is a Beta value")
{
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        const OperatorParams p = draw_params(rng);
        const double want = beta_fn((p.beta - 1.0) / (p.gamma + 1.0) + 1.0, 1.0 - p.beta + p.tau).real();
        const cplx got = inner_integral(p, PowerSeries::monomial(0), draw_point(rng), 64);
        CHECK(std::abs(got - want) / want < 1e-12);
    }
}

TEST_CASE("oracle matches the monomial formula")
{
    const OperatorParams p{0.8, 0.5, 1.0};
    for (std::size_t v = 0; v <= 6; ++v) {
        const cplx z{0.3, -0.4};
        const auto cfg = QuadratureConfig::for_params(p);
        const auto img = monomial_transform(p, static_cast<double>(v));
        const cplx want = img.coefficient * std::exp(img.exponent * std::log(z));
        CHECK(std::abs(oracle_eval(p, PowerSeries::monomial(v), z, cfg) - want) <= 1e-10 * std::abs(want));
    }
}

TEST_CASE("oracle at tau = beta, f = z")
{
    const OperatorParams p{0.55, 0.55, 0.0};
    const cplx z{-0.2, 0.6};
    CHECK(std::abs(oracle_eval(p, PowerSeries::monomial(1), z, QuadratureConfig::for_params(p)) - z) < 1e-10);
}

TEST_CASE("oracle on Koebe alpha = 1 matches the Fox-Wright closed form")
{
    const OperatorParams p{0.8, 0.5, 1.0};
    const auto f = builtin_series(kind::KoebePower{1.0}, 200);
    const auto cf = closed_form_spec(kind::KoebePower{1.0}, p);
    const cplx z = 0.2;
    const cplx got = oracle_eval(p, f, z, QuadratureConfig::for_params(p));
    CHECK(std::abs(got - cf.eval(z)) <= 1e-8 * std::abs(cf.eval(z)));
}

TEST_CASE("derivative schemes agree and the oracle is linear")
{
    const OperatorParams p{0.93, 0.41, 0.6};
    const auto f = builtin_series(kind::ExpTimesZ{});
    const auto g = builtin_series(kind::KoebePower{2.0});
    const cplx z{0.25, 0.3};
    const auto a = QuadratureConfig::for_params(p);
    const auto c = QuadratureConfig::for_params(p, DerivativeScheme::complex_step);
    const cplx fa = oracle_eval(p, f, z, a);
    CHECK(std::abs(fa - oracle_eval(p, f, z, c)) <= 1e-8 * std::abs(fa));

    const cplx s{1.5, -0.5};
    const cplx lhs = oracle_eval(p, f + s * g, z, a);
    const cplx rhs = fa + s * oracle_eval(p, g, z, a);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
}

TEST_CASE("oracle domain and configuration errors")
{
    const OperatorParams p{0.8, 0.5, 1.0};
    const auto f = PowerSeries::monomial(1);
    auto cfg = QuadratureConfig::for_params(p);
    CHECK_THROWS_AS(oracle_eval(p, f, 0.0, cfg), DomainError);
    CHECK_THROWS_AS(oracle_eval(p, f, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(oracle_eval({0.5, 0.5, 0.0}, f, 0.3, cfg), DomainError);
    cfg.node_count = 4;
    CHECK_THROWS_AS(oracle_eval(p, f, 0.3, cfg), DomainError);
}

TEST_CASE("oracle small-z asymptotics")
{
    const OperatorParams p{0.8, 0.5, 1.0};
    const cplx z{1e-8, 0.0};
    const auto img = monomial_transform(p, 1.0);
    const cplx got = oracle_eval(p, builtin_series(kind::KoebePower{2.0}), z, QuadratureConfig::for_params(p));
    CHECK(std::abs(got - img.coefficient * std::pow(1e-8, img.exponent)) <= 1e-12 * std::abs(got));
}

TEST_CASE("node doubling is stable on the fixture family")
{
    Rng rng(5);
    for (const auto& named : fixture_family()) {
        CAPTURE(named.name);
        const OperatorParams p = draw_params(rng);
        const auto r = oracle_eval_detailed(p, named.series, draw_point(rng, 0.05, 0.6),
                                            QuadratureConfig::for_params(p, DerivativeScheme::analytic_under_integral, 32));
        CHECK(r.doubling_change <= 1e-9);
        CHECK(r.node_count == 64);
    }
}
