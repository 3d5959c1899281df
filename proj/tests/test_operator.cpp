#include <doctest.h>

#include <cmath>

#include "fracops/operator.hpp"

using namespace fracops;

namespace {

double gamma_ratio(double a, double b) { return std::exp(std::lgamma(a) - std::lgamma(b)); }

} // namespace

TEST_CASE("parameter window")
{
    CHECK_NOTHROW((OperatorParams{1.0, 0.5, 0.0}.validate()));
    CHECK_NOTHROW((OperatorParams{0.5, 0.5, 3.0}.validate()));
    CHECK_THROWS_AS((OperatorParams{0.2, 0.9, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((OperatorParams{0.0, 0.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((OperatorParams{1.2, 0.5, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((OperatorParams{1.0, 0.5, -0.1}.validate()), DomainError);
    try {
        OperatorParams{0.2, 0.9, 0.0}.validate();
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("beta - tau >= 0") != std::string::npos);
    }
}

TEST_CASE("monomial_transform")
{
    const auto m = monomial_transform({1.0, 0.5, 0.0}, 1.0);
    CHECK(m.coefficient == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m.exponent == 1.0);

    const auto id = monomial_transform({0.4, 0.4, 2.5}, 3.0);
    CHECK(id.coefficient == 1.0);
    CHECK(id.exponent == doctest::Approx(5.5));

    // gamma = 0: Gamma(v+b) Gamma(t) / (Gamma(v+t) Gamma(b)).
    const OperatorParams p{0.8, 0.3, 0.0};
    for (double v : {0.0, 1.0, 2.5, 7.0}) {
        const double want = gamma_ratio(v + p.beta, v + p.tau) * gamma_ratio(p.tau, p.beta);
        CHECK(monomial_transform(p, v).coefficient == doctest::Approx(want).epsilon(1e-13));
    }

    CHECK_THROWS_AS(monomial_transform({0.2, 0.9, 0.0}, 1.0), DomainError);
}

TEST_CASE("apply_operator")
{
    const OperatorParams p{0.7, 0.45, 0.0};
    const auto img = apply_operator(p, PowerSeries({0.0, 1.0, 1.0}));
    CHECK(img.prefactor_power == 0.0);
    CHECK(img.series[1].real() == doctest::Approx(gamma_ratio(1.7, 1.45) * gamma_ratio(0.45, 0.7)));
    CHECK(img.series[2].real() == doctest::Approx(gamma_ratio(2.7, 2.45) * gamma_ratio(0.45, 0.7)));

    const auto two_z = apply_operator({1.0, 0.5, 0.0}, PowerSeries::monomial(1));
    CHECK(std::abs(two_z.eval(0.3) - 0.6) < 1e-14);

    // Prefactor z^{(1-b+t) g} carries the gamma shift.
    const OperatorParams q{0.9, 0.6, 1.5};
    CHECK(apply_operator(q, PowerSeries::monomial(2)).prefactor_power == doctest::Approx(0.7 * 1.5));
}

TEST_CASE("phi_coefficient")
{
    const OperatorParams p{0.9, 0.35, 1.2};
    CHECK(phi_coefficient(p, 1) == 1.0);
    CHECK(phi_coefficient({0.6, 0.6, 2.0}, 17) == 1.0);
    for (std::size_t k = 1; k < 60; ++k)
        CHECK(phi_coefficient(p, k) > 0.0);

    // gamma = 0: Gamma(1+t) Gamma(k+b) / (Gamma(1+b) Gamma(k+t)).
    const OperatorParams g0{0.75, 0.3, 0.0};
    for (std::size_t k = 1; k < 20; ++k) {
        const double kd = static_cast<double>(k);
        const double want = gamma_ratio(1.3, 1.75) * gamma_ratio(kd + 0.75, kd + 0.3);
        CHECK(phi_coefficient(g0, k) == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK_THROWS_AS(phi_coefficient(p, 0), DomainError);
}

TEST_CASE("theta_normalize")
{
    const OperatorParams p{0.8, 0.2, 0.0};
    const auto id = builtin_series(kind::Identity{});
    const auto tid = theta_normalize(p, id);
    CHECK(tid.is_normalized());
    for (std::size_t k = 2; k <= tid.order(); ++k)
        CHECK(tid[k] == cplx(0.0));

    const auto koebe = builtin_series(kind::KoebePower{2.0});
    const auto tk = theta_normalize(p, koebe);
    CHECK(tk.is_normalized());
    for (std::size_t k = 2; k < 30; ++k) {
        const double kd = static_cast<double>(k);
        const double want = kd * gamma_ratio(1.2, 1.8) * gamma_ratio(kd + 0.8, kd + 0.2);
        CHECK(tk[k].real() == doctest::Approx(want).epsilon(1e-12));
    }

    CHECK_THROWS_AS(theta_normalize(p, PowerSeries({1.0, 1.0})), DomainError);

    // Stripped operator image rescaled by theta_scale.
    const auto img = apply_operator(p, koebe);
    for (std::size_t k = 1; k < 20; ++k)
        CHECK(std::abs(img.series[k] * theta_scale(p) - tk[k]) <= 1e-12 * std::abs(tk[k]));
}

TEST_CASE("theta Fox-Wright kernel")
{
    SUBCASE("gamma = 0 leading coefficient times constant is 1")
    {
        const auto s = theta_fox_wright_spec({0.6, 0.25, 0.0});
        CHECK(std::abs(s.constant * fox_wright_coefficient(s.spec, 0) - 1.0) < 1e-14);
    }
    SUBCASE("tau = beta gives the all-ones multiplier")
    {
        const auto k = theta_kernel_series({0.5, 0.5, 2.0}, 30);
        CHECK(k[0] == cplx(0.0));
        for (std::size_t i = 1; i <= 30; ++i)
            CHECK(std::abs(k[i] - 1.0) < 1e-13);
    }
    SUBCASE("multiplier sequence is Phi")
    {
        const OperatorParams p{0.95, 0.4, 0.7};
        const auto k = theta_kernel_series(p, 64);
        for (std::size_t i = 1; i <= 64; ++i)
            CHECK(std::abs(k[i] - phi_coefficient(p, i)) <= 1e-12 * phi_coefficient(p, i));
    }
}

TEST_CASE("closed forms match termwise application")
{
    const OperatorParams p{0.8, 0.5, 1.0};
    const SeriesKind kinds[] = {kind::Identity{}, kind::KoebePower{1.0}, kind::KoebePower{2.0},
                                kind::KoebePower{2.5}, kind::ExpTimesZ{}, kind::Kummer{0.7, 1.9},
                                kind::HurwitzLerch{1.5, 0.8, 2.5, 1.3, 0.7}};
    for (const auto& k : kinds) {
        CAPTURE(kind_name(k));
        const auto cf = closed_form_spec(k, p);
        const auto img = apply_operator(p, builtin_series(k, 160));
        CHECK(cf.power == doctest::Approx(p.prefactor_power() + 1.0));
        for (cplx z : {cplx(0.1), cplx(0.0, 0.25), cplx(-0.3), cplx(0.35, -0.35)})
            CHECK(std::abs(cf.eval(z) - img.eval(z)) <= 1e-12 * std::abs(img.eval(z)));
    }
    CHECK(closed_form_spec(kind::ExpTimesZ{}, p).eval(0.0) == cplx(0.0));
}

TEST_CASE("Kummer with alpha = lambda reduces to z e^z")
{
    const OperatorParams p{0.66, 0.21, 0.4};
    const auto kum = closed_form_spec(kind::Kummer{1.3, 1.3}, p);
    const auto ez = closed_form_spec(kind::ExpTimesZ{}, p);
    for (cplx z : {cplx(0.2), cplx(-0.45, 0.1)})
        CHECK(std::abs(kum.eval(z) - ez.eval(z)) <= 1e-12 * std::abs(ez.eval(z)));
}
