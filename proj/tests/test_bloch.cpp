#include <doctest.h>

#include <cmath>

#include "fracops/bloch.hpp"

using namespace fracops;

TEST_CASE("weights")
{
    CHECK(WeightSpec::one()(0.3) == 1.0);
    CHECK(WeightSpec::power_weight(0.5)(0.25) == doctest::Approx(0.5));
    CHECK(WeightSpec::logarithmic()(1.0) == doctest::Approx(1.0));
    CHECK(WeightSpec::logarithmic()(std::exp(-2.0)) == doctest::Approx(3.0));
    const auto t = WeightSpec::tabulated({{0.1, 1.0}, {0.5, 3.0}});
    CHECK(t(0.3) == doctest::Approx(2.0));
    CHECK(t(0.01) == 1.0);
    CHECK(t(0.9) == 3.0);
    CHECK_THROWS_AS(WeightSpec::tabulated({{0.1, 1.0}, {0.5, -3.0}}), DomainError);
    CHECK_THROWS_AS(WeightSpec::one()(0.0), DomainError);
}

TEST_CASE("classical norm of z and z^2")
{
    const auto g = DiskGrid::bloch_default();
    const auto id = bloch_norm_classical(PowerSeries::monomial(1), g);
    CHECK(id.norm_estimate == doctest::Approx(1.0 - 0.05 * 0.05));
    CHECK(std::abs(id.argmax_point) == doctest::Approx(0.05));

    const auto sq = bloch_norm_classical(PowerSeries::monomial(2), bloch_refined_grid());
    CHECK(std::abs(sq.norm_estimate - 4.0 / (3.0 * std::sqrt(3.0))) < 1e-4);
}

TEST_CASE("weighted norm of z and z^2")
{
    const auto g = DiskGrid::bloch_default();
    const auto id = bloch_norm_weighted(PowerSeries::monomial(1), 1.0, WeightSpec::one(), g);
    CHECK(id.norm_estimate == doctest::Approx(0.95));
    CHECK(std::abs(id.argmax_point - cplx(0.05, 0.0)) < 1e-15);

    const auto sq = bloch_norm_weighted(PowerSeries::monomial(2), 1.0, WeightSpec::one(), g);
    CHECK(sq.norm_estimate == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(sq.argmax_point) == doctest::Approx(0.5));

    CHECK_THROWS_AS(bloch_norm_weighted(PowerSeries::monomial(1), 0.0, WeightSpec::one(), g), DomainError);
}

TEST_CASE("weight scaling divides the estimate")
{
    const auto g = DiskGrid::bloch_default();
    const auto f = builtin_series(kind::ExpTimesZ{});
    auto w = WeightSpec::logarithmic();
    const auto base = bloch_norm_weighted(f, 0.8, w, g);
    w.scale = 4.0;
    const auto scaled = bloch_norm_weighted(f, 0.8, w, g);
    CHECK(scaled.norm_estimate == doctest::Approx(base.norm_estimate / 4.0).epsilon(1e-15));
    CHECK(scaled.argmax_point == base.argmax_point);
}

TEST_CASE("little Bloch decay")
{
    const std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
    const auto v = little_bloch_decay(PowerSeries::monomial(1), radii);
    for (std::size_t i = 0; i < radii.size(); ++i)
        CHECK(v[i] == doctest::Approx(1.0 - radii[i] * radii[i]));

    const auto poly = little_bloch_decay(PowerSeries({0.0, 1.0, 0.5, -0.25}), radii);
    CHECK(poly.back() < poly.front());

    // Truncated Koebe vs the closed-form derivative (1+z)/(1-z)^3 at r = 0.9.
    const auto k = little_bloch_decay(builtin_series(kind::KoebePower{2.0}), {0.9});
    const double exact = (1.0 - 0.81) * 1.9 / std::pow(0.1, 3);
    CHECK(k[0] < exact);
    CHECK(k[0] > 0.5 * exact);
}

TEST_CASE("truncation warning")
{
    const auto g = DiskGrid::bloch_default();
    CHECK(bloch_norm_classical(builtin_series(kind::KoebePower{2.0}), g).truncation_warning);
    CHECK_FALSE(bloch_norm_classical(PowerSeries::monomial(5), g).truncation_warning);
    CHECK_FALSE(bloch_norm_classical(builtin_series(kind::ExpTimesZ{}), g).truncation_warning);
}

TEST_CASE("boundedness equivalence")
{
    const auto g = DiskGrid::bloch_default();
    const auto f = builtin_series(kind::KoebePower{1.0});
    const auto same = boundedness_equivalence_check({0.7, 0.7, 1.0}, f, 1.0, WeightSpec::one(), g);
    CHECK(same.ratio == 1.0);

    const auto id = boundedness_equivalence_check({0.9, 0.2, 2.0}, builtin_series(kind::Identity{}), 1.0,
                                                  WeightSpec::one(), g);
    CHECK(id.ratio == 1.0);

    const auto r = boundedness_equivalence_check({0.9, 0.2, 2.0}, f, 1.0, WeightSpec::one(), g);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
}

TEST_CASE("compactness decay family")
{
    const auto g = DiskGrid::bloch_default();
    const auto d = compactness_decay_check({0.5, 0.5, 0.0}, 64, 1.0, WeightSpec::one(), g);
    REQUIRE(d.size() == 63);
    CHECK(d.front() == doctest::Approx(0.25));
    for (std::size_t i = 1; i < d.size(); ++i)
        CHECK(d[i] < d[i - 1]);
    // sup r^{n-1} (1-r) is about 1/(e n): the family decays like 1/n, not faster.
    CHECK(d.back() == doctest::Approx(std::pow(63.0 / 64.0, 63) / 64.0).epsilon(1e-3));
}
