/**
 * @file bloch.hpp
 * @brief Grid estimates of classical and weighted mu-Bloch norms, and the
 *        finite-family checks for how Theta acts on those spaces.
 *
 * Every estimate is a maximum over a DiskGrid, hence a lower bound for the
 * true supremum.  Compare estimates only on matched grids.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracops/grid.hpp"
#include "fracops/operator.hpp"
#include "fracops/series.hpp"

namespace fracops {

struct WeightSpec {
    enum class Kind { constant_one, power, log_weight, table };

    Kind kind = Kind::constant_one;
    /// Exponent for Kind::power: w(t) = t^alpha_w.
    double alpha_w = 0.0;
    /// Knots (t, w(t)) for Kind::table, strictly increasing in t; linear in
    /// between and constant past either end.
    std::vector<std::pair<double, double>> points;
    /// Overall positive multiplier.
    double scale = 1.0;

    /// w(t) for t in (0, 1].  log_weight is w(t) = log(e / t).
    /// Throws DomainError if the value is not positive and finite.
    double operator()(double t) const;

    void validate() const;

    static WeightSpec one() { return {}; }
    static WeightSpec power_weight(double alpha_w);
    static WeightSpec logarithmic();
    static WeightSpec tabulated(std::vector<std::pair<double, double>> knots);
};

std::string to_string(WeightSpec::Kind k);

struct BlochEstimate {
    double norm_estimate = 0.0;
    cplx argmax_point{};
    DiskGrid grid;
    double mu = 1.0;
    /// Max over angle per radius, for tracing.
    std::vector<double> radius_profile;
    /// Set when a tail estimate of the truncated derivative at the largest
    /// radius exceeds 1e-8 of the estimate.  Never set for exact polynomials.
    bool truncation_warning = false;
    double tail_bound = 0.0;
};

/// Grid maximum of (1 - |z|^2) |f'(z)|.
BlochEstimate bloch_norm_classical(const PowerSeries& f, const DiskGrid& grid,
                                   Execution exec = Execution::parallel);

/// Grid maximum of |f'(z)| (1 - |z|)^mu / w(1 - |z|).
BlochEstimate bloch_norm_weighted(const PowerSeries& f, double mu, const WeightSpec& w,
                                  const DiskGrid& grid, Execution exec = Execution::parallel);

/// Max over angle of (1 - r^2) |f'| for each radius.
std::vector<double> little_bloch_decay(const PowerSeries& f, const std::vector<double>& radii,
                                       std::size_t angles = 128);

struct EquivalenceReport {
    BlochEstimate norm_f;
    BlochEstimate norm_theta_f;
    double ratio = 0.0;
};

/// Weighted norms of f and Theta f on the same grid.  f must be in class A.
EquivalenceReport boundedness_equivalence_check(const OperatorParams& p, const PowerSeries& f,
                                                double mu, const WeightSpec& w,
                                                const DiskGrid& grid);

/// Weighted norms of Theta f_n, f_n = z^n / n, for n = 2..n_max.
std::vector<double> compactness_decay_check(const OperatorParams& p, std::size_t n_max, double mu,
                                            const WeightSpec& w, const DiskGrid& grid);

/// Radii 0.005..0.995 step 0.005 plus 0.999, x 256 angles.
DiskGrid bloch_refined_grid();

} // namespace fracops
