/**
 * @file geometry.hpp
 * @brief Sampled starlike/convex screens, Bieberbach coefficient screens and
 *        the coefficient-sum univalence criteria for Theta.
 *
 * Grid screens are necessary-condition checks: a pass means "no violation
 * found on the grid", never a proof of starlikeness or convexity.
 */
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fracops/grid.hpp"
#include "fracops/operator.hpp"
#include "fracops/series.hpp"

namespace fracops {

struct ScreenResult {
    bool passed = true;
    /// Violating grid point: the worst value on the smallest violating
    /// radius (ties to the smaller angle).
    std::optional<cplx> witness;
    double witness_value = 0.0;
    /// Smallest value of the screened quantity over the grid.
    double min_value = 0.0;
};

/// Re(z f'(z) / f(z)) > lambda on every grid point.  Throws DomainError if f
/// vanishes at a grid point.
ScreenResult starlike_order(const PowerSeries& f, double lambda, const DiskGrid& grid,
                            Execution exec = Execution::parallel);

/// Re(1 + z f''(z) / f'(z)) > lambda on every grid point.  Throws DomainError
/// if f' vanishes at a grid point.
ScreenResult convex_order(const PowerSeries& f, double lambda, const DiskGrid& grid,
                          Execution exec = Execution::parallel);

enum class BieberbachMode { starlike_bound, convex_bound };

struct CoefficientScreen {
    bool passed = true;
    std::optional<std::size_t> first_violation;
    /// Indices k >= 2 where the bound holds with equality.
    std::vector<std::size_t> equality_indices;
};

/// |a_k| <= k (starlike_bound) or |a_k| <= 1 (convex_bound) for 2 <= k <= N.
CoefficientScreen bieberbach_screen(const PowerSeries& f, BieberbachMode mode);

/// Truncation order that keeps sum_{k>N} k^2 r^k below tol, for screening
/// Koebe-type fixtures on grids reaching radius r.
std::size_t order_for_radius(double r, double tol = 1e-12);

enum class CriterionMode { theorem5_S, theorem6_K };

enum class Verdict { Satisfied, Violated, InconclusiveDivergent };

std::string_view to_string(Verdict v);
std::string_view to_string(CriterionMode m);

struct CriterionReport {
    CriterionMode mode = CriterionMode::theorem5_S;
    OperatorParams params;
    std::vector<double> terms;
    std::vector<double> partial_sums;
    double rhs_threshold = 0.0;
    double tail_estimate = 0.0;
    SeriesStatus series_status = SeriesStatus::SlowConvergence;
    Verdict verdict = Verdict::InconclusiveDivergent;
};

/**
 * Coefficient-sum sufficient conditions for Theta f in S.
 *
 * theorem5_S (f in S, |a_k| <= k):
 *   2Psi1[(3,1),(1+(b+1)/(g+1), 1/(g+1)); (1-b+t+(b+1)/(g+1), 1/(g+1)); 1]
 * + 2Psi1[(2,1),(1+b/(g+1), 1/(g+1));     (1-b+t+b/(g+1), 1/(g+1));     1]
 *   < 2 Gamma(b/(g+1)+1) / Gamma(b/(g+1)+1-b+t)
 *
 * theorem6_K (f in K, |a_k| <= 1): the second series alone against the same
 * threshold.
 *
 * Both series are summed term by term at z = 1 and watched by TermMonitor, so
 * polynomial term growth is reported as Divergent instead of being summed.
 */
CriterionReport univalence_criterion(const OperatorParams& p, CriterionMode mode,
                                     std::size_t max_terms = 2000, double tol = 1e-12);

} // namespace fracops
