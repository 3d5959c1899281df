/**
 * @file special_fn.hpp
 * @brief Complex log-Gamma, Gamma ratios, and Fox-Wright series evaluation.
 *
 * Every operator coefficient in this library is a ratio of Gamma values, so
 * the kernels here work in log space and exponentiate once at the end.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "fracops/error.hpp"

namespace fracops {

using cplx = std::complex<double>;

/// Principal branch of log Gamma: analytic continuation from the positive
/// real axis, with the cut along the negative real axis (same convention as
/// mpmath.loggamma).  Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);

/// True when z lies within `margin` of {0, -1, -2, ...}.
bool near_gamma_pole(cplx z, double margin);

/// Rising factorial (rho)_kappa = Gamma(rho + kappa) / Gamma(rho).
/// Small kappa uses the product directly; large kappa goes through log_gamma.
cplx pochhammer(cplx rho, std::size_t kappa);

/// B(u, v) = Gamma(u) Gamma(v) / Gamma(u + v).
cplx beta_fn(cplx u, cplx v);

struct FoxWrightParam {
    cplx shift;     ///< a_j or b_j
    double weight;  ///< A_j or B_j, strictly positive
};

/// Parameter lists of a pPsi_q series
///   sum_k prod Gamma(a_j + k A_j) / (prod Gamma(b_j + k B_j) k!) z^k.
struct FoxWrightSpec {
    std::vector<FoxWrightParam> upper;
    std::vector<FoxWrightParam> lower;

    /// 1 + sum B_j - sum A_j.
    double delta() const;

    /// Radius of convergence: infinite for delta > 0, prod B^B / prod A^A for
    /// delta == 0, zero for delta < 0.
    double radius() const;

    /// Throws DomainError unless every weight is positive and finite.
    void validate() const;
};

enum class SeriesStatus { Converged, SlowConvergence, Divergent, PoleHit };

std::string_view to_string(SeriesStatus s);

struct EvalOutcome {
    cplx value{};
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    SeriesStatus status = SeriesStatus::SlowConvergence;

    /// Only converged sums are safe to use as a function value.
    bool authoritative() const { return status == SeriesStatus::Converged; }
};

/// Lower Gamma arguments closer than this to a pole are reported as PoleHit.
inline constexpr double kPoleGuard = 1e-9;
inline constexpr std::size_t kDefaultMaxTerms = 10000;

/// log of the k-th Fox-Wright coefficient (without the z^k).
cplx fox_wright_log_coefficient(const FoxWrightSpec& spec, std::size_t kappa);

/// k-th Fox-Wright coefficient.  Throws PoleError.
cplx fox_wright_coefficient(const FoxWrightSpec& spec, std::size_t kappa);

/// Sums the series at z.  The tail estimate comes from consecutive term ratios
/// (see TermMonitor); status never claims convergence on or outside the disk
/// of convergence.
EvalOutcome fox_wright_eval(const FoxWrightSpec& spec, cplx z, double tol,
                            std::size_t max_terms = kDefaultMaxTerms);

/**
 * Watches the magnitudes of successive series terms.
 *
 * Tail: once the last five term ratios are all below one, the remainder after
 * the current term is bounded by |t_k| r / (1 - r) with r the largest of
 * those ratios (pushed up by the recent trend when the ratios are still
 * climbing).
 *
 * Divergence: twenty consecutive non-decreasing magnitudes, counted only from
 * index ten on.
 */
class TermMonitor {
public:
    static constexpr std::size_t kRatioWindow = 5;
    static constexpr std::size_t kGrowthRun = 20;
    static constexpr std::size_t kGrowthStart = 10;

    /// Feed |t_k| for k = 0, 1, 2, ... in order.
    void observe(double magnitude);

    std::size_t count() const { return count_; }
    bool diverging() const { return growth_run_ >= kGrowthRun; }

    /// Bound on the sum of the terms not yet observed, if the ratios allow one.
    std::optional<double> tail() const;

private:
    std::size_t count_ = 0;
    double last_ = 0.0;
    std::size_t growth_run_ = 0;
    std::deque<double> ratios_;
};

} // namespace fracops
