/**
 * @file oracle.hpp
 * @brief Direct quadrature evaluation of T^{beta,tau,gamma} f from its
 *        integral definition, independent of the closed forms.
 *
 * With zeta = z w^{1/(gamma+1)} the integral becomes
 *
 *   G(z) = z^s / (gamma+1) * int_0^1 w^{b'} (1-w)^{a'} f(z w^{1/(gamma+1)}) dw,
 *   s = gamma + beta + (gamma+1)(tau - beta),  a' = tau - beta,  b' = (beta-1)/(gamma+1),
 *
 * and T f(z) = K z^{1-tau} G'(z) with K = (gamma+1)^{beta-tau} Gamma(tau) /
 * (Gamma(beta) Gamma(1-beta+tau)).  The path is the ray from 0 to z, which fixes
 * the branch of every fractional power to the principal one.
 */
#pragma once

#include <cstddef>

#include "fracops/operator.hpp"
#include "fracops/series.hpp"

namespace fracops {

enum class DerivativeScheme {
    /// Product rule on z^s, then f' under the integral.
    analytic_under_integral,
    /// G evaluated at z + j h with a second imaginary unit j (bicomplex
    /// arithmetic) and h = 1e-20 |z|; G' is the j-part over h.
    complex_step,
};

struct QuadratureConfig {
    std::size_t node_count = 64;
    double alpha_prime = 0.0;  ///< tau - beta, exponent at w = 1
    double beta_prime = 0.0;   ///< (beta - 1)/(gamma + 1), exponent at w = 0
    DerivativeScheme derivative_scheme = DerivativeScheme::analytic_under_integral;
    /// Largest accepted change between node_count and 2 node_count.
    double tolerance = 1e-9;

    /// Config whose kernel exponents match p.
    static QuadratureConfig for_params(const OperatorParams& p,
                                       DerivativeScheme scheme = DerivativeScheme::analytic_under_integral,
                                       std::size_t nodes = 64);

    /// alpha', beta' in (-1, 0], node_count >= 8, tolerance > 0.
    void validate() const;
};

/// (1 - w)^{tau - beta}, real and positive along the substitution ray.
cplx branch_kernel(cplx z, double zeta_on_z, const OperatorParams& p);

/// int_0^1 w^{b'} (1-w)^{a'} f(z w^{1/(gamma+1)}) dw at a fixed node count.
cplx inner_integral(const OperatorParams& p, const PowerSeries& f, cplx z, std::size_t nodes);

struct OracleResult {
    cplx value{};
    std::size_t node_count = 0;   ///< nodes used for `value` (the doubled count)
    double doubling_change = 0.0; ///< |value(2n) - value(n)| / max(1, |value(2n)|)
};

/// T f(z) by quadrature.  Throws DomainError for z = 0, |z| >= 1, invalid
/// parameters or a config that does not match p; ConvergenceError when
/// doubling the node count moves the result by more than cfg.tolerance.
OracleResult oracle_eval_detailed(const OperatorParams& p, const PowerSeries& f, cplx z,
                                  const QuadratureConfig& cfg);

cplx oracle_eval(const OperatorParams& p, const PowerSeries& f, cplx z, const QuadratureConfig& cfg);

/// Below this |z| the oracle returns the leading-term asymptotics instead of
/// integrating.
inline constexpr double kOracleSmallZ = 1e-6;

} // namespace fracops
