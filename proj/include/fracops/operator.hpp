/**
 * @file operator.hpp
 * @brief Generalized Tremblay-type fractional operator T^{beta,tau,gamma} and
 *        its class-A normalization Theta^{beta,tau,gamma}.
 *
 * On a monomial the operator acts as
 *
 *   T{z^v} = (gamma+1)^{beta-tau} Gamma(x) Gamma(tau) / (Gamma(x-beta+tau) Gamma(beta))
 *            * z^{(1-beta+tau) gamma + v},      x = (v + beta - 1)/(gamma + 1) + 1,
 *
 * so every image shares the prefactor z^{(1-beta+tau) gamma}.  The kernel
 * constant uses Gamma(1 - beta + tau); that is the sign under which the
 * tau == beta case is the identity.
 */
#pragma once

#include <functional>
#include <string>
#include <variant>

#include "fracops/series.hpp"
#include "fracops/special_fn.hpp"

namespace fracops {

struct OperatorParams {
    double beta = 1.0;
    double tau = 1.0;
    double gamma = 0.0;

    /// Throws DomainError naming the first violated inequality of
    /// 0 < beta <= 1, 0 < tau <= 1, 0 <= beta - tau < 1, gamma >= 0.
    void validate() const;
    bool valid() const;

    /// (1 - beta + tau) gamma: the power carried by every monomial image.
    double prefactor_power() const { return (1.0 - beta + tau) * gamma; }
};

struct MonomialImage {
    double coefficient = 0.0;
    double exponent = 0.0;
};

/// Image of z^upsilon (upsilon >= 0, not necessarily an integer).
MonomialImage monomial_transform(const OperatorParams& p, double upsilon);

/// z^power * series(z), with power taken on the principal branch.
struct OperatorImage {
    double prefactor_power = 0.0;
    PowerSeries series;

    cplx eval(cplx z) const;
};

/// Termwise image of a truncated series.
OperatorImage apply_operator(const OperatorParams& p, const PowerSeries& f);

/// Phi(k) = Gamma(b/(g+1) + 1 - b + t) Gamma((k+b-1)/(g+1) + 1)
///        / (Gamma(b/(g+1) + 1) Gamma((k+b-1)/(g+1) + 1 - b + t)),  k >= 1.
double phi_coefficient(const OperatorParams& p, std::size_t kappa);

/// Theta f = z + sum_{k>=2} Phi(k) a_k z^k.  Requires f in class A.
PowerSeries theta_normalize(const OperatorParams& p, const PowerSeries& f);

/// Constant that turns T f into Theta f once z^{prefactor_power} is stripped:
/// Gamma(b/(g+1)+1-b+t) Gamma(b) / ((g+1)^{b-t} Gamma(b/(g+1)+1) Gamma(t)).
double theta_scale(const OperatorParams& p);

/// Theta f = constant * (z 2Psi1[z]) * f  (Hadamard product).
struct ScaledFoxWright {
    FoxWrightSpec spec;
    double constant = 1.0;
};

ScaledFoxWright theta_fox_wright_spec(const OperatorParams& p);

/// Coefficients of constant * z * 2Psi1[z] up to z^order, i.e. the Hadamard
/// multiplier sequence of Theta.
PowerSeries theta_kernel_series(const OperatorParams& p, std::size_t order);

/// Coefficient generator k -> g_k for closed forms that are not a single
/// Fox-Wright series.
using CoefficientGenerator = std::function<cplx(std::size_t)>;

/**
 * T f(z) = prefactor * z^power * S(z), where S is either a Fox-Wright series or
 * an explicit coefficient sequence (Beta-function form).
 */
struct ClosedForm {
    SeriesKind kind;
    OperatorParams params;
    cplx prefactor = 1.0;
    double power = 0.0;
    std::variant<FoxWrightSpec, CoefficientGenerator> series;

    /// Sums S(z) with the divergence-aware monitor; throws ConvergenceError
    /// unless the sum converges to `tol`.
    cplx eval(cplx z, double tol = 1e-15) const;
};

ClosedForm closed_form_spec(const SeriesKind& kind, const OperatorParams& p);

} // namespace fracops
