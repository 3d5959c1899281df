/**
 * @file series.hpp
 * @brief Truncated complex power series f(z) = sum_{k<=N} c_k z^k on the unit disk.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracops/special_fn.hpp"

namespace fracops {

/// Default truncation order for fixture series.
inline constexpr std::size_t kDefaultOrder = 64;

class PowerSeries {
public:
    /// Zero series of order 0.
    PowerSeries() : coeffs_(1, cplx{}) {}

    /// Takes c_0..c_N; throws DomainError on an empty list or non-finite entries.
    explicit PowerSeries(std::vector<cplx> coeffs, bool exact = false);

    /// z^n scaled by c, marked exact (a polynomial, not a truncation).
    static PowerSeries monomial(std::size_t n, cplx c = 1.0);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

    /// c_0 == 0 and c_1 == 1 (class A normalization).
    bool is_normalized() const;

    /// True when the coefficient list is the whole function (a polynomial),
    /// false when it truncates an infinite series.
    bool exact() const { return exact_; }

    PowerSeries operator+(const PowerSeries& other) const;
    PowerSeries operator*(cplx scale) const;
    friend PowerSeries operator*(cplx scale, const PowerSeries& f) { return f * scale; }

private:
    std::vector<cplx> coeffs_;
    bool exact_ = false;
};

/// Horner evaluation; throws DomainError when |z| >= 1.
cplx eval(const PowerSeries& f, cplx z);

/// Horner evaluation without the disk check; for callers that already
/// guarantee |z| < 1 in a hot loop.
cplx eval_unchecked(std::span<const cplx> coeffs, cplx z);

/// Coefficients k c_k shifted down one index; order N-1 (order 0 stays 0).
PowerSeries derivative(const PowerSeries& f);

/// Coefficientwise product up to the shorter operand's order.
PowerSeries hadamard(const PowerSeries& f, const PowerSeries& h);

namespace kind {
struct Identity {};
/// z (1 - z)^{-alpha}, alpha >= 1.
struct KoebePower { double alpha = 2.0; };
/// z e^z.
struct ExpTimesZ {};
/// z 1F1(alpha; lambda; z).
struct Kummer { cplx alpha = 1.0; cplx lambda = 1.0; };
/// z Omega_{alpha,lambda,rho}(z, s, a), the extended Hurwitz-Lerch zeta.
struct HurwitzLerch {
    cplx alpha = 1.0;
    cplx lambda = 1.0;
    cplx rho = 1.0;
    cplx s = 1.0;
    cplx a = 1.0;
};
} // namespace kind

using SeriesKind = std::variant<kind::Identity, kind::KoebePower, kind::ExpTimesZ,
                                kind::Kummer, kind::HurwitzLerch>;

std::string kind_name(const SeriesKind& k);

/// Throws DomainError on parameter violations (alpha < 1 for Koebe; rho or a
/// in {0,-1,-2,...} or Re s <= 0 for Hurwitz-Lerch; lambda at a pole for Kummer).
void validate_kind(const SeriesKind& k);

/// Fixture series of the given kind, truncated at `order`.  All kinds are in
/// class A except Hurwitz-Lerch, whose leading coefficient is a^{-s}.
PowerSeries builtin_series(const SeriesKind& k, std::size_t order = kDefaultOrder);

} // namespace fracops
