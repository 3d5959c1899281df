#include "fracops/series.hpp"

#include <algorithm>
#include <cmath>

namespace fracops {

namespace {

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

PowerSeries::PowerSeries(std::vector<cplx> coeffs, bool exact)
    : coeffs_(std::move(coeffs)), exact_(exact)
{
    if (coeffs_.empty())
        throw DomainError("PowerSeries: coefficient list is empty");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!finite(coeffs_[k]))
            throw DomainError("PowerSeries: coefficient " + std::to_string(k) + " is not finite");
}

PowerSeries PowerSeries::monomial(std::size_t n, cplx c)
{
    std::vector<cplx> v(n + 1, cplx{});
    v[n] = c;
    return PowerSeries(std::move(v), true);
}

bool PowerSeries::is_normalized() const
{
    return coeffs_.size() >= 2 && coeffs_[0] == cplx(0.0, 0.0) && coeffs_[1] == cplx(1.0, 0.0);
}

PowerSeries PowerSeries::operator+(const PowerSeries& other) const
{
    std::vector<cplx> out(std::max(coeffs_.size(), other.coeffs_.size()), cplx{});
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = (*this)[k] + other[k];
    return PowerSeries(std::move(out), exact_ && other.exact_);
}

PowerSeries PowerSeries::operator*(cplx scale) const
{
    std::vector<cplx> out(coeffs_);
    for (auto& c : out)
        c *= scale;
    return PowerSeries(std::move(out), exact_);
}

cplx eval_unchecked(std::span<const cplx> coeffs, cplx z)
{
    cplx acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * z + coeffs[k];
    return acc;
}

cplx eval(const PowerSeries& f, cplx z)
{
    if (!(std::abs(z) < 1.0))
        throw DomainError("eval: |z| must be < 1 (got " + std::to_string(std::abs(z)) + ")");
    return eval_unchecked(f.coeffs(), z);
}

PowerSeries derivative(const PowerSeries& f)
{
    const auto c = f.coeffs();
    if (c.size() < 2)
        return PowerSeries(std::vector<cplx>{cplx{}}, true);
    std::vector<cplx> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c[k];
    return PowerSeries(std::move(d), f.exact());
}

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& h)
{
    const std::size_t n = std::min(f.coeffs().size(), h.coeffs().size());
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = f[k] * h[k];
    return PowerSeries(std::move(out), f.exact() && h.exact());
}

std::string kind_name(const SeriesKind& k)
{
    return std::visit(overloaded{
                          [](const kind::Identity&) { return std::string("identity"); },
                          [](const kind::KoebePower&) { return std::string("koebe"); },
                          [](const kind::ExpTimesZ&) { return std::string("exp_times_z"); },
                          [](const kind::Kummer&) { return std::string("kummer"); },
                          [](const kind::HurwitzLerch&) { return std::string("hurwitz_lerch"); },
                      },
                      k);
}

void validate_kind(const SeriesKind& k)
{
    std::visit(overloaded{
                   [](const kind::Identity&) {},
                   [](const kind::ExpTimesZ&) {},
                   [](const kind::KoebePower& p) {
                       if (!(p.alpha >= 1.0) || !std::isfinite(p.alpha))
                           throw DomainError("koebe: alpha >= 1 required");
                   },
                   [](const kind::Kummer& p) {
                       if (near_gamma_pole(p.lambda, 0.0))
                           throw DomainError("kummer: lambda must not be in {0,-1,-2,...}");
                   },
                   [](const kind::HurwitzLerch& p) {
                       if (near_gamma_pole(p.rho, 0.0))
                           throw DomainError("hurwitz_lerch: rho must not be in {0,-1,-2,...}");
                       if (near_gamma_pole(p.a, 0.0))
                           throw DomainError("hurwitz_lerch: a must not be in {0,-1,-2,...}");
                       if (!(p.s.real() > 0.0))
                           throw DomainError("hurwitz_lerch: Re(s) > 0 required");
                   },
               },
               k);
}

PowerSeries builtin_series(const SeriesKind& k, std::size_t order)
{
    validate_kind(k);
    if (order < 1)
        throw DomainError("builtin_series: order >= 1 required for a normalized series");

    std::vector<cplx> c(order + 1, cplx{});
    c[1] = 1.0;
    bool exact = false;
    // Each kind is z g(z), so c_{m+1} = g_m and the g_m follow a first-order
    // recurrence in m.  Only Hurwitz-Lerch has g_0 != 1 (it is a^{-s}).
    std::visit(overloaded{
                   [&](const kind::Identity&) { exact = true; },
                   [&](const kind::KoebePower& p) {
                       for (std::size_t m = 1; m < order; ++m) {
                           const double md = static_cast<double>(m);
                           c[m + 1] = (c[m] * (p.alpha + md - 1.0)) / md;
                       }
                   },
                   [&](const kind::ExpTimesZ&) {
                       for (std::size_t m = 1; m < order; ++m)
                           c[m + 1] = c[m] / static_cast<double>(m);
                   },
                   [&](const kind::Kummer& p) {
                       for (std::size_t m = 1; m < order; ++m) {
                           const double j = static_cast<double>(m - 1);
                           c[m + 1] = c[m] * (p.alpha + j) / ((p.lambda + j) * static_cast<double>(m));
                       }
                   },
                   [&](const kind::HurwitzLerch& p) {
                       cplx poch = 1.0;  // (alpha)_j (lambda)_j / ((rho)_j j!)
                       for (std::size_t m = 1; m <= order; ++m) {
                           const double j = static_cast<double>(m - 1);
                           if (m > 1) {
                               const double jp = j - 1.0;
                               poch *= (p.alpha + jp) * (p.lambda + jp) / ((p.rho + jp) * j);
                           }
                           c[m] = poch * std::exp(-p.s * std::log(j + p.a));
                       }
                   },
               },
               k);
    return PowerSeries(std::move(c), exact);
}

} // namespace fracops
