#include "fracops/operator.hpp"

#include <cmath>
#include <sstream>

namespace fracops {

namespace {

double lg(double x) { return log_gamma(cplx(x, 0.0)).real(); }

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// log of (gamma+1)^{beta-tau} Gamma(tau) / Gamma(beta)
double log_kernel_constant(const OperatorParams& p)
{
    return (p.beta - p.tau) * std::log1p(p.gamma) + lg(p.tau) - lg(p.beta);
}

// log of Gamma(x) / Gamma(x - beta + tau)
double log_shift_ratio(const OperatorParams& p, double x)
{
    if (p.beta == p.tau)
        return 0.0;
    return lg(x) - lg(x - p.beta + p.tau);
}

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

void OperatorParams::validate() const
{
    if (!std::isfinite(beta) || !std::isfinite(tau) || !std::isfinite(gamma))
        throw DomainError("operator parameters must be finite");
    if (!(beta > 0.0 && beta <= 1.0))
        throw DomainError("parameter window violated: 0 < beta <= 1 (beta = " + fmt(beta) + ")");
    if (!(tau > 0.0 && tau <= 1.0))
        throw DomainError("parameter window violated: 0 < tau <= 1 (tau = " + fmt(tau) + ")");
    if (!(beta - tau >= 0.0))
        throw DomainError("parameter window violated: beta - tau >= 0 (beta - tau = " +
                          fmt(beta - tau) + ")");
    if (!(beta - tau < 1.0))
        throw DomainError("parameter window violated: beta - tau < 1 (beta - tau = " +
                          fmt(beta - tau) + ")");
    if (!(gamma >= 0.0))
        throw DomainError("parameter window violated: gamma >= 0 (gamma = " + fmt(gamma) + ")");
}

bool OperatorParams::valid() const
{
    try {
        validate();
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

MonomialImage monomial_transform(const OperatorParams& p, double upsilon)
{
    p.validate();
    if (!(upsilon >= 0.0) || !std::isfinite(upsilon))
        throw DomainError("monomial_transform: upsilon >= 0 required");
    const double x = (upsilon + p.beta - 1.0) / (p.gamma + 1.0) + 1.0;
    MonomialImage img;
    img.coefficient = std::exp(log_kernel_constant(p) + log_shift_ratio(p, x));
    img.exponent = p.prefactor_power() + upsilon;
    return img;
}

cplx OperatorImage::eval(cplx z) const
{
    const cplx s = fracops::eval(series, z);
    if (prefactor_power == 0.0)
        return s;
    if (z == cplx(0.0, 0.0))
        return 0.0;
    return std::exp(prefactor_power * std::log(z)) * s;
}

OperatorImage apply_operator(const OperatorParams& p, const PowerSeries& f)
{
    p.validate();
    const auto c = f.coeffs();
    std::vector<cplx> d(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        d[k] = monomial_transform(p, static_cast<double>(k)).coefficient * c[k];
    return OperatorImage{p.prefactor_power(), PowerSeries(std::move(d), f.exact())};
}

double phi_coefficient(const OperatorParams& p, std::size_t kappa)
{
    p.validate();
    if (kappa < 1)
        throw DomainError("phi_coefficient: kappa >= 1 required");
    const double g1 = 1.0 / (p.gamma + 1.0);
    const double base = p.beta * g1 + 1.0;
    // (k - 1) + beta, so that k = 1 reproduces base exactly and Phi(1) == 1.
    const double x = (static_cast<double>(kappa - 1) + p.beta) * g1 + 1.0;
    return std::exp(log_shift_ratio(p, x) - log_shift_ratio(p, base));
}

PowerSeries theta_normalize(const OperatorParams& p, const PowerSeries& f)
{
    p.validate();
    if (!f.is_normalized())
        throw DomainError("theta_normalize: f must satisfy f(0) = 0, f'(0) = 1");
    const auto a = f.coeffs();
    std::vector<cplx> w(a.size());
    w[0] = 0.0;
    w[1] = 1.0;
    for (std::size_t k = 2; k < a.size(); ++k)
        w[k] = phi_coefficient(p, k) * a[k];
    return PowerSeries(std::move(w), f.exact());
}

double theta_scale(const OperatorParams& p)
{
    p.validate();
    const double base = p.beta / (p.gamma + 1.0) + 1.0;
    return std::exp(-log_kernel_constant(p) - log_shift_ratio(p, base));
}

ScaledFoxWright theta_fox_wright_spec(const OperatorParams& p)
{
    p.validate();
    const double g1 = 1.0 / (p.gamma + 1.0);
    const double bg = p.beta * g1;
    ScaledFoxWright out;
    out.spec.upper = {{1.0, 1.0}, {1.0 + bg, g1}};
    out.spec.lower = {{1.0 - p.beta + p.tau + bg, g1}};
    // Normalizes the z^1 coefficient to one.
    out.constant = std::exp(-log_shift_ratio(p, 1.0 + bg));
    return out;
}

PowerSeries theta_kernel_series(const OperatorParams& p, std::size_t order)
{
    const auto sf = theta_fox_wright_spec(p);
    std::vector<cplx> c(order + 1, cplx{});
    for (std::size_t k = 1; k <= order; ++k)
        c[k] = sf.constant * fox_wright_coefficient(sf.spec, k - 1);
    return PowerSeries(std::move(c));
}

cplx ClosedForm::eval(cplx z, double tol) const
{
    if (!(std::abs(z) < 1.0))
        throw DomainError("closed form: |z| must be < 1");
    if (z == cplx(0.0, 0.0))
        return power > 0.0 ? cplx{} : prefactor * std::visit(overloaded{
            [](const FoxWrightSpec& s) { return fox_wright_coefficient(s, 0); },
            [](const CoefficientGenerator& g) { return g(0); },
        }, series);

    const cplx sum = std::visit(
        overloaded{
            [&](const FoxWrightSpec& s) {
                const auto r = fox_wright_eval(s, z, tol);
                if (r.status != SeriesStatus::Converged)
                    throw ConvergenceError("closed form " + kind_name(kind) + ": Fox-Wright sum " +
                                           std::string(to_string(r.status)));
                return r.value;
            },
            [&](const CoefficientGenerator& g) {
                TermMonitor monitor;
                cplx acc = 0.0;
                cplx zk = 1.0;
                for (std::size_t k = 0; k < kDefaultMaxTerms; ++k) {
                    const cplx t = g(k) * zk;
                    acc += t;
                    monitor.observe(std::abs(t));
                    if (auto tail = monitor.tail(); tail && *tail <= tol)
                        return acc;
                    if (monitor.diverging())
                        break;
                    zk *= z;
                }
                throw ConvergenceError("closed form " + kind_name(kind) +
                                       ": coefficient series did not converge");
            },
        },
        series);
    return prefactor * std::exp(power * std::log(z)) * sum;
}

ClosedForm closed_form_spec(const SeriesKind& kind, const OperatorParams& p)
{
    p.validate();
    validate_kind(kind);

    const double g1 = 1.0 / (p.gamma + 1.0);
    const double bg = p.beta * g1;
    const FoxWrightParam up_x{1.0 + bg, g1};
    const FoxWrightParam low_x{1.0 - p.beta + p.tau + bg, g1};
    const double log_k0 = log_kernel_constant(p);
    const double shift = 1.0 - p.beta + p.tau;

    ClosedForm cf;
    cf.kind = kind;
    cf.params = p;
    cf.power = p.prefactor_power() + 1.0;

    // (x_k - beta + tau) B(x_k, 1 - beta + tau) = Gamma(x_k) Gamma(1-b+t) / Gamma(x_k - b + t)
    auto beta_weight = [p, g1, shift](std::size_t k) {
        const double x = (static_cast<double>(k) + p.beta) * g1 + 1.0;
        return (x - p.beta + p.tau) * beta_fn(x, shift);
    };

    std::visit(
        overloaded{
            [&](const kind::Identity&) {
                cf.prefactor = monomial_transform(p, 1.0).coefficient;
                cf.series = CoefficientGenerator([](std::size_t k) { return k == 0 ? cplx(1.0) : cplx{}; });
            },
            [&](const kind::KoebePower& k) {
                cf.prefactor = std::exp(log_k0 - lg(k.alpha));
                cf.series = FoxWrightSpec{{{k.alpha, 1.0}, {1.0, 1.0}, up_x}, {{1.0, 1.0}, low_x}};
            },
            [&](const kind::ExpTimesZ&) {
                cf.prefactor = std::exp(log_k0);
                cf.series = FoxWrightSpec{{{1.0, 1.0}, up_x}, {{1.0, 1.0}, low_x}};
            },
            [&](const kind::Kummer& k) {
                cf.prefactor = std::exp(log_k0 - lg(shift));
                cf.series = CoefficientGenerator([k, beta_weight](std::size_t n) {
                    cplx r = 1.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        const double jd = static_cast<double>(j);
                        r *= (k.alpha + jd) / ((k.lambda + jd) * (jd + 1.0));
                    }
                    return r * beta_weight(n);
                });
            },
            [&](const kind::HurwitzLerch& k) {
                cf.prefactor = std::exp(log_k0 - lg(shift));
                cf.series = CoefficientGenerator([k, beta_weight](std::size_t n) {
                    cplx r = 1.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        const double jd = static_cast<double>(j);
                        r *= (k.alpha + jd) * (k.lambda + jd) / ((k.rho + jd) * (jd + 1.0));
                    }
                    const cplx zeta = std::exp(-k.s * std::log(static_cast<double>(n) + k.a));
                    return r * zeta * beta_weight(n);
                });
            },
        },
        kind);
    return cf;
}

} // namespace fracops
