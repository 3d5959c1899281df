#include "fracops/oracle.hpp"

#include <cmath>

#include "fracops/quadrature.hpp"

namespace fracops {

namespace {

// a + j b with j^2 = -1 commuting with i.  Only the operations Horner needs.
struct Bicomplex {
    cplx re;
    cplx jm;

    friend Bicomplex operator+(Bicomplex x, cplx c) { return {x.re + c, x.jm}; }
    friend Bicomplex operator-(Bicomplex x, cplx c) { return {x.re - c, x.jm}; }
    friend Bicomplex operator*(Bicomplex x, Bicomplex y)
    {
        return {x.re * y.re - x.jm * y.jm, x.re * y.jm + x.jm * y.re};
    }
    friend Bicomplex operator*(double s, Bicomplex x) { return {s * x.re, s * x.jm}; }
    Bicomplex& operator+=(Bicomplex y)
    {
        re += y.re;
        jm += y.jm;
        return *this;
    }
};

Bicomplex horner(std::span<const cplx> c, Bicomplex z)
{
    Bicomplex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * z + c[k];
    return acc;
}

// Per-node data for the u = w^{1/(gamma+1)} form of the inner integral:
//   int w^{b'} (1-w)^{a'} g(w^{1/(gamma+1)}) dw
//     = int u^{gamma+beta-1} (1-u)^{a'} [(gamma+1) q(u)^{a'}] g(u) du,
//   q(u) = (1 - u^{gamma+1}) / (1 - u).
// Integrating in u keeps g smooth at the origin for analytic f.
struct InnerRule {
    std::vector<double> u;
    std::vector<double> h;  // Jacobi weight times (gamma+1) q^{a'}
    double constant_mass;   // int w^{b'} (1-w)^{a'} dw, from the w-form rule
};

InnerRule build_inner_rule(const OperatorParams& p, std::size_t n)
{
    const double ap = p.tau - p.beta;
    const double bp = (p.beta - 1.0) / (p.gamma + 1.0);
    const auto wrule = cached_gauss_jacobi(n, ap, bp);
    const auto urule = cached_gauss_jacobi(n, ap, p.gamma + p.beta - 1.0);

    InnerRule r;
    r.constant_mass = 0.0;
    for (double w : wrule->weights)
        r.constant_mass += w;
    r.u = urule->nodes;
    r.h.resize(n);
    const double g1 = p.gamma + 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double qa = 1.0;
        if (ap != 0.0) {
            const double om = urule->complements[i];
            const double q = -std::expm1(g1 * std::log1p(-om)) / om;
            qa = std::pow(q, ap);
        }
        r.h[i] = urule->weights[i] * g1 * qa;
    }
    return r;
}

cplx inner_with_rule(const InnerRule& r, const PowerSeries& f, cplx z)
{
    const cplx f0 = f[0];
    cplx acc = 0.0;
    for (std::size_t i = 0; i < r.u.size(); ++i)
        acc += r.h[i] * (eval_unchecked(f.coeffs(), z * r.u[i]) - f0);
    return f0 * r.constant_mass + acc;
}

cplx principal_pow(cplx z, double e) { return std::exp(e * std::log(z)); }

cplx evaluate_at(const OperatorParams& p, const PowerSeries& f, const PowerSeries& df, cplx z,
                 std::size_t n, DerivativeScheme scheme)
{
    const InnerRule rule = build_inner_rule(p, n);
    const double g1 = p.gamma + 1.0;
    const double s = p.gamma + p.beta + g1 * (p.tau - p.beta);
    const double log_k = (p.beta - p.tau) * std::log(g1) + log_gamma(p.tau).real() -
                         log_gamma(p.beta).real() - log_gamma(1.0 - p.beta + p.tau).real();
    const double K = std::exp(log_k);

    if (scheme == DerivativeScheme::analytic_under_integral) {
        const cplx i0 = inner_with_rule(rule, f, z);
        cplx i1 = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            i1 += (rule.h[i] * rule.u[i]) * eval_unchecked(df.coeffs(), z * rule.u[i]);
        // z^{1-tau} d/dz [z^s I0(z)] = z^{s-tau} (s I0 + z I0'), and s - tau = prefactor power.
        return K / g1 * principal_pow(z, p.prefactor_power()) * (s * i0 + z * i1);
    }

    const double h = 1e-20 * std::abs(z);
    const cplx f0 = f[0];
    Bicomplex i0{f0 * rule.constant_mass, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Bicomplex arg{z * rule.u[i], cplx(h * rule.u[i], 0.0)};
        i0 += rule.h[i] * (horner(f.coeffs(), arg) - f0);
    }
    const cplx zs = principal_pow(z, s);
    const Bicomplex power{zs, h * s * zs / z};
    const Bicomplex g = power * i0;
    const cplx dG = g.jm / h / g1;
    return K * principal_pow(z, 1.0 - p.tau) * dG;
}

} // namespace

QuadratureConfig QuadratureConfig::for_params(const OperatorParams& p, DerivativeScheme scheme,
                                              std::size_t nodes)
{
    QuadratureConfig cfg;
    cfg.node_count = nodes;
    cfg.alpha_prime = p.tau - p.beta;
    cfg.beta_prime = (p.beta - 1.0) / (p.gamma + 1.0);
    cfg.derivative_scheme = scheme;
    return cfg;
}

void QuadratureConfig::validate() const
{
    if (node_count < 8)
        throw DomainError("QuadratureConfig: node_count >= 8 required");
    if (!(alpha_prime > -1.0 && alpha_prime <= 0.0))
        throw DomainError("QuadratureConfig: alpha' must lie in (-1, 0]");
    if (!(beta_prime > -1.0 && beta_prime <= 0.0))
        throw DomainError("QuadratureConfig: beta' must lie in (-1, 0]");
    if (!(tolerance > 0.0))
        throw DomainError("QuadratureConfig: tolerance must be positive");
}

cplx branch_kernel(cplx /*z*/, double zeta_on_z, const OperatorParams& p)
{
    if (!(zeta_on_z >= 0.0 && zeta_on_z < 1.0))
        throw DomainError("branch_kernel: w must lie in [0, 1)");
    return std::pow(1.0 - zeta_on_z, p.tau - p.beta);
}

cplx inner_integral(const OperatorParams& p, const PowerSeries& f, cplx z, std::size_t nodes)
{
    p.validate();
    if (!(std::abs(z) < 1.0))
        throw DomainError("inner_integral: |z| must be < 1");
    return inner_with_rule(build_inner_rule(p, nodes), f, z);
}

OracleResult oracle_eval_detailed(const OperatorParams& p, const PowerSeries& f, cplx z,
                                  const QuadratureConfig& cfg)
{
    p.validate();
    cfg.validate();
    constexpr double match = 1e-14;
    if (std::abs(cfg.alpha_prime - (p.tau - p.beta)) > match ||
        std::abs(cfg.beta_prime - (p.beta - 1.0) / (p.gamma + 1.0)) > match)
        throw DomainError("oracle_eval: QuadratureConfig exponents do not match the operator parameters");
    const double az = std::abs(z);
    if (az == 0.0)
        throw DomainError("oracle_eval: z = 0 is outside the quadrature domain");
    if (!(az < 1.0))
        throw DomainError("oracle_eval: |z| must be < 1");

    OracleResult out;
    if (az < kOracleSmallZ) {
        const auto c = f.coeffs();
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (c[m] == cplx(0.0, 0.0))
                continue;
            const auto img = monomial_transform(p, static_cast<double>(m));
            out.value = c[m] * img.coefficient * principal_pow(z, img.exponent);
            break;
        }
        return out;
    }

    const PowerSeries df = derivative(f);
    const cplx coarse = evaluate_at(p, f, df, z, cfg.node_count, cfg.derivative_scheme);
    const cplx fine = evaluate_at(p, f, df, z, 2 * cfg.node_count, cfg.derivative_scheme);
    out.value = fine;
    out.node_count = 2 * cfg.node_count;
    out.doubling_change = std::abs(fine - coarse) / std::max(1.0, std::abs(fine));
    if (out.doubling_change > cfg.tolerance)
        throw ConvergenceError("oracle_eval: node doubling changed the result by " +
                               std::to_string(out.doubling_change));
    return out;
}

cplx oracle_eval(const OperatorParams& p, const PowerSeries& f, cplx z, const QuadratureConfig& cfg)
{
    return oracle_eval_detailed(p, f, z, cfg).value;
}

} // namespace fracops
