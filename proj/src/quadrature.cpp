#include "fracops/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "fracops/error.hpp"
#include "fracops/special_fn.hpp"

namespace fracops {

namespace {

struct Eigensystem {
    Eigen::VectorXd values;
    Eigen::VectorXd first_components;
};

// Jacobi matrix of the monic Jacobi polynomials for (1-x)^a (1+x)^b on [-1, 1].
Eigensystem jacobi_eigensystem(std::size_t n, double a, double b)
{
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::VectorXd diag(N);
    Eigen::VectorXd sub(std::max<Eigen::Index>(N - 1, 0));
    const double ab = a + b;
    for (Eigen::Index k = 0; k < N; ++k) {
        const double kd = static_cast<double>(k);
        if (k == 0)
            diag(k) = (b - a) / (ab + 2.0);
        else
            diag(k) = (b * b - a * a) / ((2.0 * kd + ab) * (2.0 * kd + ab + 2.0));
    }
    for (Eigen::Index k = 1; k < N; ++k) {
        const double kd = static_cast<double>(k);
        double sq;
        if (k == 1)
            sq = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else {
            const double t = 2.0 * kd + ab;
            sq = 4.0 * kd * (kd + a) * (kd + b) * (kd + ab) / (t * t * (t + 1.0) * (t - 1.0));
        }
        sub(k - 1) = std::sqrt(sq);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("gauss_jacobi: tridiagonal eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors().row(0).transpose()};
}

} // namespace

GaussJacobiRule gauss_jacobi(std::size_t n, double a, double b)
{
    if (n == 0)
        throw DomainError("gauss_jacobi: n >= 1 required");
    if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("gauss_jacobi: exponents must be finite and > -1");

    const Eigensystem fwd = jacobi_eigensystem(n, a, b);
    // The mirrored rule gives 1 - x to full relative precision near x = 1.
    const Eigensystem mirror = jacobi_eigensystem(n, b, a);

    const double mu0 = std::exp(log_gamma(a + 1.0).real() + log_gamma(b + 1.0).real() -
                                log_gamma(a + b + 2.0).real());

    GaussJacobiRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(n);
    rule.complements.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto I = static_cast<Eigen::Index>(i);
        const auto J = static_cast<Eigen::Index>(n - 1 - i);
        rule.nodes[i] = 0.5 * (1.0 + fwd.values(I));
        rule.complements[i] = 0.5 * (1.0 + mirror.values(J));
        const double v = fwd.first_components(I);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

std::shared_ptr<const GaussJacobiRule> cached_gauss_jacobi(std::size_t n, double a, double b)
{
    using Key = std::tuple<std::size_t, double, double>;
    static std::shared_mutex mutex;
    static std::map<Key, std::shared_ptr<const GaussJacobiRule>> cache;

    const Key key{n, a, b};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto rule = std::make_shared<const GaussJacobiRule>(gauss_jacobi(n, a, b));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(rule));
    return it->second;
}

} // namespace fracops
