/**
 * @file quadrature.hpp
 * @brief Gauss-Jacobi rules on [0, 1] for the weight (1 - x)^a x^b.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace fracops {

struct GaussJacobiRule {
    double a = 0.0;  ///< exponent at x = 1
    double b = 0.0;  ///< exponent at x = 0
    std::vector<double> nodes;       ///< ascending, in (0, 1)
    std::vector<double> complements; ///< 1 - nodes, computed without cancellation
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Golub-Welsch construction; a, b > -1, n >= 1.
GaussJacobiRule gauss_jacobi(std::size_t n, double a, double b);

/// Shared, lazily built rule.  Safe under concurrent callers; rules are
/// immutable once published.
std::shared_ptr<const GaussJacobiRule> cached_gauss_jacobi(std::size_t n, double a, double b);

} // namespace fracops
