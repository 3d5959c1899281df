#pragma once

#include <stdexcept>
#include <string>

namespace fracops {

/// Argument outside the domain an operation is defined on (|z| >= 1,
/// parameter window violations, malformed fixtures).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A Gamma argument landed on (or within the guard margin of) a pole.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure could not certify its own result.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fracops
