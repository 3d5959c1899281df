#include "fracops/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fracops {

namespace {

// B_{2k} / (2k (2k - 1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

// Shift target for the asymptotic series; with eight correction terms the
// truncation error at Re z >= 10 is below 1e-17.
constexpr double kStirlingThreshold = 10.0;

constexpr std::size_t kPochhammerProductMax = 64;

cplx stirling(cplx z)
{
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx corr = 0.0;
    for (std::size_t k = kStirling.size(); k-- > 0;)
        corr = corr * inv2 + kStirling[k];
    corr *= inv;
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + corr;
}

bool is_nonpositive_integer(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

std::string describe(cplx z)
{
    std::ostringstream os;
    os.precision(17);
    os << '(' << z.real() << ',' << z.imag() << ')';
    return os.str();
}

} // namespace

bool near_gamma_pole(cplx z, double margin)
{
    if (z.real() > margin)
        return false;
    const double nearest = std::round(z.real());
    if (nearest > 0.0)
        return false;
    return std::abs(z - cplx(nearest, 0.0)) <= margin;
}

cplx log_gamma(cplx z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument " + describe(z));
    if (is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at " + describe(z));

    // log Gamma(z) = log Gamma(z + n) - sum_{k<n} log(z + k).  Summing
    // principal logs keeps the result on the continuous branch in each
    // half-plane.
    cplx shifted = z;
    cplx acc = 0.0;
    while (shifted.real() < kStirlingThreshold) {
        acc += std::log(shifted);
        shifted += 1.0;
    }
    return stirling(shifted) - acc;
}

cplx pochhammer(cplx rho, std::size_t kappa)
{
    if (kappa == 0) {
        if (rho == cplx(0.0, 0.0))
            throw PoleError("pochhammer: (0)_0 is undefined");
        return 1.0;
    }
    if (kappa <= kPochhammerProductMax || is_nonpositive_integer(rho)) {
        cplx p = 1.0;
        for (std::size_t j = 0; j < kappa; ++j)
            p *= rho + static_cast<double>(j);
        return p;
    }
    const cplx top = rho + static_cast<double>(kappa);
    if (is_nonpositive_integer(top))
        throw PoleError("pochhammer: Gamma(rho + kappa) pole at " + describe(top));
    return std::exp(log_gamma(top) - log_gamma(rho));
}

cplx beta_fn(cplx u, cplx v)
{
    if (is_nonpositive_integer(u) || is_nonpositive_integer(v))
        throw PoleError("beta_fn: Gamma pole at u=" + describe(u) + " v=" + describe(v));
    if (is_nonpositive_integer(u + v))
        return 0.0;
    return std::exp(log_gamma(u) + log_gamma(v) - log_gamma(u + v));
}

std::string_view to_string(SeriesStatus s)
{
    switch (s) {
    case SeriesStatus::Converged: return "Converged";
    case SeriesStatus::SlowConvergence: return "SlowConvergence";
    case SeriesStatus::Divergent: return "Divergent";
    case SeriesStatus::PoleHit: return "PoleHit";
    }
    return "?";
}

double FoxWrightSpec::delta() const
{
    double d = 1.0;
    for (const auto& b : lower)
        d += b.weight;
    for (const auto& a : upper)
        d -= a.weight;
    return d;
}

double FoxWrightSpec::radius() const
{
    const double d = delta();
    constexpr double eps = 1e-12;
    if (d > eps)
        return std::numeric_limits<double>::infinity();
    if (d < -eps)
        return 0.0;
    double log_r = 0.0;
    for (const auto& b : lower)
        log_r += b.weight * std::log(b.weight);
    for (const auto& a : upper)
        log_r -= a.weight * std::log(a.weight);
    return std::exp(log_r);
}

void FoxWrightSpec::validate() const
{
    auto check = [](const std::vector<FoxWrightParam>& ps, const char* side) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const auto& p = ps[j];
            if (!(p.weight > 0.0) || !std::isfinite(p.weight))
                throw DomainError(std::string("FoxWrightSpec: ") + side + " weight #" +
                                  std::to_string(j) + " must be positive and finite");
            if (!std::isfinite(p.shift.real()) || !std::isfinite(p.shift.imag()))
                throw DomainError(std::string("FoxWrightSpec: ") + side + " shift #" +
                                  std::to_string(j) + " is not finite");
        }
    };
    check(upper, "upper");
    check(lower, "lower");
}

cplx fox_wright_log_coefficient(const FoxWrightSpec& spec, std::size_t kappa)
{
    const double k = static_cast<double>(kappa);
    cplx acc = 0.0;
    for (const auto& b : spec.lower) {
        const cplx arg = b.shift + k * b.weight;
        if (near_gamma_pole(arg, kPoleGuard))
            throw PoleError("fox_wright: lower Gamma argument " + describe(arg) +
                            " at kappa=" + std::to_string(kappa) + " is at a pole");
        acc -= log_gamma(arg);
    }
    for (const auto& a : spec.upper)
        acc += log_gamma(a.shift + k * a.weight);
    acc -= log_gamma(k + 1.0);
    return acc;
}

cplx fox_wright_coefficient(const FoxWrightSpec& spec, std::size_t kappa)
{
    return std::exp(fox_wright_log_coefficient(spec, kappa));
}

EvalOutcome fox_wright_eval(const FoxWrightSpec& spec, cplx z, double tol,
                            std::size_t max_terms)
{
    spec.validate();
    if (!(tol > 0.0))
        throw DomainError("fox_wright_eval: tolerance must be positive");
    if (max_terms == 0)
        throw DomainError("fox_wright_eval: max_terms must be positive");

    EvalOutcome out;
    const double r = spec.radius();
    const double az = std::abs(z);
    // Outside the disk, or with delta < 0, partial sums are never authoritative.
    const bool outside = az > 0.0 && az > r * (1.0 + 1e-12);
    const bool on_boundary = az > 0.0 && std::isfinite(r) && !outside &&
                             std::abs(az - r) <= 1e-12 * r;

    TermMonitor monitor;
    const cplx log_z = az > 0.0 ? std::log(z) : cplx{};
    for (std::size_t k = 0; k < max_terms; ++k) {
        cplx term;
        try {
            if (k > 0 && az == 0.0)
                break;
            const cplx lc = fox_wright_log_coefficient(spec, k);
            term = k == 0 ? std::exp(lc) : std::exp(lc + static_cast<double>(k) * log_z);
        } catch (const PoleError&) {
            out.value = cplx(std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::quiet_NaN());
            out.terms_used = k;
            out.tail_estimate = std::numeric_limits<double>::infinity();
            out.status = SeriesStatus::PoleHit;
            return out;
        }
        const double mag = std::abs(term);
        if (!std::isfinite(mag)) {
            out.terms_used = k;
            out.tail_estimate = std::numeric_limits<double>::infinity();
            out.status = SeriesStatus::Divergent;
            return out;
        }
        out.value += term;
        out.terms_used = k + 1;
        monitor.observe(mag);

        if (monitor.diverging()) {
            out.tail_estimate = std::numeric_limits<double>::infinity();
            out.status = SeriesStatus::Divergent;
            return out;
        }
        if (outside || on_boundary)
            continue;
        if (auto tail = monitor.tail(); tail && *tail <= tol) {
            out.tail_estimate = *tail;
            out.status = SeriesStatus::Converged;
            return out;
        }
    }

    if (az == 0.0) {
        out.tail_estimate = 0.0;
        out.status = SeriesStatus::Converged;
        return out;
    }
    const auto tail = monitor.tail();
    out.tail_estimate = tail ? *tail : std::numeric_limits<double>::infinity();
    out.status = outside ? SeriesStatus::Divergent : SeriesStatus::SlowConvergence;
    return out;
}

void TermMonitor::observe(double magnitude)
{
    if (count_ > 0) {
        double ratio;
        if (last_ > 0.0)
            ratio = magnitude / last_;
        else
            ratio = magnitude > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        ratios_.push_back(ratio);
        if (ratios_.size() > kRatioWindow)
            ratios_.pop_front();

        if (count_ > kGrowthStart) {
            if (magnitude >= last_ && magnitude > 0.0)
                ++growth_run_;
            else
                growth_run_ = 0;
        }
    }
    last_ = magnitude;
    ++count_;
}

std::optional<double> TermMonitor::tail() const
{
    if (ratios_.size() < kRatioWindow)
        return std::nullopt;
    if (last_ == 0.0 && ratios_.back() == 0.0)
        return 0.0;
    double r = *std::max_element(ratios_.begin(), ratios_.end());
    if (!(r < 1.0))
        return std::nullopt;
    const double trend = ratios_.back() - ratios_.front();
    if (trend > 0.0)
        r += trend;
    if (!(r < 1.0))
        return std::nullopt;
    return last_ * r / (1.0 - r);
}

} // namespace fracops
