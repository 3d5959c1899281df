#include "fracops/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracops/error.hpp"

namespace fracops {

double WeightSpec::operator()(double t) const
{
    if (!(t > 0.0 && t <= 1.0))
        throw DomainError("WeightSpec: argument must lie in (0, 1]");
    double v = 1.0;
    switch (kind) {
    case Kind::constant_one:
        break;
    case Kind::power:
        v = std::pow(t, alpha_w);
        break;
    case Kind::log_weight:
        v = 1.0 - std::log(t);
        break;
    case Kind::table: {
        if (points.empty())
            throw DomainError("WeightSpec: empty table");
        if (t <= points.front().first) {
            v = points.front().second;
        } else if (t >= points.back().first) {
            v = points.back().second;
        } else {
            const auto hi = std::upper_bound(points.begin(), points.end(), t,
                                             [](double x, const auto& pt) { return x < pt.first; });
            const auto lo = hi - 1;
            const double s = (t - lo->first) / (hi->first - lo->first);
            v = lo->second + s * (hi->second - lo->second);
        }
        break;
    }
    }
    v *= scale;
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError("WeightSpec: weight is not positive at t = " + std::to_string(t));
    return v;
}

void WeightSpec::validate() const
{
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw DomainError("WeightSpec: scale must be positive");
    if (kind == Kind::power && !std::isfinite(alpha_w))
        throw DomainError("WeightSpec: power exponent must be finite");
    if (kind == Kind::table) {
        if (points.empty())
            throw DomainError("WeightSpec: empty table");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!(points[i].second > 0.0))
                throw DomainError("WeightSpec: table values must be positive");
            if (i > 0 && !(points[i].first > points[i - 1].first))
                throw DomainError("WeightSpec: table knots must be strictly increasing");
        }
    }
}

WeightSpec WeightSpec::power_weight(double alpha_w)
{
    WeightSpec w;
    w.kind = Kind::power;
    w.alpha_w = alpha_w;
    return w;
}

WeightSpec WeightSpec::logarithmic()
{
    WeightSpec w;
    w.kind = Kind::log_weight;
    return w;
}

WeightSpec WeightSpec::tabulated(std::vector<std::pair<double, double>> knots)
{
    WeightSpec w;
    w.kind = Kind::table;
    w.points = std::move(knots);
    w.validate();
    return w;
}

std::string to_string(WeightSpec::Kind k)
{
    switch (k) {
    case WeightSpec::Kind::constant_one: return "one";
    case WeightSpec::Kind::power: return "power";
    case WeightSpec::Kind::log_weight: return "log";
    case WeightSpec::Kind::table: return "table";
    }
    return "?";
}

namespace {

// Heuristic bound on |sum_{k>=N} d_k r^k| for the derivative coefficients d:
// the last term continued geometrically with the observed coefficient growth.
double derivative_tail(const PowerSeries& df, double r)
{
    const auto d = df.coeffs();
    const std::size_t n = d.size();
    if (n < 5)
        return 0.0;
    const double last = std::abs(d[n - 1]);
    const double earlier = std::abs(d[n - 5]);
    double growth = 1.0;
    if (last > 0.0 && earlier > 0.0)
        growth = std::max(1.0, std::pow(last / earlier, 0.25));
    const double rho = r * growth;
    if (rho >= 1.0)
        return std::numeric_limits<double>::infinity();
    return last * std::pow(r, static_cast<double>(n - 1)) * rho / (1.0 - rho);
}

template <class Factor>
BlochEstimate estimate(const PowerSeries& f, double mu, const DiskGrid& grid, Execution exec,
                       Factor factor)
{
    grid.validate();
    const PowerSeries df = derivative(f);
    // The radial factor is angle independent, so tabulate it once per radius.
    std::vector<double> radial(grid.radii.size());
    for (std::size_t i = 0; i < radial.size(); ++i)
        radial[i] = factor(grid.radii[i]);

    const std::size_t m = grid.angles_per_radius;
    std::vector<double> values;
    if (exec == Execution::serial) {
        values = sweep_serial(grid, [&](cplx z) { return std::abs(eval_unchecked(df.coeffs(), z)); });
    } else {
        values = sweep_parallel(grid, [&](cplx z) { return std::abs(eval_unchecked(df.coeffs(), z)); });
    }
    for (std::size_t i = 0; i < grid.radii.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            values[i * m + j] *= radial[i];

    BlochEstimate out;
    const auto best = grid_max(grid, values);
    out.norm_estimate = best.value;
    out.argmax_point = grid.point(best.radius_index, best.angle_index);
    out.grid = grid;
    out.mu = mu;
    out.radius_profile = max_over_angle(grid, values);
    if (!f.exact()) {
        const double rmax = grid.radii.back();
        out.tail_bound = derivative_tail(df, rmax) * radial.back();
        out.truncation_warning = !(out.tail_bound <= 1e-8 * out.norm_estimate);
    }
    return out;
}

} // namespace

BlochEstimate bloch_norm_classical(const PowerSeries& f, const DiskGrid& grid, Execution exec)
{
    return estimate(f, 1.0, grid, exec, [](double r) { return 1.0 - r * r; });
}

BlochEstimate bloch_norm_weighted(const PowerSeries& f, double mu, const WeightSpec& w,
                                  const DiskGrid& grid, Execution exec)
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw DomainError("bloch_norm_weighted: mu must be positive");
    w.validate();
    return estimate(f, mu, grid, exec, [&](double r) {
        const double t = 1.0 - r;
        return std::pow(t, mu) / w(t);
    });
}

std::vector<double> little_bloch_decay(const PowerSeries& f, const std::vector<double>& radii,
                                       std::size_t angles)
{
    DiskGrid grid{radii, angles};
    return bloch_norm_classical(f, grid).radius_profile;
}

EquivalenceReport boundedness_equivalence_check(const OperatorParams& p, const PowerSeries& f,
                                                double mu, const WeightSpec& w,
                                                const DiskGrid& grid)
{
    EquivalenceReport rep;
    rep.norm_f = bloch_norm_weighted(f, mu, w, grid);
    rep.norm_theta_f = bloch_norm_weighted(theta_normalize(p, f), mu, w, grid);
    rep.ratio = rep.norm_theta_f.norm_estimate / rep.norm_f.norm_estimate;
    return rep;
}

std::vector<double> compactness_decay_check(const OperatorParams& p, std::size_t n_max, double mu,
                                            const WeightSpec& w, const DiskGrid& grid)
{
    p.validate();
    if (n_max < 2)
        throw DomainError("compactness_decay_check: n_max >= 2 required");
    std::vector<double> out;
    out.reserve(n_max - 1);
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double c = phi_coefficient(p, n) / static_cast<double>(n);
        out.push_back(bloch_norm_weighted(PowerSeries::monomial(n, c), mu, w, grid).norm_estimate);
    }
    return out;
}

DiskGrid bloch_refined_grid()
{
    DiskGrid g;
    for (int i = 1; i <= 199; ++i)
        g.radii.push_back(0.005 * i);
    g.radii.push_back(0.999);
    g.angles_per_radius = 256;
    return g;
}

} // namespace fracops
