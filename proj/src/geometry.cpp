#include "fracops/geometry.hpp"

#include <cmath>
#include <limits>

namespace fracops {

namespace {

ScreenResult screen(const DiskGrid& grid, const std::vector<double>& values, double lambda)
{
    ScreenResult out;
    const std::size_t m = grid.angles_per_radius;
    out.min_value = std::numeric_limits<double>::infinity();
    for (double v : values)
        out.min_value = std::min(out.min_value, v);

    for (std::size_t i = 0; i < grid.radii.size() && out.passed; ++i) {
        std::optional<std::size_t> worst;
        for (std::size_t j = 0; j < m; ++j) {
            const double v = values[i * m + j];
            if (v > lambda)
                continue;
            if (!worst || v < values[i * m + *worst])
                worst = j;
        }
        if (worst) {
            out.passed = false;
            out.witness = grid.point(i, *worst);
            out.witness_value = values[i * m + *worst];
        }
    }
    return out;
}

} // namespace

ScreenResult starlike_order(const PowerSeries& f, double lambda, const DiskGrid& grid, Execution exec)
{
    grid.validate();
    const PowerSeries df = derivative(f);
    const auto values = sweep(
        grid,
        [&](cplx z) {
            const cplx fz = eval_unchecked(f.coeffs(), z);
            if (fz == cplx(0.0, 0.0))
                throw DomainError("starlike_order: f vanishes at a grid point");
            return (z * eval_unchecked(df.coeffs(), z) / fz).real();
        },
        exec);
    return screen(grid, values, lambda);
}

ScreenResult convex_order(const PowerSeries& f, double lambda, const DiskGrid& grid, Execution exec)
{
    grid.validate();
    const PowerSeries df = derivative(f);
    const PowerSeries d2f = derivative(df);
    const auto values = sweep(
        grid,
        [&](cplx z) {
            const cplx d1 = eval_unchecked(df.coeffs(), z);
            if (d1 == cplx(0.0, 0.0))
                throw DomainError("convex_order: f' vanishes at a grid point");
            return (1.0 + z * eval_unchecked(d2f.coeffs(), z) / d1).real();
        },
        exec);
    return screen(grid, values, lambda);
}

CoefficientScreen bieberbach_screen(const PowerSeries& f, BieberbachMode mode)
{
    if (!f.is_normalized())
        throw DomainError("bieberbach_screen: f must be normalized");
    CoefficientScreen out;
    const auto a = f.coeffs();
    for (std::size_t k = 2; k < a.size(); ++k) {
        const double bound = mode == BieberbachMode::starlike_bound ? static_cast<double>(k) : 1.0;
        const double mag = std::abs(a[k]);
        if (mag > bound) {
            out.passed = false;
            if (!out.first_violation)
                out.first_violation = k;
        } else if (mag == bound) {
            out.equality_indices.push_back(k);
        }
    }
    return out;
}

std::size_t order_for_radius(double r, double tol)
{
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("order_for_radius: 0 < r < 1 required");
    for (std::size_t n = 1;; ++n) {
        const double nd = static_cast<double>(n);
        const double rho = ((nd + 2.0) / (nd + 1.0)) * ((nd + 2.0) / (nd + 1.0)) * r;
        if (rho >= 1.0)
            continue;
        const double bound = (nd + 1.0) * (nd + 1.0) * std::pow(r, nd + 1.0) / (1.0 - rho);
        if (bound < tol)
            return n;
    }
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::Violated: return "Violated";
    case Verdict::InconclusiveDivergent: return "Inconclusive-Divergent";
    }
    return "?";
}

std::string_view to_string(CriterionMode m)
{
    return m == CriterionMode::theorem5_S ? "theorem5_S" : "theorem6_K";
}

CriterionReport univalence_criterion(const OperatorParams& p, CriterionMode mode,
                                     std::size_t max_terms, double tol)
{
    p.validate();
    const double g1 = 1.0 / (p.gamma + 1.0);
    const double bg = p.beta * g1;
    const double shift = p.tau - p.beta;

    const FoxWrightSpec shifted{{{3.0, 1.0}, {1.0 + (p.beta + 1.0) * g1, g1}},
                                {{1.0 + shift + (p.beta + 1.0) * g1, g1}}};
    const FoxWrightSpec base{{{2.0, 1.0}, {1.0 + bg, g1}}, {{1.0 + shift + bg, g1}}};

    CriterionReport rep;
    rep.mode = mode;
    rep.params = p;
    rep.rhs_threshold = 2.0 * std::exp(log_gamma(1.0 + bg).real() - log_gamma(1.0 + bg + shift).real());

    TermMonitor monitor;
    double sum = 0.0;
    rep.series_status = SeriesStatus::SlowConvergence;
    for (std::size_t k = 0; k < max_terms; ++k) {
        double t = fox_wright_coefficient(base, k).real();
        if (mode == CriterionMode::theorem5_S)
            t += fox_wright_coefficient(shifted, k).real();
        sum += t;
        rep.terms.push_back(t);
        rep.partial_sums.push_back(sum);
        monitor.observe(std::abs(t));
        if (monitor.diverging()) {
            rep.series_status = SeriesStatus::Divergent;
            break;
        }
        if (auto tail = monitor.tail(); tail && *tail <= tol) {
            rep.series_status = SeriesStatus::Converged;
            rep.tail_estimate = *tail;
            break;
        }
    }

    switch (rep.series_status) {
    case SeriesStatus::Converged:
        rep.verdict = sum + rep.tail_estimate < rep.rhs_threshold ? Verdict::Satisfied : Verdict::Violated;
        break;
    case SeriesStatus::SlowConvergence:
        // Positive terms: a partial sum already past the threshold is decisive.
        rep.tail_estimate = std::numeric_limits<double>::infinity();
        rep.verdict = sum >= rep.rhs_threshold ? Verdict::Violated : Verdict::InconclusiveDivergent;
        break;
    default:
        rep.tail_estimate = std::numeric_limits<double>::infinity();
        rep.verdict = Verdict::InconclusiveDivergent;
        break;
    }
    return rep;
}

} // namespace fracops
