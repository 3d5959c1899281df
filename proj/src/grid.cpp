#include "fracops/grid.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "fracops/error.hpp"

namespace fracops {

void DiskGrid::validate() const
{
    if (radii.empty())
        throw DomainError("DiskGrid: no radii");
    if (angles_per_radius == 0)
        throw DomainError("DiskGrid: angles_per_radius must be positive");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] <= kMaxGridRadius))
            throw DomainError("DiskGrid: radius " + std::to_string(radii[i]) + " outside (0, 0.999]");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw DomainError("DiskGrid: radii must be strictly increasing");
    }
}

double DiskGrid::angle(std::size_t j) const
{
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles_per_radius);
}

cplx DiskGrid::point(std::size_t radius_index, std::size_t angle_index) const
{
    return std::polar(radii[radius_index], angle(angle_index));
}

DiskGrid DiskGrid::geometry_default()
{
    DiskGrid g;
    for (int i = 1; i <= 9; ++i)
        g.radii.push_back(0.1 * i);
    g.radii.push_back(0.99);
    g.angles_per_radius = 256;
    return g;
}

DiskGrid DiskGrid::bloch_default()
{
    DiskGrid g;
    for (int i = 5; i <= 99; ++i)
        g.radii.push_back(0.01 * i);
    g.radii.push_back(0.999);
    g.angles_per_radius = 128;
    return g;
}

std::vector<double> sweep_serial(const DiskGrid& grid, const std::function<double(cplx)>& fn)
{
    grid.validate();
    const std::size_t m = grid.angles_per_radius;
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.radii.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i * m + j] = fn(grid.point(i, j));
    return out;
}

std::vector<double> sweep_parallel(const DiskGrid& grid, const std::function<double(cplx)>& fn)
{
    grid.validate();
    const std::size_t m = grid.angles_per_radius;
    const auto total = static_cast<long long>(grid.size());
    std::vector<double> out(grid.size());
    double* dst = out.data();
    // Exceptions may not escape an OpenMP region; capture the first one.
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        try {
            dst[u] = fn(grid.point(u / m, u % m));
        } catch (...) {
#pragma omp critical(fracops_sweep_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

std::vector<double> sweep(const DiskGrid& grid, const std::function<double(cplx)>& fn, Execution exec)
{
    return exec == Execution::serial ? sweep_serial(grid, fn) : sweep_parallel(grid, fn);
}

GridExtremum grid_max(const DiskGrid& grid, const std::vector<double>& values)
{
    const std::size_t m = grid.angles_per_radius;
    GridExtremum best{values.at(0), 0, 0};
    for (std::size_t idx = 1; idx < values.size(); ++idx)
        if (values[idx] > best.value)
            best = {values[idx], idx / m, idx % m};
    return best;
}

std::vector<double> max_over_angle(const DiskGrid& grid, const std::vector<double>& values)
{
    const std::size_t m = grid.angles_per_radius;
    std::vector<double> out(grid.radii.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double v = values.at(i * m);
        for (std::size_t j = 1; j < m; ++j)
            v = std::max(v, values[i * m + j]);
        out[i] = v;
    }
    return out;
}

} // namespace fracops
