/**
 * @file grid.hpp
 * @brief Polar sampling grids on the unit disk and the data-parallel sweep
 *        kernels that evaluate a pointwise functional over them.
 *
 * Every sweep fills a radius-major value array; reductions over that array
 * happen afterwards in a fixed order, so the serial and OpenMP kernels give
 * bitwise-identical results.  The serial kernel is the reference.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fracops {

using cplx = std::complex<double>;

struct DiskGrid {
    std::vector<double> radii;  ///< strictly increasing, in (0, 0.999]
    std::size_t angles_per_radius = 256;

    /// Throws DomainError on an empty, unsorted or out-of-range radius list.
    void validate() const;

    std::size_t size() const { return radii.size() * angles_per_radius; }

    /// Angle of sample j on every circle: 2 pi j / angles_per_radius.
    double angle(std::size_t j) const;
    cplx point(std::size_t radius_index, std::size_t angle_index) const;

    /// Radii {0.1, ..., 0.9, 0.99} x 256 angles.
    static DiskGrid geometry_default();
    /// Radii 0.05..0.99 step 0.01 plus 0.999, x 128 angles.
    static DiskGrid bloch_default();
};

inline constexpr double kMaxGridRadius = 0.999;

enum class Execution { serial, parallel };

/// values[i * angles + j] = fn(grid.point(i, j)).  fn must be safe to call
/// concurrently.
std::vector<double> sweep(const DiskGrid& grid, const std::function<double(cplx)>& fn,
                          Execution exec = Execution::parallel);

/// Serial reference kernel.
std::vector<double> sweep_serial(const DiskGrid& grid, const std::function<double(cplx)>& fn);

/// OpenMP kernel over the flattened (radius, angle) index space.
std::vector<double> sweep_parallel(const DiskGrid& grid, const std::function<double(cplx)>& fn);

struct GridExtremum {
    double value = 0.0;
    std::size_t radius_index = 0;
    std::size_t angle_index = 0;
};

/// Largest value; ties go to the smaller radius, then the smaller angle.
GridExtremum grid_max(const DiskGrid& grid, const std::vector<double>& values);

/// Per-radius maximum over angles.
std::vector<double> max_over_angle(const DiskGrid& grid, const std::vector<double>& values);

} // namespace fracops
