/**
 * @file verify.hpp
 * @brief Seeded self-verification suites: every closed form against an
 *        independent route, plus golden fixture comparison.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fracops/json_io.hpp"

namespace fracops {

/// Portable seeded generator: mt19937_64 output mapped to [0, 1) by its top
/// 53 bits, so draws are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

private:
    std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20231117;

/// beta in [0.05, 1], tau in (0, beta], gamma in [0, 3].
OperatorParams draw_params(Rng& rng);
/// Same window with tau == beta.
OperatorParams draw_identity_params(Rng& rng);
/// z with |z| in [0.05, 0.9] and arbitrary argument.
cplx draw_point(Rng& rng, double r_min = 0.05, double r_max = 0.9);
/// Class-A series with random coefficients decaying like 0.9^k.
PowerSeries draw_normalized_series(Rng& rng, std::size_t order = kDefaultOrder);

/// Direct pFq by term recurrence; the reference for unit-weight Fox-Wright.
cplx hypergeometric_pfq(const std::vector<double>& a, const std::vector<double>& b, cplx z);

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> failures;

    void record(double err, const std::string& label);
    void fail(const std::string& message);
};

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    std::size_t draws = 50;
    std::filesystem::path fixture_dir;
};

/// FRACOPS_FIXTURES if set, otherwise the fixtures directory of the source tree.
std::filesystem::path default_fixture_dir();

SuiteResult suite_oracle_vs_closed_form(std::uint64_t seed, std::size_t draws);
SuiteResult suite_derivative_schemes(std::uint64_t seed, std::size_t draws);
SuiteResult suite_identity(std::uint64_t seed, std::size_t draws, const std::vector<PowerSeries>& fixtures);
SuiteResult suite_reduction(std::uint64_t seed, std::size_t draws);
SuiteResult suite_fox_wright_vs_pfq(std::uint64_t seed, std::size_t specs);
SuiteResult suite_closed_forms(std::uint64_t seed, std::size_t param_draws);
SuiteResult suite_theta_equivalence(std::uint64_t seed, std::size_t draws);
SuiteResult suite_quadrature(const std::vector<PowerSeries>& fixtures, std::uint64_t seed, std::size_t draws);
SuiteResult suite_fixtures(const std::filesystem::path& dir);

struct NamedSeries {
    std::string name;
    PowerSeries series;
};

/// The fixture family: identity, Koebe alpha = 1 and 2, z e^z, a Kummer and a
/// class-A Hurwitz-Lerch instance, all at the default order.
std::vector<NamedSeries> fixture_family();

/// Loads every series/*.json under dir, sorted by name.  Throws DomainError
/// naming the first file that fails validation.
std::vector<NamedSeries> load_fixture_series(const std::filesystem::path& dir);

/// Regenerates series fixtures and golden documents under dir.
void write_fixtures(const std::filesystem::path& dir);

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t draws = 0;
    std::vector<SuiteResult> suites;

    bool passed() const;
};

VerifyReport run_verify(const VerifyConfig& cfg);

json to_json(const SuiteResult& s);
json to_json(const VerifyReport& r);

} // namespace fracops
