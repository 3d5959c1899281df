/**
 * @file json_io.hpp
 * @brief JSON and CSV serialization of series fixtures and reports.
 *
 * Floating-point values are written with 17 significant digits so that
 * identical runs produce byte-identical documents.
 */
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fracops/bloch.hpp"
#include "fracops/geometry.hpp"
#include "fracops/operator.hpp"
#include "fracops/oracle.hpp"

namespace fracops {

using json = nlohmann::ordered_json;

/// Renders j with every floating-point number printed as %.17g.  Non-finite
/// numbers become null.
std::string dump_fixed(const json& j, int indent = 2);

/// {"coeffs": [[re, im], ...], "order": N}
json series_to_json(const PowerSeries& f);

/// Inverse of series_to_json; throws DomainError on a malformed document.
PowerSeries series_from_json(const json& j);

/// Reads a series fixture; throws DomainError naming the file on any failure.
PowerSeries load_series_file(const std::filesystem::path& path);
void save_series_file(const std::filesystem::path& path, const PowerSeries& f);

json to_json(const OperatorParams& p);
json to_json(const FoxWrightSpec& s);
json to_json(const MonomialImage& m);
json to_json(const OperatorImage& img);
json to_json(const EvalOutcome& e);
/// {kind, params, fox_wright: {upper, lower} | coefficients, constant, power}
json to_json(const ClosedForm& cf, std::size_t preview_terms = 16);
json to_json(const CriterionReport& r);
json to_json(const ScreenResult& s);
json to_json(const CoefficientScreen& s);
json to_json(const BlochEstimate& b);
json to_json(const EquivalenceReport& r);
json to_json(const OracleResult& r);

json complex_to_json(cplx z);

/// k,term,partial_sum
std::string criterion_csv(const CriterionReport& r);
/// radius,max_value
std::string bloch_profile_csv(const BlochEstimate& b);
/// n,norm
std::string decay_csv(const std::vector<double>& norms);

} // namespace fracops
