#include "fracops/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fracops/error.hpp"

namespace fracops {

namespace {

std::string format_double(double v)
{
    if (!std::isfinite(v))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    // Keep the value recognizably floating point.
    if (s.find_first_of(".eE") == std::string::npos)
        s += ".0";
    return s;
}

void write(std::ostringstream& os, const json& j, int indent, int depth)
{
    const auto newline = [&](int d) {
        if (indent >= 0)
            os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first)
                os << ',';
            first = false;
            newline(depth + 1);
            os << json(key).dump() << (indent >= 0 ? ": " : ":");
            write(os, value, indent, depth + 1);
        }
        newline(depth);
        os << '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // Short numeric arrays (complex pairs, Fox-Wright pairs) stay on one line.
        const bool inline_array =
            j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_number(); });
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0)
                os << (inline_array && indent >= 0 ? ", " : ",");
            if (!inline_array)
                newline(depth + 1);
            write(os, j[i], indent, depth + 1);
        }
        if (!inline_array)
            newline(depth);
        os << ']';
        return;
    }
    case json::value_t::number_float:
        os << format_double(j.get<double>());
        return;
    default:
        os << j.dump();
        return;
    }
}

double number_at(const json& j, const char* what)
{
    if (!j.is_number())
        throw DomainError(std::string("series fixture: ") + what + " is not a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw DomainError(std::string("series fixture: ") + what + " is not finite");
    return v;
}

json pair(double a, double b) { return json::array({a, b}); }

} // namespace

std::string dump_fixed(const json& j, int indent)
{
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

json complex_to_json(cplx z) { return pair(z.real(), z.imag()); }

json series_to_json(const PowerSeries& f)
{
    json coeffs = json::array();
    for (cplx c : f.coeffs())
        coeffs.push_back(complex_to_json(c));
    return json{{"coeffs", std::move(coeffs)}, {"order", f.order()}};
}

PowerSeries series_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("order"))
        throw DomainError("series fixture: expected an object with \"coeffs\" and \"order\"");
    const json& c = j.at("coeffs");
    if (!c.is_array() || c.empty())
        throw DomainError("series fixture: \"coeffs\" must be a non-empty array");
    if (!j.at("order").is_number_unsigned())
        throw DomainError("series fixture: \"order\" must be a nonnegative integer");
    const auto order = j.at("order").get<std::size_t>();
    if (order + 1 != c.size())
        throw DomainError("series fixture: \"order\" is " + std::to_string(order) + " but " +
                          std::to_string(c.size()) + " coefficients are present");
    std::vector<cplx> out;
    out.reserve(c.size());
    for (const json& e : c) {
        if (!e.is_array() || e.size() != 2)
            throw DomainError("series fixture: each coefficient must be a [re, im] pair");
        out.emplace_back(number_at(e[0], "re"), number_at(e[1], "im"));
    }
    return PowerSeries(std::move(out));
}

PowerSeries load_series_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open series fixture " + path.string());
    try {
        return series_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw DomainError("series fixture " + path.string() + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
}

void save_series_file(const std::filesystem::path& path, const PowerSeries& f)
{
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write " + path.string());
    out << dump_fixed(series_to_json(f)) << '\n';
}

json to_json(const OperatorParams& p)
{
    return json{{"beta", p.beta}, {"tau", p.tau}, {"gamma", p.gamma}};
}

json to_json(const FoxWrightSpec& s)
{
    json upper = json::array();
    json lower = json::array();
    for (const auto& a : s.upper)
        upper.push_back(json::array({complex_to_json(a.shift), a.weight}));
    for (const auto& b : s.lower)
        lower.push_back(json::array({complex_to_json(b.shift), b.weight}));
    return json{{"upper", std::move(upper)}, {"lower", std::move(lower)}};
}

json to_json(const MonomialImage& m)
{
    return json{{"coefficient", m.coefficient}, {"exponent", m.exponent}};
}

json to_json(const OperatorImage& img)
{
    json coeffs = json::array();
    for (cplx c : img.series.coeffs())
        coeffs.push_back(complex_to_json(c));
    return json{{"prefactor_power", img.prefactor_power}, {"coefficients", std::move(coeffs)}};
}

json to_json(const EvalOutcome& e)
{
    return json{{"value", complex_to_json(e.value)},
                {"terms_used", e.terms_used},
                {"tail_estimate", e.tail_estimate},
                {"status", std::string(to_string(e.status))}};
}

json to_json(const ClosedForm& cf, std::size_t preview_terms)
{
    json j{{"kind", kind_name(cf.kind)}, {"params", to_json(cf.params)}};
    if (const auto* spec = std::get_if<FoxWrightSpec>(&cf.series)) {
        j["fox_wright"] = to_json(*spec);
    } else {
        const auto& gen = std::get<CoefficientGenerator>(cf.series);
        json coeffs = json::array();
        for (std::size_t k = 0; k < preview_terms; ++k)
            coeffs.push_back(complex_to_json(gen(k)));
        j["coefficients"] = std::move(coeffs);
    }
    j["constant"] = complex_to_json(cf.prefactor);
    j["power"] = cf.power;
    return j;
}

json to_json(const CriterionReport& r)
{
    return json{{"mode", std::string(to_string(r.mode))},
                {"params", to_json(r.params)},
                {"terms_summed", r.terms.size()},
                {"partial_sums", r.partial_sums},
                {"rhs_threshold", r.rhs_threshold},
                {"tail_estimate", r.tail_estimate},
                {"series_status", std::string(to_string(r.series_status))},
                {"verdict", std::string(to_string(r.verdict))}};
}

json to_json(const ScreenResult& s)
{
    json j{{"no_violation_on_grid", s.passed}, {"min_value", s.min_value}};
    if (s.witness) {
        j["witness"] = complex_to_json(*s.witness);
        j["witness_value"] = s.witness_value;
    }
    return j;
}

json to_json(const CoefficientScreen& s)
{
    json j{{"passed", s.passed}, {"equality_indices", s.equality_indices}};
    if (s.first_violation)
        j["first_violation"] = *s.first_violation;
    return j;
}

json to_json(const BlochEstimate& b)
{
    return json{{"norm_estimate", b.norm_estimate},
                {"argmax_point", complex_to_json(b.argmax_point)},
                {"mu", b.mu},
                {"grid", json{{"radii", b.grid.radii.size()},
                              {"r_min", b.grid.radii.front()},
                              {"r_max", b.grid.radii.back()},
                              {"angles_per_radius", b.grid.angles_per_radius}}},
                {"truncation_warning", b.truncation_warning},
                {"tail_bound", b.tail_bound}};
}

json to_json(const EquivalenceReport& r)
{
    return json{{"norm_f", to_json(r.norm_f)}, {"norm_theta_f", to_json(r.norm_theta_f)}, {"ratio", r.ratio}};
}

json to_json(const OracleResult& r)
{
    return json{{"value", complex_to_json(r.value)},
                {"node_count", r.node_count},
                {"doubling_change", r.doubling_change}};
}

std::string criterion_csv(const CriterionReport& r)
{
    std::string out = "k,term,partial_sum\n";
    for (std::size_t k = 0; k < r.terms.size(); ++k)
        out += std::to_string(k) + ',' + format_double(r.terms[k]) + ',' + format_double(r.partial_sums[k]) + '\n';
    return out;
}

std::string bloch_profile_csv(const BlochEstimate& b)
{
    std::string out = "radius,max_value\n";
    for (std::size_t i = 0; i < b.radius_profile.size(); ++i)
        out += format_double(b.grid.radii[i]) + ',' + format_double(b.radius_profile[i]) + '\n';
    return out;
}

std::string decay_csv(const std::vector<double>& norms)
{
    std::string out = "n,norm\n";
    for (std::size_t i = 0; i < norms.size(); ++i)
        out += std::to_string(i + 2) + ',' + format_double(norms[i]) + '\n';
    return out;
}

} // namespace fracops
