#include "fracops/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "fracops/error.hpp"

#ifndef FRACOPS_FIXTURE_DIR
#define FRACOPS_FIXTURE_DIR "fixtures"
#endif

namespace fracops {

namespace {

constexpr double kOracleTol = 1e-8;
constexpr double kIdentityTol = 1e-12;
constexpr double kReductionTol = 1e-12;
constexpr double kFoxWrightTol = 1e-10;
constexpr double kClosedFormTol = 1e-10;
constexpr double kThetaTol = 1e-12;
constexpr double kBetaTol = 1e-12;
constexpr double kDoublingTol = 1e-9;
constexpr double kGoldenTol = 1e-12;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string describe(const OperatorParams& p)
{
    return "beta=" + fmt(p.beta) + " tau=" + fmt(p.tau) + " gamma=" + fmt(p.gamma);
}

double rel_error(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

double coeff_error(const PowerSeries& got, const PowerSeries& want)
{
    double err = 0.0;
    const std::size_t n = std::max(got.order(), want.order());
    for (std::size_t k = 0; k <= n; ++k)
        err = std::max(err, std::abs(got[k] - want[k]) / std::max(1.0, std::abs(want[k])));
    return err;
}

cplx principal_pow(cplx z, double e) { return std::exp(e * std::log(z)); }


std::vector<double> draw_shifts(Rng& rng, std::size_t n)
{
    std::vector<double> v(n);
    for (auto& x : v)
        x = rng.uniform(0.3, 3.0);
    return v;
}

json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write " + path.string());
    out << dump_fixed(j) << '\n';
}

// Numeric tree comparison; mismatches are appended to `out` with their path.
void compare_json(const json& got, const json& want, const std::string& where, double rtol,
                  double& max_err, std::vector<std::string>& out)
{
    if (want.is_number() && got.is_number()) {
        const double a = got.get<double>();
        const double b = want.get<double>();
        const double err = std::abs(a - b) / std::max(1.0, std::abs(b));
        max_err = std::max(max_err, err);
        if (!(err <= rtol))
            out.push_back(where + ": " + fmt(a) + " != golden " + fmt(b));
        return;
    }
    if (got.type() != want.type()) {
        out.push_back(where + ": type differs from golden");
        return;
    }
    if (want.is_array()) {
        if (got.size() != want.size()) {
            out.push_back(where + ": length differs from golden");
            return;
        }
        for (std::size_t i = 0; i < want.size(); ++i)
            compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]", rtol, max_err, out);
        return;
    }
    if (want.is_object()) {
        // Keys present only in the golden (confirmation data) are not recomputed.
        for (const auto& [key, value] : got.items()) {
            if (!want.contains(key)) {
                out.push_back(where + "." + key + ": missing from golden");
                continue;
            }
            compare_json(value, want.at(key), where + "." + key, rtol, max_err, out);
        }
        return;
    }
    if (got != want)
        out.push_back(where + ": differs from golden");
}

// Parameter draws shared by the golden documents; fixed so goldens are stable.
std::vector<OperatorParams> golden_params(std::size_t n)
{
    Rng rng(kDefaultSeed);
    std::vector<OperatorParams> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(draw_params(rng));
    return out;
}

const OperatorParams kClosedFormGoldenParams{0.8, 0.5, 1.0};
constexpr cplx kClosedFormGoldenPoint{0.3, 0.2};

std::vector<SeriesKind> closed_form_kinds()
{
    return {kind::Identity{},
            kind::KoebePower{1.0},
            kind::KoebePower{2.0},
            kind::ExpTimesZ{},
            kind::Kummer{0.7, 1.9},
            kind::HurwitzLerch{1.5, 0.8, 2.5, 1.3, 0.7}};
}

json golden_closed_forms()
{
    json arr = json::array();
    for (const auto& k : closed_form_kinds()) {
        const ClosedForm cf = closed_form_spec(k, kClosedFormGoldenParams);
        json j = to_json(cf);
        j["z"] = complex_to_json(kClosedFormGoldenPoint);
        j["value"] = complex_to_json(cf.eval(kClosedFormGoldenPoint));
        arr.push_back(std::move(j));
    }
    return arr;
}

json golden_bloch(bool confirm)
{
    json arr = json::array();
    const DiskGrid grid = DiskGrid::bloch_default();
    DiskGrid doubled = grid;
    doubled.angles_per_radius *= 2;
    const auto params = golden_params(10);
    for (const auto& named : fixture_family()) {
        if (named.name != "koebe_1" && named.name != "koebe_2" && named.name != "exp_times_z")
            continue;
        for (const auto& p : params) {
            const auto rep = boundedness_equivalence_check(p, named.series, 1.0, WeightSpec::one(), grid);
            json j{{"fixture", named.name},
                   {"params", to_json(p)},
                   {"norm_f", rep.norm_f.norm_estimate},
                   {"norm_theta_f", rep.norm_theta_f.norm_estimate},
                   {"ratio", rep.ratio}};
            if (confirm) {
                const auto fine = boundedness_equivalence_check(p, named.series, 1.0, WeightSpec::one(), doubled);
                j["ratio_doubled_angles"] = fine.ratio;
            }
            arr.push_back(std::move(j));
        }
    }
    return arr;
}

json golden_oracle()
{
    json arr = json::array();
    const auto params = golden_params(2);
    const cplx z{0.35, -0.25};
    for (const auto& named : fixture_family()) {
        for (const auto& p : params) {
            const auto cfg = QuadratureConfig::for_params(p);
            const auto res = oracle_eval_detailed(p, named.series, z, cfg);
            arr.push_back(json{{"fixture", named.name},
                               {"params", to_json(p)},
                               {"z", complex_to_json(z)},
                               {"value", complex_to_json(res.value)},
                               {"node_count", res.node_count}});
        }
    }
    return arr;
}

} // namespace

void SuiteResult::record(double err, const std::string& label)
{
    ++cases;
    if (std::isnan(err))
        err = std::numeric_limits<double>::infinity();
    max_error = std::max(max_error, err);
    if (!(err <= tolerance))
        fail(label + ": error " + fmt(err));
}

void SuiteResult::fail(const std::string& message)
{
    passed = false;
    if (failures.size() < 20)
        failures.push_back(message);
}

OperatorParams draw_params(Rng& rng)
{
    OperatorParams p;
    p.beta = rng.uniform(0.05, 1.0);
    p.tau = p.beta * (1.0 - 0.98 * rng.uniform());
    p.gamma = rng.uniform(0.0, 3.0);
    return p;
}

OperatorParams draw_identity_params(Rng& rng)
{
    OperatorParams p = draw_params(rng);
    p.tau = p.beta;
    return p;
}

cplx draw_point(Rng& rng, double r_min, double r_max)
{
    const double r = rng.uniform(r_min, r_max);
    const double t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    return std::polar(r, t);
}

PowerSeries draw_normalized_series(Rng& rng, std::size_t order)
{
    std::vector<cplx> c(order + 1);
    c[1] = 1.0;
    double scale = 1.0;
    for (std::size_t k = 2; k <= order; ++k) {
        scale *= 0.9;
        c[k] = scale * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    return PowerSeries(std::move(c));
}

cplx hypergeometric_pfq(const std::vector<double>& a, const std::vector<double>& b, cplx z)
{
    cplx term = 1.0;
    cplx sum = 1.0;
    for (std::size_t k = 0; k < 100000; ++k) {
        const double kd = static_cast<double>(k);
        cplx ratio = z / (kd + 1.0);
        for (double x : a)
            ratio *= x + kd;
        for (double x : b)
            ratio /= x + kd;
        term *= ratio;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4)
            return sum;
    }
    throw ConvergenceError("hypergeometric_pfq: no convergence");
}

std::filesystem::path default_fixture_dir()
{
    if (const char* env = std::getenv("FRACOPS_FIXTURES"); env && *env)
        return env;
    return FRACOPS_FIXTURE_DIR;
}

SuiteResult suite_oracle_vs_closed_form(std::uint64_t seed, std::size_t draws)
{
    SuiteResult s{"oracle_vs_closed_form", true, 0, 0.0, kOracleTol, {}};
    Rng rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const OperatorParams p = draw_params(rng);
        const auto v = static_cast<double>(rng.index(7));
        const cplx z = draw_point(rng);
        const std::string label = describe(p) + " v=" + fmt(v);
        try {
            const auto f = PowerSeries::monomial(static_cast<std::size_t>(v));
            const cplx got = oracle_eval(p, f, z, QuadratureConfig::for_params(p));
            const auto img = monomial_transform(p, v);
            s.record(rel_error(got, img.coefficient * principal_pow(z, img.exponent)), label);
        } catch (const std::exception& e) {
            s.fail(label + ": " + e.what());
        }
    }
    return s;
}

SuiteResult suite_derivative_schemes(std::uint64_t seed, std::size_t draws)
{
    SuiteResult s{"derivative_schemes", true, 0, 0.0, kOracleTol, {}};
    Rng rng(seed ^ 0x5bd1e995ULL);
    const auto family = fixture_family();
    for (std::size_t i = 0; i < draws; ++i) {
        const OperatorParams p = draw_params(rng);
        const auto& f = family[i % family.size()];
        const cplx z = draw_point(rng, 0.05, 0.6);
        const std::string label = f.name + " " + describe(p);
        try {
            const cplx a = oracle_eval(p, f.series, z, QuadratureConfig::for_params(p));
            const cplx b = oracle_eval(p, f.series, z,
                                       QuadratureConfig::for_params(p, DerivativeScheme::complex_step));
            s.record(std::abs(a - b) / std::max(1.0, std::abs(a)), label);
        } catch (const std::exception& e) {
            s.fail(label + ": " + e.what());
        }
    }
    return s;
}

SuiteResult suite_identity(std::uint64_t seed, std::size_t draws, const std::vector<PowerSeries>& fixtures)
{
    SuiteResult s{"identity", true, 0, 0.0, kIdentityTol, {}};
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto check = [&](const OperatorParams& p, const PowerSeries& f, const std::string& label) {
        const OperatorImage img = apply_operator(p, f);
        // The coefficient series is unchanged; the shared prefactor is z^gamma.
        s.record(std::max(coeff_error(img.series, f), std::abs(img.prefactor_power - p.gamma)), label + " apply");
        if (f.is_normalized())
            s.record(coeff_error(theta_normalize(p, f), f), label + " theta");
    };
    for (std::size_t i = 0; i < draws; ++i) {
        const OperatorParams p = draw_identity_params(rng);
        check(p, draw_normalized_series(rng), "draw " + std::to_string(i) + " " + describe(p));
    }
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const OperatorParams p = draw_identity_params(rng);
        check(p, fixtures[i], "fixture " + std::to_string(i) + " " + describe(p));
    }
    return s;
}

SuiteResult suite_reduction(std::uint64_t seed, std::size_t draws)
{
    SuiteResult s{"reduction", true, 0, 0.0, kReductionTol, {}};
    Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    for (std::size_t i = 0; i < draws; ++i) {
        OperatorParams p = draw_params(rng);
        p.gamma = 0.0;
        const double v = static_cast<double>(rng.index(13));
        const double want = std::exp(std::lgamma(v + p.beta) + std::lgamma(p.tau) - std::lgamma(v + p.tau) -
                                     std::lgamma(p.beta));
        const auto img = monomial_transform(p, v);
        s.record(std::abs(img.coefficient - want) / want + std::abs(img.exponent - v),
                 describe(p) + " v=" + fmt(v));
    }
    return s;
}

SuiteResult suite_fox_wright_vs_pfq(std::uint64_t seed, std::size_t specs)
{
    SuiteResult s{"fox_wright_vs_pfq", true, 0, 0.0, kFoxWrightTol, {}};
    Rng rng(seed ^ 0x165667b19e3779f9ULL);
    for (std::size_t i = 0; i < specs; ++i) {
        const std::size_t q = rng.index(3);
        const std::size_t p = 1 + rng.index(std::min<std::size_t>(3, q + 1));
        const auto a = draw_shifts(rng, p);
        const auto b = draw_shifts(rng, q);
        const cplx z = draw_point(rng, 0.05, 0.5);
        FoxWrightSpec spec;
        double scale = 1.0;
        for (double x : a) {
            spec.upper.push_back({x, 1.0});
            scale *= std::tgamma(x);
        }
        for (double x : b) {
            spec.lower.push_back({x, 1.0});
            scale /= std::tgamma(x);
        }
        const std::string label = std::to_string(p) + "Psi" + std::to_string(q) + " spec " + std::to_string(i);
        const auto out = fox_wright_eval(spec, z, 1e-16);
        if (!out.authoritative()) {
            s.fail(label + ": status " + std::string(to_string(out.status)));
            continue;
        }
        s.record(rel_error(out.value, scale * hypergeometric_pfq(a, b, z)), label);
    }
    return s;
}

SuiteResult suite_closed_forms(std::uint64_t seed, std::size_t param_draws)
{
    SuiteResult s{"closed_forms", true, 0, 0.0, kClosedFormTol, {}};
    Rng rng(seed ^ 0x27d4eb2f165667c5ULL);
    std::vector<cplx> points;
    for (double r : {0.1, 0.3, 0.5})
        for (double t : {0.0, 2.0, -2.6})
            points.push_back(std::polar(r, t));

    for (std::size_t d = 0; d < param_draws; ++d) {
        const OperatorParams p = draw_params(rng);
        for (const auto& k : closed_form_kinds()) {
            const std::string label = kind_name(k) + " " + describe(p);
            try {
                const ClosedForm cf = closed_form_spec(k, p);
                const OperatorImage img = apply_operator(p, builtin_series(k, 128));
                for (cplx z : points)
                    s.record(rel_error(cf.eval(z), img.eval(z)), label);
            } catch (const std::exception& e) {
                s.fail(label + ": " + e.what());
            }
        }
        // 1F1(a; a; z) = e^z, so the Kummer form must match the z e^z form.
        const double a = rng.uniform(0.5, 3.0);
        try {
            const ClosedForm kum = closed_form_spec(kind::Kummer{a, a}, p);
            const ClosedForm ez = closed_form_spec(kind::ExpTimesZ{}, p);
            for (cplx z : points)
                s.record(rel_error(kum.eval(z), ez.eval(z)), "kummer(a,a) " + describe(p));
        } catch (const std::exception& e) {
            s.fail("kummer(a,a) " + describe(p) + ": " + e.what());
        }
    }
    return s;
}

SuiteResult suite_theta_equivalence(std::uint64_t seed, std::size_t draws)
{
    SuiteResult s{"theta_equivalence", true, 0, 0.0, kThetaTol, {}};
    Rng rng(seed ^ 0x85ebca77c2b2ae63ULL);
    for (std::size_t i = 0; i < draws; ++i) {
        const OperatorParams p = draw_params(rng);
        const PowerSeries f = draw_normalized_series(rng, 64);
        const PowerSeries viaKernel = hadamard(theta_kernel_series(p, 64), f);
        s.record(coeff_error(viaKernel, theta_normalize(p, f)), describe(p));
    }
    return s;
}

SuiteResult suite_quadrature(const std::vector<PowerSeries>& fixtures, std::uint64_t seed, std::size_t draws)
{
    SuiteResult s{"quadrature", true, 0, 0.0, kBetaTol, {}};
    Rng rng(seed ^ 0xd6e8feb86659fd93ULL);
    for (std::size_t i = 0; i < draws; ++i) {
        const OperatorParams p = draw_params(rng);
        const double bp = (p.beta - 1.0) / (p.gamma + 1.0);
        const double want = beta_fn(bp + 1.0, 1.0 - p.beta + p.tau).real();
        const cplx got = inner_integral(p, PowerSeries::monomial(0), draw_point(rng), 64);
        s.record(std::abs(got - want) / want, "f=1 " + describe(p));
    }
    // Node doubling stability is held to its own tolerance.
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const OperatorParams p = draw_params(rng);
        const cplx z = draw_point(rng, 0.05, 0.6);
        const std::string label = "doubling fixture " + std::to_string(i) + " " + describe(p);
        try {
            const auto r = oracle_eval_detailed(p, fixtures[i], z, QuadratureConfig::for_params(p));
            ++s.cases;
            s.max_error = std::max(s.max_error, r.doubling_change * (kBetaTol / kDoublingTol));
            if (!(r.doubling_change <= kDoublingTol))
                s.fail(label + ": change " + fmt(r.doubling_change));
        } catch (const std::exception& e) {
            s.fail(label + ": " + e.what());
        }
    }
    return s;
}

std::vector<NamedSeries> fixture_family()
{
    return {{"identity", builtin_series(kind::Identity{})},
            {"koebe_1", builtin_series(kind::KoebePower{1.0})},
            {"koebe_2", builtin_series(kind::KoebePower{2.0})},
            {"exp_times_z", builtin_series(kind::ExpTimesZ{})},
            {"kummer", builtin_series(kind::Kummer{0.7, 1.9})},
            {"hurwitz_lerch", builtin_series(kind::HurwitzLerch{1.5, 0.8, 2.5, 1.3, 1.0})}};
}

std::vector<NamedSeries> load_fixture_series(const std::filesystem::path& dir)
{
    const auto sdir = dir / "series";
    if (!std::filesystem::is_directory(sdir))
        throw DomainError("fixture directory " + sdir.string() + " not found");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(sdir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<NamedSeries> out;
    for (const auto& f : files)
        out.push_back({f.stem().string(), load_series_file(f)});
    return out;
}

void write_fixtures(const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir / "series");
    for (const auto& named : fixture_family())
        save_series_file(dir / "series" / (named.name + ".json"), named.series);
    write_json(dir / "golden_closed_forms.json", golden_closed_forms());
    write_json(dir / "golden_bloch_equivalence.json", golden_bloch(true));
    write_json(dir / "golden_oracle.json", golden_oracle());
}

SuiteResult suite_fixtures(const std::filesystem::path& dir)
{
    SuiteResult s{"fixtures", true, 0, 0.0, kGoldenTol, {}};
    try {
        const auto family = fixture_family();
        for (const auto& loaded : load_fixture_series(dir)) {
            ++s.cases;
            const auto match = std::find_if(family.begin(), family.end(),
                                             [&](const NamedSeries& n) { return n.name == loaded.name; });
            if (match == family.end())
                continue;
            const double err = coeff_error(loaded.series, match->series);
            s.max_error = std::max(s.max_error, err);
            if (!(err <= kGoldenTol))
                s.fail("series/" + loaded.name + ".json: coefficients differ from the builtin (" + fmt(err) + ")");
        }
    } catch (const std::exception& e) {
        s.fail(e.what());
    }

    const std::pair<const char*, json (*)()> goldens[] = {
        {"golden_closed_forms.json", golden_closed_forms},
        {"golden_bloch_equivalence.json", [] { return golden_bloch(false); }},
        {"golden_oracle.json", golden_oracle},
    };
    for (const auto& [file, make] : goldens) {
        try {
            const json want = read_json(dir / file);
            std::vector<std::string> diffs;
            compare_json(make(), want, file, kGoldenTol, s.max_error, diffs);
            ++s.cases;
            for (const auto& d : diffs)
                s.fail(d);
        } catch (const std::exception& e) {
            s.fail(std::string(file) + ": " + e.what());
        }
    }
    return s;
}

bool VerifyReport::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verify(const VerifyConfig& cfg)
{
    VerifyReport r;
    r.seed = cfg.seed;
    r.draws = cfg.draws;
    const auto dir = cfg.fixture_dir.empty() ? default_fixture_dir() : cfg.fixture_dir;

    std::vector<PowerSeries> fixtures;
    for (const auto& n : fixture_family())
        fixtures.push_back(n.series);

    r.suites.push_back(suite_oracle_vs_closed_form(cfg.seed, cfg.draws));
    r.suites.push_back(suite_derivative_schemes(cfg.seed, std::max<std::size_t>(cfg.draws / 5, 6)));
    r.suites.push_back(suite_identity(cfg.seed, cfg.draws, fixtures));
    r.suites.push_back(suite_reduction(cfg.seed, cfg.draws));
    r.suites.push_back(suite_fox_wright_vs_pfq(cfg.seed, std::max<std::size_t>(cfg.draws / 2, 20)));
    r.suites.push_back(suite_closed_forms(cfg.seed, 3));
    r.suites.push_back(suite_theta_equivalence(cfg.seed, std::max<std::size_t>(cfg.draws / 2, 20)));
    r.suites.push_back(suite_quadrature(fixtures, cfg.seed, std::max<std::size_t>(cfg.draws / 5, 10)));
    r.suites.push_back(suite_fixtures(dir));
    return r;
}

json to_json(const SuiteResult& s)
{
    return json{{"name", s.name},
                {"passed", s.passed},
                {"cases", s.cases},
                {"max_error", s.max_error},
                {"tolerance", s.tolerance},
                {"failures", s.failures}};
}

json to_json(const VerifyReport& r)
{
    json suites = json::array();
    for (const auto& s : r.suites)
        suites.push_back(to_json(s));
    return json{{"seed", r.seed}, {"draws", r.draws}, {"passed", r.passed()}, {"suites", std::move(suites)}};
}

} // namespace fracops
