// Batch front end.  Exit codes: 0 success, 1 verification or numerical
// failure, 2 usage or parameter error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fracops/bloch.hpp"
#include "fracops/error.hpp"
#include "fracops/geometry.hpp"
#include "fracops/json_io.hpp"
#include "fracops/oracle.hpp"
#include "fracops/verify.hpp"

namespace {

using namespace fracops;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ParamOpts {
    double beta = 1.0;
    double tau = 1.0;
    double gamma = 0.0;

    OperatorParams get() const
    {
        OperatorParams p{beta, tau, gamma};
        p.validate();
        return p;
    }
};

void add_params(CLI::App* cmd, ParamOpts& o, bool required = true)
{
    auto* b = cmd->add_option("--beta", o.beta, "beta in (0, 1]");
    auto* t = cmd->add_option("--tau", o.tau, "tau in (0, 1], 0 <= beta - tau < 1");
    cmd->add_option("--gamma", o.gamma, "gamma >= 0")->capture_default_str();
    if (required) {
        b->required();
        t->required();
    }
}

struct SeriesOpts {
    std::string builtin = "identity";
    std::string file;
    double alpha = 2.0;
    double lambda = 1.0;
    double rho = 1.0;
    double s = 1.0;
    double a = 1.0;
    std::size_t order = kDefaultOrder;

    SeriesKind kind() const
    {
        if (builtin == "identity")
            return kind::Identity{};
        if (builtin == "koebe")
            return kind::KoebePower{alpha};
        if (builtin == "exp_times_z")
            return kind::ExpTimesZ{};
        if (builtin == "kummer")
            return kind::Kummer{alpha, lambda};
        if (builtin == "hurwitz_lerch")
            return kind::HurwitzLerch{alpha, lambda, rho, s, a};
        throw DomainError("unknown builtin series '" + builtin + "'");
    }

    PowerSeries get() const { return file.empty() ? builtin_series(kind(), order) : load_series_file(file); }
};

void add_series(CLI::App* cmd, SeriesOpts& o, const std::string& flag = "--builtin")
{
    cmd->add_option(flag, o.builtin, "identity | koebe | exp_times_z | kummer | hurwitz_lerch")
        ->capture_default_str();
    cmd->add_option("--series", o.file, "series fixture JSON instead of a builtin");
    cmd->add_option("--alpha", o.alpha, "koebe exponent / kummer, hurwitz-lerch alpha")->capture_default_str();
    cmd->add_option("--lambda", o.lambda, "kummer, hurwitz-lerch lambda")->capture_default_str();
    cmd->add_option("--rho", o.rho, "hurwitz-lerch rho")->capture_default_str();
    cmd->add_option("--s", o.s, "hurwitz-lerch s")->capture_default_str();
    cmd->add_option("--a", o.a, "hurwitz-lerch a")->capture_default_str();
    cmd->add_option("--order", o.order, "truncation order")->capture_default_str();
}

cplx parse_complex(const std::string& text)
{
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    std::istringstream in(text);
    in >> re;
    if (!in)
        throw DomainError("cannot parse complex number '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw DomainError("complex numbers are written re or re,im: '" + text + "'");
    }
    return {re, im};
}

// "a:A,b:B" -> Fox-Wright parameter list.
std::vector<FoxWrightParam> parse_fox_params(const std::string& text)
{
    std::vector<FoxWrightParam> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("Fox-Wright parameters are written shift:weight, got '" + item + "'");
        out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    }
    return out;
}

void emit(const json& j) { std::cout << dump_fixed(j) << '\n'; }

bool csv_format(const std::string& format)
{
    if (format != "json" && format != "csv")
        throw DomainError("--format must be json or csv");
    return format == "csv";
}

WeightSpec make_weight(const std::string& name, double alpha_w, double scale)
{
    WeightSpec w;
    if (name == "one")
        w = WeightSpec::one();
    else if (name == "power")
        w = WeightSpec::power_weight(alpha_w);
    else if (name == "log")
        w = WeightSpec::logarithmic();
    else
        throw DomainError("--w must be one, power or log");
    w.scale = scale;
    w.validate();
    return w;
}

DiskGrid make_grid(const std::string& name, const DiskGrid& fallback)
{
    if (name == "default")
        return fallback;
    if (name == "bloch")
        return DiskGrid::bloch_default();
    if (name == "refined")
        return bloch_refined_grid();
    if (name == "geometry")
        return DiskGrid::geometry_default();
    throw DomainError("--grid must be default, bloch, refined or geometry");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fracops: fractional operator numerics"};
    app.require_subcommand(1);

    ParamOpts params;
    SeriesOpts series;
    std::string format = "json";
    std::string z_text = "0.3";

    // transform
    auto* transform = app.add_subcommand("transform", "Image of a monomial or a series under the operator");
    add_params(transform, params, false);
    add_series(transform, series);
    std::optional<double> monomial;
    transform->add_option("--monomial", monomial, "power v >= 0 of the monomial z^v");
    bool theta = false;
    transform->add_flag("--theta", theta, "apply the class-A normalization instead");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the self-verification suites");
    VerifyConfig vcfg;
    std::string fixture_dir;
    std::string write_dir;
    verify->add_option("--seed", vcfg.seed, "seed for randomized draws")->capture_default_str();
    verify->add_option("--draws", vcfg.draws, "draws per randomized suite")->capture_default_str();
    verify->add_option("--fixtures", fixture_dir, "fixture directory (default: FRACOPS_FIXTURES or source tree)");
    verify->add_option("--write-fixtures", write_dir, "regenerate fixtures and goldens into this directory");

    // criteria
    auto* criteria = app.add_subcommand("criteria", "Coefficient-sum univalence criteria for Theta");
    add_params(criteria, params);
    int theorem = 5;
    std::size_t max_terms = 2000;
    criteria->add_option("--theorem", theorem, "5 (class S input) or 6 (class K input)")
        ->check(CLI::IsMember({5, 6}))
        ->capture_default_str();
    criteria->add_option("--max-terms", max_terms)->capture_default_str();
    criteria->add_option("--format", format, "json | csv")->capture_default_str();

    // bloch
    auto* bloch = app.add_subcommand("bloch", "Bloch-type norm estimates");
    add_series(bloch, series, "--f");
    add_params(bloch, params, false);
    double mu = 1.0;
    std::string weight = "one";
    double alpha_w = 0.0;
    double wscale = 1.0;
    std::string grid_name = "default";
    bool classical = false;
    bool compactness = false;
    bool equivalence = false;
    std::size_t nmax = 64;
    bloch->add_option("--mu", mu)->capture_default_str();
    bloch->add_option("--w", weight, "one | power | log")->capture_default_str();
    bloch->add_option("--alpha-w", alpha_w, "exponent of the power weight")->capture_default_str();
    bloch->add_option("--w-scale", wscale, "positive multiplier on the weight")->capture_default_str();
    bloch->add_option("--grid", grid_name, "default | bloch | refined | geometry")->capture_default_str();
    bloch->add_flag("--classical", classical, "(1-|z|^2)|f'| instead of the weighted form");
    bloch->add_flag("--compactness", compactness, "norms of Theta(z^n/n), n = 2..nmax");
    bloch->add_flag("--equivalence", equivalence, "weighted norms of f and Theta f");
    bloch->add_option("--nmax", nmax)->capture_default_str();
    bloch->add_option("--format", format, "json | csv")->capture_default_str();

    // foxwright
    auto* fox = app.add_subcommand("foxwright", "Evaluate a Fox-Wright series");
    std::string upper;
    std::string lower;
    double tol = 1e-15;
    fox->add_option("--upper", upper, "a1:A1,a2:A2,...")->required();
    fox->add_option("--lower", lower, "b1:B1,...");
    fox->add_option("--z", z_text, "re or re,im")->capture_default_str();
    fox->add_option("--tol", tol)->capture_default_str();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Quadrature evaluation of the operator at one point");
    add_params(oracle, params);
    add_series(oracle, series);
    std::size_t nodes = 64;
    std::string scheme = "analytic";
    oracle->add_option("--z", z_text, "re or re,im")->capture_default_str();
    oracle->add_option("--nodes", nodes)->capture_default_str();
    oracle->add_option("--scheme", scheme, "analytic | complex_step")->capture_default_str();

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "Closed-form image of a builtin series");
    add_params(closed, params);
    add_series(closed, series, "--kind");
    std::optional<std::string> closed_z;
    closed->add_option("--z", closed_z, "also evaluate at this point");

    // geometry
    auto* geometry = app.add_subcommand("geometry", "Sampled starlike / convex screens and coefficient bounds");
    add_series(geometry, series, "--f");
    std::string test = "starlike";
    double lambda = 0.0;
    bool auto_order = false;
    geometry->add_option("--test", test, "starlike | convex | bieberbach-starlike | bieberbach-convex")
        ->capture_default_str();
    geometry->add_option("--lambda-order", lambda, "order lambda in [0, 1)")->capture_default_str();
    geometry->add_flag("--auto-order", auto_order, "size the truncation for the grid's largest radius");
    geometry->add_option("--grid", grid_name, "default | bloch | refined | geometry")->capture_default_str();

    // series
    auto* series_cmd = app.add_subcommand("series", "Write a builtin series as a fixture document");
    add_series(series_cmd, series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*transform) {
            const OperatorParams p = params.get();
            if (monomial) {
                if (*monomial < 0.0)
                    throw DomainError("--monomial must be >= 0");
                emit(to_json(monomial_transform(p, *monomial)));
            } else if (theta) {
                emit(series_to_json(theta_normalize(p, series.get())));
            } else {
                emit(to_json(apply_operator(p, series.get())));
            }
            return kExitOk;
        }
        if (*verify) {
            if (!write_dir.empty()) {
                write_fixtures(write_dir);
                emit(json{{"written", write_dir}});
                return kExitOk;
            }
            vcfg.fixture_dir = fixture_dir;
            const VerifyReport report = run_verify(vcfg);
            emit(to_json(report));
            return report.passed() ? kExitOk : kExitFailure;
        }
        if (*criteria) {
            const bool csv = csv_format(format);
            const auto mode = theorem == 5 ? CriterionMode::theorem5_S : CriterionMode::theorem6_K;
            const CriterionReport rep = univalence_criterion(params.get(), mode, max_terms);
            if (csv)
                std::cout << criterion_csv(rep);
            else
                emit(to_json(rep));
            return kExitOk;
        }
        if (*bloch) {
            const bool csv = csv_format(format);
            const DiskGrid grid = make_grid(grid_name, DiskGrid::bloch_default());
            const WeightSpec w = make_weight(weight, alpha_w, wscale);
            if (compactness) {
                const auto norms = compactness_decay_check(params.get(), nmax, mu, w, grid);
                if (csv) {
                    std::cout << decay_csv(norms);
                    return kExitOk;
                }
                std::size_t tail_start = norms.size();
                while (tail_start > 1 && norms[tail_start - 1] < norms[tail_start - 2])
                    --tail_start;
                emit(json{{"params", to_json(params.get())},
                          {"mu", mu},
                          {"weight", to_string(w.kind)},
                          {"n_first", 2},
                          {"norms", norms},
                          {"decreasing_from_n", tail_start + 1},
                          {"last_over_first", norms.back() / norms.front()}});
                return kExitOk;
            }
            if (equivalence) {
                const auto rep = boundedness_equivalence_check(params.get(), series.get(), mu, w, grid);
                emit(to_json(rep));
                return kExitOk;
            }
            const PowerSeries f = series.get();
            const BlochEstimate est = classical ? bloch_norm_classical(f, grid) : bloch_norm_weighted(f, mu, w, grid);
            if (csv)
                std::cout << bloch_profile_csv(est);
            else
                emit(to_json(est));
            return kExitOk;
        }
        if (*fox) {
            const FoxWrightSpec spec{parse_fox_params(upper), lower.empty() ? std::vector<FoxWrightParam>{}
                                                                            : parse_fox_params(lower)};
            spec.validate();
            json j = to_json(fox_wright_eval(spec, parse_complex(z_text), tol));
            j["spec"] = to_json(spec);
            emit(j);
            return kExitOk;
        }
        if (*oracle) {
            const OperatorParams p = params.get();
            if (scheme != "analytic" && scheme != "complex_step")
                throw DomainError("--scheme must be analytic or complex_step");
            const auto cfg = QuadratureConfig::for_params(
                p, scheme == "analytic" ? DerivativeScheme::analytic_under_integral : DerivativeScheme::complex_step,
                nodes);
            emit(to_json(oracle_eval_detailed(p, series.get(), parse_complex(z_text), cfg)));
            return kExitOk;
        }
        if (*closed) {
            const ClosedForm cf = closed_form_spec(series.kind(), params.get());
            json j = to_json(cf);
            if (closed_z) {
                const cplx z = parse_complex(*closed_z);
                j["z"] = complex_to_json(z);
                j["value"] = complex_to_json(cf.eval(z));
            }
            emit(j);
            return kExitOk;
        }
        if (*geometry) {
            const DiskGrid grid = make_grid(grid_name, DiskGrid::geometry_default());
            if (auto_order && series.file.empty())
                series.order = order_for_radius(grid.radii.back());
            const PowerSeries f = series.get();
            json j{{"test", test}, {"order", f.order()}};
            if (test == "starlike" || test == "convex") {
                if (!(lambda >= 0.0 && lambda < 1.0))
                    throw DomainError("--lambda-order must lie in [0, 1)");
                j["lambda"] = lambda;
                j["result"] = to_json(test == "starlike" ? starlike_order(f, lambda, grid)
                                                         : convex_order(f, lambda, grid));
            } else if (test == "bieberbach-starlike" || test == "bieberbach-convex") {
                j["result"] = to_json(bieberbach_screen(
                    f, test == "bieberbach-starlike" ? BieberbachMode::starlike_bound : BieberbachMode::convex_bound));
            } else {
                throw DomainError("unknown --test '" + test + "'");
            }
            emit(j);
            return kExitOk;
        }
        if (*series_cmd) {
            emit(series_to_json(series.get()));
            return kExitOk;
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
