#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef FRACOPS_CLI
#error "FRACOPS_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(FRACOPS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("transform of a monomial")
{
    const auto r = run("transform --beta 1 --tau 0.5 --gamma 0 --monomial 1");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficient"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(j["exponent"].get<double>() == 1.0);
}

TEST_CASE("transform with tau = beta keeps the coefficients")
{
    const auto r = run("transform --beta 0.5 --tau 0.5 --gamma 3 --builtin koebe --alpha 1 --order 10");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& c = j["coefficients"];
    REQUIRE(c.size() == 11);
    for (std::size_t k = 1; k < c.size(); ++k)
        CHECK(c[k][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parameter window violations exit with 2")
{
    CHECK(run("transform --beta 0.2 --tau 0.9 --monomial 1").code == 2);
    CHECK(run("criteria --theorem 7 --beta 0.5 --tau 0.5").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("bloch --f identity --mu -1").code == 2);
}

TEST_CASE("criteria report")
{
    const auto r = run("criteria --theorem 5 --beta 0.5 --tau 0.5 --gamma 0");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "Inconclusive-Divergent");
    CHECK(j["series_status"] == "Divergent");

    const auto csv = run("criteria --theorem 6 --beta 0.5 --tau 0.5 --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("k,term,partial_sum\n0,", 0) == 0);
}

TEST_CASE("bloch reports")
{
    const auto r = run("bloch --f identity --mu 1 --w one");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["norm_estimate"].get<double>() == doctest::Approx(1.0).epsilon(0.05));

    const auto c = run("bloch --compactness --nmax 64 --beta .5 --tau .5");
    REQUIRE(c.code == 0);
    const auto cj = nlohmann::json::parse(c.out);
    CHECK(cj["norms"].size() == 63);
    CHECK(cj["decreasing_from_n"].get<int>() == 2);

    const auto csv = run("bloch --f koebe --alpha 1 --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("radius,max_value\n", 0) == 0);
}

TEST_CASE("verify is deterministic and exits 0")
{
    const auto a = run("verify --seed 7 --draws 30");
    const auto b = run("verify --seed 7 --draws 30");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["passed"] == true);
}

TEST_CASE("verify names a corrupted fixture and exits 1")
{
    const std::string dir = "fracops_cli_corrupt_fixtures";
    REQUIRE(run("verify --write-fixtures " + dir).code == 0);
    if (FILE* f = std::fopen((dir + "/series/exp_times_z.json").c_str(), "w")) {
        std::fputs("{\"coeffs\": [[0, 0], [1, \"x\"]], \"order\": 1}", f);
        std::fclose(f);
    }
    const auto r = run("verify --draws 10 --fixtures " + dir);
    CHECK(r.code == 1);
    CHECK(r.out.find("exp_times_z.json") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("other subcommands")
{
    const auto fw = run("foxwright --upper 1:1 --lower 1:1 --z 0.5");
    REQUIRE(fw.code == 0);
    CHECK(nlohmann::json::parse(fw.out)["status"] == "Converged");

    const auto o = run("oracle --beta 0.8 --tau 0.5 --gamma 1 --builtin koebe --alpha 1 --z 0.2");
    REQUIRE(o.code == 0);
    const auto cf = run("closed-form --beta 0.8 --tau 0.5 --gamma 1 --kind koebe --alpha 1 --z 0.2");
    REQUIRE(cf.code == 0);
    const double ov = nlohmann::json::parse(o.out)["value"][0].get<double>();
    const double cv = nlohmann::json::parse(cf.out)["value"][0].get<double>();
    CHECK(ov == doctest::Approx(cv).epsilon(1e-8));

    const auto g = run("geometry --f koebe --alpha 2 --test convex --auto-order");
    REQUIRE(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["result"]["no_violation_on_grid"] == false);

    const auto s = run("series --builtin exp_times_z --order 4");
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["order"] == 4);
}
