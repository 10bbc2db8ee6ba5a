#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weier/arith.hpp"
#include "weier/cli.hpp"

using namespace weier;
using nlohmann::json;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &content)
{
    const auto path = std::filesystem::temp_directory_path() / ("weier_test_" + name);
    std::ofstream(path) << content;
    return path;
}

bool bits_equal(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

} // namespace

TEST_CASE("eval f high on the imaginary axis")
{
    const Outcome o = run({"eval", "f", "--s", "0", "--t", "1/2", "--tau", "10i", "--format", "json"});
    REQUIRE(o.code == 0);
    const json j = json::parse(o.out);
    CHECK(j["command"] == "eval f");
    const auto &row = j["rows"][0];
    CHECK(std::abs(row["value"]["re"].get<double>() - 2 * pi * pi / 3) < 1e-9);
    CHECK(row["inputs"].contains("plan.tail_bound"));
}

TEST_CASE("eval wp reproduces the golden value")
{
    const Outcome o = run({"eval", "wp", "--omega1", "i", "--omega2", "1", "--z", "1/2", "--format", "json"});
    REQUIRE(o.code == 0);
    const auto row = json::parse(o.out)["rows"][0];
    const double err = row["error"].get<double>();
    CHECK(std::abs(row["value"]["re"].get<double>() - 6.8751858180203728275) <= err);
    CHECK(err <= 1e-8);
}

TEST_CASE("eval h and hU")
{
    Outcome o = run({"eval", "h", "--r", "2", "--s", "0", "--t", "1/3", "--tau", "i", "--format", "json"});
    REQUIRE(o.code == 0);
    auto row = json::parse(o.out)["rows"][0];
    CHECK(row["error"].get<double>() <= 1e-8);
    CHECK(std::abs(row["value"]["re"].get<double>() - 5.5023673016307543438) <= row["error"].get<double>());

    o = run({"eval", "hU", "--label", "0,1/3", "--label", "0,1/3", "--label", "0,-2/3", "--tau", "i", "--format",
             "json"});
    REQUIRE(o.code == 0);
    row = json::parse(o.out)["rows"][0];
    CHECK(std::abs(row["value"]["re"].get<double>() - 5.5023673016307543438) <= row["error"].get<double>());
}

TEST_CASE("printed values round-trip bit for bit")
{
    const Outcome o = run({"eval", "zeta", "--tau", "0.5+1.2i", "--z", "0.3-0.2i", "--format", "json"});
    REQUIRE(o.code == 0);
    const auto row = json::parse(o.out)["rows"][0];
    const CertifiedValue direct = wzeta_lattice(Lattice(Complex(0.5, 1.2), 1.0), Complex(0.3, -0.2));
    CHECK(bits_equal(row["value"]["re"].get<double>(), direct.value.real()));
    CHECK(bits_equal(row["value"]["im"].get<double>(), direct.value.imag()));
    CHECK(bits_equal(row["error"].get<double>(), direct.error));
    const Complex reparsed = parse_complex(row["note"].get<std::string>());
    CHECK(bits_equal(reparsed.real(), direct.value.real()));
    CHECK(bits_equal(reparsed.imag(), direct.value.imag()));
}

TEST_CASE("usage and domain errors are machine readable")
{
    Outcome o = run({"eval", "f", "--s", "0.5", "--t", "0", "--tau", "i"});
    CHECK(o.code == 2);
    CHECK(json::parse(o.err)["error"]["kind"] == "domain");

    o = run({"eval", "f", "--s", "1", "--t", "0", "--tau", "i"});
    CHECK(o.code == 2);

    o = run({"eval", "wp", "--tau", "i", "--z", "1+i"});
    CHECK(o.code == 2);
    CHECK(json::parse(o.err)["error"]["kind"] == "pole");

    o = run({"bogus"});
    CHECK(o.code == 2);
    CHECK(json::parse(o.err)["error"]["kind"] == "usage");

    o = run({"eval", "f", "--t", "1/2", "--tau", "i", "--tol", "1e-13"});
    CHECK(o.code == 2);

    o = run({"verify", "nonexistent"});
    CHECK(o.code == 2);
}

TEST_CASE("verify output is deterministic and seed dependent")
{
    const std::vector<std::string> args{"verify", "defect-gstt", "--seed", "7", "--format", "json", "--jobs", "1"};
    const Outcome a = run(args);
    std::vector<std::string> parallel = args;
    parallel.back() = "3";
    const Outcome b = run(parallel);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Outcome c = run({"verify", "defect-gstt", "--seed", "8", "--format", "json"});
    CHECK(c.out != a.out);
}

TEST_CASE("verify zeta2 passes")
{
    const Outcome o = run({"verify", "zeta2", "--format", "json"});
    CHECK(o.code == 0);
    bool saw = false;
    const json doc = json::parse(o.out);
    for (const auto &row : doc["rows"]) {
        if (row["id"] == "implied-zeta2/Y=20") {
            saw = true;
            CHECK(row["residual"].get<double>() < 1e-8);
        }
    }
    CHECK(saw);
}

TEST_CASE("table rows")
{
    SUBCASE("s = 0 labels")
    {
        const auto grid = temp_file("grid1", "f 0 1/2\nf 0 1/3\n");
        const Outcome o = run({"table", "--grid", grid.string(), "--y", "20", "--format", "json"});
        CHECK(o.code == 0);
        const auto rows = json::parse(o.out)["rows"];
        REQUIRE(rows.size() == 2);
        for (const auto &row : rows) {
            CHECK(row["residual"].get<double>() < 1e-6);
        }
    }
    SUBCASE("empty grid")
    {
        const auto grid = temp_file("grid2", "# nothing\n\n");
        const Outcome o = run({"table", "--grid", grid.string(), "--format", "json"});
        CHECK(o.code == 0);
        CHECK(json::parse(o.out)["rows"].empty());
    }
    SUBCASE("residuals shrink with Y, rows ordered by ascending Y")
    {
        const auto grid = temp_file("grid3", "h 0 1/3 2\n");
        const Outcome o = run({"table", "--grid", grid.string(), "--y", "20,5,10", "--format", "json"});
        const auto rows = json::parse(o.out)["rows"];
        REQUIRE(rows.size() == 3);
        CHECK(rows[0]["inputs"]["Y"] == "5");
        CHECK(rows[2]["inputs"]["Y"] == "20");
        CHECK(rows[0]["residual"].get<double>() > rows[1]["residual"].get<double>());
        CHECK(rows[1]["residual"].get<double>() >= rows[2]["residual"].get<double>());
    }
    SUBCASE("bad labels become error rows")
    {
        const auto grid = temp_file("grid4", "f 0 1/2\nf 1 0\nf 0 0.5\n");
        const Outcome o = run({"table", "--grid", grid.string(), "--format", "json"});
        CHECK(o.code == 1);
        const auto rows = json::parse(o.out)["rows"];
        REQUIRE(rows.size() == 3);
        CHECK(rows[0]["status"] == "pass");
        CHECK(rows[1]["status"] == "error");
        CHECK(rows[2]["status"] == "error");
    }
    SUBCASE("unreadable file")
    {
        const Outcome o = run({"table", "--grid", "/nonexistent/grid", "--format", "json"});
        CHECK(o.code == 1);
        CHECK(json::parse(o.out)["rows"][0]["status"] == "error");
    }
}

TEST_CASE("CSV output quotes fields")
{
    const auto grid = temp_file("grid5", "f 0 1/2\n");
    const Outcome o = run({"table", "--grid", grid.string(), "--format", "csv"});
    CHECK(o.code == 0);
    CHECK(o.out.rfind("id,inputs,re,im,error,residual,bound,status,note\r\n", 0) == 0);
    CHECK(o.out.find("\"form=f(0,1/2);Y=20;closed=") != std::string::npos);
}

TEST_CASE("configuration precedence")
{
    const auto config = temp_file("config.toml", "tol = 1e-4\nseed = 3\n");
    auto tolerance = [](const Outcome &o) { return json::parse(o.out)["config"]["tolerance"].get<double>(); };
    const std::vector<std::string> base{"eval", "f", "--t", "1/2", "--tau", "i", "--format", "json"};

    ::setenv("WEIER_TOL", "1e-6", 1);
    Outcome o = run(base);
    CHECK(tolerance(o) == 1e-6);

    auto with_config = base;
    with_config.insert(with_config.end(), {"--config", config.string()});
    o = run(with_config);
    CHECK(tolerance(o) == 1e-4);
    CHECK(json::parse(o.out)["config"]["seed"] == 3);

    with_config.insert(with_config.end(), {"--tol", "1e-9"});
    o = run(with_config);
    CHECK(tolerance(o) == 1e-9);
    ::unsetenv("WEIER_TOL");

    o = run(base);
    CHECK(tolerance(o) == 1e-8);
}
