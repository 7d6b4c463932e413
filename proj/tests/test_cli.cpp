#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "commands.hpp"

using namespace dunkl;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, bool color = false)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err, color);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l)) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string f;
    while (std::getline(ss, f, ',')) v.push_back(f);
    return v;
}

fs::path temp_path(const std::string& name)
{
    return fs::temp_directory_path() / ("dunkl_cli_test_" + name);
}

} // namespace

TEST_CASE("spectrum lists every state", "[cli]")
{
    const Result r = run_cli({"spectrum", "--level-max", "3"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls[0] == "level,energy,basis,label,degeneracy");
    // 2 * (1 + 2 + 3 + 4) states
    CHECK(ls.size() == 21);
    CHECK(ls[1] == "0,1.8000000000000000e+00,cartesian,\"|0,0>\",1");
    CHECK(r.out.find("3,4.7999999999999998e+00,polar,\"|0,3/2;-+>\",4") != std::string::npos);
    CHECK(r.out.find("2,3.7999999999999998e+00,polar,\"|0,1;-->\",3") != std::string::npos);
}

TEST_CASE("wavefunction on a Cartesian grid", "[cli]")
{
    const Result r = run_cli({"wavefunction", "--kind", "cartesian", "--nx", "0", "--ny", "0", "--grid", "-1:1:3"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "x,y,real,imag");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = split(ls[i]);
        REQUIRE(f.size() == 4);
        CHECK(std::stod(f[2]) > 0.0);
        CHECK(std::stod(f[3]) == 0.0);
    }
    const auto c = split(ls[5]); // x = 0, y = 0
    CHECK(std::stod(c[0]) == 0.0);
    CHECK(std::stod(c[2]) == Catch::Approx(psi_cartesian(CartesianIndex{0, 0}, MuParams(0.3, 0.5), 0.0, 0.0)));
}

TEST_CASE("polar and Jacobi-Dunkl wavefunctions", "[cli]")
{
    const Result p = run_cli({"wavefunction", "--kind", "polar", "--n", "1/2", "--sx", "+", "--sy", "-", "--grid",
                              "1.5707963267948966:1.5707963267948966:1"});
    REQUIRE(p.code == 0);
    const auto ls = lines(p.out);
    REQUIRE(ls.size() == 2);
    const MuParams mu(0.3, 0.5);
    const PolarIndex idx{0, HalfInt::from_twice(1), 1, -1};
    CHECK(std::stod(split(ls[1])[1]) == Catch::Approx(phi_angular(idx, mu, pi / 2)));

    const Result a = run_cli({"wavefunction", "--kind", "jacobi-dunkl", "--n", "1", "--branch", "1"});
    const Result b = run_cli({"wavefunction", "--kind", "jacobi-dunkl", "--n", "1", "--branch", "-1"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    const auto la = lines(a.out);
    const auto lb = lines(b.out);
    REQUIRE(la.size() == lb.size());
    for (std::size_t i = 1; i < la.size(); ++i) {
        const auto fa = split(la[i]);
        const auto fb = split(lb[i]);
        CHECK(std::stod(fa[1]) == Catch::Approx(std::stod(fb[1])).margin(1e-15));
        CHECK(std::stod(fa[2]) == Catch::Approx(-std::stod(fb[2])).margin(1e-15));
    }

    CHECK(run_cli({"wavefunction", "--kind", "polar", "--n", "0", "--sx", "-", "--sy", "-"}).code == 1);
    CHECK(run_cli({"wavefunction", "--kind", "spherical"}).code == 1);
    CHECK(run_cli({"wavefunction", "--grid", "0:1"}).code == 1);
}

TEST_CASE("overlaps subcommand", "[cli]")
{
    const Result z = run_cli({"overlaps", "--level", "0"});
    REQUIRE(z.code == 0);
    CHECK(z.out.find("closed-form,\"|0,0;++>\",\"|0,0>\",1.0000000000000000e+00") != std::string::npos);

    const Result r = run_cli({"overlaps", "--level", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# weight_indexing omega_l") != std::string::npos);
    std::size_t data = 0;
    for (const auto& l : lines(r.out)) {
        if (!l.empty() && l[0] != '#' && l.rfind("provenance", 0) != 0) ++data;
    }
    CHECK(data == 3 * 36);
    const auto pos = r.out.find("# discrepancy max ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 18)) < 1e-10);

    CHECK(run_cli({"overlaps", "--level", "9"}).code == 1);
    CHECK(run_cli({"overlaps"}).code == 1);
}

TEST_CASE("check passes with default settings", "[cli]")
{
    const Result r = run_cli({"check", "--level-max", "6"});
    INFO(r.out << r.err);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("anti-hermiticity D_x") != std::string::npos);
    CHECK(r.out.find("anti-hermiticity D_y") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    for (const auto& l : lines(r.out)) {
        if (l.rfind("identity", 0) == 0) continue;
        CHECK(l.substr(l.size() - 4) == "PASS");
    }
}

TEST_CASE("invalid parameters are usage errors", "[cli]")
{
    const Result r = run_cli({"spectrum", "--mu-x", "-0.6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("-1/2") != std::string::npos);
    CHECK(run_cli({"spectrum", "--format", "xml"}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"spectrum", "--config", temp_path("missing.cfg").string()}).code == 1);
}

TEST_CASE("config file with flag override", "[cli]")
{
    const fs::path cfg = temp_path("run.cfg");
    {
        std::ofstream f(cfg);
        f << "# sample\nmu-x = 1.2\nmu_y = 0.1  # trailing\nlevel_max = 1\n";
    }
    const Result a = run_cli({"spectrum", "--config", cfg.string()});
    REQUIRE(a.code == 0);
    CHECK(lines(a.out).size() == 7);
    CHECK(a.out.find("0,2.2999999999999998e+00,") != std::string::npos);

    const Result b = run_cli({"spectrum", "--config", cfg.string(), "--mu-x", "0.3", "--level-max", "0"});
    REQUIRE(b.code == 0);
    CHECK(lines(b.out).size() == 3);
    CHECK(b.out.find("0,1.3999999999999999e+00,") != std::string::npos);

    {
        std::ofstream f(cfg);
        f << "colour = red\n";
    }
    CHECK(run_cli({"spectrum", "--config", cfg.string()}).code == 1);
    fs::remove(cfg);
}

TEST_CASE("output is deterministic", "[cli]")
{
    const std::vector<std::string> args = {"overlaps", "--level", "4", "--mu-x", "1.2", "--mu-y", "0.1"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("--out writes plain text to a file", "[cli]")
{
    const fs::path out = temp_path("check.csv");
    fs::remove(out);
    const Result r = run_cli({"check", "--level-max", "2", "--out", out.string()}, true);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("identity,residual,status\n", 0) == 0);
    CHECK(text.find('\x1b') == std::string::npos);
    fs::remove(out);

    const Result colored = run_cli({"check", "--level-max", "1"}, true);
    CHECK(colored.out.find("\x1b[32mPASS") != std::string::npos);
}

TEST_CASE("JSON output parses", "[cli]")
{
    const Result s = run_cli({"spectrum", "--level-max", "2", "--format", "json"});
    REQUIRE(s.code == 0);
    const auto js = nlohmann::json::parse(s.out);
    CHECK(js["levels"].size() == 3);
    CHECK(js["levels"][2]["polar"][2] == "|0,1;-->");

    const Result o = run_cli({"overlaps", "--level", "2", "--format", "json"});
    const auto jo = nlohmann::json::parse(o.out);
    CHECK(jo["tables"].size() == 3);
    CHECK(jo["pass"] == true);

    const Result c = run_cli({"check", "--level-max", "2", "--format", "json"});
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["pass"] == true);
    CHECK(!jc["checks"].empty());
}

TEST_CASE("binary exit codes", "[cli]")
{
    const char* exe = std::getenv("DUNKL_CLI");
    if (exe == nullptr) SKIP("DUNKL_CLI not set");
    const std::string base = std::string("\"") + exe + "\"";
    const std::string quiet = " > /dev/null 2>&1";
    auto status = [](int s) { return WIFEXITED(s) ? WEXITSTATUS(s) : -1; };
    CHECK(status(std::system((base + " spectrum --level-max 1" + quiet).c_str())) == 0);
    CHECK(status(std::system((base + " spectrum --mu-x -0.6" + quiet).c_str())) == 1);
    CHECK(status(std::system((base + " check --level-max 2 --tol 1e-300" + quiet).c_str())) == 2);
}
