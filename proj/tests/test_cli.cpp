#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "blog/cli.hpp"
#include "blog/config.hpp"
#include "blog/rays.hpp"

using namespace blog;

namespace {

namespace fs = std::filesystem;

int run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"blogdyn"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// scratch directory removed on scope exit
struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / ("blogdyn_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string operator()(const char* name) const { return (dir / name).string(); }
};

constexpr const char* kExp02 = R"({"family": "exp", "lambda": 0.2, "R_prime": 1})";
constexpr const char* kExp1 = R"({"family": "exp", "lambda": 1})";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors exit 2") {
        CHECK(run({}) == kExitUsage);
        CHECK(run({"frobnicate"}) == kExitUsage);
        CHECK(run({"counterexample", "--M", "1.5", "--bogus"}) == kExitUsage);
        CHECK(run({"counterexample"}) == kExitUsage);
        CHECK(run({"counterexample", "--M", "2.5"}) == kExitUsage);
        CHECK(run({"ray", "--model", "{\"family\": \"gamma\"}"}) == kExitUsage);
        CHECK(run({"ray", "--model", kExp02, "--address", "(0"}) == kExitUsage);
        CHECK(run({"verify", "curvature", "--model", kExp1}) == kExitUsage);
        CHECK(run({"realize", "--checks", "bound,nonsense"}) == kExitUsage);
        CHECK(run({"render", "--spec", "/nonexistent/spec.json"}) == kExitUsage);
    }

    TEST_CASE("counterexample end to end") {
        Scratch tmp;
        const auto out = tmp("cex.json");
        REQUIRE(run({"counterexample", "--M", "1.5", "--kmax", "6", "--out", out.c_str()}) == kExitOk);
        const auto j = json::parse(slurp(out));
        CHECK(j["certified"] == true);
        CHECK(j["failures"].empty());
        for (const auto& [name, row] : j["conditions"].items())
            for (const auto& v : row) CHECK((v == "pass" || v == "n/a"));
        CHECK(j["folding"]["bound"] == 64);
        CHECK(j["growth"]["verdict"] == "pass");

        const auto bad = tmp("bad.json");
        CHECK(run({"counterexample", "--M", "1.5", "--xi0", "3", "--kmax", "6", "--out", bad.c_str()}) ==
              kExitVerifyFailed);
        const auto jb = json::parse(slurp(bad));
        CHECK(jb["certified"] == false);
        REQUIRE_FALSE(jb["failures"].empty());
        CHECK(jb["failures"][0].get<std::string>().find("length_sep_gamma") != std::string::npos);
    }

    TEST_CASE("ray CSV") {
        Scratch tmp;
        const auto out = tmp("ray.csv");
        REQUIRE(run({"ray", "--model", kExp02, "--address", "(0)", "--depth", "12", "--potentials", "0,1,2", "--out",
                     out.c_str()}) == kExitOk);
        std::istringstream in(slurp(out));
        std::string line;
        std::getline(in, line);
        CHECK(line == "potential,re,im,depth,error_bound");
        const auto direct = trace_ray(*model_from_json(json::parse(kExp02)), parse_address("(0)"), 12, 50, {0, 1, 2});
        for (const auto& p : direct.points) {
            REQUIRE(std::getline(in, line));
            double t, re, im, eb;
            int depth;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%d,%lf", &t, &re, &im, &depth, &eb) == 5);
            CHECK(t == p.potential);
            CHECK(re == p.z.real());
            CHECK(im == p.z.imag());
            CHECK(depth == 12);
            CHECK(eb == direct.error_bound);
        }
        CHECK_FALSE(std::getline(in, line));
        // the lambda = 1 ray of 0 0 0 ... does not exist in the normalized domain
        CHECK(run({"ray", "--model", kExp1, "--out", out.c_str()}) == kExitVerifyFailed);
    }

    TEST_CASE("verify reports") {
        Scratch tmp;
        const auto out = tmp("v.json");
        REQUIRE(run({"verify", "slope", "--model", kExp1, "--params", R"({"samples": 2000})", "--seed", "9", "--out",
                     out.c_str()}) == kExitOk);
        auto j = json::parse(slurp(out));
        CHECK(j["schema_version"] == kSchemaVersion);
        CHECK(j["seed"] == 9);
        CHECK(j["fitted"]["alpha"].get<double>() <= 0.5);

        REQUIRE(run({"verify", "headstart", "--model", kExp1, "--params", R"({"K": 2, "M": 90, "samples": 2000})",
                     "--out", out.c_str()}) == kExitOk);
        j = json::parse(slurp(out));
        CHECK(j["violations"].empty());
        CHECK(j["n_samples"].get<int>() > 0);

        const auto params = tmp("p.json");
        std::ofstream(params) << R"({"K": 1.01, "mu": 0.01, "n_geodesics": 100, "n_points": 20})";
        CHECK(run({"verify", "wiggling", "--model", R"({"family": "tube", "preset": "fold"})", "--params",
                   params.c_str(), "--out", out.c_str()}) == kExitVerifyFailed);
        CHECK_FALSE(json::parse(slurp(out))["violations"].empty());
    }

    TEST_CASE("realize subset") {
        Scratch tmp;
        const auto out = tmp("r.json");
        REQUIRE(run({"realize", "--checks", "jump", "--out", out.c_str()}) == kExitOk);
        const auto j = json::parse(slurp(out));
        CHECK(j["jump_table"].size() == 30);
        CHECK(j["rho"] == 1.5);
        CHECK(run({"realize", "--rho", "2.5"}) == kExitUsage);

        REQUIRE(run({"realize", "--checks", "entire", "--out", out.c_str()}) == kExitOk);
        const auto je = json::parse(slurp(out));
        REQUIRE(je["entire_residuals"].size() == 5);
        CHECK(je["entire_residuals"][4]["n_nodes"] == 4096);
        CHECK(je["entire_residuals"][4]["residual"].get<double>() <= 1e-6);
    }

    TEST_CASE("render output is reproducible from a config file") {
        Scratch tmp;
        const auto spec = tmp("spec.json");
        std::ofstream(spec) << R"({"model": {"family": "exp", "lambda": 0.2}, "width": 64, "height": 48, "maxiter": 30})";
        const auto a = tmp("a.pgm"), b = tmp("b.pgm");
        REQUIRE(run({"render", "--spec", spec.c_str(), "--out", a.c_str()}) == kExitOk);
        REQUIRE(run({"render", "--spec", spec.c_str(), "--out", b.c_str()}) == kExitOk);
        const auto bytes = slurp(a);
        CHECK(bytes.rfind("P5\n64 48\n255\n", 0) == 0);
        CHECK(bytes == slurp(b));

        const auto ray = tmp("ray.csv");
        REQUIRE(run({"ray", "--model", kExp02, "--depth", "10", "--out", ray.c_str()}) == kExitOk);
        REQUIRE(run({"render", "--spec", spec.c_str(), "--ray", ray.c_str(), "--out", b.c_str()}) == kExitOk);
        const auto overlaid = slurp(b);
        CHECK(overlaid.size() == bytes.size());
        CHECK(overlaid.find(static_cast<char>(254)) != std::string::npos);
    }
}
