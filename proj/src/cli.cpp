#include "blog/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "blog/config.hpp"
#include "blog/counterexample.hpp"
#include "blog/rays.hpp"
#include "blog/realize.hpp"
#include "blog/render.hpp"

namespace blog {

namespace {

// thrown for malformed input that CLI11 cannot see (bad JSON, bad address, ...)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") std::cout << text;
    else write_text_file(out, text);
}

TractId parse_tract_arg(const std::string& s) { return parse_address("(" + s + ")").period.front(); }

json pair_json(const PairViolation& v) {
    return {{"z", complex_to_json(v.z)}, {"w", complex_to_json(v.w)}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError("not a number: '" + tok + "'");
        }
    }
    return out;
}

RayApproximation read_ray_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    RayApproximation ray{ExternalAddress::constant(TractId()), {}, 0, 0.0};
    std::string line;
    std::getline(f, line);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto v = parse_list(line);
        if (v.size() < 3) throw UsageError("bad ray row: " + line);
        ray.points.push_back({v[0], {v[1], v[2]}});
    }
    return ray;
}

template <class T>
T param(const json& p, const char* key, T fallback) {
    try {
        return p.value(key, fallback);
    } catch (const json::exception& e) {
        throw UsageError(std::string("parameter ") + key + ": " + e.what());
    }
}

int run_ray(const std::string& model_arg, const std::string& address, int depth, double seed_re,
            const std::string& potentials, const std::string& out) {
    const auto model = model_from_json(load_json_arg(model_arg));
    const auto ray = trace_ray(*model, parse_address(address), depth, seed_re, parse_list(potentials));
    emit(out, ray_csv(ray));
    return kExitOk;
}

int run_verify(const std::string& kind, const std::string& model_arg, const std::string& params_arg,
               std::uint64_t seed, const std::string& out) {
    const auto model = model_from_json(load_json_arg(model_arg));
    const json p = params_arg.empty() ? json::object() : load_json_arg(params_arg);
    const TractId t = parse_tract_arg(param<std::string>(p, "tract", "0"));
    json rep{{"schema_version", kSchemaVersion}, {"check", kind}, {"model", model->family()}, {"seed", seed},
             {"params", p}};
    bool ok = true;
    if (kind == "slope") {
        SlopeOptions opt;
        opt.samples = param<std::size_t>(p, "samples", opt.samples);
        opt.seed = seed;
        if (p.contains("alpha") || p.contains("beta"))
            opt.user = SlopeParams{param<double>(p, "alpha", 0.0), param<double>(p, "beta", 0.0)};
        const auto r = check_bounded_slope(*model, t, opt);
        rep["n_samples"] = r.n_pairs;
        rep["fitted"] = r.fitted ? json{{"alpha", r.fitted->alpha}, {"beta", r.fitted->beta}} : json(nullptr);
        rep["unbounded_suspected"] = r.unbounded_suspected;
        rep["violations"] = json::array();
        for (const auto& v : r.violations) rep["violations"].push_back(pair_json(v));
        ok = !r.unbounded_suspected && r.violations.empty();
    } else if (kind == "wiggling") {
        const double K = param<double>(p, "K", 1.0 + 2 * std::numbers::pi), mu = param<double>(p, "mu", 0.0);
        const auto r = check_wiggling(*model, t, K, mu, param<std::size_t>(p, "n_geodesics", 1000),
                                      param<std::size_t>(p, "n_points", 32), seed);
        rep["n_samples"] = r.n_geodesics * r.n_points;
        rep["violations"] = json::array();
        for (const auto& v : r.violations)
            rep["violations"].push_back(
                {{"z0", complex_to_json(v.z0)}, {"t", v.t}, {"gamma", complex_to_json(v.gamma)}, {"lhs", v.lhs},
                 {"rhs", v.rhs}});
        ok = r.violations.empty();
    } else {
        const TractId next = parse_tract_arg(param<std::string>(p, "next", "0"));
        const HeadStartParams phi(param<double>(p, "K", 2.0), param<double>(p, "M", 1.0));
        const auto r = headstart_verify_pair(*model, t, next, phi, param<std::size_t>(p, "samples", 10000), seed);
        rep["n_samples"] = r.n_tested;
        rep["vacuous"] = r.vacuous;
        rep["violations"] = json::array();
        for (const auto& v : r.violations) rep["violations"].push_back(pair_json(v));
        ok = r.violations.empty();
    }
    emit(out, rep.dump(2) + "\n");
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_counterexample(double M, std::optional<double> xi0, int kmax, const std::string& out) {
    const double x0 = xi0 ? *xi0 : find_min_xi0(M, kmax);
    WiggleSpec spec;
    try {
        spec = build_sequences(M, x0, kmax);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        emit(out, json{{"schema_version", kSchemaVersion}, {"M", M}, {"xi0", x0}, {"k_max", kmax},
                       {"certified", false}, {"failures", {e.what()}}}
                      .dump(2) +
                      "\n");
        return kExitVerifyFailed;
    }
    const auto bounds = rho_bounds(spec, false);
    const auto report = verify_conditions(spec, bounds);
    FoldingCertificate folding;
    if (report.certified) folding = folding_lower_bound(kmax, report);
    const auto growth = growth_exponent_check(spec, bounds);
    emit(out, counterexample_json(spec, report, folding, growth).dump(2) + "\n");
    for (const auto& f : report.failures) std::cerr << f << "\n";
    return report.certified && growth.overall == Verdict::Pass ? kExitOk : kExitVerifyFailed;
}

int run_realize(const std::string& psi, double rho, double eta, const std::string& checks, int grid, double tol,
                const std::string& out) {
    std::set<std::string> picked;
    std::stringstream ss(checks);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok != "all" && tok != "bound" && tok != "jump" && tok != "entire" && tok != "tract")
            throw UsageError("unknown check '" + tok + "' (all, bound, jump, entire, tract)");
        picked.insert(tok);
    }
    const auto spec = make_contour(prescribed_tract(psi), rho, eta, tol);
    auto want = [&](const char* name) { return picked.count("all") || picked.count(name); };
    bool ok = true;
    MEstimate m{0, 0, 0};
    if (want("bound") || want("tract")) {
        m = estimate_m(spec);
        ok &= std::isfinite(m.m_est) && m.relative_change < 0.05;
    }
    std::vector<JumpRow> jumps;
    if (want("jump")) {
        std::vector<double> st;
        for (int i = 0; i < 10; ++i) st.push_back(-4.5 + i);
        jumps = jump_table(spec, st, {1e-2, 1e-3, 1e-4});
        for (const auto& r : jumps)
            if (r.eps == 1e-4 && r.error > 1e-3 * r.scale) ok = false;
    }
    std::vector<EntireResidual> res;
    if (want("entire")) {
        for (int n : {16, 64, 1024, 2048, 4096}) res.push_back(verify_entire(spec, alpha_point(spec, 1.0), 1.0, n));
        // convergence is spectral, so each two-doubling step must shrink the residual 4x unless it already sits at rounding level
        constexpr double kFloor = 1e-12;
        auto drops = [&](std::size_t a, std::size_t b) { return res[a].residual <= kFloor || res[a].residual >= 4 * res[b].residual; };
        ok &= res.back().residual <= 1e-6 && drops(0, 1) && drops(2, 4);
    }
    TractReport tract{};
    const double K = 2 * m.m_est;
    if (want("tract")) {
        tract = tract_of_g(spec, K, {-20, 40, -30, 30, grid, grid});
        ok &= tract.outside_v == 0;
    }
    emit(out, realize_json(spec, m, K, jumps, res, tract).dump(2) + "\n");
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_render(const std::string& spec_arg, const std::string& out, const std::string& ray_csv_path) {
    const auto spec = render_spec_from_json(load_json_arg(spec_arg));
    Image img = render_julia(spec);
    if (!ray_csv_path.empty()) img = render_ray_overlay(std::move(img), read_ray_csv(ray_csv_path), spec.window);
    if (out.empty() || out == "-") std::cout << pgm_bytes(img);
    else write_pgm(out, img);
    return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"blogdyn: dynamics of entire functions of bounded type in logarithmic coordinates"};
    app.require_subcommand(1);

    std::string model, address = "(0)", potentials = "0,1,2,3,4,5,6,7,8,9,10", out, params, kind, psi = "identity",
                                checks = "all", spec_arg, ray_path;
    int depth = 20, kmax = 6, grid = 800;
    double seed_re = 50.0, M = 1.5, rho = 1.5, eta = 2.0, tol = 1e-10;
    std::optional<double> xi0;
    std::uint64_t seed = 1;

    auto* ray = app.add_subcommand("ray", "trace a ray tail by pullback, CSV output");
    ray->add_option("--model", model, "model JSON or file")->required();
    ray->add_option("--address", address, "external address, e.g. \"(0)\" or \"1 (0 2)\"");
    ray->add_option("--depth", depth, "pullback depth")->check(CLI::PositiveNumber);
    ray->add_option("--seed-re", seed_re, "real part of the seed");
    ray->add_option("--potentials", potentials, "comma separated potentials");
    ray->add_option("--out", out, "output CSV (default stdout)");

    auto* verify = app.add_subcommand("verify", "sampled geometric checks, JSON output");
    verify->add_option("kind", kind, "slope | wiggling | headstart")
        ->required()
        ->check(CLI::IsMember({"slope", "wiggling", "headstart"}));
    verify->add_option("--model", model, "model JSON or file")->required();
    verify->add_option("--params", params, "check parameters, JSON or file");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--out", out, "output JSON (default stdout)");

    auto* cex = app.add_subcommand("counterexample", "certify the wiggle tract, JSON output");
    cex->add_option("--M", M, "M in (1, 1.75)")->required();
    cex->add_option("--xi0", xi0, "xi_0 (default: least certified value)");
    cex->add_option("--kmax", kmax, "last stage")->check(CLI::NonNegativeNumber);
    cex->add_option("--out", out, "output JSON (default stdout)");

    auto* real = app.add_subcommand("realize", "Cauchy-integral realization of a prescribed tract");
    real->add_option("--psi", psi, "identity | square | strip");
    real->add_option("--rho", rho, "order rho in (1, 2)");
    real->add_option("--eta", eta, "contour angle in (pi/2, rho pi/2)");
    real->add_option("--checks", checks, "all, or any of bound,jump,entire,tract");
    real->add_option("--grid", grid, "tract grid resolution")->check(CLI::PositiveNumber);
    real->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    real->add_option("--out", out, "output JSON (default stdout)");

    auto* render = app.add_subcommand("render", "escape-time image, binary PGM");
    render->add_option("--spec", spec_arg, "render spec JSON or file")->required();
    render->add_option("--out", out, "output PGM (default stdout)");
    render->add_option("--ray", ray_path, "ray CSV to overlay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ray) return run_ray(model, address, depth, seed_re, potentials, out);
        if (*verify) return run_verify(kind, model, params, seed, out);
        if (*cex) return run_counterexample(M, xi0, kmax, out);
        if (*real) return run_realize(psi, rho, eta, checks, grid, tol, out);
        if (*render) return run_render(spec_arg, out, ray_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

}  // namespace blog
