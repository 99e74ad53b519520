#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "blog/realize.hpp"

using namespace blog;

namespace {

const ContourSpec& spec_id() {
    static const ContourSpec s = make_contour(prescribed_tract("identity"), 1.5, 2.0);
    return s;
}

}  // namespace

TEST_SUITE("realize") {
    TEST_CASE("tract maps round-trip and send the boundary to the imaginary axis") {
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (const char* name : {"identity", "square", "strip"}) {
            CAPTURE(name);
            const auto p = prescribed_tract(name);
            CHECK(p.name() == name);
            for (int i = 0; i < 500; ++i) {
                // a point of H pulled back, so it lies in V
                const cplx w(1e-3 + 20 * u(rng), 40 * u(rng) - 20);
                const cplx z = p.psi_inverse(w);
                CHECK(p.in_domain(z));
                CHECK(std::abs(p.psi(z) - w) <= 1e-12 * (1 + std::abs(w)));
                CHECK(std::abs(p.psi_inverse(p.psi(z)) - z) <= 1e-12 * (1 + std::abs(z)));
                const cplx b = p.psi_inverse(cplx(0, 40 * u(rng) - 20));
                CHECK(std::abs(p.psi(b).real()) < 1e-8);
                const double h = 1e-6;
                const cplx fd = (p.psi_inverse(w + h) - p.psi_inverse(w - h)) / (2 * h);
                CHECK(std::abs(fd - p.psi_inverse_deriv(w)) <= 1e-6 * (1 + std::abs(fd)));
            }
        }
        CHECK_FALSE(prescribed_tract("identity").in_domain(-1.0));
        CHECK_FALSE(prescribed_tract("square").in_domain(cplx(1, 2)));
        CHECK_FALSE(prescribed_tract("strip").in_domain(cplx(0, 2)));
        CHECK_THROWS_AS(prescribed_tract("disk"), std::invalid_argument);
    }

    TEST_CASE("contour parameters are validated") {
        const auto p = prescribed_tract("identity");
        CHECK_THROWS_AS(make_contour(p, 1.0, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(make_contour(p, 2.0, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(make_contour(p, 1.5, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(make_contour(p, 1.5, 2.4), std::invalid_argument);
        CHECK_THROWS_AS(make_contour(p, 1.5, 2.0, 0.0), std::invalid_argument);
        const auto& s = spec_id();
        // tail majorant e^{1 - c t} stays far below tol beyond t_max
        CHECK(std::exp(1 - std::abs(std::cos(s.eta)) * s.t_max) < s.tol);
    }

    TEST_CASE("alpha") {
        const auto& s = spec_id();
        CHECK(std::abs(alpha_point(s, 0.0) - 1.0) < 1e-15);
        const cplx a1 = alpha_point(s, 1.0);
        CHECK(std::abs(std::pow(a1, 1.5) - (1.0 + s.nu)) < 1e-12);
        CHECK(std::abs(a1 - std::pow(1.0 + s.nu, 2.0 / 3)) < 1e-12);
        CHECK(std::abs(alpha_point(s, -1.0) - std::conj(a1)) < 1e-15);
        for (double t : {-3.0, -0.5, 0.7, 4.0}) {
            const double h = 1e-6;
            const cplx fd = (alpha_point(s, t + h) - alpha_point(s, t - h)) / (2 * h);
            CHECK(std::abs(fd - alpha_deriv(s, t)) < 1e-7);
        }
        // rho = 1 (with eta < pi/2) is outside the admissible range, but alpha itself is just a line there
        ContourSpec line{1.0, 1.2, std::polar(1.0, 1.2), 0.0, 1e-10, prescribed_tract("identity"), nullptr};
        for (double t : {0.0, 0.5, 3.0})
            CHECK(std::abs(alpha_point(line, t) - (1.0 + line.nu * t)) < 1e-14);
    }

    TEST_CASE("h is conjugate-symmetric and decays like 1/|z|") {
        const auto& s = spec_id();
        for (const cplx z : {cplx(-3, 2), cplx(5, 7), cplx(0.5, -9), cplx(12, 1)}) {
            const cplx a = cauchy_h(s, z), b = cauchy_h(s, std::conj(z));
            CHECK(std::abs(a - std::conj(b)) < 2 * s.tol);
        }
        double prev = std::abs(cauchy_h(s, -10.0));
        for (int j = 2; j <= 4; ++j) {
            const double cur = std::abs(cauchy_h(s, -std::pow(10.0, j)));
            CHECK(cur < prev);
            CHECK(std::log10(cur / prev) == doctest::Approx(-1.0).epsilon(0.05));
            prev = cur;
        }
        CHECK_THROWS_AS(cauchy_h(s, alpha_point(s, 1.0)), std::domain_error);
    }

    TEST_CASE("halving tol moves h by less than 2 tol") {
        const auto& s = spec_id();
        const auto fine = make_contour(s.tract, s.rho, s.eta, s.tol / 2);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-20, 20);
        int n = 0, bad = 0;
        while (n < 100) {
            const cplx z(u(rng), u(rng));
            if (alpha_distance(s, z) < 1e-3) continue;
            ++n;
            bad += std::abs(cauchy_h_near(s, z) - cauchy_h_near(fine, z)) >= 2 * s.tol;
        }
        CHECK(bad == 0);
    }

    TEST_CASE("sides of alpha") {
        const auto& s = spec_id();
        CHECK(side_of_alpha(s, 10.0) == Side::Inside);
        CHECK(side_of_alpha(s, cplx(0.1, 20)) == Side::Outside);
        CHECK_THROWS_AS(side_of_alpha(s, -5.0), std::invalid_argument);
        CHECK_THROWS_AS(side_of_alpha(s, alpha_point(s, 2.0)), std::domain_error);
        for (double t : {-2.0, 2.0, 5.0}) {
            const cplx a = alpha_point(s, t), d = alpha_deriv(s, t);
            const cplx n = cplx(0, 1) * d / std::abs(d);
            CHECK(side_of_alpha(s, a + 1e-6 * n) == Side::Outside);
            CHECK(side_of_alpha(s, a - 1e-6 * n) == Side::Inside);
        }
    }

    TEST_CASE("g stays within M of f inside and within M outside") {
        const auto& s = spec_id();
        const auto m = estimate_m(s, 20);
        CHECK(m.m_est > 0);
        CHECK(std::isfinite(m.m_est));
        const cplx f30 = f_eval(s, 30.0);
        const double eps = std::numeric_limits<double>::epsilon();
        CHECK(std::abs(g_eval(s, 30.0) - f30) <= m.m_est + 4 * eps * std::abs(f30));
        CHECK(std::abs(h_only_eval(s, 30.0)) <= m.m_est);
        CHECK(std::abs(g_eval(s, -50.0)) <= m.m_est);
        for (const cplx z : {cplx(3, 4), cplx(-7, 1), cplx(20, 10)}) {
            const cplx a = g_eval(s, z), b = g_eval(s, std::conj(z));
            CHECK(std::abs(a - std::conj(b)) <= 2 * s.tol * (1 + std::abs(a)));
        }
    }

    TEST_CASE("Plemelj jump") {
        const auto& s = spec_id();
        std::vector<double> stations;
        for (int i = 0; i < 10; ++i) stations.push_back(-4.5 + i);
        const std::vector<double> eps{1e-2, 1e-3, 1e-4};
        const auto rows = jump_table(s, stations, eps);
        REQUIRE(rows.size() == 30);
        double worst[3] = {0, 0, 0};
        for (std::size_t i = 0; i < rows.size(); ++i) worst[i % 3] = std::max(worst[i % 3], rows[i].error / rows[i].scale);
        CHECK(worst[0] > worst[1]);
        CHECK(worst[1] > worst[2]);
        CHECK(worst[2] < 1e-3);
    }

    TEST_CASE("g is entire across alpha") {
        const auto& s = spec_id();
        const cplx c = alpha_point(s, 1.0);
        const auto r16 = verify_entire(s, c, 1.0, 16), r64 = verify_entire(s, c, 1.0, 64);
        CHECK(r64.residual < 1e-6);
        CHECK(r16.residual > 4 * r64.residual);
        CHECK(verify_entire(s, c, 1.0, 64, false).residual > 0.1);
        CHECK(verify_entire(s, -5.0, 2.0, 512).residual < 1e-8);
        CHECK_THROWS_AS(verify_entire(s, c, 1.0, 2), std::invalid_argument);
    }

    TEST_CASE("sampled tract of g") {
        const auto& s = spec_id();
        const double K = 2 * estimate_m(s, 20).m_refined;
        const GridWindow win{-20, 40, -30, 30, 60, 60};
        const auto a = tract_of_g(s, K, win), b = tract_of_g(s, 10 * K, win);
        CHECK(a.outside_v == 0);
        CHECK(a.components == 1);
        CHECK(a.holes == 0);
        CHECK(a.has_axis_ray);
        CHECK(a.n_points == 3600);
        CHECK(b.n_in_w < a.n_in_w);
        int not_subset = 0;
        for (std::size_t i = 0; i < a.mask.size(); ++i) not_subset += b.mask[i] && !a.mask[i];
        CHECK(not_subset == 0);
        CHECK_THROWS_AS(tract_of_g(s, K, {1, 0, -1, 1, 4, 4}), std::invalid_argument);
    }

    TEST_CASE("other tract maps") {
        for (const char* name : {"square", "strip"}) {
            CAPTURE(name);
            const auto s = make_contour(prescribed_tract(name), 1.5, 2.0);
            const cplx a = alpha_point(s, 1.0);
            CHECK(std::abs(std::pow(s.tract.psi(a), 1.5) - (1.0 + s.nu)) < 1e-12);
            const auto rows = jump_table(s, {-1.0, 1.0}, {1e-4});
            for (const auto& r : rows) CHECK(r.error / r.scale < 1e-3);
            CHECK(verify_entire(s, a, 0.25, 128).residual < 1e-6);
        }
    }

    TEST_CASE("report JSON") {
        const auto& s = spec_id();
        const auto m = estimate_m(s, 10);
        const auto tr = tract_of_g(s, 2 * m.m_refined, {-20, 40, -30, 30, 20, 20});
        const auto j = realize_json(s, m, 2 * m.m_refined, jump_table(s, {1.0}, {1e-3}),
                                    {verify_entire(s, alpha_point(s, 1.0), 1.0, 32)}, tr);
        CHECK(j["schema_version"] == 1);
        CHECK(j["rho"] == 1.5);
        CHECK(j["psi"] == "identity");
        CHECK(j["jump_table"].size() == 1);
        CHECK(j["entire_residuals"].size() == 1);
        CHECK(j["tract_check"]["outside_V"] == 0);
        CHECK(j.contains("M_est"));
        CHECK(j.contains("t_max"));
        CHECK(j["eta"].get<double>() == doctest::Approx(2.0));
        CHECK(std::abs(j["K"].get<double>() - 2 * m.m_refined) < 1e-12);
    }
}
