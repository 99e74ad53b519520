#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "blog/counterexample.hpp"
#include "blog/hyperbolic.hpp"

using namespace blog;

namespace {

// midpoint rule for the integral of 2/(hw - dist to centerline), n pieces per path segment
double density_integral(const std::vector<cplx>& cl, double hw, const std::vector<cplx>& path, int n) {
    auto dist = [&](cplx z) {
        double d = 1e300;
        for (std::size_t i = 0; i + 1 < cl.size(); ++i) {
            const cplx a = cl[i], b = cl[i + 1];
            const double t = std::clamp(std::real((z - a) * std::conj(b - a)) / std::norm(b - a), 0.0, 1.0);
            d = std::min(d, std::abs(z - (a + t * (b - a))));
        }
        return d;
    };
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const cplx a = path[k], b = path[k + 1];
        const double h = std::abs(b - a) / n;
        for (int j = 0; j < n; ++j) sum += 2.0 * h / (hw - dist(a + (b - a) * ((j + 0.5) / n)));
    }
    return sum;
}

}  // namespace

TEST_SUITE("hyperbolic") {
    TEST_CASE("distance helpers") {
        CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
        CHECK(point_segment_distance({3, 0}, {-1, 0}, {1, 0}) == doctest::Approx(2.0));
        CHECK(segment_segment_distance({0, 0}, {1, 0}, {0, 2}, {1, 2}) == doctest::Approx(2.0));
        CHECK(segment_segment_distance({0, -1}, {0, 1}, {-1, 0}, {1, 0}) == 0.0);
    }

    TEST_CASE("tube construction rejects bad input") {
        CHECK_THROWS_AS(TubeDomain({{0, 0}}, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(TubeDomain({{0, 0}, {1, 0}}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(TubeDomain({{0, 0}, {0, 0}, {1, 0}}, 0.5), std::invalid_argument);
    }

    TEST_CASE("centerline of a straight tube costs exactly 4L") {
        const double L = 7.5;
        const TubeDomain tube({{0, 0}, {L, 0}}, 0.5);
        const std::vector<cplx> path{{0, 0}, {L, 0}};
        const double ub = hyp_length_upper(tube, path);
        CHECK(ub >= 4 * L);
        CHECK(ub == doctest::Approx(4 * L).epsilon(1e-12));
    }

    TEST_CASE("clearance 1/4 doubles the bound") {
        const double L = 3.0;
        const TubeDomain tube({{-1, 0}, {L + 1, 0}}, 0.5);
        const std::vector<cplx> path{{0, 0.25}, {L, 0.25}};
        CHECK(hyp_length_upper(tube, path) == doctest::Approx(8 * L).epsilon(1e-12));
    }

    TEST_CASE("L-shaped path matches a Richardson-extrapolated reference within 1%") {
        const std::vector<cplx> cl{{0, 0}, {10, 0}, {10, 10}};
        const TubeDomain tube(cl, 0.5);
        const std::vector<cplx> path{{0.5, 0.1}, {9.8, 0.1}, {9.8, 9.5}};
        const double r1 = density_integral(cl, 0.5, path, 4000), r2 = density_integral(cl, 0.5, path, 8000);
        const double ref = (4 * r2 - r1) / 3;
        const double ub = hyp_length_upper(tube, path);
        CHECK(ub >= ref * (1 - 1e-9));
        CHECK(ub <= ref * 1.01);
    }

    TEST_CASE("paths leaving the tube are rejected") {
        const TubeDomain tube({{0, 0}, {5, 0}}, 0.5);
        const std::vector<cplx> path{{0, 0}, {2, 0.6}};
        CHECK_THROWS_AS(hyp_length_upper(tube, path), std::domain_error);
    }

    TEST_CASE("lower bound along a straight unit-thickness tube") {
        const TubeDomain tube({{0, 0}, {30, 0}}, 0.5);
        const double D = 20.0;
        CHECK(hyp_dist_lower(tube, {1, 0}, VerticalSection{1 + D, -0.5, 0.5}) >= D * (1 - 1e-9));
        CHECK(hyp_dist_lower(tube, {1, 0}, VerticalSection{1, -0.5, 0.5}) == 0.0);
        CHECK_THROWS_AS(hyp_dist_lower(tube, {1, 3}, VerticalSection{5, -0.5, 0.5}), std::domain_error);
        CHECK_THROWS_AS(hyp_dist_lower(tube, {1, 0}, VerticalSection{50, -0.5, 0.5}), std::domain_error);
    }

    TEST_CASE("surrogate wiggle tract: P to the first box") {
        const auto tube = corridor_geometry({10, 40, 120});
        CHECK(tube.embedded());
        const cplx P = tube.centerline().front();
        CHECK(P == cplx(1, 0));
        const VerticalSection box{40, -0.5, 0.5};
        const double lower = hyp_dist_lower(tube, P, box);
        // Euclidean 39 from P, density 1/(2r) with r a little above 1/2 because of the arcs
        CHECK(lower >= 40 - 1.5);
        std::vector<cplx> path;
        for (cplx p : tube.centerline()) {
            path.push_back(p);
            if (p.real() >= 40 && std::abs(p.imag()) < 1e-9) break;
        }
        CHECK(lower <= hyp_length_upper(tube, path));
    }

    TEST_CASE("lower bound never exceeds the upper bound on random tubes") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int bad = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            // a monotone staircase cannot self-overlap
            std::vector<cplx> cl{{0, 0}};
            const int n = 2 + static_cast<int>(u(rng) * 4);
            for (int i = 0; i < n; ++i) {
                const cplx last = cl.back();
                cl.push_back(i % 2 == 0 ? last + cplx(2 + 8 * u(rng), 0) : last + cplx(0, 2 + 8 * u(rng)));
            }
            const double hw = 0.2 + 0.3 * u(rng);
            const TubeDomain tube(cl, hw);
            const double s_end = tube.length() * (0.3 + 0.7 * u(rng));
            std::vector<cplx> path{cl.front()};
            for (std::size_t i = 1; i < cl.size() && tube.segment_start(i) < s_end; ++i) path.push_back(cl[i]);
            const cplx end = tube.point_at(s_end);
            path.push_back(end);
            const double lo = hyp_dist_lower(tube, cl.front(), PolylineTarget{{end}});
            bad += lo > hyp_length_upper(tube, path);
        }
        CHECK(bad == 0);
    }

    TEST_CASE("a wider tube never increases the upper bound") {
        const std::vector<cplx> cl{{0, 0}, {6, 0}, {6, 5}, {12, 5}};
        const std::vector<cplx> path{{0.2, 0.05}, {6.05, 0.05}, {6.05, 4.9}, {11, 4.9}};
        double prev = 1e300;
        for (double hw : {0.3, 0.4, 0.5, 0.8, 1.2}) {
            const double ub = hyp_length_upper(TubeDomain(cl, hw), path);
            CHECK(ub <= prev);
            prev = ub;
        }
    }

    TEST_CASE("embeddedness check flags a folded-back tube") {
        CHECK(TubeDomain({{0, 0}, {10, 0}, {10, 3}, {0, 3}}, 0.5).embedded());
        CHECK_FALSE(TubeDomain({{0, 0}, {10, 0}, {10, 0.6}, {0, 0.6}}, 0.5).embedded());
    }
}
