#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "blog/config.hpp"
#include "blog/render.hpp"

using namespace blog;

namespace {

RenderSpec small_spec(const char* model, int maxiter = 40, double R = 100) {
    auto s = render_spec_from_json(json::parse(model));
    s.width = 96;
    s.height = 80;
    s.maxiter = maxiter;
    s.R = R;
    return s;
}

constexpr const char* kExp02 = R"({"model": {"family": "exp", "lambda": 0.2}})";
constexpr const char* kPoincare = R"({"model": {"family": "poincare", "c": -1}, "window": [-3, 3, -3, 3]})";

}  // namespace

TEST_SUITE("render") {
    TEST_CASE("pixel geometry and shading") {
        const Window w{-4, 4, -2, 2};
        CHECK(pixel_center(w, 8, 4, 0, 0) == cplx(-3.5, 1.5));
        CHECK(pixel_center(w, 8, 4, 3, 7) == cplx(3.5, -1.5));
        CHECK(escape_level(0, 60) == 1);
        CHECK(escape_level(60, 60) == 253);
        CHECK(escape_level(30, 60) < escape_level(31, 60));
        CHECK(escape_level(60, 60) != kRayLevel);
    }

    TEST_CASE("attracting basin is bounded, far pixels escape at once") {
        auto s = render_spec_from_json(json::parse(kExp02));
        s.width = s.height = 400;
        const auto img = render_julia(s);
        // the attracting fixed point of 0.2 e^z is near 0.2592
        const int col = static_cast<int>((0.2592 + 4) / 8 * 400), row = 200;
        CHECK(img.at(row, col) == kBoundedLevel);

        auto far = s;
        far.window = {150, 160, -5, 5};
        far.width = far.height = 8;
        const auto f = render_julia(far);
        for (auto p : f.pixels) CHECK(p == escape_level(0, s.maxiter));
    }

    TEST_CASE("renders are deterministic across runs and thread counts") {
        for (const char* m : {kExp02, kPoincare}) {
            const auto s = small_spec(m);
            const auto ref = pgm_bytes(render_julia(s, 1));
            for (int t : {1, 2, 3, 8}) CHECK(pgm_bytes(render_julia(s, t)) == ref);
        }
    }

    TEST_CASE("escape is monotone in maxiter and antitone in R") {
        for (const char* m : {kExp02, kPoincare}) {
            const auto a = render_julia(small_spec(m, 30)), b = render_julia(small_spec(m, 60));
            int relabeled = 0;
            for (std::size_t i = 0; i < a.pixels.size(); ++i) relabeled += a.pixels[i] != kBoundedLevel && b.pixels[i] == kBoundedLevel;
            CHECK(relabeled == 0);

            const auto lo = render_julia(small_spec(m, 40, 50)), hi = render_julia(small_spec(m, 40, 500));
            int shrunk = 0;
            for (std::size_t i = 0; i < lo.pixels.size(); ++i)
                shrunk += lo.pixels[i] == kBoundedLevel && hi.pixels[i] != kBoundedLevel;
            CHECK(shrunk == 0);
        }
    }

    TEST_CASE("ray overlay") {
        const auto s = small_spec(kExp02);
        const auto base = render_julia(s);
        const ExternalAddress addr({}, {TractId()});
        CHECK(render_ray_overlay(base, RayApproximation{addr, {}, 1, 0.0}, s.window).pixels == base.pixels);

        // 100 points on log of a segment inside the window
        RayApproximation ray{addr, {}, 1, 0.0};
        for (int i = 0; i < 100; ++i) ray.points.push_back({double(i), std::log(cplx(0.5 + 0.03 * i, 0.2 + 0.01 * i))});
        const auto img = render_ray_overlay(base, ray, s.window);
        int marked = 0;
        const double dx = (s.window.re_max - s.window.re_min) / s.width, dy = (s.window.im_max - s.window.im_min) / s.height;
        for (int r = 0; r < img.height; ++r)
            for (int c = 0; c < img.width; ++c) {
                if (img.at(r, c) != kRayLevel) continue;
                ++marked;
                const cplx ctr = pixel_center(s.window, s.width, s.height, r, c);
                double best = 1e300;
                for (const auto& p : ray.points) best = std::min(best, std::abs(std::exp(p.z) - ctr));
                CHECK(best <= std::hypot(dx, dy));
            }
        CHECK(marked >= 1);
        CHECK(marked <= 100);
    }

    TEST_CASE("PGM output") {
        const Image img{3, 2, {0, 1, 2, 3, 4, 255}};
        const auto bytes = pgm_bytes(img);
        CHECK(bytes.rfind("P5\n3 2\n255\n", 0) == 0);
        CHECK(bytes.size() == 11 + 6);
        CHECK(static_cast<unsigned char>(bytes.back()) == 255);
        const auto path = std::filesystem::temp_directory_path() / "blogdyn_test_render.pgm";
        write_pgm(path.string(), img);
        std::ifstream f(path, std::ios::binary);
        const std::string back((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        CHECK(back == bytes);
        std::filesystem::remove(path);
    }

    TEST_CASE("render specs round-trip and are validated") {
        const auto s = small_spec(kPoincare);
        const auto again = render_spec_from_json(render_spec_to_json(s));
        CHECK(again.width == s.width);
        CHECK(again.maxiter == s.maxiter);
        CHECK(pgm_bytes(render_julia(again)) == pgm_bytes(render_julia(s)));
        CHECK_THROWS_AS(render_spec_from_json(json::parse(R"({"window": [0, 1, 0, 1]})")), std::invalid_argument);
        CHECK_THROWS_AS(render_spec_from_json(json::parse(R"({"model": {"family": "exp", "lambda": 1}, "window": [1, 0, 0, 1]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(render_spec_from_json(json::parse(R"({"model": {"family": "exp", "lambda": 1}, "width": 0})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(render_spec_from_json(json::parse(R"({"model": {"family": "poincare", "c": -1}, "R": 0.5})")),
                        std::invalid_argument);
    }
}
