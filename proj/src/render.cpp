#include "blog/render.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "blog/config.hpp"
#include "blog/parallel.hpp"

namespace blog {

namespace {

void validate(const RenderSpec& s) {
    const auto& w = s.window;
    if (!(w.re_min < w.re_max) || !(w.im_min < w.im_max)) throw std::invalid_argument("render: empty window");
    if (s.width < 1 || s.height < 1) throw std::invalid_argument("render: width and height must be >= 1");
    if (s.maxiter < 1) throw std::invalid_argument("render: maxiter must be >= 1");
    if (!s.model.f) throw std::invalid_argument("render: no model");
    if (!(s.R > s.model.singular_bound))
        throw std::invalid_argument("render: R must exceed the singular bound " + std::to_string(s.model.singular_bound));
}

}  // namespace

cplx pixel_center(const Window& w, int width, int height, int row, int col) {
    const double dx = (w.re_max - w.re_min) / width, dy = (w.im_max - w.im_min) / height;
    return {w.re_min + (col + 0.5) * dx, w.im_max - (row + 0.5) * dy};
}

std::uint8_t escape_level(int n, int maxiter) {
    const long long lvl = 1 + 252LL * std::max(0, std::min(n, maxiter)) / maxiter;
    return static_cast<std::uint8_t>(lvl);
}

Image render_julia(const RenderSpec& spec, int threads) {
    validate(spec);
    Image img{spec.width, spec.height, std::vector<std::uint8_t>(static_cast<std::size_t>(spec.width) * spec.height)};
    parallel_for(
        spec.height,
        [&](int r) {
            for (int c = 0; c < spec.width; ++c) {
                const auto e = escape_classify(spec.model, pixel_center(spec.window, spec.width, spec.height, r, c),
                                               spec.R, spec.maxiter);
                img.at(r, c) = e.escaped ? escape_level(*e.first_exit, spec.maxiter) : kBoundedLevel;
            }
        },
        threads);
    return img;
}

Image render_ray_overlay(Image image, const RayApproximation& ray, const Window& w) {
    const double dx = (w.re_max - w.re_min) / image.width, dy = (w.im_max - w.im_min) / image.height;
    for (const auto& p : ray.points) {
        if (p.z.real() > 700.0) continue;
        const cplx q = std::exp(p.z);
        const double col = std::floor((q.real() - w.re_min) / dx), row = std::floor((w.im_max - q.imag()) / dy);
        if (!(col >= 0 && col < image.width && row >= 0 && row < image.height)) continue;
        image.at(static_cast<int>(row), static_cast<int>(col)) = kRayLevel;
    }
    return image;
}

std::string pgm_bytes(const Image& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

void write_pgm(const std::string& path, const Image& image) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    const std::string bytes = pgm_bytes(image);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

RenderSpec render_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("model")) throw std::invalid_argument("render spec needs a \"model\"");
    RenderSpec s;
    s.model_json = j.at("model");
    s.model = entire_from_json(s.model_json);
    try {
        if (j.contains("window")) {
            const auto& w = j.at("window");
            if (!w.is_array() || w.size() != 4) throw std::invalid_argument("window must be [re_min, re_max, im_min, im_max]");
            s.window = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
        }
        s.width = j.value("width", s.width);
        s.height = j.value("height", s.height);
        s.R = j.value("R", s.R);
        s.maxiter = j.value("maxiter", s.maxiter);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("render spec: ") + e.what());
    }
    validate(s);
    return s;
}

nlohmann::json render_spec_to_json(const RenderSpec& s) {
    return {{"model", s.model_json},
            {"window", {s.window.re_min, s.window.re_max, s.window.im_min, s.window.im_max}},
            {"width", s.width},
            {"height", s.height},
            {"R", s.R},
            {"maxiter", s.maxiter}};
}

}  // namespace blog
