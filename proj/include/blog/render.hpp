#pragma once
// Escape-time images of entire functions as binary PGM.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "blog/entire.hpp"
#include "blog/rays.hpp"

namespace blog {

struct Window {
    double re_min, re_max, im_min, im_max;
};

struct RenderSpec {
    Window window{-4, 4, -4, 4};
    int width = 400;
    int height = 400;
    double R = 100.0;
    int maxiter = 60;
    EntireModel model;
    nlohmann::json model_json;
};

inline constexpr std::uint8_t kBoundedLevel = 0;
inline constexpr std::uint8_t kRayLevel = 254;

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, row 0 = im_max

    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

// pixel center of (row, col)
cplx pixel_center(const Window& w, int width, int height, int row, int col);
// escape at step n maps to 1 + 252 n / maxiter, so 254 stays free for overlays
std::uint8_t escape_level(int n, int maxiter);

Image render_julia(const RenderSpec& spec, int threads = 0);
// marks the pixels nearest to exp(ray points)
Image render_ray_overlay(Image image, const RayApproximation& ray, const Window& window);

std::string pgm_bytes(const Image& image);
void write_pgm(const std::string& path, const Image& image);

// {"model": {...}, "window": [re_min, re_max, im_min, im_max], "width", "height", "R", "maxiter"}
RenderSpec render_spec_from_json(const nlohmann::json& j);
nlohmann::json render_spec_to_json(const RenderSpec& spec);

}  // namespace blog
