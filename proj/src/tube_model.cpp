#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "blog/models.hpp"

namespace blog {

namespace {

constexpr double kPi = std::numbers::pi;

// Single tract, no 2 pi i translates. F(z) = exp(k (s + i n)), k = pi/(2 hw);
// exact on straight pieces, a surrogate near the corners.
class TubeModel final : public FamilyModel {
public:
    explicit TubeModel(TubeDomain tube)
        : FamilyModel(0.0, 0.0, false), tube_(std::move(tube)), k_(kPi / (2 * tube_.halfwidth())) {}

    std::string family() const override { return "tube"; }
    double tract_min_re(const TractId&) const override {
        double m = std::numeric_limits<double>::infinity();
        for (cplx p : tube_.centerline()) m = std::min(m, p.real());
        return m - tube_.halfwidth();
    }
    std::pair<double, double> param_range(const TractId&) const override { return {0.0, tube_.length()}; }
    // tract_param runs over arclength here, capped where F still fits a double
    double max_depth() const override { return std::min(tube_.length(), 700.0 / k_); }
    double expansivity_threshold() const override { return 2.0 / k_; }
    ModelPtr shifted(double, bool) const override {
        throw std::invalid_argument("tube surrogates are used unnormalized");
    }
    const TubeDomain& tube() const { return tube_; }

protected:
    void check(const TractId& t) const {
        if (t.first().family != 0 || t.first().translate != 0)
            throw std::invalid_argument("tube model has a single tract");
    }
    cplx raw_eval(const TractId& t, cplx u) const override {
        check(t);
        const auto p = tube_.project(u);
        return std::exp(k_ * cplx(p.s, p.offset));
    }
    cplx raw_deriv(const TractId& t, cplx u) const override {
        check(t);
        const auto p = tube_.project(u);
        return std::exp(k_ * cplx(p.s, p.offset)) * k_ / tube_.tangent_at(p.s);
    }
    cplx raw_inverse(const TractId& t, cplx zeta) const override {
        check(t);
        const cplx w = std::log(zeta) / k_;
        return tube_.point_at(w.real()) + cplx(0.0, w.imag()) * tube_.tangent_at(w.real());
    }
    bool raw_contains(const TractId& t, cplx u, double thr) const override {
        check(t);
        const auto p = tube_.project(u);
        if (!(p.dist < tube_.halfwidth())) return false;
        return std::exp(k_ * p.s) * std::cos(k_ * p.offset) > thr;
    }
    cplx raw_param(const TractId& t, double s, double v, double thr) const override {
        check(t);
        double half = tube_.halfwidth();
        if (thr > 0.0) {
            const double r = thr * std::exp(-k_ * s);
            if (!(r < 1.0)) throw std::domain_error("tract_param: arclength left of the tract");
            half = std::acos(r) / k_;
        }
        return tube_.point_at(s) + cplx(0.0, v * half) * tube_.tangent_at(s);
    }
    std::optional<TractId> raw_locate(cplx) const override { return TractId(0, 0); }

private:
    TubeDomain tube_;
    double k_;
};

void arc(std::vector<cplx>& pts, cplx center, double radius, double from, double to, int n) {
    for (int j = 1; j <= n; ++j) pts.push_back(center + std::polar(radius, from + (to - from) * j / n));
}

}  // namespace

ModelPtr tube_model(TubeDomain tube) { return std::make_shared<TubeModel>(std::move(tube)); }

TubeDomain fold_tube() {
    // out to Re 40, back to Re 10, out again to Re 100
    std::vector<cplx> pts{{1, 0}, {40, 0}};
    arc(pts, {40, -1}, 1.0, kPi / 2, -kPi / 2, 32);
    pts.push_back({10, -2});
    arc(pts, {10, -3}, 1.0, kPi / 2, 3 * kPi / 2, 32);
    pts.push_back({100, -4});
    return TubeDomain(std::move(pts), 0.5);
}

TubeDomain spiral_tube() {
    std::vector<cplx> pts;
    const int n = 8 * 64;
    for (int j = 0; j <= n; ++j) {
        const double th = 2 * kPi * j / 64;
        pts.push_back(std::polar(5.0 + 3.0 * th, th));
    }
    return TubeDomain(std::move(pts), 0.5);
}

}  // namespace blog
