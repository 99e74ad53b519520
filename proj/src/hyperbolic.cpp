#include "blog/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace blog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return std::nextafter(x, -kInf); }

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_intersect(cplx a, cplx b, cplx c, cplx d) {
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

struct Gate {
    double s;
    cplx a, b;
};

std::vector<Gate> make_gates(const TubeDomain& d) {
    const double hw = d.halfwidth();
    const auto pts = d.centerline();
    std::vector<Gate> gates;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double len = std::abs(pts[i + 1] - pts[i]);
        const double ta = std::min(d.turn_angle(i), 3.0);
        const double tb = std::min(d.turn_angle(i + 1), 3.0);
        const double ea = hw * std::tan(ta / 2) + 1e-9 * hw;
        const double eb = hw * std::tan(tb / 2) + 1e-9 * hw;
        const double avail = len - ea - eb;
        if (avail <= 0) continue;
        const int n = static_cast<int>(std::ceil(avail / hw)) + 1;
        const cplx t = (pts[i + 1] - pts[i]) / len;
        const cplx nrm = cplx(0, 1) * t;
        for (int j = 0; j < n; ++j) {
            const double u = ea + avail * j / (n - 1);
            const cplx c = pts[i] + t * u;
            const Gate g{d.segment_start(i) + u, c - hw * nrm, c + hw * nrm};
            // a crosscut needs both ends on the boundary
            if (d.centerline_distance(g.a) >= hw * (1 - 1e-12) && d.centerline_distance(g.b) >= hw * (1 - 1e-12))
                gates.push_back(g);
        }
    }
    return gates;
}

}  // namespace

double point_segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double l2 = std::norm(ab);
    if (l2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double segment_segment_distance(cplx a, cplx b, cplx c, cplx d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

TubeDomain::TubeDomain(std::vector<cplx> centerline, double halfwidth)
    : pts_(std::move(centerline)), hw_(halfwidth) {
    if (pts_.size() < 2) throw std::invalid_argument("TubeDomain: need at least two centerline points");
    if (!(hw_ > 0.0)) throw std::invalid_argument("TubeDomain: halfwidth must be positive");
    cum_.assign(1, 0.0);
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
        const double l = std::abs(pts_[i + 1] - pts_[i]);
        if (!(l > 0.0)) throw std::invalid_argument("TubeDomain: repeated centerline point");
        cum_.push_back(cum_.back() + l);
    }
}

TubeDomain::Projection TubeDomain::project(cplx z) const {
    Projection best;
    best.dist = kInf;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
        const cplx a = pts_[i], ab = pts_[i + 1] - a;
        const double l2 = std::norm(ab);
        const double t = std::clamp(((z - a) * std::conj(ab)).real() / l2, 0.0, 1.0);
        const cplx foot = a + t * ab;
        const double dd = std::abs(z - foot);
        if (dd < best.dist) {
            best.dist = dd;
            best.segment = i;
            best.s = cum_[i] + t * std::sqrt(l2);
            best.offset = cross(ab, z - a) >= 0 ? dd : -dd;
        }
    }
    return best;
}

double TubeDomain::centerline_distance(cplx z) const {
    double best = kInf;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
        best = std::min(best, point_segment_distance(z, pts_[i], pts_[i + 1]));
    return best;
}

double TubeDomain::clearance(cplx z) const { return hw_ - centerline_distance(z); }

cplx TubeDomain::point_at(double s) const {
    if (s <= 0.0) return pts_.front() + tangent_at(0.0) * s;
    if (s >= length()) return pts_.back() + tangent_at(length()) * (s - length());
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cum_.begin()) - 1;
    const double l = cum_[i + 1] - cum_[i];
    return pts_[i] + (pts_[i + 1] - pts_[i]) * ((s - cum_[i]) / l);
}

cplx TubeDomain::tangent_at(double s) const {
    std::size_t i = 0;
    if (s >= length()) i = pts_.size() - 2;
    else if (s > 0.0) i = static_cast<std::size_t>(std::upper_bound(cum_.begin(), cum_.end(), s) - cum_.begin()) - 1;
    const cplx d = pts_[i + 1] - pts_[i];
    return d / std::abs(d);
}

double TubeDomain::turn_angle(std::size_t v) const {
    if (v == 0 || v + 1 >= pts_.size()) return 0.0;
    const cplx a = pts_[v] - pts_[v - 1], b = pts_[v + 1] - pts_[v];
    return std::abs(std::arg(b / a));
}

double TubeDomain::inscribed_radius_bound() const {
    double theta = 0.0;
    for (std::size_t v = 1; v + 1 < pts_.size(); ++v) theta = std::max(theta, turn_angle(v));
    const double c = std::cos(theta / 2);
    if (c < 1e-6) return hw_ * 1e6;
    return up(hw_ / c);
}

bool TubeDomain::embedded() const {
    struct Piece {
        cplx a, b;
        double sa, sb;
    };
    std::vector<Piece> pieces;
    const double step = hw_ / 4;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
        const double l = cum_[i + 1] - cum_[i];
        const int n = std::max(1, static_cast<int>(std::ceil(l / step)));
        for (int j = 0; j < n; ++j) {
            const double u0 = l * j / n, u1 = l * (j + 1) / n;
            const cplx d = (pts_[i + 1] - pts_[i]) / l;
            pieces.push_back({pts_[i] + d * u0, pts_[i] + d * u1, cum_[i] + u0, cum_[i] + u1});
        }
    }
    const double cell = 2 * hw_;
    auto key = [](long x, long y) { return (static_cast<long long>(x) << 32) ^ static_cast<unsigned long>(y); };
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    auto cells = [&](const Piece& p, double pad, auto&& fn) {
        const long x0 = static_cast<long>(std::floor((std::min(p.a.real(), p.b.real()) - pad) / cell));
        const long x1 = static_cast<long>(std::floor((std::max(p.a.real(), p.b.real()) + pad) / cell));
        const long y0 = static_cast<long>(std::floor((std::min(p.a.imag(), p.b.imag()) - pad) / cell));
        const long y1 = static_cast<long>(std::floor((std::max(p.a.imag(), p.b.imag()) + pad) / cell));
        for (long x = x0; x <= x1; ++x)
            for (long y = y0; y <= y1; ++y) fn(key(x, y));
    };
    for (std::size_t i = 0; i < pieces.size(); ++i) cells(pieces[i], 0.0, [&](long long k) { grid[k].push_back(i); });
    const double gap = std::numbers::pi * hw_;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        bool bad = false;
        cells(pieces[i], cell, [&](long long k) {
            if (bad) return;
            const auto it = grid.find(k);
            if (it == grid.end()) return;
            for (std::size_t j : it->second) {
                if (j <= i) continue;
                if (pieces[j].sa - pieces[i].sb < gap) continue;
                const Piece& p = pieces[i];
                const Piece& q = pieces[j];
                if (segment_segment_distance(p.a, p.b, q.a, q.b) < 2 * hw_ * (1 - 1e-9)) {
                    bad = true;
                    return;
                }
            }
        });
        if (bad) return false;
    }
    return true;
}

double hyp_length_upper(const TubeDomain& domain, std::span<const cplx> path) {
    if (path.size() < 2) return 0.0;
    const double hw = domain.halfwidth();
    const auto cl = domain.centerline();
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const cplx a = path[k], b = path[k + 1];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        const cplx dir = (b - a) / len;
        double t = 0.0;
        while (t < len) {
            const cplx p = a + dir * t;
            const double c0 = domain.clearance(p);
            if (!(c0 > 1e-12)) throw std::domain_error("hyp_length_upper: path touches or leaves the tube");
            double ell = std::min(len - t, 0.1 * c0);
            for (;;) {
                const cplx q = t + ell >= len ? b : a + dir * (t + ell);
                // distance to each segment is convex along the piece
                double far = kInf;
                for (std::size_t i = 0; i + 1 < cl.size(); ++i)
                    far = std::min(far, std::max(point_segment_distance(p, cl[i], cl[i + 1]),
                                                 point_segment_distance(q, cl[i], cl[i + 1])));
                const double cmin = down(hw - far);
                if (cmin > 0.0) {
                    total = up(total + up(up(2.0 * ell) / cmin));
                    break;
                }
                ell /= 2;
                if (ell < 1e-12) throw std::domain_error("hyp_length_upper: path touches or leaves the tube");
            }
            t += ell;
        }
    }
    return total;
}

double target_distance(const Target& target, cplx z) {
    if (const auto* v = std::get_if<VerticalSection>(&target))
        return point_segment_distance(z, cplx(v->x, v->y_min), cplx(v->x, v->y_max));
    const auto& pts = std::get<PolylineTarget>(target).points;
    if (pts.size() == 1) return std::abs(z - pts[0]);
    double best = kInf;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) best = std::min(best, point_segment_distance(z, pts[i], pts[i + 1]));
    return best;
}

namespace {

double gate_target_distance(const Target& target, const Gate& g) {
    if (const auto* v = std::get_if<VerticalSection>(&target))
        return segment_segment_distance(g.a, g.b, cplx(v->x, v->y_min), cplx(v->x, v->y_max));
    const auto& pts = std::get<PolylineTarget>(target).points;
    if (pts.size() == 1) return point_segment_distance(pts[0], g.a, g.b);
    double best = kInf;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        best = std::min(best, segment_segment_distance(g.a, g.b, pts[i], pts[i + 1]));
    return best;
}

std::vector<cplx> target_samples(const Target& target, double step) {
    std::vector<cplx> out;
    auto sample = [&](cplx a, cplx b) {
        const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step)));
        for (int j = 0; j <= n; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / n));
    };
    if (const auto* v = std::get_if<VerticalSection>(&target)) {
        sample(cplx(v->x, v->y_min), cplx(v->x, v->y_max));
    } else {
        const auto& pts = std::get<PolylineTarget>(target).points;
        if (pts.size() == 1) out.push_back(pts[0]);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) sample(pts[i], pts[i + 1]);
    }
    return out;
}

}  // namespace

double hyp_dist_lower(const TubeDomain& domain, cplx z0, const Target& target) {
    if (!domain.contains(z0)) throw std::domain_error("hyp_dist_lower: start point outside the tube");
    if (target_distance(target, z0) < 1e-12) return 0.0;
    const double hw = domain.halfwidth();
    std::vector<double> reach;
    for (cplx q : target_samples(target, hw / 8))
        if (domain.contains(q)) reach.push_back(domain.project(q).s);
    if (reach.empty()) throw std::domain_error("hyp_dist_lower: target not reachable inside the tube");
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end(), [&](double x, double y) { return y - x < hw / 16; }), reach.end());

    const std::vector<Gate> gates = make_gates(domain);
    const double s0 = domain.project(z0).s;
    const double margin = 2 * hw;
    double best = kInf;
    for (double sq : reach) {
        std::vector<const Gate*> chain;
        const double lo = std::min(s0, sq) + margin, hi = std::max(s0, sq) - margin;
        for (const Gate& g : gates)
            if (g.s > lo && g.s < hi) chain.push_back(&g);
        if (sq < s0) std::reverse(chain.begin(), chain.end());
        double len;
        if (chain.empty()) {
            len = target_distance(target, z0);
        } else {
            len = point_segment_distance(z0, chain.front()->a, chain.front()->b);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                len += segment_segment_distance(chain[i]->a, chain[i]->b, chain[i + 1]->a, chain[i + 1]->b);
            len += gate_target_distance(target, *chain.back());
        }
        best = std::min(best, len);
    }
    // density >= 1/(2 dist) >= 1/(2 R) with R bounding every inscribed disk
    const double r = domain.inscribed_radius_bound();
    return std::max(0.0, down(down(best * (1 - 1e-12)) / (2 * r)));
}

}  // namespace blog
