#include "blog/realize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "blog/parallel.hpp"

namespace blog {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
const cplx kTwoPiI(0.0, 2 * std::numbers::pi);

// Gauss-Kronrod 7/15 on [-1, 1], nodes ascending
constexpr std::array<double, 15> kNodes{
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851, -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788, -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,  0.586087235467691130294144845693013,
    0.741531185599394439863864773280788,  0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr std::array<double, 15> kKronrod{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
// Gauss weights on the odd Kronrod nodes, zero elsewhere
constexpr std::array<double, 15> kGauss{0.0,
                                        0.129484966168869693270611432679082,
                                        0.0,
                                        0.279705391489276667901467771423780,
                                        0.0,
                                        0.381830050505118944950369775488975,
                                        0.0,
                                        0.417959183673469387755102040816327,
                                        0.0,
                                        0.381830050505118944950369775488975,
                                        0.0,
                                        0.279705391489276667901467771423780,
                                        0.0,
                                        0.129484966168869693270611432679082,
                                        0.0};

constexpr double kNearSwitch = 0.5;

// F = f(alpha) alpha' / (2 pi i), D = alpha' / (2 pi i)
struct Node {
    double t;
    cplx alpha, F, D;
};

Node make_node(const ContourSpec& s, double t) {
    const cplx a = alpha_point(s, t);
    const cplx d = alpha_deriv(s, t) / kTwoPiI;
    return {t, a, std::exp(alpha_tilde(s, t)) * d, d};
}

cplx div(cplx num, cplx den) {
    const double n2 = std::norm(den);
    return num * std::conj(den) / n2;
}

}  // namespace

class Contour {
public:
    struct Panel {
        double a, b;
        std::array<Node, 15> nodes;
        cplx alpha_a;
        cplx center;
        double radius;
        double fmax;
    };

    explicit Contour(const ContourSpec& s) {
        const double c = std::abs(std::cos(s.eta));
        t_cache_ = 746.0 / c + 1.0;
        std::vector<double> cuts;
        // unit panels on the core, doubling widths in the tails
        const double core = std::ceil(s.t_max);
        for (double t = 0.0; t < core; t += 1.0) cuts.push_back(t);
        double w = 1.0, t = core;
        while (t < t_cache_) {
            cuts.push_back(t);
            w *= 2;
            t += w;
        }
        cuts.push_back(t_cache_);
        std::vector<double> all;
        for (auto it = cuts.rbegin(); it != cuts.rend(); ++it)
            if (*it > 0.0) all.push_back(-*it);
        all.insert(all.end(), cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < all.size(); ++i) panels_.push_back(make_panel(s, all[i], all[i + 1]));
        alpha_end_ = alpha_point(s, t_cache_);
    }

    static Panel make_panel(const ContourSpec& s, double a, double b) {
        Panel p{a, b, {}, alpha_point(s, a), 0.0, 0.0, 0.0};
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t j = 0; j < 15; ++j) {
            p.nodes[j] = make_node(s, mid + half * kNodes[j]);
            p.fmax = std::max(p.fmax, std::abs(p.nodes[j].F));
        }
        p.center = p.nodes[7].alpha;
        double gap = std::abs(p.nodes[0].alpha - p.alpha_a);
        for (std::size_t j = 0; j < 15; ++j) {
            p.radius = std::max(p.radius, std::abs(p.nodes[j].alpha - p.center));
            if (j) gap = std::max(gap, std::abs(p.nodes[j].alpha - p.nodes[j - 1].alpha));
        }
        p.radius = std::max(p.radius, std::abs(p.alpha_a - p.center)) + gap;
        return p;
    }

    const std::vector<Panel>& panels() const { return panels_; }
    double t_cache() const { return t_cache_; }
    cplx alpha_end() const { return alpha_end_; }

private:
    std::vector<Panel> panels_;
    double t_cache_ = 0.0;
    cplx alpha_end_;
};

std::string PrescribedTract::name() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Square: return "square";
        case Kind::Strip: return "strip";
    }
    return "?";
}

bool PrescribedTract::in_domain(cplx z) const {
    switch (kind) {
        case Kind::Identity: return z.real() > 0.0;
        case Kind::Square: return z != cplx(0.0) && std::abs(std::arg(z)) < kPi / 4;
        case Kind::Strip: return std::abs(z.imag()) < kPi / 2;
    }
    return false;
}

cplx PrescribedTract::psi(cplx z) const {
    switch (kind) {
        case Kind::Identity: return z;
        case Kind::Square: return z * z;
        case Kind::Strip: return std::exp(z);
    }
    return z;
}

cplx PrescribedTract::psi_inverse(cplx w) const {
    switch (kind) {
        case Kind::Identity: return w;
        case Kind::Square: return std::sqrt(w);
        case Kind::Strip: return std::log(w);
    }
    return w;
}

cplx PrescribedTract::psi_inverse_deriv(cplx w) const {
    switch (kind) {
        case Kind::Identity: return 1.0;
        case Kind::Square: return 0.5 / std::sqrt(w);
        case Kind::Strip: return 1.0 / w;
    }
    return 1.0;
}

PrescribedTract prescribed_tract(const std::string& name) {
    if (name == "identity" || name == "id") return {PrescribedTract::Kind::Identity};
    if (name == "square") return {PrescribedTract::Kind::Square};
    if (name == "strip") return {PrescribedTract::Kind::Strip};
    throw std::invalid_argument("unknown tract map '" + name + "' (identity, square, strip)");
}

cplx alpha_tilde(const ContourSpec& s, double t) { return t >= 0.0 ? 1.0 + s.nu * t : 1.0 + std::conj(s.nu) * (-t); }

cplx alpha_point(const ContourSpec& s, double t) {
    const cplx w = std::pow(alpha_tilde(s, t), 1.0 / s.rho);
    if (!(std::abs(std::arg(w)) < kPi / 2)) throw std::domain_error("alpha_point: left the principal sector");
    return s.tract.psi_inverse(w);
}

cplx alpha_deriv(const ContourSpec& s, double t) {
    const cplx at = alpha_tilde(s, t);
    const cplx w = std::pow(at, 1.0 / s.rho);
    const cplx dat = t >= 0.0 ? s.nu : -std::conj(s.nu);
    return s.tract.psi_inverse_deriv(w) * (w / (s.rho * at)) * dat;
}

cplx f_eval(const ContourSpec& s, cplx z) {
    if (!s.tract.in_domain(z)) throw std::domain_error("f_eval: point outside V");
    return std::exp(std::pow(s.tract.psi(z), s.rho));
}

ContourSpec make_contour(const PrescribedTract& tract, double rho, double eta, double tol) {
    if (!(rho > 1.0 && rho < 2.0)) throw std::invalid_argument("contour: rho must lie in (1, 2)");
    if (!(eta > kPi / 2 && eta < rho * kPi / 2)) throw std::invalid_argument("contour: need pi/2 < eta < rho pi/2");
    if (!(tol > 0.0)) throw std::invalid_argument("contour: tol must be positive");
    ContourSpec s{rho, eta, std::polar(1.0, eta), 0.0, tol, tract, nullptr};
    const double c = std::abs(std::cos(eta));
    // sup |alpha'| for the tail majorant e^{1 - c|t|} A / (2 pi dist)
    double A = 0.0;
    for (double t = -400.0; t <= 400.0; t += 0.05) A = std::max(A, std::abs(alpha_deriv(s, t)));
    A *= 1.1;
    // two tails, distance at least 1 from the truncation point on
    s.t_max = (1.0 + std::log(10.0 * A / (kPi * c * tol))) / c;
    s.cache = std::make_shared<Contour>(s);
    return s;
}

namespace {

struct KG {
    cplx k, g;
    double mag;
};

// fz nonzero selects the subtracted integrand (F - fz D)/(alpha - z)
KG panel_sum(const std::array<Node, 15>& nodes, double half, cplx z, cplx fz) {
    KG r{0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < 15; ++j) {
        const cplx v = div(nodes[j].F - fz * nodes[j].D, nodes[j].alpha - z);
        r.k += kKronrod[j] * v;
        r.g += kGauss[j] * v;
        r.mag += kKronrod[j] * std::abs(v);
    }
    r.k *= half;
    r.g *= half;
    r.mag *= half;
    return r;
}

KG fresh_sum(const ContourSpec& s, double a, double b, cplx z, cplx fz) {
    std::array<Node, 15> nodes;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t j = 0; j < 15; ++j) nodes[j] = make_node(s, mid + half * kNodes[j]);
    return panel_sum(nodes, half, z, fz);
}

bool accept(const KG& r, double tol) {
    return std::abs(r.k - r.g) <= std::max(tol, 64 * std::numeric_limits<double>::epsilon() * r.mag);
}

cplx refine(const ContourSpec& s, double a, double b, cplx z, cplx fz, double tol, const KG& est, int depth) {
    if (accept(est, tol)) return est.k;
    if (depth > 48) throw std::domain_error("cauchy_h: quadrature did not converge");
    const double m = 0.5 * (a + b);
    const KG l = fresh_sum(s, a, m, z, fz), r = fresh_sum(s, m, b, z, fz);
    return refine(s, a, m, z, fz, tol / 2, l, depth + 1) + refine(s, m, b, z, fz, tol / 2, r, depth + 1);
}

const Contour& contour(const ContourSpec& s) {
    if (!s.cache) throw std::invalid_argument("contour spec was not built by make_contour");
    return *s.cache;
}

cplx integrate(const ContourSpec& s, cplx z, cplx fz) {
    const auto& ps = contour(s).panels();
    const double tol = s.tol / static_cast<double>(ps.size());
    const bool subtract = fz != cplx(0.0);
    cplx sum = 0.0;
    for (const auto& p : ps) {
        if (!subtract) {
            const double dlb = std::abs(z - p.center) - p.radius;
            if (dlb > 0.0 && 2 * p.fmax * (p.b - p.a) / dlb < 0.1 * tol) continue;
        }
        const KG est = panel_sum(p.nodes, 0.5 * (p.b - p.a), z, fz);
        sum += refine(s, p.a, p.b, z, fz, tol, est, 0);
    }
    return sum;
}

// continuous change of arg(alpha(t) - z) over [-T, T]
double winding_arg(const ContourSpec& s, cplx z) {
    const auto& c = contour(s);
    double total = 0.0;
    cplx prev_pt = 0.0;
    double prev_t = 0.0;
    bool first = true;
    auto step = [&](auto&& self, double ta, cplx pa, double tb, cplx pb, int depth) -> double {
        const double d = std::arg((pb - z) / (pa - z));
        if (std::abs(d) < kPi / 3 || depth > 60) return d;
        const double tm = 0.5 * (ta + tb);
        const cplx pm = alpha_point(s, tm);
        return self(self, ta, pa, tm, pm, depth + 1) + self(self, tm, pm, tb, pb, depth + 1);
    };
    auto visit = [&](double t, cplx p) {
        if (!first) total += step(step, prev_t, prev_pt, t, p, 0);
        first = false;
        prev_t = t;
        prev_pt = p;
    };
    for (const auto& p : c.panels()) {
        visit(p.a, p.alpha_a);
        for (const auto& n : p.nodes) visit(n.t, n.alpha);
    }
    visit(c.t_cache(), c.alpha_end());
    return total;
}

double nearest_node_distance(const ContourSpec& s, cplx z, double* t_near, double* spacing) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : contour(s).panels()) {
        if (std::abs(z - p.center) - p.radius > best) continue;
        const double h = (p.b - p.a) / 15;
        for (const auto& n : p.nodes) {
            const double d = std::abs(n.alpha - z);
            if (d < best) {
                best = d;
                *t_near = n.t;
                *spacing = h;
            }
        }
    }
    return best;
}

}  // namespace

double alpha_distance(const ContourSpec& s, cplx z) {
    double t0 = 0.0, h = 1.0;
    double best = nearest_node_distance(s, z, &t0, &h);
    if (best > 2.0) return best;
    // local golden-section refinement around the nearest node
    double a = t0 - 2 * h, b = t0 + 2 * h;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto dist = [&](double t) { return std::abs(alpha_point(s, t) - z); };
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = dist(x1), f2 = dist(x2);
    for (int i = 0; i < 80; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = dist(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = dist(x2);
        }
    }
    return std::min({best, f1, f2});
}

cplx cauchy_h(const ContourSpec& s, cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("cauchy_h: non-finite point");
    if (alpha_distance(s, z) < 1e-8) throw std::domain_error("cauchy_h: point too close to alpha, use g_eval");
    return integrate(s, z, 0.0);
}

cplx cauchy_h_near(const ContourSpec& s, cplx z) {
    const double d = alpha_distance(s, z);
    if (d < 1e-12) throw std::domain_error("cauchy_h: point on alpha");
    if (d >= kNearSwitch || !s.tract.in_domain(z)) return integrate(s, z, 0.0);
    const auto& c = contour(s);
    const cplx fz = f_eval(s, z);
    const cplx a_lo = c.panels().front().alpha_a, a_hi = c.alpha_end();
    // (1/2 pi i) int alpha'/(alpha - z) over the truncated contour
    const cplx w = (cplx(std::log(std::abs(a_hi - z) / std::abs(a_lo - z)), winding_arg(s, z))) / kTwoPiI;
    return integrate(s, z, fz) + fz * w;
}

Side side_of_alpha(const ContourSpec& s, cplx z) {
    if (!s.tract.in_domain(z)) throw std::invalid_argument("side_of_alpha: point outside V");
    const cplx u = std::pow(s.tract.psi(z), s.rho) - 1.0;
    const double a = std::abs(std::arg(u));
    if (std::abs(u) < 1e-12 || std::abs(a - s.eta) * std::abs(u) < 1e-12)
        throw std::domain_error("side_of_alpha: point on alpha");
    return a < s.eta ? Side::Inside : Side::Outside;
}

cplx h_only_eval(const ContourSpec& s, cplx z) { return cauchy_h_near(s, z); }

cplx g_eval(const ContourSpec& s, cplx z) {
    const cplx h = cauchy_h_near(s, z);
    if (s.tract.in_domain(z) && side_of_alpha(s, z) == Side::Inside) return h + f_eval(s, z);
    return h;
}

EntireResidual verify_entire(const ContourSpec& s, cplx center, double radius, int n_nodes, bool with_jump) {
    if (n_nodes < 3 || !(radius > 0.0)) throw std::invalid_argument("verify_entire: need n_nodes >= 3, radius > 0");
    EntireResidual r{n_nodes, 0.0, 0};
    const double dth = 2 * kPi / n_nodes;
    cplx sum = 0.0;
    for (int j = 0; j < n_nodes; ++j) {
        double th = j * dth;
        cplx zeta = center + std::polar(radius, th);
        for (int tries = 0; alpha_distance(s, zeta) < 1e-10; ++tries) {
            if (tries > 8) throw std::domain_error("verify_entire: node stuck on alpha");
            th += 1e-7 * dth;
            zeta = center + std::polar(radius, th);
            if (tries == 0) ++r.perturbed_nodes;
        }
        const cplx g = with_jump ? g_eval(s, zeta) : h_only_eval(s, zeta);
        sum += g * kI * (zeta - center);
    }
    r.residual = std::abs(sum * dth);
    return r;
}

namespace {

double sup_h(const ContourSpec& s, int n) {
    std::vector<double> row_max(static_cast<std::size_t>(n), 0.0);
    // h(conj z) = conj h(z): rows with Im >= 0 suffice
    parallel_for(n, [&](int i) {
        const double y = -20.0 + 40.0 * i / (n - 1);
        if (y < -1e-12) return;
        double m = 0.0;
        for (int j = 0; j < n; ++j) {
            const cplx z(-20.0 + 40.0 * j / (n - 1), y);
            if (alpha_distance(s, z) < 1e-6) continue;
            m = std::max(m, std::abs(cauchy_h_near(s, z)));
        }
        row_max[static_cast<std::size_t>(i)] = m;
    });
    return *std::max_element(row_max.begin(), row_max.end());
}

// h is bounded and holomorphic on each side of alpha, so its sup sits on the
// one-sided boundary values; sample them on the part of alpha inside the box
double sup_h_on_alpha(const ContourSpec& s, int n) {
    const double eps = 1e-6;
    double t_end = 0.0;
    auto in_box = [](cplx z) { return std::abs(z.real()) <= 20.0 && std::abs(z.imag()) <= 20.0; };
    while (in_box(alpha_point(s, t_end + 0.01))) t_end += 0.01;
    std::vector<double> best(static_cast<std::size_t>(n) + 1, 0.0);
    parallel_for(n + 1, [&](int j) {
        const double t = t_end * j / n;
        const cplx a = alpha_point(s, t), d = alpha_deriv(s, t);
        const cplx nrm = kI * d / std::abs(d);
        best[static_cast<std::size_t>(j)] =
            std::max(std::abs(cauchy_h_near(s, a + eps * nrm)), std::abs(cauchy_h_near(s, a - eps * nrm)));
    });
    return *std::max_element(best.begin(), best.end());
}

double sup_h_all(const ContourSpec& s, int n) { return std::max(sup_h(s, n), sup_h_on_alpha(s, 4 * n)); }

}  // namespace

MEstimate estimate_m(const ContourSpec& s, int n) {
    if (n < 2) throw std::invalid_argument("estimate_m: grid too small");
    const double m1 = sup_h_all(s, n), m2 = sup_h_all(s, 2 * n);
    return {m1, m2, std::abs(m2 - m1) / m1};
}

std::vector<JumpRow> jump_table(const ContourSpec& s, const std::vector<double>& stations,
                                const std::vector<double>& eps) {
    std::vector<JumpRow> rows;
    for (double t : stations) {
        const cplx a = alpha_point(s, t);
        const cplx d = alpha_deriv(s, t);
        // left of the direction of travel is outside V'
        const cplx n = kI * d / std::abs(d);
        const cplx fa = std::exp(alpha_tilde(s, t));
        for (double e : eps) {
            const cplx jump = cauchy_h_near(s, a + e * n) - cauchy_h_near(s, a - e * n);
            rows.push_back({t, e, std::abs(jump - fa), 1.0 + std::abs(fa)});
        }
    }
    return rows;
}

TractReport tract_of_g(const ContourSpec& s, double K, const GridWindow& win) {
    if (win.nx < 1 || win.ny < 1 || !(win.re_min < win.re_max) || !(win.im_min < win.im_max))
        throw std::invalid_argument("tract_of_g: bad window");
    TractReport rep;
    rep.K = K;
    const int nx = win.nx, ny = win.ny;
    const double dx = (win.re_max - win.re_min) / nx, dy = (win.im_max - win.im_min) / ny;
    rep.mask.assign(static_cast<std::size_t>(nx) * ny, 0);
    std::vector<std::size_t> outside(static_cast<std::size_t>(ny), 0);
    const bool mirror = win.im_min == -win.im_max;
    auto at = [&](int r, int c) -> unsigned char& { return rep.mask[static_cast<std::size_t>(r) * nx + c]; };

    parallel_for(ny, [&](int r) {
        if (mirror && r >= (ny + 1) / 2) return;
        const double y = win.im_max - (r + 0.5) * dy;
        for (int c = 0; c < nx; ++c) {
            cplx z(win.re_min + (c + 0.5) * dx, y);
            cplx g;
            try {
                g = g_eval(s, z);
            } catch (const std::domain_error&) {
                z += cplx(1e-9, 1e-9);
                g = g_eval(s, z);
            }
            const bool in_w = std::abs(g) > K;
            at(r, c) = in_w;
            if (in_w && !s.tract.in_domain(z)) ++outside[static_cast<std::size_t>(r)];
        }
    });
    if (mirror) {
        for (int r = (ny + 1) / 2; r < ny; ++r) {
            for (int c = 0; c < nx; ++c) at(r, c) = at(ny - 1 - r, c);
            outside[static_cast<std::size_t>(r)] = outside[static_cast<std::size_t>(ny - 1 - r)];
        }
    }
    rep.n_points = rep.mask.size();
    for (auto v : rep.mask) rep.n_in_w += v;
    for (auto o : outside) rep.outside_v += o;

    // 4-neighbour components of W and of its complement; complement components
    // that never touch the window border are bounded holes
    std::vector<int> label(rep.mask.size(), -1);
    auto flood = [&](int r0, int c0, unsigned char val, int id) {
        bool border = false;
        std::vector<std::pair<int, int>> stack{{r0, c0}};
        label[static_cast<std::size_t>(r0) * nx + c0] = id;
        while (!stack.empty()) {
            auto [r, c] = stack.back();
            stack.pop_back();
            if (r == 0 || c == 0 || r == ny - 1 || c == nx - 1) border = true;
            const int dr[4] = {1, -1, 0, 0}, dc[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                const int rr = r + dr[k], cc = c + dc[k];
                if (rr < 0 || cc < 0 || rr >= ny || cc >= nx) continue;
                const auto idx = static_cast<std::size_t>(rr) * nx + cc;
                if (label[idx] != -1 || rep.mask[idx] != val) continue;
                label[idx] = id;
                stack.emplace_back(rr, cc);
            }
        }
        return border;
    };
    int id = 0;
    for (int r = 0; r < ny; ++r)
        for (int c = 0; c < nx; ++c) {
            const auto idx = static_cast<std::size_t>(r) * nx + c;
            if (label[idx] != -1) continue;
            const bool border = flood(r, c, rep.mask[idx], id++);
            if (rep.mask[idx]) ++rep.components;
            else if (!border) ++rep.holes;
        }

    // the row just above the real axis
    const int axis = std::clamp(static_cast<int>(std::floor((win.im_max - 0.0) / dy - 0.5)), 0, ny - 1);
    int c0 = nx;
    while (c0 > 0 && at(axis, c0 - 1)) --c0;
    rep.has_axis_ray = c0 < nx;
    rep.axis_ray_x0 = win.re_min + (c0 + 0.5) * dx;
    return rep;
}

nlohmann::json realize_json(const ContourSpec& s, const MEstimate& m, double K, const std::vector<JumpRow>& jumps,
                            const std::vector<EntireResidual>& residuals, const TractReport& tract) {
    using nlohmann::json;
    json jt = json::array();
    for (const auto& r : jumps) jt.push_back({{"t", r.t}, {"eps", r.eps}, {"error", r.error}, {"scale", r.scale}});
    json er = json::array();
    for (const auto& r : residuals)
        er.push_back({{"n_nodes", r.n_nodes}, {"residual", r.residual}, {"perturbed_nodes", r.perturbed_nodes}});
    return {{"schema_version", 1},
            {"psi", s.tract.name()},
            {"rho", s.rho},
            {"eta", s.eta},
            {"t_max", s.t_max},
            {"tol", s.tol},
            {"M_est", m.m_est},
            {"M_est_refined", m.m_refined},
            {"M_est_relative_change", m.relative_change},
            {"K", K},
            {"jump_table", jt},
            {"entire_residuals", er},
            {"tract_check",
             {{"points", tract.n_points},
              {"in_W", tract.n_in_w},
              {"outside_V", tract.outside_v},
              {"components", tract.components},
              {"holes", tract.holes},
              {"axis_ray", tract.has_axis_ray},
              {"axis_ray_x0", tract.axis_ray_x0}}}};
}

}  // namespace blog
