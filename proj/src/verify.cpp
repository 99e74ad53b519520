#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "blog/rays.hpp"

namespace blog {

namespace {

// log-uniform over [lo, hi]; lo may be negative
double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return lo + std::expm1(u(rng) * std::log1p(hi - lo));
}

std::pair<double, double> open_range(const BlogModel& m, const TractId& t, double cap) {
    auto [lo, hi] = m.param_range(t);
    lo += 1e-9 * (1.0 + std::abs(lo));
    return {lo, std::min(hi, cap)};
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

HeadStartReport headstart_verify_pair(const BlogModel& model, const TractId& t, const TractId& t_next,
                                      const HeadStartParams& phi, std::size_t n_samples, std::uint64_t seed) {
    HeadStartReport rep{phi, n_samples, 0, false, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> across(-0.999, 0.999);
    const auto [lo, hi] = open_range(model, t_next, 1e300);

    struct Sample {
        cplx z, fz;
    };
    // draw F(z) in cl T' first, then pull back into T
    auto draw = [&]() -> std::optional<Sample> {
        const double x = log_uniform(rng, lo, hi);
        const double v = across(rng);
        try {
            const cplx zeta = model.tract_param(t_next, x, v);
            if (!(zeta.real() > model.offset())) return std::nullopt;
            const cplx z = model.inverse(t, zeta);
            if (!model.contains(t, z)) return std::nullopt;
            const cplx fz = model.eval(t, z);
            if (!finite(fz)) return std::nullopt;
            return Sample{z, fz};
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };

    for (std::size_t i = 0; i < n_samples; ++i) {
        auto a = draw(), b = draw();
        if (!a || !b) continue;
        if (!(b->z.real() > phi.phi(a->z.real()))) std::swap(a, b);
        if (!(b->z.real() > phi.phi(a->z.real()))) continue;
        ++rep.n_tested;
        const double lhs = b->fz.real(), rhs = phi.phi(a->fz.real());
        if (!(lhs > rhs)) rep.violations.push_back({a->z, b->z, lhs, rhs});
    }
    rep.vacuous = rep.n_tested == 0;
    return rep;
}

SlopeReport check_bounded_slope(const BlogModel& model, const TractId& t, const SlopeOptions& opt) {
    SlopeReport rep;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> across(-0.999, 0.999);
    const auto [lo, hi] = open_range(model, t, 1e4);

    std::vector<cplx> pts;
    pts.reserve(opt.samples);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        try {
            pts.push_back(model.tract_param(t, log_uniform(rng, lo, hi), across(rng)));
        } catch (const std::domain_error&) {
        }
    }
    if (pts.size() < 2) return rep;

    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    std::vector<std::pair<double, double>> pairs;  // (|dIm|, max(Re z, Re w, 0))
    std::vector<std::pair<cplx, cplx>> raw;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        const cplx z = pts[pick(rng)], w = pts[pick(rng)];
        pairs.emplace_back(std::abs(z.imag() - w.imag()), std::max({z.real(), w.real(), 0.0}));
        raw.emplace_back(z, w);
    }
    rep.n_pairs = pairs.size();

    for (int j = 1; 0.05 * j <= opt.alpha_max + 1e-12; ++j) {
        const double alpha = 0.05 * j;
        double beta = 1e-9;
        for (const auto& [dy, rx] : pairs) beta = std::max(beta, dy - alpha * rx);
        if (beta <= opt.beta_cap) {
            rep.fitted = SlopeParams{alpha, beta};
            break;
        }
    }
    rep.unbounded_suspected = !rep.fitted;

    if (opt.user) {
        rep.user = opt.user;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const double rhs = opt.user->alpha * pairs[i].second + opt.user->beta;
            if (!(pairs[i].first <= rhs)) rep.violations.push_back({raw[i].first, raw[i].second, pairs[i].first, rhs});
        }
    }
    return rep;
}

WigglingReport check_wiggling(const BlogModel& model, const TractId& t, double K, double mu, std::size_t n_geodesics,
                              std::size_t n_points, std::uint64_t seed) {
    if (!model.normalized() && model.family() != "tube")
        throw std::invalid_argument("check_wiggling: model must be normalized");
    if (!(K > 0.0)) throw std::invalid_argument("check_wiggling: K must be positive");
    WigglingReport rep{K, mu, n_geodesics, n_points, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> across(-0.999, 0.999);
    const auto [lo, hi] = open_range(model, t, std::min(1e4, model.max_depth()));
    // largest image modulus reachable without leaving the tract's evaluable part
    const double t_cap = std::min(1e300, std::abs(model.eval(t, model.tract_param(t, hi, 0.0))));

    for (std::size_t g = 0; g < n_geodesics; ++g) {
        cplx z0, f0;
        for (int tries = 0;; ++tries) {
            if (tries > 1000) throw std::domain_error("check_wiggling: cannot sample base points in the tract");
            try {
                z0 = model.tract_param(t, log_uniform(rng, lo, hi), across(rng));
                f0 = model.eval(t, z0);
                if (finite(f0) && f0.real() > model.offset()) break;
            } catch (const std::domain_error&) {
            }
        }
        const double rhs = z0.real() / K - mu;
        for (std::size_t j = 0; j < n_points; ++j) {
            const double s = j == 0 ? 0.0 : log_uniform(rng, 0.0, t_cap);
            const cplx gamma = j == 0 ? z0 : model.inverse(t, f0 + s);
            const double lhs = std::max(gamma.real(), 0.0);
            if (!(lhs > rhs)) rep.violations.push_back({z0, s, gamma, lhs, rhs});
        }
    }
    return rep;
}

double fit_slope_offset(const BlogModel& model, const TractId& t, double K, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> across(-0.999, 0.999);
    const auto [lo, hi] = open_range(model, t, 1e4);
    double m = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = log_uniform(rng, lo, hi);
        try {
            const cplx z = model.tract_param(t, x, across(rng));
            const cplx c = model.tract_param(t, x, 0.0);
            m = std::max(m, std::abs(z.imag() - c.imag()) - K * std::max(z.real(), 0.0));
        } catch (const std::domain_error&) {
        }
    }
    return m;
}

WigglingConstants finite_order_constants(double rho, double M) {
    if (!(rho > 0.0) || !(M >= 0.0)) throw std::invalid_argument("finite_order_constants: need rho > 0 and M >= 0");
    const double k = 1.0 + 2 * std::numbers::pi * rho;
    return {k, 2 * std::numbers::pi * M / k};
}

double delta_from_prime(double dp) { return std::max(dp, 16 * std::numbers::pi * std::log(dp)); }

double delta_constants(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("delta_constants: need alpha, beta > 0");
    return delta_from_prime(alpha + beta + 2.0);
}

double delta_constants(double alpha, double beta, double K, double Q) {
    auto ok = [&](double d) {
        const double x = d - 0.5;
        return std::exp(x / (16 * std::numbers::pi)) > x + K + Q + 0.5;
    };
    double lo = delta_constants(alpha, beta);
    if (ok(lo)) return lo;
    double step = 1.0, hi = lo + step;
    while (!ok(hi)) {
        lo = hi;
        step *= 2;
        hi = lo + step;
        if (!std::isfinite(hi)) throw std::overflow_error("delta_constants: search diverged");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace blog
