#include "blog/rays.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace blog {

ExternalAddress::ExternalAddress(std::vector<TractId> pre, std::vector<TractId> per)
    : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) throw std::invalid_argument("external address: empty period");
    const auto n = period.front().parts.size();
    auto same_shape = [n](const TractId& t) { return t.parts.size() == n; };
    if (!std::all_of(preperiod.begin(), preperiod.end(), same_shape) ||
        !std::all_of(period.begin(), period.end(), same_shape))
        throw std::invalid_argument("external address: tract ids with different stage counts");
}

const TractId& ExternalAddress::at(std::size_t k) const {
    if (k < preperiod.size()) return preperiod[k];
    return period[(k - preperiod.size()) % period.size()];
}

ExternalAddress ExternalAddress::shifted(std::size_t n) const {
    if (n <= preperiod.size())
        return {std::vector<TractId>(preperiod.begin() + static_cast<long>(n), preperiod.end()), period};
    const std::size_t r = (n - preperiod.size()) % period.size();
    std::vector<TractId> per(period.begin() + static_cast<long>(r), period.end());
    per.insert(per.end(), period.begin(), period.begin() + static_cast<long>(r));
    return {{}, per};
}

ExternalAddress ExternalAddress::constant(const TractId& t) { return {{}, {t}}; }

namespace {

Tract parse_part(const std::string& tok) {
    std::size_t used = 0;
    try {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) {
            const long n = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return {0, n};
        }
        const int f = std::stoi(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(tok);
        const auto rest = tok.substr(colon + 1);
        const long n = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(tok);
        if (f < 0) throw std::invalid_argument(tok);
        return {f, n};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad tract token '" + tok + "'");
    }
}

TractId parse_tract(const std::string& tok) {
    std::vector<Tract> parts;
    std::size_t start = 0;
    while (true) {
        const auto slash = tok.find('/', start);
        parts.push_back(parse_part(tok.substr(start, slash - start)));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    return TractId(std::move(parts));
}

}  // namespace

ExternalAddress parse_address(const std::string& text) {
    std::vector<TractId> pre, per;
    bool in_period = false, closed = false;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        if (closed) throw std::invalid_argument("address: tokens after the period");
        (in_period ? per : pre).push_back(parse_tract(tok));
        tok.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            flush();
        } else if (ch == '(') {
            flush();
            if (in_period || closed) throw std::invalid_argument("address: nested or repeated period");
            in_period = true;
        } else if (ch == ')') {
            flush();
            if (!in_period) throw std::invalid_argument("address: unbalanced ')'");
            in_period = false;
            closed = true;
        } else {
            tok += ch;
        }
    }
    flush();
    if (in_period) throw std::invalid_argument("address: missing ')'");
    if (!closed || per.empty()) throw std::invalid_argument("address: needs a nonempty period in parentheses");
    return {std::move(pre), std::move(per)};
}

std::string to_string(const ExternalAddress& a) {
    std::string out;
    for (const auto& t : a.preperiod) out += to_string(t) + " ";
    out += "(";
    for (std::size_t i = 0; i < a.period.size(); ++i) out += (i ? " " : "") + to_string(a.period[i]);
    return out + ")";
}

RayApproximation trace_ray(const BlogModel& model, const ExternalAddress& address, int depth, double seed_re,
                           const std::vector<double>& potentials) {
    if (depth < 1) throw std::invalid_argument("trace_ray: depth must be at least 1");
    std::vector<double> ts = potentials;
    std::sort(ts.begin(), ts.end());
    if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
        throw std::invalid_argument("trace_ray: potentials must be distinct");
    const auto n = static_cast<std::size_t>(depth);
    const TractId& deepest = address.at(n);

    RayApproximation ray{address, {}, depth, 0.0};
    double seed_move = 0.0;
    for (double t : ts) {
        const cplx seed = model.tract_param(deepest, seed_re + t, 0.0);
        if (!model.contains(deepest, seed) || !(seed.real() > model.offset()))
            throw std::domain_error("trace_ray: seed at potential " + std::to_string(t) + " lies outside tract " +
                                    to_string(deepest));
        cplx z = seed;
        for (std::size_t k = n; k-- > 0;) {
            try {
                z = model.inverse(address.at(k), z);
            } catch (const std::domain_error& e) {
                throw std::domain_error("trace_ray: pullback failed at depth " + std::to_string(k) + ": " + e.what());
            }
        }
        seed_move = std::max(seed_move, std::abs(seed - model.inverse(deepest, seed)));
        ray.points.push_back({t, z});
    }
    // deeper seeds differ from this stage's seed by at most the one-step seed
    // displacement (geometric series with ratio 1/2) plus the spread of tract axes
    double spread = 0.0;
    const std::size_t tail = address.preperiod.size() + address.period.size();
    for (std::size_t i = n; i < n + tail; ++i)
        for (std::size_t j = i + 1; j < n + tail; ++j)
            spread = std::max(spread, std::abs(model.tract_param(address.at(i), seed_re, 0.0) -
                                               model.tract_param(address.at(j), seed_re, 0.0)));
    ray.error_bound = (2 * seed_move + spread) * std::ldexp(1.0, -depth);
    return ray;
}

std::string ray_csv(const RayApproximation& ray) {
    std::ostringstream out;
    out << "potential,re,im,depth,error_bound\n";
    char buf[160];
    for (const auto& p : ray.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d,%.17g\n", p.potential, p.z.real(), p.z.imag(), ray.depth,
                      ray.error_bound);
        out << buf;
    }
    return out.str();
}

HeadStartParams::HeadStartParams(double k, double m) : K(k), M(m) {
    if (!(K > 1.0) || !(M > 0.0)) throw std::invalid_argument("head-start parameters need K > 1 and M > 0");
}

const char* to_string(Speed s) {
    switch (s) {
        case Speed::Greater: return "greater";
        case Speed::Less: return "less";
        case Speed::Undecided: return "undecided";
    }
    return "?";
}

namespace {

TowerInterval phi_tower(const HeadStartParams& p, const TowerInterval& x) {
    TowerInterval pos = x;
    if (pos.lo.level == 0 && pos.lo.mantissa < 0.0) pos.lo = TowerReal{0, 0.0};
    if (pos.hi.level == 0 && pos.hi.mantissa < 0.0) pos.hi = TowerReal{0, 0.0};
    return tower_add(tower_scale(pos, p.K), p.M);
}

bool real_tower_path(const BlogModel& model, cplx z, cplx w, const ExternalAddress& a, int maxiter) {
    if (z.imag() != 0.0 || w.imag() != 0.0) return false;
    const TractId t0;
    for (int k = 0; k <= maxiter; ++k)
        if (!(a.at(static_cast<std::size_t>(k)) == t0)) return false;
    return model.eval_real_tower(TractId(), TowerInterval::point(z.real())).has_value();
}

SpeedResult speed_tower(const BlogModel& model, double z, double w, const HeadStartParams& phi, int maxiter) {
    const TractId t0;
    const auto floor = TowerInterval::point(model.tract_min_re(t0));
    TowerInterval x = TowerInterval::point(z), y = TowerInterval::point(w);
    for (int k = 0; k <= maxiter; ++k) {
        if (tower_less(floor, x) != Verdict::Pass || tower_less(floor, y) != Verdict::Pass)
            throw std::domain_error("speed_compare: orbit left the address at step " + std::to_string(k));
        if (tower_less(phi_tower(phi, y), x) == Verdict::Pass) return {Speed::Greater, k};
        if (tower_less(phi_tower(phi, x), y) == Verdict::Pass) return {Speed::Less, k};
        if (k == maxiter) break;
        x = *model.eval_real_tower(t0, x);
        y = *model.eval_real_tower(t0, y);
    }
    return {Speed::Undecided, -1};
}

}  // namespace

SpeedResult speed_compare(const BlogModel& model, cplx z, cplx w, const ExternalAddress& address,
                          const HeadStartParams& phi, int maxiter) {
    if (maxiter < 0) throw std::invalid_argument("speed_compare: maxiter must be non-negative");
    if (z == w) {
        // phi(t) > t, so neither orbit can get ahead; only the address is checked
        if (!model.contains(address.at(0), z))
            throw std::domain_error("speed_compare: orbit left the address at step 0");
        return {Speed::Undecided, -1};
    }
    if (real_tower_path(model, z, w, address, maxiter)) return speed_tower(model, z.real(), w.real(), phi, maxiter);
    for (int k = 0; k <= maxiter; ++k) {
        const TractId& t = address.at(static_cast<std::size_t>(k));
        if (!model.contains(t, z) || !model.contains(t, w))
            throw std::domain_error("speed_compare: orbit left the address at step " + std::to_string(k));
        if (z.real() > phi.phi(w.real())) return {Speed::Greater, k};
        if (w.real() > phi.phi(z.real())) return {Speed::Less, k};
        if (k == maxiter) break;
        z = model.eval(t, z);
        w = model.eval(t, w);
        if (!std::isfinite(std::abs(z)) || !std::isfinite(std::abs(w)))
            throw std::overflow_error("speed_compare: orbit overflowed before a decision at step " + std::to_string(k));
    }
    return {Speed::Undecided, -1};
}

}  // namespace blog
