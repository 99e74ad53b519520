#include "blog/counterexample.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace blog {

namespace {

constexpr double kPi = std::numbers::pi;

TowerInterval P(double x) { return TowerInterval::point(x); }
TowerInterval sc(const TowerInterval& a, double c) { return tower_scale(a, c); }
TowerInterval ad(const TowerInterval& a, double c) { return tower_add(a, c); }
Verdict lt(const TowerInterval& a, const TowerInterval& b) { return tower_less(a, b); }
Verdict lt(double a, const TowerInterval& b) { return tower_less(a, b); }
Verdict all(std::initializer_list<Verdict> vs) {
    Verdict r = Verdict::Pass;
    for (Verdict v : vs) r = verdict_and(r, v);
    return r;
}

std::string at_k(const std::string& what, int k) { return what + " at k=" + std::to_string(k); }

// for k >= 1 both sides are exponentials of multiples of sep xi_{k-1}: compare the
// factors, because once the shared mantissa is huge the two enclosures coincide
Verdict xi_below_sep(const WiggleSpec& s, int k) {
    if (k == 0) return lt(s.xi[0], s.sep_xi[0]);
    return verdict_and(lt(0.0, s.sep_xi[static_cast<std::size_t>(k) - 1]), verdict_of(1.0 / s.M < 12 * s.M));
}

}  // namespace

WiggleSpec build_sequences(double M, double xi0, int k_max, double h_prime, double H) {
    if (!(M > 1.0 && M < 1.75)) throw std::invalid_argument("build_sequences: M must lie in (1, 1.75)");
    if (!(xi0 > 2.0)) throw std::invalid_argument("build_sequences: xi0 must exceed 2");
    if (k_max < 0) throw std::invalid_argument("build_sequences: k_max must be non-negative");
    WiggleSpec s;
    s.M = M;
    s.xi0 = xi0;
    s.h_prime = h_prime;
    s.H = H;
    s.k_max = k_max;
    s.xi.push_back(P(xi0));
    s.sep_xi.push_back(tower_pow(P(xi0), 12 * M * M));
    for (int k = 0; k < k_max; ++k) {
        const auto& sk = s.sep_xi.back();
        s.xi.push_back(tower_exp(sc(sk, 1.0 / M)));
        s.sep_xi.push_back(tower_exp(sc(sk, 12 * M)));
    }
    for (int k = 0; k <= k_max; ++k) {
        if (xi_below_sep(s, k) != Verdict::Pass)
            throw std::domain_error("build_sequences: tube well-formedness xi_k < sep xi_k fails" +
                                    at_k("", k));
        if (k < k_max && lt(ad(s.sep_xi[k], 4 + 2 * h_prime), s.xi[k + 1]) != Verdict::Pass)
            throw std::domain_error("build_sequences: tube well-formedness sep xi_k + 4 + 2h' < xi_{k+1} fails" +
                                    at_k("", k));
    }
    return s;
}

std::optional<Premise> RhoBounds::first_failure() const {
    for (const auto& p : premises)
        if (p.verdict != Verdict::Pass) return p;
    return std::nullopt;
}

RhoBounds rho_bounds(const WiggleSpec& spec, bool strict) {
    const double M = spec.M, h = spec.h_prime;
    const double cm = M * (12 * M + 1);
    const auto n = static_cast<std::size_t>(spec.k_max) + 2;
    RhoBounds b;
    b.rho.resize(n);
    b.sep_rho.resize(n);
    b.sepp_rho.resize(n);
    auto between = [](const TowerInterval& s, double c_lo, double c_hi) {
        return TowerInterval::of(tower_exp(sc(s, c_lo)).lo, tower_exp(sc(s, c_hi)).hi);
    };
    for (int k = 0; k <= spec.k_max; ++k) {
        const auto& x = spec.xi[k];
        const auto& s = spec.sep_xi[k];
        b.rho[k + 1] = between(s, 1.0, 4 * kPi / 3);
        // lower: Grotzsch, sep rho > rho exp(pi sep xi)
        b.sep_rho[k + 1] = between(s, 1.0 + kPi, 12.0);
        b.sepp_rho[k + 1] = between(s, cm, 4 * (3 + cm));

        Verdict wf = xi_below_sep(spec, k);
        if (k < spec.k_max) wf = verdict_and(wf, lt(ad(s, 4 + 2 * h), spec.xi[k + 1]));
        b.premises.push_back({"wellformed", k, wf});

        if (k == 0) {
            b.premises.push_back({"length_gamma", k, lt(h - 1, sc(s, kPi / 3 - 1))});
            b.premises.push_back({"length_sep_gamma", k, lt(5 * h + 2 * kPi - 1, sc(x, 2.0))});
        } else {
            const auto& sp = spec.sep_xi[k - 1];
            b.premises.push_back(
                {"length_gamma", k, lt(ad(sc(sp, 2.0), (4 * k + 1) * h + 3 * k * kPi), sc(s, kPi / 3 - 1))});
            b.premises.push_back(
                {"length_sep_gamma", k, lt(ad(sc(sp, 2.0), (4 * k + 5) * h + (3 * k + 2) * kPi), sc(x, 2.0))});
        }
        b.premises.push_back({"grotzsch", k, lt(std::log(2.0), sc(tower_log(x), 12 * M * M - 1))});
        if (k + 2 <= spec.k_max)
            b.premises.push_back(
                {"real_parts_upper", k, lt(ad(spec.sep_xi[k + 1], 2 * h), sc(spec.xi[k + 2], 1.0 / 3))});
        if (k < spec.k_max) b.premises.push_back({"sepp_inside", k, lt(sc(s, cm), spec.xi[k + 1])});
        b.premises.push_back({"sepp_growth", k, lt(std::log(cm + h), s)});
    }
    if (strict) {
        if (auto f = b.first_failure())
            throw std::domain_error("rho_bounds: starred premise " + f->name + " is " + to_string(f->verdict) +
                                    at_k("", f->k) + "; xi0 too small, use find_min_xi0");
    }
    return b;
}

namespace {

const std::vector<std::string> kConditionOrder{"a", "b", "c", "d", "e", "f", "g", "d'", "e'", "f'", "g'", "h'"};

std::map<std::string, VerdictRow> evaluate(const WiggleSpec& spec) {
    const double M = spec.M, h = spec.h_prime, H = spec.H;
    const double cm = M * (12 * M + 1);
    std::map<std::string, VerdictRow> rows;
    for (const auto& name : kConditionOrder) rows[name].resize(static_cast<std::size_t>(spec.k_max) + 1);

    // C_k sits in the box with real parts [sep xi_k, sep xi_k + 2h'], rho_{k+1} in
    // (e^{s_k}, e^{(4 pi/3) s_k}) and sep rho_{k+1} in (e^{(1+pi) s_k}, e^{12 s_k});
    // each entry below is the condition with those enclosures substituted and
    // ln x_{k} = s_{k-1}/M, ln s_k = 12 M s_{k-1} applied.
    for (int k = 0; k <= spec.k_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const auto& s = spec.sep_xi[i];
        const bool prev = k >= 1, next = k < spec.k_max;
        rows["a"][i] = Verdict::Pass;
        rows["b"][i] = verdict_of(H < 2 * kPi);
        if (next) {
            const auto& sn = spec.sep_xi[i + 1];
            rows["c"][i] = all({lt(sc(s, 12.0), sn), verdict_of(12 < cm), lt(sc(s, 4 * (3 + cm)), sn)});
        }
        const Verdict e_upper = lt(ad(s, 2 * h), sc(tower_exp(s), 0.5));
        if (prev) {
            const auto& sp = spec.sep_xi[i - 1];
            rows["d"][i] = all({lt(std::log(2 * H + 2), sc(sp, kPi)),
                                lt(ad(tower_exp(sc(sp, 12.0)), H), sc(tower_exp(s), 0.5))});
            rows["e"][i] = all({lt(std::log(H), sc(sp, 12.0)), lt(std::log(2.0), sc(sp, 12 * (M - 1))), e_upper});
            rows["f"][i] = lt(0.0, sc(sp, 12 * (M - 1)));
            rows["g"][i] = all({lt(std::log(2.0), sc(sp, (M - 1) / M)), verdict_of(4 * kPi / 3 < 12 * M)});
        } else {
            rows["e"][i] = e_upper;
        }
        if (next) rows["d'"][i] = all({verdict_of((M - 1) * 4 * kPi / 3 <= kPi), lt(s, spec.xi[i + 1])});
        rows["e'"][i] = lt(ad(s, 2 * h), sc(tower_exp(s), 1.0 / 3));
        rows["f'"][i] = Verdict::Pass;
        rows["g'"][i] = verdict_of(4 * kPi / (3 * M) < 12 * M);
        if (next) rows["h'"][i] = all({lt(sc(s, cm), spec.xi[i + 1]), lt(std::log(cm + h), s)});
    }
    return rows;
}

WiggleSpec widened(const WiggleSpec& spec, double frac) {
    WiggleSpec w = spec;
    for (auto& x : w.xi) x = tower_widen(x, frac);
    for (auto& x : w.sep_xi) x = tower_widen(x, frac);
    return w;
}

}  // namespace

ConditionReport verify_conditions(const WiggleSpec& spec, const RhoBounds& bounds, double widen) {
    ConditionReport rep;
    rep.order = kConditionOrder;
    rep.conditions = evaluate(spec);
    rep.premises = bounds.premises;
    rep.assumptions = {
        "C_k and sep C_k lie in boxes with real parts in [sep xi_k, sep xi_k + 2h'] (geodesic placement for h' = 2)",
        "the curve Gamma uses a vertical segment from -3i to -i after the first turn of gamma_{k+1}"};

    bool all_pass = true;
    for (const auto& name : rep.order) {
        const auto& row = rep.conditions[name];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] && *row[k] != Verdict::Pass) {
                all_pass = false;
                rep.failures.push_back("condition (" + name + ") " + to_string(*row[k]) +
                                       at_k("", static_cast<int>(k)));
            }
        }
    }
    for (const auto& p : rep.premises) {
        if (p.verdict != Verdict::Pass) {
            all_pass = false;
            rep.failures.push_back("starred premise " + p.name + " " + to_string(p.verdict) + at_k("", p.k));
        }
    }

    // 1% widening of every enclosure must not flip a verdict
    const WiggleSpec w = widened(spec, widen);
    const auto wrows = evaluate(w);
    const auto wb = rho_bounds(w, false);
    rep.robust = wrows == rep.conditions && wb.premises.size() == bounds.premises.size();
    for (std::size_t i = 0; rep.robust && i < wb.premises.size(); ++i)
        rep.robust = wb.premises[i].verdict == bounds.premises[i].verdict;
    if (!rep.robust) rep.failures.push_back("verdicts change under " + std::to_string(widen * 100) + "% widening");
    rep.certified = all_pass && rep.robust;
    return rep;
}

double find_min_xi0(double M, int k_max, double cap) {
    auto ok = [&](double xi0) {
        try {
            const auto spec = build_sequences(M, xi0, k_max);
            return verify_conditions(spec, rho_bounds(spec, false)).certified;
        } catch (const std::domain_error&) {
            return false;
        }
    };
    double lo = 2.0, hi = 2.5;
    while (!ok(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > cap) throw std::domain_error("find_min_xi0: no certified xi0 below " + std::to_string(cap));
    }
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

FoldingCertificate folding_lower_bound(int k, const ConditionReport& report) {
    if (k < 0) throw std::invalid_argument("folding_lower_bound: k must be non-negative");
    if (k > 62) throw std::overflow_error("folding_lower_bound: 2^k does not fit");
    for (const char* name : {"e", "f", "g"}) {
        const auto it = report.conditions.find(name);
        bool seen = false;
        if (it != report.conditions.end()) {
            for (const auto& v : it->second) {
                if (!v) continue;
                seen = true;
                if (*v != Verdict::Pass)
                    throw std::domain_error(std::string("folding_lower_bound: condition (") + name +
                                            ") is not certified");
            }
        }
        if (!seen) throw std::domain_error(std::string("folding_lower_bound: condition (") + name + ") missing");
    }
    // (e)-(g) were evaluated with the rho enclosures, which need the starred premises
    for (const auto& p : report.premises)
        if (p.verdict != Verdict::Pass)
            throw std::domain_error("folding_lower_bound: premise " + p.name + at_k("", p.k) + " is not certified");
    FoldingCertificate cert;
    cert.k = k;
    std::string prev = "(C[m], sepC[m])";
    for (int j = 1; j <= k; ++j) {
        const std::string win = "(C[m+" + std::to_string(j) + "], sepC[m+" + std::to_string(j) + "])";
        cert.lower_bound *= 2;
        // (f) keeps each crossing of the previous window beyond sep C, (g) forces it back
        // to Re = rho/2, and (e) splits it into two crossings of the new window
        cert.trace.push_back({j, win, prev,
                              {"sigma[" + std::to_string(j) + "].out", "sigma[" + std::to_string(j) + "].back"},
                              cert.lower_bound});
        prev = win;
    }
    return cert;
}

GrowthReport growth_exponent_check(const WiggleSpec& spec, const RhoBounds& bounds, double exponent) {
    // log sep rho_{k+1} lies in ((1+pi) s_k, 12 s_k) and s_k = x_k^{12 M^2}, so the
    // check reduces to the sign of (12 M^2 - e) ln x_k against ln(12/(1+pi)) for refutation
    GrowthReport g{exponent, {}, Verdict::Pass};
    const double gap = 12 * spec.M * spec.M - exponent;
    for (int k = 0; k <= spec.k_max; ++k) {
        if (!bounds.sep_rho.at(static_cast<std::size_t>(k) + 1)) throw std::invalid_argument("growth: bounds missing");
        const auto& x = spec.xi[static_cast<std::size_t>(k)];
        Verdict v;
        if (gap <= 0.0) {
            v = lt(1.0, x) == Verdict::Pass ? Verdict::Pass : Verdict::Indeterminate;
        } else {
            const Verdict refuted = lt(std::log(12 / (1 + kPi)), sc(tower_log(x), gap));
            v = refuted == Verdict::Pass ? Verdict::Fail : Verdict::Indeterminate;
        }
        g.per_k.push_back(v);
    }
    for (Verdict v : g.per_k) {
        if (v == Verdict::Fail) {
            g.overall = Verdict::Fail;
            break;
        }
        if (v == Verdict::Indeterminate) g.overall = Verdict::Indeterminate;
    }
    return g;
}

GrowthReport growth_exponent_check(const WiggleSpec& spec, const RhoBounds& bounds) {
    return growth_exponent_check(spec, bounds, 12 * spec.M * spec.M);
}

TubeDomain corridor_geometry(const std::vector<double>& v, double h) {
    if (v.size() < 2) throw std::invalid_argument("corridor_geometry: need at least xi_0 and sep xi_0");
    if (!(v[0] > 2.0)) throw std::invalid_argument("corridor_geometry: xi_0 must exceed 2");
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const bool ok = i % 2 == 0 ? v[i] < v[i + 1] : v[i] < v[i + 1] - 4 - 2 * h;
        if (!ok) throw std::invalid_argument("corridor_geometry: surrogate values out of order at index " +
                                             std::to_string(i + 1));
    }
    const cplx I(0.0, 1.0);
    std::vector<cplx> pts{1.0};
    auto arc = [&pts](cplx c, double from, double to, int n) {
        for (int j = 1; j <= n; ++j) pts.push_back(c + std::polar(1.0, from + (to - from) * j / n));
    };
    for (std::size_t k = 0; 2 * k + 1 < v.size(); ++k) {
        const double xi = v[2 * k], sx = v[2 * k + 1];
        const cplx pk = sx + h;
        pts.push_back(pk);
        // sep gamma_k: out to P_k + h', down, back to xi_k, down, out to sep P_k
        pts.push_back(pk + h);
        arc(pk + h - I, kPi / 2, -kPi / 2, 16);
        pts.push_back(xi - 2.0 * I);
        arc(xi - 3.0 * I, kPi / 2, 3 * kPi / 2, 16);
        pts.push_back(pk - 4.0 * I);
        if (2 * k + 2 >= v.size()) break;
        // gamma_{k+1}: turn up to the real axis
        pts.push_back(sx + 2 * h + 2 - 4.0 * I);
        arc(sx + 2 * h + 2 - 3.0 * I, -kPi / 2, 0.0, 8);
        pts.push_back(sx + 2 * h + 3 - 1.0 * I);
        arc(sx + 2 * h + 4 - 1.0 * I, kPi, kPi / 2, 8);
        if (2 * k + 3 >= v.size()) pts.push_back(v[2 * k + 2]);
    }
    return TubeDomain(std::move(pts), 0.5);
}

std::string polyline_csv(const TubeDomain& tube) {
    std::ostringstream out;
    out << "re,im\n";
    char buf[80];
    for (cplx p : tube.centerline()) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.real(), p.imag());
        out << buf;
    }
    return out.str();
}

nlohmann::json counterexample_json(const WiggleSpec& spec, const ConditionReport& report,
                                   const FoldingCertificate& folding, const GrowthReport& growth) {
    using nlohmann::json;
    json conds = json::object();
    for (const auto& name : report.order) {
        json row = json::array();
        for (const auto& v : report.conditions.at(name)) row.push_back(v ? to_string(*v) : "n/a");
        conds[name] = row;
    }
    json premises = json::array();
    for (const auto& p : report.premises) premises.push_back({{"name", p.name}, {"k", p.k}, {"verdict", to_string(p.verdict)}});
    json xi = json::array(), sxi = json::array();
    for (const auto& x : spec.xi) xi.push_back(to_string(x));
    for (const auto& x : spec.sep_xi) sxi.push_back(to_string(x));
    json trace = json::array();
    for (const auto& s : folding.trace)
        trace.push_back({{"step", s.step}, {"window", s.window}, {"previous", s.previous_window},
                         {"subcurves", s.subcurves}, {"crossings", s.crossings}});
    json per_k = json::array();
    for (Verdict v : growth.per_k) per_k.push_back(to_string(v));
    return {{"schema_version", 1},
            {"M", spec.M},
            {"xi0", spec.xi0},
            {"k_max", spec.k_max},
            {"h_prime", spec.h_prime},
            {"H", spec.H},
            {"xi", xi},
            {"sep_xi", sxi},
            {"conditions", conds},
            {"premises", premises},
            {"failures", report.failures},
            {"assumptions", report.assumptions},
            {"robust", report.robust},
            {"certified", report.certified},
            {"folding", {{"k", folding.k}, {"bound", folding.lower_bound}, {"trace", trace}}},
            {"growth", {{"exponent", growth.exponent}, {"verdict", to_string(growth.overall)}, {"per_k", per_k}}}};
}

}  // namespace blog
