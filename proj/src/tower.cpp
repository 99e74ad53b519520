#include "blog/tower.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace blog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// largest argument with a finite exp
constexpr double kExpMax = 709.0;

double bump(double x, Round dir, int ulps = 2) {
    if (dir == Round::Nearest) return x;
    const double to = dir == Round::Up ? kInf : -kInf;
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, to);
    return x;
}

double exp_r(double m, Round dir) { return bump(std::exp(m), dir); }
double log_r(double m, Round dir) { return bump(std::log(m), dir); }

TowerReal exp_dir(const TowerReal& x, Round dir) {
    if (x.level == 0) {
        if (x.mantissa < kExpMax) return tower_normalize(0, exp_r(x.mantissa, dir), dir);
        return tower_normalize(1, x.mantissa, dir);
    }
    return tower_normalize(x.level + 1, x.mantissa, dir);
}

TowerReal log_dir(const TowerReal& x, Round dir) {
    if (x.level == 0) {
        if (x.mantissa <= 0.0) throw std::domain_error("tower_log: non-positive argument");
        return tower_normalize(0, log_r(x.mantissa, dir), dir);
    }
    return tower_normalize(x.level - 1, x.mantissa, dir);
}

TowerReal scale_dir(const TowerReal& x, double c, Round dir) {
    if (x.level == 0) {
        const double v = x.mantissa * c;
        if (std::isfinite(v)) return tower_normalize(0, bump(v, dir), dir);
        // overflow, so x > 0: go through the log
        const double m = bump(log_r(x.mantissa, dir) + log_r(c, dir), dir);
        return tower_normalize(1, m, dir);
    }
    if (x.level == 1) {
        const double m = bump(x.mantissa + log_r(c, dir), dir);
        return tower_normalize(1, m, dir);
    }
    // level >= 2: the shift ln(c) lands on exp(mantissa) >= 1e300 two levels
    // down, far below one ulp of the mantissa
    const double lc = std::log(c);
    double m = x.mantissa;
    if (lc > 0.0 && dir == Round::Up) m = bump(m, dir, 1);
    if (lc < 0.0 && dir == Round::Down) m = bump(m, dir, 1);
    return tower_normalize(x.level, m, dir);
}

TowerReal pow_dir(const TowerReal& x, double p, Round dir) {
    if (x.level == 0) {
        if (x.mantissa < 0.0) throw std::domain_error("tower_pow: negative base");
        if (x.mantissa == 0.0) return {0, 0.0};
        const double v = std::pow(x.mantissa, p);
        if (std::isfinite(v) && v > 0.0) return tower_normalize(0, bump(v, dir), dir);
    }
    return exp_dir(scale_dir(log_dir(x, dir), p, dir), dir);
}

TowerReal add_dir(TowerReal x, TowerReal y, Round dir) {
    x = tower_normalize(x.level, x.mantissa);
    y = tower_normalize(y.level, y.mantissa);
    if (tower_compare(x, y) == Ordering::Less) std::swap(x, y);
    if (x.level == 0) return tower_normalize(0, bump(x.mantissa + y.mantissa, dir), dir);
    if (x.level == 1) {
        // e^m + y = e^(m + log1p(y e^-m))
        double r;
        if (y.level == 0) r = y.mantissa * std::exp(-x.mantissa);
        else r = std::exp(y.mantissa - x.mantissa);
        if (r <= -1.0) throw std::domain_error("tower_add: possibly negative enclosure at level >= 1");
        const double m = bump(x.mantissa + std::log1p(r), dir);
        return tower_normalize(1, m, dir);
    }
    // level >= 2: y is at most x and |y| < 1e300 when negative
    const bool neg = y.level == 0 && y.mantissa < 0.0;
    if (!neg) return dir == Round::Up ? scale_dir(x, 2.0, dir) : x;
    return dir == Round::Down ? scale_dir(x, 0.5, dir) : x;
}

}  // namespace

TowerReal tower_normalize(int level, double mantissa, Round dir) {
    if (!std::isfinite(mantissa)) throw std::domain_error("tower_normalize: non-finite mantissa");
    if (level < 0) throw std::domain_error("tower_normalize: negative level");
    while (level >= 1 && mantissa < kExpMax) {
        const double e = exp_r(mantissa, dir);
        if (!(e < kLevelCeiling)) break;
        mantissa = e;
        --level;
    }
    while (mantissa >= kLevelCeiling) {
        mantissa = log_r(mantissa, dir);
        ++level;
    }
    return {level, mantissa};
}

bool tower_is_canonical(const TowerReal& a) {
    if (!std::isfinite(a.mantissa) || a.level < 0) return false;
    if (a.mantissa >= kLevelCeiling) return false;
    if (a.level == 0) return true;
    return a.mantissa >= std::log(kLevelCeiling) - 1e-9;
}

Ordering tower_compare(const TowerReal& a0, const TowerReal& b0) {
    TowerReal a = tower_normalize(a0.level, a0.mantissa);
    TowerReal b = tower_normalize(b0.level, b0.mantissa);
    const bool flip = a.level < b.level;
    if (flip) std::swap(a, b);
    // a now has the higher level; lower it while exp stays finite
    while (a.level > b.level) {
        if (a.mantissa >= kExpMax) {
            return flip ? Ordering::Less : Ordering::Greater;
        }
        a = {a.level - 1, std::exp(a.mantissa)};
    }
    Ordering o = Ordering::Equal;
    if (a.mantissa < b.mantissa) o = Ordering::Less;
    else if (a.mantissa > b.mantissa) o = Ordering::Greater;
    if (flip && o != Ordering::Equal) o = o == Ordering::Less ? Ordering::Greater : Ordering::Less;
    return o;
}

double tower_to_double(const TowerReal& a) {
    double v = a.mantissa;
    for (int i = 0; i < a.level; ++i) {
        if (v >= kExpMax + 0.78) return kInf;
        v = std::exp(v);
    }
    return v;
}

std::string to_string(const TowerReal& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%d, %.17g)", a.level, a.mantissa);
    return buf;
}

std::string to_string(const TowerInterval& a) {
    return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

TowerInterval TowerInterval::point(double x) {
    const TowerReal t = tower_normalize(0, x);
    return {t, t};
}

TowerInterval TowerInterval::of(double lo, double hi) {
    return of(tower_normalize(0, lo), tower_normalize(0, hi));
}

TowerInterval TowerInterval::of(const TowerReal& lo, const TowerReal& hi) {
    if (tower_compare(lo, hi) == Ordering::Greater) throw std::invalid_argument("TowerInterval: lo > hi");
    return {lo, hi};
}

bool TowerInterval::contains(const TowerReal& x) const {
    return tower_compare(lo, x) != Ordering::Greater && tower_compare(x, hi) != Ordering::Greater;
}

TowerInterval tower_exp(const TowerInterval& a) {
    return {exp_dir(a.lo, Round::Down), exp_dir(a.hi, Round::Up)};
}

TowerInterval tower_log(const TowerInterval& a) {
    return {log_dir(a.lo, Round::Down), log_dir(a.hi, Round::Up)};
}

TowerInterval tower_scale(const TowerInterval& a, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("tower_scale: factor must be positive");
    return {scale_dir(a.lo, c, Round::Down), scale_dir(a.hi, c, Round::Up)};
}

TowerInterval tower_pow(const TowerInterval& a, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw std::domain_error("tower_pow: exponent must be positive");
    return {pow_dir(a.lo, p, Round::Down), pow_dir(a.hi, p, Round::Up)};
}

TowerInterval tower_add(const TowerInterval& a, const TowerInterval& b) {
    return {add_dir(a.lo, b.lo, Round::Down), add_dir(a.hi, b.hi, Round::Up)};
}

TowerInterval tower_add(const TowerInterval& a, double c) {
    return tower_add(a, TowerInterval::point(c));
}

TowerInterval tower_mul(const TowerInterval& a, const TowerInterval& b) {
    return tower_exp(tower_add(tower_log(a), tower_log(b)));
}

TowerInterval tower_widen(const TowerInterval& a, double frac) {
    const double f = 1.0 + frac;
    TowerInterval lo_part = tower_scale({a.lo, a.lo}, 1.0 / f);
    TowerInterval hi_part = tower_scale({a.hi, a.hi}, f);
    // a negative lower end shrinks toward zero under the division
    if (a.lo.level == 0 && a.lo.mantissa < 0.0) lo_part = tower_scale({a.lo, a.lo}, f);
    return {lo_part.lo, hi_part.hi};
}

Verdict tower_less(const TowerInterval& a, const TowerInterval& b) {
    if (tower_compare(a.hi, b.lo) == Ordering::Less) return Verdict::Pass;
    if (tower_compare(a.lo, b.hi) != Ordering::Less) return Verdict::Fail;
    return Verdict::Indeterminate;
}

Verdict tower_less(const TowerInterval& a, double b) { return tower_less(a, TowerInterval::point(b)); }
Verdict tower_less(double a, const TowerInterval& b) { return tower_less(TowerInterval::point(a), b); }

Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Indeterminate || b == Verdict::Indeterminate) return Verdict::Indeterminate;
    return Verdict::Pass;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

}  // namespace blog
