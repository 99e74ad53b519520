#pragma once
// Level-index numbers: (level n, mantissa r) stands for exp applied n times to r.

#include <string>

namespace blog {

// level 0 holds everything below kLevelCeiling; a level >= 1 mantissa is lowered
// whenever exp(mantissa) would still fit below the ceiling
inline constexpr double kLevelCeiling = 1e300;

struct TowerReal {
    int level = 0;
    double mantissa = 0.0;
};

enum class Ordering { Less, Equal, Greater };
enum class Verdict { Pass, Fail, Indeterminate };
enum class Round { Down, Up, Nearest };

TowerReal tower_normalize(int level, double mantissa, Round dir = Round::Nearest);
Ordering tower_compare(const TowerReal& a, const TowerReal& b);
bool tower_is_canonical(const TowerReal& a);
// +inf when the value does not fit a double
double tower_to_double(const TowerReal& a);
std::string to_string(const TowerReal& a);

struct TowerInterval {
    TowerReal lo;
    TowerReal hi;

    static TowerInterval point(double x);
    static TowerInterval of(double lo, double hi);
    static TowerInterval of(const TowerReal& lo, const TowerReal& hi);
    bool contains(const TowerReal& x) const;
};

std::string to_string(const TowerInterval& a);

TowerInterval tower_exp(const TowerInterval& a);
TowerInterval tower_log(const TowerInterval& a);
TowerInterval tower_scale(const TowerInterval& a, double c);
TowerInterval tower_pow(const TowerInterval& a, double p);
TowerInterval tower_add(const TowerInterval& a, const TowerInterval& b);
TowerInterval tower_add(const TowerInterval& a, double c);
TowerInterval tower_mul(const TowerInterval& a, const TowerInterval& b);
// [lo/(1+frac), hi*(1+frac)]
TowerInterval tower_widen(const TowerInterval& a, double frac);

// certain a < b -> Pass, certain a >= b -> Fail
Verdict tower_less(const TowerInterval& a, const TowerInterval& b);
Verdict tower_less(const TowerInterval& a, double b);
Verdict tower_less(double a, const TowerInterval& b);

// real-number comparison lifted to a verdict (no uncertainty)
inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }
Verdict verdict_and(Verdict a, Verdict b);
const char* to_string(Verdict v);

}  // namespace blog
