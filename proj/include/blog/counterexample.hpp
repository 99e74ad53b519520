#pragma once
// The wiggle tract: xi / sep xi sequences in tower arithmetic, the two-sided
// rho bounds, the certification of conditions (a)-(g), (d')-(h'), the folding
// certificate and the growth check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blog/hyperbolic.hpp"
#include "blog/tower.hpp"

namespace blog {

struct WiggleSpec {
    double M = 1.5;
    double xi0 = 0.0;
    std::vector<TowerInterval> xi;
    std::vector<TowerInterval> sep_xi;
    double h_prime = 2.0;
    double H = 5.0;
    int k_max = 0;
};

// xi[k+1] = exp(sep_xi[k] / M), sep_xi[k+1] = exp(12 M sep_xi[k]), sep_xi[0] = xi0^(12 M^2)
WiggleSpec build_sequences(double M, double xi0, int k_max, double h_prime = 2.0, double H = 5.0);

struct Premise {
    std::string name;
    int k;
    Verdict verdict;
};

// index k holds the enclosure of rho_k; entry 0 is empty
struct RhoBounds {
    std::vector<std::optional<TowerInterval>> rho;
    std::vector<std::optional<TowerInterval>> sep_rho;
    std::vector<std::optional<TowerInterval>> sepp_rho;
    std::vector<Premise> premises;

    std::optional<Premise> first_failure() const;
};

// strict: throw when a length premise is not certified
RhoBounds rho_bounds(const WiggleSpec& spec, bool strict = true);

using VerdictRow = std::vector<std::optional<Verdict>>;  // per k; nullopt = not applicable

struct ConditionReport {
    std::vector<std::string> order;
    std::map<std::string, VerdictRow> conditions;
    std::vector<Premise> premises;
    std::vector<std::string> failures;
    std::vector<std::string> assumptions;
    bool robust = false;
    bool certified = false;
};

ConditionReport verify_conditions(const WiggleSpec& spec, const RhoBounds& bounds, double widen = 0.01);

double find_min_xi0(double M, int k_max, double cap = 1e9);

struct FoldingStep {
    int step;
    std::string window;
    std::string previous_window;
    std::vector<std::string> subcurves;
    long long crossings;
};

struct FoldingCertificate {
    int k = 0;
    long long lower_bound = 1;
    std::vector<FoldingStep> trace;
};

FoldingCertificate folding_lower_bound(int k, const ConditionReport& report);

struct GrowthReport {
    double exponent;
    std::vector<Verdict> per_k;
    Verdict overall;
};

// log sep rho_{k+1} <= 12 xi_k^exponent
GrowthReport growth_exponent_check(const WiggleSpec& spec, const RhoBounds& bounds, double exponent);
GrowthReport growth_exponent_check(const WiggleSpec& spec, const RhoBounds& bounds);

// centerline through P = 1 for small surrogate values xi_0, sep xi_0, xi_1, sep xi_1, ...
TubeDomain corridor_geometry(const std::vector<double>& surrogate, double h_prime = 2.0);
std::string polyline_csv(const TubeDomain& tube);

nlohmann::json counterexample_json(const WiggleSpec& spec, const ConditionReport& report,
                                   const FoldingCertificate& folding, const GrowthReport& growth);

}  // namespace blog
