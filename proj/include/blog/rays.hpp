#pragma once
// External addresses, ray tails by pullback, speed ordering, and sampled
// verifiers for head-start, bounded slope and bounded wiggling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blog/models.hpp"

namespace blog {

// s_0 s_1 ... = preperiod followed by the period repeated forever
struct ExternalAddress {
    std::vector<TractId> preperiod;
    std::vector<TractId> period;

    ExternalAddress(std::vector<TractId> pre, std::vector<TractId> per);
    const TractId& at(std::size_t k) const;
    ExternalAddress shifted(std::size_t n = 1) const;
    // the address 0 0 0 ... for a model with the given number of stages
    static ExternalAddress constant(const TractId& t);
};

// Tokens separated by spaces or commas; the period is wrapped in parentheses.
// A token is "n" (family 0, translate n) or "f:n"; composite ids join stages with '/'.
// Examples: "(0)", "1 -1 (0 2)", "1:0/0:0 (0:0/0:0)".
ExternalAddress parse_address(const std::string& text);
std::string to_string(const ExternalAddress& a);

struct RayPoint {
    double potential;
    cplx z;
};

struct RayApproximation {
    ExternalAddress address;
    std::vector<RayPoint> points;
    int depth = 0;
    double error_bound = 0.0;
};

RayApproximation trace_ray(const BlogModel& model, const ExternalAddress& address, int depth, double seed_re,
                           const std::vector<double>& potentials);
std::string ray_csv(const RayApproximation& ray);

struct HeadStartParams {
    double K;
    double M;
    HeadStartParams(double k, double m);
    double phi(double t) const { return K * (t > 0.0 ? t : 0.0) + M; }
};

enum class Speed { Greater, Less, Undecided };
const char* to_string(Speed s);

struct SpeedResult {
    Speed verdict = Speed::Undecided;
    // iteration at which the verdict was reached
    int step = -1;
};

// Real orbits of tract 0 are followed in tower arithmetic when the model provides it.
SpeedResult speed_compare(const BlogModel& model, cplx z, cplx w, const ExternalAddress& address,
                          const HeadStartParams& phi, int maxiter);

struct PairViolation {
    cplx z, w;
    double lhs, rhs;
};

struct HeadStartReport {
    HeadStartParams params;
    std::size_t n_samples = 0;
    std::size_t n_tested = 0;
    bool vacuous = false;
    std::vector<PairViolation> violations;
};

HeadStartReport headstart_verify_pair(const BlogModel& model, const TractId& t, const TractId& t_next,
                                      const HeadStartParams& phi, std::size_t n_samples, std::uint64_t seed = 1);

struct SlopeParams {
    double alpha;
    double beta;
};

struct SlopeReport {
    std::size_t n_pairs = 0;
    // least grid alpha whose fitted beta stays within beta_cap
    std::optional<SlopeParams> fitted;
    bool unbounded_suspected = false;
    std::optional<SlopeParams> user;
    std::vector<PairViolation> violations;
};

struct SlopeOptions {
    std::size_t samples = 10000;
    double alpha_max = 10.0;
    double beta_cap = 2 * 3.14159265358979323846 + 1.0;
    std::optional<SlopeParams> user;
    std::uint64_t seed = 1;
};

SlopeReport check_bounded_slope(const BlogModel& model, const TractId& t, const SlopeOptions& opt);

struct WigglingViolation {
    cplx z0;
    double t;
    cplx gamma;
    double lhs, rhs;
};

struct WigglingReport {
    double K, mu;
    std::size_t n_geodesics = 0, n_points = 0;
    std::vector<WigglingViolation> violations;
};

WigglingReport check_wiggling(const BlogModel& model, const TractId& t, double K, double mu, std::size_t n_geodesics,
                              std::size_t n_points, std::uint64_t seed = 1);

// least M >= 0 with |Im z - Im c| <= K (Re z)^+ + M on sampled tract points, c the tract's axis point
double fit_slope_offset(const BlogModel& model, const TractId& t, double K, std::size_t samples, std::uint64_t seed = 1);

struct WigglingConstants {
    double K;
    double mu;
};
WigglingConstants finite_order_constants(double rho, double M);

// delta for a given delta' = alpha + beta + 2
double delta_from_prime(double delta_prime);
double delta_constants(double alpha, double beta);
// variant (b): least delta >= delta(alpha, beta) with e^{(delta - 1/2)/16 pi} > delta - 1/2 + K + Q + 1/2
double delta_constants(double alpha, double beta, double K, double Q);

}  // namespace blog
