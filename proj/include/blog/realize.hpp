#pragma once
// Entire functions with a prescribed tract: g = h + f on V', h outside, with
// h(z) = (1/2 pi i) int_alpha f(zeta)/(zeta - z) dzeta and f = exp(Psi^rho).

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace blog {

using cplx = std::complex<double>;

// conformal Psi: V -> right half-plane, closed form both ways
struct PrescribedTract {
    enum class Kind { Identity, Square, Strip };
    Kind kind = Kind::Identity;

    std::string name() const;
    bool in_domain(cplx z) const;
    cplx psi(cplx z) const;
    cplx psi_inverse(cplx w) const;
    cplx psi_inverse_deriv(cplx w) const;
};

// "identity" (V = H), "square" (V = {|arg z| < pi/4}, Psi = z^2), "strip" (V = {|Im z| < pi/2}, Psi = e^z)
PrescribedTract prescribed_tract(const std::string& name);

class Contour;

struct ContourSpec {
    double rho;
    double eta;
    cplx nu;
    double t_max;
    double tol;
    PrescribedTract tract;
    std::shared_ptr<const Contour> cache;
};

ContourSpec make_contour(const PrescribedTract& tract, double rho, double eta, double tol = 1e-10);

cplx alpha_tilde(const ContourSpec& spec, double t);
cplx alpha_point(const ContourSpec& spec, double t);
cplx alpha_deriv(const ContourSpec& spec, double t);
// exp(Psi(z)^rho) on V
cplx f_eval(const ContourSpec& spec, cplx z);

// Euclidean distance from z to the truncated contour, from the cached nodes
double alpha_distance(const ContourSpec& spec, cplx z);

// plain adaptive quadrature; throws when z is within 1e-8 of alpha
cplx cauchy_h(const ContourSpec& spec, cplx z);
// h(z), accurate up to the contour: singularity subtraction near alpha
cplx cauchy_h_near(const ContourSpec& spec, cplx z);

enum class Side { Inside, Outside };
Side side_of_alpha(const ContourSpec& spec, cplx z);

cplx g_eval(const ContourSpec& spec, cplx z);
// the same without the jump term, for the non-vacuousness probe
cplx h_only_eval(const ContourSpec& spec, cplx z);

struct EntireResidual {
    int n_nodes;
    double residual;
    int perturbed_nodes;
};
EntireResidual verify_entire(const ContourSpec& spec, cplx center, double radius, int n_nodes, bool with_jump = true);

struct MEstimate {
    double m_est;
    double m_refined;
    double relative_change;
};
// sup |h| on [-20, 20]^2: an n x n grid plus 4n one-sided stations along alpha; refined run at 2n
MEstimate estimate_m(const ContourSpec& spec, int n = 60);

struct JumpRow {
    double t;
    double eps;
    double error;
    double scale;
};
std::vector<JumpRow> jump_table(const ContourSpec& spec, const std::vector<double>& stations,
                                const std::vector<double>& eps);

struct GridWindow {
    double re_min, re_max, im_min, im_max;
    int nx, ny;
};

struct TractReport {
    double K;
    std::size_t n_points = 0;
    std::size_t n_in_w = 0;
    std::size_t outside_v = 0;
    int components = 0;
    int holes = 0;
    bool has_axis_ray = false;
    double axis_ray_x0 = 0.0;
    std::vector<unsigned char> mask;  // row-major, row 0 = im_max
};
TractReport tract_of_g(const ContourSpec& spec, double K, const GridWindow& window);

nlohmann::json realize_json(const ContourSpec& spec, const MEstimate& m, double K, const std::vector<JumpRow>& jumps,
                            const std::vector<EntireResidual>& residuals, const TractReport& tract);

}  // namespace blog
