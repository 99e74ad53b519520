#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "blog/models.hpp"

namespace blog {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
const cplx kI(0.0, 1.0);

// Re e^u > c, written so that large Re u cannot overflow
bool re_exp_above(cplx u, double center, double c) {
    const double cy = std::cos(u.imag() - center);
    if (std::abs(u.imag() - center) >= kPi / 2 || cy <= 0.0) return false;
    if (c <= 0.0) return true;
    return u.real() + std::log(cy) > std::log(c);
}

class ExpModel final : public FamilyModel {
public:
    ExpModel(cplx kappa, double sigma, double a, bool expansive) : FamilyModel(sigma, a, expansive), kappa_(kappa) {
        if (!(c() > 0.0)) throw std::invalid_argument("exp_model: R' too small, tracts would overlap");
    }

    std::string family() const override { return "exp"; }
    double tract_min_re(const TractId&) const override { return std::log(c()) - sigma_; }
    double max_depth() const override { return 700.0 - sigma_; }
    double expansivity_threshold() const override { return 2.0 + kappa_.real() - sigma_; }
    ModelPtr shifted(double r, bool expansive) const override {
        if (r < a_) throw std::invalid_argument("shifted: restriction below the current half-plane");
        return std::make_shared<ExpModel>(kappa_, sigma_ + r, 0.0, expansive);
    }
    double inverse_re_lower(double a) const override {
        const double m = a + sigma_ - kappa_.real();
        if (!(m > 0.0)) return -std::numeric_limits<double>::infinity();
        return std::log(m) - sigma_;
    }
    std::optional<TowerInterval> eval_real_tower(const TractId& t, const TowerInterval& x) const override {
        if (t.first().translate != 0 || kappa_.imag() != 0.0) return std::nullopt;
        return tower_add(tower_exp(tower_add(x, sigma_)), kappa_.real() - sigma_);
    }

protected:
    cplx raw_eval(const TractId&, cplx u) const override { return std::exp(u) + kappa_; }
    cplx raw_deriv(const TractId&, cplx u) const override { return std::exp(u); }
    cplx raw_inverse(const TractId& t, cplx zeta) const override {
        return std::log(zeta - kappa_) + kI * (kTwoPi * t.first().translate);
    }
    bool raw_contains(const TractId& t, cplx u, double thr) const override {
        return re_exp_above(u, kTwoPi * t.first().translate, thr - kappa_.real());
    }
    cplx raw_param(const TractId& t, double x, double v, double thr) const override {
        const double cc = thr - kappa_.real();
        if (!(x > std::log(cc))) throw std::domain_error("tract_param: real part left of the tract");
        const double half = std::acos(std::min(1.0, cc * std::exp(-x)));
        return {x, kTwoPi * t.first().translate + v * half};
    }
    std::optional<TractId> raw_locate(cplx u) const override {
        return TractId(0, std::lround(u.imag() / kTwoPi));
    }

private:
    double c() const { return threshold() - kappa_.real(); }
    cplx kappa_;
};

class CosineModel final : public FamilyModel {
public:
    CosineModel(cplx a, cplx b, double sigma, double off, bool expansive)
        : FamilyModel(sigma, off, expansive), a_coef_(a), b_coef_(b), la_(std::log(a)), lb_(std::log(b)) {
        if (!(threshold() > la_.real() && threshold() > lb_.real()))
            throw std::invalid_argument("cosine_model: R' too small");
    }

    std::string family() const override { return "cosine"; }
    int families() const override { return 2; }
    double tract_min_re(const TractId& t) const override {
        return std::log(threshold() - log_coef(t).real()) - sigma_;
    }
    double max_depth() const override { return 700.0 - sigma_; }
    double expansivity_threshold() const override {
        // |F'| >= |e^w| (1-|q|)/(1+|q|) >= |e^w|/3 and |e^w| >= Re F - log|coef| - log 2
        return 6.0 + std::log(2.0) + std::max(la_.real(), lb_.real()) - sigma_;
    }
    ModelPtr shifted(double r, bool expansive) const override {
        if (r < a_) throw std::invalid_argument("shifted: restriction below the current half-plane");
        return std::make_shared<CosineModel>(a_coef_, b_coef_, sigma_ + r, 0.0, expansive);
    }

protected:
    cplx log_coef(const TractId& t) const { return t.first().family == 0 ? la_ : lb_; }
    double center(const TractId& t) const {
        return (t.first().family == 0 ? 0.0 : kPi) + kTwoPi * t.first().translate;
    }
    // correction q with F = +-e^u + log(coef) + Log(1 + q)
    cplx correction(const TractId& t, cplx z) const {
        if (t.first().family == 0) return (b_coef_ / a_coef_) * std::exp(-2.0 * z);
        return (a_coef_ / b_coef_) * std::exp(2.0 * z);
    }
    cplx raw_eval(const TractId& t, cplx u) const override {
        const cplx z = std::exp(u);
        const cplx q = correction(t, z);
        const cplx lead = t.first().family == 0 ? z : -z;
        return lead + log_coef(t) + std::log(1.0 + q);
    }
    cplx raw_deriv(const TractId& t, cplx u) const override {
        const cplx z = std::exp(u);
        const cplx q = correction(t, z);
        const cplx d = z * (1.0 - q) / (1.0 + q);
        return t.first().family == 0 ? d : -d;
    }
    bool raw_contains(const TractId& t, cplx u, double thr) const override {
        if (!re_exp_above(u - kI * center(t), 0.0, thr - log_coef(t).real())) return false;
        if (u.real() > 700.0) return true;
        const cplx z = std::exp(u);
        if (std::abs(correction(t, z)) >= 0.5) return false;
        return raw_eval(t, u).real() > thr;
    }
    cplx raw_inverse(const TractId& t, cplx zeta) const override {
        const double shift = kTwoPi * t.first().translate;
        cplx w = t.first().family == 0 ? std::log(zeta - la_) + kI * shift
                                        : std::log(zeta - lb_) + kI * (kPi + shift);
        const double tol = 1e-12 * (1.0 + std::abs(zeta));
        cplx r = raw_eval(t, w) - zeta;
        for (int it = 0; it < 80; ++it) {
            if (std::abs(r) < tol) return w;
            const cplx step = r / raw_deriv(t, w);
            double damp = 1.0;
            cplx wn = w - step, rn = raw_eval(t, wn) - zeta;
            while (!(std::abs(rn) < std::abs(r)) && damp > 1e-8) {
                damp /= 2;
                wn = w - damp * step;
                rn = raw_eval(t, wn) - zeta;
            }
            if (!(std::abs(rn) < std::abs(r))) break;
            w = wn;
            r = rn;
        }
        if (std::abs(r) < tol) return w;
        throw std::domain_error("cosine inverse: Newton failed, point outside the safe region of the tract");
    }
    cplx raw_param(const TractId& t, double x, double v, double thr) const override {
        const double cc = thr - log_coef(t).real();
        if (!(x > std::log(cc))) throw std::domain_error("tract_param: real part left of the tract");
        const double half = std::acos(std::min(1.0, cc * std::exp(-x)));
        for (int k = 0; k < 200; ++k) {
            const cplx u(x, center(t) + v * half);
            if (raw_contains(t, u, thr)) return u;
            v *= 0.9;
        }
        throw std::domain_error("tract_param: no tract point at this real part");
    }
    std::optional<TractId> raw_locate(cplx u) const override {
        const double y = std::remainder(u.imag(), kTwoPi);
        if (std::abs(y) < kPi / 2) return TractId(0, std::lround(u.imag() / kTwoPi));
        return TractId(1, std::lround((u.imag() - kPi) / kTwoPi));
    }

private:
    cplx a_coef_, b_coef_, la_, lb_;
};

}  // namespace

ModelPtr exp_model(cplx lambda, double r_prime) {
    if (lambda == cplx(0.0)) throw std::invalid_argument("exp_model: lambda must be nonzero");
    if (!(r_prime > 0.0)) throw std::invalid_argument("exp_model: R' must be positive");
    return std::make_shared<ExpModel>(std::log(lambda), 0.0, std::log(r_prime), false);
}

ModelPtr cosine_model(cplx a, cplx b, double r_prime) {
    if (a == cplx(0.0) || b == cplx(0.0)) throw std::invalid_argument("cosine_model: a and b must be nonzero");
    if (!(r_prime > 2.0 * std::sqrt(std::abs(a * b))))
        throw std::invalid_argument("cosine_model: R' must exceed the critical values 2 sqrt(ab)");
    return std::make_shared<CosineModel>(a, b, 0.0, std::log(r_prime), false);
}

}  // namespace blog
