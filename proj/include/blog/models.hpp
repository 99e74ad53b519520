#pragma once
// Logarithmic transforms F: tracts -> H = {Re > offset}, 2 pi i periodic.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blog/hyperbolic.hpp"
#include "blog/tower.hpp"

namespace blog {

using cplx = std::complex<double>;

// family index and 2 pi i translate index
struct Tract {
    int family = 0;
    long translate = 0;
    bool operator==(const Tract&) const = default;
};

// one part per composition stage; simple models use a single part
struct TractId {
    std::vector<Tract> parts;

    TractId() : parts{Tract{}} {}
    TractId(int family, long translate) : parts{Tract{family, translate}} {}
    explicit TractId(std::vector<Tract> p) : parts(std::move(p)) {}
    const Tract& first() const { return parts.front(); }
    bool operator==(const TractId&) const = default;
};

std::string to_string(const TractId& t);

class BlogModel {
public:
    virtual ~BlogModel() = default;

    virtual std::string family() const = 0;
    virtual int families() const { return 1; }
    virtual std::size_t stages() const { return 1; }

    virtual cplx eval(const TractId& t, cplx z) const = 0;
    virtual cplx deriv(const TractId& t, cplx z) const = 0;
    // branch of F^{-1} onto tract t, defined on H
    virtual cplx inverse(const TractId& t, cplx w) const = 0;
    virtual bool contains(const TractId& t, cplx z) const = 0;
    virtual std::optional<TractId> locate(cplx z) const = 0;
    // point of tract t with real part x; v in (-1, 1) runs across the tract
    virtual cplx tract_param(const TractId& t, double x, double v) const = 0;
    // admissible range of the first tract_param argument
    virtual std::pair<double, double> param_range(const TractId& t) const { return {tract_min_re(t), 1e300}; }
    // least real part of the tract closure
    virtual double tract_min_re(const TractId& t) const = 0;
    // largest real part at which eval stays finite
    virtual double max_depth() const = 0;
    virtual double offset() const = 0;
    virtual bool normalized() const = 0;
    virtual TractId translate(const TractId& t, long n) const;

    // F on the real axis of tract 0 in tower arithmetic, when the family has a real trace
    virtual std::optional<TowerInterval> eval_real_tower(const TractId&, const TowerInterval&) const {
        return std::nullopt;
    }
    // inf of Re F^{-1}(w) over Re w > a
    virtual double inverse_re_lower(double a) const;
    // least offset (current coordinates) for which the family bound forces |F'| >= 2
    virtual double expansivity_threshold() const = 0;
    // conjugate by w -> w - r and restrict to Re F > r: the new H is the right half-plane
    virtual std::shared_ptr<const BlogModel> shifted(double r, bool expansive) const = 0;
};

using ModelPtr = std::shared_ptr<const BlogModel>;

// Models of the form G(w) = F(w + sigma) - sigma restricted to Re G > a.
class FamilyModel : public BlogModel {
public:
    FamilyModel(double sigma, double a, bool expansive) : sigma_(sigma), a_(a), expansive_(expansive) {}

    cplx eval(const TractId& t, cplx z) const override { return raw_eval(t, z + sigma_) - sigma_; }
    cplx deriv(const TractId& t, cplx z) const override { return raw_deriv(t, z + sigma_); }
    cplx inverse(const TractId& t, cplx w) const override;
    bool contains(const TractId& t, cplx z) const override;
    std::optional<TractId> locate(cplx z) const override;
    cplx tract_param(const TractId& t, double x, double v) const override;
    double offset() const override { return a_; }
    bool normalized() const override { return a_ == 0.0 && expansive_; }
    double sigma() const { return sigma_; }

protected:
    double threshold() const { return a_ + sigma_; }
    virtual cplx raw_eval(const TractId& t, cplx u) const = 0;
    virtual cplx raw_deriv(const TractId& t, cplx u) const = 0;
    virtual cplx raw_inverse(const TractId& t, cplx zeta) const = 0;
    // u lies in the raw tract where additionally Re F(u) > thr
    virtual bool raw_contains(const TractId& t, cplx u, double thr) const = 0;
    virtual cplx raw_param(const TractId& t, double x, double v, double thr) const = 0;
    virtual std::optional<TractId> raw_locate(cplx u) const = 0;

    double sigma_;
    double a_;
    bool expansive_;
};

// F(w) = e^w + Log(lambda); tracts are the strips around 2 pi i n
ModelPtr exp_model(cplx lambda, double r_prime);
// F(w) = log(a exp(e^w) + b exp(-e^w)); family 0 right tracts, family 1 left tracts
ModelPtr cosine_model(cplx a, cplx b, double r_prime);
// F = exp(pi (s + i n)/(2 halfwidth)) in arclength/normal coordinates of the tube
ModelPtr tube_model(TubeDomain tube);

ModelPtr normalize(const ModelPtr& model);
bool disjoint_type(const BlogModel& model);

// G_a = F_n o ... o F_1 - a
ModelPtr compose(std::vector<ModelPtr> models, double a);
// the offsets a_1 = 0, a_2, ..., a_n of the composition cascade
std::vector<double> compose_cascade(const std::vector<ModelPtr>& models);

// tubes used as surrogates for badly shaped tracts
TubeDomain fold_tube();
TubeDomain spiral_tube();

}  // namespace blog
