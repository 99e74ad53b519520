#include <cmath>
#include <stdexcept>

#include "blog/models.hpp"

namespace blog {

namespace {

class CompositeModel final : public BlogModel {
public:
    CompositeModel(std::vector<ModelPtr> models, double a, std::vector<double> cascade)
        : m_(std::move(models)), a_(a), casc_(std::move(cascade)) {
        depth_ = find_depth();
    }

    std::string family() const override { return "compose"; }
    int families() const override { return m_.front()->families(); }
    std::size_t stages() const override { return m_.size(); }

    cplx eval(const TractId& t, cplx z) const override {
        check(t);
        for (std::size_t i = 0; i < m_.size(); ++i) z = m_[i]->eval(part(t, i), z);
        return z - a_;
    }
    cplx deriv(const TractId& t, cplx z) const override {
        check(t);
        cplx d = 1.0;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            d *= m_[i]->deriv(part(t, i), z);
            z = m_[i]->eval(part(t, i), z);
        }
        return d;
    }
    cplx inverse(const TractId& t, cplx w) const override {
        check(t);
        if (!(w.real() > 0.0)) throw std::domain_error("inverse branch: point outside the half-plane H");
        w += a_;
        for (std::size_t i = m_.size(); i-- > 0;) {
            if (!(w.real() > m_[i]->offset()))
                throw std::domain_error("compose: pullback left the half-plane at stage " + std::to_string(i + 1));
            w = m_[i]->inverse(part(t, i), w);
        }
        return w;
    }
    bool contains(const TractId& t, cplx z) const override {
        check(t);
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (!m_[i]->contains(part(t, i), z)) return false;
            z = m_[i]->eval(part(t, i), z);
        }
        return z.real() > a_;
    }
    std::optional<TractId> locate(cplx z) const override {
        std::vector<Tract> parts;
        for (const auto& m : m_) {
            auto t = m->locate(z);
            if (!t) return std::nullopt;
            parts.push_back(t->first());
            z = m->eval(*t, z);
        }
        if (!(z.real() > a_)) return std::nullopt;
        return TractId(std::move(parts));
    }
    // composite tracts are parametrized through their image: the point mapped to x (1 + i v)
    cplx tract_param(const TractId& t, double x, double v) const override {
        if (!(x > 0.0)) throw std::domain_error("tract_param: composite image parameter must be positive");
        return inverse(t, cplx(x, v * x));
    }
    std::pair<double, double> param_range(const TractId&) const override { return {1e-6, 1e300}; }
    double tract_min_re(const TractId& t) const override { return m_.front()->tract_min_re(part(t, 0)); }
    double max_depth() const override { return depth_; }
    double offset() const override { return 0.0; }
    bool normalized() const override { return true; }
    double expansivity_threshold() const override { return 0.0; }
    ModelPtr shifted(double, bool) const override {
        throw std::invalid_argument("compose: composites are already normalized");
    }
    std::optional<TowerInterval> eval_real_tower(const TractId& t, const TowerInterval& x) const override {
        check(t);
        TowerInterval v = x;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            auto r = m_[i]->eval_real_tower(part(t, i), v);
            if (!r) return std::nullopt;
            v = *r;
        }
        return tower_add(v, -a_);
    }

private:
    void check(const TractId& t) const {
        if (t.parts.size() != m_.size()) throw std::invalid_argument("compose: tract id needs one part per stage");
    }
    static TractId part(const TractId& t, std::size_t i) { return TractId(t.parts[i].family, t.parts[i].translate); }

    double find_depth() const {
        const TractId t0(std::vector<Tract>(m_.size()));
        const TractId f0;
        double lo = m_.front()->tract_min_re(f0), hi = m_.front()->max_depth();
        auto finite_at = [&](double x) {
            try {
                const cplx z = m_.front()->tract_param(f0, x, 0.0);
                return std::isfinite(std::abs(eval(t0, z)));
            } catch (const std::exception&) {
                return false;
            }
        };
        if (finite_at(hi)) return hi;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (finite_at(mid) ? lo : hi) = mid;
        }
        return lo;
    }

    std::vector<ModelPtr> m_;
    double a_;
    std::vector<double> casc_;
    double depth_ = 0.0;
};

}  // namespace

std::vector<double> compose_cascade(const std::vector<ModelPtr>& models) {
    std::vector<double> casc{0.0};
    for (std::size_t i = 1; i < models.size(); ++i) {
        const double target = casc.back();
        const auto& m = *models[i];
        auto ok = [&](double a) { return m.inverse_re_lower(a) > target; };
        double hi = 1.0;
        while (!ok(hi)) {
            hi *= 2;
            if (hi > 1e12) throw std::domain_error("compose: no admissible offset at stage " + std::to_string(i + 1));
        }
        double lo = 0.0;
        if (ok(lo)) {
            casc.push_back(0.0);
            continue;
        }
        for (int k = 0; k < 200; ++k) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? hi : lo) = mid;
        }
        casc.push_back(hi);
    }
    return casc;
}

ModelPtr compose(std::vector<ModelPtr> models, double a) {
    if (models.empty()) throw std::invalid_argument("compose: empty model list");
    for (std::size_t i = 0; i < models.size(); ++i)
        if (!models[i]->normalized())
            throw std::invalid_argument("compose: stage " + std::to_string(i + 1) + " is not normalized");
    auto casc = compose_cascade(models);
    if (a < casc.back())
        throw std::domain_error("compose: shift a = " + std::to_string(a) + " too small at stage " +
                                std::to_string(models.size()) + ", pullback needs a >= " + std::to_string(casc.back()));
    return std::make_shared<CompositeModel>(std::move(models), a, std::move(casc));
}

}  // namespace blog
