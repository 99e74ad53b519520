#include "blog/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace blog {

std::string to_string(const TractId& t) {
    std::string out;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.parts[i].family) + ":" + std::to_string(t.parts[i].translate);
    }
    return t.parts.size() > 1 ? "(" + out + ")" : out;
}

TractId BlogModel::translate(const TractId& t, long n) const {
    TractId r = t;
    r.parts.front().translate += n;
    return r;
}

double BlogModel::inverse_re_lower(double a) const {
    double best = std::numeric_limits<double>::infinity();
    const TractId t0;
    for (int j = -4000; j <= 4000; ++j) {
        const cplx w(a + 1e-9 * (1 + std::abs(a)), 0.25 * j);
        best = std::min(best, inverse(t0, w).real());
    }
    return best;
}

cplx FamilyModel::inverse(const TractId& t, cplx w) const {
    if (!(w.real() > a_)) throw std::domain_error("inverse branch: point outside the half-plane H");
    return raw_inverse(t, w + sigma_) - sigma_;
}

bool FamilyModel::contains(const TractId& t, cplx z) const { return raw_contains(t, z + sigma_, threshold()); }

std::optional<TractId> FamilyModel::locate(cplx z) const {
    auto t = raw_locate(z + sigma_);
    if (t && raw_contains(*t, z + sigma_, threshold())) return t;
    return std::nullopt;
}

cplx FamilyModel::tract_param(const TractId& t, double x, double v) const {
    return raw_param(t, x + sigma_, v, threshold()) - sigma_;
}

ModelPtr normalize(const ModelPtr& model) {
    if (model->normalized()) return model;
    constexpr double step = 0.25;
    const double a = model->offset();
    const double need = model->expansivity_threshold();
    double r = a;
    if (need > a) r = a + step * std::ceil((need - a) / step);
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int attempt = 0; attempt < 256; ++attempt, r += step) {
        ModelPtr cand = model->shifted(r, true);
        const TractId t0;
        const double x0 = cand->tract_min_re(t0);
        const double span = std::min(cand->max_depth(), x0 + 600.0) - x0;
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) {
            const double x = x0 + std::exp(std::log(1e-6) + uni(rng) * (std::log(span) - std::log(1e-6)));
            const double v = 2 * uni(rng) - 1;
            cplx z;
            try {
                z = cand->tract_param(t0, x, v);
            } catch (const std::exception&) {
                continue;
            }
            if (!cand->contains(t0, z)) continue;
            if (std::abs(cand->deriv(t0, z)) < 2.0) ok = false;
        }
        if (ok) return cand;
    }
    throw std::runtime_error("normalize: sampled |F'| < 2 up to the R0 cap");
}

bool disjoint_type(const BlogModel& model) {
    const TractId t0;
    const double x0 = model.tract_min_re(t0);
    if (!(x0 > model.offset())) return false;
    const double x1 = std::min(model.max_depth(), x0 + 40.0);
    for (int i = 0; i <= 400; ++i) {
        const double x = x0 + (x1 - x0) * (i + 1e-6) / 400.0;
        for (double v : {-1.0 + 1e-9, 0.0, 1.0 - 1e-9}) {
            cplx z;
            try {
                z = model.tract_param(t0, x, v);
            } catch (const std::exception&) {
                continue;
            }
            if (!(z.real() > model.offset())) return false;
        }
    }
    return true;
}

}  // namespace blog
