#include "blog/entire.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blog {

EntireModel entire_exp(cplx lambda) {
    if (lambda == cplx(0.0)) throw std::invalid_argument("entire_exp: lambda must be nonzero");
    // the omitted value 0 is the only singular value
    return {"exp", [lambda](cplx z) { return lambda * std::exp(z); }, 0.0};
}

EntireModel entire_cosine(cplx a, cplx b) {
    if (a == cplx(0.0) || b == cplx(0.0)) throw std::invalid_argument("entire_cosine: a and b must be nonzero");
    return {"cosine", [a, b](cplx z) { return a * std::exp(z) + b * std::exp(-z); }, 2.0 * std::sqrt(std::abs(a * b))};
}

PoincareData poincare_fixed_point(cplx c) {
    const cplx alpha = (1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0;
    const cplx mu = 2.0 * alpha;
    if (!(std::abs(mu) > 1.0)) throw std::domain_error("poincare: fixed point is not repelling");
    return {alpha, mu};
}

cplx poincare_eval(cplx c, cplx z, int n) {
    const auto [alpha, mu] = poincare_fixed_point(c);
    cplx w = alpha + z / std::pow(mu, n);
    for (int i = 0; i < n; ++i) {
        w = w * w + c;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return {HUGE_VAL, HUGE_VAL};
    }
    return w;
}

cplx poincare_eval(cplx c, cplx z) {
    const auto [alpha, mu] = poincare_fixed_point(c);
    const double r = std::abs(z);
    if (r == 0.0) return alpha;
    const int n = std::max(0, static_cast<int>(std::ceil(std::log(r / 1e-8) / std::log(std::abs(mu)))));
    return poincare_eval(c, z, n);
}

EntireModel entire_poincare(cplx c) {
    poincare_fixed_point(c);
    // singular values of the Poincare function: the postcritical orbit c, p(c), ...
    double bound = 0.0;
    cplx w = 0.0;
    for (int k = 0; k < 500; ++k) {
        w = w * w + c;
        bound = std::max(bound, std::abs(w));
        if (bound > 1e6) throw std::domain_error("poincare: critical orbit escapes, function not in class B");
    }
    return {"poincare", [c](cplx z) { return poincare_eval(c, z); }, bound};
}

EntireModel entire_compose(std::vector<EntireModel> stages) {
    if (stages.empty()) throw std::invalid_argument("entire_compose: empty stage list");
    // S(g o f) lies in S(g) union g(S(f)); bound g on the disk by its boundary circle
    double bound = stages.front().singular_bound;
    for (std::size_t i = 1; i < stages.size(); ++i) {
        double img = 0.0;
        for (int j = 0; j < 1024; ++j)
            img = std::max(img, std::abs(stages[i].f(std::polar(bound * 1.05 + 1e-9, 2 * std::numbers::pi * j / 1024))));
        bound = std::max(stages[i].singular_bound, img * 1.05);
    }
    auto fs = stages;
    std::string name = "compose";
    return {name,
            [fs](cplx z) {
                for (const auto& s : fs) z = s.f(z);
                return z;
            },
            bound};
}

EscapeResult escape_classify(const EntireModel& f, cplx z, double R, int maxiter) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("escape_classify: non-finite input");
    if (maxiter < 1) throw std::invalid_argument("escape_classify: maxiter must be positive");
    if (!(R > f.singular_bound)) throw std::invalid_argument("escape_classify: R must exceed the singular bound");
    for (int k = 0; k <= maxiter; ++k) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > R) return {true, k};
        if (k == maxiter) break;
        z = f.f(z);
    }
    return {false, std::nullopt};
}

}  // namespace blog
