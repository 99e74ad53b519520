#pragma once
// Entire functions in the plane, for escape-time classification.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace blog {

using cplx = std::complex<double>;

struct EntireModel {
    std::string family;
    std::function<cplx(cplx)> f;
    // radius of a disk containing the singular values
    double singular_bound = 0.0;
};

EntireModel entire_exp(cplx lambda);
// a e^z + b e^-z
EntireModel entire_cosine(cplx a, cplx b);
// Poincare function of z^2 + c at its repelling fixed point
EntireModel entire_poincare(cplx c);
// f_n o ... o f_1
EntireModel entire_compose(std::vector<EntireModel> stages);

struct PoincareData {
    cplx alpha;
    cplx mu;
};
PoincareData poincare_fixed_point(cplx c);
cplx poincare_eval(cplx c, cplx z);
// explicit depth n: p^n(alpha + z/mu^n)
cplx poincare_eval(cplx c, cplx z, int n);

struct EscapeResult {
    bool escaped = false;
    std::optional<int> first_exit;
};
EscapeResult escape_classify(const EntireModel& f, cplx z, double R, int maxiter);

}  // namespace blog
