#pragma once

// The scaled spline family Psi_{a1,a2,b,lam}(t) = b * sigma^r * psi_r(t / sigma)
// with sigma = lam / (2 (a1 + a2 + 2)), which makes the result lam-periodic.
// Differentiation peels one factor of sigma per order:
//   || Psi^{(k)} || = |b| * sigma^(r-k) * || psi_{r-k} ||,  || psi_0 || = 1.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rodov/rodov.hpp"

namespace rodov {

struct PsiParams {
    int r = 1;
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 1.0;
    double lam = 1.0;

    double half_period() const { return a1 + a2 + 2.0; }
    double sigma() const { return lam / (2.0 * half_period()); }

    void validate() const {
        if (r < 1) throw InvalidParams("PsiParams: order must be at least 1");
        if (!(a1 >= 0.0) || !(a2 >= 0.0) || !std::isfinite(a1) || !std::isfinite(a2))
            throw InvalidParams("PsiParams: flat-run widths must be nonnegative and finite");
        if (!(lam > 0.0) || !std::isfinite(lam))
            throw InvalidParams("PsiParams: period must be positive and finite");
        if (b == 0.0 || !std::isfinite(b))
            throw InvalidParams("PsiParams: amplitude must be nonzero and finite");
    }
};

inline PiecewisePoly build_Psi(const PsiParams& p) {
    p.validate();
    const double s = p.sigma();
    return scaled(build_psi(p.r, p.a1, p.a2), p.b * std::pow(s, p.r), s, p.lam);
}

// Closed-form uniform norm of the k-th derivative, 0 <= k <= r.
inline double Psi_derivative_norm(const PsiParams& p, int k) {
    p.validate();
    if (k < 0 || k > p.r)
        throw KOutOfRange("Psi_derivative_norm: derivative order " + std::to_string(k) +
                          " outside [0, " + std::to_string(p.r) + "]");
    const double s = p.sigma();
    const double base = (k == p.r) ? 1.0 : psi_sup_norm(p.r - k, p.a1, p.a2);
    return std::abs(p.b) * std::pow(s, p.r - k) * base;
}

inline std::vector<std::pair<int, double>> norm_profile(const PsiParams& p) {
    p.validate();
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(p.r) + 1);
    for (int k = 0; k <= p.r; ++k) out.emplace_back(k, Psi_derivative_norm(p, k));
    return out;
}

} // namespace rodov
