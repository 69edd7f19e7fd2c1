#pragma once

// Inverse problem: pick spline parameters so that prescribed derivative norms
// are met exactly.  Three data layouts are supported, each determining the
// amplitude b and time scale sigma algebraically and reducing the rest to
// monotone one-dimensional solves in the flat-run widths:
//
//   case a: (M0, M_{r-1}, M_r) with a1 = 0, solve for a2
//   case b: (M0, M_{r-2}, M_r) with a2 = 0, solve for a1
//   case c: (M0, M_{r-2}, M_{r-1}, M_r), solve for a1 and a2 nested
//
// Each solve brackets from [0, 1] by doubling and requires the probed values
// to increase along the way; a decrease means the problem lost the
// monotonicity that makes the answer unique, and is reported rather than
// silently accepted.

#include <cmath>
#include <functional>
#include <string>

#include "rodov/scaling.hpp"

namespace rodov {

namespace detail {

inline void require_positive_target(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidParams(std::string("matcher: target ") + name +
                            " must be positive and finite");
}

// Solve fn(x) = target for x >= 0, fn strictly increasing, fn(0) <= target.
inline double solve_increasing(const std::function<double(double)>& fn, double target,
                               const char* context) {
    double lo = 0.0;
    double v_lo = fn(lo);
    if (v_lo >= target) return 0.0;
    double hi = 1.0;
    double v_hi = fn(hi);
    auto check_monotone = [&](double v_prev, double v_next) {
        const double slack = 1e-12 * (std::abs(v_prev) + std::abs(v_next) + 1.0);
        if (!(v_next > v_prev - slack))
            throw MonotonicityViolation(std::string(context) +
                                        ": probed values stopped increasing (" +
                                        std::to_string(v_prev) + " then " +
                                        std::to_string(v_next) + ")");
    };
    check_monotone(v_lo, v_hi);
    int doublings = 0;
    while (v_hi < target) {
        if (++doublings > 60)
            throw NoBracket(std::string(context) + ": target " + std::to_string(target) +
                            " not bracketed after 60 doublings");
        lo = hi;
        const double v_prev = v_hi;
        hi *= 2.0;
        v_hi = fn(hi);
        check_monotone(v_prev, v_hi);
        v_lo = v_prev;
    }
    // bisection to a narrow bracket
    double a = lo, b = hi, ga = v_lo - target, gb = v_hi - target;
    while (b - a > 1e-10 * std::max(1.0, std::abs(b))) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double gm = fn(m) - target;
        if (gm == 0.0) return m;
        if (gm < 0.0) {
            a = m;
            ga = gm;
        } else {
            b = m;
            gb = gm;
        }
    }
    // secant polish inside the bracket
    double x0 = a, g0 = ga, x1 = b, g1 = gb;
    for (int it = 0; it < 4; ++it) {
        const double denom = g1 - g0;
        if (denom == 0.0) break;
        const double x2 = x1 - g1 * (x1 - x0) / denom;
        if (!(x2 >= a && x2 <= b)) break;
        const double g2 = fn(x2) - target;
        x0 = x1;
        g0 = g1;
        x1 = x2;
        g1 = g2;
        if (g2 == 0.0) break;
    }
    return std::abs(g1) <= std::abs(g0) ? x1 : x0;
}

inline void verify_match(const PsiParams& p, int k, double target, const Tolerances& tol) {
    const double got = Psi_derivative_norm(p, k);
    if (std::abs(got - target) > 10.0 * tol.match_rel * target)
        throw Error("matcher: solved parameters reproduce derivative norm " +
                    std::to_string(k) + " as " + std::to_string(got) + " instead of " +
                    std::to_string(target));
}

} // namespace detail

// Given M0 = ||x||, Mr1 = ||x^{(r-1)}||, Mr = ||x^{(r)}||, find the member
// with a1 = 0 matching all three.
inline PsiParams match_case_a(int r, double M0, double Mr1, double Mr,
                              const Tolerances& tol = default_tolerances()) {
    if (r < 2) throw InvalidParams("match_case_a: order must be at least 2");
    detail::require_positive_target(M0, "M0");
    detail::require_positive_target(Mr1, "M_{r-1}");
    detail::require_positive_target(Mr, "M_r");
    const double b = Mr;
    const double sigma = Mr1 / Mr;
    const double target_norm = M0 / (b * std::pow(sigma, r));
    const double baseline = psi_sup_norm(r, 0.0, 0.0);
    double a2;
    if (target_norm <= baseline * (1.0 + 1e-10)) {
        if (target_norm < baseline * (1.0 - 1e-10))
            throw Infeasible("match_case_a: ||x|| below the zero-width member value " +
                             std::to_string(baseline * b * std::pow(sigma, r)));
        a2 = 0.0;
    } else {
        a2 = detail::solve_increasing(
            [&](double v) { return psi_sup_norm(r, 0.0, v); }, target_norm, "match_case_a");
    }
    PsiParams p{r, 0.0, a2, b, 2.0 * (a2 + 2.0) * sigma};
    detail::verify_match(p, 0, M0, tol);
    detail::verify_match(p, r - 1, Mr1, tol);
    detail::verify_match(p, r, Mr, tol);
    return p;
}

// Given M0 = ||x||, Mr2 = ||x^{(r-2)}||, Mr = ||x^{(r)}||, find the member
// with a2 = 0 matching all three.
inline PsiParams match_case_b(int r, double M0, double Mr2, double Mr,
                              const Tolerances& tol = default_tolerances()) {
    if (r < 3) throw InvalidParams("match_case_b: order must be at least 3");
    detail::require_positive_target(M0, "M0");
    detail::require_positive_target(Mr2, "M_{r-2}");
    detail::require_positive_target(Mr, "M_r");
    const double b = Mr;
    auto sigma_of = [&](double a1) {
        return std::sqrt(Mr2 / (b * psi_sup_norm(2, a1, 0.0)));
    };
    auto size_of = [&](double a1) {
        return b * std::pow(sigma_of(a1), r) * psi_sup_norm(r, a1, 0.0);
    };
    const double baseline = size_of(0.0);
    double a1;
    if (M0 <= baseline * (1.0 + 1e-10)) {
        if (M0 < baseline * (1.0 - 1e-10))
            throw Infeasible("match_case_b: ||x|| below the zero-width member value " +
                             std::to_string(baseline));
        a1 = 0.0;
    } else {
        a1 = detail::solve_increasing(size_of, M0, "match_case_b");
    }
    PsiParams p{r, a1, 0.0, b, 2.0 * (a1 + 2.0) * sigma_of(a1)};
    detail::verify_match(p, 0, M0, tol);
    detail::verify_match(p, r - 2, Mr2, tol);
    detail::verify_match(p, r, Mr, tol);
    return p;
}

// Given M0 = ||x||, Mr2 = ||x^{(r-2)}||, Mr1 = ||x^{(r-1)}||, Mr = ||x^{(r)}||,
// find the member matching all four (both flat-run widths free).
inline PsiParams match_case_c(int r, double M0, double Mr2, double Mr1, double Mr,
                              const Tolerances& tol = default_tolerances()) {
    if (r < 3) throw InvalidParams("match_case_c: order must be at least 3");
    detail::require_positive_target(M0, "M0");
    detail::require_positive_target(Mr2, "M_{r-2}");
    detail::require_positive_target(Mr1, "M_{r-1}");
    detail::require_positive_target(Mr, "M_r");
    const double b = Mr;
    const double sigma = Mr1 / Mr;
    const double second_target = Mr2 / (b * sigma * sigma);
    const double second_floor = psi_sup_norm(2, 0.0, 0.0);
    if (second_target < second_floor * (1.0 - 1e-10))
        throw Infeasible("match_case_c: ||x^{(r-2)}|| below the zero-width member value " +
                         std::to_string(second_floor * b * sigma * sigma));
    auto a2_for = [&](double a1) {
        if (second_target <= second_floor * (1.0 + 1e-10)) return 0.0;
        return detail::solve_increasing(
            [&](double v) { return psi_sup_norm(2, a1, v); }, second_target,
            "match_case_c inner");
    };
    const double size_target = M0 / (b * std::pow(sigma, r));
    auto size_of = [&](double a1) { return psi_sup_norm(r, a1, a2_for(a1)); };
    const double baseline = size_of(0.0);
    double a1;
    if (size_target <= baseline * (1.0 + 1e-10)) {
        if (size_target < baseline * (1.0 - 1e-10))
            throw Infeasible("match_case_c: ||x|| below the a1 = 0 member value " +
                             std::to_string(baseline * b * std::pow(sigma, r)));
        a1 = 0.0;
    } else {
        a1 = detail::solve_increasing(size_of, size_target, "match_case_c outer");
    }
    const double a2 = a2_for(a1);
    PsiParams p{r, a1, a2, b, 2.0 * (a1 + a2 + 2.0) * sigma};
    detail::verify_match(p, 0, M0, tol);
    detail::verify_match(p, r - 2, Mr2, tol);
    detail::verify_match(p, r - 1, Mr1, tol);
    detail::verify_match(p, r, Mr, tol);
    return p;
}

} // namespace rodov
