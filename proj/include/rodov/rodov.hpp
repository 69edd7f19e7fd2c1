#pragma once

// Construction of the comparison splines psi_r(a1, a2; .).
//
// psi_1 is the unit-slope trapezoid profile on the half period [0, T],
// T = a1 + a2 + 2: zero on [0, a1], rising with slope one on [a1, a1+1],
// one on [a1+1, a1+a2+1], falling back to zero on [a1+a2+1, T]; the second
// half period is its negative, psi_1(t) = -psi_1(t - T), and the whole
// function is 2T-periodic.  psi_r is the (r-1)-fold zero-mean periodic
// antiderivative of psi_1, so psi_r' = psi_{r-1}.

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "rodov/piecewise.hpp"

namespace rodov {

struct RodovParams {
    int r = 1;
    double a1 = 0.0;
    double a2 = 0.0;
    double half_period() const { return a1 + a2 + 2.0; }
    double period() const { return 2.0 * half_period(); }
};

// The trapezoid profile psi_1.  Degenerate rows (a1 = 0 or a2 = 0) collapse to
// fewer segments.
inline PiecewisePoly build_psi1(double a1, double a2) {
    if (!(a1 >= 0.0) || !(a2 >= 0.0))
        throw NegativeParameter("build_psi1: flat-run widths must be nonnegative");
    if (!std::isfinite(a1) || !std::isfinite(a2))
        throw NegativeParameter("build_psi1: flat-run widths must be finite");
    const double T = a1 + a2 + 2.0;
    struct Row {
        double start, end;
        Coeffs c;
    };
    const std::vector<Row> half = {
        {0.0, a1, Coeffs{0.0}},
        {a1, a1 + 1.0, Coeffs{0.0, 1.0}},
        {a1 + 1.0, a1 + a2 + 1.0, Coeffs{1.0}},
        {a1 + a2 + 1.0, T, Coeffs{1.0, -1.0}},
    };
    std::vector<double> brs;
    std::vector<Coeffs> segs;
    const double width_tol = 1e-14 * T;
    for (int sign = 0; sign < 2; ++sign) {
        for (const Row& row : half) {
            if (row.end - row.start <= width_tol) continue;  // collapsed row
            Coeffs c = row.c;
            if (sign)
                for (double& ci : c) ci = -ci;
            brs.push_back(sign ? T + row.start : row.start);
            segs.push_back(std::move(c));
        }
    }
    return PiecewisePoly(2.0 * T, std::move(brs), std::move(segs));
}

namespace detail {

struct PsiKey {
    int r;
    double a1, a2;
    bool operator<(const PsiKey& o) const {
        return std::tie(r, a1, a2) < std::tie(o.r, o.a1, o.a2);
    }
};

inline std::shared_ptr<const PiecewisePoly> psi_cached(int r, double a1, double a2) {
    static std::mutex mu;
    static std::map<PsiKey, std::shared_ptr<const PiecewisePoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({r, a1, a2});
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const PiecewisePoly> result;
    if (r == 1) {
        result = std::make_shared<const PiecewisePoly>(build_psi1(a1, a2));
    } else {
        auto prev = psi_cached(r - 1, a1, a2);
        result = std::make_shared<const PiecewisePoly>(antiderivative_zero_mean(*prev));
    }
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 8192) cache.clear();
    cache.emplace(PsiKey{r, a1, a2}, result);
    return result;
}

} // namespace detail

inline PiecewisePoly build_psi(int r, double a1, double a2) {
    if (r < 1) throw InvalidParams("build_psi: order must be at least 1");
    return *detail::psi_cached(r, a1, a2);
}

// The two zeros of psi_r per period, in closed form.  For odd r they sit at
// a1/2 and a1/2 + T; for even r at a1 + a2/2 + 1 and that point plus T.  For
// r = 1 this requires a1 = 0, since with a1 > 0 the function vanishes on a
// whole interval rather than at isolated points.
inline std::pair<double, double> psi_zeros(int r, double a1, double a2) {
    if (r < 1) throw InvalidParams("psi_zeros: order must be at least 1");
    if (!(a1 >= 0.0) || !(a2 >= 0.0))
        throw NegativeParameter("psi_zeros: flat-run widths must be nonnegative");
    if (r == 1 && a1 > 0.0)
        throw NotApplicable("psi_zeros: order 1 with a1 > 0 vanishes on intervals, "
                            "not isolated points");
    const double T = a1 + a2 + 2.0;
    // Odd orders are odd about the center of the flat run at zero (a1/2), even
    // orders are odd about the center of the upper flat run (a1 + a2/2 + 1);
    // each vanishes at its center of antisymmetry and half a period later.
    if (r % 2 == 1) return {0.5 * a1, 0.5 * a1 + T};
    const double z = a1 + 0.5 * a2 + 1.0;
    return {z, z + T};
}

// Largest |psi_r|.  For r = 1 the amplitude is one; for even r the extremum
// sits over the flat run starting at 0 (value -(1 + a2)/2 at t = 0 for r = 2);
// for r >= 2 in general the extremum is attained at a zero of psi_{r-1}.
inline double psi_sup_norm(int r, double a1, double a2) {
    if (r < 1) throw InvalidParams("psi_sup_norm: order must be at least 1");
    if (r == 1) {
        if (!(a1 >= 0.0) || !(a2 >= 0.0))
            throw NegativeParameter("psi_sup_norm: flat-run widths must be nonnegative");
        return 1.0;
    }
    const PiecewisePoly psi = build_psi(r, a1, a2);
    if (r == 2) return std::abs(psi(0.0));
    const auto [z1, z2] = psi_zeros(r - 1, a1, a2);
    return std::max(std::abs(psi(z1)), std::abs(psi(z2)));
}

// The Euler spline scaled to period 2*pi/lam: phi_{lam,r}(t) =
// (pi/(2 lam))^r * psi_r(0, 0; (2 lam / pi) t).
inline PiecewisePoly euler_phi(int r, double lam) {
    if (!(lam > 0.0)) throw NonPositiveLambda("euler_phi: frequency must be positive");
    if (r < 1) throw InvalidParams("euler_phi: order must be at least 1");
    const double s = std::numbers::pi / (2.0 * lam);
    const PiecewisePoly base = build_psi(r, 0.0, 0.0);
    return scaled(base, std::pow(s, r), s, 2.0 * std::numbers::pi / lam);
}

} // namespace rodov
