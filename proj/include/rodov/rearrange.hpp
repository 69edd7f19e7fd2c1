#pragma once

// Decreasing rearrangements of nonnegative periodic data over a window.
//
// The input is first decomposed into pieces on which it is either strictly
// monotone or exactly flat (a MonotoneProfile).  The distribution function
// d(y) = measure{ g > y } then needs one monotone inversion per straddling
// piece and no global search.  The rearrangement r(u) = inf{ y : d(y) <= u }
// is assembled band by band between consecutive critical values of g;
// within a band d is continuous and strictly decreasing, so sampling d at
// chosen levels yields exact graph points (d(y), y), flat runs of g become
// horizontal bridges, and adaptive refinement drives the area error of the
// sampled polyline below a budget allocated across the bands.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rodov/piecewise.hpp"

namespace rodov {

class MonotoneProfile {
public:
    struct Piece {
        double t0, t1;   // subinterval of the window
        double v0, v1;   // values at the ends
        bool plateau;    // v0 == v1 and the function is constant
        Coeffs poly;     // local coefficients at u = t - t0; empty => callable
        double vlo, vhi; // min/max of {v0, v1}
    };

    static MonotoneProfile from_piecewise(const PiecewisePoly& g, Interval window,
                                          const Tolerances& tol = default_tolerances()) {
        MonotoneProfile prof;
        prof.wrap_connected_ =
            std::abs((window.hi - window.lo) - g.period()) <= 1e-12 * g.period();
        detail::for_each_piece(g, window.lo, window.hi,
                               [&](std::size_t idx, double a, double b, double la) {
            const Coeffs& c = g.segments()[idx];
            const double lb = la + (b - a);
            const int deg = poly_trimmed_degree(c, la, lb);
            if (deg <= 0) {
                const double v = deg < 0 ? 0.0 : poly_eval(c, 0.5 * (la + lb));
                prof.add_plateau(a, b, v);
                return;
            }
            Coeffs d = poly_derivative(c);
            std::vector<double> crit;
            detail::poly_roots_in(d, la, lb, crit);
            double ua = la, ta = a;
            auto emit = [&](double ub, double tb) {
                if (tb - ta <= 1e-14 * (window.hi - window.lo)) return;
                prof.add_poly(ta, tb, poly_shift_origin(c, ua), poly_eval(c, ua),
                              poly_eval(c, ub));
                ua = ub;
                ta = tb;
            };
            for (double u : crit)
                if (u > ua && u < lb) emit(u, a + (u - la));
            emit(lb, b);
        });
        prof.finish(tol);
        return prof;
    }

    // Pieces between consecutive split points must be strictly monotone.
    static MonotoneProfile from_callable(std::function<double(double)> fn, Interval window,
                                         std::vector<double> splits,
                                         const Tolerances& tol = default_tolerances()) {
        MonotoneProfile prof;
        prof.fn_ = std::move(fn);
        std::sort(splits.begin(), splits.end());
        std::vector<double> nodes;
        nodes.push_back(window.lo);
        for (double s : splits)
            if (s > nodes.back() + 1e-13 * (window.hi - window.lo) && s < window.hi)
                nodes.push_back(s);
        nodes.push_back(window.hi);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            Piece p;
            p.t0 = nodes[i];
            p.t1 = nodes[i + 1];
            p.v0 = prof.fn_(p.t0);
            p.v1 = prof.fn_(p.t1);
            p.plateau = false;
            prof.pieces_.push_back(std::move(p));
        }
        prof.finish(tol);
        return prof;
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    double length() const { return length_; }
    double value_max() const { return vmax_; }

    double piece_value(const Piece& p, double t) const {
        return p.poly.empty() ? fn_(t) : poly_eval(p.poly, t - p.t0);
    }

    // measure{ g > y }
    double measure_above(double y) const {
        if (y < 0.0) return length_;
        double m = 0.0;
        for (const Piece& p : pieces_) {
            if (y >= p.vhi) continue;
            if (p.plateau || y < p.vlo) {
                m += p.t1 - p.t0;
                continue;
            }
            const double t = crossing(p, y);
            m += (p.v0 < p.v1) ? (p.t1 - t) : (t - p.t0);
        }
        return m;
    }

    // measure{ g == y } (carried entirely by flat runs)
    double plateau_measure(double y) const {
        const double tol = 1e-12 * (1.0 + vmax_);
        double m = 0.0;
        for (const Piece& p : pieces_)
            if (p.plateau && std::abs(p.v0 - y) <= tol) m += p.t1 - p.t0;
        return m;
    }

    // Levels where the distribution function can lose smoothness (including
    // 0 and the maximum), descending.  Piece junctions where the data passes
    // through monotonically with matching slope contribute no level, so the
    // set depends only on the shape of the data, not on where a periodic
    // window was cut.
    const std::vector<double>& critical_values() const { return critical_; }

private:
    void add_plateau(double t0, double t1, double v) {
        pieces_.push_back({t0, t1, v, v, true, Coeffs{v}, v, v});
    }
    void add_poly(double t0, double t1, Coeffs c, double v0, double v1) {
        Piece p{t0, t1, v0, v1, false, std::move(c), 0.0, 0.0};
        pieces_.push_back(std::move(p));
    }
    void finish(const Tolerances& tol) {
        length_ = 0.0;
        vmax_ = 0.0;
        double vmin = 0.0;
        for (Piece& p : pieces_) {
            length_ += p.t1 - p.t0;
            vmin = std::min({vmin, p.v0, p.v1});
            vmax_ = std::max({vmax_, p.v0, p.v1});
        }
        if (vmin < -1e-9 * (1.0 + vmax_))
            throw NegativeInput("rearrangement input dips to " + std::to_string(vmin) +
                                "; nonnegative data required");
        for (Piece& p : pieces_) {
            p.v0 = std::max(p.v0, 0.0);
            p.v1 = std::max(p.v1, 0.0);
            p.vlo = std::min(p.v0, p.v1);
            p.vhi = std::max(p.v0, p.v1);
        }
        collect_critical();
        (void)tol;
    }

    double end_slope(const Piece& p, bool at_end) const {
        if (p.plateau) return 0.0;
        if (p.poly.empty()) return std::numeric_limits<double>::quiet_NaN();
        return poly_eval(poly_derivative(p.poly), at_end ? p.t1 - p.t0 : 0.0);
    }

    // A junction carries a kink of the distribution when the data jumps,
    // turns around, meets a flat run, or changes slope there.
    bool junction_critical(const Piece& a, const Piece& b, double slope_scale) const {
        if (a.plateau || b.plateau) return true;
        if (std::abs(a.v1 - b.v0) > 1e-12 * (1.0 + vmax_)) return true;
        if ((a.v1 > a.v0) != (b.v1 > b.v0)) return true;
        const double sa = end_slope(a, true), sb = end_slope(b, false);
        if (std::isnan(sa) || std::isnan(sb)) return true;
        return std::abs(sa - sb) > 1e-9 * (1.0 + slope_scale);
    }

    void collect_critical() {
        critical_.clear();
        critical_.push_back(0.0);
        double slope_scale = 0.0;
        for (const Piece& p : pieces_)
            if (!p.plateau && !p.poly.empty())
                slope_scale = std::max({slope_scale, std::abs(end_slope(p, false)),
                                        std::abs(end_slope(p, true))});
        const std::size_t m = pieces_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Piece& p = pieces_[i];
            if (p.plateau) {
                critical_.push_back(p.v0);
                continue;
            }
            const bool wrap = (i + 1 == m);
            if (wrap && !wrap_connected_) continue;
            const Piece& q = pieces_[wrap ? 0 : i + 1];
            if (junction_critical(p, q, slope_scale)) {
                critical_.push_back(p.v1);
                critical_.push_back(q.v0);
            }
        }
        if (!wrap_connected_ && !pieces_.empty()) {
            critical_.push_back(pieces_.front().v0);
            critical_.push_back(pieces_.back().v1);
        }
        critical_.push_back(vmax_);
        std::sort(critical_.begin(), critical_.end(), std::greater<double>());
        const double tol = 1e-12 * (1.0 + vmax_);
        critical_.erase(std::unique(critical_.begin(), critical_.end(),
                                    [&](double x, double y) { return x - y <= tol; }),
                        critical_.end());
        if (critical_.back() < 0.0) critical_.back() = 0.0;
    }

    double crossing(const Piece& p, double y) const {
        double a = p.t0, b = p.t1;
        const bool rising = p.v0 < p.v1;
        if (y == p.vlo) return rising ? p.t0 : p.t1;
        if (y == p.vhi) return rising ? p.t1 : p.t0;
        const double span = b - a;
        for (int it = 0; it < 64; ++it) {
            if (b - a <= 1e-14 * span) break;
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b) break;
            const double vm = piece_value(p, m);
            if (vm == y) return m;
            if ((vm < y) == rising)
                a = m;
            else
                b = m;
        }
        return 0.5 * (a + b);
    }

    std::vector<Piece> pieces_;
    std::vector<double> critical_;
    std::function<double(double)> fn_;
    double length_ = 0.0;
    double vmax_ = 0.0;
    bool wrap_connected_ = false;
};

// d(y) = measure{ g > y } as a callable object.
class DistributionFunction {
public:
    explicit DistributionFunction(MonotoneProfile profile) : profile_(std::move(profile)) {}
    double operator()(double y) const { return profile_.measure_above(y); }
    double window_length() const { return profile_.length(); }
    const MonotoneProfile& profile() const { return profile_; }

private:
    MonotoneProfile profile_;
};

// The decreasing rearrangement as a piecewise-linear graph with exact nodes.
class Rearrangement {
public:
    Rearrangement(std::vector<double> u, std::vector<double> v, std::vector<double> levels)
        : u_(std::move(u)), v_(std::move(v)), levels_(std::move(levels)) {
        cum_.resize(u_.size(), 0.0);
        for (std::size_t i = 1; i < u_.size(); ++i)
            cum_[i] = cum_[i - 1] + 0.5 * (v_[i - 1] + v_[i]) * (u_[i] - u_[i - 1]);
    }

    double window_length() const { return u_.back(); }
    const std::vector<double>& abscissae() const { return u_; }
    const std::vector<double>& values() const { return v_; }
    const std::vector<double>& critical_levels() const { return levels_; }

    double operator()(double u) const {
        check_range(u);
        const std::size_t i = locate(u);
        const double du = u_[i + 1] - u_[i];
        if (du <= 0.0) return v_[i + 1];
        const double w = (u - u_[i]) / du;
        return v_[i] + w * (v_[i + 1] - v_[i]);
    }

    double integral_to(double t) const {
        check_range(t);
        const std::size_t i = locate(t);
        const double du = u_[i + 1] - u_[i];
        if (du <= 0.0) return cum_[i];
        const double w = t - u_[i];
        const double vt = v_[i] + (v_[i + 1] - v_[i]) * (w / du);
        return cum_[i] + 0.5 * (v_[i] + vt) * w;
    }

    double lp_norm(double p) const {
        if (!(p > 0.0)) throw std::invalid_argument("Rearrangement::lp_norm: p > 0 required");
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < u_.size(); ++i) {
            const double du = u_[i + 1] - u_[i];
            if (du <= 0.0) continue;
            const double va = v_[i], vb = v_[i + 1];
            if (std::abs(va - vb) <= 1e-15 * (va + vb)) {
                total += std::pow(0.5 * (va + vb), p) * du;
            } else {
                // linear stretch: integral of v^p has a closed form
                const double slope = (vb - va) / du;
                total += (std::pow(vb, p + 1.0) - std::pow(va, p + 1.0)) / (slope * (p + 1.0));
            }
        }
        return std::pow(total, 1.0 / p);
    }

private:
    void check_range(double t) const {
        const double slack = 1e-9 * (1.0 + u_.back());
        if (t < -slack || t > u_.back() + slack)
            throw TOutOfRange("argument " + std::to_string(t) + " outside [0, " +
                              std::to_string(u_.back()) + "]");
    }
    std::size_t locate(double u) const {
        if (u <= u_.front()) return 0;
        if (u >= u_.back()) return u_.size() - 2;
        auto it = std::upper_bound(u_.begin(), u_.end(), u);
        return static_cast<std::size_t>(it - u_.begin()) - 1;
    }

    std::vector<double> u_, v_, cum_, levels_;
};

namespace detail {

inline Rearrangement rearrange_profile(const MonotoneProfile& prof, int n) {
    if (n < 2) throw std::invalid_argument("rearrangement: sample budget must be at least 2");
    const double L = prof.length();
    const std::vector<double> levels = prof.critical_values();
    const double ymax = levels.front();
    if (!(ymax > 0.0)) return Rearrangement({0.0, L}, {0.0, 0.0}, levels);

    // Exact graph data at the critical levels.  Between consecutive levels
    // the distribution is continuous and strictly decreasing.
    const std::size_t nb = levels.size() - 1;
    std::vector<double> d_at(levels.size()), plat(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        d_at[i] = prof.measure_above(levels[i]);
        plat[i] = prof.plateau_measure(levels[i]);
    }

    // Each band receives an area-error budget proportional to its own chord
    // area, with a floor so negligible bands cannot trigger deep recursion.
    std::vector<double> band_area(nb);
    double total = 0.0;
    for (std::size_t i = 0; i < nb; ++i) {
        band_area[i] =
            0.5 * (d_at[i] + plat[i] + d_at[i + 1]) * (levels[i] - levels[i + 1]);
        total += band_area[i] + plat[i] * levels[i];
    }
    total = std::max(total, 1e-300);

    std::vector<double> us, vs;
    auto push = [&](double u, double y) {
        if (!us.empty()) {
            u = std::max(u, us.back());  // guard bisection noise
            if (u <= us.back() && y == vs.back()) return;
        }
        us.push_back(u);
        vs.push_back(y);
    };

    long budget = 16L * n;
    std::function<void(double, double, double, double, double, int)> refine =
        [&](double u1, double y1, double u2, double y2, double atol, int depth) {
            if (y1 - y2 <= 1e-13 * (1.0 + ymax)) return;
            const double ym = 0.5 * (y1 + y2);
            const double um = prof.measure_above(ym);
            const double dev = std::abs(um - 0.5 * (u1 + u2));
            if (--budget > 0 && depth > 0 && dev * (y1 - y2) > 2.0 * atol) {
                refine(u1, y1, um, ym, 0.5 * atol, depth - 1);
                push(um, ym);
                refine(um, ym, u2, y2, 0.5 * atol, depth - 1);
            }
        };

    push(d_at[0], ymax);
    if (plat[0] > 0.0) push(d_at[0] + plat[0], ymax);
    for (std::size_t i = 0; i < nb; ++i) {
        const double atol = std::max(5e-8 * band_area[i],
                                     2.5e-10 * total / static_cast<double>(nb));
        refine(us.back(), levels[i], d_at[i + 1], levels[i + 1], atol, 40);
        push(d_at[i + 1], levels[i + 1]);
        if (plat[i + 1] > 0.0 && levels[i + 1] > 0.0)
            push(d_at[i + 1] + plat[i + 1], levels[i + 1]);
    }
    push(L, 0.0);
    return Rearrangement(std::move(us), std::move(vs), levels);
}

} // namespace detail

inline DistributionFunction distribution(const PiecewisePoly& g, Interval window,
                                         const Tolerances& tol = default_tolerances()) {
    if (!(window.hi > window.lo)) throw std::invalid_argument("distribution: empty window");
    return DistributionFunction(MonotoneProfile::from_piecewise(g, window, tol));
}

inline Rearrangement rearrangement(const PiecewisePoly& g, Interval window, int n = 4096,
                                   const Tolerances& tol = default_tolerances()) {
    if (!(window.hi > window.lo)) throw std::invalid_argument("rearrangement: empty window");
    return detail::rearrange_profile(MonotoneProfile::from_piecewise(g, window, tol), n);
}

inline Rearrangement rearrangement(const MonotoneProfile& profile, int n = 4096) {
    return detail::rearrange_profile(profile, n);
}

// Integral of the rearrangement of g over [0, t].
inline double cumulative_rearrangement(const PiecewisePoly& g, Interval window, double t,
                                       int n = 4096,
                                       const Tolerances& tol = default_tolerances()) {
    return rearrangement(g, window, n, tol).integral_to(t);
}

} // namespace rodov
