#pragma once

// Periodic piecewise polynomials with exact calculus: evaluation,
// differentiation, zero-mean antidifferentiation, norms, root isolation,
// sign-change counting, monotone-branch decomposition and branch inversion.
//
// A function is stored as a period, a sorted list of breakpoints starting at
// zero, and one dense coefficient vector per segment in the local variable
// u = t - breakpoint, which keeps conditioning independent of how far the
// segment sits from the origin.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rodov/config.hpp"
#include "rodov/errors.hpp"

namespace rodov {

using Coeffs = std::vector<double>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// ---------------------------------------------------------------------------
// Dense polynomial primitives (local coefficient vectors, c[i] * u^i)
// ---------------------------------------------------------------------------

inline double poly_eval(std::span<const double> c, double u) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
    return v;
}

inline Coeffs poly_derivative(const Coeffs& c) {
    if (c.size() <= 1) return Coeffs{0.0};
    Coeffs d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

inline Coeffs poly_antiderivative(const Coeffs& c) {
    Coeffs a(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) a[i + 1] = c[i] / static_cast<double>(i + 1);
    return a;
}

// Exact integral of the polynomial over [u0, u1].
inline double poly_integral(const Coeffs& c, double u0, double u1) {
    const Coeffs a = poly_antiderivative(c);
    return poly_eval(a, u1) - poly_eval(a, u0);
}

// Re-center: coefficients of u -> p(u + offset).
inline Coeffs poly_shift_origin(Coeffs c, double offset) {
    if (offset == 0.0 || c.size() <= 1) return c;
    const std::size_t n = c.size();
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = n - 1; i-- > j;) c[i] += offset * c[i + 1];
    return c;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Magnitude scale of p on [lo, hi]: sum of |c_i| * M^i with M = max reach of u.
inline double poly_scale_on(std::span<const double> c, double lo, double hi) {
    const double m = std::max({1.0, std::abs(lo), std::abs(hi)});
    double s = 0.0, mi = 1.0;
    for (double ci : c) {
        s += std::abs(ci) * mi;
        mi *= m;
    }
    return s;
}

// Effective degree once coefficients that cannot matter on [lo, hi] are
// dropped.  Returns -1 when the polynomial is indistinguishable from zero.
inline int poly_trimmed_degree(std::span<const double> c, double lo, double hi) {
    const double scale = poly_scale_on(c, lo, hi);
    if (scale <= 0.0) return -1;
    const double m = std::max({1.0, std::abs(lo), std::abs(hi)});
    const double cutoff = 1e-14 * scale;
    int deg = -1;
    double mi = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c[i]) * mi > cutoff) deg = static_cast<int>(i);
        mi *= m;
    }
    return deg;
}

namespace detail {

inline double bisect_poly(std::span<const double> c, double a, double b, double fa) {
    // fa and f(b) have opposite (nonzero) signs.
    for (int it = 0; it < 128; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = poly_eval(c, m);
        if (fm == 0.0) return m;
        if ((fa > 0.0) == (fm > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Roots of p inside [lo, hi] by recursive derivative-chain subdivision.
// Appends to out unsorted-but-increasing; returns false when p is
// indistinguishable from zero on the interval at working precision.
inline bool poly_roots_in(std::span<const double> c, double lo, double hi,
                          std::vector<double>& out) {
    const int deg = poly_trimmed_degree(c, lo, hi);
    if (deg < 0) return false;
    if (deg == 0) return true;
    const double ztol = 1e-13 * poly_scale_on(c, lo, hi);
    if (deg == 1) {
        const double r = -c[0] / c[1];
        if (r >= lo && r <= hi) out.push_back(r);
        return true;
    }
    Coeffs d(c.begin() + 1, c.end());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] *= static_cast<double>(i + 1);
    std::vector<double> crit;
    if (!poly_roots_in(d, lo, hi, crit)) {
        // Derivative vanishes: p is effectively constant here.
        if (std::abs(poly_eval(c, 0.5 * (lo + hi))) <= ztol) return false;
        return true;
    }
    std::vector<double> nodes;
    nodes.reserve(crit.size() + 2);
    nodes.push_back(lo);
    for (double t : crit)
        if (t > nodes.back()) nodes.push_back(t);
    if (hi > nodes.back()) nodes.push_back(hi);

    std::vector<double> vals(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = poly_eval(c, nodes[i]);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (std::abs(vals[i]) <= ztol) {
            out.push_back(nodes[i]);
            continue;
        }
        if (std::abs(vals[i + 1]) <= ztol) continue;  // handled as next node
        if ((vals[i] > 0.0) != (vals[i + 1] > 0.0))
            out.push_back(bisect_poly(c, nodes[i], nodes[i + 1], vals[i]));
    }
    if (std::abs(vals.back()) <= ztol) out.push_back(nodes.back());
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// PiecewisePoly
// ---------------------------------------------------------------------------

class PiecewisePoly {
public:
    PiecewisePoly(double period, std::vector<double> breaks, std::vector<Coeffs> segs)
        : period_(period), breaks_(std::move(breaks)), segs_(std::move(segs)) {
        validate();
    }

    static PiecewisePoly constant(double value, double period) {
        return PiecewisePoly(period, {0.0}, {Coeffs{value}});
    }

    double period() const { return period_; }
    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<Coeffs>& segments() const { return segs_; }
    std::size_t segment_count() const { return segs_.size(); }

    double segment_start(std::size_t i) const { return breaks_[i]; }
    double segment_end(std::size_t i) const {
        return i + 1 < breaks_.size() ? breaks_[i + 1] : period_;
    }
    double segment_length(std::size_t i) const { return segment_end(i) - segment_start(i); }

    int degree() const {
        std::size_t d = 1;
        for (const auto& s : segs_) d = std::max(d, s.size());
        return static_cast<int>(d) - 1;
    }

    // Fold t into [0, period).
    double fold(double t) const {
        double u = std::fmod(t, period_);
        if (u < 0.0) u += period_;
        if (u >= period_) u = 0.0;
        return u;
    }

    // Index of the segment containing folded coordinate u; at a breakpoint the
    // segment to the right is used.
    std::size_t locate(double u) const {
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
        return static_cast<std::size_t>(it - breaks_.begin()) - 1;
    }

    double operator()(double t) const {
        const double u = fold(t);
        const std::size_t i = locate(u);
        return poly_eval(segs_[i], u - breaks_[i]);
    }

private:
    void validate() {
        if (!(period_ > 0.0) || !std::isfinite(period_))
            throw std::invalid_argument("PiecewisePoly: period must be positive and finite");
        if (breaks_.empty() || breaks_.size() != segs_.size())
            throw std::invalid_argument("PiecewisePoly: need one segment per breakpoint");
        if (std::abs(breaks_.front()) <= 1e-12 * period_)
            breaks_.front() = 0.0;
        if (breaks_.front() != 0.0)
            throw std::invalid_argument("PiecewisePoly: first breakpoint must be 0");
        for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw std::invalid_argument("PiecewisePoly: breakpoints must increase strictly");
        if (!(breaks_.back() < period_))
            throw std::invalid_argument("PiecewisePoly: breakpoints must stay below the period");
        for (const auto& s : segs_) {
            if (s.empty())
                throw std::invalid_argument("PiecewisePoly: empty coefficient vector");
            if (static_cast<int>(s.size()) - 1 > default_tolerances().degree_cap)
                throw std::invalid_argument("PiecewisePoly: segment degree exceeds cap");
            for (double c : s)
                if (!std::isfinite(c))
                    throw std::invalid_argument("PiecewisePoly: non-finite coefficient");
        }
    }

    double period_;
    std::vector<double> breaks_;
    std::vector<Coeffs> segs_;
};

inline double eval(const PiecewisePoly& f, double t) { return f(t); }

// Same function values, but the stored period is copies * f.period().  Exact:
// each segment's polynomial is local to its own breakpoint, so repeating the
// segment list with offset breakpoints reproduces f bit for bit.
inline PiecewisePoly tiled(const PiecewisePoly& f, int copies) {
    if (copies < 1)
        throw std::invalid_argument("tiled: need at least one copy");
    if (copies == 1) return f;
    const double P = f.period();
    std::vector<double> brs;
    std::vector<Coeffs> segs;
    brs.reserve(f.segment_count() * static_cast<std::size_t>(copies));
    segs.reserve(f.segment_count() * static_cast<std::size_t>(copies));
    for (int c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < f.segment_count(); ++i) {
            brs.push_back(f.segment_start(i) + c * P);
            segs.push_back(f.segments()[i]);
        }
    return PiecewisePoly(copies * P, std::move(brs), std::move(segs));
}

// ---------------------------------------------------------------------------
// Piece iteration over an arbitrary window (periodic unfolding)
// ---------------------------------------------------------------------------

namespace detail {

// Calls fn(segment_index, a, b, local_a) for consecutive pieces [a, b] that
// cover [lo, hi], where local_a is the local coordinate of a within the
// segment's polynomial.
template <class Fn>
void for_each_piece(const PiecewisePoly& f, double lo, double hi, Fn&& fn) {
    const double P = f.period();
    const auto& br = f.breakpoints();
    std::vector<double> cuts;
    const double guard = 1e-13 * P;
    for (double base = std::floor(lo / P) * P; base < hi; base += P) {
        for (double b : br) {
            const double t = base + b;
            if (t > lo + guard && t < hi - guard) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(hi);
    double prev = lo;
    for (double cut : cuts) {
        if (cut <= prev) continue;
        const double mid = 0.5 * (prev + cut);
        const double um = f.fold(mid);
        const std::size_t idx = f.locate(um);
        const double local_a = um - (mid - prev) - f.segment_start(idx);
        fn(idx, prev, cut, local_a);
        prev = cut;
    }
}

} // namespace detail

// Exact integral of f over [a, b] (window may span many periods).
inline double integral(const PiecewisePoly& f, double a, double b) {
    double s = 0.0;
    detail::for_each_piece(f, a, b, [&](std::size_t i, double pa, double pb, double la) {
        s += poly_integral(f.segments()[i], la, la + (pb - pa));
    });
    return s;
}

inline double mean(const PiecewisePoly& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.segment_count(); ++i)
        s += poly_integral(f.segments()[i], 0.0, f.segment_length(i));
    return s / f.period();
}

// Location and magnitude of the largest |f| over one period.
inline std::pair<double, double> extremum(const PiecewisePoly& f) {
    double best_t = 0.0, best_v = -1.0;
    auto consider = [&](double t, double v) {
        const double a = std::abs(v);
        if (a > best_v) {
            best_v = a;
            best_t = t;
        }
    };
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        const Coeffs& c = f.segments()[i];
        const double len = f.segment_length(i);
        consider(f.segment_start(i), poly_eval(c, 0.0));
        consider(f.segment_start(i) + len, poly_eval(c, len));
        if (c.size() > 2) {
            Coeffs d = poly_derivative(c);
            std::vector<double> crit;
            if (detail::poly_roots_in(d, 0.0, len, crit))
                for (double u : crit) consider(f.segment_start(i) + u, poly_eval(c, u));
        }
    }
    return {best_t, best_v};
}

inline double sup_norm(const PiecewisePoly& f) { return extremum(f).second; }

inline PiecewisePoly differentiate(const PiecewisePoly& f) {
    std::vector<Coeffs> segs;
    segs.reserve(f.segment_count());
    for (const auto& c : f.segments()) segs.push_back(poly_derivative(c));
    return PiecewisePoly(f.period(), f.breakpoints(), std::move(segs));
}

// The periodic antiderivative with zero mean.  Requires mean(f) ~ 0, otherwise
// no periodic antiderivative exists.
inline PiecewisePoly antiderivative_zero_mean(const PiecewisePoly& f,
                                              const Tolerances& tol = default_tolerances()) {
    const double m = mean(f);
    const double gate = tol.mean_rel * f.period() * std::max(sup_norm(f), 1e-300);
    if (std::abs(m) > gate)
        throw NonZeroMeanInput("antiderivative_zero_mean: input mean " + std::to_string(m) +
                               " exceeds tolerance " + std::to_string(gate));
    std::vector<Coeffs> segs;
    segs.reserve(f.segment_count());
    double acc = 0.0;
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        Coeffs a = poly_antiderivative(f.segments()[i]);
        a[0] = acc;
        acc = poly_eval(a, f.segment_length(i));
        segs.push_back(std::move(a));
    }
    PiecewisePoly F(f.period(), f.breakpoints(), std::move(segs));
    const double mf = mean(F);
    std::vector<Coeffs> adj = F.segments();
    for (auto& c : adj) c[0] -= mf;
    return PiecewisePoly(F.period(), F.breakpoints(), std::move(adj));
}

// g(t) = amplitude * f(t / time_scale); period scales by time_scale.
inline PiecewisePoly scaled(const PiecewisePoly& f, double amplitude, double time_scale,
                            double period_override = 0.0) {
    if (!(time_scale > 0.0))
        throw std::invalid_argument("scaled: time_scale must be positive");
    std::vector<double> brs = f.breakpoints();
    for (double& b : brs) b *= time_scale;
    std::vector<Coeffs> segs = f.segments();
    for (auto& c : segs) {
        double s = amplitude;
        for (auto& ci : c) {
            ci *= s;
            s /= time_scale;
        }
    }
    const double P = period_override > 0.0 ? period_override : f.period() * time_scale;
    return PiecewisePoly(P, std::move(brs), std::move(segs));
}

inline PiecewisePoly add_constant(const PiecewisePoly& f, double c0) {
    std::vector<Coeffs> segs = f.segments();
    for (auto& c : segs) c[0] += c0;
    return PiecewisePoly(f.period(), f.breakpoints(), std::move(segs));
}

// g(t) = f(t + alpha).
inline PiecewisePoly shifted(const PiecewisePoly& f, double alpha) {
    const double P = f.period();
    const double a = f.fold(alpha);
    if (a == 0.0) return f;
    struct Piece {
        double start, len;
        Coeffs c;
    };
    std::vector<Piece> pieces;
    const double snap = 1e-12 * P;
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        const double len = f.segment_length(i);
        double s = f.segment_start(i) - a;
        if (s < 0.0) s += P;
        if (std::abs(s - P) <= snap) s = 0.0;
        if (s + len <= P + snap) {
            pieces.push_back({s, len, f.segments()[i]});
        } else {
            const double l1 = P - s;
            pieces.push_back({s, l1, f.segments()[i]});
            pieces.push_back({0.0, len - l1, poly_shift_origin(f.segments()[i], l1)});
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& x, const Piece& y) { return x.start < y.start; });
    std::vector<double> brs;
    std::vector<Coeffs> segs;
    for (auto& p : pieces) {
        if (p.len <= snap) continue;
        brs.push_back(p.start);
        segs.push_back(std::move(p.c));
    }
    if (!brs.empty() && std::abs(brs.front()) <= snap) brs.front() = 0.0;
    return PiecewisePoly(P, std::move(brs), std::move(segs));
}

// ---------------------------------------------------------------------------
// Roots, signs, branches
// ---------------------------------------------------------------------------

struct RootPoint {
    double t = 0.0;
    // True when the point borders an interval on which f vanishes identically;
    // such intervals are reported through their two endpoints.
    bool zero_interval_edge = false;
};

// All zeros of f inside the window, in increasing order.  Throws
// IdenticallyZero when f vanishes on the whole window.
inline std::vector<RootPoint> roots(const PiecewisePoly& f, Interval window,
                                    const Tolerances& tol = default_tolerances()) {
    (void)tol;
    if (!(window.hi > window.lo))
        throw std::invalid_argument("roots: empty window");
    struct Mark {
        double t;
        bool zero_edge;
    };
    std::vector<Mark> marks;
    bool any_nonzero = false;
    double open_zero_start = std::numeric_limits<double>::quiet_NaN();
    auto close_zero_run = [&](double end) {
        if (!std::isnan(open_zero_start)) {
            marks.push_back({open_zero_start, true});
            marks.push_back({end, true});
            open_zero_start = std::numeric_limits<double>::quiet_NaN();
        }
    };
    detail::for_each_piece(f, window.lo, window.hi, [&](std::size_t i, double a, double b,
                                                        double la) {
        const double lb = la + (b - a);
        const Coeffs& c = f.segments()[i];
        std::vector<double> rs;
        const bool nonzero = detail::poly_roots_in(c, la, lb, rs);
        if (!nonzero) {
            if (std::isnan(open_zero_start)) open_zero_start = a;
            return;
        }
        any_nonzero = true;
        close_zero_run(a);
        for (double u : rs) marks.push_back({a + (u - la), false});
    });
    close_zero_run(window.hi);
    if (!any_nonzero)
        throw IdenticallyZero("roots: function vanishes on the whole window");

    std::sort(marks.begin(), marks.end(), [](const Mark& x, const Mark& y) { return x.t < y.t; });
    const double dup = 1e-11 * std::max(1.0, window.hi - window.lo);
    std::vector<RootPoint> out;
    for (const Mark& m : marks) {
        if (!out.empty() && std::abs(m.t - out.back().t) <= dup) {
            out.back().zero_interval_edge = out.back().zero_interval_edge || m.zero_edge;
            continue;
        }
        out.push_back({m.t, m.zero_edge});
    }
    return out;
}

// Count of strict sign alternations of f over the window.  Zero stretches
// separate signs only when the signs on the two sides actually differ.
inline int sign_changes(const PiecewisePoly& f, Interval window,
                        const Tolerances& tol = default_tolerances()) {
    std::vector<RootPoint> rts;
    try {
        rts = roots(f, window, tol);
    } catch (const IdenticallyZero&) {
        return 0;
    }
    std::vector<double> nodes;
    nodes.push_back(window.lo);
    for (const auto& r : rts)
        if (r.t > nodes.back()) nodes.push_back(r.t);
    if (window.hi > nodes.back()) nodes.push_back(window.hi);

    const double ztol = tol.root_rel * (1.0 + sup_norm(f));
    int count = 0, prev = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double v = f(0.5 * (nodes[i] + nodes[i + 1]));
        const int s = std::abs(v) <= ztol ? 0 : (v > 0.0 ? 1 : -1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Decomposition of one period into maximal closed intervals of monotonicity.
// A flat run of f is attached to the branch preceding it, so each branch is
// non-strictly monotone and branch interiors tile the period.  Branches are
// returned in increasing order of their left endpoint inside [0, period); the
// final branch may wrap past the period.
inline std::vector<Interval> monotone_branches(const PiecewisePoly& f,
                                               const Tolerances& tol = default_tolerances()) {
    const double P = f.period();
    const PiecewisePoly df = differentiate(f);
    std::vector<double> nodes;
    nodes.push_back(0.0);
    for (double b : f.breakpoints())
        if (b > 0.0) nodes.push_back(b);
    try {
        for (const auto& r : roots(df, {0.0, P}, tol)) nodes.push_back(r.t);
    } catch (const IdenticallyZero&) {
        return {Interval{0.0, P}};
    }
    nodes.push_back(P);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [&](double x, double y) { return std::abs(x - y) <= 1e-12 * P; }),
                nodes.end());

    const double ztol = tol.root_rel * (1.0 + sup_norm(df));
    struct Gap {
        double lo;
        int sign;
    };
    std::vector<Gap> runs;  // consecutive nonzero-sign runs (lo of first gap)
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double v = df(0.5 * (nodes[i] + nodes[i + 1]));
        const int s = std::abs(v) <= ztol ? 0 : (v > 0.0 ? 1 : -1);
        if (s == 0) continue;
        if (runs.empty() || runs.back().sign != s) runs.push_back({nodes[i], s});
    }
    if (runs.empty()) return {Interval{0.0, P}};
    // Merge the wrap-around: if the last run continues into the first one
    // across t = 0, drop the duplicate lead entry.
    if (runs.size() > 1 && runs.front().sign == runs.back().sign && runs.front().lo == 0.0)
        runs.erase(runs.begin());
    if (runs.size() == 1) return {Interval{0.0, P}};

    std::vector<double> bounds;
    bounds.reserve(runs.size());
    for (const Gap& g : runs) bounds.push_back(g.lo);
    std::sort(bounds.begin(), bounds.end());
    std::vector<Interval> out;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const double lo = bounds[i];
        const double hi = i + 1 < bounds.size() ? bounds[i + 1] : bounds.front() + P;
        out.push_back({lo, hi});
    }
    return out;
}

// Solve f(t) = y for t on a (non-strictly) monotone branch.  On a monotone
// branch the endpoint values bound the range, so no global norm is needed.
inline double invert_on_branch(const PiecewisePoly& f, Interval branch, double y,
                               const Tolerances& tol = default_tolerances()) {
    double a = branch.lo, b = branch.hi;
    double fa = f(a), fb = f(b);
    const double slack = tol.root_rel * (1.0 + std::max(std::abs(fa), std::abs(fb)));
    const double lo_v = std::min(fa, fb), hi_v = std::max(fa, fb);
    if (y < lo_v - slack || y > hi_v + slack)
        throw LevelOutOfRange("invert_on_branch: level " + std::to_string(y) +
                              " outside branch range [" + std::to_string(lo_v) + ", " +
                              std::to_string(hi_v) + "]");
    if (y <= lo_v) return fa <= fb ? a : b;
    if (y >= hi_v) return fa <= fb ? b : a;
    const bool rising = fa <= fb;
    for (int it = 0; it < 128; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if (fm == y) return m;
        if ((fm < y) == rising)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

// |f| as a piecewise polynomial; breakpoints gain the sign-change locations.
inline PiecewisePoly absolute(const PiecewisePoly& f,
                              const Tolerances& tol = default_tolerances()) {
    const double P = f.period();
    std::vector<double> nodes;
    nodes.push_back(0.0);
    for (double b : f.breakpoints())
        if (b > 0.0) nodes.push_back(b);
    try {
        for (const auto& r : roots(f, {0.0, P}, tol))
            if (r.t > 0.0 && r.t < P) nodes.push_back(r.t);
    } catch (const IdenticallyZero&) {
        return PiecewisePoly::constant(0.0, P);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [&](double x, double y) { return std::abs(x - y) <= 1e-12 * P; }),
                nodes.end());
    nodes.push_back(P);

    std::vector<double> brs;
    std::vector<Coeffs> segs;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double lo = nodes[i], hi = nodes[i + 1];
        if (hi - lo <= 1e-13 * P) continue;
        const double mid = 0.5 * (lo + hi);
        const std::size_t idx = f.locate(f.fold(mid));
        Coeffs c = poly_shift_origin(f.segments()[idx], lo - f.segment_start(idx));
        if (f(mid) < 0.0)
            for (double& ci : c) ci = -ci;
        brs.push_back(lo);
        segs.push_back(std::move(c));
    }
    return PiecewisePoly(P, std::move(brs), std::move(segs));
}

// ---------------------------------------------------------------------------
// Lp norms
// ---------------------------------------------------------------------------

namespace detail {

// Adaptive Simpson for smooth integrands on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                               double fa, double fm, double fb, double whole, double eps,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

inline double integrate_adaptive(const std::function<double(double)>& g, double a, double b,
                                 double eps_abs) {
    if (!(b > a)) return 0.0;
    const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(g, a, b, fa, fm, fb, whole, std::max(eps_abs, 1e-300), 44);
}

} // namespace detail

// L_p norm over the window: (integral of |f|^p)^(1/p).  Integer p is computed
// by exact polynomial integration after sign-splitting at the roots;
// non-integer p falls back to adaptive quadrature on the sign-split pieces.
inline double lp_norm(const PiecewisePoly& f, double p, Interval window,
                      const Tolerances& tol = default_tolerances()) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: exponent must be positive");
    if (!(window.hi > window.lo)) throw std::invalid_argument("lp_norm: empty window");

    std::vector<double> nodes;
    nodes.push_back(window.lo);
    try {
        for (const auto& r : roots(f, window, tol))
            if (r.t > nodes.back()) nodes.push_back(r.t);
    } catch (const IdenticallyZero&) {
        return 0.0;
    }
    if (window.hi > nodes.back()) nodes.push_back(window.hi);

    const double pr = std::round(p);
    const bool integer_p =
        std::abs(p - pr) <= 1e-12 && pr >= 1.0 &&
        (f.degree() + 1) * pr <= 2.0 * tol.degree_cap;
    const double fsup = integer_p ? 0.0 : std::max(sup_norm(f), 1e-300);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double lo = nodes[i], hi = nodes[i + 1];
        if (hi - lo <= 0.0) continue;
        const double sgn = f(0.5 * (lo + hi)) < 0.0 ? -1.0 : 1.0;
        if (integer_p) {
            const int ip = static_cast<int>(pr);
            detail::for_each_piece(f, lo, hi, [&](std::size_t si, double a, double b, double la) {
                Coeffs c = f.segments()[si];
                if (sgn < 0.0)
                    for (double& ci : c) ci = -ci;
                Coeffs pw{1.0};
                for (int q = 0; q < ip; ++q) pw = poly_mul(pw, c);
                total += poly_integral(pw, la, la + (b - a));
            });
        } else {
            const double scale = std::pow(fsup, p) * (hi - lo);
            total += detail::integrate_adaptive(
                [&](double t) { return std::pow(std::abs(f(t)), p); }, lo, hi,
                tol.quad_rel * std::max(scale, 1e-300));
        }
    }
    return std::pow(total, 1.0 / p);
}

} // namespace rodov
