#pragma once

// Test functions for the verification harness: trigonometric polynomials (the
// generic smooth case) and wrapped spline members (the equality case), behind
// one interface with exact derivatives and two kinds of uniform norms:
// a near-exact estimate and a certified upper bound that is never below the
// true value (grid maximum plus a curvature margin).

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <utility>
#include <vector>

#include "rodov/piecewise.hpp"

namespace rodov {

struct TrigPoly {
    double period = 1.0;
    std::vector<double> cosc;  // cosc[j] * cos(2 pi j t / period), j >= 0
    std::vector<double> sinc;  // sinc[j] * sin(2 pi j t / period), j >= 1

    double omega() const { return 2.0 * std::numbers::pi / period; }

    double value(double t) const {
        const double w = omega();
        double s = 0.0;
        for (std::size_t j = 0; j < cosc.size(); ++j)
            if (cosc[j] != 0.0) s += cosc[j] * std::cos(w * static_cast<double>(j) * t);
        for (std::size_t j = 1; j < sinc.size(); ++j)
            if (sinc[j] != 0.0) s += sinc[j] * std::sin(w * static_cast<double>(j) * t);
        return s;
    }

    TrigPoly derivative() const {
        const double w = omega();
        const std::size_t n = std::max(cosc.size(), sinc.size());
        TrigPoly d;
        d.period = period;
        d.cosc.assign(n, 0.0);
        d.sinc.assign(n, 0.0);
        for (std::size_t j = 1; j < n; ++j) {
            const double wj = w * static_cast<double>(j);
            const double cj = j < cosc.size() ? cosc[j] : 0.0;
            const double sj = j < sinc.size() ? sinc[j] : 0.0;
            d.cosc[j] = sj * wj;
            d.sinc[j] = -cj * wj;
        }
        return d;
    }

    TrigPoly shifted(double alpha) const {
        const double w = omega();
        const std::size_t n = std::max(cosc.size(), sinc.size());
        TrigPoly out;
        out.period = period;
        out.cosc.assign(n, 0.0);
        out.sinc.assign(n, 0.0);
        if (!cosc.empty()) out.cosc[0] = cosc[0];
        for (std::size_t j = 1; j < n; ++j) {
            const double th = w * static_cast<double>(j) * alpha;
            const double cj = j < cosc.size() ? cosc[j] : 0.0;
            const double sj = j < sinc.size() ? sinc[j] : 0.0;
            out.cosc[j] = cj * std::cos(th) + sj * std::sin(th);
            out.sinc[j] = -cj * std::sin(th) + sj * std::cos(th);
        }
        return out;
    }

    // Upper bound for the sup of the k-th derivative from coefficient sums.
    double coefficient_bound(int k) const {
        const double w = omega();
        double s = k == 0 && !cosc.empty() ? std::abs(cosc[0]) : 0.0;
        const std::size_t n = std::max(cosc.size(), sinc.size());
        for (std::size_t j = 1; j < n; ++j) {
            const double wj = std::pow(w * static_cast<double>(j), k);
            const double cj = j < cosc.size() ? std::abs(cosc[j]) : 0.0;
            const double sj = j < sinc.size() ? std::abs(sinc[j]) : 0.0;
            s += wj * (cj + sj);
        }
        return s;
    }

    int harmonics() const {
        int top = 0;
        for (std::size_t j = 1; j < cosc.size(); ++j)
            if (cosc[j] != 0.0) top = static_cast<int>(j);
        for (std::size_t j = 1; j < sinc.size(); ++j)
            if (sinc[j] != 0.0) top = std::max(top, static_cast<int>(j));
        return top;
    }
};

class TestFunction {
public:
    static TestFunction from_trig(TrigPoly tp, int derivative_capacity = 12) {
        TestFunction x;
        x.period_ = tp.period;
        x.trig_.push_back(std::move(tp));
        for (int k = 1; k <= derivative_capacity; ++k)
            x.trig_.push_back(x.trig_.back().derivative());
        return x;
    }

    // Wrap a piecewise polynomial whose derivatives are meaningful up to the
    // given order (one below the discontinuous one).
    static TestFunction from_piecewise(PiecewisePoly f, int derivative_capacity) {
        TestFunction x;
        x.period_ = f.period();
        x.pw_.push_back(std::move(f));
        for (int k = 1; k <= derivative_capacity; ++k)
            x.pw_.push_back(differentiate(x.pw_.back()));
        return x;
    }

    bool is_piecewise() const { return !pw_.empty(); }
    double period() const { return period_; }
    int max_derivative_order() const {
        return static_cast<int>((is_piecewise() ? pw_.size() : trig_.size())) - 1;
    }

    const PiecewisePoly& piecewise(int k) const {
        require_order(k);
        return pw_[static_cast<std::size_t>(k)];
    }
    const TrigPoly& trig(int k = 0) const {
        require_order(k);
        return trig_[static_cast<std::size_t>(k)];
    }

    double value(double t) const { return derivative(0, t); }

    double derivative(int k, double t) const {
        require_order(k);
        return is_piecewise() ? pw_[static_cast<std::size_t>(k)](t)
                              : trig_[static_cast<std::size_t>(k)].value(t);
    }

    TestFunction shifted_by(double alpha) const {
        if (is_piecewise()) {
            TestFunction x;
            x.period_ = period_;
            for (const auto& f : pw_) x.pw_.push_back(shifted(f, alpha));
            return x;
        }
        TestFunction x;
        x.period_ = period_;
        for (const auto& f : trig_) x.trig_.push_back(f.shifted(alpha));
        return x;
    }

    TestFunction scaled_by(double factor) const {
        TestFunction x;
        x.period_ = period_;
        for (const auto& f : pw_) x.pw_.push_back(scaled(f, factor, 1.0, f.period()));
        for (const auto& f : trig_) {
            TrigPoly g = f;
            for (double& c : g.cosc) c *= factor;
            for (double& c : g.sinc) c *= factor;
            x.trig_.push_back(std::move(g));
        }
        return x;
    }

    TestFunction plus_constant(double c0) const {
        TestFunction x = *this;
        if (is_piecewise()) {
            x.pw_[0] = add_constant(x.pw_[0], c0);
        } else {
            if (x.trig_[0].cosc.empty()) x.trig_[0].cosc.push_back(0.0);
            x.trig_[0].cosc[0] += c0;
        }
        return x;
    }

    // Near-exact sup of the k-th derivative (exact for wrapped splines,
    // polished grid extrema for trig polynomials).
    double sup_norm_tight(int k) const {
        require_order(k);
        if (is_piecewise()) return sup_norm(pw_[static_cast<std::size_t>(k)]);
        const auto [lo, hi] = trig_range(k);
        return std::max(std::abs(lo), std::abs(hi));
    }

    // Upper bound that is never below the true sup: exact for wrapped splines,
    // grid maximum plus a curvature margin for trig polynomials.
    double sup_norm_certified(int k) const {
        require_order(k);
        if (is_piecewise()) return sup_norm(pw_[static_cast<std::size_t>(k)]);
        const TrigPoly& f = trig_[static_cast<std::size_t>(k)];
        const int n = grid_size(f);
        const double h = period_ / n;
        double gmax = 0.0;
        for (int i = 0; i < n; ++i)
            gmax = std::max(gmax, std::abs(f.value(i * h)));
        const double curv = k + 2 <= max_derivative_order()
                                ? trig_[static_cast<std::size_t>(k + 2)].coefficient_bound(0)
                                : f.coefficient_bound(2);
        const double margin = curv * h * h / 8.0;
        return std::max(gmax + margin, sup_norm_tight(k));
    }

    // Signed range (min, max) of the value over one period.
    std::pair<double, double> range_tight() const {
        if (is_piecewise()) return piecewise_range(pw_[0]);
        return trig_range(0);
    }

private:
    void require_order(int k) const {
        if (k < 0 || k > max_derivative_order())
            throw DerivativeUnavailable("derivative order " + std::to_string(k) +
                                        " beyond capacity " +
                                        std::to_string(max_derivative_order()));
    }

    static int grid_size(const TrigPoly& f) {
        return std::max(2048, 256 * std::max(1, f.harmonics()));
    }

    static std::pair<double, double> piecewise_range(const PiecewisePoly& f) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        auto consider = [&](double v) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        };
        for (std::size_t i = 0; i < f.segment_count(); ++i) {
            const Coeffs& c = f.segments()[i];
            const double len = f.segment_length(i);
            consider(poly_eval(c, 0.0));
            consider(poly_eval(c, len));
            if (c.size() > 2) {
                std::vector<double> crit;
                if (detail::poly_roots_in(poly_derivative(c), 0.0, len, crit))
                    for (double u : crit) consider(poly_eval(c, u));
            }
        }
        return {lo, hi};
    }

    // Polished extrema of the k-th derivative: grid scan for sign changes of
    // the next derivative, then bisection on it.
    std::pair<double, double> trig_range(int k) const {
        const TrigPoly& f = trig_[static_cast<std::size_t>(k)];
        const TrigPoly df = k + 1 <= max_derivative_order()
                                ? trig_[static_cast<std::size_t>(k + 1)]
                                : f.derivative();
        const int n = grid_size(f);
        const double h = period_ / n;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        auto consider = [&](double v) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        };
        double prev_t = 0.0, prev_d = df.value(0.0);
        consider(f.value(0.0));
        for (int i = 1; i <= n; ++i) {
            const double t = i * h;
            const double d = df.value(t);
            consider(f.value(t));
            if ((prev_d > 0.0) != (d > 0.0) && prev_d != 0.0) {
                double a = prev_t, b = t, da = prev_d;
                for (int it = 0; it < 64; ++it) {
                    const double m = 0.5 * (a + b);
                    if (m <= a || m >= b) break;
                    const double dm = df.value(m);
                    if (dm == 0.0) {
                        a = b = m;
                        break;
                    }
                    if ((da > 0.0) == (dm > 0.0)) {
                        a = m;
                        da = dm;
                    } else {
                        b = m;
                    }
                }
                consider(f.value(0.5 * (a + b)));
            }
            prev_t = t;
            prev_d = d;
        }
        return {lo, hi};
    }

    double period_ = 1.0;
    std::vector<PiecewisePoly> pw_;
    std::vector<TrigPoly> trig_;
};

// Midpoint and amplitude of the value range: (max+min)/2 and (max-min)/2.
inline std::pair<double, double> best_constant(const TestFunction& x) {
    const auto [lo, hi] = x.range_tight();
    return {0.5 * (hi + lo), 0.5 * (hi - lo)};
}

} // namespace rodov
