// Acceptance suite: eight criteria, one [PASS]/[FAIL] line each.
// Exit status 0 when all criteria pass, 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rodov/rodov.hpp"
#include "rodov/scaling.hpp"
#include "rodov/matcher.hpp"
#include "rodov/rearrange.hpp"
#include "rodov/verify.hpp"
#include "oracles.hpp"

using namespace rodov;

namespace {

// Pinned tolerances.  Every threshold the suite enforces lives here.
constexpr double kMeanRel = 1e-12;        // spline mean, relative to sup * period
constexpr double kAntisymRel = 1e-11;     // half-period antisymmetry, relative to sup
constexpr double kContinuityRel = 1e-11;  // breakpoint continuity per derivative level
constexpr double kZeroRel = 1e-10;        // closed-form zero residual, relative to sup
constexpr double kNormTol = 1e-10;        // base-spline sup norms 1, 1/2, 1/3
constexpr double kPointwiseRel = 1e-10;   // base splines vs independent reconstructions
constexpr double kHomogeneityRel = 1e-9;  // derivative-norm scaling law
constexpr double kRoundTripRel = 1e-8;    // solver round trip, relative norm error
constexpr double kFixtureTol = 1e-6;      // solver fixtures, absolute per parameter
constexpr double kTrialTolRel = 1e-8;     // slack tolerance for randomized trials
constexpr double kEqualityRel = 1e-9;     // two-sided slack for extremal members
constexpr double kRearrangeRel = 1e-7;    // equimeasurability and L1/L2 preservation
constexpr double kTriangleTol = 1e-8;     // triangle rearrangement against 1 - u

struct Tracker {
    double worst = 0.0;
    void note(double v) {
        if (v > worst) worst = v;
    }
};

std::string sci(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.1e", v);
    return b;
}

// Largest jump of the periodic extension across any breakpoint.
double continuity_defect(const PiecewisePoly& f) {
    const auto& segs = f.segments();
    double worst = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::size_t j = (i + 1) % segs.size();
        const double left = poly_eval(segs[i], f.segment_length(i));
        const double right = poly_eval(segs[j], 0.0);
        worst = std::max(worst, std::abs(left - right));
    }
    return worst;
}

// Trig reconstruction of the zero-width base splines, summed small-to-large.
double fourier_psi(int r, double t, int K) {
    const double w = std::numbers::pi / 2.0;
    double s = 0.0;
    for (int k = K; k >= 1; k -= 2) {
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        double kp = 1.0;
        for (int e = 0; e <= r; ++e) kp *= k;
        s += sgn * std::cos(k * w * t - r * w) / kp;
    }
    return s * (4.0 / std::numbers::pi) / std::pow(w, r);
}

double triangle_wave(double t) {
    double u = std::fmod(t, 4.0);
    if (u < 0) u += 4.0;
    if (u <= 1.0) return u;
    if (u <= 3.0) return 2.0 - u;
    return u - 4.0;
}

// Length of {t in [a,b] : g(t) > y}, crossings refined by bisection.  Kept
// independent of the library's root finder.
template <typename Fn>
double measure_above_refined(Fn&& g, double a, double b, double y, int n = 8192) {
    auto cross = [&](double lo, double hi, double vlo) {
        for (int it = 0; it < 60; ++it) {
            const double m = 0.5 * (lo + hi);
            if (m <= lo || m >= hi) break;
            if ((g(m) > y) == (vlo > y))
                lo = m;
            else
                hi = m;
        }
        return 0.5 * (lo + hi);
    };
    double total = 0.0;
    double tp = a, vp = g(a);
    for (int i = 1; i <= n; ++i) {
        const double t = a + (b - a) * i / n;
        const double v = g(t);
        const bool above_p = vp > y, above = v > y;
        if (above_p && above) {
            total += t - tp;
        } else if (above_p != above) {
            const double c = cross(tp, t, vp);
            total += above_p ? c - tp : t - c;
        }
        tp = t;
        vp = v;
    }
    return total;
}

// Abscissa where a decreasing rearrangement drops to the level y.
double rearranged_measure_above(const Rearrangement& rr, double y) {
    const double L = rr.window_length();
    if (!(rr(0.0) > y)) return 0.0;
    if (rr(L) > y) return L;
    double lo = 0.0, hi = L;
    for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        if (rr(m) > y)
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

PsiParams draw_member(oracle::Rng& rng, char layout, int rmin, int rmax, double lam) {
    const int r = rmin + static_cast<int>(rng.next() %
                                          static_cast<std::uint64_t>(rmax - rmin + 1));
    double a1 = 0.0, a2 = 0.0;
    if (layout == 'b')
        a1 = rng.uniform(0.0, 3.0);
    else if (layout == 'c') {
        a1 = rng.uniform(0.0, 3.0);
        a2 = rng.uniform(0.0, 3.0);
    } else {
        a2 = rng.uniform(0.0, 3.0);
    }
    const double b = (rng.next() % 2 ? 1.0 : -1.0) * rng.uniform(0.5, 2.0);
    return {r, a1, a2, b, lam > 0.0 ? lam : rng.uniform(1.0, 4.0)};
}

AdmissibleKind kind_of(int trial) {
    switch (trial % 3) {
        case 0: return AdmissibleKind::scaled_spline;
        case 1: return AdmissibleKind::equality_spline;
        default: return AdmissibleKind::trig;
    }
}

// ---------------------------------------------------------------------------
// Criterion 1: spline construction invariants across random parameters
// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    oracle::Rng rng(101);
    Tracker mean_rel, anti_rel, cont_rel, zero_rel;
    bool ok = true;
    int zero_checks = 0;
    for (int d = 0; d < 20; ++d) {
        const int r = 1 + static_cast<int>(rng.next() % 8);
        const double a1 = rng.uniform(0.0, 10.0);
        const double a2 = rng.uniform(0.0, 10.0);
        const PiecewisePoly f = build_psi(r, a1, a2);
        const double T = a1 + a2 + 2.0;
        const double sup = sup_norm(f);

        mean_rel.note(std::abs(mean(f)) / sup);

        for (int i = 0; i < 64; ++i) {
            const double t = f.period() * i / 64.0 + 0.0137;
            anti_rel.note(std::abs(f(t + T) + f(t)) / sup);
        }

        PiecewisePoly g = f;
        for (int j = 0; j < r; ++j) {
            const double s = sup_norm(g);
            cont_rel.note(continuity_defect(g) / (s > 0 ? s : 1.0));
            if (j + 1 < r) g = differentiate(g);
        }

        if (r >= 2 || a1 == 0.0) {
            const auto [z1, z2] = psi_zeros(r, a1, a2);
            zero_rel.note(std::abs(f(z1)) / sup);
            zero_rel.note(std::abs(f(z2)) / sup);
            ++zero_checks;
        }
    }
    ok = mean_rel.worst <= kMeanRel && anti_rel.worst <= kAntisymRel &&
         cont_rel.worst <= kContinuityRel && zero_rel.worst <= kZeroRel &&
         zero_checks > 0;
    detail = "mean " + sci(mean_rel.worst) + ", antisymmetry " + sci(anti_rel.worst) +
             ", continuity " + sci(cont_rel.worst) + ", zeros " + sci(zero_rel.worst);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 2: zero-width base splines against independent reconstructions
// ---------------------------------------------------------------------------

bool criterion2(std::string& detail) {
    const double want[3] = {1.0, 0.5, 1.0 / 3.0};
    Tracker norm_err, fourier_rel, euler_rel;
    for (int r = 1; r <= 3; ++r) {
        const PiecewisePoly f = build_psi(r, 0.0, 0.0);
        const double sup = sup_norm(f);
        norm_err.note(std::abs(sup - want[r - 1]));
        norm_err.note(std::abs(psi_sup_norm(r, 0.0, 0.0) - want[r - 1]));

        // Fourier partial sums: term count chosen so the tail stays well
        // below the pointwise tolerance.
        const int K = r == 1 ? 0 : (r == 2 ? 80001 : 2001);
        const PiecewisePoly e = euler_phi(r, std::numbers::pi / 2.0);
        for (int i = 0; i < 1024; ++i) {
            const double t = 4.0 * i / 1024.0;
            const double ref = r == 1 ? triangle_wave(t) : fourier_psi(r, t, K);
            fourier_rel.note(std::abs(f(t) - ref) / sup);
            euler_rel.note(std::abs(f(t) - e(t)) / sup);
        }
    }
    const bool ok = norm_err.worst <= kNormTol && fourier_rel.worst <= kPointwiseRel &&
                    euler_rel.worst <= kPointwiseRel;
    detail = "norms " + sci(norm_err.worst) + ", trig reconstruction " +
             sci(fourier_rel.worst) + ", rescaled ideal spline " + sci(euler_rel.worst);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 3: derivative-norm homogeneity and closed forms vs grid maxima
// ---------------------------------------------------------------------------

bool criterion3(std::string& detail) {
    oracle::Rng rng(303);
    Tracker grid_rel, hom_rel;
    for (int d = 0; d < 200; ++d) {
        const int r = 1 + static_cast<int>(rng.next() % 6);
        PsiParams p{r, rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0),
                    (rng.next() % 2 ? 1.0 : -1.0) * rng.uniform(0.2, 3.0),
                    rng.uniform(0.25, 8.0)};
        const int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(r + 1));
        const double closed = Psi_derivative_norm(p, k);

        PiecewisePoly f = build_Psi(p);
        for (int j = 0; j < k; ++j) f = differentiate(f);
        const double measured =
            oracle::grid_max_abs([&](double t) { return f(t); }, 0.0, p.lam, 4096);
        grid_rel.note(std::abs(measured - closed) / closed);

        const double c = rng.uniform(0.3, 3.0);
        const double s = rng.uniform(0.3, 3.0);
        PsiParams q = p;
        q.b *= c;
        q.lam *= s;
        const double scaled = Psi_derivative_norm(q, k);
        const double predicted = c * std::pow(s, r - k) * closed;
        hom_rel.note(std::abs(scaled - predicted) / predicted);
    }
    const bool ok = grid_rel.worst <= kHomogeneityRel && hom_rel.worst <= kHomogeneityRel;
    detail = "grid max " + sci(grid_rel.worst) + ", scaling law " + sci(hom_rel.worst);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 4: norm-target solver fixtures and round trips
// ---------------------------------------------------------------------------

bool criterion4(std::string& detail) {
    Tracker fixture_err, trip_rel;
    bool ok = true;

    {
        const PsiParams p = match_case_a(2, 1.5, 1.0, 1.0);
        fixture_err.note(std::abs(p.a2 - 2.0));
        fixture_err.note(std::abs(p.lam - 8.0));
        fixture_err.note(std::abs(p.b - 1.0));
        fixture_err.note(std::abs(p.a1));
    }
    {
        const PsiParams p = match_case_b(3, 7.0 / 12.0, 0.5, 1.0);
        fixture_err.note(std::abs(p.a1 - 1.0));
        fixture_err.note(std::abs(p.lam - 6.0));
        fixture_err.note(std::abs(p.b - 1.0));
        fixture_err.note(std::abs(p.a2));
    }
    {
        const PsiParams p = match_case_c(3, 35.0 / 24.0, 1.0, 1.0, 1.0);
        fixture_err.note(std::abs(p.a1 - 1.0));
        fixture_err.note(std::abs(p.a2 - 1.0));
        fixture_err.note(std::abs(p.lam - 8.0));
        fixture_err.note(std::abs(p.b - 1.0));
    }

    oracle::Rng rng(404);
    auto trip = [&](char layout) {
        for (int d = 0; d < 100; ++d) {
            const int rmin = layout == 'a' ? 2 : 3;
            const int r = rmin + static_cast<int>(rng.next() % 4);
            PsiParams q{r,
                        layout == 'a' ? 0.0 : rng.uniform(0.02, 3.0),
                        layout == 'b' ? 0.0 : rng.uniform(0.02, 3.0),
                        rng.uniform(0.2, 4.0), rng.uniform(0.5, 10.0)};
            std::vector<int> ks;
            PsiParams got;
            if (layout == 'a') {
                ks = {0, r - 1, r};
                got = match_case_a(r, Psi_derivative_norm(q, 0),
                                   Psi_derivative_norm(q, r - 1),
                                   Psi_derivative_norm(q, r));
            } else if (layout == 'b') {
                ks = {0, r - 2, r};
                got = match_case_b(r, Psi_derivative_norm(q, 0),
                                   Psi_derivative_norm(q, r - 2),
                                   Psi_derivative_norm(q, r));
            } else {
                ks = {0, r - 2, r - 1, r};
                got = match_case_c(r, Psi_derivative_norm(q, 0),
                                   Psi_derivative_norm(q, r - 2),
                                   Psi_derivative_norm(q, r - 1),
                                   Psi_derivative_norm(q, r));
            }
            for (int k : ks) {
                const double want = Psi_derivative_norm(q, k);
                trip_rel.note(std::abs(Psi_derivative_norm(got, k) - want) / want);
            }
        }
    };
    try {
        trip('a');
        trip('b');
        trip('c');
    } catch (const std::exception& e) {
        detail = std::string("solver threw: ") + e.what();
        return false;
    }

    ok = fixture_err.worst <= kFixtureTol && trip_rel.worst <= kRoundTripRel;
    detail = "fixtures " + sci(fixture_err.worst) + ", round trips " + sci(trip_rel.worst);
    return ok;
}

// ---------------------------------------------------------------------------
// Criteria 5 and 6: slope comparison and single sign change, 1000 trials
// ---------------------------------------------------------------------------

void criteria56(bool& pass5, bool& pass6, std::string& d5, std::string& d6) {
    VerifyConfig cfg;
    cfg.tau_grid = 256;
    cfg.shifts = 16;
    cfg.branch_grid = 256;
    cfg.tol_rel = kTrialTolRel;

    oracle::Rng rng(505);
    int viol5 = 0, viol6 = 0, eq_trials = 0;
    Tracker eq_rel, slack5, slack6;
    for (int i = 0; i < 1000; ++i) {
        const char layout = "abc"[i % 3];
        const PsiParams p = draw_member(rng, layout, layout == 'a' ? 1 : 2, 5, 0.0);
        const TestFunction x = generate_admissible(p, kind_of(i / 3), rng.next());
        const MatchCase cse = detail::resolve_case(x, p, true, cfg).first;

        const CheckReport rep5 = check_comparison(x, p, cse, 0, cfg);
        if (!rep5.pass) ++viol5;
        slack5.note(-rep5.worst_slack / rep5.scale);

        const CheckReport rep6 = check_sign_changes(x, p, cfg);
        if (!rep6.pass) ++viol6;
        slack6.note(1.0 - rep6.worst_slack);

        if (i % 4 == 0) {
            // The member itself, shifted: equality within rounding.
            const double alpha = rng.uniform(0.0, p.lam);
            const TestFunction eq =
                TestFunction::from_piecewise(shifted(build_Psi(p), alpha), p.r);
            const CheckReport er = check_comparison_orders(
                eq, p, hypothesis_orders(cse, p.r, true), 0, cfg);
            eq_rel.note(std::abs(er.worst_slack) / er.scale);
            ++eq_trials;
            const CheckReport es = check_sign_changes(eq, p, cfg);
            if (!es.pass) ++viol6;
        }
    }
    pass5 = viol5 == 0 && eq_rel.worst <= kEqualityRel;
    pass6 = viol6 == 0;
    d5 = "1000 trials, " + std::to_string(viol5) + " violations, equality slack " +
         sci(eq_rel.worst) + " (" + std::to_string(eq_trials) + " members)";
    d6 = "1250 trials, " + std::to_string(viol6) +
         " violations, worst changes per branch " + sci(slack6.worst);
}

// ---------------------------------------------------------------------------
// Criterion 7: integral inequality suites, 200 trials each
// ---------------------------------------------------------------------------

bool criterion7(std::string& detail) {
    VerifyConfig cfg;
    cfg.tau_grid = 256;
    cfg.shifts = 16;
    cfg.branch_grid = 256;
    cfg.rearr_samples = 1024;
    cfg.cum_grid = 64;
    cfg.tol_rel = kTrialTolRel;

    const double pexps[3] = {1.0, 2.0, 4.0};
    const double qexps[3] = {2.0, 4.0, 8.0};
    int violations = 0, skipped = 0;
    Tracker eq_rel;
    std::string per;

    // Cumulative rearrangement domination.  The member period must fit the
    // unit window, so lam is a reciprocal integer; every fifth trial uses the
    // tiled member itself, which attains equality.
    {
        oracle::Rng rng(701);
        int viol = 0;
        Tracker eq;
        for (int i = 0; i < 200; ++i) {
            const char layout = "abc"[i % 3];
            const bool equality = i % 5 == 0;
            const double lam = 1.0 / static_cast<double>(1 + rng.next() % 4);
            const PsiParams p = draw_member(rng, layout, layout == 'a' ? 1 : 2, 4, lam);
            const TestFunction x = generate_admissible(
                p, equality ? AdmissibleKind::equality_spline : kind_of(i), rng.next());
            const CheckReport rep = check_rearrangement_ineq(x, p, 0, cfg);
            if (!rep.pass) ++viol;
            if (equality) eq.note(std::abs(rep.worst_slack) / rep.scale);
        }
        violations += viol;
        eq_rel.note(eq.worst);
        per += "rearrangement " + std::to_string(viol) + "/" + sci(eq.worst);
    }

    // Intermediate-derivative integral bound, every legal order.
    {
        oracle::Rng rng(702);
        int viol = 0;
        Tracker eq;
        for (int i = 0; i < 200; ++i) {
            const char layout = "abc"[i % 3];
            const int rmin = layout == 'a' ? 3 : 4;
            const bool equality = i % 5 == 0;
            const PsiParams p =
                draw_member(rng, layout, rmin, rmin + 2, equality ? 1.0 : 0.0);
            const int kmax = layout == 'a' ? p.r - 2 : p.r - 3;
            const int k = 1 + static_cast<int>(rng.next() %
                                               static_cast<std::uint64_t>(std::max(1, kmax)));
            const TestFunction x = generate_admissible(
                p, equality ? AdmissibleKind::equality_spline : kind_of(i), rng.next());
            const CheckReport rep = check_ligun(x, p, pexps[i % 3], k, cfg);
            if (!rep.pass) ++viol;
            if (equality) eq.note(std::abs(rep.worst_slack) / rep.scale);
        }
        violations += viol;
        eq_rel.note(eq.worst);
        per += ", intermediate " + std::to_string(viol) + "/" + sci(eq.worst);
    }

    // Uniform deviation bound at unit period.
    {
        oracle::Rng rng(703);
        int viol = 0;
        Tracker eq;
        for (int i = 0; i < 200; ++i) {
            const char layout = "abc"[i % 3];
            const PsiParams p = draw_member(rng, layout, layout == 'a' ? 1 : 2, 5, 1.0);
            const AdmissibleKind kind = kind_of(i);
            const TestFunction x = generate_admissible(p, kind, rng.next());
            const CheckReport rep = check_bohr_favard(x, p, cfg);
            if (!rep.pass) ++viol;
            if (kind == AdmissibleKind::equality_spline)
                eq.note(std::abs(rep.worst_slack) / rep.scale);
        }
        violations += viol;
        eq_rel.note(eq.worst);
        per += ", deviation " + std::to_string(viol) + "/" + sci(eq.worst);
    }

    // L_p minimality and moment growth under matched size.
    for (const bool moment : {false, true}) {
        oracle::Rng rng(moment ? 705 : 704);
        int viol = 0, skip = 0;
        Tracker eq;
        for (int i = 0; i < 200; ++i) {
            const double pe = pexps[i % 3];
            const double qe = qexps[i % 3];
            if (i % 2 == 0) {
                const char layout = "abc"[(i / 2) % 3];
                const PsiParams p = draw_member(rng, layout, 2, 5, 1.0);
                const TestFunction x =
                    generate_admissible(p, AdmissibleKind::equality_spline, rng.next());
                const CheckReport rep = moment ? check_nagy(x, p, pe, qe, cfg)
                                               : check_th5(x, p, pe, cfg);
                if (!rep.pass) ++viol;
                eq.note(std::abs(rep.worst_slack) / rep.scale);
                continue;
            }
            const int r = 2 + static_cast<int>(rng.next() % 3);
            const PsiParams helper{r, 0.0, 1.0, 1.0, 1.0};
            const TestFunction x =
                generate_admissible(helper, AdmissibleKind::trig, rng.next());
            std::optional<PsiParams> fitted;
            for (double slack : {1.25, 1.1, 1.05, 1.5, 2.5, 4.0}) {
                try {
                    fitted = moment ? fit_member_to_lp(x, r, pe, slack, 1.05)
                                    : fit_member_to_deviation(x, r, slack, 1.05);
                    break;
                } catch (const Infeasible&) {
                }
            }
            if (!fitted) {
                ++skip;
                continue;
            }
            const CheckReport rep = moment ? check_nagy(x, *fitted, pe, qe, cfg)
                                           : check_th5(x, *fitted, pe, cfg);
            if (!rep.pass) ++viol;
        }
        violations += viol;
        skipped += skip;
        eq_rel.note(eq.worst);
        per += std::string(", ") + (moment ? "moment " : "integral size ") +
               std::to_string(viol) + "/" + sci(eq.worst);
    }

    detail = per + ", skipped " + std::to_string(skipped) + ", worst equality slack " +
             sci(eq_rel.worst);
    return violations == 0 && eq_rel.worst <= kEqualityRel;
}

// ---------------------------------------------------------------------------
// Criterion 8: rearrangement equimeasurability and norm preservation
// ---------------------------------------------------------------------------

bool criterion8(std::string& detail) {
    oracle::Rng rng(808);
    Tracker meas_rel, l1_rel, l2_rel, tri_err;
    for (int d = 0; d < 50; ++d) {
        const int r = 1 + static_cast<int>(rng.next() % 5);
        const PsiParams p{r, rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0),
                          (rng.next() % 2 ? 1.0 : -1.0) * rng.uniform(0.5, 2.0),
                          rng.uniform(0.5, 4.0)};
        const int k = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(r));
        PiecewisePoly f = build_Psi(p);
        for (int j = 0; j < k; ++j) f = differentiate(f);
        const PiecewisePoly g = absolute(f);
        const Rearrangement rr = rearrangement(g, {0.0, p.lam});

        const double vmax = sup_norm(g);
        for (double q : {0.15, 0.35, 0.5, 0.65, 0.85, 0.95}) {
            const double y = q * vmax;
            const double m1 =
                measure_above_refined([&](double t) { return g(t); }, 0.0, p.lam, y);
            const double m2 = rearranged_measure_above(rr, y);
            meas_rel.note(std::abs(m1 - m2) / p.lam);
        }
        l1_rel.note(std::abs(lp_norm(g, 1.0, {0.0, p.lam}) - rr.lp_norm(1.0)) /
                    lp_norm(g, 1.0, {0.0, p.lam}));
        l2_rel.note(std::abs(lp_norm(g, 2.0, {0.0, p.lam}) - rr.lp_norm(2.0)) /
                    lp_norm(g, 2.0, {0.0, p.lam}));
    }

    // The unit-period member with a triangular derivative rearranges to 1 - u.
    const PsiParams tri{2, 0.0, 0.0, 4.0, 1.0};
    const Rearrangement rt =
        rearrangement(absolute(differentiate(build_Psi(tri))), {0.0, 1.0});
    for (int i = 0; i <= 32; ++i) {
        const double u = i / 32.0;
        tri_err.note(std::abs(rt(u) - (1.0 - u)));
    }

    const bool ok = meas_rel.worst <= kRearrangeRel && l1_rel.worst <= kRearrangeRel &&
                    l2_rel.worst <= kRearrangeRel && tri_err.worst <= kTriangleTol;
    detail = "measure " + sci(meas_rel.worst) + ", L1 " + sci(l1_rel.worst) + ", L2 " +
             sci(l2_rel.worst) + ", triangle " + sci(tri_err.worst);
    return ok;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    int fails = 0;
    auto report = [&](int idx, const char* name, bool pass, const std::string& detail) {
        std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str());
        std::fflush(stdout);
        if (!pass) ++fails;
    };

    std::string d;
    report(1, "spline construction invariants", criterion1(d), d);
    report(2, "base splines vs independent reconstructions", criterion2(d), d);
    report(3, "derivative-norm closed forms and scaling", criterion3(d), d);
    report(4, "norm-target solver fixtures and round trips", criterion4(d), d);

    bool p5 = false, p6 = false;
    std::string d5, d6;
    criteria56(p5, p6, d5, d6);
    report(5, "slope comparison trials", p5, d5);
    report(6, "single sign change trials", p6, d6);

    report(7, "integral inequality suites", criterion7(d), d);
    report(8, "rearrangement equimeasurability", criterion8(d), d);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/8 criteria pass in %.1f s\n", 8 - fails, secs);
    return fails == 0 ? 0 : 1;
}
