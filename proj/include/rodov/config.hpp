#pragma once

namespace rodov {

// Numeric tolerances shared across the library.  Every tolerance that the
// algorithms apply is derived from these relative knobs and the natural scale
// of the object at hand (sup norm, period, interval length).
struct Tolerances {
    double root_rel = 1e-12;  // root residual: root_rel * (1 + sup_norm)
    double mean_rel = 1e-12;  // zero-mean gate: mean_rel * period * sup_norm
    double quad_rel = 1e-10;  // adaptive quadrature relative target
    double match_rel = 1e-9;  // norm-matching reproduction target
    int degree_cap = 64;      // refuse polynomial work beyond this degree
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace rodov
