#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "rodov/matcher.hpp"
#include "oracles.hpp"

using namespace rodov;

namespace {

void check_params(const PsiParams& got, const PsiParams& want, double tol) {
    CHECK(got.r == want.r);
    CHECK(got.a1 == Catch::Approx(want.a1).margin(tol * (1.0 + want.a1)));
    CHECK(got.a2 == Catch::Approx(want.a2).margin(tol * (1.0 + want.a2)));
    CHECK(got.b == Catch::Approx(want.b).epsilon(tol));
    CHECK(got.lam == Catch::Approx(want.lam).epsilon(tol));
}

} // namespace

TEST_CASE("hand-derived fixtures recover the intended members") {
    check_params(match_case_a(2, 1.5, 1.0, 1.0), {2, 0.0, 2.0, 1.0, 8.0}, 1e-6);
    check_params(match_case_b(3, 7.0 / 12.0, 0.5, 1.0), {3, 1.0, 0.0, 1.0, 6.0}, 1e-6);
    check_params(match_case_b(3, 5.0 / 6.0, 0.5, 1.0), {3, 2.0, 0.0, 1.0, 8.0}, 1e-6);
    check_params(match_case_c(3, 35.0 / 24.0, 1.0, 1.0, 1.0), {3, 1.0, 1.0, 1.0, 8.0}, 1e-6);
}

TEST_CASE("degenerate targets snap to zero-width members") {
    // Exactly the zero-width member's norms: the solver must return width 0,
    // not a tiny positive width.
    const PsiParams a = match_case_a(2, 0.5, 1.0, 1.0);
    CHECK(a.a2 == 0.0);
    CHECK(a.lam == Catch::Approx(4.0).epsilon(1e-12));
    const PsiParams b = match_case_b(3, 1.0 / 3.0, 0.5, 1.0);
    CHECK(b.a1 == 0.0);
    CHECK(b.lam == Catch::Approx(4.0).epsilon(1e-12));
    const PsiParams c = match_case_c(3, 1.0 / 3.0, 0.5, 1.0, 1.0);
    CHECK(c.a1 == 0.0);
    CHECK(c.a2 == 0.0);
}

TEST_CASE("round-trips reproduce parameters and targets") {
    const Tolerances tol = default_tolerances();
    oracle::Rng rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = 2 + static_cast<int>(rng.next() % 5);
        const double a1 = rng.uniform(0.05, 3.0);
        const double a2 = rng.uniform(0.05, 3.0);
        const double b = rng.uniform(0.2, 4.0);
        const double lam = rng.uniform(0.5, 10.0);

        {
            const PsiParams want{r, 0.0, a2, b, lam};
            const PsiParams got = match_case_a(r, Psi_derivative_norm(want, 0),
                                               Psi_derivative_norm(want, r - 1),
                                               Psi_derivative_norm(want, r), tol);
            check_params(got, want, 1e-6);
            CHECK(Psi_derivative_norm(got, 0) ==
                  Catch::Approx(Psi_derivative_norm(want, 0)).epsilon(1e-8));
        }
        if (r >= 3) {
            const PsiParams want{r, a1, 0.0, b, lam};
            const PsiParams got = match_case_b(r, Psi_derivative_norm(want, 0),
                                               Psi_derivative_norm(want, r - 2),
                                               Psi_derivative_norm(want, r), tol);
            check_params(got, want, 1e-6);
            CHECK(Psi_derivative_norm(got, 0) ==
                  Catch::Approx(Psi_derivative_norm(want, 0)).epsilon(1e-8));
        }
        if (r >= 3) {
            const PsiParams want{r, a1, a2, b, lam};
            const PsiParams got = match_case_c(r, Psi_derivative_norm(want, 0),
                                               Psi_derivative_norm(want, r - 2),
                                               Psi_derivative_norm(want, r - 1),
                                               Psi_derivative_norm(want, r), tol);
            check_params(got, want, 1e-6);
            for (int k : {0, r - 2, r - 1, r})
                CHECK(Psi_derivative_norm(got, k) ==
                      Catch::Approx(Psi_derivative_norm(want, k)).epsilon(1e-8));
        }
    }
}

TEST_CASE("infeasible targets are reported, not absorbed") {
    CHECK_THROWS_AS(match_case_a(2, 0.4, 1.0, 1.0), Infeasible);
    CHECK_THROWS_AS(match_case_b(3, 0.2, 0.5, 1.0), Infeasible);
    CHECK_THROWS_AS(match_case_c(3, 0.2, 0.5, 1.0, 1.0), Infeasible);
    // Second-derivative target below the zero-width floor.
    CHECK_THROWS_AS(match_case_c(3, 1.0, 0.3, 1.0, 1.0), Infeasible);
}

TEST_CASE("unreachable targets stop after bounded bracketing") {
    CHECK_THROWS_AS(match_case_a(2, 1e30, 1.0, 1.0), NoBracket);
}

TEST_CASE("bad inputs are rejected up front") {
    CHECK_THROWS_AS(match_case_a(1, 1.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(match_case_b(2, 1.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(match_case_c(2, 1.0, 1.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(match_case_a(2, -1.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(match_case_a(2, 1.0, 0.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(match_case_b(3, 1.0, 0.5, -2.0), InvalidParams);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(match_case_c(3, inf, 1.0, 1.0, 1.0), InvalidParams);
}

TEST_CASE("a solve that lands on the bracket loop terminates quickly") {
    // A target far above one but reachable: exercises several doublings.
    const PsiParams got = match_case_a(2, 600.0, 1.0, 1.0);
    CHECK(Psi_derivative_norm(got, 0) == Catch::Approx(600.0).epsilon(1e-8));
    CHECK(got.a2 == Catch::Approx(1199.0).epsilon(1e-6));
}
