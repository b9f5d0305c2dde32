#include <doctest.h>

#include <cmath>

#include "spcone/solver.hpp"
#include "spcone/verifier.hpp"

using namespace spcone;

namespace {

// minimize u with v and W pinned by equality constraints; the optimum is the
// boundary point u = v phi(W/v).
ConicProblem pinning_problem(const FunctionFamily& f, const ConePoint& x0) {
    ConicProblem prob;
    prob.family = f;
    prob.side = x0.side();
    const int n = prob.dim();
    prob.c = Vector::Zero(n);
    prob.c[0] = 1.0;
    prob.a = Matrix::Zero(n - 1, n);
    prob.a.rightCols(n - 1) = Matrix::Identity(n - 1, n - 1);
    prob.b = x0.packed().tail(n - 1);
    prob.x0 = x0;
    return prob;
}

ConicProblem entropy_problem() {
    ConicProblem prob;
    prob.family = FunctionFamily::negentropy();
    prob.side = 2;
    const int n = prob.dim();  // 5
    prob.c = Vector::Zero(n);
    prob.c[0] = 1.0;
    prob.a = Matrix::Zero(2, n);
    prob.a(0, 1) = 1.0;                      // v = 1
    prob.a(1, 2) = prob.a(1, 4) = 1.0;       // tr W = 1
    prob.b = Vector::Zero(2);
    prob.b << 1.0, 1.0;
    Matrix w0(2, 2);
    w0 << 0.3, 0.0, 0.0, 0.7;
    const SymMatrix w(w0);
    prob.x0 = {phi_value(prob.family, w) + 1.0, 1.0, w};
    return prob;
}

}  // namespace

TEST_CASE("validate_problem rejects malformed inputs") {
    Matrix w0(2, 2);
    w0 << 2.0, 0.0, 0.0, 0.5;
    const ConePoint x0{1.0, 1.0, SymMatrix(w0)};
    const ConicProblem good = pinning_problem(FunctionFamily::neglog(), x0);
    CHECK_NOTHROW(validate_problem(good));

    ConicProblem bad = good;
    bad.c = Vector::Zero(3);
    CHECK_THROWS_AS(validate_problem(bad), SolverError);

    bad = good;
    bad.a.row(1) = bad.a.row(0);  // rank deficient
    CHECK_THROWS_AS(validate_problem(bad), SolverError);

    bad = good;
    bad.b[0] += 0.5;  // x0 infeasible
    CHECK_THROWS_AS(validate_problem(bad), SolverError);

    bad = good;
    bad.x0.u = 0.0 - 1.0;  // below the epigraph: phi(W0) = 0
    CHECK_THROWS_AS(validate_problem(bad), SolverError);

    bad = good;
    bad.a = Matrix::Zero(good.dim(), good.dim());  // too many rows
    bad.b = Vector::Zero(good.dim());
    CHECK_THROWS_AS(validate_problem(bad), SolverError);
}

TEST_CASE("newton step stays in the constraint null space") {
    const ConicProblem prob = entropy_problem();
    const auto [delta, decrement] = newton_step(prob, prob.x0.packed(), 1.0);
    CHECK((prob.a * delta).norm() <= 1e-10 * (1.0 + delta.norm()));
    CHECK(decrement > 0.0);
}

TEST_CASE("newton decrement vanishes at the analytic center") {
    // with v, W pinned the center at parameter t is u = phi(W0) + 1/t
    Matrix w0(2, 2);
    w0 << 2.0, 0.3, 0.3, 0.5;
    const SymMatrix w(w0);
    const auto f = FunctionFamily::negentropy();
    const double phi0 = phi_value(f, w);
    for (double t : {1.0, 10.0, 1000.0}) {
        ConicProblem prob = pinning_problem(f, ConePoint{phi0 + 1.0, 1.0, w});
        Vector x = prob.x0.packed();
        x[0] = phi0 + 1.0 / t;
        const auto [delta, decrement] = newton_step(prob, x, t);
        CHECK(decrement <= 1e-8);
    }
}

TEST_CASE("newton step is invariant to row rescaling of the constraints") {
    const ConicProblem prob = entropy_problem();
    ConicProblem scaled = prob;
    scaled.a.row(0) *= 100.0;
    scaled.b[0] *= 100.0;
    const Vector x = prob.x0.packed();
    const auto [d1, dec1] = newton_step(prob, x, 3.0);
    const auto [d2, dec2] = newton_step(scaled, x, 3.0);
    CHECK((d1 - d2).norm() <= 1e-9 * (1.0 + d1.norm()));
    CHECK(dec1 == doctest::Approx(dec2).epsilon(1e-9));
}

TEST_CASE("gap estimate is nu over t") {
    const ConicProblem prob = entropy_problem();
    const Vector x = prob.x0.packed();
    const auto [r1, gap1] = residuals(prob, x, 2.0);
    const auto [r2, gap2] = residuals(prob, x, 4.0);
    CHECK(gap1 == doctest::Approx(4.0 / 2.0));
    CHECK(gap2 == doctest::Approx(gap1 / 2.0));
    CHECK(r1 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("solver reaches the entropy optimum") {
    const ConicProblem prob = entropy_problem();
    SolverConfig cfg;
    cfg.gap_tol = 1e-8;
    const SolveResult res = solve(prob, cfg);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.objective == doctest::Approx(-std::log(2.0)).epsilon(1e-6));
    const ConePoint sol = ConePoint::from_packed(res.x);
    CHECK((sol.w.mat() - 0.5 * Matrix::Identity(2, 2)).norm() <= 1e-5);
    CHECK(sol.v == doctest::Approx(1.0).epsilon(1e-9));
    // feasibility held at every outer iteration
    for (double r : res.residual_history) CHECK(r <= 1e-8);
}

TEST_CASE("solver pins the epigraph variable to phi(W0)") {
    Matrix w0(2, 2);
    w0 << 2.0, 0.0, 0.0, 0.5;
    const SymMatrix w(w0);
    const auto f = FunctionFamily::neglog();
    // phi(diag(2, 1/2)) = -log 2 - log 1/2 = 0
    const ConicProblem prob = pinning_problem(f, ConePoint{1.0, 1.0, w});
    SolverConfig cfg;
    cfg.gap_tol = 1e-8;
    const SolveResult res = solve(prob, cfg);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.objective == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(res.t_final >= (2.0 + 2.0) / cfg.gap_tol);
}

TEST_CASE("random pinning problems across families") {
    const FunctionFamily families[] = {FunctionFamily::neglog(), FunctionFamily::negentropy(),
                                       FunctionFamily::power(1.5), FunctionFamily::power(0.5)};
    for (const auto& f : families) {
        for (int trial = 0; trial < 3; ++trial) {
            Rng rng = trial_rng(77, trial);
            const ConePoint pt = sample_interior_point(f, 3, rng);
            const double target = pt.v * phi_value(f, pt.w / pt.v);
            const ConicProblem prob = pinning_problem(f, pt);
            SolverConfig cfg;
            cfg.gap_tol = 1e-8;
            const SolveResult res = solve(prob, cfg);
            REQUIRE(res.status == SolveStatus::Optimal);
            CHECK(std::abs(res.objective - target) <= 1e-6 * (1.0 + std::abs(target)));
        }
    }
}

TEST_CASE("iteration budget is reported honestly") {
    const ConicProblem prob = entropy_problem();
    SolverConfig cfg;
    cfg.max_iters = 0;
    const SolveResult res = solve(prob, cfg);
    CHECK(res.status == SolveStatus::IterationLimit);
    CHECK(res.iterations == 0);
    CHECK(!res.message.empty());
}
