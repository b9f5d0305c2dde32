#include "spcone/solver.hpp"

#include <cmath>
#include <limits>

namespace spcone {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::IterationLimit: return "iteration_limit";
        case SolveStatus::NumericalFailure: return "numerical_failure";
    }
    return "?";
}

void validate_problem(const ConicProblem& problem) {
    const int n = problem.dim();
    const auto m = problem.a.rows();
    if (problem.side < 1) throw SolverError("side must be >= 1");
    if (problem.c.size() != n) throw SolverError("objective length does not match cone dimension");
    if (problem.a.cols() != n) throw SolverError("constraint matrix width does not match cone dimension");
    if (problem.b.size() != m) throw SolverError("right-hand side length does not match row count");
    if (m < 1 || m >= n) throw SolverError("constraint count must be in [1, dim)");
    Eigen::ColPivHouseholderQR<Matrix> qr(problem.a.transpose());
    if (qr.rank() < m) throw SolverError("constraint matrix is rank deficient");
    if (problem.x0.side() != problem.side) throw SolverError("x0 side mismatch");
    const Vector x0 = problem.x0.packed();
    if ((problem.a * x0 - problem.b).norm() > 1e-8 * (1.0 + problem.b.norm())) {
        throw SolverError("x0 does not satisfy Ax = b");
    }
    if (!in_interior(problem.family, problem.x0)) throw SolverError("x0 is not interior");
}

std::pair<Vector, double> newton_step(const ConicProblem& problem, const Vector& x, double t) {
    const int n = problem.dim();
    const auto m = problem.a.rows();
    BarrierContext ctx(problem.family, ConePoint::from_packed(x));
    const Matrix h_raw = ctx.hess_dense();
    const Matrix h = 0.5 * (h_raw + h_raw.transpose());
    const Vector g = t * problem.c + ctx.gradient();

    Matrix kkt = Matrix::Zero(n + m, n + m);
    kkt.topLeftCorner(n, n) = h;
    kkt.topRightCorner(n, m) = problem.a.transpose();
    kkt.bottomLeftCorner(m, n) = problem.a;
    Vector rhs = Vector::Zero(n + m);
    rhs.head(n) = -g;

    Eigen::PartialPivLU<Matrix> lu(kkt);
    Vector z = lu.solve(rhs);
    // one step of iterative refinement
    z += lu.solve(rhs - kkt * z);
    if (!z.allFinite()) throw SolverError("KKT factorization produced non-finite step");

    const Vector delta = z.head(n);
    const double dec2 = delta.dot(h * delta);
    return {delta, std::sqrt(std::max(dec2, 0.0))};
}

std::pair<double, double> residuals(const ConicProblem& problem, const Vector& x, double t) {
    const double nu = 2.0 + problem.side;
    return {(problem.a * x - problem.b).norm(), nu / t};
}

SolveResult solve(const ConicProblem& problem, const SolverConfig& config) {
    validate_problem(problem);
    const double nu = 2.0 + problem.side;

    SolveResult res;
    res.x = problem.x0.packed();
    double t = config.t0;
    int newton_total = 0;

    while (true) {
        // center at the current t
        int stage_steps = 0;
        double prev_decrement = std::numeric_limits<double>::infinity();
        while (true) {
            std::pair<Vector, double> step;
            try {
                step = newton_step(problem, res.x, t);
            } catch (const std::exception& e) {
                res.status = SolveStatus::NumericalFailure;
                res.message = e.what();
                res.objective = problem.c.dot(res.x);
                res.t_final = t;
                res.iterations = newton_total;
                return res;
            }
            const auto& [delta, decrement] = step;
            if (decrement <= config.center_tol) break;
            // near the boundary the decrement bottoms out above center_tol on
            // roundoff; once inside the quadratic-convergence region that
            // floor is good enough for the path to proceed
            if (decrement <= 0.25 && decrement >= 0.5 * prev_decrement) break;
            prev_decrement = decrement;
            if (newton_total >= config.max_iters || stage_steps >= config.max_newton_per_stage) {
                res.status = SolveStatus::IterationLimit;
                res.message = "Newton-step budget exhausted";
                res.objective = problem.c.dot(res.x);
                res.t_final = t;
                res.iterations = newton_total;
                return res;
            }
            double alpha = decrement > 0.25 ? 1.0 / (1.0 + decrement) : 1.0;
            Vector xn = res.x + alpha * delta;
            int backtracks = 0;
            while (!in_interior(problem.family, ConePoint::from_packed(xn)) && backtracks < 40) {
                alpha *= 0.5;
                xn = res.x + alpha * delta;
                ++backtracks;
            }
            if (backtracks == 40) {
                res.status = SolveStatus::NumericalFailure;
                res.message = "line search failed to stay interior";
                res.objective = problem.c.dot(res.x);
                res.t_final = t;
                res.iterations = newton_total;
                return res;
            }
            res.x = xn;
            ++newton_total;
            ++stage_steps;
        }

        res.residual_history.push_back((problem.a * res.x - problem.b).norm());
        if (nu / t <= config.gap_tol) break;
        t *= 1.0 + 0.2 / std::sqrt(nu);
    }

    res.status = SolveStatus::Optimal;
    res.objective = problem.c.dot(res.x);
    res.t_final = t;
    res.iterations = newton_total;
    return res;
}

}  // namespace spcone
