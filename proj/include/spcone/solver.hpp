#pragma once

#include <string>
#include <vector>

#include "spcone/cone_barrier.hpp"

namespace spcone {

/// minimize <c, x> subject to A x = b, x in K, in the packed coordinates
/// (u, v, svec(W)). Feasible start: x0 must satisfy A x0 = b and lie in the
/// interior of K.
struct ConicProblem {
    FunctionFamily family = FunctionFamily::neglog();
    int side = 1;
    Vector c;
    Matrix a;
    Vector b;
    ConePoint x0;

    int dim() const { return 2 + packed_size(side); }
};

/// Throws SolverError on shape mismatch, rank-deficient A, infeasible or
/// non-interior x0.
void validate_problem(const ConicProblem& problem);

enum class SolveStatus { Optimal, IterationLimit, NumericalFailure };

std::string to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::NumericalFailure;
    Vector x;
    double objective = 0.0;
    double t_final = 0.0;
    int iterations = 0;  // total Newton steps
    std::vector<double> residual_history;  // ||Ax - b|| per outer iteration
    std::string message;
};

struct SolverConfig {
    double t0 = 1.0;
    double gap_tol = 1e-7;        // stop when (2+d)/t <= gap_tol
    double center_tol = 1e-6;     // Newton decrement threshold for centering
    int max_iters = 5000;         // total Newton-step budget
    int max_newton_per_stage = 200;
};

/// Equality-constrained Newton step for t <c,x> + Gamma(x): returns the
/// primal direction (with A delta = 0) and the Newton decrement.
std::pair<Vector, double> newton_step(const ConicProblem& problem, const Vector& x, double t);

/// ||Ax - b|| and the duality-gap estimate (2+d)/t.
std::pair<double, double> residuals(const ConicProblem& problem, const Vector& x, double t);

SolveResult solve(const ConicProblem& problem, const SolverConfig& config = {});

}  // namespace spcone
