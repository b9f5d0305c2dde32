#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "spcone/cone_barrier.hpp"

namespace spcone {

using Rng = std::mt19937_64;

/// Independent RNG stream for one trial, so parallel and serial runs of the
/// suite see identical draws.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct Tolerances {
    double log_homogeneity = 1e-10;   // absolute
    double compatibility = 1e-8;      // times inequality scale
    double self_concordance = 1e-6;   // times inequality scale
    double barrier_parameter = 1e-6;  // relative to 2 + d
    double euler_grad = 1e-8;         // absolute
    double euler_hess = 1e-8;         // relative to ||grad||
    double monotonicity = 1e-10;      // times 1 + ||g'(A)||
    double fd_grad = 1e-6;
    double fd_hess = 1e-5;
    double fd_d3 = 1e-4;
};

struct TrialConfig {
    FunctionFamily family = FunctionFamily::neglog();
    int side = 2;
    int trials = 1000;
    int fd_trials = 100;  // finite-difference checks run on the first fd_trials points
    std::uint64_t seed = 20240314;
    Tolerances tol;
    bool negative_control = false;  // also run the inadmissible g(x) = x^3 control
};

struct Witness {
    int trial = -1;
    std::uint64_t seed = 0;
    Vector point;      // packed cone point (may be empty)
    Vector direction;  // packed direction (may be empty)
    double theta = std::numeric_limits<double>::quiet_NaN();
};

/// Outcome of one named check over all trials. margin >= 0 means pass;
/// worst_margin carries the witness that achieved it.
struct CheckResult {
    std::string name;
    int trials = 0;
    int passes = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    Witness witness;
    bool is_control = false;

    bool passed() const { return passes == trials; }
};

struct TrialReport {
    TrialConfig config;
    std::vector<CheckResult> checks;

    bool all_passed() const;          // non-control checks only
    bool control_detected() const;    // true if a control check found a violation
    const CheckResult* find(const std::string& name) const;
};

ConePoint sample_interior_point(const FunctionFamily& f, int side, Rng& rng);

/// Direction with v +- q >= 0 and W +- R psd, built by congruence with W^1/2.
Direction sample_compat_direction(const ConePoint& pt, Rng& rng);

/// Unconstrained standard-normal probe direction.
Direction sample_free_direction(int side, Rng& rng);

/// max over theta of |Gamma(theta u~) - Gamma(u~) + (2+d) log theta|.
double check_log_homogeneity(const FunctionFamily& f, const ConePoint& pt,
                             std::span<const double> thetas);

/// Signed margin m = -3 D2zeta - D3zeta; nonnegative for admissible g.
/// Throws InvalidDirection unless v +- q >= 0 and W +- R psd (within slack).
double check_compatibility(const FunctionFamily& f, const ConePoint& pt, const Direction& dir);

/// Signed margin 2 (D2Gamma)^{3/2} - |D3Gamma| along the line through dir.
double check_self_concordance_line(const FunctionFamily& f, const ConePoint& pt,
                                   const Direction& dir);

/// <grad, H^{-1} grad>; equals 2 + d for the log-homogeneous barrier.
double check_barrier_parameter(const FunctionFamily& f, const ConePoint& pt);

/// Worst normalized lambda_min of h(A) - h(B) over random pairs A >= B > 0 of
/// sides 2 and 3, where h acts on the spectrum. For a matrix monotone h the
/// result is nonnegative up to roundoff.
double check_matrix_monotonicity(const std::function<double(double)>& h, Rng& rng, int trials);

TrialReport run_suite(const TrialConfig& cfg);

}  // namespace spcone
