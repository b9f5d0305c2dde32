#pragma once

#include "spcone/function_family.hpp"
#include "spcone/spectral_calculus.hpp"
#include "spcone/sym_matrix.hpp"

namespace spcone {

/// Point u~ = (u, v, W) of the cone K = cl{ zeta >= 0, v > 0, W > 0 } with
/// zeta(u~) = u - v phi(W/v).
struct ConePoint {
    double u = 0.0;
    double v = 0.0;
    SymMatrix w;

    int side() const { return w.side(); }
    int packed_dim() const { return 2 + packed_size(side()); }
    Vector packed() const;
    static ConePoint from_packed(const Vector& x);

    ConePoint scaled(double theta) const { return {theta * u, theta * v, theta * w}; }
};

/// Probe direction p~ = (p, q, R).
struct Direction {
    double p = 0.0;
    double q = 0.0;
    SymMatrix r;

    Vector packed() const;
    static Direction from_packed(const Vector& x);
    Direction scaled(double c) const { return {c * p, c * q, c * r}; }
};

double zeta(const FunctionFamily& f, const ConePoint& pt);

/// Total membership test: v, lambda_min(W) and zeta each positive beyond
/// tol times an affine-invariant scale.
bool in_interior(const FunctionFamily& f, const ConePoint& pt, double tol = 1e-12);

/// xi = (R - q W/v) / v, the derivative of (v, W) -> W/v in direction (q, R).
SymMatrix xi_of(const ConePoint& pt, const Direction& dir);

/// Per-point evaluation context for the barrier
///   Gamma(u~) = -log(zeta) - log(v) - logdet(W).
/// Eigendecomposes W/v once and shares it across all oracles. Immutable after
/// construction.
class BarrierContext {
public:
    BarrierContext(const FunctionFamily& f, const ConePoint& pt);  // throws NotInterior

    const ConePoint& point() const { return pt_; }
    const FunctionFamily& family() const { return f_; }
    int side() const { return pt_.side(); }
    int dim() const { return pt_.packed_dim(); }
    /// Barrier parameter 2 + d.
    double nu() const { return 2.0 + side(); }

    double zeta() const { return zeta_; }
    double value() const;
    Vector gradient() const;
    Vector hess_apply(const Direction& dir) const;
    Vector hess_apply(const Vector& packed_dir) const;
    Matrix hess_dense() const;

    /// Line derivatives of t -> Gamma(u~ + t p~) at t = 0.
    double d1_line(const Direction& dir) const;
    double d2_line(const Direction& dir) const;
    double d3_line(const Direction& dir) const;

    double zeta_d1(const Direction& dir) const;
    double zeta_d2(const Direction& dir) const;
    double zeta_d3(const Direction& dir) const;

private:
    FunctionFamily f_;
    ConePoint pt_;
    EigDecomp eig_;       // of W/v
    DividedDiffTables dd_gprime_;
    double phi0_;         // phi(W/v)
    SymMatrix grad_phi_;  // grad phi(W/v)
    double grad_phi_dot_wt_;
    SymMatrix w_inv_;
    SymMatrix w_inv_sqrt_;
    double zeta_;
};

// Convenience single-shot wrappers.
double barrier_value(const FunctionFamily& f, const ConePoint& pt);
Vector barrier_grad(const FunctionFamily& f, const ConePoint& pt);
Vector barrier_hess_apply(const FunctionFamily& f, const ConePoint& pt, const Direction& dir);
Matrix barrier_hess_dense(const FunctionFamily& f, const ConePoint& pt);
double zeta_d2(const FunctionFamily& f, const ConePoint& pt, const Direction& dir);
double zeta_d3(const FunctionFamily& f, const ConePoint& pt, const Direction& dir);
double barrier_d3_dir(const FunctionFamily& f, const ConePoint& pt, const Direction& dir);

}  // namespace spcone
