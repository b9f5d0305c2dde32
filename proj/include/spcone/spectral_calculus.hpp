#pragma once

#include <vector>

#include "spcone/function_family.hpp"
#include "spcone/sym_matrix.hpp"

namespace spcone {

/// Divided-difference tables of the base_order-th derivative of g on a fixed
/// spectrum (base_order 0 means g itself). Near-coincident eigenvalues fall
/// back to the analytic derivative limit at the midpoint.
class DividedDiffTables {
public:
    DividedDiffTables(const FunctionFamily& f, const Vector& eigenvalues, int base_order,
                      bool with_dd2);

    int size() const { return static_cast<int>(lambda_.size()); }
    const Matrix& dd1() const { return dd1_; }
    double dd1_at(int i, int j) const { return dd1_(i, j); }
    double dd2_at(int i, int j, int k) const;
    bool has_dd2() const { return !dd2_.empty(); }

private:
    Vector lambda_;
    Matrix dd1_;
    std::vector<double> dd2_;  // d^3 row-major, empty unless requested
};

/// First (dd1) and second (dd2) divided differences of g on the spectrum.
DividedDiffTables divided_diffs(const FunctionFamily& f, const Vector& eigenvalues,
                                int base_order = 0, bool with_dd2 = true);

// Derivatives of phi(W) = tr g(W) via the spectral decomposition. The _eig
// variants let callers amortize one factorization across evaluations; the
// eigenvalues must be strictly positive.

double phi_value(const FunctionFamily& f, const SymMatrix& w);
double phi_value_eig(const FunctionFamily& f, const EigDecomp& eig);

SymMatrix phi_grad(const FunctionFamily& f, const SymMatrix& w);
SymMatrix phi_grad_eig(const FunctionFamily& f, const EigDecomp& eig);

/// Hessian action D^2 phi(W)[X, .] via first divided differences of g'.
SymMatrix phi_hess_apply(const FunctionFamily& f, const SymMatrix& w, const SymMatrix& x);
SymMatrix phi_hess_apply_eig(const FunctionFamily& f, const EigDecomp& eig, const SymMatrix& x);
SymMatrix phi_hess_apply_dd(const DividedDiffTables& dd_gprime, const EigDecomp& eig,
                            const SymMatrix& x);

/// Cubic form D^3 phi(W)[X,X,X] via second divided differences of g'.
double phi_d3_form(const FunctionFamily& f, const SymMatrix& w, const SymMatrix& x);
double phi_d3_form_eig(const FunctionFamily& f, const EigDecomp& eig, const SymMatrix& x);
double phi_d3_form_dd(const DividedDiffTables& dd_gprime, const EigDecomp& eig,
                      const SymMatrix& x);

}  // namespace spcone
