#pragma once

#include <Eigen/Dense>

#include "spcone/errors.hpp"

namespace spcone {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense symmetric matrix. The stored entries are exactly symmetric: every
/// constructor applies (M + M^T)/2.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(const Matrix& m);

    static SymMatrix identity(int d);
    static SymMatrix zero(int d);

    /// Packed vector: row-major upper triangle, off-diagonal entries scaled
    /// by sqrt(2), so that packed dot products equal trace inner products.
    static SymMatrix from_packed(const Vector& packed);
    Vector packed() const;

    int side() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

    double trace() const { return m_.trace(); }
    double norm() const { return m_.norm(); }

    SymMatrix operator+(const SymMatrix& o) const { return raw(m_ + o.m_); }
    SymMatrix operator-(const SymMatrix& o) const { return raw(m_ - o.m_); }
    SymMatrix operator*(double s) const { return raw(s * m_); }
    SymMatrix operator/(double s) const { return raw(m_ / s); }
    SymMatrix operator-() const { return raw(-m_); }

private:
    static SymMatrix raw(Matrix m);  // trusts symmetry of the argument
    Matrix m_;
};

inline SymMatrix operator*(double s, const SymMatrix& m) { return m * s; }

/// tr(XY) for symmetric X, Y.
double trace_dot(const SymMatrix& x, const SymMatrix& y);

int packed_size(int side);        // d(d+1)/2
int side_from_packed(int size);   // inverse; throws DomainError if not triangular

struct EigDecomp {
    Vector eigenvalues;   // sorted descending
    Matrix eigenvectors;  // orthonormal columns, matching order
};

/// Spectral factorization W = U diag(lambda) U^T.
EigDecomp sym_eig(const SymMatrix& w);

double min_eigenvalue(const SymMatrix& w);

/// lambda_min(W) > tol * (1 + ||W||_F)
bool is_positive_definite(const SymMatrix& w, double tol = 1e-12);

}  // namespace spcone
