#include "spcone/sym_matrix.hpp"

#include <cmath>

namespace spcone {

SymMatrix::SymMatrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("SymMatrix requires a square matrix");
    m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::raw(Matrix m) {
    SymMatrix out;
    out.m_ = std::move(m);
    return out;
}

SymMatrix SymMatrix::identity(int d) { return raw(Matrix::Identity(d, d)); }
SymMatrix SymMatrix::zero(int d) { return raw(Matrix::Zero(d, d)); }

int packed_size(int side) { return side * (side + 1) / 2; }

int side_from_packed(int size) {
    const int d = static_cast<int>(std::floor((std::sqrt(8.0 * size + 1.0) - 1.0) / 2.0 + 0.5));
    if (packed_size(d) != size) throw DomainError("packed length is not triangular: " + std::to_string(size));
    return d;
}

SymMatrix SymMatrix::from_packed(const Vector& packed) {
    const int d = side_from_packed(static_cast<int>(packed.size()));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix m(d, d);
    int k = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j, ++k) {
            const double x = (i == j) ? packed[k] : packed[k] * inv_sqrt2;
            m(i, j) = x;
            m(j, i) = x;
        }
    }
    return raw(std::move(m));
}

Vector SymMatrix::packed() const {
    const int d = side();
    const double sqrt2 = std::sqrt(2.0);
    Vector out(packed_size(d));
    int k = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j, ++k) {
            out[k] = (i == j) ? m_(i, j) : sqrt2 * m_(i, j);
        }
    }
    return out;
}

double trace_dot(const SymMatrix& x, const SymMatrix& y) {
    return x.mat().cwiseProduct(y.mat()).sum();
}

EigDecomp sym_eig(const SymMatrix& w) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(w.mat());
    if (es.info() != Eigen::Success) throw DomainError("symmetric eigensolver failed to converge");
    const int d = w.side();
    // Eigen returns ascending order; flip to descending.
    EigDecomp out;
    out.eigenvalues = es.eigenvalues().reverse();
    out.eigenvectors = es.eigenvectors().rowwise().reverse();
    (void)d;
    return out;
}

double min_eigenvalue(const SymMatrix& w) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(w.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw DomainError("symmetric eigensolver failed to converge");
    return es.eigenvalues().minCoeff();
}

bool is_positive_definite(const SymMatrix& w, double tol) {
    if (w.side() == 0) return false;
    return min_eigenvalue(w) > tol * (1.0 + w.norm());
}

}  // namespace spcone
