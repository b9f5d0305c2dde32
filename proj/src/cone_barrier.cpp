#include "spcone/cone_barrier.hpp"

#include <cmath>

namespace spcone {

namespace {
constexpr double kInteriorTol = 1e-12;
}

Vector ConePoint::packed() const {
    Vector out(packed_dim());
    out[0] = u;
    out[1] = v;
    out.tail(out.size() - 2) = w.packed();
    return out;
}

ConePoint ConePoint::from_packed(const Vector& x) {
    if (x.size() < 3) throw DomainError("packed cone point needs at least 3 entries");
    return {x[0], x[1], SymMatrix::from_packed(x.tail(x.size() - 2))};
}

Vector Direction::packed() const {
    Vector out(2 + packed_size(r.side()));
    out[0] = p;
    out[1] = q;
    out.tail(out.size() - 2) = r.packed();
    return out;
}

Direction Direction::from_packed(const Vector& x) {
    if (x.size() < 3) throw DomainError("packed direction needs at least 3 entries");
    return {x[0], x[1], SymMatrix::from_packed(x.tail(x.size() - 2))};
}

double zeta(const FunctionFamily& f, const ConePoint& pt) {
    if (!(pt.v > 0.0)) throw DomainError("zeta requires v > 0");
    const SymMatrix wt = pt.w / pt.v;
    return pt.u - pt.v * phi_value(f, wt);
}

bool in_interior(const FunctionFamily& f, const ConePoint& pt, double tol) {
    if (pt.side() < 1) return false;
    if (!(pt.v > tol * (1.0 + std::abs(pt.v)))) return false;
    const EigDecomp eig = sym_eig(pt.w);
    if (!(eig.eigenvalues.minCoeff() > tol * (1.0 + pt.w.norm()))) return false;
    double phi0 = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        phi0 += f.value(eig.eigenvalues[i] / pt.v);
    }
    const double z = pt.u - pt.v * phi0;
    const double scale = 1.0 + std::abs(pt.u) + std::abs(pt.v * phi0);
    return z > tol * scale;
}

SymMatrix xi_of(const ConePoint& pt, const Direction& dir) {
    if (!(pt.v > 0.0)) throw DomainError("xi requires v > 0");
    return (dir.r - (dir.q / pt.v) * pt.w) / pt.v;
}

BarrierContext::BarrierContext(const FunctionFamily& f, const ConePoint& pt)
    : f_(f),
      pt_(pt),
      eig_([&] {
          if (!(pt.v > kInteriorTol * (1.0 + std::abs(pt.v)))) {
              throw NotInterior("v is not strictly positive");
          }
          return sym_eig(pt.w / pt.v);
      }()),
      dd_gprime_([&] {
          const double scale = 1.0 + pt.w.norm() / pt.v;
          if (!(eig_.eigenvalues.minCoeff() > kInteriorTol * scale)) {
              throw NotInterior("W is not positive definite");
          }
          return DividedDiffTables(f_, eig_.eigenvalues, 1, true);
      }()) {
    phi0_ = phi_value_eig(f_, eig_);
    grad_phi_ = phi_grad_eig(f_, eig_);
    const SymMatrix wt = pt_.w / pt_.v;
    grad_phi_dot_wt_ = trace_dot(grad_phi_, wt);
    const Matrix& u = eig_.eigenvectors;
    const Vector lam_w = pt_.v * eig_.eigenvalues;  // spectrum of W itself
    w_inv_ = SymMatrix(u * lam_w.cwiseInverse().asDiagonal() * u.transpose());
    w_inv_sqrt_ = SymMatrix(u * lam_w.cwiseSqrt().cwiseInverse().asDiagonal() * u.transpose());
    zeta_ = pt_.u - pt_.v * phi0_;
    const double scale_z = 1.0 + std::abs(pt_.u) + std::abs(pt_.v * phi0_);
    if (!(zeta_ > kInteriorTol * scale_z)) throw NotInterior("zeta is not strictly positive");
}

double BarrierContext::value() const {
    double logdet_w = static_cast<double>(side()) * std::log(pt_.v);
    for (Eigen::Index i = 0; i < eig_.eigenvalues.size(); ++i) {
        logdet_w += std::log(eig_.eigenvalues[i]);
    }
    return -std::log(zeta_) - std::log(pt_.v) - logdet_w;
}

Vector BarrierContext::gradient() const {
    Vector out(dim());
    out[0] = -1.0 / zeta_;
    out[1] = (phi0_ - grad_phi_dot_wt_) / zeta_ - 1.0 / pt_.v;
    const SymMatrix gw = grad_phi_ / zeta_ - w_inv_;
    out.tail(out.size() - 2) = gw.packed();
    return out;
}

double BarrierContext::zeta_d1(const Direction& dir) const {
    const SymMatrix xi = xi_of(pt_, dir);
    return dir.p - dir.q * phi0_ - pt_.v * trace_dot(grad_phi_, xi);
}

double BarrierContext::zeta_d2(const Direction& dir) const {
    const SymMatrix xi = xi_of(pt_, dir);
    const SymMatrix hxi = phi_hess_apply_dd(dd_gprime_, eig_, xi);
    return -pt_.v * trace_dot(xi, hxi);
}

double BarrierContext::zeta_d3(const Direction& dir) const {
    const SymMatrix xi = xi_of(pt_, dir);
    const SymMatrix hxi = phi_hess_apply_dd(dd_gprime_, eig_, xi);
    const double quad = trace_dot(xi, hxi);
    const double cubic = phi_d3_form_dd(dd_gprime_, eig_, xi);
    return -pt_.v * cubic + 3.0 * dir.q * quad;
}

Vector BarrierContext::hess_apply(const Direction& dir) const {
    const SymMatrix xi = xi_of(pt_, dir);
    const SymMatrix hxi = phi_hess_apply_dd(dd_gprime_, eig_, xi);
    const double z1 = zeta_d1(dir);
    const SymMatrix wt = pt_.w / pt_.v;

    Vector out(dim());
    out[0] = z1 / (zeta_ * zeta_);
    out[1] = -trace_dot(hxi, wt) / zeta_ - (phi0_ - grad_phi_dot_wt_) * z1 / (zeta_ * zeta_) +
             dir.q / (pt_.v * pt_.v);
    const SymMatrix hw = hxi / zeta_ - grad_phi_ * (z1 / (zeta_ * zeta_)) +
                         SymMatrix(w_inv_.mat() * dir.r.mat() * w_inv_.mat());
    out.tail(out.size() - 2) = hw.packed();
    return out;
}

Vector BarrierContext::hess_apply(const Vector& packed_dir) const {
    return hess_apply(Direction::from_packed(packed_dir));
}

Matrix BarrierContext::hess_dense() const {
    const int n = dim();
    Matrix h(n, n);
    Vector e = Vector::Zero(n);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        h.col(j) = hess_apply(e);
        e[j] = 0.0;
    }
    return h;
}

double BarrierContext::d1_line(const Direction& dir) const {
    return -zeta_d1(dir) / zeta_ - dir.q / pt_.v - trace_dot(w_inv_, dir.r);
}

double BarrierContext::d2_line(const Direction& dir) const {
    const double z1 = zeta_d1(dir);
    const double z2 = zeta_d2(dir);
    const Matrix s = w_inv_sqrt_.mat() * dir.r.mat() * w_inv_sqrt_.mat();
    const double qv = dir.q / pt_.v;
    return -z2 / zeta_ + z1 * z1 / (zeta_ * zeta_) + qv * qv + s.squaredNorm();
}

double BarrierContext::d3_line(const Direction& dir) const {
    const double z1 = zeta_d1(dir);
    const double z2 = zeta_d2(dir);
    const double z3 = zeta_d3(dir);
    const Matrix s = w_inv_sqrt_.mat() * dir.r.mat() * w_inv_sqrt_.mat();
    const double qv = dir.q / pt_.v;
    const double z = zeta_;
    return -z3 / z + 3.0 * z1 * z2 / (z * z) - 2.0 * z1 * z1 * z1 / (z * z * z) -
           2.0 * qv * qv * qv - 2.0 * (s * s * s).trace();
}

double barrier_value(const FunctionFamily& f, const ConePoint& pt) {
    return BarrierContext(f, pt).value();
}

Vector barrier_grad(const FunctionFamily& f, const ConePoint& pt) {
    return BarrierContext(f, pt).gradient();
}

Vector barrier_hess_apply(const FunctionFamily& f, const ConePoint& pt, const Direction& dir) {
    return BarrierContext(f, pt).hess_apply(dir);
}

Matrix barrier_hess_dense(const FunctionFamily& f, const ConePoint& pt) {
    return BarrierContext(f, pt).hess_dense();
}

double zeta_d2(const FunctionFamily& f, const ConePoint& pt, const Direction& dir) {
    return BarrierContext(f, pt).zeta_d2(dir);
}

double zeta_d3(const FunctionFamily& f, const ConePoint& pt, const Direction& dir) {
    return BarrierContext(f, pt).zeta_d3(dir);
}

double barrier_d3_dir(const FunctionFamily& f, const ConePoint& pt, const Direction& dir) {
    return BarrierContext(f, pt).d3_line(dir);
}

}  // namespace spcone
