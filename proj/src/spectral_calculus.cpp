#include "spcone/spectral_calculus.hpp"

#include <algorithm>
#include <cmath>

namespace spcone {

namespace {

constexpr double kTieRel = 1e-8;
constexpr double kPdTol = 1e-12;

bool is_tie(double a, double b) {
    return std::abs(a - b) <= kTieRel * std::max({1.0, std::abs(a), std::abs(b)});
}

double kernel_eval(const FunctionFamily& f, double x, int order) {
    return order == 0 ? f.value(x) : f.deriv(x, order);
}

void require_positive_spectrum(const Vector& lambda) {
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (!(lambda[i] > 0.0)) throw DomainError("matrix is not positive definite");
    }
}

void require_pd(const EigDecomp& eig) {
    const double scale = 1.0 + eig.eigenvalues.cwiseAbs().maxCoeff();
    if (eig.eigenvalues.minCoeff() <= kPdTol * scale) {
        throw DomainError("matrix is not positive definite");
    }
}

}  // namespace

DividedDiffTables::DividedDiffTables(const FunctionFamily& f, const Vector& eigenvalues,
                                     int base_order, bool with_dd2)
    : lambda_(eigenvalues) {
    require_positive_spectrum(lambda_);
    const int d = size();
    dd1_.resize(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const double a = lambda_[i], b = lambda_[j];
            double v;
            if (is_tie(a, b)) {
                v = kernel_eval(f, 0.5 * (a + b), base_order + 1);
            } else {
                v = (kernel_eval(f, a, base_order) - kernel_eval(f, b, base_order)) / (a - b);
            }
            dd1_(i, j) = v;
            dd1_(j, i) = v;
        }
    }
    if (!with_dd2) return;
    dd2_.assign(static_cast<size_t>(d) * d * d, 0.0);
    auto at = [&](int i, int j, int k) -> double& {
        return dd2_[(static_cast<size_t>(i) * d + j) * d + k];
    };
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            for (int k = j; k < d; ++k) {
                // Eigenvalues are sorted, so (i, k) is the widest pair; divide
                // by the largest gap for stability.
                const double a = lambda_[i], b = lambda_[j], c = lambda_[k];
                double v;
                if (is_tie(a, c)) {
                    v = 0.5 * kernel_eval(f, (a + b + c) / 3.0, base_order + 2);
                } else {
                    v = (dd1_(i, j) - dd1_(j, k)) / (a - c);
                }
                at(i, j, k) = at(i, k, j) = at(j, i, k) = v;
                at(j, k, i) = at(k, i, j) = at(k, j, i) = v;
            }
        }
    }
}

double DividedDiffTables::dd2_at(int i, int j, int k) const {
    const int d = size();
    return dd2_[(static_cast<size_t>(i) * d + j) * d + k];
}

DividedDiffTables divided_diffs(const FunctionFamily& f, const Vector& eigenvalues,
                                int base_order, bool with_dd2) {
    return {f, eigenvalues, base_order, with_dd2};
}

double phi_value_eig(const FunctionFamily& f, const EigDecomp& eig) {
    require_pd(eig);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) s += f.value(eig.eigenvalues[i]);
    return s;
}

double phi_value(const FunctionFamily& f, const SymMatrix& w) {
    return phi_value_eig(f, sym_eig(w));
}

SymMatrix phi_grad_eig(const FunctionFamily& f, const EigDecomp& eig) {
    require_pd(eig);
    Vector gl(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < gl.size(); ++i) gl[i] = f.deriv(eig.eigenvalues[i], 1);
    const Matrix& u = eig.eigenvectors;
    return SymMatrix(u * gl.asDiagonal() * u.transpose());
}

SymMatrix phi_grad(const FunctionFamily& f, const SymMatrix& w) {
    return phi_grad_eig(f, sym_eig(w));
}

SymMatrix phi_hess_apply_dd(const DividedDiffTables& dd_gprime, const EigDecomp& eig,
                            const SymMatrix& x) {
    const Matrix& u = eig.eigenvectors;
    const Matrix xt = u.transpose() * x.mat() * u;
    return SymMatrix(u * dd_gprime.dd1().cwiseProduct(xt) * u.transpose());
}

SymMatrix phi_hess_apply_eig(const FunctionFamily& f, const EigDecomp& eig, const SymMatrix& x) {
    require_pd(eig);
    const DividedDiffTables dd(f, eig.eigenvalues, 1, false);
    return phi_hess_apply_dd(dd, eig, x);
}

SymMatrix phi_hess_apply(const FunctionFamily& f, const SymMatrix& w, const SymMatrix& x) {
    return phi_hess_apply_eig(f, sym_eig(w), x);
}

double phi_d3_form_dd(const DividedDiffTables& dd_gprime, const EigDecomp& eig,
                      const SymMatrix& x) {
    const int d = dd_gprime.size();
    const Matrix& u = eig.eigenvectors;
    const Matrix xt = u.transpose() * x.mat() * u;
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                s += dd_gprime.dd2_at(i, j, k) * xt(i, j) * xt(j, k) * xt(k, i);
            }
        }
    }
    return 2.0 * s;
}

double phi_d3_form_eig(const FunctionFamily& f, const EigDecomp& eig, const SymMatrix& x) {
    require_pd(eig);
    const DividedDiffTables dd(f, eig.eigenvalues, 1, true);
    return phi_d3_form_dd(dd, eig, x);
}

double phi_d3_form(const FunctionFamily& f, const SymMatrix& w, const SymMatrix& x) {
    return phi_d3_form_eig(f, sym_eig(w), x);
}

}  // namespace spcone
