#include "spcone/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "spcone/finite_diff.hpp"

namespace spcone {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SymMatrix random_sym(int d, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = nd(rng);
    }
    return SymMatrix(m);
}

Matrix random_dense(int d, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = nd(rng);
    }
    return m;
}

double log_uniform(double lo, double hi, Rng& rng) {
    std::uniform_real_distribution<double> ud(std::log(lo), std::log(hi));
    return std::exp(ud(rng));
}

SymMatrix spectral_apply(const std::function<double(double)>& h, const SymMatrix& a) {
    const EigDecomp e = sym_eig(a);
    Vector hl(e.eigenvalues.size());
    for (Eigen::Index i = 0; i < hl.size(); ++i) hl[i] = h(e.eigenvalues[i]);
    return SymMatrix(e.eigenvectors * hl.asDiagonal() * e.eigenvectors.transpose());
}

/// Normalized lambda_min of h(A) - h(B) for one random pair A >= B > 0.
double monotonicity_pair_margin(const std::function<double(double)>& h, int side, Rng& rng) {
    const Matrix l = random_dense(side, rng);
    const SymMatrix b(l.transpose() * l + 1e-2 * Matrix::Identity(side, side));
    const Matrix c = random_dense(side, rng);
    const SymMatrix a(b.mat() + c.transpose() * c);
    const SymMatrix ha = spectral_apply(h, a);
    const SymMatrix hb = spectral_apply(h, b);
    return min_eigenvalue(ha - hb) / (1.0 + ha.norm());
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(trial * 0x2545f4914f6cdd1dULL + 1)));
}

ConePoint sample_interior_point(const FunctionFamily& f, int side, Rng& rng) {
    // the 0.1 ridge keeps cond(W) moderate; with a much smaller ridge the
    // eigensolver noise on lambda_min, amplified by g'(lambda)/zeta, exceeds
    // the absolute tolerances the checks are held to
    const Matrix m = random_dense(side, rng);
    const SymMatrix w(m.transpose() * m + 0.1 * Matrix::Identity(side, side));
    const double v = log_uniform(0.1, 10.0, rng);
    const double slack = log_uniform(1e-2, 1e2, rng);
    const double u = v * phi_value(f, w / v) + slack;
    return {u, v, w};
}

Direction sample_compat_direction(const ConePoint& pt, Rng& rng) {
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const double p = nd(rng);
    const double q = (2.0 * ud(rng) - 1.0) * pt.v;
    const int d = pt.side();
    const SymMatrix z = random_sym(d, rng);
    const double znorm =
        std::max(z.mat().selfadjointView<Eigen::Lower>().operatorNorm(), 1e-300);
    const SymMatrix s = z * (ud(rng) / znorm);  // ||S||_2 <= 1
    const EigDecomp e = sym_eig(pt.w);
    const Matrix wsqrt =
        e.eigenvectors * e.eigenvalues.cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        e.eigenvectors.transpose();
    return {p, q, SymMatrix(wsqrt * s.mat() * wsqrt)};
}

Direction sample_free_direction(int side, Rng& rng) {
    std::normal_distribution<double> nd;
    return {nd(rng), nd(rng), random_sym(side, rng)};
}

double check_log_homogeneity(const FunctionFamily& f, const ConePoint& pt,
                             std::span<const double> thetas) {
    const double base = barrier_value(f, pt);
    const double nu = 2.0 + pt.side();
    double worst = 0.0;
    for (double theta : thetas) {
        const double scaled = barrier_value(f, pt.scaled(theta));
        worst = std::max(worst, std::abs(scaled - base + nu * std::log(theta)));
    }
    return worst;
}

double check_compatibility(const FunctionFamily& f, const ConePoint& pt, const Direction& dir) {
    if (pt.v - std::abs(dir.q) < -1e-10 * (1.0 + pt.v)) {
        throw InvalidDirection("direction violates v +- q >= 0");
    }
    const double wslack = 1e-10 * (1.0 + pt.w.norm());
    if (min_eigenvalue(pt.w + dir.r) < -wslack || min_eigenvalue(pt.w - dir.r) < -wslack) {
        throw InvalidDirection("direction violates W +- R psd");
    }
    BarrierContext ctx(f, pt);
    return -3.0 * ctx.zeta_d2(dir) - ctx.zeta_d3(dir);
}

double check_self_concordance_line(const FunctionFamily& f, const ConePoint& pt,
                                   const Direction& dir) {
    BarrierContext ctx(f, pt);
    const double d2 = ctx.d2_line(dir);
    const double d3 = ctx.d3_line(dir);
    return 2.0 * std::pow(std::max(d2, 0.0), 1.5) - std::abs(d3);
}

double check_barrier_parameter(const FunctionFamily& f, const ConePoint& pt) {
    BarrierContext ctx(f, pt);
    const Matrix h = 0.5 * (ctx.hess_dense() + ctx.hess_dense().transpose());
    const Vector g = ctx.gradient();
    Eigen::LDLT<Matrix> ldlt(h);
    if (ldlt.info() != Eigen::Success) throw SingularHessian("barrier Hessian factorization failed");
    Vector s = ldlt.solve(g);
    s += ldlt.solve(g - h * s);  // refinement; H is often badly conditioned
    return g.dot(s);
}

double check_matrix_monotonicity(const std::function<double(double)>& h, Rng& rng, int trials) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < trials; ++i) {
        const int side = (i % 2 == 0) ? 2 : 3;
        worst = std::min(worst, monotonicity_pair_margin(h, side, rng));
    }
    return worst;
}

bool TrialReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.is_control || c.passed(); });
}

bool TrialReport::control_detected() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.is_control && !c.passed(); });
}

const CheckResult* TrialReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

void record(CheckResult& check, double margin, Witness witness) {
    ++check.trials;
    if (margin >= 0.0) ++check.passes;
    if (margin < check.worst_margin) {
        check.worst_margin = margin;
        check.witness = std::move(witness);
    }
}

template <class Fn>
void run_check(CheckResult& check, Witness witness, Fn&& margin_fn) {
    double margin;
    try {
        margin = margin_fn();
    } catch (const std::exception&) {
        margin = -std::numeric_limits<double>::infinity();
    }
    record(check, margin, std::move(witness));
}

}  // namespace

TrialReport run_suite(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.side < 1) throw std::invalid_argument("side must be >= 1");
    const Tolerances& tol = cfg.tol;
    for (double s : {tol.log_homogeneity, tol.compatibility, tol.self_concordance,
                     tol.barrier_parameter, tol.euler_grad, tol.euler_hess, tol.monotonicity,
                     tol.fd_grad, tol.fd_hess, tol.fd_d3}) {
        if (!(s > 0.0)) throw std::invalid_argument("tolerance slacks must be positive");
    }

    const FunctionFamily& f = cfg.family;
    const double nu = 2.0 + cfg.side;
    static constexpr double kThetas[] = {0.1, 0.5, 2.0, 10.0};

    TrialReport report;
    report.config = cfg;
    CheckResult log_hom{.name = "log_homogeneity"};
    CheckResult compat{.name = "compatibility"};
    CheckResult self_conc{.name = "self_concordance"};
    CheckResult param{.name = "barrier_parameter"};
    CheckResult euler_g{.name = "euler_gradient"};
    CheckResult euler_h{.name = "euler_hessian"};
    CheckResult mono{.name = "matrix_monotonicity"};
    CheckResult fd_g{.name = "fd_gradient"};
    CheckResult fd_h{.name = "fd_hessian"};
    CheckResult fd_3{.name = "fd_third_order"};
    CheckResult control{.name = "control_monotonicity", .is_control = true};

    const auto value_at = [&f](const Vector& x) { return barrier_value(f, ConePoint::from_packed(x)); };
    const auto grad_at = [&f](const Vector& x) { return barrier_grad(f, ConePoint::from_packed(x)); };

    for (int i = 0; i < cfg.trials; ++i) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(i));
        const ConePoint pt = sample_interior_point(f, cfg.side, rng);
        const Direction cdir = sample_compat_direction(pt, rng);
        const Direction fdir = sample_free_direction(cfg.side, rng);
        const Vector x = pt.packed();

        Witness wit{.trial = i, .seed = cfg.seed, .point = x};
        Witness wit_c = wit;
        wit_c.direction = cdir.packed();
        Witness wit_f = wit;
        wit_f.direction = fdir.packed();

        run_check(log_hom, wit, [&] {
            return tol.log_homogeneity - check_log_homogeneity(f, pt, kThetas);
        });
        run_check(compat, wit_c, [&] {
            BarrierContext ctx(f, pt);
            const double z2 = ctx.zeta_d2(cdir);
            const double z3 = ctx.zeta_d3(cdir);
            const double scale = 1.0 + std::abs(3.0 * z2) + std::abs(z3);
            return (-3.0 * z2 - z3) + tol.compatibility * scale;
        });
        run_check(self_conc, wit_f, [&] {
            BarrierContext ctx(f, pt);
            const double d2 = ctx.d2_line(fdir);
            const double d3 = ctx.d3_line(fdir);
            const double lhs = 2.0 * std::pow(std::max(d2, 0.0), 1.5);
            const double scale = 1.0 + lhs + std::abs(d3);
            return (lhs - std::abs(d3)) + tol.self_concordance * scale;
        });
        run_check(param, wit, [&] {
            return tol.barrier_parameter * nu - std::abs(check_barrier_parameter(f, pt) - nu);
        });
        run_check(euler_g, wit, [&] {
            const Vector g = barrier_grad(f, pt);
            return tol.euler_grad - std::abs(g.dot(x) + nu);
        });
        run_check(euler_h, wit, [&] {
            BarrierContext ctx(f, pt);
            const Vector g = ctx.gradient();
            const Vector hx = ctx.hess_apply(x);
            return tol.euler_hess * g.norm() - (hx + g).norm();
        });
        run_check(mono, wit, [&] {
            const int side = (i % 2 == 0) ? 2 : 3;
            return monotonicity_pair_margin([&f](double t) { return f.deriv(t, 1); }, side, rng) +
                   tol.monotonicity;
        });
        if (cfg.negative_control) {
            run_check(control, wit, [&] {
                const int side = (i % 2 == 0) ? 2 : 3;
                return monotonicity_pair_margin([](double t) { return 3.0 * t * t; }, side, rng) +
                       tol.monotonicity;
            });
        }

        if (i < cfg.fd_trials) {
            BarrierContext ctx(f, pt);
            const Vector hess_diag = ctx.hess_dense().diagonal();
            run_check(fd_g, wit, [&] {
                const Vector ga = ctx.gradient();
                const Vector steps = fd_step_grad4() * hess_diag.cwiseSqrt().cwiseInverse();
                const Vector gfd = fd_gradient_steps(value_at, x, steps);
                return tol.fd_grad - (ga - gfd).norm() / ga.norm();
            });
            const double metric = std::sqrt(std::max(ctx.d2_line(fdir), 1e-300));
            const Direction ndir = fdir.scaled(1.0 / metric);
            const Vector nd = ndir.packed();
            Witness wit_n = wit;
            wit_n.direction = nd;
            run_check(fd_h, wit_n, [&] {
                const Vector ha = ctx.hess_apply(ndir);
                const Vector hfd = fd_jacobian_apply(grad_at, x, nd, fd_step_grad());
                return tol.fd_hess - (ha - hfd).norm() / ha.norm();
            });
            run_check(fd_3, wit_n, [&] {
                const double d3a = ctx.d3_line(ndir);
                const double d3fd = fd_d3_line_richardson(value_at, x, nd, 2e-2);
                return tol.fd_d3 - std::abs(d3a - d3fd) / (1.0 + std::abs(d3a));
            });
        }
    }

    report.checks = {log_hom, compat, self_conc, param, euler_g, euler_h, mono, fd_g, fd_h, fd_3};
    if (cfg.negative_control) report.checks.push_back(control);
    return report;
}

}  // namespace spcone
