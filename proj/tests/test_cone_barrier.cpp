#include <doctest.h>

#include <cmath>
#include <random>

#include "spcone/cone_barrier.hpp"
#include "spcone/finite_diff.hpp"
#include "spcone/verifier.hpp"

using namespace spcone;

namespace {

std::vector<FunctionFamily> all_families() {
    return {FunctionFamily::neglog(), FunctionFamily::negentropy(), FunctionFamily::power(1.5),
            FunctionFamily::power(0.5), FunctionFamily::power(1.0), FunctionFamily::power(2.0)};
}

ConePoint scalar_point(double u, double v, double w) {
    return {u, v, SymMatrix(w * Matrix::Identity(1, 1))};
}

Direction scalar_dir(double p, double q, double r) {
    return {p, q, SymMatrix(r * Matrix::Identity(1, 1))};
}

}  // namespace

TEST_CASE("zeta reference cases") {
    const auto neglog = FunctionFamily::neglog();
    CHECK(zeta(neglog, {1.0, 1.0, SymMatrix::identity(3)}) == doctest::Approx(1.0));
    CHECK(zeta(FunctionFamily::negentropy(), {0.0, 2.0, SymMatrix(2.0 * Matrix::Identity(2, 2))}) ==
          doctest::Approx(0.0));
    CHECK(zeta(FunctionFamily::power(2.0), {3.0, 1.0, SymMatrix::identity(2)}) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(zeta(neglog, {1.0, -1.0, SymMatrix::identity(2)}), DomainError);
}

TEST_CASE("zeta homogeneity") {
    std::mt19937_64 rng(101);
    for (const auto& f : all_families()) {
        Rng trng = trial_rng(55, 1);
        const ConePoint pt = sample_interior_point(f, 3, trng);
        const double base = zeta(f, pt);
        for (double theta : {0.1, 0.7, 2.0, 10.0}) {
            CHECK(zeta(f, pt.scaled(theta)) ==
                  doctest::Approx(theta * base).epsilon(1e-12));
        }
    }
}

TEST_CASE("in_interior gates") {
    const auto f = FunctionFamily::neglog();
    CHECK(in_interior(f, {1.0, 1.0, SymMatrix::identity(2)}, 1e-12));
    CHECK_FALSE(in_interior(f, {-1.0, 1.0, SymMatrix::identity(2)}, 1e-12));
    CHECK_FALSE(in_interior(f, {1.0, 0.0, SymMatrix::identity(2)}, 1e-12));
    CHECK_FALSE(in_interior(f, {1.0, 1.0, SymMatrix(-Matrix::Identity(2, 2))}, 1e-12));
    // boundary point zeta = 0
    CHECK_FALSE(in_interior(f, {0.0, 1.0, SymMatrix::identity(2)}, 1e-12));
}

TEST_CASE("barrier value reference cases") {
    CHECK(barrier_value(FunctionFamily::neglog(), scalar_point(1, 1, 1)) == doctest::Approx(0.0));
    CHECK(barrier_value(FunctionFamily::neglog(), scalar_point(2, 2, 2)) ==
          doctest::Approx(-3.0 * std::log(2.0)));
    CHECK(barrier_value(FunctionFamily::negentropy(), {5.0, 1.0, SymMatrix::identity(3)}) ==
          doctest::Approx(-std::log(5.0)));
    CHECK_THROWS_AS(barrier_value(FunctionFamily::neglog(), scalar_point(-1, 1, 1)), NotInterior);
}

TEST_CASE("log-homogeneity of the barrier") {
    for (const auto& f : all_families()) {
        for (int d : {1, 3, 5}) {
            Rng rng = trial_rng(77, d);
            const ConePoint pt = sample_interior_point(f, d, rng);
            const double base = barrier_value(f, pt);
            const double nu = 2.0 + d;
            for (double theta : {0.1, 0.5, 2.0, 10.0}) {
                CHECK(std::abs(barrier_value(f, pt.scaled(theta)) - base + nu * std::log(theta)) <=
                      1e-10);
            }
        }
    }
}

TEST_CASE("gradient worked example and finite differences") {
    const auto neglog = FunctionFamily::neglog();
    // hand-derived gradient at (1,1,1), cross-checked by central differences
    const ConePoint pt = scalar_point(1, 1, 1);
    const auto value_at = [&](const Vector& x) {
        return barrier_value(neglog, ConePoint::from_packed(x));
    };
    const Vector gfd = fd_gradient(value_at, pt.packed(), fd_step_grad());
    const Vector g = barrier_grad(neglog, pt);
    CHECK(g[0] == doctest::Approx(-1.0));
    CHECK(g[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(g[2] == doctest::Approx(-2.0));
    CHECK((g - gfd).norm() <= 1e-7 * g.norm());
    // Euler identity at the worked point
    CHECK(g.dot(pt.packed()) == doctest::Approx(-3.0));
}

TEST_CASE("gradient matches finite differences at random points") {
    for (const auto& f : all_families()) {
        const auto value_at = [&](const Vector& x) {
            return barrier_value(f, ConePoint::from_packed(x));
        };
        for (int trial = 0; trial < 10; ++trial) {
            Rng rng = trial_rng(303, trial);
            const ConePoint pt = sample_interior_point(f, 4, rng);
            const Vector x = pt.packed();
            BarrierContext ctx(f, pt);
            const Vector g = ctx.gradient();
            const Vector steps =
                fd_step_grad4() * ctx.hess_dense().diagonal().cwiseSqrt().cwiseInverse();
            const Vector gfd = fd_gradient_steps(value_at, x, steps);
            CHECK((g - gfd).norm() <= 1e-6 * g.norm());
        }
    }
}

TEST_CASE("hessian identities") {
    for (const auto& f : all_families()) {
        for (int d : {1, 2, 3, 4, 5, 6}) {
            for (int trial = 0; trial < 17; ++trial) {
                Rng rng = trial_rng(404, 100 * d + trial);
                const ConePoint pt = sample_interior_point(f, d, rng);
                BarrierContext ctx(f, pt);
                const Vector g = ctx.gradient();
                const Vector hx = ctx.hess_apply(pt.packed());
                CHECK((hx + g).norm() <= 1e-8 * g.norm());
                const Direction dir = sample_free_direction(d, rng);
                CHECK(dir.packed().dot(ctx.hess_apply(dir)) > 0.0);
            }
        }
    }
}

TEST_CASE("hessian scalar block worked example") {
    BarrierContext ctx(FunctionFamily::neglog(), scalar_point(1, 1, 1));
    const Vector h = ctx.hess_apply(scalar_dir(1, 0, 0));
    CHECK(h[0] == doctest::Approx(1.0));  // 1/zeta^2
}

TEST_CASE("hessian matches finite differences of the gradient") {
    for (const auto& f : all_families()) {
        const auto grad_at = [&](const Vector& x) {
            return barrier_grad(f, ConePoint::from_packed(x));
        };
        for (int trial = 0; trial < 8; ++trial) {
            Rng rng = trial_rng(505, trial);
            const ConePoint pt = sample_interior_point(f, 3, rng);
            BarrierContext ctx(f, pt);
            Direction dir = sample_free_direction(3, rng);
            dir = dir.scaled(1.0 / std::sqrt(ctx.d2_line(dir)));
            const Vector ha = ctx.hess_apply(dir);
            const Vector hfd = fd_jacobian_apply(grad_at, pt.packed(), dir.packed(), fd_step_grad());
            CHECK((ha - hfd).norm() <= 1e-5 * ha.norm());
        }
    }
}

TEST_CASE("dense hessian assembly") {
    std::mt19937_64 seed(0);
    for (const auto& f : all_families()) {
        Rng rng = trial_rng(606, 0);
        const ConePoint pt = sample_interior_point(f, 4, rng);
        BarrierContext ctx(f, pt);
        const Matrix h = ctx.hess_dense();
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * h.norm());
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.transpose()));
        CHECK(es.eigenvalues().minCoeff() > 0.0);
        for (int trial = 0; trial < 50; ++trial) {
            const Direction dir = sample_free_direction(4, rng);
            const Vector lhs = h * dir.packed();
            const Vector rhs = ctx.hess_apply(dir);
            CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
        }
    }
}

TEST_CASE("xi reference cases") {
    std::mt19937_64 rng64(9);
    Rng rng = trial_rng(707, 0);
    const ConePoint pt = sample_interior_point(FunctionFamily::neglog(), 3, rng);
    const SymMatrix r = sample_free_direction(3, rng).r;

    // q = 0, v = 1
    ConePoint unit_v = pt;
    unit_v.v = 1.0;
    CHECK((xi_of(unit_v, {0.0, 0.0, r}).mat() - r.mat()).norm() < 1e-14);
    // radial direction annihilates xi
    const Direction radial{pt.u, pt.v, pt.w};
    CHECK(xi_of(pt, radial).norm() <= 1e-14 * (1.0 + pt.w.norm()));
    // R = 0, v = 1, q = 1 gives -W
    CHECK((xi_of(unit_v, {0.0, 1.0, SymMatrix::zero(3)}).mat() + unit_v.w.mat()).norm() < 1e-14);
    CHECK_THROWS_AS(xi_of({1.0, 0.0, SymMatrix::identity(2)}, radial), DomainError);
}

TEST_CASE("zeta second and third directional derivatives") {
    const auto neglog = FunctionFamily::neglog();
    const ConePoint pt = scalar_point(1, 1, 1);
    const Direction dir = scalar_dir(0, 0, 0.5);
    CHECK(zeta_d2(neglog, pt, dir) == doctest::Approx(-0.25));
    CHECK(zeta_d3(neglog, pt, dir) == doctest::Approx(0.25));

    // radial direction kills both derivative terms
    for (const auto& f : all_families()) {
        Rng rng = trial_rng(808, 3);
        const ConePoint p2 = sample_interior_point(f, 3, rng);
        const Direction radial{p2.u, p2.v, p2.w};
        CHECK(zeta_d2(f, p2, radial) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(zeta_d3(f, p2, radial) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("zeta_d2 is nonpositive") {
    for (const auto& f : all_families()) {
        for (int trial = 0; trial < 40; ++trial) {
            Rng rng = trial_rng(909, trial);
            const ConePoint pt = sample_interior_point(f, 4, rng);
            const Direction dir = sample_free_direction(4, rng);
            BarrierContext ctx(f, pt);
            CHECK(ctx.zeta_d2(dir) <= 1e-10 * (1.0 + std::abs(ctx.zeta())));
        }
    }
}

TEST_CASE("line derivatives under radial direction follow homogeneity") {
    for (const auto& f : all_families()) {
        for (int d : {1, 2, 5}) {
            Rng rng = trial_rng(111, d);
            const ConePoint pt = sample_interior_point(f, d, rng);
            BarrierContext ctx(f, pt);
            const Direction radial{pt.u, pt.v, pt.w};
            const double nu = 2.0 + d;
            CHECK(ctx.d2_line(radial) == doctest::Approx(nu).epsilon(1e-8));
            CHECK(ctx.d3_line(radial) == doctest::Approx(-2.0 * nu).epsilon(1e-8));
        }
    }
}

TEST_CASE("third-order line form matches finite differences") {
    for (const auto& f : all_families()) {
        const auto value_at = [&](const Vector& x) {
            return barrier_value(f, ConePoint::from_packed(x));
        };
        for (int trial = 0; trial < 8; ++trial) {
            Rng rng = trial_rng(121, trial);
            const ConePoint pt = sample_interior_point(f, 3, rng);
            BarrierContext ctx(f, pt);
            Direction dir = sample_free_direction(3, rng);
            dir = dir.scaled(1.0 / std::sqrt(ctx.d2_line(dir)));
            const double d3 = ctx.d3_line(dir);
            const double d3fd =
                fd_d3_line_richardson(value_at, pt.packed(), dir.packed(), 5e-3);
            CHECK(std::abs(d3 - d3fd) <= 1e-4 * (1.0 + std::abs(d3)));
            // d2 along the metric-normalized line is 1 by construction
            const double d2fd = fd_d2_line(value_at, pt.packed(), dir.packed(), 1e-3);
            CHECK(d2fd == doctest::Approx(1.0).epsilon(1e-4));
        }
    }
}

TEST_CASE("degenerate power p=1 family is handled without division hazards") {
    const auto lin = FunctionFamily::power(1.0);
    Rng rng = trial_rng(131, 0);
    const ConePoint pt = sample_interior_point(lin, 3, rng);
    // zeta = u - tr(W) is linear: second and third derivatives vanish
    CHECK(zeta(lin, pt) == doctest::Approx(pt.u - pt.w.trace()));
    const Direction dir = sample_free_direction(3, rng);
    CHECK(zeta_d2(lin, pt, dir) == doctest::Approx(0.0));
    CHECK(zeta_d3(lin, pt, dir) == doctest::Approx(0.0));
    BarrierContext ctx(lin, pt);
    CHECK(std::isfinite(ctx.value()));
    CHECK(ctx.gradient().allFinite());
    CHECK(ctx.hess_dense().allFinite());
    CHECK(std::isfinite(ctx.d3_line(dir)));
}
