#include <doctest.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "weier/errors.hpp"
#include "weier/lattice.hpp"

using namespace weier;

namespace
{
// Theta-function oracle values (tests/oracles/golden.py).
const Complex wp_i_half(6.8751858180203728275, 0.0);
const Complex wp_skew(3.0681079624773348638, 6.2808007493528401208);
const Complex zeta_skew(2.3405748325449714915, 1.6273451620947226746);
const Complex tau_skew(0.5, 1.2), z_skew(0.3, -0.2);
} // namespace

TEST_CASE("lattice orientation and validation")
{
    const Lattice neg(Complex(0, -1), 1.0);
    CHECK(neg.tau().imag() > 0);
    CHECK_THROWS_AS(Lattice(1.0, 2.0), domain_error);
    CHECK_THROWS_AS(Lattice(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(TauLattice(Complex(0.3, -1.0)), domain_error);
}

TEST_CASE("Gauss reduction")
{
    const Lattice omega(Complex(7.3, 2.0), Complex(2.0, 0.5));
    const Lattice r = omega.reduced();
    const Complex t = r.tau();
    CHECK(std::abs(t.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(t) >= 1.0 - 1e-12);
    const auto m = omega.reduction_matrix();
    CHECK(m[0] * m[3] - m[1] * m[2] == 1);
    CHECK(std::abs(r.omega1() - (double(m[0]) * omega.omega1() + double(m[1]) * omega.omega2())) < 1e-12);
}

TEST_CASE("shell constant bounds the whole lattice")
{
    const Lattice omega(Complex(0.4, 0.7), 1.0);
    const double delta = omega.shell_constant();
    for (int c = -30; c <= 30; ++c) {
        for (int d = -30; d <= 30; ++d) {
            if (c == 0 && d == 0) {
                continue;
            }
            const double n = std::max(std::abs(c), std::abs(d));
            CHECK(std::abs(double(c) * omega.omega1() + double(d) * omega.omega2()) >= delta * n * (1 - 1e-14));
        }
    }
}

TEST_CASE("golden wp values")
{
    const CertifiedValue a = wp(TauLattice(Complex(0, 1)), 0.5);
    CHECK(a.contains(wp_i_half));
    const CertifiedValue b = wp(TauLattice(Complex(0, 1)), Complex(0.5, 0.5));
    CHECK(b.contains(0.0));
    const CertifiedValue c = wp(TauLattice(tau_skew), z_skew);
    CHECK(c.contains(wp_skew));
    CHECK(c.error <= 1e-8);
}

TEST_CASE("golden zeta values")
{
    CHECK(wzeta(TauLattice(Complex(0, 1)), 0.5).contains(pi / 2));
    CHECK(wzeta(TauLattice(tau_skew), z_skew).contains(zeta_skew));
    CHECK(wzeta_lattice(Lattice(tau_skew, 1.0), z_skew).contains(zeta_skew));
}

TEST_CASE("the shell oracle agrees with row summation")
{
    const EvalOptions shells{1e-5, 1'000'000, SumMethod::shells};
    const CertifiedValue s = wp(TauLattice(tau_skew), z_skew, shells);
    CHECK(s.contains(wp_skew));
    CHECK(s.error <= 1e-5);
    const CertifiedValue zs = wzeta(TauLattice(tau_skew), z_skew, shells);
    CHECK(zs.contains(zeta_skew));
}

TEST_CASE("homogeneity of non-normalized lattices")
{
    const Complex j(1.5, -0.7);
    const CertifiedValue v = wp_lattice(Lattice(j * tau_skew, j), j * z_skew);
    CHECK(std::abs(v.value * j * j - wp_skew) <= std::norm(j) * v.error + 1e-12);
}

TEST_CASE("quasi-periods and the Legendre relation")
{
    const QuasiPeriods eta = eta12(TauLattice(Complex(0, 1)));
    CHECK(eta.eta2.contains(pi));
    CHECK(eta.eta1.contains(Complex(0, -pi)));
    for (Complex tau : {Complex(0, 2), Complex(0.5, 1.0)}) {
        const QuasiPeriods e = eta12(TauLattice(tau));
        const CertifiedValue legendre = tau * e.eta2 - e.eta1;
        CHECK(legendre.contains(Complex(0, 2 * pi)));
    }
}

TEST_CASE("poles raise pole_error with the nearest lattice point")
{
    const TauLattice lattice(Complex(0.2, 1.1));
    const Complex omega = Complex(0.2, 1.1) * 2.0 - 3.0;
    try {
        (void)wp(lattice, omega);
        FAIL("no pole_error");
    } catch (const pole_error &e) {
        CHECK(std::abs(e.nearest() - omega) < 1e-12);
    }
    CHECK_THROWS_AS(wzeta(lattice, 0.0), pole_error);
    CHECK_THROWS_AS(wp_lattice(Lattice(1.0, Complex(0, 1)), Complex(1, 1)), pole_error);
}

TEST_CASE("truncation plans")
{
    const Lattice omega(Complex(0, 1), 1.0);
    SUBCASE("infinite tolerance keeps only the margin")
    {
        const TruncationPlan p = plan_truncation(omega, 0.5, 4, std::numeric_limits<double>::infinity());
        CHECK(p.shell_radius == static_cast<std::int64_t>(std::ceil(2 * 0.5 / omega.shell_constant())));
    }
    SUBCASE("the paired bound meets 1e-8")
    {
        const TruncationPlan p = plan_truncation(omega, 0.5, 4, 1e-8);
        CHECK(p.tail_bound <= 1e-8);
        CHECK(p.shell_radius <= 1'000'000);
    }
    SUBCASE("the per-point bound cannot reach 1e-8 under the default cap")
    {
        CHECK_THROWS_AS(plan_truncation(omega, 0.5, 3, 1e-8), precision_error);
        const TruncationPlan p = plan_truncation(omega, 0.5, 3, 1e-2);
        CHECK(p.tail_bound <= 1e-2);
    }
    CHECK_THROWS_AS(plan_truncation(omega, 0.5, 5, 1e-3), domain_error);
    CHECK_THROWS_AS(wp_lattice(omega, 0.3, {1e-13}), domain_error);
}

TEST_CASE("precision_error on an exhausted cap")
{
    const EvalOptions tiny{1e-8, 10, SumMethod::shells};
    CHECK_THROWS_AS(wp_lattice(Lattice(Complex(0, 1), 1.0), 0.3, tiny), precision_error);
}

TEST_CASE("doubling the shell radius stays within the tail bound")
{
    const Lattice omega = Lattice(tau_skew, 1.0).reduced();
    const SeriesResult a = wp_shell_sum(omega, z_skew, 200);
    const SeriesResult b = wp_shell_sum(omega, z_skew, 400);
    CHECK(std::abs(a.value.value - b.value.value) < a.plan.tail_bound);
    CHECK(std::abs(a.value.value - wp_skew) <= a.value.error);
}
