#include <doctest.h>

#include <cmath>

#include "weier/cusp.hpp"

using namespace weier;

TEST_CASE("closed cusp values of f")
{
    CHECK(std::abs(cusp_value_f({0, BigRational(1, 2)}) - 2 * pi * pi / 3) < 1e-13);
    CHECK(std::abs(cusp_value_f({0, BigRational(1, 3)}) - pi * pi) < 1e-13);
    CHECK(std::abs(cusp_value_f({BigRational(1, 2), BigRational(1, 7)}) + pi * pi / 3) < 1e-13);
    CHECK_THROWS_AS(cusp_value_f({1, 0}), domain_error);
}

TEST_CASE("zeta series for the s = 0 cusp value")
{
    const CertifiedValue s = cusp_value_f_series(BigRational(1, 2), 60);
    CHECK(s.contains(cusp_value_f({0, BigRational(1, 2)}), 1e-12));
    const Complex closed = cusp_value_f({0, BigRational(1, 4)});
    const CertifiedValue series = cusp_value_f_series(BigRational(1, 4), 40);
    CHECK(std::abs(series.value - closed) < 1e-10);
    CHECK_THROWS_AS(cusp_value_f_series(BigRational(3, 2), 10), domain_error);
    CHECK_THROWS_AS(cusp_value_f_series(BigRational(1, 2), 200), domain_error);
}

TEST_CASE("h cusp values")
{
    // The closed form reduces to pi (r cot pi t - cot pi r t).
    const Complex v = cusp_value_h(2, BigRational(1, 3));
    CHECK(std::abs(v - std::sqrt(3.0) * pi) < 1e-12);
    const double t = 0.2;
    const Complex w = cusp_value_h(3, BigRational(1, 5));
    CHECK(std::abs(w - pi * (3 / std::tan(pi * t) - 1 / std::tan(3 * pi * t))) < 1e-12);
    CHECK_THROWS_AS(cusp_value_h(3, BigRational(1, 3)), domain_error);
    CHECK_THROWS_AS(cusp_value_h(0, BigRational(1, 3)), domain_error);
}

TEST_CASE("Riemann zeta")
{
    CHECK(riemann_zeta(2).contains(pi * pi / 6));
    const CertifiedValue z3 = riemann_zeta(3);
    CHECK(z3.contains(1.2020569031595942854));
    CHECK(z3.error < 1e-9);
    CHECK(riemann_zeta(5).contains(1.0369277551433699263));
    CHECK_THROWS_AS(riemann_zeta(1), domain_error);
}

TEST_CASE("Eisenstein majorant")
{
    const double b = lemma_eies_bound(3, 2.0);
    CHECK(b == doctest::Approx(0.5 * 1.2020569031595942854 + pi * pi * pi / 12).epsilon(1e-9));
    CHECK(eies_partial_sum(Complex(0.3, 2.0), 3, 200) < b);
    CHECK_THROWS_AS(lemma_eies_bound(2, 1.0), domain_error);
}

TEST_CASE("cusp reports")
{
    const CuspValueReport r = cusp_report(FormSpec::wp({0, BigRational(1, 3)}), 20.0);
    CHECK(r.valid(1e-6));
    CHECK(r.residual == std::abs(r.closed_form - r.numeric_limit.value));
    CHECK_FALSE(closed_cusp_value(FormSpec::zeta({0, BigRational(1, 3)})).has_value());
    CHECK_THROWS_AS(cusp_report(FormSpec::zeta({0, BigRational(1, 3)}), 20.0), domain_error);

    const Zeta2Report z = verify_zeta2_recovery(1e-8);
    CHECK(z.passed);
    CHECK(z.samples.size() == 3);
}
