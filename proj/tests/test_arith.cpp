#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "weier/arith.hpp"

using namespace weier;

TEST_CASE("rational parsing is exact and rejects decimals")
{
    CHECK(parse_rational("1/3") == BigRational(1, 3));
    CHECK(parse_rational("-2/4") == BigRational(-1, 2));
    CHECK(parse_rational("7") == BigRational(7));
    CHECK_THROWS_AS(parse_rational("0.3333"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/-3"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
    CHECK(to_string(BigRational(-3, 6)) == "-1/2");
}

TEST_CASE("to_double rounds correctly for huge operands")
{
    CHECK(to_double(BigRational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(BigRational(-2, 7)) == -2.0 / 7.0);
    const BigInt big = BigInt(1) << 400;
    CHECK(to_double(BigRational(big + 1, big * 3)) == 1.0 / 3.0);
    CHECK(to_double(BigInt(1) << 60) == std::ldexp(1.0, 60));
}

TEST_CASE("floor, integrality and common denominators")
{
    CHECK(floor(BigRational(-1, 3)) == -1);
    CHECK(floor(BigRational(7, 2)) == 3);
    CHECK(is_integer(BigRational(4, 2)));
    CHECK_FALSE(is_integer(BigRational(1, 2)));
    CHECK(common_denominator(BigRational(1, 4), BigRational(5, 6)) == 12);
}

TEST_CASE("certified arithmetic")
{
    const CertifiedValue a({1.0, 0.0}, 1e-3), b({0.0, 2.0}, 2e-3);
    CHECK((a + b).error == doctest::Approx(3e-3));
    CHECK((a * b).error >= 1.0 * 2e-3 + 2.0 * 1e-3);
    CHECK(a.contains({1.0005, 0.0}));
    CHECK_FALSE(a.contains({1.01, 0.0}));
    CHECK_THROWS_AS(CertifiedValue({0, 0}, -1.0), domain_error);
    CHECK_THROWS_AS(CertifiedValue({0, 0}, INFINITY), domain_error);
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(4) == BigRational(-1, 30));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), domain_error);
    CHECK_THROWS_AS(bernoulli(-2), domain_error);
    CHECK_THROWS_AS(bernoulli(bernoulli_cap + 2), domain_error);
}

TEST_CASE("Bernoulli table under concurrent first access")
{
    std::vector<BigRational> seen(8);
    {
        std::vector<std::jthread> pool;
        for (int i = 0; i < 8; ++i) {
            pool.emplace_back([&seen, i] { seen[i] = bernoulli(2 * (i + 1) * 10); });
        }
    }
    for (int i = 0; i < 8; ++i) {
        CHECK(seen[i] == bernoulli(2 * (i + 1) * 10));
    }
}

TEST_CASE("even zeta values")
{
    CHECK(zeta_even_exact(2).coefficient == BigRational(1, 6));
    CHECK(zeta_even_exact(2).power == 2);
    CHECK(zeta_even_exact(4).coefficient == BigRational(1, 90));
    const CertifiedValue z2 = zeta_even(2);
    CHECK(z2.contains(pi * pi / 6, 1e-16));
    CHECK_THROWS_AS(zeta_even(0), domain_error);
}

TEST_CASE("e(x)")
{
    CHECK(std::abs(e_of(0.25) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(e_of(1e6 + 0.5) + 1.0) < 1e-12);
    CHECK(std::abs(e_of(Complex(0, 1)) - std::exp(-2 * pi)) < 1e-16);
}

TEST_CASE("complex text round trip")
{
    for (Complex z : {Complex(0.1, -0.2), Complex(1e-300, 3e300), Complex(-0.0, 1.0 / 3.0), Complex(5, 0)}) {
        const Complex back = parse_complex(format_complex(z));
        CHECK(back.real() == z.real());
        CHECK(back.imag() == z.imag());
    }
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("10i") == Complex(0, 10));
    CHECK(parse_complex("0.5+1.2i") == Complex(0.5, 1.2));
    CHECK(parse_complex("1e-3-2e+1j") == Complex(1e-3, -20));
    CHECK_THROWS_AS(parse_complex("1+"), domain_error);
    CHECK_THROWS_AS(parse_complex("abc"), domain_error);
}
