#ifndef WEIER_ARITH_HPP
#define WEIER_ARITH_HPP

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "weier/errors.hpp"

namespace weier
{

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always in lowest terms with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Rational helpers.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational &q);
/// Correctly rounded conversion (round-to-nearest) for arbitrarily large numerator/denominator.
double to_double(const BigRational &q);
double to_double(const BigInt &n);
BigInt floor(const BigRational &q);
bool is_integer(const BigRational &q);
/// Least common multiple of the denominators.
BigInt common_denominator(const BigRational &a, const BigRational &b);

/// A complex value bundled with an absolute error bound.
///
/// Arithmetic propagates the bounds conservatively: errors add under addition,
/// and multiplication uses |a| e_b + |b| e_a + e_a e_b.
struct CertifiedValue
{
    Complex value{};
    double error = 0.0;

    CertifiedValue() = default;
    CertifiedValue(Complex v, double e);

    /// Largest modulus compatible with the bound.
    double upper() const { return std::abs(value) + error; }
    /// True when |value - x| <= error + slack.
    bool contains(Complex x, double slack = 0.0) const;
};

CertifiedValue operator+(const CertifiedValue &a, const CertifiedValue &b);
CertifiedValue operator-(const CertifiedValue &a, const CertifiedValue &b);
CertifiedValue operator-(const CertifiedValue &a);
CertifiedValue operator*(const CertifiedValue &a, const CertifiedValue &b);
/// Multiplication by an exact scalar.
CertifiedValue operator*(Complex k, const CertifiedValue &a);
CertifiedValue operator/(const CertifiedValue &a, Complex k);

inline constexpr int bernoulli_cap = 256;

/// Exact Bernoulli number B_n for even n in [0, bernoulli_cap].
///
/// The table is built once from the recurrence sum_{j<=m} C(m+1, j) B_j = 0 and
/// memoized; concurrent first access is safe.
BigRational bernoulli(int n);

/// coefficient * pi^power
struct PiMultiple
{
    BigRational coefficient;
    int power = 0;
};

/// zeta(n) = (-1)^(n/2+1) B_n 2^(n-1) / n! * pi^n for even n >= 2.
PiMultiple zeta_even_exact(int n);

/// Riemann zeta at an even integer n >= 2 from the Bernoulli closed form.
/// The error bound covers floating rounding only.
CertifiedValue zeta_even(int n);

/// e(x) := exp(2 pi i x).
Complex e_of(Complex x);

/// "re+imi" / "re-imi" with 17 significant digits (lossless for binary64).
std::string format_complex(Complex z);
/// Parses "x", "yi", "i", "-i", "x+yi", "x-yi" (also with j); spaces are not allowed.
Complex parse_complex(std::string_view text);

} // namespace weier

#endif
