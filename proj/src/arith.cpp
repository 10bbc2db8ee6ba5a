#include "weier/arith.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <mutex>
#include <vector>

namespace weier
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();

BigInt parse_integer(std::string_view text)
{
    if (text.empty()) {
        throw domain_error("empty integer");
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw domain_error("malformed integer: '" + std::string(text) + "'");
    }
    BigInt result = 0;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9') {
            throw domain_error("malformed integer: '" + std::string(text) + "'");
        }
        result = result * 10 + (ch - '0');
    }
    return negative ? BigInt(-result) : result;
}

} // namespace

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text));
    }
    const BigInt num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
        throw domain_error("malformed rational: '" + std::string(text) + "'");
    }
    const BigInt den = parse_integer(den_text);
    if (den == 0) {
        throw domain_error("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(num, den);
}

std::string to_string(const BigRational &q)
{
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const BigRational &q)
{
    BigInt a = numerator(q);
    BigInt b = denominator(q);
    if (a == 0) {
        return 0.0;
    }
    const bool negative = a < 0;
    if (negative) {
        a = -a;
    }
    // Scale so that the integer quotient carries 62-63 significant bits.
    const long shift = 62 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
    if (shift > 0) {
        a <<= static_cast<unsigned>(shift);
    } else if (shift < 0) {
        b <<= static_cast<unsigned>(-shift);
    }
    BigInt quot, rem;
    divide_qr(a, b, quot, rem);
    auto bits = static_cast<std::uint64_t>(quot);
    // Sticky bit so that the final u64 -> double rounding sees the discarded remainder.
    bits = (bits << 1) | (rem != 0 ? 1u : 0u);
    const double mag = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift - 1));
    return negative ? -mag : mag;
}

double to_double(const BigInt &n)
{
    return to_double(BigRational(n));
}

BigInt floor(const BigRational &q)
{
    BigInt quot, rem;
    divide_qr(numerator(q), denominator(q), quot, rem);
    if (rem < 0) {
        quot -= 1;
    }
    return quot;
}

bool is_integer(const BigRational &q)
{
    return denominator(q) == 1;
}

BigInt common_denominator(const BigRational &a, const BigRational &b)
{
    return boost::multiprecision::lcm(denominator(a), denominator(b));
}

CertifiedValue::CertifiedValue(Complex v, double e) : value(v), error(e)
{
    if (!(e >= 0.0) || !std::isfinite(e)) {
        throw domain_error("certified error must be finite and nonnegative");
    }
}

bool CertifiedValue::contains(Complex x, double slack) const
{
    return std::abs(value - x) <= error + slack;
}

CertifiedValue operator+(const CertifiedValue &a, const CertifiedValue &b)
{
    return {a.value + b.value, a.error + b.error};
}

CertifiedValue operator-(const CertifiedValue &a, const CertifiedValue &b)
{
    return {a.value - b.value, a.error + b.error};
}

CertifiedValue operator-(const CertifiedValue &a)
{
    return {-a.value, a.error};
}

CertifiedValue operator*(const CertifiedValue &a, const CertifiedValue &b)
{
    return {a.value * b.value,
            std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error};
}

CertifiedValue operator*(Complex k, const CertifiedValue &a)
{
    return {k * a.value, std::abs(k) * a.error};
}

CertifiedValue operator/(const CertifiedValue &a, Complex k)
{
    return {a.value / k, a.error / std::abs(k)};
}

BigRational bernoulli(int n)
{
    if (n < 0 || n % 2 != 0) {
        throw domain_error("bernoulli: index must be even and nonnegative, got " + std::to_string(n));
    }
    if (n > bernoulli_cap) {
        throw domain_error("bernoulli: index " + std::to_string(n) + " exceeds cap " +
                           std::to_string(bernoulli_cap));
    }
    static std::once_flag once;
    static std::vector<BigRational> table;
    std::call_once(once, [] {
        table.reserve(bernoulli_cap + 1);
        table.emplace_back(1);
        for (int m = 1; m <= bernoulli_cap; ++m) {
            if (m > 1 && m % 2 == 1) {
                table.emplace_back(0);
                continue;
            }
            // binom runs over C(m+1, j), j = 0..m-1
            BigInt binom = 1;
            BigRational acc = 0;
            for (int j = 0; j < m; ++j) {
                acc += BigRational(binom) * table[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            table.push_back(-acc / (m + 1));
        }
    });
    return table[static_cast<std::size_t>(n)];
}

PiMultiple zeta_even_exact(int n)
{
    if (n < 2 || n % 2 != 0) {
        throw domain_error("zeta_even: argument must be an even integer >= 2, got " + std::to_string(n));
    }
    BigInt factorial = 1;
    for (int k = 2; k <= n; ++k) {
        factorial *= k;
    }
    BigRational coefficient = bernoulli(n) * BigRational(BigInt(1) << (n - 1)) / BigRational(factorial);
    if ((n / 2) % 2 == 0) {
        coefficient = -coefficient;
    }
    return {coefficient, n};
}

CertifiedValue zeta_even(int n)
{
    const PiMultiple exact = zeta_even_exact(n);
    const double value = to_double(exact.coefficient) * std::pow(pi, n);
    return {Complex(value, 0.0), (n + 10) * eps * std::abs(value)};
}

Complex e_of(Complex x)
{
    // exp(2 pi i x) is 1-periodic in Re x; reduce first to keep the argument small.
    const double re = x.real() - std::round(x.real());
    return std::exp(Complex(-2.0 * pi * x.imag(), 2.0 * pi * re));
}

} // namespace weier

namespace weier
{

std::string format_complex(Complex z)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace
{

double parse_real(std::string_view text, std::string_view whole)
{
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    const std::string s(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size()) {
        throw domain_error("malformed complex number: '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

Complex parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw domain_error("empty complex number");
    }
    const char last = text.back();
    if (last != 'i' && last != 'j') {
        const double re = parse_real(text, text);
        if (text == "+" || text == "-") {
            throw domain_error("malformed complex number: '" + std::string(text) + "'");
        }
        return {re, 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not part of an exponent and not leading.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_real(body, text)};
    }
    const std::string_view re_part = body.substr(0, split);
    if (re_part.empty() || re_part == "+" || re_part == "-") {
        throw domain_error("malformed complex number: '" + std::string(text) + "'");
    }
    return {parse_real(re_part, text), parse_real(body.substr(split), text)};
}

} // namespace weier
