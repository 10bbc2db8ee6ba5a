#include "weier/cusp.hpp"

#include <cmath>
#include <limits>

namespace weier
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();

} // namespace

Complex cusp_value_f(const RationalPair &p)
{
    if (p.is_integral()) {
        throw domain_error("cusp_value_f: label " + p.str() + " lies in Z^2");
    }
    if (!is_integer(p.s)) {
        return -pi * pi / 3.0;
    }
    const double t = to_double(p.t);
    const Complex et = e_of(t), emt = e_of(-t);
    return -pi * pi / 3.0 * (et + 10.0 + emt) / (et - 2.0 + emt);
}

CertifiedValue cusp_value_f_series(const BigRational &t, int terms)
{
    if (t <= 0 || t >= 1) {
        throw domain_error("cusp_value_f_series: t must lie in (0, 1)");
    }
    if (terms < 0 || 2 * terms + 2 > bernoulli_cap) {
        throw domain_error("cusp_value_f_series: term count out of range");
    }
    const double x = to_double(t);
    const double x2 = x * x;
    double sum = 1.0 / x2;
    double mag = sum;
    double err = 0.0;
    double power = 1.0;
    for (int n = 1; n <= terms; ++n) {
        power *= x2;
        const CertifiedValue z = zeta_even(2 * n + 2);
        const double term = 2.0 * (2 * n + 1) * z.value.real() * power;
        sum += term;
        mag += std::abs(term);
        err += 2.0 * (2 * n + 1) * z.error * power;
    }
    const double zeta2 = pi * pi / 6.0;
    const double tail = 2.0 * zeta2 * (2.0 * terms + 3.0) * std::pow(x2, terms + 1) / ((1.0 - x2) * (1.0 - x2));
    return {Complex(sum, 0.0), tail + err + (terms + 8) * eps * mag};
}

Complex cusp_value_h(std::int64_t r, const BigRational &t)
{
    if (r == 0) {
        throw domain_error("cusp_value_h: r must be nonzero");
    }
    const BigRational rt = BigRational(r) * t;
    if (is_integer(t) || is_integer(rt)) {
        throw domain_error("cusp_value_h: e(t) = 1 or e(rt) = 1 is a pole of the closed form");
    }
    const double rd = static_cast<double>(r);
    const Complex two_pi_i(0.0, 2.0 * pi);
    return two_pi_i * ((rd - 1.0) / 2.0 + rd / (e_of(to_double(t)) - 1.0) - 1.0 / (e_of(to_double(rt)) - 1.0));
}

CertifiedValue riemann_zeta(int k)
{
    if (k < 2) {
        throw domain_error("riemann_zeta: k must be >= 2");
    }
    if (k % 2 == 0) {
        return zeta_even(k);
    }
    // sum_{d > M} d^-k lies in [1/((k-1)(M+1)^(k-1)), 1/((k-1) M^(k-1))]
    const int M = 200000;
    double sum = 0.0;
    for (int d = M; d >= 1; --d) {
        sum += std::pow(static_cast<double>(d), -k);
    }
    const double lo = 1.0 / ((k - 1) * std::pow(M + 1.0, k - 1));
    const double hi = 1.0 / ((k - 1) * std::pow(static_cast<double>(M), k - 1));
    return {Complex(sum + (lo + hi) / 2, 0.0), (hi - lo) / 2 + 4.0 * M * eps * sum};
}

double lemma_eies_bound(int k, double im_tau)
{
    if (k < 3) {
        throw domain_error("lemma_eies_bound: k must be >= 3");
    }
    if (!(im_tau > 0.0)) {
        throw domain_error("lemma_eies_bound: Im tau must be positive");
    }
    const double zk = riemann_zeta(k).upper();
    const double zk1 = riemann_zeta(k - 1).upper();
    return 4.0 / std::pow(im_tau, k) * zk + 2.0 * pi / std::pow(im_tau, k - 1) * zk1;
}

double eies_partial_sum(Complex tau, int k, std::int64_t shells)
{
    double total = 0.0;
    for (std::int64_t n = shells; n >= 1; --n) {
        double shell = 0.0;
        auto add = [&](std::int64_t c, std::int64_t d) {
            if (c != 0) {
                shell += std::pow(std::abs(static_cast<double>(c) * tau + static_cast<double>(d)), -k);
            }
        };
        for (std::int64_t c = -n; c <= n; ++c) {
            add(c, n);
            add(c, -n);
        }
        for (std::int64_t d = -n + 1; d < n; ++d) {
            add(n, d);
            add(-n, d);
        }
        total += shell;
    }
    return total;
}

std::optional<Complex> closed_cusp_value(const FormSpec &form)
{
    if (const auto *f = std::get_if<WpForm>(&form.kind())) {
        return cusp_value_f(f->label);
    }
    if (const auto *h = std::get_if<HForm>(&form.kind())) {
        if (h->label.s == 0) {
            return cusp_value_h(h->r, h->label.t);
        }
    }
    return std::nullopt;
}

CuspValueReport cusp_report(const FormSpec &form, double Y, const EvalOptions &options)
{
    const auto closed = closed_cusp_value(form);
    if (!closed) {
        throw domain_error("no closed-form cusp value for " + form.str());
    }
    const CertifiedValue numeric = evaluate(form, Complex(0.0, Y), options);
    return {form, *closed, numeric, Y, std::abs(*closed - numeric.value)};
}

Zeta2Report verify_zeta2_recovery(double tolerance, const EvalOptions &options, const RationalPair &label)
{
    if (is_integer(label.s)) {
        throw domain_error("verify_zeta2_recovery: s must not be an integer");
    }
    Zeta2Report report{label, {}, false};
    for (double Y : {5.0, 10.0, 20.0}) {
        const CertifiedValue limit = eval_f(label, Complex(0.0, Y), options);
        const double implied = -limit.value.real() / 2.0;
        report.samples.push_back({Y, limit, implied, std::abs(implied - pi * pi / 6.0)});
    }
    const Zeta2Sample &last = report.samples.back();
    report.passed = last.residual <= tolerance && std::abs(last.limit.value.imag()) <= tolerance;
    return report;
}

} // namespace weier
