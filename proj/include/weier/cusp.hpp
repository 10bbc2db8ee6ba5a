#ifndef WEIER_CUSP_HPP
#define WEIER_CUSP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "weier/arith.hpp"
#include "weier/forms.hpp"

namespace weier
{

/// Closed-form check of a form against its value at i infinity, sampled at tau = iY.
struct CuspValueReport
{
    FormSpec label;
    Complex closed_form;
    CertifiedValue numeric_limit;
    double Y = 0.0;
    double residual = 0.0;

    bool valid(double slack) const { return residual <= numeric_limit.error + slack; }
};

/// Limit of f_(s,t) at i infinity:
/// -pi^2/3 (e(t) + 10 + e(-t)) / (e(t) - 2 + e(-t)) when s is an integer, -pi^2/3 otherwise.
Complex cusp_value_f(const RationalPair &p);

/// 1/t^2 + 2 sum_{n=1}^{terms} (2n+1) zeta(2n+2) t^(2n), with the tail
/// 2 zeta(2) (2N+3) t^(2N+2) / (1 - t^2)^2 folded into the error.
CertifiedValue cusp_value_f_series(const BigRational &t, int terms);

/// Limit of h_{r,(0,t)} at i infinity: 2 pi i ((r-1)/2 + r/(e(t)-1) - 1/(e(rt)-1)).
Complex cusp_value_h(std::int64_t r, const BigRational &t);

/// Riemann zeta at an integer k >= 2: Bernoulli closed form for even k, direct
/// summation with a bracketed integral tail for odd k.
CertifiedValue riemann_zeta(int k);

/// 4 zeta(k) / Y^k + 2 pi zeta(k-1) / Y^(k-1), bounding sum_{c != 0, d} |c tau + d|^-k.
/// The zeta values enter at the upper end of their certified intervals.
double lemma_eies_bound(int k, double im_tau);

/// sum over 0 < max(|c|, |d|) <= shells with c != 0 of |c tau + d|^-k.
double eies_partial_sum(Complex tau, int k, std::int64_t shells);

/// f or s = 0 h form compared against its closed form at tau = iY.
CuspValueReport cusp_report(const FormSpec &form, double Y, const EvalOptions &options = {});

/// Closed form at i infinity for f (any label) and h_{r,(0,t)}; empty otherwise.
std::optional<Complex> closed_cusp_value(const FormSpec &form);

struct Zeta2Sample
{
    double Y;
    CertifiedValue limit;
    /// -limit / 2
    double implied_zeta2;
    /// |implied_zeta2 - pi^2/6|
    double residual;
};

struct Zeta2Report
{
    RationalPair label;
    std::vector<Zeta2Sample> samples;
    bool passed = false;
};

/// f_(s,t)(iY) for Y in {5, 10, 20} with s not an integer tends to -2 zeta(2); the
/// report passes when the Y = 20 sample recovers pi^2/6 within tolerance.
Zeta2Report verify_zeta2_recovery(double tolerance, const EvalOptions &options = {},
                                  const RationalPair &label = RationalPair(BigRational(1, 2), BigRational(0)));

} // namespace weier

#endif
