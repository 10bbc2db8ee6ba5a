#ifndef WEIER_LATTICE_HPP
#define WEIER_LATTICE_HPP

#include <array>
#include <cstdint>

#include "weier/arith.hpp"

namespace weier
{

/// Period lattice omega1 Z + omega2 Z, oriented so that Im(omega1 / omega2) > 0.
///
/// A negatively oriented pair is accepted and normalized by flipping the sign of
/// omega1, which leaves the lattice unchanged.
class Lattice
{
public:
    Lattice(Complex omega1, Complex omega2);

    Complex omega1() const { return m_omega1; }
    Complex omega2() const { return m_omega2; }
    Complex tau() const { return m_omega1 / m_omega2; }

    /// Lagrange-Gauss reduced basis of the same lattice: |omega2| is the shortest
    /// vector and tau() lies in the standard fundamental domain.
    Lattice reduced() const;

    /// Integer matrix (a, b; c, d) with reduced().omega1 = a w1 + b w2 and
    /// reduced().omega2 = c w1 + d w2.
    std::array<std::int64_t, 4> reduction_matrix() const;

    /// min |c omega1 + d omega2| over the real square max(|c|, |d|) = 1, so that
    /// |c omega1 + d omega2| >= shell_constant() * max(|c|, |d|) for all integers.
    double shell_constant() const;

    /// Lattice point closest to z.
    Complex nearest_point(Complex z) const;

private:
    Complex m_omega1;
    Complex m_omega2;
};

/// The lattice tau Z + Z for tau in the upper half plane.
class TauLattice
{
public:
    explicit TauLattice(Complex tau);

    Complex tau() const { return m_tau; }
    Lattice lattice() const { return Lattice(m_tau, 1.0); }

private:
    Complex m_tau;
};

enum class SumMethod
{
    /// Each row c omega1 + Z summed in closed form, rows truncated with an exponential tail bound.
    rows,
    /// Direct square-shell partial sums of the absolutely convergent lattice series.
    shells
};

struct EvalOptions
{
    double tol = 1e-8;
    std::int64_t shell_cap = 1'000'000;
    SumMethod method = SumMethod::rows;
};

inline constexpr double min_tolerance = 1e-12;

struct TruncationPlan
{
    /// Shell radius N (shells) or number of row pairs (rows).
    std::int64_t shell_radius = 0;
    /// Proven bound on the omitted part of the series.
    double tail_bound = 0.0;
    double shell_constant = 0.0;
    SumMethod method = SumMethod::shells;
};

/// Smallest shell radius whose tail bound is <= tol.
///
/// k = 3 bounds each omitted summand by 10 zBound / |omega|^3 (the crude per-point
/// majorant); k = 4 pairs omega with -omega, whose combined summand is O(|z|^2 / |omega|^4).
/// Shells inside the 1/2 margin (|z / omega| > 1/2 possible) are always summed.
TruncationPlan plan_truncation(const Lattice &omega, double z_bound, int k, double tol,
                               std::int64_t shell_cap = 1'000'000);

struct SeriesResult
{
    CertifiedValue value;
    TruncationPlan plan;
};

/// Square-shell partial sums through an explicit radius (the reference oracle).
/// The plan records the paired-majorant tail bound for that radius; z is used as given.
SeriesResult wp_shell_sum(const Lattice &omega, Complex z, std::int64_t radius);
SeriesResult wzeta_shell_sum(const Lattice &omega, Complex z, std::int64_t radius);

SeriesResult wp_lattice_detailed(const Lattice &omega, Complex z, const EvalOptions &options);
SeriesResult wzeta_lattice_detailed(const Lattice &omega, Complex z, const EvalOptions &options);

/// Weierstrass p-function of the lattice omega.
CertifiedValue wp_lattice(const Lattice &omega, Complex z, const EvalOptions &options = {});
/// wp(tau Z + Z, z), with z reduced into the period cell centered at 0 first.
CertifiedValue wp(const TauLattice &tau, Complex z, const EvalOptions &options = {});

/// Weierstrass zeta-function of the lattice omega (no reduction of z).
CertifiedValue wzeta_lattice(const Lattice &omega, Complex z, const EvalOptions &options = {});
/// zeta(tau Z + Z, z) evaluated at z0 = z - m tau - n and corrected by m eta1 + n eta2.
CertifiedValue wzeta(const TauLattice &tau, Complex z, const EvalOptions &options = {});

struct QuasiPeriods
{
    /// zeta(z + tau) - zeta(z)
    CertifiedValue eta1;
    /// zeta(z + 1) - zeta(z)
    CertifiedValue eta2;
};

/// Quasi-periods from differences of zeta at two base points. Throws
/// precision_error if the two base points disagree beyond 4 tol plus the bounds.
QuasiPeriods eta12(const TauLattice &tau, const EvalOptions &options = {});

} // namespace weier

#endif
