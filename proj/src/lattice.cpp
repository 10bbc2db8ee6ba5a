#include "weier/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace weier
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi2 = pi * pi;
// Relative distance to the lattice below which an argument counts as a pole.
constexpr double pole_radius = 1e-8;

// Im(conj(a) b), the oriented area spanned by a and b.
double cross(Complex a, Complex b)
{
    return a.real() * b.imag() - a.imag() * b.real();
}

double segment_distance(Complex p, Complex q)
{
    const Complex dir = q - p;
    const double len2 = std::norm(dir);
    double t = len2 > 0.0 ? -(p.real() * dir.real() + p.imag() * dir.imag()) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p + t * dir);
}

void check_options(const EvalOptions &options)
{
    if (!(options.tol >= min_tolerance)) {
        throw domain_error("tolerance must be >= 1e-12");
    }
    if (options.shell_cap < 1) {
        throw domain_error("shell cap must be positive");
    }
}

// Both helpers take w and evaluate at pi w. Re w is reduced first (period 1),
// and far from the real axis the exponential forms avoid overflow in sin/cos.
Complex csc2_pi(Complex w)
{
    const Complex u = pi * Complex(w.real() - std::round(w.real()), w.imag());
    if (std::abs(u.imag()) < 20.0) {
        const Complex s = std::sin(u);
        return 1.0 / (s * s);
    }
    const Complex q = u.imag() > 0 ? std::exp(Complex(0, 2) * u) : std::exp(Complex(0, -2) * u);
    return -4.0 * q / ((1.0 - q) * (1.0 - q));
}

Complex cot_pi(Complex w)
{
    const Complex u = pi * Complex(w.real() - std::round(w.real()), w.imag());
    if (std::abs(u.imag()) < 20.0) {
        return std::cos(u) / std::sin(u);
    }
    const Complex i(0, 1);
    if (u.imag() > 0) {
        const Complex q = std::exp(2.0 * i * u);
        return -i - 2.0 * i * q / (1.0 - q);
    }
    const Complex q = std::exp(-2.0 * i * u);
    return i + 2.0 * i * q / (1.0 - q);
}

Complex check_pole(const Lattice &omega, Complex z);

// Bounds |F(omega) + F(-omega)| <= K / |omega|^4 for both kernels once |z / omega| <= 1/2.
double paired_majorant(double z_bound)
{
    return std::max(2.0 * 3.25 / 0.5625 * z_bound * z_bound, 2.0 / 0.75 * z_bound * z_bound * z_bound);
}

enum class Kernel
{
    wp,
    zeta
};

// Tail of the row sum beyond row pair C: rows c > C all satisfy
// |terms| <= A(rho_c) rho_c with rho_c = exp(-2 pi (c Y - |y|)) geometric in c.
double row_tail(Kernel kernel, double Y, double y_abs, double w_abs, std::int64_t C)
{
    const double rho = std::exp(-2.0 * pi * (static_cast<double>(C + 1) * Y - y_abs));
    if (!(rho < 0.5)) {
        return std::numeric_limits<double>::infinity();
    }
    const double geometric = 1.0 / (1.0 - std::exp(-2.0 * pi * Y));
    if (kernel == Kernel::wp) {
        // 4 csc^2 terms, each <= 4 rho / (1 - rho)^2
        return 16.0 * pi2 * rho / ((1.0 - rho) * (1.0 - rho)) * geometric;
    }
    // cot pair <= 4 rho / (1 - rho); 2 w pi^2 csc^2(pi c tau) <= 8 pi^2 |w| rho / (1 - rho)^2
    return (4.0 * pi + 8.0 * pi2 * w_abs / (1.0 - rho)) * rho / (1.0 - rho) * geometric;
}

// Series for the normalized lattice tau Z + Z summed row by row. Row 0 and each
// pair of rows +-c are summed over d in closed form (pi^2 csc^2, pi cot).
SeriesResult rows_sum(Kernel kernel, Complex tau, Complex w, double tail_target, std::int64_t cap)
{
    const double Y = tau.imag();
    const double y_abs = std::abs(w.imag());
    const double w_abs = std::abs(w);

    std::int64_t C = 0;
    double tail = row_tail(kernel, Y, y_abs, w_abs, C);
    while (tail > tail_target) {
        if (++C > cap) {
            throw precision_error("row truncation exceeds cap " + std::to_string(cap));
        }
        tail = row_tail(kernel, Y, y_abs, w_abs, C);
    }

    Complex sum;
    double mag = 0.0;
    auto add = [&](Complex term, Complex arg) {
        sum += term;
        mag += std::abs(term) * (2.0 + pi * std::abs(arg));
    };
    if (kernel == Kernel::wp) {
        add(pi2 * csc2_pi(w), w);
        add(-pi2 / 3.0, 0.0);
        for (std::int64_t c = 1; c <= C; ++c) {
            const Complex ct = static_cast<double>(c) * tau;
            add(pi2 * csc2_pi(w - ct), w - ct);
            add(pi2 * csc2_pi(w + ct), w + ct);
            add(-2.0 * pi2 * csc2_pi(ct), ct);
        }
    } else {
        add(pi * cot_pi(w), w);
        add(w * (pi2 / 3.0), 0.0);
        for (std::int64_t c = 1; c <= C; ++c) {
            const Complex ct = static_cast<double>(c) * tau;
            add(pi * cot_pi(w - ct), w - ct);
            add(pi * cot_pi(w + ct), w + ct);
            add(2.0 * pi2 * w * csc2_pi(ct), ct);
        }
    }
    const double rounding = static_cast<double>(4 * C + 16) * eps * mag;
    TruncationPlan plan;
    plan.shell_radius = C;
    plan.tail_bound = tail;
    plan.method = SumMethod::rows;
    return {CertifiedValue(sum, tail + rounding), plan};
}

// Third-line summands of the absolutely convergent series.
Complex wp_summand(Complex z, Complex omega)
{
    const Complex x = z / omega;
    const Complex one_minus = 1.0 - x;
    return (2.0 - x) * z / (one_minus * one_minus) / (omega * omega * omega);
}

Complex zeta_summand(Complex z, Complex omega)
{
    const Complex x = z / omega;
    return -(z * z) / (1.0 - x) / (omega * omega * omega);
}

SeriesResult shells_sum(Kernel kernel, const Lattice &basis, Complex z, const TruncationPlan &plan)
{
    const Complex w1 = basis.omega1();
    const Complex w2 = basis.omega2();
    const auto summand = kernel == Kernel::wp ? wp_summand : zeta_summand;

    Complex total = kernel == Kernel::wp ? 1.0 / (z * z) : 1.0 / z;
    double mag = std::abs(total);
    for (std::int64_t n = 1; n <= plan.shell_radius; ++n) {
        // One representative of each +-omega pair on the shell max(|c|, |d|) = n.
        Complex shell;
        auto pair = [&](std::int64_t c, std::int64_t d) {
            const Complex omega = static_cast<double>(c) * w1 + static_cast<double>(d) * w2;
            const Complex a = summand(z, omega);
            const Complex b = summand(z, -omega);
            shell += a + b;
            mag += std::abs(a) + std::abs(b);
        };
        for (std::int64_t c = -n; c <= n; ++c) {
            pair(c, n);
        }
        for (std::int64_t d = -n + 1; d < n; ++d) {
            pair(n, d);
        }
        total += shell;
    }
    const double rounding = (9.0 * static_cast<double>(plan.shell_radius) + 16.0) * eps * mag;
    return {CertifiedValue(total, plan.tail_bound + rounding), plan};
}

SeriesResult shells_sum(Kernel kernel, const Lattice &basis, Complex z, double tol, std::int64_t cap)
{
    return shells_sum(kernel, basis, z, plan_truncation(basis, std::abs(z), 4, tol, cap));
}

SeriesResult shells_at_radius(Kernel kernel, const Lattice &omega, Complex z, std::int64_t radius)
{
    check_pole(omega, z);
    TruncationPlan plan = plan_truncation(omega, std::abs(z), 4, std::numeric_limits<double>::infinity());
    if (radius < plan.shell_radius) {
        throw domain_error("shell radius " + std::to_string(radius) + " is inside the 1/2 margin");
    }
    const double K = paired_majorant(std::abs(z));
    const double N = static_cast<double>(radius);
    plan.shell_radius = radius;
    plan.tail_bound = 2.0 * K / (std::pow(plan.shell_constant, 4) * N * N);
    return shells_sum(kernel, omega, z, plan);
}

Complex check_pole(const Lattice &omega, Complex z)
{
    const Complex nearest = omega.nearest_point(z);
    if (std::abs(z - nearest) < pole_radius * omega.shell_constant()) {
        throw pole_error("argument lies on the lattice (pole)", nearest);
    }
    return nearest;
}

std::pair<std::int64_t, std::int64_t> tau_cell_shift(Complex tau, Complex z)
{
    const double m = std::round(z.imag() / tau.imag());
    const double n = std::round((z - m * tau).real());
    return {static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)};
}

} // namespace

Lattice::Lattice(Complex omega1, Complex omega2) : m_omega1(omega1), m_omega2(omega2)
{
    const bool finite = std::isfinite(omega1.real()) && std::isfinite(omega1.imag()) &&
                        std::isfinite(omega2.real()) && std::isfinite(omega2.imag());
    if (!finite || omega1 == 0.0 || omega2 == 0.0) {
        throw domain_error("lattice generators must be finite and nonzero");
    }
    const double orient = cross(omega2, omega1);
    if (std::abs(orient) <= 1e-14 * std::abs(omega1) * std::abs(omega2)) {
        throw domain_error("lattice generators are R-linearly dependent");
    }
    if (orient < 0) {
        m_omega1 = -m_omega1;
    }
}

std::array<std::int64_t, 4> Lattice::reduction_matrix() const
{
    // Rows hold the integer coordinates of b1, b2 in the (omega1, omega2) basis.
    std::array<std::int64_t, 2> c1{1, 0}, c2{0, 1};
    Complex b1 = m_omega1, b2 = m_omega2;
    for (int iter = 0; iter < 10000; ++iter) {
        if (std::norm(b1) < std::norm(b2)) {
            std::swap(b1, b2);
            std::swap(c1, c2);
        }
        const double mu = (b1 * std::conj(b2)).real() / std::norm(b2);
        const auto m = static_cast<std::int64_t>(std::llround(mu));
        if (m == 0) {
            break;
        }
        c1[0] -= m * c2[0];
        c1[1] -= m * c2[1];
        b1 = static_cast<double>(c1[0]) * m_omega1 + static_cast<double>(c1[1]) * m_omega2;
    }
    if (cross(b2, b1) < 0) {
        c1[0] = -c1[0];
        c1[1] = -c1[1];
    }
    return {c1[0], c1[1], c2[0], c2[1]};
}

Lattice Lattice::reduced() const
{
    const auto m = reduction_matrix();
    const Complex b1 = static_cast<double>(m[0]) * m_omega1 + static_cast<double>(m[1]) * m_omega2;
    const Complex b2 = static_cast<double>(m[2]) * m_omega1 + static_cast<double>(m[3]) * m_omega2;
    return Lattice(b1, b2);
}

double Lattice::shell_constant() const
{
    // The unit square boundary maps to two segments and their negatives.
    const double edge_c = segment_distance(m_omega1 - m_omega2, m_omega1 + m_omega2);
    const double edge_d = segment_distance(m_omega2 - m_omega1, m_omega1 + m_omega2);
    return std::min(edge_c, edge_d);
}

Complex Lattice::nearest_point(Complex z) const
{
    const Lattice r = reduced();
    const Complex b1 = r.omega1(), b2 = r.omega2();
    const double alpha = cross(b2, z) / cross(b2, b1);
    const double beta = cross(b1, z) / cross(b1, b2);
    const double m0 = std::round(alpha), n0 = std::round(beta);
    Complex best = m0 * b1 + n0 * b2;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const Complex p = (m0 + i) * b1 + (n0 + j) * b2;
            if (std::abs(z - p) < std::abs(z - best)) {
                best = p;
            }
        }
    }
    return best;
}

TauLattice::TauLattice(Complex tau) : m_tau(tau)
{
    if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
        throw domain_error("tau must lie in the upper half plane");
    }
}

TruncationPlan plan_truncation(const Lattice &omega, double z_bound, int k, double tol, std::int64_t shell_cap)
{
    if (k != 3 && k != 4) {
        throw domain_error("plan_truncation: majorant order k must be 3 or 4");
    }
    if (!(z_bound >= 0.0) || !(tol > 0.0)) {
        throw domain_error("plan_truncation: need z_bound >= 0 and tol > 0");
    }
    const double delta = omega.shell_constant();
    // Beyond this shell |z / omega| <= 1/2.
    const auto margin = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(2.0 * z_bound / delta)));

    // Majorants at |z / omega| <= 1/2, covering both the p- and zeta-summands.
    double needed;
    auto bound_at = [&](double N) {
        if (k == 3) {
            const double C3 = std::max(10.0 * z_bound, 2.0 * z_bound * z_bound);
            return 8.0 * C3 / (delta * delta * delta * N);
        }
        const double K = paired_majorant(z_bound);
        return 2.0 * K / (std::pow(delta, 4) * N * N);
    };
    if (std::isinf(tol)) {
        needed = static_cast<double>(margin);
    } else if (k == 3) {
        needed = std::ceil(bound_at(1.0) / tol);
    } else {
        needed = std::ceil(std::sqrt(bound_at(1.0) / tol));
    }
    needed = std::max(needed, static_cast<double>(margin));
    if (needed > static_cast<double>(shell_cap)) {
        throw precision_error("tolerance unreachable: needs shell radius " + std::to_string(needed) +
                              " > cap " + std::to_string(shell_cap));
    }
    TruncationPlan plan;
    plan.shell_radius = static_cast<std::int64_t>(needed);
    plan.tail_bound = bound_at(needed);
    plan.shell_constant = delta;
    plan.method = SumMethod::shells;
    return plan;
}

SeriesResult wp_shell_sum(const Lattice &omega, Complex z, std::int64_t radius)
{
    return shells_at_radius(Kernel::wp, omega, z, radius);
}

SeriesResult wzeta_shell_sum(const Lattice &omega, Complex z, std::int64_t radius)
{
    return shells_at_radius(Kernel::zeta, omega, z, radius);
}

SeriesResult wp_lattice_detailed(const Lattice &omega, Complex z, const EvalOptions &options)
{
    check_options(options);
    const Lattice basis = omega.reduced();
    const Complex z0 = z - check_pole(basis, z);
    SeriesResult result;
    if (options.method == SumMethod::shells) {
        result = shells_sum(Kernel::wp, basis, z0, options.tol / 2, options.shell_cap);
    } else {
        const Complex u2 = basis.omega2();
        const double scale = std::norm(u2);
        result = rows_sum(Kernel::wp, basis.tau(), z0 / u2, options.tol / 2 * scale, options.shell_cap);
        result.value = result.value / (u2 * u2);
        result.plan.tail_bound /= scale;
    }
    result.plan.shell_constant = basis.shell_constant();
    return result;
}

SeriesResult wzeta_lattice_detailed(const Lattice &omega, Complex z, const EvalOptions &options)
{
    check_options(options);
    const Lattice basis = omega.reduced();
    check_pole(basis, z);
    SeriesResult result;
    if (options.method == SumMethod::shells) {
        result = shells_sum(Kernel::zeta, basis, z, options.tol / 2, options.shell_cap);
    } else {
        const Complex u2 = basis.omega2();
        const double scale = std::abs(u2);
        result = rows_sum(Kernel::zeta, basis.tau(), z / u2, options.tol / 2 * scale, options.shell_cap);
        result.value = result.value / u2;
        result.plan.tail_bound /= scale;
    }
    result.plan.shell_constant = basis.shell_constant();
    return result;
}

CertifiedValue wp_lattice(const Lattice &omega, Complex z, const EvalOptions &options)
{
    return wp_lattice_detailed(omega, z, options).value;
}

CertifiedValue wp(const TauLattice &tau, Complex z, const EvalOptions &options)
{
    const auto [m, n] = tau_cell_shift(tau.tau(), z);
    const Complex shift = static_cast<double>(m) * tau.tau() + static_cast<double>(n);
    try {
        return wp_lattice(tau.lattice(), z - shift, options);
    } catch (const pole_error &e) {
        throw pole_error(e.what(), e.nearest() + shift);
    }
}

CertifiedValue wzeta_lattice(const Lattice &omega, Complex z, const EvalOptions &options)
{
    return wzeta_lattice_detailed(omega, z, options).value;
}

CertifiedValue wzeta(const TauLattice &tau, Complex z, const EvalOptions &options)
{
    const auto [m, n] = tau_cell_shift(tau.tau(), z);
    const Complex z0 = z - static_cast<double>(m) * tau.tau() - static_cast<double>(n);
    check_pole(tau.lattice(), z);
    if (m == 0 && n == 0) {
        return wzeta_lattice(tau.lattice(), z0, options);
    }
    EvalOptions half = options;
    half.tol = std::max(options.tol / 2, min_tolerance);
    EvalOptions eta_options = options;
    eta_options.tol = std::max(options.tol / static_cast<double>(2 * (std::abs(m) + std::abs(n))), min_tolerance);
    const QuasiPeriods eta = eta12(tau, eta_options);
    return wzeta_lattice(tau.lattice(), z0, half) + Complex(static_cast<double>(m)) * eta.eta1 +
           Complex(static_cast<double>(n)) * eta.eta2;
}

QuasiPeriods eta12(const TauLattice &tau, const EvalOptions &options)
{
    check_options(options);
    const Lattice omega = tau.lattice();
    EvalOptions quarter = options;
    quarter.tol = std::max(options.tol / 4, min_tolerance);
    auto at = [&](Complex base) {
        const CertifiedValue z0 = wzeta_lattice(omega, base, quarter);
        return QuasiPeriods{wzeta_lattice(omega, base + tau.tau(), quarter) - z0,
                            wzeta_lattice(omega, base + 1.0, quarter) - z0};
    };
    const QuasiPeriods first = at(0.31 * tau.tau() + 0.23);
    const QuasiPeriods second = at(0.17 * tau.tau() + 0.41);
    auto agree = [&](const CertifiedValue &a, const CertifiedValue &b) {
        return std::abs(a.value - b.value) <= 4.0 * options.tol + a.error + b.error;
    };
    if (!agree(first.eta1, second.eta1) || !agree(first.eta2, second.eta2)) {
        throw precision_error("quasi-periods depend on the base point beyond the certified bound");
    }
    return first;
}

} // namespace weier
