#include "weier/forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weier
{

namespace
{

struct Centered
{
    RationalPair reduced;
    std::int64_t m;
    std::int64_t n;
};

// (s, t) = (s0 + m, t0 + n) with s0, t0 in [-1/2, 1/2).
Centered center(const RationalPair &p)
{
    const BigRational half(1, 2);
    const BigInt m = floor(p.s + half);
    const BigInt n = floor(p.t + half);
    return {{p.s - BigRational(m), p.t - BigRational(n)}, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)};
}

void require_label(const RationalPair &p, const char *what)
{
    if (p.is_integral()) {
        throw domain_error(std::string(what) + ": label " + p.str() + " lies in Z^2");
    }
}

bool divides(const BigInt &L, const BigInt &x)
{
    return x % L == 0;
}

void require_level(const BigInt &L)
{
    if (L < 1) {
        throw domain_error("congruence level must be a positive integer");
    }
}

double tighter(double tol, double factor)
{
    return std::max(tol / factor, min_tolerance);
}

} // namespace

RationalPair RationalPair::parse(std::string_view s, std::string_view t)
{
    return {parse_rational(s), parse_rational(t)};
}

RationalPair RationalPair::canonical() const
{
    return {s - BigRational(floor(s)), t - BigRational(floor(t))};
}

Complex RationalPair::point(Complex tau) const
{
    return to_double(s) * tau + to_double(t);
}

std::string RationalPair::str() const
{
    return "(" + to_string(s) + "," + to_string(t) + ")";
}

ModularMatrix::ModularMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : m_a(std::move(a)), m_b(std::move(b)), m_c(std::move(c)), m_d(std::move(d))
{
    if (m_a * m_d - m_b * m_c != 1) {
        throw domain_error("matrix " + str() + " does not have determinant 1");
    }
}

Complex ModularMatrix::act(Complex tau) const
{
    return (to_double(m_a) * tau + to_double(m_b)) / automorphy(tau);
}

Complex ModularMatrix::automorphy(Complex tau) const
{
    return to_double(m_c) * tau + to_double(m_d);
}

BigInt ModularMatrix::max_entry() const
{
    return std::max({abs(m_a), abs(m_b), abs(m_c), abs(m_d)});
}

std::string ModularMatrix::str() const
{
    return "(" + m_a.str() + "," + m_b.str() + ";" + m_c.str() + "," + m_d.str() + ")";
}

ModularMatrix operator*(const ModularMatrix &x, const ModularMatrix &y)
{
    return {x.m_a * y.m_a + x.m_b * y.m_c, x.m_a * y.m_b + x.m_b * y.m_d, x.m_c * y.m_a + x.m_d * y.m_c,
            x.m_c * y.m_b + x.m_d * y.m_d};
}

RationalPair pair_act(const RationalPair &p, const ModularMatrix &A)
{
    return {p.s * BigRational(A.a()) + p.t * BigRational(A.c()), p.s * BigRational(A.b()) + p.t * BigRational(A.d())};
}

bool gamma_st_contains(const RationalPair &p, const ModularMatrix &A)
{
    return (pair_act(p, A) - p).is_integral();
}

bool principal_congruence_contains(const BigInt &L, const ModularMatrix &A)
{
    require_level(L);
    return divides(L, A.a() - 1) && divides(L, A.b()) && divides(L, A.c()) && divides(L, A.d() - 1);
}

bool hecke_contains(const BigInt &L, const ModularMatrix &A, Convention convention)
{
    require_level(L);
    return divides(L, convention == Convention::paper_b ? A.b() : A.c());
}

bool gamma1_contains(const BigInt &L, const ModularMatrix &A, Convention convention)
{
    require_level(L);
    return divides(L, A.a() - 1) && divides(L, A.d() - 1) && hecke_contains(L, A, convention);
}

FormSpec::FormSpec(Kind kind) : m_kind(std::move(kind)), m_weight(0)
{
    std::visit(
        [this](const auto &form) {
            using F = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<F, WpForm>) {
                require_label(form.label, "f");
                m_weight = 2;
            } else if constexpr (std::is_same_v<F, ZetaForm>) {
                require_label(form.label, "g");
                m_weight = 1;
            } else if constexpr (std::is_same_v<F, HForm>) {
                if (form.r == 0) {
                    throw domain_error("h: r must be nonzero");
                }
                require_label(BigInt(form.r) * form.label, "h (r s, r t)");
                m_weight = 1;
            } else {
                if (form.labels.empty()) {
                    throw domain_error("h_U: U must be nonempty");
                }
                RationalPair total(0, 0);
                for (const auto &u : form.labels) {
                    require_label(u, "h_U");
                    total = total + u;
                }
                if (!(total == RationalPair(0, 0))) {
                    throw domain_error("h_U: labels sum to " + total.str() + ", not (0,0)");
                }
                m_weight = 1;
            }
        },
        m_kind);
}

BigInt FormSpec::level() const
{
    return std::visit(
        [](const auto &form) -> BigInt {
            using F = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<F, HUForm>) {
                BigInt L = 1;
                for (const auto &u : form.labels) {
                    L = boost::multiprecision::lcm(L, u.level());
                }
                return L;
            } else {
                return form.label.level();
            }
        },
        m_kind);
}

bool FormSpec::invariance_group_contains(const ModularMatrix &A) const
{
    return std::visit(
        [&A](const auto &form) {
            using F = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<F, HUForm>) {
                return std::all_of(form.labels.begin(), form.labels.end(),
                                   [&A](const RationalPair &u) { return gamma_st_contains(u, A); });
            } else {
                return gamma_st_contains(form.label, A);
            }
        },
        m_kind);
}

std::string FormSpec::str() const
{
    return std::visit(
        [](const auto &form) -> std::string {
            using F = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<F, WpForm>) {
                return "f" + form.label.str();
            } else if constexpr (std::is_same_v<F, ZetaForm>) {
                return "g" + form.label.str();
            } else if constexpr (std::is_same_v<F, HForm>) {
                return "h" + std::to_string(form.r) + form.label.str();
            } else {
                std::string out = "hU{";
                for (std::size_t i = 0; i < form.labels.size(); ++i) {
                    out += (i ? "," : "") + form.labels[i].str();
                }
                return out + "}";
            }
        },
        m_kind);
}

CertifiedValue eval_f(const RationalPair &p, Complex tau, const EvalOptions &options)
{
    require_label(p, "f");
    return wp(TauLattice(tau), p.canonical().point(tau), options);
}

CertifiedValue eval_g(const RationalPair &p, Complex tau, const EvalOptions &options)
{
    require_label(p, "g");
    const TauLattice lattice(tau);
    const Centered c = center(p);
    const Complex z0 = c.reduced.point(tau);
    if (c.m == 0 && c.n == 0) {
        return wzeta_lattice(lattice.lattice(), z0, options);
    }
    // g_(s0+m, t0+n) = g_(s0,t0) + m eta1 + n eta2
    EvalOptions base = options;
    base.tol = tighter(options.tol, 2.0);
    EvalOptions eta_options = options;
    eta_options.tol = tighter(options.tol, 2.0 * static_cast<double>(std::abs(c.m) + std::abs(c.n)));
    const QuasiPeriods eta = eta12(lattice, eta_options);
    return wzeta_lattice(lattice.lattice(), z0, base) + Complex(static_cast<double>(c.m)) * eta.eta1 +
           Complex(static_cast<double>(c.n)) * eta.eta2;
}

CertifiedValue eval_h(std::int64_t r, const RationalPair &p, Complex tau, const EvalOptions &options)
{
    const FormSpec spec = FormSpec::h(r, p);
    EvalOptions each = options;
    each.tol = tighter(options.tol, static_cast<double>(std::abs(r) + 1));
    // r = 1 gives g - g, which is exactly zero since both evaluations are identical.
    return Complex(static_cast<double>(r)) * eval_g(p, tau, each) - eval_g(BigInt(r) * p, tau, each);
}

CertifiedValue eval_hU(const std::vector<RationalPair> &labels, Complex tau, const EvalOptions &options)
{
    const FormSpec spec = FormSpec::hU(labels);
    EvalOptions each = options;
    each.tol = tighter(options.tol, static_cast<double>(labels.size()));
    CertifiedValue total(0.0, 0.0);
    for (const auto &u : labels) {
        total = total + eval_g(u, tau, each);
    }
    return total;
}

CertifiedValue evaluate(const FormSpec &form, Complex tau, const EvalOptions &options)
{
    return std::visit(
        [&](const auto &f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, WpForm>) {
                return eval_f(f.label, tau, options);
            } else if constexpr (std::is_same_v<F, ZetaForm>) {
                return eval_g(f.label, tau, options);
            } else if constexpr (std::is_same_v<F, HForm>) {
                return eval_h(f.r, f.label, tau, options);
            } else {
                return eval_hU(f.labels, tau, options);
            }
        },
        form.kind());
}

CertifiedValue slash(const FormEvaluator &form, int k, const ModularMatrix &A, Complex tau, double tol)
{
    if (!(tau.imag() > 0.0)) {
        throw domain_error("slash: tau must lie in the upper half plane");
    }
    const Complex j = A.automorphy(tau);
    const double inner_tol = std::max(tol * std::min(1.0, std::pow(std::abs(j), k)), min_tolerance);
    const CertifiedValue value = form(A.act(tau), inner_tol);
    return value / std::pow(j, k);
}

CertifiedValue slash(const FormSpec &form, const ModularMatrix &A, Complex tau, const EvalOptions &options)
{
    return slash(
        [&](Complex t, double tol) {
            EvalOptions inner = options;
            inner.tol = tol;
            return evaluate(form, t, inner);
        },
        form.weight(), A, tau, options.tol);
}

ModularMatrix random_modular_matrix(std::mt19937_64 &rng, int max_entry)
{
    static const ModularMatrix generators[] = {ModularMatrix::S(), ModularMatrix::T(), ModularMatrix::T().inverse()};
    std::uniform_int_distribution<int> length(1, 12);
    std::uniform_int_distribution<int> pick(0, 2);
    ModularMatrix M = ModularMatrix::identity();
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
        ModularMatrix next = M * generators[pick(rng)];
        if (next.max_entry() > max_entry) {
            break;
        }
        M = std::move(next);
    }
    return M;
}

ModularMatrix random_subgroup_element(std::mt19937_64 &rng, const std::function<bool(const ModularMatrix &)> &member,
                                      const BigInt &level, int max_entry)
{
    for (int attempt = 0; attempt < 20000; ++attempt) {
        ModularMatrix A = random_modular_matrix(rng, max_entry);
        if (A.c() != 0 && member(A)) {
            return A;
        }
    }
    const ModularMatrix up(1, level, 0, 1);
    const ModularMatrix low(1, 0, level, 1);
    const ModularMatrix words[] = {up, up.inverse(), low, low.inverse()};
    std::uniform_int_distribution<int> pick(0, 3);
    ModularMatrix M = std::uniform_int_distribution<int>(0, 1)(rng) ? low : low.inverse();
    for (int i = 0; i < 4; ++i) {
        ModularMatrix next = M * words[pick(rng)];
        if (next.max_entry() > std::max<BigInt>(max_entry, level * level + 1) || next.c() == 0) {
            continue;
        }
        M = std::move(next);
    }
    if (!member(M)) {
        throw std::logic_error("Gamma(L) element outside the requested subgroup: " + M.str());
    }
    return M;
}

} // namespace weier
