#ifndef WEIER_FORMS_HPP
#define WEIER_FORMS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "weier/arith.hpp"
#include "weier/lattice.hpp"

namespace weier
{

/// Exact rational pair (s, t); as a form label it selects the point s tau + t.
///
/// The constructor does not reduce modulo Z^2: the zeta-based forms are only
/// quasi-periodic in the label, so the raw representative matters.
struct RationalPair
{
    BigRational s;
    BigRational t;

    RationalPair() = default;
    RationalPair(BigRational s_, BigRational t_) : s(std::move(s_)), t(std::move(t_)) {}

    static RationalPair parse(std::string_view s, std::string_view t);

    bool is_integral() const { return is_integer(s) && is_integer(t); }
    /// Common denominator L of s and t.
    BigInt level() const { return common_denominator(s, t); }
    /// Representative with 0 <= s, t < 1.
    RationalPair canonical() const;
    Complex point(Complex tau) const;
    std::string str() const;

    friend RationalPair operator+(const RationalPair &a, const RationalPair &b) { return {a.s + b.s, a.t + b.t}; }
    friend RationalPair operator-(const RationalPair &a, const RationalPair &b) { return {a.s - b.s, a.t - b.t}; }
    friend RationalPair operator*(const BigInt &r, const RationalPair &p)
    {
        return {BigRational(r) * p.s, BigRational(r) * p.t};
    }
    friend bool operator==(const RationalPair &a, const RationalPair &b) { return a.s == b.s && a.t == b.t; }
};

/// Element (a b; c d) of SL(2, Z).
class ModularMatrix
{
public:
    ModularMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

    static ModularMatrix identity() { return {1, 0, 0, 1}; }
    /// S = (0 -1; 1 0)
    static ModularMatrix S() { return {0, -1, 1, 0}; }
    /// T = (1 1; 0 1)
    static ModularMatrix T() { return {1, 1, 0, 1}; }

    const BigInt &a() const { return m_a; }
    const BigInt &b() const { return m_b; }
    const BigInt &c() const { return m_c; }
    const BigInt &d() const { return m_d; }

    ModularMatrix inverse() const { return {m_d, -m_b, -m_c, m_a}; }
    /// (a tau + b) / (c tau + d)
    Complex act(Complex tau) const;
    /// c tau + d
    Complex automorphy(Complex tau) const;
    /// Largest absolute entry.
    BigInt max_entry() const;
    std::string str() const;

    friend ModularMatrix operator*(const ModularMatrix &x, const ModularMatrix &y);
    friend bool operator==(const ModularMatrix &x, const ModularMatrix &y) = default;

private:
    BigInt m_a, m_b, m_c, m_d;
};

/// Right action (s, t) A = (s a + t c, s b + t d), with no reduction mod Z^2.
RationalPair pair_act(const RationalPair &p, const ModularMatrix &A);

/// A in Gamma_(s,t), i.e. (s, t) A - (s, t) in Z^2.
bool gamma_st_contains(const RationalPair &p, const ModularMatrix &A);

/// Which entry the level-L Hecke-type conditions constrain.
enum class Convention
{
    /// b = 0 mod L.
    paper_b,
    /// c = 0 mod L, the usual Gamma_0 / Gamma_1.
    standard_c
};

bool principal_congruence_contains(const BigInt &L, const ModularMatrix &A);
bool hecke_contains(const BigInt &L, const ModularMatrix &A, Convention convention = Convention::paper_b);
bool gamma1_contains(const BigInt &L, const ModularMatrix &A, Convention convention = Convention::paper_b);

// Forms.

struct WpForm
{
    RationalPair label;
};
struct ZetaForm
{
    RationalPair label;
};
struct HForm
{
    std::int64_t r;
    RationalPair label;
};
struct HUForm
{
    std::vector<RationalPair> labels;
};

/// Tagged form description. The constructor validates the label constraints and
/// the weight travels with the form, so slashing with the wrong weight is impossible.
class FormSpec
{
public:
    using Kind = std::variant<WpForm, ZetaForm, HForm, HUForm>;

    explicit FormSpec(Kind kind);

    static FormSpec wp(RationalPair p) { return FormSpec(WpForm{std::move(p)}); }
    static FormSpec zeta(RationalPair p) { return FormSpec(ZetaForm{std::move(p)}); }
    static FormSpec h(std::int64_t r, RationalPair p) { return FormSpec(HForm{r, std::move(p)}); }
    static FormSpec hU(std::vector<RationalPair> labels) { return FormSpec(HUForm{std::move(labels)}); }

    const Kind &kind() const { return m_kind; }
    int weight() const { return m_weight; }
    /// Level L with Gamma(L) contained in the invariance group.
    BigInt level() const;
    /// Membership in the group the form is (quasi-)invariant under:
    /// Gamma_(s,t) for f, g, h and Gamma_U for h_U.
    bool invariance_group_contains(const ModularMatrix &A) const;
    std::string str() const;

private:
    Kind m_kind;
    int m_weight;
};

/// f_(s,t)(tau) = wp(tau, s tau + t); the label is reduced to [0,1)^2 first.
CertifiedValue eval_f(const RationalPair &p, Complex tau, const EvalOptions &options = {});
/// g_(s,t)(tau) = zeta(tau, s tau + t), using the raw label.
CertifiedValue eval_g(const RationalPair &p, Complex tau, const EvalOptions &options = {});
/// h_{r,(s,t)} = r g_(s,t) - g_(rs,rt).
CertifiedValue eval_h(std::int64_t r, const RationalPair &p, Complex tau, const EvalOptions &options = {});
/// h_U = sum of g_u over U, requiring sum U = (0, 0).
CertifiedValue eval_hU(const std::vector<RationalPair> &labels, Complex tau, const EvalOptions &options = {});

CertifiedValue evaluate(const FormSpec &form, Complex tau, const EvalOptions &options = {});

using FormEvaluator = std::function<CertifiedValue(Complex tau, double tol)>;

/// (F |_k A)(tau) = (c tau + d)^(-k) F(A tau).
CertifiedValue slash(const FormEvaluator &form, int k, const ModularMatrix &A, Complex tau, double tol);
CertifiedValue slash(const FormSpec &form, const ModularMatrix &A, Complex tau, const EvalOptions &options = {});

// Sampling for the property harness.

/// Random word in S, T, T^-1 with all entries bounded by max_entry.
ModularMatrix random_modular_matrix(std::mt19937_64 &rng, int max_entry);

/// Rejection sample from bounded words, keeping elements with c != 0 that satisfy
/// member. Falls back to words in T^L and (1 0; L 1), which lie in Gamma(L).
ModularMatrix random_subgroup_element(std::mt19937_64 &rng, const std::function<bool(const ModularMatrix &)> &member,
                                      const BigInt &level, int max_entry);

} // namespace weier

#endif
