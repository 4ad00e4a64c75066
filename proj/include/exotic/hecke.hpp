#pragma once

// The affine Hecke algebra of type C_n^(1) with parameters q0, q1, q2, realized
// on the group algebra A[T] (A = Q[q0^+-1, q1^+-1, q2^+-1]).
//
// Two generator families act on A[T]:
//   basic      T_i      (Demazure-Lusztig operators)
//   geometric  T~_i     (classes of the closures of the codimension-one orbits)
// and theta_transport(i) rewrites T_i as T~_i plus a multiplication operator.
// Identities in the algebra are checked as identities of operators; the action
// is faithful, so nothing else is needed.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotic/error.hpp"
#include "exotic/parallel.hpp"
#include "exotic/scalars.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

class GroupAlgebraElement {
public:
    using TermMap = std::map<Weight, ParamPolynomial>;

    GroupAlgebraElement() = default;

    static GroupAlgebraElement monomial(const Weight& lambda, const ParamPolynomial& c = ParamPolynomial::one())
    {
        GroupAlgebraElement f;
        f.add_term(lambda, c);
        return f;
    }
    static GroupAlgebraElement constant(int n, const ParamPolynomial& c)
    {
        return monomial(Weight::zero(n), c);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ParamPolynomial coefficient(const Weight& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? ParamPolynomial() : it->second;
    }

    void add_term(const Weight& lambda, const ParamPolynomial& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o)
    {
        if (&o == this) {
            GroupAlgebraElement copy = o;
            return *this += copy;
        }
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o)
    {
        if (&o == this) {
            terms_.clear();
            return *this;
        }
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }
    GroupAlgebraElement& operator*=(const ParamPolynomial& p)
    {
        if (p.is_zero()) {
            terms_.clear();
            return *this;
        }
        TermMap out;
        for (auto& [l, c] : terms_) {
            ParamPolynomial v = c * p;
            if (!v.is_zero()) out.emplace(l, std::move(v));
        }
        terms_ = std::move(out);
        return *this;
    }
    // Multiplication by e^mu.
    GroupAlgebraElement shifted(const Weight& mu) const
    {
        GroupAlgebraElement r;
        for (const auto& [l, c] : terms_) r.terms_.emplace(l + mu, c);
        return r;
    }
    GroupAlgebraElement operator-() const
    {
        GroupAlgebraElement r = *this;
        for (auto& [l, c] : r.terms_) c = -c;
        return r;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const ParamPolynomial& p) { return a *= p; }
    friend GroupAlgebraElement operator*(const ParamPolynomial& p, GroupAlgebraElement a) { return a *= p; }
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
    {
        GroupAlgebraElement r;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_) r.add_term(la + lb, ca * cb);
        return r;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
    {
        return a.terms_ == b.terms_;
    }

    // Apply a coefficient map term by term (used for specializations).
    template <class F>
    GroupAlgebraElement map_coefficients(F&& f) const
    {
        GroupAlgebraElement r;
        for (const auto& [l, c] : terms_) r.add_term(l, f(c));
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [l, c] : terms_) {
            if (!first) s += " + ";
            s += "(" + c.to_string() + ")*e^" + l.to_string();
            first = false;
        }
        return s;
    }

private:
    TermMap terms_;
};

using GAE = GroupAlgebraElement;

inline std::ostream& operator<<(std::ostream& os, const GAE& f) { return os << f.to_string(); }

// (e^lambda - e^mu) / (e^alpha - 1), requiring lambda - mu = k alpha with k
// integral. The quotient is a finite geometric sum.
inline GAE divided_difference(const Weight& lambda, const Weight& mu, const Weight& alpha)
{
    Weight d = lambda - mu;
    int pivot = 0;
    for (int i = 1; i <= alpha.rank(); ++i)
        if (alpha[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == 0) throw InexactDivision("divided difference by e^0 - 1");
    if (d[pivot] % alpha[pivot] != 0) throw InexactDivision("non-integral divided difference");
    const int k = d[pivot] / alpha[pivot];
    if (!(d == k * alpha)) throw InexactDivision("difference not a multiple of the root");
    GAE r;
    if (k > 0) {
        for (int j = 0; j < k; ++j) r.add_term(mu + j * alpha, ParamPolynomial::one());
    } else {
        for (int j = 0; j < -k; ++j) r.add_term(lambda + j * alpha, ParamPolynomial::constant(-1));
    }
    return r;
}

namespace detail {

inline void check_generator(int n, int i)
{
    if (n < 1) throw InvalidInput("rank must be positive");
    if (i < 1 || i > n) throw InvalidInput("generator index " + std::to_string(i) + " outside [1, n]");
}

template <class F>
GAE extend_linearly(const GAE& f, F&& on_monomial)
{
    GAE r;
    for (const auto& [l, c] : f.terms()) r += on_monomial(l) * c;
    return r;
}

} // namespace detail

// epsilon(T_i) e^lambda.
inline GAE basic_T_monomial(int i, const Weight& lambda)
{
    const int n = lambda.rank();
    detail::check_generator(n, i);
    const Weight alpha = simple_root(n, i);
    const Weight s = reflect(i, lambda);
    GAE r = divided_difference(lambda, s, alpha);
    if (i < n) {
        r -= ParamPolynomial::q2() * divided_difference(lambda, s + alpha, alpha);
    } else {
        r += ParamPolynomial::q0() * ParamPolynomial::q1() * divided_difference(lambda, s + alpha, alpha);
        r -= (ParamPolynomial::q0() + ParamPolynomial::q1()) *
             divided_difference(lambda, s, alpha).shifted(Weight::eps(n, n));
    }
    return r;
}

// T~_i e^lambda = (1 - q2 e^{alpha_i}) (e^lambda - e^{s_i lambda - alpha_i}) / (1 - e^{-alpha_i}),
// with (1 - q0 e^{eps_n})(1 - q1 e^{eps_n}) in front for i = n.
inline GAE geometric_T_monomial(int i, const Weight& lambda)
{
    const int n = lambda.rank();
    detail::check_generator(n, i);
    const Weight alpha = simple_root(n, i);
    const Weight zero = Weight::zero(n);
    // 1/(1 - e^{-a}) = e^a/(e^a - 1)
    GAE core = divided_difference(lambda, reflect(i, lambda) - alpha, alpha).shifted(alpha);
    GAE front;
    if (i < n) {
        front = GAE::monomial(zero) - GAE::monomial(alpha, ParamPolynomial::q2());
    } else {
        const Weight e = Weight::eps(n, n);
        front = (GAE::monomial(zero) - GAE::monomial(e, ParamPolynomial::q0())) *
                (GAE::monomial(zero) - GAE::monomial(e, ParamPolynomial::q1()));
    }
    return front * core;
}

inline GAE act_basic_T(int i, const GAE& f)
{
    return detail::extend_linearly(f, [i](const Weight& l) { return basic_T_monomial(i, l); });
}

inline GAE act_geometric_T(int i, const GAE& f)
{
    return detail::extend_linearly(f, [i](const Weight& l) { return geometric_T_monomial(i, l); });
}

// ---------------------------------------------------------------------------
// Specializations: substitutions q_k -> c * q^e solving monomial constraints.

struct MonomialConstraint {
    // lhs_coef * q^lhs == rhs_coef * q^rhs
    Rational lhs_coef = 1;
    ParamExponent lhs{0, 0, 0};
    Rational rhs_coef = 1;
    ParamExponent rhs{0, 0, 0};
    std::string label;
};

class Specialization {
public:
    Specialization() = default;

    static Specialization from_constraints(const std::vector<MonomialConstraint>& constraints)
    {
        Specialization s;
        for (const auto& c : constraints) s.impose(c);
        return s;
    }

    // Named presets.
    //   b   : q0 + q1 = 0
    //   eqB : q0 + q1 = 0 and q1^2 = q2
    //   eqC : q2 = -q0 q1 and (1 + q0)(1 + q1) = 0, on the branch q1 = -1
    static Specialization preset(const std::string& name)
    {
        MonomialConstraint q1_neg_q0{1, {0, 1, 0}, -1, {1, 0, 0}, "q0 + q1 = 0"};
        if (name.empty() || name == "none") return Specialization();
        if (name == "b") return from_constraints({q1_neg_q0});
        if (name == "eqB") return from_constraints({q1_neg_q0, {1, {0, 0, 1}, 1, {0, 2, 0}, "q1^2 = q2"}});
        if (name == "eqC")
            return from_constraints({{1, {0, 0, 1}, -1, {1, 1, 0}, "q2 = -q0*q1"},
                                     {1, {0, 1, 0}, -1, {0, 0, 0}, "q1 = -1"}});
        throw InvalidInput("unknown specialization '" + name + "'");
    }

    bool is_identity() const { return subst_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    ParamPolynomial apply(const ParamPolynomial& p) const
    {
        if (subst_.empty()) return p;
        ParamPolynomial r;
        for (const auto& [e, c] : p.terms()) {
            Rational coef = c;
            ParamExponent out{0, 0, 0};
            for (std::size_t k = 0; k < 3; ++k) {
                auto it = subst_.find(static_cast<int>(k));
                if (it == subst_.end()) {
                    out[k] += e[k];
                    continue;
                }
                const auto& [sc, se] = it->second;
                Rational f = 1;
                Rational base = sc;
                if (e[k] < 0) base = Rational(1) / sc;
                for (int m = 0; m < std::abs(e[k]); ++m) f *= base;
                coef *= f;
                for (std::size_t j = 0; j < 3; ++j) out[j] += e[k] * se[j];
            }
            r.add_term(out, coef);
        }
        return r;
    }

    GAE apply(const GAE& f) const
    {
        if (subst_.empty()) return f;
        return f.map_coefficients([this](const ParamPolynomial& p) { return apply(p); });
    }

private:
    // q_k -> coef * q^exp, with no substituted variable appearing in exp.
    std::map<int, std::pair<Rational, ParamExponent>> subst_;
    std::vector<std::string> labels_;

    void impose(const MonomialConstraint& c)
    {
        if (c.lhs_coef == 0 || c.rhs_coef == 0) throw InvalidInput("constraint with zero coefficient");
        // Move everything to one side: ratio * q^d = 1.
        ParamPolynomial lhs = apply(ParamPolynomial::monomial(c.lhs, c.lhs_coef));
        ParamPolynomial rhs = apply(ParamPolynomial::monomial(c.rhs, c.rhs_coef));
        const auto& [el, cl] = *lhs.terms().begin();
        const auto& [er, cr] = *rhs.terms().begin();
        ParamExponent d{el[0] - er[0], el[1] - er[1], el[2] - er[2]};
        Rational ratio = cl / cr;
        if (d == ParamExponent{0, 0, 0}) {
            if (ratio != 1) throw InvalidInput("inconsistent specialization constraints at '" + c.label + "'");
            labels_.push_back(c.label);
            return;
        }
        int var = -1;
        // prefer the highest-index parameter, so "q1 = -q0" solves for q1
        for (int k = 0; k < 3; ++k)
            if (std::abs(d[static_cast<std::size_t>(k)]) == 1) var = k;
        if (var < 0) throw InvalidInput("unsupported specialization constraint '" + c.label + "'");
        // ratio * q_var^{s} * rest = 1  =>  q_var = ratio^{-s} * rest^{-s}
        const int sgn = d[static_cast<std::size_t>(var)];
        Rational vc = ratio;
        if (sgn > 0) vc = Rational(1) / ratio;
        ParamExponent ve{0, 0, 0};
        for (std::size_t j = 0; j < 3; ++j)
            if (static_cast<int>(j) != var) ve[j] = -sgn * d[j];
        // Substitute the new rule into existing ones.
        for (auto& [k, rule] : subst_) {
            auto& [rc, re] = rule;
            int p = re[static_cast<std::size_t>(var)];
            if (p == 0) continue;
            Rational f = 1;
            Rational base = vc;
            if (p < 0) base = Rational(1) / vc;
            for (int m = 0; m < std::abs(p); ++m) f *= base;
            rc *= f;
            re[static_cast<std::size_t>(var)] = 0;
            for (std::size_t j = 0; j < 3; ++j) re[j] += p * ve[j];
        }
        subst_[var] = {vc, ve};
        labels_.push_back(c.label);
    }
};

// ---------------------------------------------------------------------------
// Operator family: the action of T_i on monomials, possibly specialized.

struct OperatorFamily {
    std::string name = "basic";
    std::function<GAE(int, const Weight&)> T = basic_T_monomial;
    Specialization spec;

    GAE act_T(int i, const GAE& f) const
    {
        GAE r;
        for (const auto& [l, c] : f.terms()) r += spec.apply(T(i, l)) * c;
        return spec.apply(r);
    }
    ParamPolynomial coeff(const ParamPolynomial& p) const { return spec.apply(p); }
    GAE coeff(const GAE& f) const { return spec.apply(f); }

    static OperatorFamily basic() { return {}; }
    static OperatorFamily geometric()
    {
        OperatorFamily f;
        f.name = "geometric";
        f.T = geometric_T_monomial;
        return f;
    }
    OperatorFamily specialized(const Specialization& s) const
    {
        OperatorFamily f = *this;
        f.spec = s;
        return f;
    }
};

// A linear combination of words in {T_i, T~_i, multiplication by f in A[T]}.
class HeckeOperator {
public:
    enum class Kind { T, TTilde, Mul };
    struct Letter {
        Kind kind;
        int index = 0;
        GAE mult;
    };
    using Word = std::vector<Letter>; // rightmost letter acts first

    HeckeOperator() = default;

    static HeckeOperator identity()
    {
        HeckeOperator op;
        op.words_.push_back({});
        return op;
    }
    static HeckeOperator T(int i) { return from_letter({Kind::T, i, GAE()}); }
    static HeckeOperator T_tilde(int i) { return from_letter({Kind::TTilde, i, GAE()}); }
    static HeckeOperator multiply(const GAE& f) { return from_letter({Kind::Mul, 0, f}); }
    static HeckeOperator character(const Weight& lambda) { return multiply(GAE::monomial(lambda)); }
    static HeckeOperator param(int n, const ParamPolynomial& p) { return multiply(GAE::constant(n, p)); }

    const std::vector<Word>& words() const { return words_; }

    friend HeckeOperator operator+(HeckeOperator a, const HeckeOperator& b)
    {
        a.words_.insert(a.words_.end(), b.words_.begin(), b.words_.end());
        return a;
    }
    friend HeckeOperator operator-(HeckeOperator a, const HeckeOperator& b)
    {
        for (Word w : b.words_) {
            w.insert(w.begin(), Letter{Kind::Mul, -1, GAE()});
            a.words_.push_back(std::move(w));
        }
        return a;
    }
    friend HeckeOperator operator*(const HeckeOperator& a, const HeckeOperator& b)
    {
        HeckeOperator r;
        for (const auto& wa : a.words_)
            for (const auto& wb : b.words_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.words_.push_back(std::move(w));
            }
        return r;
    }

    GAE apply(const GAE& f, const OperatorFamily& family = OperatorFamily::basic()) const
    {
        GAE total;
        for (const auto& w : words_) {
            GAE g = f;
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                switch (it->kind) {
                case Kind::T:
                    g = family.act_T(it->index, g);
                    break;
                case Kind::TTilde:
                    g = family.spec.apply(act_geometric_T(it->index, g));
                    break;
                case Kind::Mul:
                    // index -1 marks negation
                    g = it->index == -1 ? -g : family.coeff(g * it->mult);
                    break;
                }
            }
            total += g;
        }
        return total;
    }

private:
    std::vector<Word> words_;

    static HeckeOperator from_letter(Letter l)
    {
        HeckeOperator op;
        op.words_.push_back({std::move(l)});
        return op;
    }
};

// T_i rewritten through the geometric generators:
//   i < n : T~_i - (1 - q2 (e^{alpha_i} + 1))
//   i = n : T~_n + (q0 + q1) e^{eps_n} - (1 + q0 q1 (e^{alpha_n} + 1))
inline HeckeOperator theta_transport(int n, int i)
{
    detail::check_generator(n, i);
    const Weight zero = Weight::zero(n);
    const Weight alpha = simple_root(n, i);
    const ParamPolynomial q0 = ParamPolynomial::q0(), q1 = ParamPolynomial::q1(), q2 = ParamPolynomial::q2();
    GAE shift;
    if (i < n) {
        shift = GAE::monomial(zero) - q2 * (GAE::monomial(alpha) + GAE::monomial(zero));
        return HeckeOperator::T_tilde(i) - HeckeOperator::multiply(shift);
    }
    shift = (q0 + q1) * GAE::monomial(Weight::eps(n, n)) - GAE::monomial(zero) -
            (q0 * q1) * (GAE::monomial(alpha) + GAE::monomial(zero));
    return HeckeOperator::T_tilde(n) + HeckeOperator::multiply(shift);
}

// Right-hand side of the Bernstein-Lusztig relation, as an element of A[T]:
//   i < n : (1 - q2) (e^lambda - e^{s_i lambda}) / (e^{alpha_i} - 1)
//   i = n : ((1 + q0 q1) - (q0 + q1) e^{eps_n}) (e^lambda - e^{s_n lambda}) / (e^{alpha_n} - 1)
inline GAE bernstein_lusztig_rhs(int i, const Weight& lambda)
{
    const int n = lambda.rank();
    detail::check_generator(n, i);
    const ParamPolynomial q0 = ParamPolynomial::q0(), q1 = ParamPolynomial::q1(), q2 = ParamPolynomial::q2();
    GAE dd = divided_difference(lambda, reflect(i, lambda), simple_root(n, i));
    if (i < n) return (ParamPolynomial::one() - q2) * dd;
    GAE front = GAE::constant(n, ParamPolynomial::one() + q0 * q1) -
                GAE::monomial(Weight::eps(n, n), q0 + q1);
    return front * dd;
}

// ---------------------------------------------------------------------------
// Relation verification over the monomial box ||lambda||_inf <= box.

struct RelationResult {
    std::string relation;
    bool passed = true;
    std::optional<Weight> witness;
    std::string detail;
};

struct RelationReport {
    int rank = 0;
    int box = 0;
    std::string family;
    std::vector<std::string> specialization;
    std::vector<RelationResult> results;
    std::vector<std::string> notes;

    bool all_passed() const
    {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
};

inline std::vector<Weight> monomial_box(int n, int box)
{
    if (box < 0) throw InvalidInput("box must be non-negative");
    std::vector<Weight> out;
    Weight w = Weight::zero(n);
    for (int& c : w.coords) c = -box;
    for (;;) {
        out.push_back(w);
        int k = 0;
        while (k < n && w.coords[static_cast<std::size_t>(k)] == box) {
            w.coords[static_cast<std::size_t>(k)] = -box;
            ++k;
        }
        if (k == n) break;
        ++w.coords[static_cast<std::size_t>(k)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct Probe {
    bool ok = true;
    Weight witness;
    std::string detail;
};

// Check lhs(e^mu) == rhs(e^mu) for every mu in the box; first failure in box
// order is reported, independent of the number of threads.
template <class F>
Probe sweep(const std::vector<Weight>& box, F&& check)
{
    auto found = parallel_map(box.size(), [&](std::size_t k) -> std::string { return check(box[k]); });
    for (std::size_t k = 0; k < box.size(); ++k)
        if (!found[k].empty()) return {false, box[k], found[k]};
    return {};
}

inline RelationResult make_result(std::string name, const Probe& p)
{
    RelationResult r;
    r.relation = std::move(name);
    r.passed = p.ok;
    if (!p.ok) {
        r.witness = p.witness;
        r.detail = p.detail;
    }
    return r;
}

} // namespace detail

inline RelationReport verify_relations(int n, int box, const OperatorFamily& family = OperatorFamily::basic())
{
    if (n < 1) throw InvalidInput("rank must be positive");
    RelationReport rep;
    rep.rank = n;
    rep.box = box;
    rep.family = family.name;
    rep.specialization = family.spec.labels();
    const auto monos = monomial_box(n, box);
    const ParamPolynomial q0 = family.coeff(ParamPolynomial::q0());
    const ParamPolynomial q1 = family.coeff(ParamPolynomial::q1());
    const ParamPolynomial q2 = family.coeff(ParamPolynomial::q2());
    using Op = HeckeOperator;
    auto identity_check = [&](const Op& lhs, const Op& rhs) {
        return [&, lhs, rhs](const Weight& mu) -> std::string {
            GAE f = GAE::monomial(mu);
            GAE a = lhs.apply(f, family);
            GAE b = rhs.apply(f, family);
            if (a == b) return {};
            return "difference " + (a - b).to_string();
        };
    };

    if (n == 1)
        rep.notes.push_back("rank 1: T_1 = T_n; only the T_n quadratic relation applies and there are no braid relations");

    // Toric: e^lambda e^mu = e^{lambda+mu} and e^0 = 1, on a generating set.
    {
        detail::Probe p;
        for (int i = 1; i <= n && p.ok; ++i)
            for (int sgn : {1, -1}) {
                Weight l = Weight::eps(n, sgn * i);
                for (int j = 1; j <= n && p.ok; ++j) {
                    Weight m = Weight::eps(n, j);
                    p = detail::sweep(monos, identity_check(Op::character(l) * Op::character(m),
                                                            Op::character(l + m)));
                }
            }
        if (p.ok) p = detail::sweep(monos, identity_check(Op::character(Weight::zero(n)), Op::identity()));
        rep.results.push_back(detail::make_result("toric", p));
    }

    // Quadratic relations.
    for (int i = 1; i <= n; ++i) {
        Op Ti = Op::T(i);
        Op one = Op::identity();
        Op second = i < n ? Ti - Op::param(n, q2) : Ti + Op::param(n, q0 * q1);
        detail::Probe p = detail::sweep(monos, identity_check((Ti + one) * second, Op()));
        std::string name = i < n ? "quadratic (T_" + std::to_string(i) + "+1)(T_" + std::to_string(i) + "-q2)=0"
                                 : "quadratic (T_" + std::to_string(n) + "+1)(T_" + std::to_string(n) + "+q0q1)=0";
        rep.results.push_back(detail::make_result(name, p));
    }

    // Braid relations.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            Op a = Op::T(i) * Op::T(j), b = Op::T(j) * Op::T(i);
            rep.results.push_back(detail::make_result(
                "braid T_" + std::to_string(i) + "T_" + std::to_string(j) + "=T_" + std::to_string(j) + "T_" +
                    std::to_string(i),
                detail::sweep(monos, identity_check(a, b))));
        }
    for (int i = 1; i + 1 < n; ++i) {
        Op a = Op::T(i) * Op::T(i + 1) * Op::T(i);
        Op b = Op::T(i + 1) * Op::T(i) * Op::T(i + 1);
        rep.results.push_back(detail::make_result("braid T_" + std::to_string(i) + "T_" + std::to_string(i + 1) +
                                                      "T_" + std::to_string(i) + " (length 3)",
                                                  detail::sweep(monos, identity_check(a, b))));
    }
    if (n >= 2) {
        Op tn = Op::T(n), tm = Op::T(n - 1);
        Op a = tn * tm * tn * tm, b = tm * tn * tm * tn;
        rep.results.push_back(detail::make_result(
            "braid (T_" + std::to_string(n) + "T_" + std::to_string(n - 1) + ")^2=(T_" + std::to_string(n - 1) +
                "T_" + std::to_string(n) + ")^2",
            detail::sweep(monos, identity_check(a, b))));
    }

    // Bernstein-Lusztig relations for every lambda in the box.
    for (int i = 1; i <= n; ++i) {
        detail::Probe p;
        for (const Weight& l : monos) {
            Op lhs = Op::T(i) * Op::character(l) - Op::character(reflect(i, l)) * Op::T(i);
            Op rhs = Op::multiply(family.coeff(bernstein_lusztig_rhs(i, l)));
            p = detail::sweep(monos, identity_check(lhs, rhs));
            if (!p.ok) {
                p.detail = "lambda=" + l.to_string() + ": " + p.detail;
                break;
            }
        }
        rep.results.push_back(detail::make_result("bernstein-lusztig i=" + std::to_string(i), p));
    }
    return rep;
}

} // namespace exotic
