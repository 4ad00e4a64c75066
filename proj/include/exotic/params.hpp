#pragma once

// Semisimple parameter points a = (s, q0, q1, q2), clans, admissibility and
// the torus data attached to a strict marked partition.
//
// Everything is in log coordinates: s = exp(sum logs[i] eps_i) and
// q_k = exp(qlogs[k]). Equalities of the multiplicative values are
// congruences mod Gamma0 = 2 pi i Z.

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "exotic/error.hpp"
#include "exotic/exotic_rep.hpp"
#include "exotic/scalars.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

struct ParameterPoint {
    int n = 0;
    std::vector<FormalExponent> logs;  // log_i(s), representatives frozen as given
    std::array<FormalExponent, 3> qlogs;

    ParameterPoint() = default;
    ParameterPoint(std::vector<FormalExponent> l, std::array<FormalExponent, 3> q)
        : n(static_cast<int>(l.size())), logs(std::move(l)), qlogs(std::move(q))
    {
        if (n < 1) throw InvalidInput("parameter point needs at least one coordinate");
    }

    // <psi, log s> for an integer weight psi.
    FormalExponent pair(const Weight& psi) const
    {
        if (psi.rank() != n) throw InvalidInput("weight rank does not match parameter point");
        FormalExponent r;
        for (int i = 1; i <= n; ++i)
            if (psi[i] != 0) r += logs[static_cast<std::size_t>(i - 1)] * Rational(psi[i]);
        return r;
    }
};

// ---------------------------------------------------------------- clans

using ClanDecomposition = std::vector<std::vector<int>>;

namespace detail {

inline bool clan_edge(const FormalExponent& x, const FormalExponent& r2)
{
    for (const FormalExponent& target : {FormalExponent(), r2, -r2})
        if (exp_mod_gamma0(x, target)) return true;
    return false;
}

inline int uf_find(std::vector<int>& p, int x)
{
    while (p[static_cast<std::size_t>(x)] != x) {
        p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        x = p[static_cast<std::size_t>(x)];
    }
    return x;
}

} // namespace detail

// Blocks sorted internally and by least element.
inline ClanDecomposition clan_decompose(const ParameterPoint& a)
{
    std::vector<int> parent(static_cast<std::size_t>(a.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    const FormalExponent& r2 = a.qlogs[2];
    for (int i = 1; i <= a.n; ++i)
        for (int j = i + 1; j <= a.n; ++j) {
            const auto& li = a.logs[static_cast<std::size_t>(i - 1)];
            const auto& lj = a.logs[static_cast<std::size_t>(j - 1)];
            if (detail::clan_edge(li + lj, r2) || detail::clan_edge(li - lj, r2))
                parent[static_cast<std::size_t>(detail::uf_find(parent, i))] = detail::uf_find(parent, j);
        }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(a.n) + 1);
    for (int i = 1; i <= a.n; ++i) by_root[static_cast<std::size_t>(detail::uf_find(parent, i))].push_back(i);
    ClanDecomposition out;
    for (auto& b : by_root)
        if (!b.empty()) out.push_back(std::move(b));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- admissibility

enum class Admissibility { not_preadmissible, preadmissible, admissible };

inline std::string to_string(Admissibility a)
{
    switch (a) {
    case Admissibility::not_preadmissible: return "not_preadmissible";
    case Admissibility::preadmissible: return "preadmissible";
    case Admissibility::admissible: return "admissible";
    }
    return "?";
}

struct AdmissibilityReport {
    Admissibility verdict = Admissibility::admissible;
    std::vector<std::string> reasons;
};

// Only the q-part of a matters; s enters through the rank.
inline AdmissibilityReport admissibility(const ParameterPoint& a)
{
    AdmissibilityReport rep;
    const auto& q = a.qlogs;
    bool pre = true;
    if (exp_mod_gamma0(q[0], q[1])) {
        pre = false;
        rep.reasons.push_back("q0 = q1");
    }
    if (root_of_unity_order_at_most(q[2], 2L * a.n)) {
        pre = false;
        rep.reasons.push_back("q2 is a root of unity of order <= " + std::to_string(2 * a.n));
    }
    bool window = true;
    for (int m = 0; m < a.n; ++m)
        for (int sign : {1, -1}) {
            if (m == 0 && sign < 0) continue;
            FormalExponent rhs = q[2] * Rational(sign * m);
            std::string power = "q2^" + std::to_string(sign * m);
            if (exp_mod_gamma0(q[0] + q[1], rhs)) {
                window = false;
                rep.reasons.push_back("q0*q1 = " + power);
            }
            if (exp_mod_gamma0(q[0] - q[1], rhs)) {
                window = false;
                rep.reasons.push_back("q0/q1 = " + power);
            }
        }
    if (!pre)
        rep.verdict = Admissibility::not_preadmissible;
    else
        rep.verdict = window ? Admissibility::admissible : Admissibility::preadmissible;
    return rep;
}

// ---------------------------------------------------------------- weights of VV = V1 + V1 + V2

// A weight of one summand: part 0 and 1 are the two copies of V1 (eigenvalue
// q0 and q1), part 2 is V2 (eigenvalue q2).
struct VWeight {
    Weight weight;
    int part = 0;

    friend bool operator==(const VWeight& a, const VWeight& b) { return a.part == b.part && a.weight == b.weight; }
    friend bool operator<(const VWeight& a, const VWeight& b)
    {
        return std::tie(a.part, a.weight) < std::tie(b.part, b.weight);
    }
    std::string tag() const { return "q" + std::to_string(part); }
    std::string to_string() const { return weight.to_string() + "@" + tag(); }
};

inline std::ostream& operator<<(std::ostream& os, const VWeight& w) { return os << w.to_string(); }

inline std::vector<VWeight> all_vweights(int n)
{
    std::vector<VWeight> out;
    for (int part = 0; part < 3; ++part)
        for (const Weight& w : exotic_weights(n))
            if ((part < 2) == is_v1_weight(w)) out.push_back({w, part});
    return out;
}

// Weights psi of VV^a: <psi, log s> = log q_part mod Gamma0. No check on a.
inline std::set<VWeight> eigen_weights(const ParameterPoint& a)
{
    std::set<VWeight> out;
    for (const VWeight& v : all_vweights(a.n))
        if (exp_mod_gamma0(a.pair(v.weight), a.qlogs[static_cast<std::size_t>(v.part)])) out.insert(v);
    return out;
}

inline std::set<VWeight> fixed_weight_space(const ParameterPoint& a)
{
    if (admissibility(a).verdict == Admissibility::not_preadmissible)
        throw PreconditionFailed("fixed_weight_space needs a pre-admissible point");
    return eigen_weights(a);
}

// a X = X: every weight in the support of X is fixed.
inline bool fixes(const ParameterPoint& a, const ExoticVector& X)
{
    if (X.n != a.n) throw InvalidInput("rank mismatch between point and vector");
    auto ok = [&](const Weight& w, int part) {
        return exp_mod_gamma0(a.pair(w), a.qlogs[static_cast<std::size_t>(part)]);
    };
    for (int part = 0; part < 2; ++part)
        for (const auto& [w, c] : X.x[static_cast<std::size_t>(part)])
            if (!ok(w, part)) return false;
    for (const auto& [w, c] : X.y)
        if (!ok(w, 2)) return false;
    return true;
}

// ---------------------------------------------------------------- torus data of a strict marked partition

inline const std::string kGammaSymbol = "gamma";
inline std::string gamma_symbol(int k) { return kGammaSymbol + std::to_string(k); }

struct OrbitTorusData {
    ParameterPoint a_sigma;        // (s_sigma, e^gamma0, 1, e^gamma)
    std::vector<Rational> d_sigma; // log D_sigma in units of the scale
    WeylElement w_sigma;
    std::set<Weight> p_sigma_roots;
    // The ordering of the gamma_k magnitudes is carried as metadata only.
    std::string gamma_ordering;

    const std::vector<FormalExponent>& s_sigma() const { return a_sigma.logs; }
};

namespace detail {

inline void require_strict(const MarkedPartition& s, const char* who)
{
    if (!is_strict(s)) throw PreconditionFailed(std::string(who) + " needs a strict marked partition");
}

inline Rational pair_rational(const Weight& psi, const std::vector<Rational>& d)
{
    Rational r = 0;
    for (int i = 1; i <= psi.rank(); ++i) r += Rational(psi[i]) * d[static_cast<std::size_t>(i - 1)];
    return r;
}

} // namespace detail

inline ParameterPoint torus_point(const MarkedPartition& s)
{
    detail::require_strict(s, "torus_point");
    const FormalExponent g = FormalExponent::symbol(kGammaSymbol);
    const FormalExponent g0 = FormalExponent::symbol(gamma_symbol(0));
    std::vector<FormalExponent> logs(static_cast<std::size_t>(s.n));
    for (std::size_t k = 0; k < s.J.size(); ++k) {
        const int j0 = s.first_mark(k);
        for (int j : s.J[k]) {
            FormalExponent& l = logs[static_cast<std::size_t>(j - 1)];
            if (j0 != 0)
                l = g0 - g * Rational(j - j0);
            else
                l = FormalExponent::symbol(gamma_symbol(static_cast<int>(k) + 1)) - g * Rational(j);
        }
    }
    return ParameterPoint(std::move(logs), {g0, FormalExponent(), g});
}

// log D_sigma: -scale * #_(J_k) on marked members, 0 elsewhere.
inline std::vector<Rational> torus_contraction(const MarkedPartition& s, const Rational& scale)
{
    detail::require_strict(s, "torus_contraction");
    if (scale <= 0) throw InvalidInput("scale must be positive");
    std::vector<Rational> d(static_cast<std::size_t>(s.n), Rational(0));
    for (std::size_t k = 0; k < s.J.size(); ++k)
        if (int j0 = s.first_mark(k)) {
            Rational v = -scale * detail::count_below(s.J[k], j0);
            for (int j : s.J[k]) d[static_cast<std::size_t>(j - 1)] = v;
        }
    return d;
}

// Shortest w with <w alpha, d> <= 0 for every positive root alpha, that is
// w^{-1} d antidominant. Sorting by simple reflections reaches the minimal
// coset representative, which is the unique shortest solution.
inline WeylElement shortest_antidominating(const std::vector<Rational>& d)
{
    const int n = static_cast<int>(d.size());
    std::vector<Rational> cur = d;
    WeylElement w = WeylElement::identity(n);
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= n; ++i) {
            if (detail::pair_rational(simple_root(n, i), cur) <= 0) continue;
            if (i < n)
                std::swap(cur[static_cast<std::size_t>(i - 1)], cur[static_cast<std::size_t>(i)]);
            else
                cur[static_cast<std::size_t>(n - 1)] = -cur[static_cast<std::size_t>(n - 1)];
            w = w * WeylElement::simple(n, i);
            moved = true;
        }
    }
    return w;
}

// Roots eps_j - eps_j' with j in J_k, j' in J_k' (k != k'), both members
// marked at j0 and j1, j - j0 = j' - j1 and j < j'.
inline std::set<Weight> parabolic_unipotent_roots(const MarkedPartition& s)
{
    detail::require_strict(s, "parabolic_unipotent_roots");
    std::set<Weight> out;
    for (std::size_t k = 0; k < s.J.size(); ++k)
        for (std::size_t m = 0; m < s.J.size(); ++m) {
            const int j0 = s.first_mark(k), j1 = s.first_mark(m);
            if (k == m || j0 == 0 || j1 == 0) continue;
            for (int j : s.J[k]) {
                const int jp = j - j0 + j1;
                if (j < jp && s.member_of(jp) == static_cast<int>(m)) out.insert(Weight::eps_diff(s.n, j, jp));
            }
        }
    return out;
}

inline OrbitTorusData attach_torus(const MarkedPartition& s, const Rational& scale)
{
    detail::require_strict(s, "attach_torus");
    OrbitTorusData d{torus_point(s), torus_contraction(s, scale), WeylElement::identity(s.n), {}, {}};
    d.w_sigma = shortest_antidominating(d.d_sigma);
    d.p_sigma_roots = parabolic_unipotent_roots(s);
    std::string order = kGammaSymbol + "0";
    for (std::size_t k = 1; k <= s.J.size(); ++k) order += " > " + gamma_symbol(static_cast<int>(k));
    d.gamma_ordering = order + " > (n+1)*" + kGammaSymbol;
    return d;
}

// Weights of VV^{a_sigma} meeting the w_sigma-translate of VV^+, listed by
// the three closed-form families.
inline std::set<VWeight> prehom_weights(const MarkedPartition& s)
{
    detail::require_strict(s, "prehom_weights");
    const int n = s.n;
    std::set<VWeight> out;
    for (const auto& member : s.J)
        for (std::size_t t = 0; t + 1 < member.size(); ++t)
            out.insert({Weight::eps_diff(n, member[t], member[t + 1]), 2});
    for (std::size_t k = 0; k < s.J.size(); ++k)
        for (std::size_t m = 0; m < s.J.size(); ++m) {
            const int j0 = s.first_mark(k), j1 = s.first_mark(m);
            if (k == m || j0 == 0 || j1 == 0) continue;
            if (detail::count_below(s.J[k], j0) <= detail::count_below(s.J[m], j1)) continue;
            for (int i = -n; i <= n; ++i) {
                const int a = i + j0, b = i + j1 + 1;
                if (a < 1 || a > n || b < 1 || b > n) continue;
                if (s.member_of(a) == static_cast<int>(k) && s.member_of(b) == static_cast<int>(m))
                    out.insert({Weight::eps_diff(n, a, b), 2});
            }
        }
    if (!s.marks.empty())
        for (int j0 : s.marks[0]) out.insert({Weight::eps(n, j0), 0});
    return out;
}

} // namespace exotic
