#pragma once

// Orbits in the a-fixed exotic nilcone, the classification of parameters over
// an admissible point, torus-fixed points of exotic Springer fibers and the
// resulting standard-module dimensions and characters.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exotic/error.hpp"
#include "exotic/exotic_rep.hpp"
#include "exotic/linalg.hpp"
#include "exotic/parallel.hpp"
#include "exotic/params.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

using Support = std::vector<VWeight>; // sorted by vweight_order

// Order used for canonical supports: by part, then eps_1 before eps_2 and so on.
inline bool vweight_order(const VWeight& a, const VWeight& b)
{
    if (a.part != b.part) return a.part < b.part;
    return b.weight < a.weight;
}

inline void normalize_support(Support& s)
{
    std::sort(s.begin(), s.end(), vweight_order);
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool support_less(const Support& a, const Support& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), vweight_order);
}

inline Support support_of(const ExoticVector& X)
{
    Support s;
    for (int part = 0; part < 2; ++part)
        for (const auto& [w, c] : X.x[static_cast<std::size_t>(part)]) s.push_back({w, part});
    for (const auto& [w, c] : X.y) s.push_back({w, 2});
    normalize_support(s);
    return s;
}

inline ExoticVector vector_on_support(int n, const Support& s)
{
    ExoticVector X(n);
    for (const VWeight& v : s) {
        if (v.part == 2)
            X.set_y(v.weight, Rational(1));
        else
            X.set_x(v.weight, Rational(1), v.part);
    }
    return X;
}

inline Support act_on_support(const WeylElement& w, const Support& s)
{
    Support out;
    out.reserve(s.size());
    for (const VWeight& v : s) out.push_back({w.apply(v.weight), v.part});
    normalize_support(out);
    return out;
}

inline std::string support_to_string(const Support& s)
{
    if (s.empty()) return "{}";
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s[k].to_string();
    return out + "}";
}

// ---------------------------------------------------------------- symmetry group

// Stabilizer of s in W: <w eps_i, log s> = <eps_i, log s> mod Gamma0 for all i.
inline std::vector<WeylElement> symmetry_group(const ParameterPoint& a, int bound = kDefaultWeylRankBound)
{
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_weyl(a.n, bound)) {
        bool ok = true;
        for (int i = 1; i <= a.n && ok; ++i) ok = exp_mod_gamma0(a.pair(w.apply(Weight::eps(a.n, i))), a.logs[static_cast<std::size_t>(i - 1)]);
        if (ok) out.push_back(w);
    }
    return out;
}

// Least image of s under the group, with the element realizing it.
inline std::pair<Support, WeylElement> canonical_support(const Support& s, const std::vector<WeylElement>& group)
{
    std::pair<Support, WeylElement> best{s, WeylElement::identity(group.empty() ? 1 : group.front().rank())};
    bool first = true;
    for (const WeylElement& w : group) {
        Support img = act_on_support(w, s);
        if (first || support_less(img, best.first)) {
            best = {std::move(img), w};
            first = false;
        }
    }
    return best;
}

// ---------------------------------------------------------------- reports

struct ClanProvenance {
    std::vector<int> clan;
    MarkedPartition sigma;  // strict marked partition of #clan
    WeylElement w;          // the normal form of w . sigma, placed on the clan
    int v1_part = 0;        // which copy of V1 carries the marks
};

struct OrbitRepresentative {
    Support support;
    ExoticVector vector;
    std::vector<ClanProvenance> provenance; // empty for torus enumeration
};

struct DedupWitness {
    Support support;
    WeylElement w;                   // w . support == representative support
    std::size_t representative = 0;
};

struct ClassificationReport {
    std::vector<OrbitRepresentative> representatives;
    std::size_t continuous_families = 0; // supports whose torus orbits come in families
    std::size_t ambiguous = 0;           // supports the nilcone test could not decide
    std::vector<Support> ambiguous_supports;
    std::vector<DedupWitness> witnesses;
    std::vector<WeylElement> symmetry;
    std::vector<std::string> notes;

    std::size_t count() const { return representatives.size(); }
};

// ---------------------------------------------------------------- torus centralizer enumeration

inline bool has_torus_centralizer(const ParameterPoint& a)
{
    for (const Weight& r : all_roots(a.n))
        if (a.pair(r).in_gamma0()) return false;
    return true;
}

inline constexpr std::size_t kMaxFixedWeights = 20;

inline ClassificationReport torus_orbit_enumeration(const ParameterPoint& a)
{
    if (!has_torus_centralizer(a)) throw PreconditionFailed("centralizer of s is not a torus");
    std::set<VWeight> fixed_set = fixed_weight_space(a);
    Support fixed(fixed_set.begin(), fixed_set.end());
    normalize_support(fixed);
    if (fixed.size() > kMaxFixedWeights)
        throw BoundExceeded("fixed weight space has " + std::to_string(fixed.size()) + " weights");

    enum Kind : int { keep = 0, family = 1, undecided = 2, unstable = 3 };
    const std::size_t total = std::size_t{1} << fixed.size();
    auto subset = [&](std::size_t mask) {
        Support s;
        for (std::size_t k = 0; k < fixed.size(); ++k)
            if (mask & (std::size_t{1} << k)) s.push_back(fixed[k]);
        return s;
    };
    std::vector<int> kinds = parallel_map(total, [&](std::size_t mask) -> int {
        Support s = subset(mask);
        RMatrix chars;
        for (const VWeight& v : s) {
            RVector row(static_cast<std::size_t>(a.n) + 3, Rational(0));
            for (int i = 1; i <= a.n; ++i) row[static_cast<std::size_t>(i - 1)] = v.weight[i];
            row[static_cast<std::size_t>(a.n + v.part)] = 1;
            chars.push_back(std::move(row));
        }
        if (rank(chars) != s.size()) return family;
        switch (in_nilcone(vector_on_support(a.n, s), 2)) {
        case NilconeVerdict::member: return keep;
        case NilconeVerdict::unknown: return undecided;
        case NilconeVerdict::non_member: return unstable;
        }
        return unstable;
    });

    ClassificationReport rep;
    rep.symmetry = symmetry_group(a);
    std::map<Support, std::size_t, decltype(&support_less)> index(&support_less);
    std::vector<Support> kept;
    for (std::size_t mask = 0; mask < total; ++mask) {
        if (kinds[mask] == family) ++rep.continuous_families;
        if (kinds[mask] == undecided) {
            ++rep.ambiguous;
            rep.ambiguous_supports.push_back(subset(mask));
        }
        if (kinds[mask] == keep) kept.push_back(subset(mask));
    }
    std::sort(kept.begin(), kept.end(), support_less);
    for (const Support& s : kept) {
        auto [canon, w] = canonical_support(s, rep.symmetry);
        auto it = index.find(canon);
        if (it == index.end()) {
            index.emplace(canon, rep.representatives.size());
            rep.representatives.push_back({canon, vector_on_support(a.n, canon), {}});
        }
        if (canon != s) rep.witnesses.push_back({s, w, index.at(canon)});
    }
    if (rep.continuous_families > 0)
        rep.notes.push_back(std::to_string(rep.continuous_families) + " supports carry continuous families of orbits");
    if (rep.ambiguous > 0)
        rep.notes.push_back(std::to_string(rep.ambiguous) + " supports left undecided by the nilcone test");
    return rep;
}

// ---------------------------------------------------------------- classification over an admissible point

namespace detail {

inline Weight embed_weight(const Weight& w, const std::vector<int>& clan, int n)
{
    Weight out = Weight::zero(n);
    for (int t = 1; t <= w.rank(); ++t) out[clan[static_cast<std::size_t>(t - 1)]] = w[t];
    return out;
}

struct ClanCandidate {
    Support support;
    ClanProvenance provenance;
};

inline std::vector<ClanCandidate> clan_classes(const ParameterPoint& a, const std::vector<int>& clan,
                                               const std::set<VWeight>& fixed, const std::vector<WeylElement>& group)
{
    const int m = static_cast<int>(clan.size());
    const auto W = enumerate_weyl(m);
    const auto sigmas = enumerate_strict(m);
    // One slot per (sigma, w); filled in parallel, merged in order.
    auto found = parallel_map(sigmas.size() * W.size(), [&](std::size_t idx) {
        std::vector<ClanCandidate> out;
        const MarkedPartition& sigma = sigmas[idx / W.size()];
        const WeylElement& w = W[idx % W.size()];
        ExoticVector nf = normal_form(weyl_act_marked(w, sigma));
        for (int part = 0; part < 2; ++part) {
            if (part == 1 && nf.x[0].empty()) break; // unmarked: both copies give the same vector
            Support s;
            bool inside = true;
            for (const auto& [psi, c] : nf.x[0]) {
                VWeight v{embed_weight(psi, clan, a.n), part};
                inside = inside && fixed.count(v);
                s.push_back(v);
            }
            for (const auto& [psi, c] : nf.y) {
                VWeight v{embed_weight(psi, clan, a.n), 2};
                inside = inside && fixed.count(v);
                s.push_back(v);
            }
            if (!inside) continue;
            normalize_support(s);
            out.push_back({s, {clan, sigma, w, part}});
        }
        return out;
    });
    std::map<Support, ClanCandidate, decltype(&support_less)> classes(&support_less);
    for (auto& batch : found)
        for (auto& c : batch) {
            Support canon = canonical_support(c.support, group).first;
            classes.try_emplace(canon, ClanCandidate{canon, c.provenance});
        }
    std::vector<ClanCandidate> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

} // namespace detail

inline ClassificationReport lambda_a_classification(const ParameterPoint& a)
{
    if (admissibility(a).verdict != Admissibility::admissible)
        throw PreconditionFailed("classification needs an admissible point");
    ClassificationReport rep;
    rep.symmetry = symmetry_group(a);
    const std::set<VWeight> fixed = fixed_weight_space(a);
    std::vector<OrbitRepresentative> partial{{{}, ExoticVector(a.n), {}}};
    for (const auto& clan : clan_decompose(a)) {
        auto classes = detail::clan_classes(a, clan, fixed, rep.symmetry);
        std::vector<OrbitRepresentative> next;
        for (const auto& p : partial)
            for (const auto& c : classes) {
                OrbitRepresentative r = p;
                r.support.insert(r.support.end(), c.support.begin(), c.support.end());
                normalize_support(r.support);
                r.provenance.push_back(c.provenance);
                next.push_back(std::move(r));
            }
        partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end(),
              [](const OrbitRepresentative& x, const OrbitRepresentative& y) { return support_less(x.support, y.support); });
    for (auto& r : partial) r.vector = vector_on_support(a.n, r.support);
    rep.representatives = std::move(partial);
    return rep;
}

// ---------------------------------------------------------------- fixed points and standard modules

// Torus-fixed points of the Springer fiber over X: {w : w^{-1} supp X in Psi(VV^+)}.
inline std::vector<WeylElement> springer_fixed_points(const ExoticVector& X, int bound = kDefaultWeylRankBound)
{
    const auto W = enumerate_weyl(X.n, bound);
    const auto pos = positive_part_weights(X.n);
    const std::set<Weight> positive(pos.begin(), pos.end());
    const std::set<Weight> supp = X.support();
    std::vector<char> keep = parallel_map(W.size(), [&](std::size_t k) -> char {
        const WeylElement winv = W[k].inverse();
        for (const Weight& psi : supp)
            if (!positive.count(winv.apply(psi))) return 0;
        return 1;
    });
    std::vector<WeylElement> out;
    for (std::size_t k = 0; k < W.size(); ++k)
        if (keep[k]) out.push_back(W[k]);
    return out;
}

struct AdmissibleParameter {
    ParameterPoint a;
    ExoticVector X;
};

// (s, q0, q1, q2) = (1, 1, -1, 1).
inline bool is_a0_pattern(const ParameterPoint& a)
{
    for (const auto& l : a.logs)
        if (!l.in_gamma0()) return false;
    return a.qlogs[0].in_gamma0() && exp_mod_gamma0(a.qlogs[1], FormalExponent::ipi()) && a.qlogs[2].in_gamma0();
}

// Formal sum of exponentials: exponent (reduced mod Gamma0) -> multiplicity.
using CharacterSum = std::map<FormalExponent, long>;

inline std::string character_to_string(const CharacterSum& c)
{
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [e, m] : c) {
        if (!out.empty()) out += " + ";
        out += (m == 1 ? "" : std::to_string(m) + "*") + "e^(" + e.to_string() + ")";
    }
    return out;
}

inline long character_total(const CharacterSum& c)
{
    long t = 0;
    for (const auto& [e, m] : c) t += m;
    return t;
}

struct StandardModuleReport {
    std::vector<WeylElement> fixed_points;
    bool torus_regular = false;
    std::optional<long> dim;
    std::vector<std::pair<Weight, CharacterSum>> characters;
};

namespace detail {

inline void require_parameter(const AdmissibleParameter& nu)
{
    if (nu.X.n != nu.a.n) throw InvalidInput("rank mismatch between point and vector");
    if (admissibility(nu.a).verdict != Admissibility::admissible && !is_a0_pattern(nu.a))
        throw PreconditionFailed("standard module needs an admissible point or (1, 1, -1, 1)");
    if (!fixes(nu.a, nu.X)) throw PreconditionFailed("vector is not fixed by the point");
}

// Differences of weights within each graded piece of supp X.
inline RMatrix equalizer_constraints(const ExoticVector& X)
{
    RMatrix rows;
    auto add_piece = [&](const std::map<Weight, Rational>& piece) {
        if (piece.empty()) return;
        const Weight& base = piece.begin()->first;
        for (const auto& [w, c] : piece) {
            if (w == base) continue;
            RVector r(static_cast<std::size_t>(X.n));
            for (int i = 1; i <= X.n; ++i) r[static_cast<std::size_t>(i - 1)] = w[i] - base[i];
            rows.push_back(std::move(r));
        }
    };
    add_piece(X.x[0]);
    add_piece(X.x[1]);
    add_piece(X.y);
    return rows;
}

} // namespace detail

// No root is constant on the torus that scales each graded piece of X by
// a single character.
inline bool auxiliary_torus_regular(const ExoticVector& X)
{
    const RMatrix cons = detail::equalizer_constraints(X);
    for (const Weight& r : positive_roots(X.n)) {
        RVector v(static_cast<std::size_t>(X.n));
        for (int i = 1; i <= X.n; ++i) v[static_cast<std::size_t>(i - 1)] = r[i];
        if (in_row_span(cons, v)) return false;
    }
    return true;
}

inline CharacterSum character_at(const ParameterPoint& a, const std::vector<WeylElement>& fixed_points, const Weight& lambda)
{
    CharacterSum c;
    for (const WeylElement& w : fixed_points) ++c[a.pair(w.apply(lambda)).reduced_mod_gamma0()];
    return c;
}

inline StandardModuleReport standard_module(const AdmissibleParameter& nu, const std::vector<Weight>& characters,
                                            int bound = kDefaultWeylRankBound)
{
    detail::require_parameter(nu);
    StandardModuleReport rep;
    rep.fixed_points = springer_fixed_points(nu.X, bound);
    rep.torus_regular = auxiliary_torus_regular(nu.X);
    if (!rep.torus_regular) return rep;
    rep.dim = static_cast<long>(rep.fixed_points.size());
    for (const Weight& lambda : characters) {
        if (lambda.rank() != nu.a.n) throw InvalidInput("character weight has wrong rank");
        rep.characters.emplace_back(lambda, character_at(nu.a, rep.fixed_points, lambda));
    }
    return rep;
}

// ---------------------------------------------------------------- induction identity

struct InductionReport {
    std::vector<int> levi_simple_roots;  // i with <alpha_i, log s_Q> = 0
    std::size_t weyl_q_order = 0;        // #W_Q
    std::size_t coset_count = 0;         // #W^Q
    std::optional<long> dim;             // dim M_nu
    std::optional<long> levi_dim;        // dim M_nu^Q
    bool torus_regular = false;
    bool hypothesis_holds = false;       // VV_U^a inside u X
    std::vector<VWeight> hypothesis_missing;
    bool identity_holds = false;         // dim = #W^Q * levi_dim
};

namespace detail {

inline Rational pair_log(const Weight& w, const std::vector<Rational>& l)
{
    Rational r = 0;
    for (int i = 1; i <= w.rank(); ++i) r += Rational(w[i]) * l[static_cast<std::size_t>(i - 1)];
    return r;
}

// Coordinates on V1 + V1 + End(V1): the V2 part is kept as a full matrix.
inline RVector flatten(int n, const RVector& x0, const RVector& x1, const RMatrix& y)
{
    RVector out;
    out.reserve(static_cast<std::size_t>(4 * n + 4 * n * n));
    out.insert(out.end(), x0.begin(), x0.end());
    out.insert(out.end(), x1.begin(), x1.end());
    for (const auto& row : y) out.insert(out.end(), row.begin(), row.end());
    return out;
}

} // namespace detail

// s_Q is given by its log: <alpha, log s_Q> <= 0 for all positive alpha.
inline InductionReport induction_identity_check(const AdmissibleParameter& nu, const std::vector<Rational>& log_sq,
                                                int bound = kDefaultWeylRankBound)
{
    detail::require_parameter(nu);
    const int n = nu.a.n;
    if (static_cast<int>(log_sq.size()) != n) throw InvalidInput("s_Q has wrong rank");
    for (const Weight& r : positive_roots(n))
        if (detail::pair_log(r, log_sq) > 0) throw PreconditionFailed("s_Q pairs above 1 with a positive root");
    for (const Weight& psi : nu.X.support())
        if (detail::pair_log(psi, log_sq) != 0) throw PreconditionFailed("vector is not supported in the Levi's fixed space");

    InductionReport rep;
    for (int i = 1; i <= n; ++i)
        if (detail::pair_log(simple_root(n, i), log_sq) == 0) rep.levi_simple_roots.push_back(i);

    const auto W = enumerate_weyl(n, bound);
    std::vector<WeylElement> WQ;
    for (const auto& w : W) {
        bool fixes_sq = true;
        for (int i = 1; i <= n && fixes_sq; ++i)
            fixes_sq = detail::pair_log(w.apply(Weight::eps(n, i)), log_sq) == log_sq[static_cast<std::size_t>(i - 1)];
        if (fixes_sq) WQ.push_back(w);
    }
    rep.weyl_q_order = WQ.size();
    for (const auto& w : W)
        if (std::all_of(WQ.begin(), WQ.end(), [&](const WeylElement& v) { return w.length() <= (v * w).length(); }))
            ++rep.coset_count;

    rep.torus_regular = auxiliary_torus_regular(nu.X);
    if (rep.torus_regular) {
        rep.dim = static_cast<long>(springer_fixed_points(nu.X, bound).size());
        const auto pos = positive_part_weights(n);
        std::set<Weight> levi_positive;
        for (const Weight& p : pos)
            if (detail::pair_log(p, log_sq) == 0) levi_positive.insert(p);
        long count = 0;
        for (const auto& w : WQ) {
            const WeylElement winv = w.inverse();
            bool ok = true;
            for (const Weight& psi : nu.X.support()) ok = ok && levi_positive.count(winv.apply(psi));
            if (ok) ++count;
        }
        rep.levi_dim = count;
        rep.identity_holds = *rep.dim == static_cast<long>(rep.coset_count) * count;
    }

    // u X, spanned by E_alpha . X over positive roots outside the Levi.
    const RVector x0 = v1_coordinates(n, nu.X.x[0]), x1 = v1_coordinates(n, nu.X.x[1]);
    const RMatrix Y = v2_endomorphism(nu.X);
    RMatrix ux;
    for (const Weight& r : positive_roots(n)) {
        if (detail::pair_log(r, log_sq) == 0) continue;
        const RMatrix E = root_matrix(r);
        RVector v = detail::flatten(n, matvec(E, x0), matvec(E, x1), matsub(matmul(E, Y), matmul(Y, E)));
        if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return c != 0; })) ux.push_back(std::move(v));
    }
    const auto dim1 = static_cast<std::size_t>(2 * n);
    rep.hypothesis_holds = true;
    for (const VWeight& v : eigen_weights(nu.a)) {
        if (!is_positive(v.weight) || detail::pair_log(v.weight, log_sq) == 0) continue;
        RVector e0(dim1, Rational(0)), e1(dim1, Rational(0));
        RMatrix ey = zero_matrix(dim1, dim1);
        if (v.part == 2) {
            ey = v2_basis_matrix(n, v.weight);
        } else {
            std::map<Weight, Rational> single{{v.weight, Rational(1)}};
            (v.part == 0 ? e0 : e1) = v1_coordinates(n, single);
        }
        if (!in_row_span(ux, detail::flatten(n, e0, e1, ey))) {
            rep.hypothesis_holds = false;
            rep.hypothesis_missing.push_back(v);
        }
    }
    return rep;
}

} // namespace exotic
