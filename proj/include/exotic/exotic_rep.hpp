#pragma once

// The exotic representation V = V1 + V2 of Sp(2n) (V1 the vector
// representation, V2 the nonzero-weight part of wedge^2 V1 / C), marked
// partitions naming the orbits in the nilpotent cone, and their normal forms.
//
// Basis conventions for the matrix model of V2:
//   index(e_a) = a - 1 for a > 0, n + |a| - 1 for a < 0, and
//   omega(e_a, e_{-a}) = sign(a).
// The vector y_ij (weight eps_i - eps_j) acts by e_j -> e_i and
// e_{-i} -> s(i) s(j) e_{-j}; this is the unique omega-self-adjoint choice
// with e_j -> e_i. For each V2 weight the stored coordinate refers to the
// canonical y_ij with i = s_a a, j = -s_b b, where the weight is
// s_a eps_a + s_b eps_b and a < b.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "exotic/error.hpp"
#include "exotic/linalg.hpp"
#include "exotic/scalars.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

inline int sign_of(int a) { return a > 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// ExoticVector: element of V_l = V1^l + V2 given by weight coordinates.

struct ExoticVector {
    int n = 0;
    std::array<std::map<Weight, Rational>, 2> x; // x[0] = X0, x[1] = X1 (l = 2 only)
    std::map<Weight, Rational> y;

    ExoticVector() = default;
    explicit ExoticVector(int rank) : n(rank) {}

    void set_x(const Weight& w, const Rational& c, int part = 0)
    {
        if (!is_v1_weight(w)) throw InvalidInput("not a V1 weight: " + w.to_string());
        if (part < 0 || part > 1) throw InvalidInput("V1 part index must be 0 or 1");
        set(x[static_cast<std::size_t>(part)], w, c);
    }
    void set_y(const Weight& w, const Rational& c)
    {
        if (!is_v2_weight(w)) throw InvalidInput("not a nonzero V2 weight: " + w.to_string());
        set(y, w, c);
    }

    bool is_zero() const { return x[0].empty() && x[1].empty() && y.empty(); }
    int level() const { return !x[1].empty() ? 2 : (!x[0].empty() ? 1 : 0); }

    // All weights carrying a nonzero coordinate, without repetition.
    std::set<Weight> support() const
    {
        std::set<Weight> s;
        for (const auto& part : x)
            for (const auto& [w, c] : part) s.insert(w);
        for (const auto& [w, c] : y) s.insert(w);
        return s;
    }

    friend bool operator==(const ExoticVector& a, const ExoticVector& b)
    {
        return a.n == b.n && a.x == b.x && a.y == b.y;
    }

    std::string to_string() const
    {
        std::string s;
        auto emit = [&s](const std::string& name, const std::map<Weight, Rational>& m) {
            for (const auto& [w, c] : m) {
                if (!s.empty()) s += " + ";
                if (c != 1) s += exotic::to_string(c) + "*";
                s += name + w.to_string();
            }
        };
        emit("x", x[0]);
        emit("x'", x[1]);
        emit("y", y);
        return s.empty() ? "0" : s;
    }

private:
    static void set(std::map<Weight, Rational>& m, const Weight& w, const Rational& c)
    {
        if (c == 0) {
            m.erase(w);
        } else {
            m[w] = c;
        }
    }
};

// ---------------------------------------------------------------------------
// Matrix model.

inline std::size_t basis_index(int n, int a)
{
    return static_cast<std::size_t>(a > 0 ? a - 1 : n - a - 1);
}

inline Rational omega(int n, const RVector& u, const RVector& v)
{
    Rational r = 0;
    for (int a = 1; a <= n; ++a) {
        r += u[basis_index(n, a)] * v[basis_index(n, -a)];
        r -= u[basis_index(n, -a)] * v[basis_index(n, a)];
    }
    return r;
}

inline RVector v1_coordinates(int n, const std::map<Weight, Rational>& part)
{
    RVector v(static_cast<std::size_t>(2 * n), Rational(0));
    for (const auto& [w, c] : part) {
        for (int a = 1; a <= n; ++a)
            if (w[a] != 0) v[basis_index(n, w[a] * a)] += c;
    }
    return v;
}

// Signed indices (i, j) of the canonical y_ij of a V2 weight.
inline std::pair<int, int> canonical_pair(const Weight& psi)
{
    if (!is_v2_weight(psi)) throw InvalidInput("not a nonzero V2 weight: " + psi.to_string());
    std::vector<int> idx;
    for (int a = 1; a <= psi.rank(); ++a)
        if (psi[a] != 0) idx.push_back(psi[a] * a);
    return {idx[0], -idx[1]};
}

// y_ij as a matrix, for signed i != +-j.
inline RMatrix y_matrix(int n, int i, int j)
{
    if (i == j || i == -j) throw InvalidInput("y_ij needs i != +-j");
    RMatrix m = zero_matrix(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    m[basis_index(n, i)][basis_index(n, j)] += 1;
    m[basis_index(n, -j)][basis_index(n, -i)] += sign_of(i) * sign_of(j);
    return m;
}

inline RMatrix v2_basis_matrix(int n, const Weight& psi)
{
    auto [i, j] = canonical_pair(psi);
    return y_matrix(n, i, j);
}

inline RMatrix v2_endomorphism(const ExoticVector& X)
{
    const auto dim = static_cast<std::size_t>(2 * X.n);
    RMatrix m = zero_matrix(dim, dim);
    for (const auto& [w, c] : X.y) {
        RMatrix b = v2_basis_matrix(X.n, w);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t s = 0; s < dim; ++s)
                if (b[r][s] != 0) m[r][s] += c * b[r][s];
    }
    return m;
}

// Inverse of v2_endomorphism on the nonzero-weight part; the diagonal
// (zero-weight) part is returned separately.
inline ExoticVector v2_from_matrix(int n, const RMatrix& m, RVector* diagonal = nullptr)
{
    ExoticVector X(n);
    for (const Weight& psi : exotic_weights(n)) {
        if (!is_v2_weight(psi)) continue;
        auto [i, j] = canonical_pair(psi);
        X.set_y(psi, m[basis_index(n, i)][basis_index(n, j)]);
    }
    if (diagonal != nullptr) {
        diagonal->assign(m.size(), Rational(0));
        for (std::size_t k = 0; k < m.size(); ++k) (*diagonal)[k] = m[k][k];
    }
    return X;
}

// Root vector E_alpha in sp(2n): for alpha = eps_i - eps_j it sends
// e_j -> e_i and e_{-i} -> -s(i)s(j) e_{-j}; for alpha = 2 eps_i it sends
// e_{-i} -> e_i.
inline RMatrix root_matrix(const Weight& alpha)
{
    const int n = alpha.rank();
    RMatrix m = zero_matrix(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    std::vector<int> idx;
    for (int a = 1; a <= n; ++a)
        if (alpha[a] != 0) idx.push_back(a);
    if (idx.size() == 1 && std::abs(alpha[idx[0]]) == 2) {
        int i = sign_of(alpha[idx[0]]) * idx[0];
        m[basis_index(n, i)][basis_index(n, -i)] = 1;
        return m;
    }
    if (!is_v2_weight(alpha)) throw InvalidInput("not a root: " + alpha.to_string());
    int i = alpha[idx[0]] * idx[0];
    int j = -alpha[idx[1]] * idx[1];
    m[basis_index(n, i)][basis_index(n, j)] += 1;
    m[basis_index(n, -j)][basis_index(n, -i)] -= sign_of(i) * sign_of(j);
    return m;
}

inline bool is_nilpotent(const RMatrix& m)
{
    if (m.empty()) return true;
    RMatrix p = m;
    for (std::size_t k = 1; k < m.size(); ++k) {
        if (is_zero_matrix(p)) return true;
        p = matmul(p, m);
    }
    return is_zero_matrix(p);
}

// Sizes of the Jordan blocks of a nilpotent matrix, decreasing.
inline std::vector<int> jordan_type(const RMatrix& m)
{
    const std::size_t dim = m.size();
    std::vector<std::size_t> ranks{dim};
    RMatrix p = identity_matrix(dim);
    while (ranks.back() > 0) {
        p = matmul(p, m);
        std::size_t r = rank(p);
        if (r == ranks.back()) throw PreconditionFailed("jordan_type: matrix is not nilpotent");
        ranks.push_back(r);
    }
    // number of blocks of size >= k is rank(M^{k-1}) - rank(M^k)
    std::vector<int> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    std::vector<int> blocks;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (int c = 0; c < at_least[k] - next; ++c) blocks.push_back(static_cast<int>(k + 1));
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

// ---------------------------------------------------------------------------
// Nilpotent cone membership.

enum class NilconeVerdict { member, non_member, unknown };

inline std::string to_string(NilconeVerdict v)
{
    switch (v) {
    case NilconeVerdict::member: return "member";
    case NilconeVerdict::non_member: return "non_member";
    case NilconeVerdict::unknown: return "unknown";
    }
    return "unknown";
}

// Is there a rational cocharacter positive on every weight of the set?
inline bool has_positive_cocharacter(int n, const std::set<Weight>& weights)
{
    RMatrix rows;
    for (const Weight& w : weights) {
        RVector r(static_cast<std::size_t>(n));
        for (int a = 1; a <= n; ++a) r[static_cast<std::size_t>(a - 1)] = w[a];
        rows.push_back(std::move(r));
    }
    return has_positive_functional(rows, static_cast<std::size_t>(n));
}

inline NilconeVerdict in_nilcone(const ExoticVector& X, int level)
{
    if (level < 0 || level > 2) throw InvalidInput("level must be 0, 1 or 2");
    if (X.level() > level) throw InvalidInput("vector has V1 components beyond the requested level");
    const RMatrix Y = v2_endomorphism(X);
    if (!is_nilpotent(Y)) return NilconeVerdict::non_member;
    if (level == 2 && !X.x[1].empty()) {
        // omega(x0, Y^k x1) is an invariant of V1 + V1 + V2 vanishing on the cone.
        RVector u = v1_coordinates(X.n, X.x[0]);
        RVector v = v1_coordinates(X.n, X.x[1]);
        for (int k = 0; k <= 2 * X.n; ++k) {
            if (omega(X.n, u, v) != 0) return NilconeVerdict::non_member;
            v = matvec(Y, v);
        }
    }
    if (has_positive_cocharacter(X.n, X.support())) return NilconeVerdict::member;
    return NilconeVerdict::unknown;
}

// ---------------------------------------------------------------------------
// Partitions and bipartitions.

using Partition = std::vector<int>;

struct Bipartition {
    Partition lambda1;
    Partition lambda2;

    friend bool operator==(const Bipartition& a, const Bipartition& b)
    {
        return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2;
    }
    friend bool operator<(const Bipartition& a, const Bipartition& b)
    {
        return std::tie(a.lambda1, a.lambda2) < std::tie(b.lambda1, b.lambda2);
    }
    std::string to_string() const
    {
        auto part = [](const Partition& p) {
            std::string s = "(";
            for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
            return s + ")";
        };
        return "(" + part(lambda1) + "," + part(lambda2) + ")";
    }
};

// Partitions of n in decreasing lexicographic order.
inline std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    if (n == 0) return {Partition{}};
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline bool is_partition(const Partition& p)
{
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] <= 0) return false;
        if (k > 0 && p[k] > p[k - 1]) return false;
    }
    return true;
}

// Multiplicities of equal parts, in order of decreasing part size.
inline std::vector<int> levi_of_partition(const Partition& lambda)
{
    if (!is_partition(lambda)) throw InvalidInput("not a partition");
    std::vector<int> out;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (k == 0 || lambda[k] != lambda[k - 1]) {
            out.push_back(1);
        } else {
            ++out.back();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Marked partitions.

struct MarkedPartition {
    int n = 0;
    std::vector<std::vector<int>> J;
    std::vector<std::set<int>> marks; // marks[m] = {j : delta_{m+1}(j) = 1}

    int level() const { return static_cast<int>(marks.size()); }

    // Throws InvalidInput unless J is a signed partition of n and the marks
    // respect the one-mark-per-member bound.
    void validate() const
    {
        if (n < 1) throw InvalidInput("rank must be positive");
        if (marks.size() > 2) throw InvalidInput("at most two foot functions");
        std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
        for (std::size_t k = 0; k < J.size(); ++k) {
            if (J[k].empty()) throw InvalidInput("empty member in J");
            for (int j : J[k]) {
                if (j == 0 || std::abs(j) > n) throw InvalidInput("entry " + std::to_string(j) + " outside [-n,n]*");
                if (owner[static_cast<std::size_t>(std::abs(j))] != -1)
                    throw InvalidInput("index " + std::to_string(std::abs(j)) + " appears twice in J");
                owner[static_cast<std::size_t>(std::abs(j))] = static_cast<int>(k);
            }
        }
        for (int a = 1; a <= n; ++a)
            if (owner[static_cast<std::size_t>(a)] == -1)
                throw InvalidInput("index " + std::to_string(a) + " missing from J");
        for (const auto& m : marks) {
            std::vector<int> per_member(J.size(), 0);
            for (int j : m) {
                if (j == 0 || std::abs(j) > n) throw InvalidInput("mark " + std::to_string(j) + " outside [-n,n]*");
                if (++per_member[static_cast<std::size_t>(owner[static_cast<std::size_t>(std::abs(j))])] > 1)
                    throw InvalidInput("more than one mark on a member of J");
            }
        }
    }

    // Member index containing +-j.
    int member_of(int j) const
    {
        for (std::size_t k = 0; k < J.size(); ++k)
            for (int e : J[k])
                if (std::abs(e) == std::abs(j)) return static_cast<int>(k);
        return -1;
    }

    // The mark of delta_1 on member k, or 0.
    int first_mark(std::size_t k) const
    {
        if (marks.empty()) return 0;
        for (int j : marks[0])
            if (member_of(j) == static_cast<int>(k)) return j;
        return 0;
    }

    friend bool operator==(const MarkedPartition& a, const MarkedPartition& b)
    {
        return a.n == b.n && a.J == b.J && a.marks == b.marks;
    }
    friend bool operator<(const MarkedPartition& a, const MarkedPartition& b)
    {
        return std::tie(a.n, a.J, a.marks) < std::tie(b.n, b.J, b.marks);
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t k = 0; k < J.size(); ++k) {
            s += k ? ",(" : "(";
            for (std::size_t t = 0; t < J[k].size(); ++t) {
                int j = J[k][t];
                s += (t ? "," : "") + std::to_string(j);
                for (std::size_t m = 0; m < marks.size(); ++m)
                    if (marks[m].count(j)) s += m == 0 ? "*" : "'";
                for (std::size_t m = 0; m < marks.size(); ++m)
                    if (marks[m].count(-j)) s += m == 0 ? "_" : "_'";
            }
            s += ")";
        }
        return s + "}";
    }
};

// Canonical signed partition of a partition lambda: consecutive blocks.
inline std::vector<std::vector<int>> canonical_members(const Partition& lambda)
{
    std::vector<std::vector<int>> J;
    int next = 1;
    for (int part : lambda) {
        std::vector<int> m;
        for (int t = 0; t < part; ++t) m.push_back(next++);
        J.push_back(std::move(m));
    }
    return J;
}

// Underlying partition if J is canonical, empty otherwise.
inline Partition canonical_shape(const MarkedPartition& s)
{
    Partition lambda;
    for (const auto& m : s.J) lambda.push_back(static_cast<int>(m.size()));
    if (!is_partition(lambda) || canonical_members(lambda) != s.J) return {};
    return lambda;
}

namespace detail {

// #_ and #^ of a marked member: entries <= mark, entries > mark.
inline int count_below(const std::vector<int>& member, int mark)
{
    return static_cast<int>(std::count_if(member.begin(), member.end(), [mark](int j) { return j <= mark; }));
}
inline int count_above(const std::vector<int>& member, int mark)
{
    return static_cast<int>(std::count_if(member.begin(), member.end(), [mark](int j) { return j > mark; }));
}

} // namespace detail

inline bool is_strict(const MarkedPartition& s)
{
    try {
        s.validate();
    } catch (const InvalidInput&) {
        return false;
    }
    if (canonical_shape(s).empty()) return false;                           // 1
    if (s.marks.size() == 2 && !s.marks[1].empty()) return false;           // 2
    if (!s.marks.empty())
        for (int j : s.marks[0])
            if (j < 0) return false;
    const std::size_t r = s.J.size();
    for (std::size_t k = 0; k < r; ++k)                                      // 3
        for (std::size_t m = k + 1; m < r; ++m)
            if (s.J[k].size() == s.J[m].size() && s.first_mark(m) != 0) return false;
    for (std::size_t k = 0; k < r; ++k)                                      // 4
        for (std::size_t m = 0; m < r; ++m) {
            int a = s.first_mark(k), b = s.first_mark(m);
            if (a == 0 || b == 0 || s.J[k].size() <= s.J[m].size()) continue;
            if (!(detail::count_below(s.J[k], a) > detail::count_below(s.J[m], b))) return false;
            if (!(detail::count_above(s.J[k], a) > detail::count_above(s.J[m], b))) return false;
        }
    return true;
}

inline constexpr int kDefaultStrictRankBound = 8;

// Strict 1-marked partitions of n, ordered by partition (decreasing) and then
// by marks.
inline std::vector<MarkedPartition> enumerate_strict(int n, int bound = kDefaultStrictRankBound)
{
    if (n < 1) throw InvalidInput("rank must be positive");
    if (n > bound)
        throw BoundExceeded("strict enumeration: rank " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
    std::vector<MarkedPartition> out;
    for (const Partition& lambda : partitions(n)) {
        MarkedPartition base;
        base.n = n;
        base.J = canonical_members(lambda);
        base.marks.resize(1);
        // choice[k] = 0 (unmarked) or position+1 of the mark in member k
        std::vector<int> choice(base.J.size(), 0);
        for (;;) {
            MarkedPartition s = base;
            for (std::size_t k = 0; k < choice.size(); ++k)
                if (choice[k] > 0) s.marks[0].insert(s.J[k][static_cast<std::size_t>(choice[k] - 1)]);
            if (is_strict(s)) out.push_back(std::move(s));
            std::size_t k = 0;
            while (k < choice.size() && choice[k] == static_cast<int>(base.J[k].size())) choice[k++] = 0;
            if (k == choice.size()) break;
            ++choice[k];
        }
    }
    return out;
}

inline Bipartition springer_bipartition(const MarkedPartition& s)
{
    if (!is_strict(s)) throw PreconditionFailed("springer_bipartition needs a strict marked partition");
    const std::size_t r = s.J.size();
    std::vector<int> lam2(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const int lk = static_cast<int>(s.J[k].size());
        if (int a = s.first_mark(k)) {
            lam2[k] = detail::count_below(s.J[k], a);
            continue;
        }
        int v = 0;
        for (std::size_t m = 0; m < r; ++m) {
            int b = s.first_mark(m);
            if (b == 0 || m == k) continue;
            if (m > k) v = std::max(v, detail::count_below(s.J[m], b));
            if (m < k) v = std::max(v, lk - detail::count_above(s.J[m], b));
        }
        lam2[k] = v;
    }
    Bipartition bp;
    for (std::size_t k = 0; k < r; ++k) {
        int l2 = lam2[k];
        int l1 = static_cast<int>(s.J[k].size()) - l2;
        if (l1 > 0) bp.lambda1.push_back(l1);
        if (l2 > 0) bp.lambda2.push_back(l2);
    }
    if (!is_partition(bp.lambda1) || !is_partition(bp.lambda2))
        throw InexactDivision("bipartition components are not partitions for " + s.to_string());
    return bp;
}

// w . sigma: entries and marks are moved by w.
inline MarkedPartition weyl_act_marked(const WeylElement& w, const MarkedPartition& s)
{
    if (w.rank() != s.n) throw InvalidInput("rank mismatch between Weyl element and marked partition");
    MarkedPartition r = s;
    for (auto& m : r.J)
        for (int& j : m) j = w(j);
    for (auto& mk : r.marks) {
        std::set<int> moved;
        for (int j : mk) moved.insert(w(j));
        mk = std::move(moved);
    }
    return r;
}

// Normal form with every coordinate 1 in the canonical basis. The V1 part is
// split by foot function: delta_1 feeds X0, delta_2 feeds X1.
inline ExoticVector normal_form(const MarkedPartition& s)
{
    s.validate();
    ExoticVector X(s.n);
    for (std::size_t m = 0; m < s.marks.size(); ++m)
        for (int j : s.marks[m]) X.set_x(Weight::eps(s.n, j), Rational(1), static_cast<int>(m));
    for (const auto& member : s.J)
        for (std::size_t t = 0; t + 1 < member.size(); ++t)
            X.set_y(Weight::eps_diff(s.n, member[t], member[t + 1]), Rational(1));
    return X;
}

} // namespace exotic
