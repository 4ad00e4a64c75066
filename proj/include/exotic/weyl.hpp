#pragma once

// Root system and Weyl group of type C_n, and the weights of the exotic
// representation V = V1 + V2 of Sp(2n).
//
// Conventions:
//   * A Weight is an integer vector in the epsilon basis; eps_{-i} = -eps_i.
//   * A WeylElement is a signed permutation in one-line form: image[i-1] = w(i),
//     with w(-i) = -w(i). Products compose as functions, (u * v)(i) = u(v(i)),
//     so apply(u * v, x) == apply(u, apply(v, x)).
//   * Simple roots: alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = 2 eps_n.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "exotic/error.hpp"

namespace exotic {

struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    // eps_i for i in [-n, n]*.
    static Weight eps(int n, int i)
    {
        Weight w = zero(n);
        w[std::abs(i)] = i > 0 ? 1 : -1;
        return w;
    }
    // eps_i - eps_j for signed indices.
    static Weight eps_diff(int n, int i, int j) { return eps(n, i) - eps(n, j); }

    int rank() const { return static_cast<int>(coords.size()); }
    // 1-based coordinate access.
    int& operator[](int i) { return coords.at(static_cast<std::size_t>(i - 1)); }
    int operator[](int i) const { return coords.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const
    {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
    }
    int l1_norm() const
    {
        return std::accumulate(coords.begin(), coords.end(), 0,
                               [](int a, int c) { return a + std::abs(c); });
    }
    int linf_norm() const
    {
        int m = 0;
        for (int c : coords) m = std::max(m, std::abs(c));
        return m;
    }

    Weight& operator+=(const Weight& o)
    {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords.at(k);
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords.at(k);
        return *this;
    }
    Weight operator-() const
    {
        Weight r = *this;
        for (int& c : r.coords) c = -c;
        return r;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a)
    {
        for (int& c : a.coords) c *= k;
        return a;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(coords[k]);
        }
        return s + ")";
    }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

inline int dot(const Weight& a, const Weight& b)
{
    return std::inner_product(a.coords.begin(), a.coords.end(), b.coords.begin(), 0);
}

// Membership in Q_{>=0} R+ minus {0}: the cone spanned by the simple roots is
// cut out by nonnegative partial sums of the coordinates.
inline bool is_positive(const Weight& w)
{
    if (w.is_zero()) return false;
    int partial = 0;
    for (int c : w.coords) {
        partial += c;
        if (partial < 0) return false;
    }
    return true;
}

inline Weight simple_root(int n, int i)
{
    if (i < 1 || i > n) throw InvalidInput("simple root index out of range");
    if (i < n) return Weight::eps_diff(n, i, i + 1);
    return 2 * Weight::eps(n, n);
}

// <lambda, alpha_i^vee>.
inline int coroot_pairing(const Weight& lambda, int i)
{
    const int n = lambda.rank();
    if (i < n) return lambda[i] - lambda[i + 1];
    return lambda[n];
}

inline Weight reflect(int i, const Weight& lambda)
{
    return lambda - coroot_pairing(lambda, i) * simple_root(lambda.rank(), i);
}

inline std::vector<Weight> positive_roots(int n)
{
    std::vector<Weight> r;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            r.push_back(Weight::eps_diff(n, i, j));
            r.push_back(Weight::eps(n, i) + Weight::eps(n, j));
        }
        r.push_back(2 * Weight::eps(n, i));
    }
    return r;
}

inline std::vector<Weight> all_roots(int n)
{
    std::vector<Weight> r = positive_roots(n);
    const std::size_t m = r.size();
    for (std::size_t k = 0; k < m; ++k) r.push_back(-r[k]);
    return r;
}

// Weights of V1: one entry +-1.
inline bool is_v1_weight(const Weight& w)
{
    return w.l1_norm() == 1 && w.linf_norm() == 1;
}
// Nonzero weights of V2: two entries +-1 in distinct positions.
inline bool is_v2_weight(const Weight& w)
{
    return w.l1_norm() == 2 && w.linf_norm() == 1;
}
inline bool is_exotic_weight(const Weight& w) { return is_v1_weight(w) || is_v2_weight(w); }

// The bijection between roots and nonzero exotic weights: +-2eps_i <-> +-eps_i,
// short roots map to themselves.
inline Weight root_to_exotic_weight(const Weight& root)
{
    if (root.linf_norm() == 2 && root.l1_norm() == 2) {
        Weight w = root;
        for (int& c : w.coords) c /= 2;
        return w;
    }
    if (!is_v2_weight(root)) throw InvalidInput("not a root of type C: " + root.to_string());
    return root;
}
inline Weight exotic_weight_to_root(const Weight& w)
{
    if (is_v1_weight(w)) return 2 * w;
    if (!is_v2_weight(w)) throw InvalidInput("not an exotic weight: " + w.to_string());
    return w;
}

// Psi(V+): eps_i and eps_i +- eps_j for i < j. Cardinality n^2.
inline std::vector<Weight> positive_part_weights(int n)
{
    std::vector<Weight> r;
    for (int i = 1; i <= n; ++i) {
        r.push_back(Weight::eps(n, i));
        for (int j = i + 1; j <= n; ++j) {
            r.push_back(Weight::eps_diff(n, i, j));
            r.push_back(Weight::eps(n, i) + Weight::eps(n, j));
        }
    }
    return r;
}

// Psi(V) minus the zero weight: V1 weights then V2 weights, each in sorted order.
inline std::vector<Weight> exotic_weights(int n)
{
    std::set<Weight> v1, v2;
    for (int i = 1; i <= n; ++i) {
        v1.insert(Weight::eps(n, i));
        v1.insert(Weight::eps(n, -i));
        for (int j = i + 1; j <= n; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) v2.insert(a * Weight::eps(n, i) + b * Weight::eps(n, j));
    }
    std::vector<Weight> r(v1.begin(), v1.end());
    r.insert(r.end(), v2.begin(), v2.end());
    return r;
}

class WeylElement {
public:
    WeylElement() = default;

    // image[k] = w(k+1), a signed index; throws unless a signed permutation.
    explicit WeylElement(std::vector<int> image) : image_(std::move(image))
    {
        const int n = rank();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : image_) {
            int a = std::abs(v);
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
                throw InvalidInput("not a signed permutation");
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    static WeylElement identity(int n)
    {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return WeylElement(std::move(im));
    }
    static WeylElement simple(int n, int i)
    {
        WeylElement w = identity(n);
        if (i < 1 || i > n) throw InvalidInput("simple reflection index out of range");
        if (i < n) {
            std::swap(w.image_[static_cast<std::size_t>(i - 1)], w.image_[static_cast<std::size_t>(i)]);
        } else {
            w.image_[static_cast<std::size_t>(n - 1)] = -n;
        }
        return w;
    }
    // Product of simple reflections, leftmost factor applied last.
    static WeylElement word(int n, const std::vector<int>& letters)
    {
        WeylElement w = identity(n);
        for (int i : letters) w = w * simple(n, i);
        return w;
    }

    int rank() const { return static_cast<int>(image_.size()); }
    const std::vector<int>& one_line() const { return image_; }

    // Action on [-n, n]*.
    int operator()(int j) const
    {
        int v = image_.at(static_cast<std::size_t>(std::abs(j) - 1));
        return j > 0 ? v : -v;
    }

    Weight apply(const Weight& lambda) const
    {
        Weight r = Weight::zero(rank());
        for (int i = 1; i <= rank(); ++i) {
            int t = (*this)(i);
            r[std::abs(t)] += t > 0 ? lambda[i] : -lambda[i];
        }
        return r;
    }

    WeylElement inverse() const
    {
        std::vector<int> inv(image_.size());
        for (int i = 1; i <= rank(); ++i) {
            int t = (*this)(i);
            inv[static_cast<std::size_t>(std::abs(t) - 1)] = t > 0 ? i : -i;
        }
        return WeylElement(std::move(inv));
    }

    friend WeylElement operator*(const WeylElement& u, const WeylElement& v)
    {
        std::vector<int> im(v.image_.size());
        for (int i = 1; i <= v.rank(); ++i) im[static_cast<std::size_t>(i - 1)] = u(v(i));
        return WeylElement(std::move(im));
    }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.image_ == b.image_; }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.image_ < b.image_; }

    // Number of positive roots sent to negative roots.
    int length() const
    {
        int l = 0;
        for (const Weight& a : positive_roots(rank()))
            if (!is_positive(apply(a))) ++l;
        return l;
    }

    bool is_identity() const { return *this == identity(rank()); }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t k = 0; k < image_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(image_[k]);
        }
        return s + "]";
    }

private:
    std::vector<int> image_;
};

inline std::ostream& operator<<(std::ostream& os, const WeylElement& w) { return os << w.to_string(); }

inline constexpr int kDefaultWeylRankBound = 6;

// All 2^n n! signed permutations, in increasing lexicographic one-line order.
inline std::vector<WeylElement> enumerate_weyl(int n, int bound = kDefaultWeylRankBound)
{
    if (n < 1) throw InvalidInput("rank must be positive");
    if (n > bound)
        throw BoundExceeded("Weyl group enumeration: rank " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> im = perm;
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) im[static_cast<std::size_t>(k)] = -im[static_cast<std::size_t>(k)];
            out.emplace_back(std::move(im));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// #(Psi(V+) cap w Psi(V+)).
inline int positive_overlap(const WeylElement& w)
{
    int c = 0;
    for (const Weight& psi : positive_part_weights(w.rank()))
        if (is_positive(w.apply(psi))) ++c;
    return c;
}

} // namespace exotic
