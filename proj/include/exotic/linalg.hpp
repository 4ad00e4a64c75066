#pragma once

// Small dense exact linear algebra over Q: row reduction, rank, kernel,
// products, and Fourier-Motzkin feasibility for systems a.x >= b.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "exotic/scalars.hpp"

namespace exotic {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

inline RMatrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return RMatrix(rows, RVector(cols, Rational(0)));
}

inline RMatrix identity_matrix(std::size_t n)
{
    RMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline bool is_zero_matrix(const RMatrix& m)
{
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

inline RMatrix matmul(const RMatrix& a, const RMatrix& b)
{
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RMatrix c = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline RVector matvec(const RMatrix& a, const RVector& x)
{
    RVector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k) y[i] += a[i][k] * x[k];
    return y;
}

inline RMatrix matsub(RMatrix a, const RMatrix& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
    return a;
}

inline Rational trace(const RMatrix& a)
{
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> row_reduce(RMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RMatrix m) { return row_reduce(m).size(); }

// Basis of {x : m x = 0}.
inline RMatrix kernel_basis(RMatrix m, std::size_t cols)
{
    if (m.empty()) return identity_matrix(cols);
    auto pivots = row_reduce(m);
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    RMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_set.count(f)) continue;
        RVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is v in the row space of m?
inline bool in_row_span(const RMatrix& m, const RVector& v)
{
    if (m.empty()) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    }
    RMatrix ext = m;
    ext.push_back(v);
    return rank(ext) == rank(m);
}

struct Inequality {
    RVector a;
    Rational b;
};

// Decides whether {x : a_k . x >= b_k for all k} is nonempty by eliminating
// variables one at a time. Exact; exponential in the worst case, which is fine
// for the tens of constraints this library generates.
inline bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t vars)
{
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<Inequality> pos, neg, rest;
        for (auto& ineq : system) {
            if (ineq.a[v] > 0) {
                pos.push_back(std::move(ineq));
            } else if (ineq.a[v] < 0) {
                neg.push_back(std::move(ineq));
            } else {
                rest.push_back(std::move(ineq));
            }
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational cp = -q.a[v];
                Rational cq = p.a[v];
                Inequality comb;
                comb.a.resize(vars);
                for (std::size_t j = 0; j < vars; ++j) comb.a[j] = cp * p.a[j] + cq * q.a[j];
                comb.a[v] = 0;
                comb.b = cp * p.b + cq * q.b;
                rest.push_back(std::move(comb));
            }
        // Normalize and drop duplicates so the system does not blow up.
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        system.clear();
        for (auto& ineq : rest) {
            Rational scale = 0;
            for (const auto& x : ineq.a)
                if (x != 0) {
                    scale = abs(x);
                    break;
                }
            if (scale != 0) {
                for (auto& x : ineq.a) x /= scale;
                ineq.b /= scale;
            }
            if (seen.emplace(ineq.a, ineq.b).second) system.push_back(std::move(ineq));
        }
    }
    return std::all_of(system.begin(), system.end(), [](const Inequality& q) { return q.b <= 0; });
}

// Is there x with f . x > 0 for every row f?
inline bool has_positive_functional(const RMatrix& rows, std::size_t vars)
{
    std::vector<Inequality> sys;
    sys.reserve(rows.size());
    for (const auto& r : rows) sys.push_back({r, Rational(1)});
    return fourier_motzkin_feasible(std::move(sys), vars);
}

} // namespace exotic
