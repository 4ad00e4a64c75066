#include <gtest/gtest.h>

#include <random>

#include "exotic/exotic_rep.hpp"

using namespace exotic;

namespace {

MarkedPartition mp(int n, std::vector<std::vector<int>> J, std::vector<std::set<int>> marks = {})
{
    MarkedPartition s;
    s.n = n;
    s.J = std::move(J);
    s.marks = std::move(marks);
    return s;
}

// Partition numbers from Euler's recurrence over generalized pentagonals.
long partition_count(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long sgn = (k % 2) ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g2)];
        }
    return p[static_cast<std::size_t>(n)];
}

long bipartition_count(int n)
{
    long s = 0;
    for (int k = 0; k <= n; ++k) s += partition_count(k) * partition_count(n - k);
    return s;
}

// All bipartitions of n by brute force over compositions of each half.
std::set<Bipartition> all_bipartitions(int n)
{
    std::set<Bipartition> out;
    std::function<void(int, int, Partition&, std::vector<Partition>&)> gen =
        [&](int rem, int maxp, Partition& cur, std::vector<Partition>& acc) {
            if (rem == 0) {
                acc.push_back(cur);
                return;
            }
            for (int p = 1; p <= std::min(rem, maxp); ++p) {
                cur.push_back(p);
                gen(rem - p, p, cur, acc);
                cur.pop_back();
            }
        };
    for (int k = 0; k <= n; ++k) {
        std::vector<Partition> a, b;
        Partition cur;
        gen(k, k, cur, a);
        gen(n - k, n - k, cur, b);
        for (const auto& x : a)
            for (const auto& y : b) out.insert({x, y});
    }
    return out;
}

} // namespace

TEST(NormalForm, BlockFormula)
{
    ExoticVector a = normal_form(mp(2, {{1, 2}}, {{}}));
    EXPECT_TRUE(a.x[0].empty());
    ASSERT_EQ(a.y.size(), 1u);
    EXPECT_EQ(a.y.begin()->first, Weight({1, -1}));

    ExoticVector b = normal_form(mp(2, {{1}, {2}}, {{1}}));
    ASSERT_EQ(b.x[0].size(), 1u);
    EXPECT_EQ(b.x[0].begin()->first, Weight({1, 0}));
    EXPECT_TRUE(b.y.empty());

    EXPECT_TRUE(normal_form(mp(1, {{1}})).is_zero());
}

TEST(NormalForm, RejectsMalformed)
{
    EXPECT_THROW(normal_form(mp(2, {{1, 1}})), InvalidInput);
    EXPECT_THROW(normal_form(mp(2, {{1}})), InvalidInput);
    EXPECT_THROW(normal_form(mp(2, {{1, 2}}, {{1, 2}})), InvalidInput);
    EXPECT_THROW(normal_form(mp(2, {{1, 2}}, {{1, -1}})), InvalidInput);
    EXPECT_THROW(normal_form(mp(2, {{1, 3}})), InvalidInput);
}

TEST(Strict, Conditions)
{
    EXPECT_FALSE(is_strict(mp(2, {{1}, {2}}, {{1, 2}})));
    EXPECT_TRUE(is_strict(mp(2, {{1, 2}}, {{1}})));
    EXPECT_FALSE(is_strict(mp(2, {{1, -2}}, {{-2}})));
    EXPECT_FALSE(is_strict(mp(2, {{1, 2}}, {{-1}})));
    EXPECT_FALSE(is_strict(mp(2, {{2, 1}})));
    EXPECT_FALSE(is_strict(mp(3, {{1}, {2, 3}})));
    EXPECT_FALSE(is_strict(mp(2, {{1, 2}}, {{}, {1}})));
    // condition 4: (1,2,3)(4) marked at 1 and 4 gives #_ 1 vs 1
    EXPECT_FALSE(is_strict(mp(4, {{1, 2, 3}, {4}}, {{1, 4}})));
    EXPECT_TRUE(is_strict(mp(4, {{1, 2, 3}, {4}}, {{2, 4}})));
}

TEST(Strict, CountsMatchBipartitionOracle)
{
    const long expected[] = {2, 5, 10, 20, 36, 65};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(bipartition_count(n), expected[n - 1]);
        EXPECT_EQ(static_cast<long>(enumerate_strict(n).size()), expected[n - 1]) << "n=" << n;
    }
    EXPECT_EQ(static_cast<long>(enumerate_strict(7).size()), bipartition_count(7));
    EXPECT_THROW(enumerate_strict(9), BoundExceeded);
}

TEST(Strict, EnumerationHasNoDuplicates)
{
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_strict(n);
        std::set<MarkedPartition> uniq(all.begin(), all.end());
        EXPECT_EQ(uniq.size(), all.size());
    }
}

TEST(Springer, Examples)
{
    EXPECT_EQ(springer_bipartition(mp(2, {{1, 2}}, {{}})), (Bipartition{{2}, {}}));
    EXPECT_EQ(springer_bipartition(mp(2, {{1, 2}}, {{1}})), (Bipartition{{1}, {1}}));
    EXPECT_EQ(springer_bipartition(mp(2, {{1}, {2}}, {{1}})), (Bipartition{{}, {1, 1}}));
    EXPECT_THROW(springer_bipartition(mp(2, {{1}, {2}}, {{1, 2}})), PreconditionFailed);
}

TEST(Springer, BijectionOntoBipartitions)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<Bipartition> image;
        for (const auto& s : enumerate_strict(n)) {
            Bipartition b = springer_bipartition(s);
            int total = 0;
            for (int p : b.lambda1) total += p;
            for (int p : b.lambda2) total += p;
            EXPECT_EQ(total, n);
            EXPECT_TRUE(image.insert(b).second) << "collision at " << s.to_string();
        }
        EXPECT_EQ(image, all_bipartitions(n)) << "n=" << n;
    }
}

TEST(WeylAction, Examples)
{
    MarkedPartition s = mp(2, {{1, 2}}, {{}});
    EXPECT_EQ(weyl_act_marked(WeylElement::identity(2), s), s);
    MarkedPartition t = weyl_act_marked(WeylElement::simple(2, 2), s);
    EXPECT_EQ(t.J, (std::vector<std::vector<int>>{{1, -2}}));
    EXPECT_EQ(normal_form(t).y.begin()->first, Weight({1, 1}));
}

TEST(WeylAction, IsAnActionAndMovesSupports)
{
    std::mt19937 rng(11);
    for (int n = 1; n <= 3; ++n) {
        auto W = enumerate_weyl(n);
        auto S = enumerate_strict(n);
        std::uniform_int_distribution<std::size_t> pw(0, W.size() - 1), ps(0, S.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& a = W[pw(rng)];
            const auto& b = W[pw(rng)];
            const auto& s = S[ps(rng)];
            EXPECT_EQ(weyl_act_marked(a * b, s), weyl_act_marked(a, weyl_act_marked(b, s)));
            std::set<Weight> moved;
            for (const Weight& w : normal_form(s).support()) moved.insert(a.apply(w));
            EXPECT_EQ(normal_form(weyl_act_marked(a, s)).support(), moved);
        }
    }
}

TEST(MatrixModel, SingleRootVector)
{
    ExoticVector X(2);
    X.set_y(Weight({1, -1}), 1);
    RMatrix m = v2_endomorphism(X);
    int nonzero = 0;
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) ++nonzero;
    EXPECT_EQ(nonzero, 2);
    EXPECT_TRUE(is_zero_matrix(matmul(m, m)));
    EXPECT_TRUE(is_zero_matrix(v2_endomorphism(ExoticVector(2))));
}

TEST(MatrixModel, SelfAdjointTraceZeroAndRoundTrip)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            ExoticVector X(n);
            for (const Weight& w : exotic_weights(n))
                if (is_v2_weight(w)) X.set_y(w, c(rng));
            RMatrix Y = v2_endomorphism(X);
            EXPECT_EQ(trace(Y), 0);
            for (int k = 0; k < 5; ++k) {
                RVector u(static_cast<std::size_t>(2 * n)), v(static_cast<std::size_t>(2 * n));
                for (auto& e : u) e = c(rng);
                for (auto& e : v) e = c(rng);
                EXPECT_EQ(omega(n, matvec(Y, u), v), omega(n, u, matvec(Y, v)));
            }
            EXPECT_EQ(v2_from_matrix(n, Y), X);
        }
}

TEST(MatrixModel, RootMatricesAreSymplecticWithRightWeight)
{
    for (int n = 1; n <= 3; ++n)
        for (const Weight& a : all_roots(n)) {
            RMatrix E = root_matrix(a);
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j) {
                    RVector u(static_cast<std::size_t>(2 * n), 0), v(static_cast<std::size_t>(2 * n), 0);
                    u[static_cast<std::size_t>(i)] = 1;
                    v[static_cast<std::size_t>(j)] = 1;
                    EXPECT_EQ(omega(n, matvec(E, u), v) + omega(n, u, matvec(E, v)), 0);
                }
            // [E, y_psi] has weight a + psi
            for (const Weight& psi : exotic_weights(n)) {
                if (!is_v2_weight(psi)) continue;
                RMatrix Y = v2_basis_matrix(n, psi);
                RMatrix C = matsub(matmul(E, Y), matmul(Y, E));
                RVector diag;
                ExoticVector out = v2_from_matrix(n, C, &diag);
                for (const auto& [w, coef] : out.y) EXPECT_EQ(w, a + psi);
                bool diag_zero = std::all_of(diag.begin(), diag.end(), [](const Rational& r) { return r == 0; });
                if (!(a + psi).is_zero()) {
                    EXPECT_TRUE(diag_zero);
                }
            }
        }
}

TEST(MatrixModel, NormalFormJordanType)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& s : enumerate_strict(n)) {
            std::vector<int> expect;
            for (const auto& m : s.J) {
                expect.push_back(static_cast<int>(m.size()));
                expect.push_back(static_cast<int>(m.size()));
            }
            std::sort(expect.rbegin(), expect.rend());
            EXPECT_EQ(jordan_type(v2_endomorphism(normal_form(s))), expect) << s.to_string();
        }
}

TEST(Nilcone, Verdicts)
{
    for (const auto& s : enumerate_strict(3)) EXPECT_EQ(in_nilcone(normal_form(s), 1), NilconeVerdict::member);
    ExoticVector X(2);
    X.set_y(Weight({1, -1}), 1);
    X.set_y(Weight({-1, 1}), 1);
    EXPECT_EQ(in_nilcone(X, 1), NilconeVerdict::non_member);
    EXPECT_EQ(in_nilcone(ExoticVector(2), 0), NilconeVerdict::member);
    ExoticVector x2(1);
    x2.set_x(Weight({1}), 1);
    EXPECT_THROW(in_nilcone(x2, 0), InvalidInput);
}

TEST(Nilcone, UnknownWhenNilpotentWithoutCocharacter)
{
    // x at eps_1 and -eps_1: nilpotent Y = 0 but no positive cocharacter.
    ExoticVector X(1);
    X.set_x(Weight({1}), 1);
    X.set_x(Weight({-1}), 1);
    EXPECT_EQ(in_nilcone(X, 1), NilconeVerdict::unknown);
}

TEST(Nilcone, LevelTwoPairingInvariant)
{
    // x0 = e_1, x1 = e_{-1}: omega(x0, x1) = 1, so not nilpotent for the pair.
    ExoticVector X(1);
    X.set_x(Weight({1}), 1, 0);
    X.set_x(Weight({-1}), 1, 1);
    EXPECT_EQ(in_nilcone(X, 2), NilconeVerdict::non_member);
}

TEST(Nilcone, WeylTranslatesOfNormalFormsAreMembers)
{
    for (int n = 1; n <= 3; ++n) {
        auto W = enumerate_weyl(n);
        for (const auto& s : enumerate_strict(n))
            for (const auto& w : W)
                EXPECT_EQ(in_nilcone(normal_form(weyl_act_marked(w, s)), 1), NilconeVerdict::member)
                    << s.to_string() << " " << w.to_string();
    }
}

TEST(Levi, Multiplicities)
{
    EXPECT_EQ(levi_of_partition({2, 2, 1}), (std::vector<int>{2, 1}));
    EXPECT_EQ(levi_of_partition({4}), (std::vector<int>{1}));
    EXPECT_EQ(levi_of_partition({1, 1, 1}), (std::vector<int>{3}));
    EXPECT_THROW(levi_of_partition({1, 2}), InvalidInput);
}
