#include <gtest/gtest.h>

#include <random>
#include <set>

#include "exotic/weyl.hpp"

using namespace exotic;

namespace {

// Combinatorial length of a signed permutation. With s_n flipping the last
// sign, the letters are ordered 1 < 2 < ... < n < -n < ... < -1.
int length_oracle(const WeylElement& w)
{
    const int n = w.rank();
    auto key = [n](int a) { return a > 0 ? a : 2 * n + 1 + a; };
    int l = 0;
    for (int i = 1; i <= n; ++i) {
        if (w(i) < 0) ++l;
        for (int j = i + 1; j <= n; ++j) {
            if (key(w(i)) > key(w(j))) ++l;
            if (key(w(i)) > key(-w(j))) ++l;
        }
    }
    return l;
}

} // namespace

TEST(Weyl, ApplyExamples)
{
    auto s1 = WeylElement::simple(2, 1), s2 = WeylElement::simple(2, 2);
    EXPECT_EQ(s1.apply(Weight::eps(2, 1)), Weight::eps(2, 2));
    EXPECT_EQ(s2.apply(Weight::eps(2, 2)), Weight::eps(2, -2));
    EXPECT_EQ((s2 * s1).apply(Weight::eps(2, 1)), Weight::eps(2, -2));
}

TEST(Weyl, LengthExamples)
{
    EXPECT_EQ(WeylElement::identity(2).length(), 0);
    EXPECT_EQ(WeylElement::simple(2, 1).length(), 1);
    WeylElement w0({-1, -2});
    EXPECT_EQ(w0.length(), 4);
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : enumerate_weyl(n)) EXPECT_EQ(w.length(), length_oracle(w)) << w.to_string();
}

TEST(Weyl, EnumerationSizes)
{
    EXPECT_EQ(enumerate_weyl(1).size(), 2u);
    EXPECT_EQ(enumerate_weyl(2).size(), 8u);
    EXPECT_EQ(enumerate_weyl(3).size(), 48u);
    auto w4 = enumerate_weyl(4);
    EXPECT_EQ(std::set<WeylElement>(w4.begin(), w4.end()).size(), 384u);
    EXPECT_THROW(enumerate_weyl(7), BoundExceeded);
    EXPECT_NO_THROW(enumerate_weyl(7, 7));
}

TEST(Weyl, ActionAxioms)
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int n = 1; n <= 3; ++n) {
        auto W = enumerate_weyl(n);
        for (const auto& a : W)
            for (const auto& b : W) {
                Weight l = Weight::zero(n);
                for (int& x : l.coords) x = c(rng);
                EXPECT_EQ((a * b).apply(l), a.apply(b.apply(l)));
            }
        for (const auto& a : W) EXPECT_TRUE((a * a.inverse()).is_identity());
    }
}

TEST(Weyl, CoxeterRelations)
{
    for (int n = 2; n <= 4; ++n) {
        auto e = WeylElement::identity(n);
        for (int i = 1; i <= n; ++i) EXPECT_EQ(WeylElement::simple(n, i) * WeylElement::simple(n, i), e);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                EXPECT_EQ(WeylElement::word(n, {i, j}), WeylElement::word(n, {j, i}));
        for (int i = 1; i + 1 < n; ++i)
            EXPECT_EQ(WeylElement::word(n, {i, i + 1, i}), WeylElement::word(n, {i + 1, i, i + 1}));
        EXPECT_EQ(WeylElement::word(n, {n - 1, n, n - 1, n}), WeylElement::word(n, {n, n - 1, n, n - 1}));
        // reflect() agrees with the action of s_i
        for (int i = 1; i <= n; ++i) {
            Weight l = Weight::zero(n);
            for (int a = 1; a <= n; ++a) l[a] = 3 * a - 5;
            EXPECT_EQ(reflect(i, l), WeylElement::simple(n, i).apply(l));
        }
    }
}

TEST(Weyl, PositivePartWeights)
{
    EXPECT_EQ(positive_part_weights(1), std::vector<Weight>{Weight({1})});
    auto p2 = positive_part_weights(2);
    std::set<Weight> s2(p2.begin(), p2.end());
    EXPECT_EQ(s2, (std::set<Weight>{Weight({1, 0}), Weight({0, 1}), Weight({1, -1}), Weight({1, 1})}));
    EXPECT_EQ(positive_part_weights(3).size(), 9u);
    for (int n = 1; n <= 4; ++n)
        for (const Weight& w : positive_part_weights(n)) {
            EXPECT_TRUE(is_positive(w));
            EXPECT_TRUE(is_exotic_weight(w));
        }
}

TEST(Weyl, PositiveOverlapIdentity)
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : enumerate_weyl(n)) EXPECT_EQ(positive_overlap(w), n * n - w.length());
}

TEST(Weyl, PositivePartIsNotStable)
{
    for (int n = 1; n <= 3; ++n) {
        auto p = positive_part_weights(n);
        std::set<Weight> ps(p.begin(), p.end());
        for (const auto& w : enumerate_weyl(n)) {
            std::set<Weight> moved;
            for (const Weight& x : p) moved.insert(w.apply(x));
            EXPECT_EQ(moved == ps, w.is_identity());
        }
    }
}

TEST(Weyl, RootWeightCorrespondence)
{
    for (int n = 1; n <= 3; ++n) {
        auto roots = all_roots(n);
        EXPECT_EQ(roots.size(), static_cast<std::size_t>(2 * n * n));
        std::set<Weight> image;
        for (const Weight& a : roots) {
            Weight w = root_to_exotic_weight(a);
            EXPECT_EQ(exotic_weight_to_root(w), a);
            image.insert(w);
        }
        auto ex = exotic_weights(n);
        EXPECT_EQ(image, std::set<Weight>(ex.begin(), ex.end()));
    }
    EXPECT_THROW(root_to_exotic_weight(Weight({1, 0})), InvalidInput);
}

TEST(Weyl, RejectsBadPermutations)
{
    EXPECT_THROW(WeylElement({1, 1}), InvalidInput);
    EXPECT_THROW(WeylElement({1, 3}), InvalidInput);
    EXPECT_THROW(WeylElement::simple(2, 3), InvalidInput);
}
