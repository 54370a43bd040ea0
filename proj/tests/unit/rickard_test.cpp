#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace windowcalc;

namespace
{

QPolynomial q(std::initializer_list<std::pair<int, int>> terms)
{
    QPolynomial p;
    for (const auto &[d, c] : terms) {
        p.add_term(d, c);
    }
    return p;
}

} // namespace

TEST(Rickard, PoincareExamples)
{
    EXPECT_EQ(poincare_centered(2, 4), q({{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(poincare_centered(0, n), QPolynomial(1));
    }
    EXPECT_EQ(poincare_centered(1, 2), q({{-1, 1}, {1, 1}}));
    EXPECT_THROW(poincare_centered(3, 2), PreconditionError);
}

TEST(Rickard, PoincareIsPalindromicWithBinomialTotal)
{
    for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= n; ++m) {
            const QPolynomial p = poincare_centered(m, n);
            EXPECT_EQ(p, p.bar());
            EXPECT_EQ(p.at_one(), oracle::binomial(n, m));
        }
    }
}

TEST(Rickard, BettiExamples)
{
    EXPECT_EQ(betti(4, 2, 2), 2);
    EXPECT_EQ(betti(4, 2, 0), 1);
    EXPECT_EQ(betti(4, 2, 5), 0);
    EXPECT_THROW(betti(2, 3, 0), PreconditionError);
}

TEST(Rickard, BettiMatchesGaussianBinomial)
{
    for (int i = 0; i <= 10; ++i) {
        for (int l = 0; l <= i; ++l) {
            const QPolynomial g = gaussian_binomial(i, l);
            Integer total = 0;
            for (int r = 0; r <= l * (i - l) + 1; ++r) {
                const Integer b = betti(i, l, r);
                ASSERT_EQ(b, g.coefficient(r)) << i << " " << l << " " << r;
                total += b;
            }
            ASSERT_EQ(total, oracle::binomial(i, l));
        }
    }
}

TEST(Rickard, Sl2Compositions)
{
    EXPECT_EQ(sl2_composition(Sl2Kind::E, 0, 2, 4), poincare_centered(2, 4));
    EXPECT_EQ(sl2_composition(Sl2Kind::E, 1, 3, 3), QPolynomial(1));
    for (int k = 1; k <= 3; ++k) {
        for (int N = 2 * k; N <= 2 * k + 2; ++N) {
            for (int i = 1; i <= k; ++i) {
                // F^{k-i+1, n} F^{k-i, k-i+1} with n - l = N - 2k + i.
                const int l = 0;
                const int m = 1;
                const int n = N - 2 * k + i;
                EXPECT_EQ(sl2_composition(Sl2Kind::F, l, m, n), poincare_centered(1, N - 2 * k + i));
            }
        }
    }
    EXPECT_THROW(sl2_composition(Sl2Kind::E, 2, 1, 3), PreconditionError);
}

TEST(Rickard, TermCatalog)
{
    for (int k = 0; k <= 6; ++k) {
        const auto cat = term_catalog(k);
        ASSERT_EQ(cat.size(), static_cast<std::size_t>(k) + 1);
        EXPECT_EQ(cat.front().i, k);
        EXPECT_EQ(cat.front().internal_shift, -k * k - k);
        EXPECT_EQ(cat.back().i, 0);
        EXPECT_EQ(cat.back().internal_shift, 0);
        EXPECT_EQ(cat.back().support_rank_bound, k);
        for (const auto &t : cat) {
            EXPECT_EQ(t.internal_shift, -t.i * t.i - t.i);
            if (t.i == 1) {
                EXPECT_EQ(t.internal_shift, -2);
            }
        }
    }
}

TEST(Rickard, CopiesExamples)
{
    const auto c21 = copies_of_term(2, 1);
    ASSERT_EQ(c21.size(), 2u);
    EXPECT_EQ(c21[0].lambda, Partition());
    EXPECT_EQ(c21[0].total_degree, -6);
    EXPECT_EQ(c21[1].lambda, Partition({1}));
    EXPECT_EQ(c21[1].total_degree, -8);
    const auto c20 = copies_of_term(2, 0);
    ASSERT_EQ(c20.size(), 1u);
    EXPECT_EQ(c20[0].total_degree, -8);
    for (int i = 1; i <= 8; ++i) {
        for (int l = 0; l < i; ++l) {
            EXPECT_EQ(Integer(copies_of_term(i, l).size()), oracle::binomial(i, l));
        }
    }
    EXPECT_THROW(copies_of_term(2, 2), PreconditionError);
}

TEST(Rickard, DegreeIdentity)
{
    for (int i = 2; i <= 9; ++i) {
        for (int l = 1; l <= i - 1; ++l) {
            for (int r = 0; r <= l * (i - l); ++r) {
                const int here = copy_degree(i, l, r);
                EXPECT_EQ(here, copy_degree(i, l - 1, r - (i - l)));
                EXPECT_EQ(here, copy_degree(i, l + 1, r + (i - l - 1)));
            }
        }
    }
}

TEST(Rickard, CancellationExamples)
{
    const Matching m2 = cancellation_matching(2);
    ASSERT_EQ(m2.pairs.size(), 1u);
    EXPECT_EQ(m2.pairs[0].first, (Copy{0, Partition(), 0, -8}));
    EXPECT_EQ(m2.pairs[0].second, (Copy{1, Partition({1}), 1, -8}));
    EXPECT_EQ(m2.leftover, (Copy{1, Partition(), 0, -6}));
    EXPECT_EQ(m2.alternate_leftover_degree, -5);

    const Matching m1 = cancellation_matching(1);
    EXPECT_TRUE(m1.pairs.empty());
    EXPECT_EQ(m1.leftover, (Copy{0, Partition(), 0, -2}));

    EXPECT_THROW(cancellation_matching(0), PreconditionError);
}

TEST(Rickard, CancellationIsAPerfectMatching)
{
    for (int i = 1; i <= 8; ++i) {
        const Matching m = cancellation_matching(i);
        std::set<Copy> used;
        for (const auto &[a, b] : m.pairs) {
            EXPECT_EQ(a.total_degree, b.total_degree);
            EXPECT_EQ(a.l + 1, b.l);
            EXPECT_TRUE(used.insert(a).second);
            EXPECT_TRUE(used.insert(b).second);
        }
        EXPECT_TRUE(used.insert(m.leftover).second);
        Integer total = 0;
        for (int l = 0; l < i; ++l) {
            total += oracle::binomial(i, l);
        }
        EXPECT_EQ(Integer(used.size()), total);
        EXPECT_EQ(m.leftover.l, i - 1);
        EXPECT_TRUE(m.leftover.lambda.empty());
        EXPECT_EQ(m.leftover.total_degree, -i * i - i);
        EXPECT_EQ(m.alternate_leftover_degree, -i * i - 1);
    }
}
