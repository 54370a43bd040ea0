#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace windowcalc;

namespace
{

const LascouxContribution *find_at(const std::vector<LascouxTerm> &terms, int index)
{
    for (const auto &t : terms) {
        if (t.homological_index == index && !t.contributions.empty()) {
            return &t.contributions.front();
        }
    }
    return nullptr;
}

void expect_euler_conserved(const LascouxSetup &s)
{
    oracle::LascouxEuler e(s);
    EXPECT_EQ(e.engine(lascoux_terms(s)), e.oracle());
}

} // namespace

TEST(Lascoux, KoszulOverAPoint)
{
    LascouxSetup s;
    s.sub_rank = 2;
    s.ambient_rank = 2;
    s.bundle = {BundleSummand{}};
    s.cotangent = {SlotPair{SlotSpace{"X", 1, false, 0}, SlotSpace{"Y", 1, true, 0}}};
    const auto terms = lascoux_terms(s);
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].homological_index, 0);
    EXPECT_EQ(terms[1].homological_index, -1);
    ASSERT_EQ(terms[1].contributions.size(), 1u);
    const auto &c = terms[1].contributions.front();
    EXPECT_EQ(c.external.at("X"), DominantWeight({1}));
    EXPECT_EQ(c.external.at("Y"), DominantWeight({-1}));
    EXPECT_EQ(c.ambient, DominantWeight::zero(2));
    expect_euler_conserved(s);
}

TEST(Lascoux, DeRhamCohomologyOfGrassmannians)
{
    for (int i = 1; i <= 5; ++i) {
        for (int l = 0; l <= i; ++l) {
            const auto terms = de_rham_terms(static_cast<std::size_t>(i), static_cast<std::size_t>(l));
            ASSERT_EQ(terms.size(), 1u);
            EXPECT_EQ(terms[0].homological_index, 0);
            std::map<int, Integer> by_degree;
            for (const auto &c : terms[0].contributions) {
                EXPECT_EQ(c.ambient, DominantWeight::zero(static_cast<std::size_t>(i)));
                EXPECT_EQ(c.cohomological_degree, c.r);
                by_degree[c.internal_degree] += c.multiplicity;
            }
            for (int r = 0; r <= l * (i - l); ++r) {
                EXPECT_EQ(by_degree[-2 * r], betti(i, l, r)) << "i=" << i << " l=" << l << " r=" << r;
            }
        }
    }
}

TEST(Lascoux, ResolutionRankOne)
{
    const auto terms = resolution_I(1, 1);
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].homological_index, 0);
    EXPECT_EQ(terms[0].contributions.front().ambient, DominantWeight({0}));
    EXPECT_EQ(terms[1].homological_index, -1);
    const auto &c = terms[1].contributions.front();
    EXPECT_EQ(c.ambient, DominantWeight({-1}));
    EXPECT_EQ(c.external.at(labels::v_prime), DominantWeight({1}));
}

TEST(Lascoux, ResolutionAtZeroIsCauchyKoszul)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto terms = resolution_I(k, 0);
        std::map<int, std::map<DominantWeight, Integer>> got;
        for (const auto &t : terms) {
            for (const auto &c : t.contributions) {
                EXPECT_EQ(c.cohomological_degree, 0);
                got[t.homological_index][c.external.at(labels::v_prime)] += c.multiplicity;
                const Partition alpha = Partition::from_weight(c.external.at(labels::v_prime));
                EXPECT_EQ(c.ambient, conjugate(alpha).as_weight(k).dual());
            }
        }
        for (int s = 0; s <= static_cast<int>(k * k); ++s) {
            std::map<DominantWeight, Integer> want;
            for (const auto &[alpha, alpha_t] : exterior_power_hom(s, k, k)) {
                want[alpha.as_weight(k)] += 1;
            }
            EXPECT_EQ(got[-s], want) << "k=" << k << " s=" << s;
        }
    }
}

TEST(Lascoux, ResolutionWeightsInBox)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto v = verify_lem_resolni(k);
        EXPECT_TRUE(v.pass()) << (v.failures.empty() ? "" : v.failures.front());
        EXPECT_GT(v.checked, 0u);
    }
    for (const auto &t : resolution_I(2, 1)) {
        for (const auto &c : t.contributions) {
            EXPECT_TRUE(c.external.at(labels::v_prime).entries_within(0, 3));
        }
    }
}

TEST(Lascoux, ResolutionsAreConcentrated)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            EXPECT_TRUE(all_concentrated(resolution_I(k, i))) << k << " " << i;
        }
    }
}

TEST(Lascoux, ResolutionBoundaryTermsReachK)
{
    // The top exterior powers put a full k-column block on V', so λ_1 = k occurs
    // for every i and never exceeds it.
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            const auto boundary = boundary_contributions(resolution_I(k, i), k);
            EXPECT_FALSE(boundary.empty());
            for (const auto &[index, c] : boundary) {
                EXPECT_EQ(c.external.at(labels::v_prime).first(), static_cast<int>(k));
            }
        }
    }
}

TEST(Lascoux, PushforwardSmallCases)
{
    const auto t = main_theorem_terms(1, 2, DominantWeight({0}), DominantWeight({0}));
    ASSERT_EQ(t.size(), 1u);
    ASSERT_EQ(t[0].contributions.size(), 1u);
    EXPECT_EQ(t[0].homological_index, 0);
    EXPECT_EQ(t[0].contributions[0].ambient, DominantWeight({0, 0}));
    EXPECT_EQ(t[0].contributions[0].external.at(labels::v_prime), DominantWeight({0}));

    for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t N = 2 * k; N <= 2 * k + 2; ++N) {
            for (const auto &mu : enumerate_dominant_in_interval(k, 0, static_cast<int>(k) + 1)) {
                const auto terms = main_theorem_terms(k, N, mu, DominantWeight::zero(k));
                const auto *c = find_at(terms, 0);
                ASSERT_NE(c, nullptr);
                bool trivial_seen = false;
                for (const auto &term : terms) {
                    for (const auto &x : term.contributions) {
                        trivial_seen = trivial_seen
                                       || (term.homological_index == 0 && x.r == 0
                                           && x.external.at(labels::v_prime) == DominantWeight::zero(k));
                    }
                }
                EXPECT_TRUE(trivial_seen) << "mu=" << mu.to_string();
            }
        }
    }

    for (const auto &term : main_theorem_terms(2, 5, DominantWeight({0, 0}), DominantWeight({1, 0}))) {
        for (const auto &c : term.contributions) {
            EXPECT_TRUE(c.external.at(labels::v_prime).entries_within(0, 5));
        }
    }
}

TEST(Lascoux, PushforwardLandsInWindow)
{
    for (std::size_t N : {4u, 5u}) {
        const auto v = verify_eq_las(2, N);
        EXPECT_TRUE(v.pass()) << (v.failures.empty() ? "" : v.failures.front());
    }
}

TEST(Lascoux, Preconditions)
{
    EXPECT_THROW(resolution_I(1, 2), PreconditionError);
    EXPECT_THROW(main_theorem_terms(2, 3, DominantWeight({0, 0}), DominantWeight({0, 0})), PreconditionError);
    EXPECT_THROW(main_theorem_terms(2, 4, DominantWeight({0, 0}), DominantWeight({2, 0})), PreconditionError);
    EXPECT_THROW(main_theorem_terms(2, 4, DominantWeight({0}), DominantWeight({0, 0})), LengthMismatchError);
    LascouxSetup s;
    s.sub_rank = 1;
    s.ambient_rank = 3;
    s.sub_label = "S";
    s.bundle = {BundleSummand{}};
    s.cotangent = {SlotPair{SlotSpace{"S", 2, false, 0}, SlotSpace{"Q", 2, true, 0}}};
    EXPECT_THROW(lascoux_terms(s), PreconditionError);
}

TEST(Lascoux, EulerCharacteristicConservation)
{
    for (std::size_t k = 1; k <= 2; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            SCOPED_TRACE("resolution k=" + std::to_string(k) + " i=" + std::to_string(i));
            expect_euler_conserved(resolution_setup(k, i));
        }
    }
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t l = 0; l <= i; ++l) {
            expect_euler_conserved(de_rham_setup(i, l));
        }
    }
    for (std::size_t N : {2u, 3u}) {
        for (int m = 0; m <= 1; ++m) {
            expect_euler_conserved(main_theorem_setup(1, N, DominantWeight({m}), DominantWeight({0})));
        }
    }
    expect_euler_conserved(main_theorem_setup(2, 4, DominantWeight({1, 0}), DominantWeight({1, 0})));
    expect_euler_conserved(main_theorem_setup(2, 4, DominantWeight({2, 1}), DominantWeight({1, 1})));
}
