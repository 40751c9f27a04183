#include <gtest/gtest.h>

#include <map>
#include <random>

#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"
#include "support/generators.hpp"

using namespace latcon;
using latcon::testing::random_poset;

namespace {

Poset n5_poset() { return Poset::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}); }
Poset m3_poset() { return Poset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

// Closure of the cover list, computed with a plain boolean matrix.
std::vector<std::vector<bool>> closure_of_covers(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) m[i][i] = true;
    for (auto [a, b] : p.covers()) m[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][k] && m[k][j]) m[i][j] = true;
    return m;
}

}  // namespace

TEST(PosetFromCovers, Singleton) {
    const Poset p = Poset::from_covers(1, {});
    EXPECT_EQ(p.size(), 1);
    EXPECT_TRUE(p.leq(0, 0));
    EXPECT_TRUE(p.covers().empty());
}

TEST(PosetFromCovers, ChainClosure) {
    const Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.leq(0, 2));
    EXPECT_FALSE(p.leq(2, 0));
    const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}};
    EXPECT_EQ(p.covers(), expected);
}

TEST(PosetFromCovers, NonCoverPairsAreReduced) {
    const Poset p = Poset::from_covers(3, {{0, 2}, {0, 1}, {1, 2}});
    const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}};
    EXPECT_EQ(p.covers(), expected);
}

TEST(PosetFromCovers, CycleIsRejected) {
    try {
        Poset::from_covers(2, {{0, 1}, {1, 0}});
        FAIL() << "expected CycleError";
    } catch (const CycleError& e) {
        EXPECT_EQ(e.witness(), std::make_pair(0, 1));
    }
}

TEST(PosetFromCovers, LongCycleIsRejected) {
    EXPECT_THROW(Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}), CycleError);
}

TEST(PosetFromCovers, IndexOutOfRange) {
    EXPECT_THROW(Poset::from_covers(2, {{0, 2}}), IndexError);
    EXPECT_THROW(Poset::from_covers(2, {{-1, 0}}), IndexError);
}

TEST(PosetFromCovers, SizeLimit) {
    EXPECT_THROW(Poset::from_covers(kMaxElements + 1, {}), SizeError);
    EXPECT_NO_THROW(make_chain_poset(kMaxElements));
    EXPECT_TRUE(make_chain_poset(kMaxElements).leq(0, kMaxElements - 1));
}

TEST(PosetFromUpSets, RejectsNonTransitive) {
    EXPECT_THROW(Poset::from_up_sets({0b011, 0b110, 0b100}), NotQuasiorderError);
    EXPECT_THROW(Poset::from_up_sets({0b10}), NotQuasiorderError);
    EXPECT_THROW(Poset::from_up_sets({0b11, 0b11}), CycleError);
}

TEST(PosetProperty, ReductionThenClosureIsIdentity) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 12;
        const Poset p = random_poset(rng, n, 0.3);
        EXPECT_EQ(closure_of_covers(p), latcon::testing::relation_matrix(p));
        // Every cover pair is a cover: nothing strictly between.
        for (auto [a, b] : p.covers())
            for (int c = 0; c < n; ++c) EXPECT_FALSE(p.lt(a, c) && p.lt(c, b));
    }
}

TEST(Dual, ChainReversesCovers) {
    const Poset d = make_chain_poset(3).dual();
    EXPECT_TRUE(d.leq(2, 0));
    const std::vector<std::pair<int, int>> expected{{1, 0}, {2, 1}};
    EXPECT_EQ(d.covers(), expected);
}

TEST(Dual, N5IsSelfDualUpToIsomorphism) {
    const Poset p = n5_poset();
    EXPECT_EQ(canonical_form(dual(p)), canonical_form(p));
    EXPECT_NE(dual(p), p);
}

TEST(Dual, Singleton) { EXPECT_EQ(dual(make_chain_poset(1)), make_chain_poset(1)); }

TEST(Dual, InvolutionOnRandomPosets) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Poset p = random_poset(rng, 1 + trial % 10, 0.35);
        EXPECT_EQ(dual(dual(p)), p);
        EXPECT_EQ(canonical_form(dual(dual(p))), canonical_form(p));
    }
}

TEST(CanonicalForm, RelabelledChainsAgree) {
    const Poset a = Poset::from_covers(3, {{0, 1}, {1, 2}});
    const Poset b = Poset::from_covers(3, {{2, 0}, {0, 1}});
    EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, ChainVersusAntichain) {
    EXPECT_NE(canonical_form(make_chain_poset(3)), canonical_form(make_antichain_poset(3)));
}

TEST(CanonicalForm, N5VersusM3) { EXPECT_NE(canonical_form(n5_poset()), canonical_form(m3_poset())); }

TEST(CanonicalForm, InvariantUnderRandomRelabelling) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 14;
        const Poset p = random_poset(rng, n, 0.25);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(p.relabel(perm)), canonical_form(p));
        EXPECT_EQ(canonical_poset(p.relabel(perm)), canonical_poset(p));
    }
}

TEST(CanonicalForm, CanonicalLabellingIsAnIsomorphism) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Poset p = random_poset(rng, 1 + trial % 9, 0.4);
        const std::vector<int> lab = canonical_labeling(p);
        const Poset c = canonical_poset(p);
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) EXPECT_EQ(p.leq(a, b), c.leq(lab[a], lab[b]));
    }
}

// Every labelled poset on n points, grouped by canonical form: each class
// must have exactly n!/|Aut| members, and the totals must be the known
// numbers of labelled posets (1, 1, 3, 19, 219, 4231).
TEST(CanonicalForm, OrbitCountingUpToFive) {
    const std::vector<std::uint64_t> labelled{1, 1, 3, 19, 219, 4231};
    const std::vector<std::size_t> unlabelled{1, 1, 2, 5, 16, 63};
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) slots.emplace_back(i, j);
        std::map<std::string, std::pair<Poset, std::uint64_t>> classes;
        std::uint64_t total = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
            std::vector<Mask> up(n);
            for (int i = 0; i < n; ++i) up[i] = bits::bit(i);
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((code >> s) & 1U) up[slots[s].first] |= bits::bit(slots[s].second);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                bits::for_each(up[i], [&](int j) { ok = ok && (up[j] & ~up[i]) == 0; });
                for (int j = i + 1; j < n && ok; ++j)
                    if (bits::has(up[i], j) && bits::has(up[j], i)) ok = false;
            }
            if (!ok) continue;
            ++total;
            const Poset p = Poset::from_up_sets(up);
            auto [it, inserted] = classes.try_emplace(canonical_form(p), p, 0);
            ++it->second.second;
        }
        EXPECT_EQ(total, labelled[n]) << "n=" << n;
        EXPECT_EQ(classes.size(), unlabelled[n]) << "n=" << n;
        std::uint64_t factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        for (const auto& [form, entry] : classes)
            EXPECT_EQ(entry.second * latcon::testing::automorphism_count(entry.first), factorial) << "n=" << n;
    }
}

TEST(FindEmbedding, ChainIntoN5) {
    const auto m = find_embedding(make_chain_poset(3), n5_poset());
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_embedding(make_chain_poset(3), n5_poset(), m->map));
    EXPECT_EQ(m->map, (std::vector<int>{0, 1, 3}));
}

TEST(FindEmbedding, AntichainIntoChain) {
    EXPECT_FALSE(find_embedding(make_antichain_poset(3), make_chain_poset(8)).has_value());
}

TEST(FindEmbedding, BooleanIntoItself) {
    const Poset b3 = make_boolean(3).poset();
    const auto m = find_embedding(b3, b3);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->map, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(FindEmbedding, LargerIntoSmaller) {
    EXPECT_FALSE(find_embedding(make_chain_poset(4), make_chain_poset(3)).has_value());
}

TEST(FindEmbedding, InducedNotJustOrderPreserving) {
    // A 2-antichain maps into a 2-chain order-preservingly but not induced.
    EXPECT_FALSE(find_embedding(make_antichain_poset(2), make_chain_poset(2)).has_value());
    EXPECT_TRUE(find_embedding(make_antichain_poset(2), n5_poset()).has_value());
}

TEST(FindEmbedding, AgreesWithBruteForceOracle) {
    std::mt19937 rng(99);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int kn = 1 + static_cast<int>(rng() % 6);
        const int ln = 1 + static_cast<int>(rng() % 6);
        const Poset k = random_poset(rng, kn, 0.4);
        const Poset l = random_poset(rng, ln, 0.4);
        const auto m = find_embedding(k, l);
        const bool oracle = latcon::testing::embeds_brute_force(k, l);
        ASSERT_EQ(m.has_value(), oracle) << "trial " << trial;
        if (m) {
            EXPECT_TRUE(is_embedding(k, l, m->map));
            ++positives;
        } else {
            ++negatives;
        }
    }
    EXPECT_GT(positives, 100);
    EXPECT_GT(negatives, 100);
}

TEST(IsEmbedding, RejectsNonInjectiveAndBadIndices) {
    const Poset c2 = make_chain_poset(2);
    EXPECT_FALSE(is_embedding(c2, c2, {0, 0}));
    EXPECT_FALSE(is_embedding(c2, c2, {0, 2}));
    EXPECT_FALSE(is_embedding(c2, c2, {1, 0}));
    EXPECT_FALSE(is_embedding(c2, c2, {0}));
}

TEST(CountDownsets, Antichain) { EXPECT_EQ(count_downsets(make_antichain_poset(3)), 8U); }
TEST(CountDownsets, Chain) { EXPECT_EQ(count_downsets(make_chain_poset(4)), 5U); }
TEST(CountDownsets, Empty) { EXPECT_EQ(count_downsets(make_antichain_poset(0)), 1U); }

TEST(CountDownsets, QuotientOfN5) {
    // One bottom below two incomparable tops.
    const Poset v = Poset::from_covers(3, {{2, 0}, {2, 1}});
    EXPECT_EQ(count_downsets(v), 5U);
    EXPECT_EQ(latcon::testing::downsets_brute_force(v), 5U);
}

TEST(CountDownsets, LargeAntichainIsExact) {
    EXPECT_EQ(count_downsets(make_antichain_poset(40)), std::uint64_t{1} << 40);
}

TEST(CountDownsets, AgreesWithSubsetEnumeration) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Poset p = random_poset(rng, 1 + trial % 14, 0.2 + 0.05 * (trial % 5));
        EXPECT_EQ(count_downsets(p), latcon::testing::downsets_brute_force(p));
    }
}

TEST(CountHereditaryQuasi, Identity) {
    EXPECT_EQ(count_hereditary_quasi({0b001, 0b010, 0b100}), 8U);
}

TEST(CountHereditaryQuasi, FullRelation) {
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(count_hereditary_quasi(QuasiRelation(k, bits::all(k))), 2U);
}

TEST(CountHereditaryQuasi, MutualPairPlusLoner) {
    EXPECT_EQ(count_hereditary_quasi({0b011, 0b011, 0b100}), 4U);
}

TEST(CountHereditaryQuasi, Errors) {
    EXPECT_THROW(count_hereditary_quasi({0b10, 0b10}), NotQuasiorderError);
    // 0 rel 1, 1 rel 2, but not 0 rel 2.
    EXPECT_THROW(count_hereditary_quasi({0b011, 0b110, 0b100}), NotQuasiorderError);
}

// Random quasiorders: the quotient count must match a subset scan on the
// quasiorder itself, and the quotient classes must be the mutual classes.
TEST(CountHereditaryQuasi, AgreesWithDirectCount) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 6;
        std::bernoulli_distribution coin(0.3);
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rel[i][j] = i == j || coin(rng);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel[i][k] && rel[k][j]) rel[i][j] = true;
        QuasiRelation q(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][j]) q[i] |= bits::bit(j);
        EXPECT_EQ(count_hereditary_quasi(q), latcon::testing::hereditary_brute_force(rel));
        const QuasiQuotient quo = quotient_of_quasiorder(q);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                EXPECT_EQ(quo.class_of[i] == quo.class_of[j], rel[i][j] && rel[j][i]);
                EXPECT_EQ(quo.poset.leq(quo.class_of[i], quo.class_of[j]), rel[i][j]);
            }
    }
}

TEST(LinearExtension, RespectsOrder) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Poset p = random_poset(rng, 1 + trial % 12, 0.3);
        const std::vector<int> order = linear_extension(p);
        std::vector<int> pos(p.size());
        for (int i = 0; i < p.size(); ++i) pos[order[i]] = i;
        for (auto [a, b] : p.covers()) EXPECT_LT(pos[a], pos[b]);
    }
}
