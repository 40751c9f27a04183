#include <gtest/gtest.h>

#include <set>

#include "latcon/enumeration.hpp"

using namespace latcon;

TEST(Enumeration, MatchesBruteForceOracle) {
    LatticeGenerator gen(7);
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(gen.level(n).size(), enumerate_lattices_oracle(n)) << n;
}

TEST(Enumeration, KnownCounts) {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53, 222, 1078, 5994};
    LatticeGenerator gen(10);
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(gen.level(n).size(), expected[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Enumeration, ClassesAreDistinctLatticesOfTheRightSize) {
    LatticeGenerator gen(9);
    for (int n = 1; n <= 9; ++n) {
        std::set<std::string> forms;
        for (const Lattice& l : gen.level(n)) {
            EXPECT_EQ(l.size(), n);
            EXPECT_NO_THROW(validate_lattice(l.poset()));
            EXPECT_TRUE(forms.insert(canonical_form(l.poset())).second);
        }
    }
}

TEST(Enumeration, ClosedUnderDuality) {
    LatticeGenerator gen(8);
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> forms;
        for (const Lattice& l : gen.level(n)) forms.insert(canonical_form(l.poset()));
        for (const Lattice& l : gen.level(n)) EXPECT_TRUE(forms.count(canonical_form(l.poset().dual())));
    }
}

TEST(Enumeration, ContainsNamedLattices) {
    LatticeGenerator gen(8);
    auto has = [&](const Lattice& x) {
        for (const Lattice& l : gen.level(x.size()))
            if (canonical_form(l.poset()) == canonical_form(x.poset())) return true;
        return false;
    };
    EXPECT_TRUE(has(make_n5()));
    EXPECT_TRUE(has(make_mk(3)));
    EXPECT_TRUE(has(make_mk(6)));
    EXPECT_TRUE(has(make_boolean(3)));
    EXPECT_TRUE(has(make_chain(8)));
    EXPECT_TRUE(has(make_product(make_chain(2), make_chain(4))));
}

TEST(Enumeration, WrapperUsesRequestedLimit) {
    EXPECT_EQ(enumerate_lattices(6).size(), 15U);
    EXPECT_EQ(enumerate_lattices(9, 9).size(), 1078U);
}

TEST(Enumeration, SizeErrors) {
    EXPECT_THROW(LatticeGenerator(0), SizeError);
    EXPECT_THROW(LatticeGenerator(kHardMaxEnumeration + 1), SizeError);
    LatticeGenerator gen(5);
    EXPECT_THROW(gen.level(6), SizeError);
    EXPECT_THROW(gen.level(0), SizeError);
    EXPECT_THROW(enumerate_lattices(10), SizeError);
    EXPECT_THROW(enumerate_lattices_oracle(kOracleMaxEnumeration + 1), SizeError);
    EXPECT_THROW(enumerate_lattices_oracle(0), SizeError);
}
