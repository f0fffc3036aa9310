#include <gtest/gtest.h>

#include "gapord/btheta.hpp"
#include "gapord/cnf.hpp"
#include "gapord/enumerate.hpp"
#include "gapord/veblen.hpp"

using namespace gapord;

namespace {

using V = VeblenTerm<unsigned>;

V phi(unsigned k, const V& a) { return V::phi(k, a); }

// phi_0 x = w^x, so a chain of k zero subscripts is a tower of height k.
CnfOrdinal tower_value(const V& a) {
    CnfOrdinal x;
    for (auto it = a.chain().rbegin(); it != a.chain().rend(); ++it)
        x = CnfOrdinal::omega_power(x);
    return x;
}

} // namespace

TEST(Veblen, CompareExamples) {
    V z = V::zero();
    EXPECT_TRUE(veblen_compare(z, phi(0, z)) < 0);
    EXPECT_TRUE(veblen_compare(phi(0, z), phi(1, z)) < 0);
    EXPECT_TRUE(veblen_compare(phi(1, z), phi(0, phi(1, z))) < 0);
}

TEST(Veblen, ZeroSubscriptChainsAreTowers) {
    V a = V::zero();
    for (int k = 0; k < 5; ++k) {
        V b = phi(0, a);
        EXPECT_TRUE(veblen_compare(a, b) < 0);
        EXPECT_LT(tower_value(a), tower_value(b));
        a = b;
    }
}

// phi_0 0 = 1, phi_0 phi_0 0 = w, phi_1 0 = epsilon_0: a chain whose
// subscripts are all 0 lies below phi_1 0.
TEST(Veblen, ZeroChainsBelowPhiOne) {
    V e0 = phi(1, V::zero());
    for (const auto& a : enumerate_veblen_nat(0, 6))
        EXPECT_TRUE(veblen_compare(a, e0) < 0) << to_string(a);
}

TEST(Veblen, CompareAgreesWithClauseOrder) {
    auto dom = enumerate_veblen_nat(2, 5);
    for (const auto& a : dom)
        for (const auto& b : dom) {
            auto c = veblen_compare(a, b);
            bool lt = veblen_less<unsigned>(a.chain(), b.chain());
            bool gt = veblen_less<unsigned>(b.chain(), a.chain());
            ASSERT_EQ(c < 0, lt) << to_string(a) << " vs " << to_string(b);
            ASSERT_EQ(c > 0, gt);
            ASSERT_EQ(c == 0, a == b);
        }
}

// phi_0(phi_1 0) is not a normal form, but the clauses still order it:
// subscript 1 > 0 and phi_1 0 <= the argument phi_1 0.
TEST(Veblen, NonNormalFormsCompareByClauses) {
    V e0 = phi(1, V::zero());
    EXPECT_TRUE(veblen_compare(e0, phi(0, e0)) < 0);
}

TEST(Veblen, LeveledValues) {
    auto one = LeveledOrdValue::base(1);
    auto two = LeveledOrdValue::base(2);
    EXPECT_LT(one, two);
    auto a = LeveledOrdValue::term(2, VeblenTerm<LeveledOrdValue>::from_chain({one}));
    auto b = LeveledOrdValue::term(2, VeblenTerm<LeveledOrdValue>::from_chain({two}));
    EXPECT_LT(a, b);
    EXPECT_THROW((void)(a < one), std::invalid_argument);
    EXPECT_THROW(LeveledOrdValue::term(3, VeblenTerm<LeveledOrdValue>::from_chain({one})), std::invalid_argument);
    EXPECT_EQ(to_string(a), "phi(1, 0)");
    EXPECT_EQ(parse_leveled("phi(1, 0)", 2), a);
}

TEST(Veblen, PrintParseRoundTrip) {
    for (const auto& a : enumerate_veblen_nat(3, 4))
        ASSERT_EQ(parse_veblen_nat(to_string(a)), a);
    EXPECT_EQ(to_string(phi(2, phi(0, V::zero()))), "phi(2, phi(0, 0))");
    EXPECT_THROW(parse_veblen_nat("phi(1, 0"), ParseError);
    EXPECT_THROW(parse_veblen_nat("phi(x, 0)"), ParseError);
}
