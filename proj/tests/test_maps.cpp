#include <gtest/gtest.h>

#include "gapord/enumerate.hpp"
#include "gapord/maps.hpp"
#include "oracles.hpp"

using namespace gapord;

namespace {

ThetaTerm T(const char* s) { return parse_theta(s); }
CnfOrdinal C(const char* s) { return parse_cnf(s); }
PiTerm D(int i, const PiTerm& a) { return PiTerm::d(i, a); }
const PiTerm Z = PiTerm::zero();

ThetaTerm v(int i, const ThetaTerm& a) {
    std::vector<int> w{i};
    w.insert(w.end(), a.word().begin(), a.word().end());
    return ThetaTerm::from_word(std::move(w));
}

ThetaTerm d_oracle(int i, const ThetaTerm& a) {
    if (a.level() <= i)
        return v(i, a);
    return v(i, d_oracle(i + 1, a));
}

ThetaTerm bar_oracle(const PiTerm& a) {
    if (a.is_zero())
        return ThetaTerm::zero();
    return d_oracle(a.index() + 1, bar_oracle(a.argument()));
}

} // namespace

TEST(Maps, Chi) {
    using V = VeblenTerm<unsigned>;
    EXPECT_EQ(chi(V::zero()), ThetaTerm::zero());
    EXPECT_EQ(chi(V::phi(0, V::zero())), T("v0 0"));
    EXPECT_EQ(chi(V::phi(2, V::phi(0, V::zero()))), T("v0 v1 v1 v0 0"));
}

TEST(Maps, ChiStd) {
    EXPECT_EQ(chi_std(C("0")), ThetaTerm::zero());
    EXPECT_EQ(chi_std(C("2")), T("v0 v0 0"));
    EXPECT_EQ(chi_std(C("w")), T("v0 v1 v0 v1 v0 0"));
    EXPECT_THROW(chi_std(omega_tower(3)), std::invalid_argument);
}

TEST(Maps, DOp) {
    EXPECT_EQ(d_op(0, ThetaTerm::zero()), T("v0 0"));
    EXPECT_EQ(d_op(1, T("v0 0")), T("v1 v0 0"));
    EXPECT_EQ(d_op(0, T("v2 0")), T("v0 v1 v2 v2 0"));
    for (const auto& a : enumerate_theta(ThetaSystem::bounded(4), 4))
        for (int i = 0; i < 4; ++i)
            ASSERT_EQ(d_op(i, a), d_oracle(i, a)) << i << " " << to_string(a);
}

TEST(Maps, Bar) {
    EXPECT_EQ(bar(Z), ThetaTerm::zero());
    EXPECT_EQ(bar(D(0, Z)), T("v1 0"));
    EXPECT_EQ(bar(D(0, D(1, Z))), T("v1 v2 v2 0"));
    for (const auto& a : enumerate_pi(3, 5))
        ASSERT_EQ(bar(a), bar_oracle(a)) << to_string(a);
}

TEST(Maps, Psi) {
    using V = VeblenTerm<PiTerm>;
    EXPECT_EQ(psi_map(V::zero(), 2), ThetaTerm::zero());
    EXPECT_EQ(psi_map(V::phi(D(0, Z), V::zero()), 2), T("v0 0"));
    EXPECT_EQ(psi_map(V::phi(D(0, D(1, Z)), V::zero()), 2), T("v0 v1 v2 v2 0"));
    EXPECT_EQ(psi_map(V::phi(D(0, Z), V::phi(D(0, Z), V::zero())), 2), T("v0 v0 0"));
    EXPECT_THROW(psi_map(V::phi(D(1, Z), V::zero()), 2), std::invalid_argument);
}

TEST(Maps, TupleCompare) {
    OmegaTuple a{C("1"), ThetaTerm::zero(), C("1"), 1, 1};
    OmegaTuple b{C("1"), T("v0 0"), C("1"), 1, 1};
    OmegaTuple c{C("2"), ThetaTerm::zero(), C("1"), 1, 1};
    EXPECT_TRUE(tuple_compare(a, b) < 0);
    EXPECT_TRUE(tuple_compare(b, c) < 0);
    EXPECT_TRUE(tuple_compare(a, a) == 0);
    OmegaTuple other{C("1"), ThetaTerm::zero(), C("1"), 2, 1};
    EXPECT_THROW(tuple_compare(a, other), std::invalid_argument);
    EXPECT_TRUE(tuple_normal(a));
    EXPECT_FALSE(tuple_normal({C("1"), ThetaTerm::zero(), C("w"), 1, 1}));
}

TEST(Maps, TauAnchors) {
    EXPECT_EQ(tau_zero(ThetaTerm::zero(), 1), CnfOrdinal());
    EXPECT_EQ(tau_zero(T("v0 0"), 1), C("1"));
    EXPECT_EQ(tau_zero(T("v0 v0 0"), 1), C("w + 1"));
    auto t = tau_tuple(1, T("v1 0"), 1);
    EXPECT_EQ(t.omega_coeff, C("1"));
    EXPECT_EQ(t.theta_part, ThetaTerm::zero());
    EXPECT_EQ(t.tail, C("1"));
    EXPECT_THROW(tau_zero(T("v1 0"), 1), std::invalid_argument);
    EXPECT_THROW(tau_tuple(1, T("v2 0"), 1), std::invalid_argument);
}

TEST(Maps, TauMatchesClosedForm) {
    for (int n = 1; n <= 2; ++n)
        for (int m = 0; m <= n; ++m)
            for (const auto& a : enumerate_theta(ThetaSystem::bounded_leveled(n + 1, m), 6)) {
                if (m == 0) {
                    ASSERT_EQ(tau_zero(a, n), oracle::tau0(a, n)) << to_string(a);
                    continue;
                }
                auto got = tau_tuple(m, a, n);
                auto want = oracle::tau_closed(m, a, n);
                ASSERT_EQ(got.omega_coeff, want.coeff) << m << " " << to_string(a);
                ASSERT_EQ(got.theta_part, want.middle) << m << " " << to_string(a);
                ASSERT_EQ(got.tail, want.tail) << m << " " << to_string(a);
            }
}

TEST(Maps, TauZeroBound) {
    for (int n = 1; n <= 2; ++n)
        for (const auto& a : enumerate_theta(ThetaSystem::bounded_leveled(n + 1, 0), 6))
            ASSERT_TRUE(tau0_bound(a, n)) << to_string(a);
}
