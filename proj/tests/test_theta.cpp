#include <gtest/gtest.h>

#include "gapord/enumerate.hpp"
#include "gapord/theta.hpp"

using namespace gapord;

namespace {

ThetaTerm T(const char* s) { return parse_theta(s); }

// Terms as explicit trees, compared straight from the definition with
// recursion on subterm objects and k_i recomputed from scratch.
ThetaTerm k_oracle(int i, const ThetaTerm& a) {
    if (a.is_zero() || a.level() <= i)
        return a;
    return k_oracle(i, a.argument());
}

bool less_oracle(const ThetaTerm& a, const ThetaTerm& b);

bool leq_oracle(const ThetaTerm& a, const ThetaTerm& b) { return a == b || less_oracle(a, b); }

bool less_oracle(const ThetaTerm& a, const ThetaTerm& b) {
    if (a.is_zero())
        return !b.is_zero();
    if (b.is_zero())
        return false;
    int i = a.level(), j = b.level();
    if (i != j)
        return i < j;
    ThetaTerm x = a.argument(), y = b.argument();
    if (less_oracle(x, y) && less_oracle(k_oracle(i, x), b))
        return true;
    return less_oracle(y, x) && leq_oracle(a, k_oracle(j, y));
}

bool gap_oracle(const ThetaTerm& a, const ThetaTerm& b) {
    if (a.is_zero())
        return true;
    if (b.is_zero())
        return false;
    if (gap_oracle(a, k_oracle(b.level(), b.argument())))
        return true;
    return a.level() == b.level() && gap_oracle(a.argument(), b.argument());
}

} // namespace

TEST(Theta, KCoeff) {
    EXPECT_EQ(k_coeff(2, ThetaTerm::zero()), ThetaTerm::zero());
    EXPECT_EQ(k_coeff(1, T("v0 0")), T("v0 0"));
    EXPECT_EQ(k_coeff(0, T("v1 v0 0")), T("v0 0"));
}

TEST(Theta, CompareExamples) {
    EXPECT_TRUE(theta_compare(T("v0 0"), T("v1 0")) < 0);
    EXPECT_TRUE(theta_compare(T("v0 0"), T("v0 v0 0")) < 0);
    EXPECT_TRUE(theta_compare(T("v0 v0 0"), T("v0 v1 0")) < 0);
}

TEST(Theta, CompareMatchesTreeOracle) {
    for (int n = 1; n <= 3; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), 5);
        for (const auto& a : dom)
            for (const auto& b : dom) {
                auto c = theta_compare(a, b);
                ASSERT_EQ(c < 0, less_oracle(a, b)) << to_string(a) << " vs " << to_string(b);
                ASSERT_EQ(c > 0, less_oracle(b, a)) << to_string(a) << " vs " << to_string(b);
                ASSERT_EQ(c < 0, theta_less(a.word(), b.word()));
            }
    }
}

TEST(Theta, Substitute) {
    EXPECT_EQ(substitute(ThetaTerm::zero(), T("v0 0")), T("v0 0"));
    EXPECT_EQ(substitute(T("v0 0"), T("v0 0")), T("v0 v0 0"));
    EXPECT_EQ(substitute(T("v0 v1 0"), T("v0 0")), T("v0 v1 v0 0"));
    EXPECT_THROW(substitute(T("v0 0"), T("v1 0")), std::invalid_argument);
}

TEST(Theta, GapBelowExamples) {
    EXPECT_TRUE(gap_below(ThetaTerm::zero(), T("v2 v1 0")));
    EXPECT_TRUE(gap_below(T("v0 0"), T("v1 v0 0")));
    EXPECT_FALSE(gap_below(T("v1 0"), T("v0 v1 0")));
}

TEST(Theta, GapBelowMatchesTreeOracle) {
    for (int n = 1; n <= 3; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), 5);
        for (const auto& a : dom)
            for (const auto& b : dom)
                ASSERT_EQ(gap_below(a, b), gap_oracle(a, b)) << to_string(a) << " vs " << to_string(b);
    }
}

TEST(Theta, ToTPrime) {
    EXPECT_EQ(to_tprime(ThetaTerm::zero(), 2), ThetaTerm::zero());
    EXPECT_EQ(to_tprime(T("v0 0"), 2), T("v0 v1 0"));
    EXPECT_EQ(to_tprime(T("v1 0"), 2), T("v1 0"));
}

TEST(Theta, Membership) {
    EXPECT_TRUE(theta_validate(T("v0 v0 0"), ThetaSystem::bounded(1)));
    EXPECT_FALSE(theta_validate(T("v0 v2 0"), ThetaSystem::all()));
    EXPECT_TRUE(theta_validate(T("v0 v1 0"), ThetaSystem::primed(2, 0)));
    EXPECT_FALSE(theta_validate(T("v0 0"), ThetaSystem::primed(2)));
    EXPECT_FALSE(theta_validate(T("v1 0"), ThetaSystem::bounded_leveled(2, 0)));
    EXPECT_TRUE(theta_validate(T("v1 0"), ThetaSystem::bounded_leveled(2, 1)));
    EXPECT_FALSE(theta_validate(T("v2 0"), ThetaSystem::bounded(2)));
}

TEST(Theta, EnumerateT1) {
    auto t1 = enumerate_theta(ThetaSystem::bounded(1), 2);
    ASSERT_EQ(t1.size(), 3u);
    EXPECT_EQ(t1[0], ThetaTerm::zero());
    EXPECT_EQ(t1[1], T("v0 0"));
    EXPECT_EQ(t1[2], T("v0 v0 0"));
}

TEST(Theta, PrimedEnumerationMatchesFilter) {
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_theta(ThetaSystem::bounded(n), 6);
        auto primed = enumerate_theta(ThetaSystem::primed(n), 6);
        std::size_t count = 0;
        for (const auto& a : all) {
            auto w = a.word();
            bool ok = true;
            for (std::size_t p = 0; p + 1 < w.size(); ++p)
                if (w[p] < n - 1 && w[p + 1] != w[p] + 1)
                    ok = false;
            if (!w.empty() && w.back() < n - 1)
                ok = false;
            count += ok;
        }
        EXPECT_EQ(primed.size(), count) << "n = " << n;
    }
}

TEST(Theta, PrintParseRoundTrip) {
    for (const auto& a : enumerate_theta(ThetaSystem::bounded(3), 5))
        ASSERT_EQ(parse_theta(to_string(a)), a);
    EXPECT_EQ(to_string(T("v0   v1 0")), "v0 v1 0");
    EXPECT_THROW(parse_theta("v0 v1"), ParseError);
    EXPECT_THROW(parse_theta("v0 x 0"), ParseError);
}
