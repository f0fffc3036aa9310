#include <gtest/gtest.h>

#include <set>

#include "gapord/enumerate.hpp"

using namespace gapord;

TEST(Enumerate, ThetaT1) {
    auto t1 = enumerate_theta(ThetaSystem::bounded(1), 3);
    ASSERT_EQ(t1.size(), 4u);
    EXPECT_EQ(to_string(t1[3]), "v0 v0 v0 0");
}

// Terms of T_n are the words over {0..n-1} that never rise by more than one.
// Count them by the last symbol.
TEST(Enumerate, ThetaCounts) {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::size_t> ending(n, 1);
        std::size_t want = 1 + n;
        for (int len = 2; len <= 5; ++len) {
            std::vector<std::size_t> next(n, 0);
            for (int last = 0; last < n; ++last)
                for (int x = 0; x <= std::min(n - 1, last + 1); ++x)
                    next[x] += ending[last];
            ending = next;
            for (auto c : ending)
                want += c;
        }
        EXPECT_EQ(enumerate_theta(ThetaSystem::bounded(n), 5).size(), want) << n;
    }
}

TEST(Enumerate, SbarThree) {
    auto s = enumerate_gapseq(3, 2, {true, {}});
    std::vector<std::string> got;
    for (const auto& x : s)
        got.push_back(to_string(x));
    std::vector<std::string> want{"ε", "0", "1", "2", "00", "01", "10", "11", "12", "20", "21", "22"};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    for (const auto& x : enumerate_gapseq(3, 5, {true, 0}))
        EXPECT_TRUE(x.empty() || x.labels[0] == 0);
}

TEST(Enumerate, PiSubtermClosed) {
    auto dom = enumerate_pi(3, 5);
    std::set<std::string> seen;
    for (const auto& t : dom)
        seen.insert(to_string(t));
    for (const auto& t : dom) {
        ASSERT_TRUE(pi_validate(t, 3));
        if (!t.is_zero())
            EXPECT_TRUE(seen.count(to_string(t.argument()))) << to_string(t);
    }
}

TEST(Enumerate, CnfDistinct) {
    auto dom = enumerate_cnf(6);
    std::set<std::string> seen;
    for (const auto& a : dom)
        ASSERT_TRUE(seen.insert(to_string(a)).second) << to_string(a);
    EXPECT_TRUE(seen.count("w^(w)"));
    EXPECT_TRUE(seen.count("0"));
}

TEST(Enumerate, Deterministic) {
    EXPECT_EQ(enumerate_theta(ThetaSystem::bounded(3), 5), enumerate_theta(ThetaSystem::bounded(3), 5));
    EXPECT_EQ(enumerate_btheta(2, 5, BinSystem::t), enumerate_btheta(2, 5, BinSystem::t));
    auto a = enumerate_veblen_nat(2, 4), b = enumerate_veblen_nat(2, 4);
    EXPECT_TRUE(a == b);
}

TEST(Enumerate, RejectsBadBounds) {
    EXPECT_THROW(enumerate_gapseq(0, 3), std::invalid_argument);
    EXPECT_THROW(enumerate_btheta(0, 3, BinSystem::ot), std::invalid_argument);
}
