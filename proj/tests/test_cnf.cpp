#include <gtest/gtest.h>

#include "gapord/cnf.hpp"
#include "gapord/enumerate.hpp"

using namespace gapord;

namespace {

CnfOrdinal P(const char* s) { return parse_cnf(s); }
CnfOrdinal N(unsigned k) { return CnfOrdinal::natural(k); }

// Ordinals below w^w as coefficient vectors (index = exponent), compared and
// added by hand. Independent of the CNF term-list code.
using Poly = std::vector<unsigned long>;

std::optional<Poly> as_poly(const CnfOrdinal& a) {
    Poly p;
    for (const auto& t : a.terms()) {
        if (!t.exponent.is_finite())
            return std::nullopt;
        auto e = static_cast<std::size_t>(t.exponent.finite_value());
        if (p.size() <= e)
            p.resize(e + 1, 0);
        p[e] = static_cast<unsigned long>(t.coefficient);
    }
    return p;
}

int poly_cmp(const Poly& a, const Poly& b) {
    for (std::size_t e = std::max(a.size(), b.size()); e-- > 0;) {
        unsigned long x = e < a.size() ? a[e] : 0;
        unsigned long y = e < b.size() ? b[e] : 0;
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

Poly poly_add(Poly a, const Poly& b) {
    std::size_t lead = b.size();
    while (lead > 0 && b[lead - 1] == 0)
        --lead;
    if (lead == 0)
        return a;
    std::size_t e = lead - 1;
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t k = 0; k < e; ++k)
        a[k] = b[k];
    a[e] += b[e];
    return a;
}

// f computed straight from the recursion on an explicit term list.
CnfOrdinal f_oracle(const CnfOrdinal& a) {
    if (a.is_zero())
        return a;
    std::vector<CnfOrdinal::Term> unfolded;
    for (const auto& t : a.terms())
        for (Natural c = 0; c < t.coefficient; ++c)
            unfolded.push_back({t.exponent, 1});
    // f(w^a1 + rest) = w^a1 + f(a1) + f(rest), evaluated right to left.
    CnfOrdinal acc;
    for (auto it = unfolded.rbegin(); it != unfolded.rend(); ++it)
        acc = cnf_add(cnf_add(CnfOrdinal::omega_power(it->exponent), f_oracle(it->exponent)), acc);
    return acc;
}

} // namespace

TEST(Cnf, CompareExamples) {
    EXPECT_EQ(cnf_compare(N(0), N(0)), std::strong_ordering::equal);
    EXPECT_EQ(cnf_compare(P("w"), P("w^(w)")), std::strong_ordering::less);
    EXPECT_EQ(cnf_compare(P("w^(w) + 1"), P("w^(w)*2")), std::strong_ordering::less);
}

TEST(Cnf, CompareAgreesWithPolynomialOracle) {
    auto dom = enumerate_cnf(7);
    std::vector<std::pair<CnfOrdinal, Poly>> small;
    for (const auto& a : dom)
        if (auto p = as_poly(a))
            small.emplace_back(a, *p);
    ASSERT_GT(small.size(), 40u);
    for (const auto& [a, pa] : small)
        for (const auto& [b, pb] : small) {
            int c = poly_cmp(pa, pb);
            auto r = cnf_compare(a, b);
            EXPECT_EQ(c < 0, r < 0) << to_string(a) << " vs " << to_string(b);
            EXPECT_EQ(c == 0, r == 0);
            auto sum = as_poly(cnf_add(a, b));
            ASSERT_TRUE(sum);
            EXPECT_EQ(poly_cmp(*sum, poly_add(pa, pb)), 0) << to_string(a) << " + " << to_string(b);
        }
}

TEST(Cnf, AddExamples) {
    EXPECT_EQ(cnf_add(N(1), P("w")), P("w"));
    EXPECT_EQ(cnf_add(P("w"), N(1)), P("w + 1"));
    EXPECT_EQ(cnf_add(P("w^(w) + w"), P("w*2 + 1")), P("w^(w) + w*3 + 1"));
}

TEST(Cnf, AddIsAssociative) {
    auto dom = enumerate_cnf(5);
    for (const auto& a : dom)
        for (const auto& b : dom)
            for (const auto& c : dom)
                ASSERT_EQ(cnf_add(cnf_add(a, b), c), cnf_add(a, cnf_add(b, c)));
}

TEST(Cnf, NaturalSumAndProduct) {
    EXPECT_EQ(cnf_nat_sum(P("w + 1"), P("w")), P("w*2 + 1"));
    EXPECT_EQ(cnf_nat_sum(P("w^(w) + 3"), N(0)), P("w^(w) + 3"));
    EXPECT_EQ(cnf_nat_prod(P("w"), P("w")), P("w^(2)"));
    EXPECT_EQ(cnf_nat_prod(P("w + 1"), N(2)), P("w*2 + 2"));
    EXPECT_EQ(cnf_nat_prod(P("w + 1"), P("w + 1")), P("w^(2) + w*2 + 1"));
}

TEST(Cnf, NaturalSumIsAssociativeAndMonotone) {
    auto dom = enumerate_cnf(5);
    for (const auto& a : dom)
        for (const auto& b : dom) {
            for (const auto& c : dom)
                ASSERT_EQ(cnf_nat_sum(cnf_nat_sum(a, b), c), cnf_nat_sum(a, cnf_nat_sum(b, c)));
            if (a < b)
                for (const auto& c : dom)
                    ASSERT_LT(cnf_nat_sum(a, c), cnf_nat_sum(b, c));
        }
}

TEST(Cnf, NaturalProductDistributes) {
    auto dom = enumerate_cnf(4);
    for (const auto& a : dom)
        for (const auto& b : dom)
            for (const auto& c : dom)
                ASSERT_EQ(cnf_nat_prod(a, cnf_nat_sum(b, c)), cnf_nat_sum(cnf_nat_prod(a, b), cnf_nat_prod(a, c)));
}

TEST(Cnf, OmegaTower) {
    EXPECT_EQ(omega_tower(0, P("w + 5")), P("w + 5"));
    EXPECT_EQ(omega_tower(2), P("w^(w)"));
    EXPECT_EQ(omega_tower(3), P("w^(w^(w))"));
    EXPECT_EQ(omega_tower(1), P("w"));
}

TEST(Cnf, FHatExamples) {
    EXPECT_EQ(f_hat(N(0)), N(0));
    EXPECT_EQ(f_hat(P("w")), P("w + 1"));
    EXPECT_EQ(f_hat(P("w^(w)")), P("w^(w) + w + 1"));
}

TEST(Cnf, FHatMatchesUnfoldedRecursion) {
    for (const auto& a : enumerate_cnf(7))
        ASSERT_EQ(f_hat(a), f_oracle(a)) << to_string(a);
}

TEST(Cnf, MotStar) {
    EXPECT_EQ(mot_star(N(2)), P("w^(w)"));
    EXPECT_EQ(mot_star(N(1)), P("w"));
    EXPECT_EQ(mot_star(P("w")), P("w^(w^(w))"));
    EXPECT_EQ(mot_star(P("w + 1")), P("w^(w^(w + 1))"));
    EXPECT_THROW(mot_star(N(0)), std::invalid_argument);
}

TEST(Cnf, PrintParseRoundTrip) {
    for (const auto& a : enumerate_cnf(7))
        ASSERT_EQ(parse_cnf(to_string(a)), a);
    EXPECT_EQ(to_string(P("w^( w )*2+w+1")), "w^(w)*2 + w + 1");
}

TEST(Cnf, ParserRejectsBadInput) {
    EXPECT_THROW(parse_cnf("1 + w"), ParseError);
    EXPECT_THROW(parse_cnf("w^(w"), ParseError);
    EXPECT_THROW(parse_cnf("w*0"), ParseError);
    EXPECT_THROW(parse_cnf(""), ParseError);
}

TEST(Cnf, Predecessor) {
    EXPECT_EQ(predecessor(P("w + 2")), P("w + 1"));
    EXPECT_THROW(predecessor(P("w")), std::invalid_argument);
}
