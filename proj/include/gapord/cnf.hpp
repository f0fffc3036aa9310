#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detail/scanner.hpp"

namespace gapord {

using Natural = boost::multiprecision::cpp_int;

/// An ordinal below epsilon_0 in Cantor normal form
///
///     w^{e_1} * c_1 + ... + w^{e_k} * c_k,   e_1 > ... > e_k,  c_i >= 1.
///
/// Values are always normalized; the empty term list is 0.
class CnfOrdinal {
public:
    struct Term;

    CnfOrdinal() = default;

    /// Builds an ordinal from a term list; throws std::invalid_argument if the
    /// exponents are not strictly decreasing or a coefficient is zero.
    static CnfOrdinal from_terms(std::vector<Term> terms);
    static CnfOrdinal natural(Natural k);
    static CnfOrdinal omega_power(CnfOrdinal exponent, Natural coefficient = 1);
    static CnfOrdinal omega();

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    bool is_successor() const noexcept;
    std::span<const Term> terms() const noexcept;

    /// Number of omega-power symbols when the coefficients are unfolded into
    /// repeated summands, e.g. 1 -> 1, w -> 2, w^w + 2 -> 5.
    std::size_t node_count() const;

    /// Value as an integer; requires is_finite().
    Natural finite_value() const;

    friend std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b);
    friend bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);

private:
    explicit CnfOrdinal(std::vector<Term> terms) : terms_(std::move(terms)) {}
    friend CnfOrdinal cnf_add(const CnfOrdinal&, const CnfOrdinal&);
    friend CnfOrdinal cnf_nat_sum(const CnfOrdinal&, const CnfOrdinal&);
    friend CnfOrdinal cnf_mul_natural(const CnfOrdinal&, const Natural&);
    friend CnfOrdinal omega_power_times(const CnfOrdinal&, const CnfOrdinal&);

    std::vector<Term> terms_;
};

struct CnfOrdinal::Term {
    CnfOrdinal exponent;
    Natural coefficient;
};

inline std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (auto c = x[i].exponent <=> y[i].exponent; c != 0)
            return c;
        if (x[i].coefficient != y[i].coefficient)
            return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    }
    return x.size() <=> y.size();
}

inline bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) {
    return (a <=> b) == 0;
}

inline std::strong_ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
    return a <=> b;
}

inline CnfOrdinal CnfOrdinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient <= 0)
            throw std::invalid_argument("CNF coefficient must be positive");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
    return CnfOrdinal(std::move(terms));
}

inline CnfOrdinal CnfOrdinal::natural(Natural k) {
    if (k < 0)
        throw std::invalid_argument("negative natural");
    if (k == 0)
        return {};
    std::vector<Term> t;
    t.push_back(Term{CnfOrdinal{}, std::move(k)});
    return CnfOrdinal(std::move(t));
}

inline CnfOrdinal CnfOrdinal::omega_power(CnfOrdinal exponent, Natural coefficient) {
    if (coefficient <= 0)
        throw std::invalid_argument("CNF coefficient must be positive");
    std::vector<Term> t;
    t.push_back(Term{std::move(exponent), std::move(coefficient)});
    return CnfOrdinal(std::move(t));
}

inline CnfOrdinal CnfOrdinal::omega() {
    return omega_power(natural(1));
}

inline std::span<const CnfOrdinal::Term> CnfOrdinal::terms() const noexcept {
    return terms_;
}

inline bool CnfOrdinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool CnfOrdinal::is_successor() const noexcept {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline std::size_t CnfOrdinal::node_count() const {
    std::size_t total = 0;
    for (const auto& t : terms_) {
        // Saturate instead of overflowing on huge coefficients.
        std::size_t per = 1 + t.exponent.node_count();
        if (t.coefficient > Natural(1u << 20))
            return static_cast<std::size_t>(-1);
        total += per * t.coefficient.convert_to<std::size_t>();
    }
    return total;
}

inline Natural CnfOrdinal::finite_value() const {
    if (!is_finite())
        throw std::invalid_argument("ordinal is not finite");
    return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

/// Ordinary (left-absorbing) ordinal sum a + b.
inline CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (b.is_zero())
        return a;
    const CnfOrdinal& lead = b.terms_.front().exponent;
    std::vector<CnfOrdinal::Term> out;
    for (const auto& t : a.terms_) {
        if (t.exponent < lead)
            break;
        out.push_back(t);
    }
    auto rest = b.terms_.begin();
    if (!out.empty() && out.back().exponent == lead) {
        out.back().coefficient += rest->coefficient;
        ++rest;
    }
    out.insert(out.end(), rest, b.terms_.end());
    return CnfOrdinal(std::move(out));
}

/// Natural (Hessenberg) sum: merge the term lists, adding coefficients of equal exponents.
inline CnfOrdinal cnf_nat_sum(const CnfOrdinal& a, const CnfOrdinal& b) {
    std::vector<CnfOrdinal::Term> out;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent > j->exponent)) {
            out.push_back(*i++);
        } else if (i == a.terms_.end() || j->exponent > i->exponent) {
            out.push_back(*j++);
        } else {
            out.push_back(CnfOrdinal::Term{i->exponent, i->coefficient + j->coefficient});
            ++i;
            ++j;
        }
    }
    return CnfOrdinal(std::move(out));
}

/// Natural (Hessenberg) product.
inline CnfOrdinal cnf_nat_prod(const CnfOrdinal& a, const CnfOrdinal& b) {
    CnfOrdinal result;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            result = cnf_nat_sum(result, CnfOrdinal::omega_power(cnf_nat_sum(x.exponent, y.exponent),
                                                                 x.coefficient * y.coefficient));
    return result;
}

/// Ordinal product a * k for a natural k: only the leading coefficient scales.
inline CnfOrdinal cnf_mul_natural(const CnfOrdinal& a, const Natural& k) {
    if (k < 0)
        throw std::invalid_argument("negative natural");
    if (a.is_zero() || k == 0)
        return {};
    CnfOrdinal r = a;
    r.terms_.front().coefficient *= k;
    return r;
}

/// Left multiplication by a power of omega: w^x * a.
inline CnfOrdinal omega_power_times(const CnfOrdinal& x, const CnfOrdinal& a) {
    CnfOrdinal r = a;
    for (auto& t : r.terms_)
        t.exponent = cnf_add(x, t.exponent);
    return r;
}

/// w_0[seed] = seed, w_{n+1}[seed] = w^{w_n[seed]}.
inline CnfOrdinal omega_tower(unsigned n, CnfOrdinal seed) {
    for (unsigned i = 0; i < n; ++i)
        seed = CnfOrdinal::omega_power(std::move(seed));
    return seed;
}

inline CnfOrdinal omega_tower(unsigned n) {
    return omega_tower(n, CnfOrdinal::natural(1));
}

/// Drops one copy of the leading term: w^e*c + r  ->  w^e*(c-1) + r.
inline CnfOrdinal drop_leading_power(const CnfOrdinal& a) {
    if (a.is_zero())
        throw std::invalid_argument("zero has no leading term");
    std::vector<CnfOrdinal::Term> t(a.terms().begin(), a.terms().end());
    if (t.front().coefficient == 1)
        t.erase(t.begin());
    else
        t.front().coefficient -= 1;
    return CnfOrdinal::from_terms(std::move(t));
}

/// Predecessor of a successor ordinal.
inline CnfOrdinal predecessor(const CnfOrdinal& a) {
    if (!a.is_successor())
        throw std::invalid_argument("ordinal is not a successor");
    std::vector<CnfOrdinal::Term> t(a.terms().begin(), a.terms().end());
    if (t.back().coefficient == 1)
        t.pop_back();
    else
        t.back().coefficient -= 1;
    return CnfOrdinal::from_terms(std::move(t));
}

/// f(0) = 0,  f(w^{a1} + a2) = w^{a1} + f(a1) + f(a2).
///
/// Unrolling over the leading coefficient c gives (w^{a1} + f(a1)) * c + f(rest),
/// which avoids c recursive calls.
inline CnfOrdinal f_hat(const CnfOrdinal& a) {
    if (a.is_zero())
        return {};
    const auto& lead = a.terms().front();
    CnfOrdinal block = cnf_add(CnfOrdinal::omega_power(lead.exponent), f_hat(lead.exponent));
    std::vector<CnfOrdinal::Term> rest(a.terms().begin() + 1, a.terms().end());
    return cnf_add(cnf_mul_natural(block, lead.coefficient),
                   f_hat(CnfOrdinal::from_terms(std::move(rest))));
}

/// True iff a = w^a. No ordinal below epsilon_0 qualifies.
inline bool is_epsilon_number(const CnfOrdinal& a) {
    return !a.is_zero() && a == CnfOrdinal::omega_power(a);
}

/// Maximal order type of X* given o = o(X):
///   w^{w^{o-1}} for finite o, w^{w^{o+1}} for o = epsilon + k, w^{w^o} otherwise.
inline CnfOrdinal mot_star(const CnfOrdinal& o) {
    if (o.is_zero())
        throw std::invalid_argument("mot_star: o(X) must be positive");
    if (o.is_finite())
        return omega_tower(2, CnfOrdinal::natural(o.finite_value() - 1));
    std::vector<CnfOrdinal::Term> infinite_part;
    for (const auto& t : o.terms())
        if (!t.exponent.is_zero())
            infinite_part.push_back(t);
    if (is_epsilon_number(CnfOrdinal::from_terms(std::move(infinite_part))))
        throw std::logic_error("mot_star: epsilon-number case is unreachable below epsilon_0");
    return omega_tower(2, o);
}

inline std::string to_string(const CnfOrdinal& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty())
            out += " + ";
        if (t.exponent.is_zero()) {
            out += t.coefficient.str();
            continue;
        }
        if (t.exponent == CnfOrdinal::natural(1))
            out += "w";
        else
            out += "w^(" + to_string(t.exponent) + ")";
        if (t.coefficient != 1)
            out += "*" + t.coefficient.str();
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const CnfOrdinal& a) {
    return os << to_string(a);
}

namespace detail {

inline CnfOrdinal parse_cnf_sum(Scanner& in);

inline CnfOrdinal::Term parse_cnf_term(Scanner& in) {
    if (in.peek_digit()) {
        std::size_t at = in.position();
        Natural k(in.digits());
        if (k == 0)
            throw ParseError(at, "zero is only allowed as the whole ordinal");
        return {CnfOrdinal{}, k};
    }
    if (!in.accept('w'))
        in.fail("expected 'w' or a number");
    CnfOrdinal exponent = CnfOrdinal::natural(1);
    if (in.accept('^')) {
        if (in.accept('(')) {
            exponent = parse_cnf_sum(in);
            in.expect(')');
        } else {
            exponent = CnfOrdinal::natural(Natural(in.digits()));
        }
    }
    Natural coefficient = 1;
    if (in.accept('*')) {
        std::size_t at = in.position();
        coefficient = Natural(in.digits());
        if (coefficient == 0)
            throw ParseError(at, "coefficient must be positive");
    }
    return {std::move(exponent), std::move(coefficient)};
}

inline CnfOrdinal parse_cnf_sum(Scanner& in) {
    if (in.peek() == '0') {
        std::size_t at = in.position();
        if (in.digits() == "0")
            return {};
        throw ParseError(at, "leading zeros are not allowed");
    }
    std::vector<CnfOrdinal::Term> terms;
    do {
        std::size_t at = in.position();
        auto term = parse_cnf_term(in);
        if (!terms.empty() && !(term.exponent < terms.back().exponent))
            throw ParseError(at, "exponents must be strictly decreasing");
        terms.push_back(std::move(term));
    } while (in.accept('+'));
    return CnfOrdinal::from_terms(std::move(terms));
}

} // namespace detail

/// Parses `0`, `w`, `w^(E)`, `w^k`, coefficients `*k` and `+`-separated terms.
inline CnfOrdinal parse_cnf(std::string_view text) {
    detail::Scanner in(text);
    CnfOrdinal a = detail::parse_cnf_sum(in);
    in.finish();
    return a;
}

} // namespace gapord
