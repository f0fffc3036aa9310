#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cnf.hpp"
#include "pi.hpp"
#include "theta.hpp"
#include "veblen.hpp"

namespace gapord {

/// chi(0) = 0, chi(phi_k a) = v0 v1^k chi(a).
inline ThetaTerm chi(const VeblenTerm<unsigned>& a) {
    std::vector<int> w;
    for (unsigned k : a.chain()) {
        w.push_back(0);
        w.insert(w.end(), k, 1);
    }
    return ThetaTerm::from_word(std::move(w));
}

namespace detail {

inline void chi_std_word(const CnfOrdinal& a, std::vector<int>& out) {
    if (a.is_finite()) {
        out.insert(out.end(), static_cast<std::size_t>(a.finite_value()), 0);
        return;
    }
    // a < w^{w^n} for the least n, so the leading exponent is a polynomial of
    // degree n - 1 in w.
    const CnfOrdinal& lead_exp = a.terms().front().exponent;
    const CnfOrdinal& degree = lead_exp.terms().front().exponent;
    if (!degree.is_finite())
        throw std::invalid_argument("chi_std: ordinal is not below w^(w^(w))");
    auto n = static_cast<std::size_t>(degree.finite_value()) + 1;
    CnfOrdinal top = CnfOrdinal::natural(static_cast<unsigned>(n - 1));

    // Split each term w^e * c with e = w^{n-1} q + r into digit q, summand w^r c.
    std::map<Natural, std::vector<CnfOrdinal::Term>> digits;
    Natural max_q = 0;
    for (const auto& t : a.terms()) {
        const auto& e = t.exponent.terms();
        Natural q = 0;
        std::size_t skip = 0;
        if (!e.empty() && e.front().exponent == top) {
            q = e.front().coefficient;
            skip = 1;
        }
        std::vector<CnfOrdinal::Term> r(e.begin() + skip, e.end());
        digits[q].push_back({CnfOrdinal::from_terms(std::move(r)), t.coefficient});
        max_q = std::max(max_q, q);
    }
    for (Natural q = 0; q <= max_q; ++q) {
        out.push_back(0);
        out.insert(out.end(), n, 1);
        auto it = digits.find(q);
        if (it != digits.end())
            chi_std_word(CnfOrdinal::from_terms(it->second), out);
    }
}

} // namespace detail

/// The map from CNF ordinals below w^{w^w} onto v0 v1 Omega_2. With n least
/// such that a < w^{w^n} and a = sum_q w^{w^{n-1} q} a_q, the image is the word
/// v0 v1^n chi(a_0) ... v0 v1^n chi(a_m) followed by 0. A finite k maps to v0^k 0.
inline ThetaTerm chi_std(const CnfOrdinal& a) {
    if (a >= omega_tower(3))
        throw std::invalid_argument("chi_std: ordinal is not below w^(w^(w))");
    std::vector<int> w;
    detail::chi_std_word(a, w);
    return ThetaTerm::from_word(std::move(w));
}

/// d_i(a) = v_i a if S(a) <= i, else v_i d_{i+1}(a).
inline ThetaTerm d_op(int i, const ThetaTerm& a) {
    if (i < 0)
        throw std::invalid_argument("negative index");
    std::vector<int> w;
    for (int j = i; j <= std::max(i, a.level()); ++j)
        w.push_back(j);
    w.insert(w.end(), a.word().begin(), a.word().end());
    return ThetaTerm::from_word(std::move(w));
}

/// bar(0) = 0, bar(D_i a) = d_{i+1}(bar a).
inline ThetaTerm bar(const PiTerm& a) {
    ThetaTerm out;
    auto w = a.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = d_op(*it + 1, out);
    return out;
}

/// psi(0) = 0, psi(phi_{D_0 a} b) = d_0(bar a)[psi b]. Subscripts must lie in pi_0(n)
/// with head index 0.
inline ThetaTerm psi_map(const VeblenTerm<PiTerm>& a, int n) {
    ThetaTerm out;
    auto chain = a.chain();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (it->is_zero() || it->index() != 0 || !pi_validate(*it, n))
            throw std::invalid_argument("psi: subscript " + to_string(*it) + " is not of the form D0(a) in pi(" +
                                        std::to_string(n) + ")");
        out = substitute(d_op(0, bar(it->argument())), out);
    }
    return out;
}

inline ThetaTerm psi_prime(const ThetaTerm& a, int n) { return to_tprime(a, n); }

/// An element Omega_m * omega_coeff + w^{f(omega_coeff)} * theta_part + tail
/// of T_m^all. The scale w^{f(omega_coeff)} is implied.
struct OmegaTuple {
    CnfOrdinal omega_coeff;
    ThetaTerm theta_part;
    CnfOrdinal tail;
    int level = 0;
    int bound = 0;

    friend bool operator==(const OmegaTuple&, const OmegaTuple&) = default;
};

inline std::strong_ordering tuple_compare(const OmegaTuple& x, const OmegaTuple& y) {
    if (x.level != y.level || x.bound != y.bound)
        throw std::invalid_argument("tuple_compare: tuples from different levels");
    if (auto c = x.omega_coeff <=> y.omega_coeff; c != 0)
        return c;
    if (auto c = theta_compare(x.theta_part, y.theta_part); c != 0)
        return c;
    return x.tail <=> y.tail;
}

/// The invariants of a tau image: tail < w^{f(coeff)}, tail zero or a
/// successor, and coeff > 0 exactly when tail > 0.
inline bool tuple_normal(const OmegaTuple& x) {
    return x.tail < CnfOrdinal::omega_power(f_hat(x.omega_coeff)) && (x.tail.is_zero() || x.tail.is_successor()) &&
           x.omega_coeff.is_zero() == x.tail.is_zero();
}

inline std::string to_string(const OmegaTuple& x) {
    return "(" + to_string(x.omega_coeff) + ", " + to_string(x.theta_part) + ", " + to_string(x.tail) + ")";
}

namespace detail {

// Omega_m * a + g * th + d with an explicit scale g = w^{ge}.
struct Tuple4 {
    CnfOrdinal a;
    ThetaTerm th;
    CnfOrdinal ge;
    CnfOrdinal d;
};

// w^z * (a, th, g, d) = (a, th, w^z g, w^z d), since w^z * Omega_m = Omega_m.
inline Tuple4 scale(const CnfOrdinal& z, Tuple4 t) {
    t.ge = cnf_add(z, t.ge);
    t.d = omega_power_times(z, t.d);
    return t;
}

inline Tuple4 add(const Tuple4& x, const Tuple4& y) {
    if (!y.a.is_zero())
        return {cnf_add(x.a, y.a), y.th, y.ge, y.d};
    if (y.th.is_zero())
        return {x.a, x.th, x.ge, cnf_add(x.d, y.d)};
    // Only Omega_m * a + (middle part) arises here: nothing of x survives
    // except its Omega coefficient.
    if (x.th.is_zero() && x.d.is_zero())
        return {x.a, y.th, y.ge, y.d};
    throw std::logic_error("tuple sum with a nonzero middle part on both sides");
}

inline Tuple4 plain(const CnfOrdinal& d) { return {{}, {}, {}, d}; }

class TauEvaluator {
public:
    TauEvaluator(std::span<const int> word, int n) : w_(word), n_(n) {}

    Tuple4 tuple(int m, std::size_t p) {
        auto key = std::make_pair(m, p);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Tuple4 r = compute(m, p);
        memo_.emplace(key, r);
        return r;
    }

    CnfOrdinal zero_level(std::size_t p) {
        if (p == w_.size())
            return {};
        if (w_[p] != 0)
            throw std::logic_error("tau_0 reached a term with positive level");
        auto [beta, eta] = upper(0, p);
        CnfOrdinal y = zero_level(p + 1 + k_offset(0, w_.subspan(p + 1)));
        CnfOrdinal inner = cnf_add(omega_power_times(f_hat(beta), y), eta);
        return cnf_add(omega_power_times(CnfOrdinal::omega_power(beta), inner), CnfOrdinal::natural(1));
    }

private:
    ThetaTerm suffix(std::size_t p) const { return ThetaTerm::from_word(w_.subspan(p)); }

    // tau_{m+1} of the argument of the node at p, split as (beta, eta).
    std::pair<CnfOrdinal, CnfOrdinal> upper(int m, std::size_t p) {
        Tuple4 x = tuple(m + 1, p + 1);
        if (x.th != suffix(p + 1 + k_offset(m, w_.subspan(p + 1))))
            throw std::logic_error("tau: middle part differs from k_m of the argument");
        return {x.a, x.d};
    }

    Tuple4 compute(int m, std::size_t p) {
        if (m >= n_ + 1 || p == w_.size() || w_[p] < m)
            return {{}, suffix(p), {}, {}};
        if (w_[p] > m)
            throw std::logic_error("tau_m reached a term above level m");
        // Omega_m w^beta + w^{w^beta} (w^{f(beta)} tau_m(k_m a) + eta) + 1
        auto [beta, eta] = upper(m, p);
        Tuple4 y = tuple(m, p + 1 + k_offset(m, w_.subspan(p + 1)));
        Tuple4 inner = add(scale(f_hat(beta), y), plain(eta));
        Tuple4 head{CnfOrdinal::omega_power(beta), {}, {}, {}};
        Tuple4 r = add(add(head, scale(CnfOrdinal::omega_power(beta), inner)), plain(CnfOrdinal::natural(1)));
        // The scale only matters next to a nonzero middle part.
        if (!r.th.is_zero() && r.ge != f_hat(r.a))
            throw std::logic_error("tau: scale is not w^{f(coeff)}");
        return r;
    }

    std::span<const int> w_;
    int n_;
    std::map<std::pair<int, std::size_t>, Tuple4> memo_;
};

inline void check_tau_domain(int m, const ThetaTerm& a, int n) {
    if (n < 1 || m < 0)
        throw std::invalid_argument("tau needs n >= 1 and m >= 0");
    if (!theta_validate(a, ThetaSystem::bounded_leveled(n + 1, m)))
        throw std::invalid_argument("term is not in " + to_string(ThetaSystem::bounded_leveled(n + 1, m)));
}

} // namespace detail

/// tau_m for m >= 1 on T_{n+1}[m], as an element of T_m^all.
inline OmegaTuple tau_tuple(int m, const ThetaTerm& a, int n) {
    if (m < 1)
        throw std::invalid_argument("tau_tuple needs m >= 1; use tau_zero");
    detail::check_tau_domain(m, a, n);
    detail::TauEvaluator ev(a.word(), n);
    detail::Tuple4 r = ev.tuple(m, 0);
    return {r.a, r.th, r.d, m, n};
}

/// tau_0 on T_{n+1}[0], a CNF ordinal.
inline CnfOrdinal tau_zero(const ThetaTerm& a, int n) {
    detail::check_tau_domain(0, a, n);
    return detail::TauEvaluator(a.word(), n).zero_level(0);
}

using TauValue = std::variant<CnfOrdinal, OmegaTuple>;

inline TauValue tau(int m, const ThetaTerm& a, int n) {
    if (m == 0)
        return tau_zero(a, n);
    return tau_tuple(m, a, n);
}

/// tau_0(a) < w_{n+2}.
inline bool tau0_bound(const ThetaTerm& a, int n) {
    return tau_zero(a, n) < omega_tower(static_cast<unsigned>(n + 2));
}

} // namespace gapord
