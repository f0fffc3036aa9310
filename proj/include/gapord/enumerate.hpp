#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btheta.hpp"
#include "cnf.hpp"
#include "gapseq.hpp"
#include "pi.hpp"
#include "theta.hpp"
#include "veblen.hpp"

// Bounded, deterministic enumeration of every term system. Unary systems come
// out by length, then lexicographically on the index word; CNF ordinals and
// binary terms come out in increasing order of their own comparison.

namespace gapord {

namespace detail {

// All words over {0..n-1} of length <= max_len that pass `keep_next`, which
// sees the word so far and a candidate next letter. Shorter words first, then
// lexicographic.
template <class KeepNext>
std::vector<std::vector<int>> words(int n, std::size_t max_len, KeepNext keep_next) {
    std::vector<std::vector<int>> out{{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (int x = 0; x < n; ++x)
                if (keep_next(out[k], x)) {
                    std::vector<int> w = out[k];
                    w.push_back(x);
                    out.push_back(std::move(w));
                }
        level_begin = level_end;
    }
    return out;
}

inline void require_positive(int n, const char* what) {
    if (n <= 0)
        throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace detail

/// Every CNF ordinal with at most max_nodes omega symbols (coefficients
/// unfolded), in increasing order.
inline std::vector<CnfOrdinal> enumerate_cnf(std::size_t max_nodes) {
    // by_size[s]: all ordinals of node count exactly s, sorted.
    std::vector<std::vector<CnfOrdinal>> by_size(max_nodes + 1);
    by_size[0].push_back(CnfOrdinal{});
    std::vector<std::pair<CnfOrdinal, std::size_t>> exponents; // with their node counts, sorted descending
    for (std::size_t s = 1; s <= max_nodes; ++s) {
        // New exponents: ordinals of size s - 1.
        for (const auto& e : by_size[s - 1])
            exponents.emplace_back(e, s - 1);
        std::sort(exponents.begin(), exponents.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
        // Non-increasing exponent lists with total weight sum(1 + |e|) == s.
        std::vector<CnfOrdinal> found;
        std::vector<std::size_t> picks;
        std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t left) {
            if (left == 0) {
                std::vector<CnfOrdinal::Term> terms;
                for (std::size_t k : picks) {
                    if (!terms.empty() && terms.back().exponent == exponents[k].first)
                        terms.back().coefficient += 1;
                    else
                        terms.push_back({exponents[k].first, 1});
                }
                found.push_back(CnfOrdinal::from_terms(std::move(terms)));
                return;
            }
            for (std::size_t k = from; k < exponents.size(); ++k) {
                std::size_t w = 1 + exponents[k].second;
                if (w > left)
                    continue;
                picks.push_back(k);
                extend(k, left - w);
                picks.pop_back();
            }
        };
        extend(0, s);
        by_size[s] = std::move(found);
    }
    std::vector<CnfOrdinal> all;
    for (auto& v : by_size)
        all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

/// phi-chains of at most max_nodes symbols with subscripts 0..max_sub.
inline std::vector<VeblenTerm<unsigned>> enumerate_veblen_nat(unsigned max_sub, std::size_t max_nodes) {
    std::vector<VeblenTerm<unsigned>> out;
    for (auto& w : detail::words(static_cast<int>(max_sub) + 1, max_nodes, [](const auto&, int) { return true; }))
        out.push_back(VeblenTerm<unsigned>::from_chain(std::vector<unsigned>(w.begin(), w.end())));
    return out;
}

/// phi-chains of at most max_nodes symbols over the given subscripts.
template <class Sub>
std::vector<VeblenTerm<Sub>> enumerate_veblen(const std::vector<Sub>& subs, std::size_t max_nodes) {
    std::vector<VeblenTerm<Sub>> out;
    int k = static_cast<int>(subs.size());
    for (auto& w : detail::words(k, max_nodes, [](const auto&, int) { return true; })) {
        std::vector<Sub> chain;
        for (int x : w)
            chain.push_back(subs[x]);
        out.push_back(VeblenTerm<Sub>::from_chain(std::move(chain)));
    }
    return out;
}

/// Wellformed terms of pi(n) with at most max_len symbols.
inline std::vector<PiTerm> enumerate_pi(int n, std::size_t max_len) {
    detail::require_positive(n, "pi bound");
    std::vector<PiTerm> out;
    for (auto& w : detail::words(n, max_len, [](const auto&, int) { return true; })) {
        PiTerm t = PiTerm::from_word(std::move(w));
        if (pi_validate(t, n))
            out.push_back(std::move(t));
    }
    return out;
}

/// pi_0(n): wellformed terms that are zero or have head index 0.
inline std::vector<PiTerm> enumerate_pi0(int n, std::size_t max_len) {
    auto all = enumerate_pi(n, max_len);
    std::erase_if(all, [](const PiTerm& t) { return !t.is_zero() && t.index() != 0; });
    return all;
}

/// Members of a bounded theta system with lh <= max_lh.
inline std::vector<ThetaTerm> enumerate_theta(const ThetaSystem& sys, std::size_t max_lh) {
    if (!sys.bound)
        throw std::invalid_argument("theta enumeration needs an index bound");
    detail::require_positive(*sys.bound, "theta bound");
    std::vector<ThetaTerm> out;
    // Prefixes of a wellformed word are wellformed; the remaining conditions
    // are checked on the full word.
    auto grow = [](const std::vector<int>& w, int x) { return w.empty() || x <= w.back() + 1; };
    for (auto& w : detail::words(*sys.bound, max_lh, grow)) {
        ThetaTerm t = ThetaTerm::from_word(std::move(w));
        if (theta_validate(t, sys))
            out.push_back(std::move(t));
    }
    return out;
}

struct SeqFilter {
    bool sbar = false;
    std::optional<int> first_at_most;
};

/// Sequences over {0..n-1} of length <= max_len, optionally restricted to
/// S-bar_n and/or a bound on the first label.
inline std::vector<GapSequence> enumerate_gapseq(int n, std::size_t max_len, SeqFilter filter = {}) {
    detail::require_positive(n, "alphabet bound");
    auto grow = [&](const std::vector<int>& w, int x) {
        if (w.empty())
            return !filter.first_at_most || x <= *filter.first_at_most;
        return !filter.sbar || x <= w.back() + 1;
    };
    std::vector<GapSequence> out;
    for (auto& w : detail::words(n, max_len, grow))
        out.emplace_back(std::move(w), n);
    return out;
}

enum class BinSystem { t, ot, ot0 };

/// Binary theta-terms with at most max_size nodes in T_n, OT_n or OT_n[0],
/// grouped by size and ordered by the node layout within a size.
inline std::vector<BinThetaTerm> enumerate_btheta(int n, std::size_t max_size, BinSystem sys) {
    detail::require_positive(n, "binary theta bound");
    bool ordered = sys != BinSystem::t;
    std::vector<std::vector<BinThetaTerm>> by_size(max_size + 1);
    by_size[0].push_back(BinThetaTerm::zero());
    for (std::size_t s = 1; s <= max_size; ++s)
        for (int i = 0; i < n; ++i)
            for (std::size_t ls = 0; ls < s; ++ls)
                for (const auto& l : by_size[ls]) {
                    if (l.level() > i + 1 || (ordered && !k_set(i, l).empty()))
                        continue;
                    for (const auto& r : by_size[s - 1 - ls])
                        if (r.level() <= i)
                            by_size[s].push_back(BinThetaTerm::node(i, l, r));
                }
    std::vector<BinThetaTerm> out;
    for (auto& v : by_size)
        for (auto& t : v)
            if (sys != BinSystem::ot0 || t.level() <= 0)
                out.push_back(std::move(t));
    return out;
}

} // namespace gapord
