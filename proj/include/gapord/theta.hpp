#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detail/scanner.hpp"

namespace gapord {

/// A unary theta-term. Every symbol is unary, so the term
/// v_{i1} v_{i2} ... v_{ik} 0 is stored as its index word i1 i2 ... ik,
/// outermost first. Subterms are suffixes and substitution for the single
/// zero leaf is concatenation.
///
/// The class holds any index word; membership in T and its subsystems is a
/// separate check (see ThetaSystem).
class ThetaTerm {
public:
    ThetaTerm() = default;

    static ThetaTerm zero() { return {}; }

    static ThetaTerm theta(int index, const ThetaTerm& argument) {
        if (index < 0)
            throw std::invalid_argument("negative index");
        ThetaTerm t;
        t.word_.reserve(argument.word_.size() + 1);
        t.word_.push_back(index);
        t.word_.insert(t.word_.end(), argument.word_.begin(), argument.word_.end());
        return t;
    }

    static ThetaTerm from_word(std::vector<int> word) {
        if (std::any_of(word.begin(), word.end(), [](int i) { return i < 0; }))
            throw std::invalid_argument("negative index");
        ThetaTerm t;
        t.word_ = std::move(word);
        return t;
    }

    static ThetaTerm from_word(std::span<const int> word) {
        return from_word(std::vector<int>(word.begin(), word.end()));
    }

    bool is_zero() const noexcept { return word_.empty(); }

    /// S: index of the outermost symbol, -1 for zero.
    int level() const noexcept { return word_.empty() ? -1 : word_.front(); }

    /// lh: number of theta symbols.
    std::size_t length() const noexcept { return word_.size(); }

    ThetaTerm argument() const {
        if (is_zero())
            throw std::invalid_argument("zero has no argument");
        return from_word(std::span<const int>(word_).subspan(1));
    }

    std::span<const int> word() const noexcept { return word_; }

    friend bool operator==(const ThetaTerm&, const ThetaTerm&) = default;

private:
    std::vector<int> word_;
};

inline int level_of(std::span<const int> w) { return w.empty() ? -1 : w.front(); }

/// Offset of k_i inside w: the first position whose index is <= i.
inline std::size_t k_offset(int i, std::span<const int> w) {
    std::size_t p = 0;
    while (p < w.size() && w[p] > i)
        ++p;
    return p;
}

/// k_i(a): skip outer symbols with index > i.
inline ThetaTerm k_coeff(int i, const ThetaTerm& a) {
    return ThetaTerm::from_word(a.word().subspan(k_offset(i, a.word())));
}

/// Which family of theta-terms a term must belong to. `bound` is n in T_n,
/// `max_level` is m in T[m], and `restricted` selects T'_n.
struct ThetaSystem {
    std::optional<int> bound;
    std::optional<int> max_level;
    bool restricted = false;

    static ThetaSystem all() { return {}; }
    static ThetaSystem bounded(int n) { return {n, std::nullopt, false}; }
    static ThetaSystem leveled(int m) { return {std::nullopt, m, false}; }
    static ThetaSystem bounded_leveled(int n, int m) { return {n, m, false}; }
    static ThetaSystem primed(int n, std::optional<int> m = std::nullopt) { return {n, m, true}; }
};

inline std::string to_string(const ThetaSystem& sys) {
    std::string out = sys.restricted ? "T'" : "T";
    if (sys.bound)
        out += "_" + std::to_string(*sys.bound);
    if (sys.max_level)
        out += "[" + std::to_string(*sys.max_level) + "]";
    return out;
}

/// Wellformedness in T: every node v_i a has S(a) <= i + 1.
inline bool is_wellformed(std::span<const int> w) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] > w[p] + 1)
            return false;
    return true;
}

inline bool theta_validate(const ThetaTerm& a, const ThetaSystem& sys) {
    auto w = a.word();
    if (!is_wellformed(w))
        return false;
    if (sys.max_level && a.level() > *sys.max_level)
        return false;
    if (sys.bound) {
        int n = *sys.bound;
        if (std::any_of(w.begin(), w.end(), [n](int i) { return i >= n; }))
            return false;
    }
    if (sys.restricted) {
        if (!sys.bound)
            throw std::invalid_argument("T' needs an index bound");
        // Below the top index n-1, the argument must start exactly one level up.
        int top = *sys.bound - 1;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (w[p] < top && (p + 1 == w.size() || w[p + 1] != w[p] + 1))
                return false;
    }
    return true;
}

namespace detail {

// Three-way comparison of two suffixes, memoized on the pair of offsets.
// Every recursive call again compares a suffix of a with a suffix of b,
// so the table has (|a|+1)(|b|+1) entries.
class ThetaComparer {
public:
    ThetaComparer(std::span<const int> a, std::span<const int> b)
        : a_(a), b_(b), memo_((a.size() + 1) * (b.size() + 1), unknown) {}

    std::strong_ordering compare(std::size_t p, std::size_t q) {
        std::int8_t& slot = memo_[p * (b_.size() + 1) + q];
        if (slot != unknown)
            return slot < 0 ? std::strong_ordering::less
                   : slot > 0 ? std::strong_ordering::greater
                              : std::strong_ordering::equal;
        auto r = compute(p, q);
        slot = r < 0 ? -1 : r > 0 ? 1 : 0;
        return r;
    }

private:
    static constexpr std::int8_t unknown = 2;

    std::strong_ordering compute(std::size_t p, std::size_t q) {
        bool a_zero = p == a_.size();
        bool b_zero = q == b_.size();
        if (a_zero || b_zero)
            return b_zero <=> a_zero;
        int i = a_[p];
        int j = b_[q];
        if (i != j)
            return i <=> j;
        auto c = compare(p + 1, q + 1);
        if (c < 0) {
            // a < b  iff  k_i(alpha) < v_i beta
            std::size_t ka = p + 1 + k_offset(i, a_.subspan(p + 1));
            return compare(ka, q) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (c > 0) {
            // a < b  iff  v_i alpha <= k_i(beta)
            std::size_t kb = q + 1 + k_offset(i, b_.subspan(q + 1));
            return compare(p, kb) <= 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::span<const int> a_, b_;
    std::vector<std::int8_t> memo_;
};

} // namespace detail

/// The linear order on theta-terms. Zero is least, a smaller head index is
/// smaller, and for equal heads v_i alpha < v_i beta iff
/// (alpha < beta and k_i alpha < v_i beta) or (alpha > beta and v_i alpha <= k_i beta).
inline std::strong_ordering theta_compare(std::span<const int> a, std::span<const int> b) {
    return detail::ThetaComparer(a, b).compare(0, 0);
}

inline std::strong_ordering theta_compare(const ThetaTerm& a, const ThetaTerm& b) {
    return theta_compare(a.word(), b.word());
}

/// The strict order read clause by clause, with no appeal to trichotomy. Used
/// to cross-check theta_compare.
inline bool theta_less(std::span<const int> a, std::span<const int> b) {
    if (a.empty())
        return !b.empty();
    if (b.empty())
        return false;
    if (a[0] != b[0])
        return a[0] < b[0];
    int i = a[0];
    auto alpha = a.subspan(1);
    auto beta = b.subspan(1);
    if (theta_less(alpha, beta) && theta_less(alpha.subspan(k_offset(i, alpha)), b))
        return true;
    if (theta_less(beta, alpha)) {
        auto kb = beta.subspan(k_offset(i, beta));
        return std::equal(a.begin(), a.end(), kb.begin(), kb.end()) || theta_less(a, kb);
    }
    return false;
}

/// a[b]: replace the zero leaf of a by b. Requires S(b) <= 0.
inline ThetaTerm substitute(const ThetaTerm& a, const ThetaTerm& b) {
    if (b.level() > 0)
        throw std::invalid_argument("substituted term must have level at most 0");
    std::vector<int> w(a.word().begin(), a.word().end());
    w.insert(w.end(), b.word().begin(), b.word().end());
    return ThetaTerm::from_word(std::move(w));
}

namespace detail {

class GapBelow {
public:
    GapBelow(std::span<const int> a, std::span<const int> b)
        : a_(a), b_(b), memo_((a.size() + 1) * (b.size() + 1), unknown) {}

    bool holds(std::size_t p, std::size_t q) {
        std::int8_t& slot = memo_[p * (b_.size() + 1) + q];
        if (slot == unknown)
            slot = compute(p, q) ? 1 : 0;
        return slot == 1;
    }

private:
    static constexpr std::int8_t unknown = 2;

    bool compute(std::size_t p, std::size_t q) {
        if (p == a_.size())
            return true;
        if (q == b_.size())
            return false;
        int i = b_[q];
        std::size_t kb = q + 1 + k_offset(i, b_.subspan(q + 1));
        if (holds(p, kb))
            return true;
        return a_[p] == i && holds(p + 1, q + 1);
    }

    std::span<const int> a_, b_;
    std::vector<std::int8_t> memo_;
};

} // namespace detail

/// The gap partial order: 0 is below everything; a below k_i(beta) gives a
/// below v_i beta; a' below b' gives v_i a' below v_i b'.
inline bool gap_below(const ThetaTerm& a, const ThetaTerm& b) {
    return detail::GapBelow(a.word(), b.word()).holds(0, 0);
}

/// The map T_n -> T'_n that pads every v_i with v_{i+1} ... v_{n-1}.
inline ThetaTerm to_tprime(const ThetaTerm& a, int n) {
    if (n < 0 || !theta_validate(a, ThetaSystem::bounded(n)))
        throw std::invalid_argument("term is not in T_" + std::to_string(n));
    std::vector<int> w;
    for (int i : a.word())
        for (int j = i; j < n; ++j)
            w.push_back(j);
    return ThetaTerm::from_word(std::move(w));
}

inline std::string to_string(const ThetaTerm& a) {
    std::string out;
    for (int i : a.word())
        out += "v" + std::to_string(i) + " ";
    out += "0";
    return out;
}

namespace detail {

inline ThetaTerm parse_theta(Scanner& in) {
    std::vector<int> word;
    while (in.accept('v'))
        word.push_back(in.small_natural());
    std::size_t at = in.position();
    if (in.digits() != "0")
        throw ParseError(at, "expected '0' or 'v<i>'");
    return ThetaTerm::from_word(std::move(word));
}

} // namespace detail

/// Parses `0` or `v{i} T`, e.g. `v0 v1 v1 0`. Syntax only; membership is
/// checked by theta_validate.
inline ThetaTerm parse_theta(std::string_view text) {
    detail::Scanner in(text);
    ThetaTerm t = detail::parse_theta(in);
    in.finish();
    return t;
}

inline std::strong_ordering operator<=>(const ThetaTerm& a, const ThetaTerm& b) { return theta_compare(a, b); }

} // namespace gapord
