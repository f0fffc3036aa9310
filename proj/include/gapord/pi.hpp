#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detail/scanner.hpp"

namespace gapord {

/// A term of the syntactic collapsing system built from 0 and D_i. Every
/// symbol is unary, so a term is its index word read outermost first:
/// D_{i1} D_{i2} ... D_{ik} 0.
class PiTerm {
public:
    PiTerm() = default;

    static PiTerm zero() { return {}; }

    static PiTerm d(int index, const PiTerm& argument) {
        if (index < 0)
            throw std::invalid_argument("negative index");
        PiTerm t;
        t.word_.reserve(argument.word_.size() + 1);
        t.word_.push_back(index);
        t.word_.insert(t.word_.end(), argument.word_.begin(), argument.word_.end());
        return t;
    }

    static PiTerm from_word(std::vector<int> word) {
        if (std::any_of(word.begin(), word.end(), [](int i) { return i < 0; }))
            throw std::invalid_argument("negative index");
        PiTerm t;
        t.word_ = std::move(word);
        return t;
    }

    bool is_zero() const noexcept { return word_.empty(); }
    int index() const { return word_.at(0); }

    PiTerm argument() const {
        if (is_zero())
            throw std::invalid_argument("zero has no argument");
        return from_word(std::vector<int>(word_.begin() + 1, word_.end()));
    }

    std::span<const int> word() const noexcept { return word_; }
    std::size_t length() const noexcept { return word_.size(); }

    friend bool operator==(const PiTerm&, const PiTerm&) = default;

private:
    std::vector<int> word_;
};

/// Zero is least; D_j a' against D_k b' compares (j, a') with (k, b')
/// lexicographically. On index words that is plain lexicographic order with
/// a proper prefix below its extensions.
inline std::strong_ordering pi_compare(std::span<const int> a, std::span<const int> b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

inline std::strong_ordering pi_compare(const PiTerm& a, const PiTerm& b) {
    return pi_compare(a.word(), b.word());
}

inline std::strong_ordering operator<=>(const PiTerm& a, const PiTerm& b) { return pi_compare(a, b); }

/// G_i(a) as the list of distinct suffixes of a: walk down while the head
/// index is at least i and collect each argument.
inline std::vector<PiTerm> g_set(int i, const PiTerm& a) {
    std::vector<PiTerm> out;
    auto w = a.word();
    for (std::size_t p = 0; p < w.size() && w[p] >= i; ++p)
        out.push_back(PiTerm::from_word(std::vector<int>(w.begin() + p + 1, w.end())));
    return out;
}

namespace detail {

// G_i(arg) < arg for the node at position `node`.
inline bool pi_node_ok(std::span<const int> w, std::size_t node) {
    int i = w[node];
    auto arg = w.subspan(node + 1);
    for (std::size_t p = 0; p < arg.size() && arg[p] >= i; ++p)
        if (pi_compare(arg.subspan(p + 1), arg) >= 0)
            return false;
    return true;
}

} // namespace detail

/// Wellformedness in pi(n) (or pi(omega) when no bound is given): every index
/// is below the bound and every D_i node satisfies G_i(arg) < arg.
inline bool pi_validate(const PiTerm& a, std::optional<int> bound = std::nullopt) {
    auto w = a.word();
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (bound && w[p] >= *bound)
            return false;
        if (!detail::pi_node_ok(w, p))
            return false;
    }
    return true;
}

/// Membership in pi_0(n): zero or a wellformed term with head index 0.
inline bool in_pi0(const PiTerm& a, int bound) {
    return pi_validate(a, bound) && (a.is_zero() || a.index() == 0);
}

inline std::string to_string(const PiTerm& a) {
    std::string out;
    for (int i : a.word())
        out += "D" + std::to_string(i) + "(";
    out += "0";
    out.append(a.length(), ')');
    return out;
}

namespace detail {

inline PiTerm parse_pi(Scanner& in) {
    std::vector<int> word;
    while (in.accept('D')) {
        word.push_back(in.small_natural());
        in.expect('(');
    }
    std::size_t at = in.position();
    if (in.digits() != "0")
        throw ParseError(at, "expected '0' or 'D<i>('");
    for (std::size_t k = 0; k < word.size(); ++k)
        in.expect(')');
    return PiTerm::from_word(std::move(word));
}

} // namespace detail

/// Parses `0` or `D{i}(A)`. Syntax only; wellformedness is checked by pi_validate.
inline PiTerm parse_pi(std::string_view text) {
    detail::Scanner in(text);
    PiTerm t = detail::parse_pi(in);
    in.finish();
    return t;
}

} // namespace gapord
