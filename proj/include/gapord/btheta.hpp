#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detail/scanner.hpp"
#include "gapseq.hpp"
#include "veblen.hpp"

namespace gapord {

/// A binary theta-term: 0 or th_i(left, right). Nodes are immutable and
/// shared between terms.
class BinThetaTerm {
public:
    BinThetaTerm() = default;

    static BinThetaTerm zero() { return {}; }

    static BinThetaTerm node(int index, BinThetaTerm left, BinThetaTerm right);

    bool is_zero() const noexcept { return !node_; }

    /// S: index of the root, -1 for zero.
    int level() const noexcept;

    const BinThetaTerm& left() const;
    const BinThetaTerm& right() const;

    /// Number of th-nodes.
    std::size_t size() const noexcept;

    /// Address of the shared root node (null for zero). Terms built from the
    /// same nodes share it, which lets callers index a term DAG.
    const void* identity() const noexcept { return node_.get(); }

    friend bool operator==(const BinThetaTerm& a, const BinThetaTerm& b);

private:
    struct Node;
    const Node& checked() const;

    std::shared_ptr<const Node> node_;
};

struct BinThetaTerm::Node {
    int index;
    BinThetaTerm left;
    BinThetaTerm right;
    std::size_t size;
};

inline BinThetaTerm BinThetaTerm::node(int index, BinThetaTerm left, BinThetaTerm right) {
    if (index < 0)
        throw std::invalid_argument("negative index");
    BinThetaTerm t;
    std::size_t size = 1 + left.size() + right.size();
    t.node_ = std::make_shared<const Node>(Node{index, std::move(left), std::move(right), size});
    return t;
}

inline int BinThetaTerm::level() const noexcept { return node_ ? node_->index : -1; }
inline const BinThetaTerm& BinThetaTerm::left() const { return checked().left; }
inline const BinThetaTerm& BinThetaTerm::right() const { return checked().right; }
inline std::size_t BinThetaTerm::size() const noexcept { return node_ ? node_->size : 0; }

inline const BinThetaTerm::Node& BinThetaTerm::checked() const {
    if (!node_)
        throw std::invalid_argument("zero has no children");
    return *node_;
}

inline bool operator==(const BinThetaTerm& a, const BinThetaTerm& b) {
    if (a.node_ == b.node_)
        return true;
    if (!a.node_ || !b.node_)
        return false;
    return a.node_->size == b.node_->size && a.node_->index == b.node_->index && a.node_->left == b.node_->left &&
           a.node_->right == b.node_->right;
}

namespace detail {

inline void collect_k(int j, const BinThetaTerm& a, std::vector<BinThetaTerm>& out) {
    if (a.is_zero())
        return;
    if (j < a.level()) {
        collect_k(j, a.left(), out);
        collect_k(j, a.right(), out);
    } else if (std::find(out.begin(), out.end(), a) == out.end()) {
        out.push_back(a);
    }
}

} // namespace detail

/// K_j(a): the outermost subterms with index <= j, reached through nodes of
/// index > j. Returned without duplicates.
inline std::vector<BinThetaTerm> k_set(int j, const BinThetaTerm& a) {
    std::vector<BinThetaTerm> out;
    detail::collect_k(j, a, out);
    return out;
}

/// The strict order read clause by clause. For th_i(a, b) and th_i(c, d):
///   a < c and every element of K_i a u {b} is below th_i(c, d), or
///   a = c and b < d, or
///   a > c and th_i(a, b) is <= every element of K_i c u {d}.
inline bool btheta_less(const BinThetaTerm& x, const BinThetaTerm& y) {
    if (x.is_zero())
        return !y.is_zero();
    if (y.is_zero())
        return false;
    if (x.level() != y.level())
        return x.level() < y.level();
    int i = x.level();
    const auto& a = x.left();
    const auto& c = y.left();
    if (btheta_less(a, c)) {
        auto ks = k_set(i, a);
        ks.push_back(x.right());
        if (std::all_of(ks.begin(), ks.end(), [&](const BinThetaTerm& k) { return btheta_less(k, y); }))
            return true;
    }
    if (a == c && btheta_less(x.right(), y.right()))
        return true;
    if (btheta_less(c, a)) {
        auto ks = k_set(i, c);
        ks.push_back(y.right());
        if (std::all_of(ks.begin(), ks.end(), [&](const BinThetaTerm& k) { return x == k || btheta_less(x, k); }))
            return true;
    }
    return false;
}

/// Three-way comparison. For equal heads the left children are compared once
/// and the applicable clause decides between less and greater; this agrees
/// with btheta_less wherever that relation is total.
inline std::strong_ordering btheta_compare(const BinThetaTerm& x, const BinThetaTerm& y) {
    if (x.is_zero() || y.is_zero())
        return y.is_zero() <=> x.is_zero();
    if (x.level() != y.level())
        return x.level() <=> y.level();
    int i = x.level();
    auto c = btheta_compare(x.left(), y.left());
    if (c == 0)
        return btheta_compare(x.right(), y.right());
    if (c < 0) {
        auto ks = k_set(i, x.left());
        ks.push_back(x.right());
        bool below = std::all_of(ks.begin(), ks.end(),
                                 [&](const BinThetaTerm& k) { return btheta_compare(k, y) < 0; });
        return below ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    auto ks = k_set(i, y.left());
    ks.push_back(y.right());
    bool below = std::all_of(ks.begin(), ks.end(),
                             [&](const BinThetaTerm& k) { return btheta_compare(x, k) <= 0; });
    return below ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline std::strong_ordering operator<=>(const BinThetaTerm& a, const BinThetaTerm& b) {
    return btheta_compare(a, b);
}

/// Membership in the binary system T_n: every th_i(a, b) has S(a) <= i + 1,
/// S(b) <= i and i < n.
inline bool in_bin_t(const BinThetaTerm& x, int n) {
    if (x.is_zero())
        return true;
    int i = x.level();
    return i < n && x.left().level() <= i + 1 && x.right().level() <= i && in_bin_t(x.left(), n) &&
           in_bin_t(x.right(), n);
}

/// Membership in OT_n: T_n with K_i(left) empty at every node.
inline bool in_bin_ot(const BinThetaTerm& x, int n) {
    if (x.is_zero())
        return true;
    int i = x.level();
    return i < n && x.left().level() <= i + 1 && x.right().level() <= i && k_set(i, x.left()).empty() &&
           in_bin_ot(x.left(), n) && in_bin_ot(x.right(), n);
}

/// OT_n[0], read as the members of OT_n with S <= 0.
inline bool in_bin_ot0(const BinThetaTerm& x, int n) { return x.level() <= 0 && in_bin_ot(x, n); }

/// a^-: every th_i becomes th_{i-1}. Requires K_0(a) to be empty.
inline BinThetaTerm shift_down(const BinThetaTerm& x) {
    if (x.is_zero())
        return x;
    if (x.level() == 0)
        throw std::invalid_argument("shift_down: term contains index 0");
    return BinThetaTerm::node(x.level() - 1, shift_down(x.left()), shift_down(x.right()));
}

namespace detail {

inline LeveledOrdValue o_value_unchecked(const BinThetaTerm& x, int n) {
    if (n == 1)
        return LeveledOrdValue::base(x.size());
    std::vector<LeveledOrdValue> chain;
    for (const BinThetaTerm* p = &x; !p->is_zero(); p = &p->right())
        chain.push_back(o_value_unchecked(shift_down(p->left()), n - 1));
    return LeveledOrdValue::term(n, VeblenTerm<LeveledOrdValue>::from_chain(std::move(chain)));
}

} // namespace detail

/// o_n: OT_n[0] -> level-n values. o_1 counts th_0 nodes; for n > 1,
/// o_n(th_0(a, b)) = phi_{o_{n-1}(a^-)} o_n(b).
inline LeveledOrdValue o_value(const BinThetaTerm& x, int n) {
    if (n < 1)
        throw std::invalid_argument("o_value needs n >= 1");
    if (!in_bin_ot0(x, n))
        throw std::invalid_argument("term is not in OT_" + std::to_string(n) + "[0]");
    return detail::o_value_unchecked(x, n);
}

namespace detail {

inline BinThetaTerm embed_range(const std::vector<int>& s, std::size_t from, std::size_t to) {
    if (from == to)
        return BinThetaTerm::zero();
    int i = s[from];
    std::size_t mid = from + 1;
    while (mid < to && s[mid] > i)
        ++mid;
    return BinThetaTerm::node(i, embed_range(s, from + 1, mid), embed_range(s, mid, to));
}

} // namespace detail

/// The embedding of S-bar_n into OT_n: f(i i_1..i_k j s) = th_i(f(i_1..i_k), f(j s))
/// where i_1..i_k is the maximal run of labels above i.
inline BinThetaTerm embed_seq(const GapSequence& s) {
    if (!in_sbar(s))
        throw std::invalid_argument("sequence has a rise of more than one");
    return detail::embed_range(s.labels, 0, s.size());
}

inline std::string to_string(const BinThetaTerm& x) {
    if (x.is_zero())
        return "0";
    return "th" + std::to_string(x.level()) + "(" + to_string(x.left()) + ", " + to_string(x.right()) + ")";
}

namespace detail {

inline BinThetaTerm parse_btheta(Scanner& in) {
    if (in.accept("th")) {
        int i = in.small_natural();
        in.expect('(');
        BinThetaTerm left = parse_btheta(in);
        in.expect(',');
        BinThetaTerm right = parse_btheta(in);
        in.expect(')');
        return BinThetaTerm::node(i, std::move(left), std::move(right));
    }
    std::size_t at = in.position();
    if (!in.peek_digit() || in.digits() != "0")
        throw ParseError(at, "expected '0' or 'th<i>('");
    return BinThetaTerm::zero();
}

} // namespace detail

/// Parses `0` or `th{i}(L, R)`. Syntax only; membership is checked separately.
inline BinThetaTerm parse_btheta(std::string_view text) {
    detail::Scanner in(text);
    BinThetaTerm t = detail::parse_btheta(in);
    in.finish();
    return t;
}

} // namespace gapord
