#pragma once

#include <compare>
#include <cstdint>
#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detail/scanner.hpp"

namespace gapord {

/// A term of the addition-free Veblen system over the subscript type Sub:
/// either 0 or phi_t(a). Since every node is unary, a term is stored as its
/// subscript chain, outermost first: phi_{t1} phi_{t2} ... phi_{tk} 0.
template <class Sub>
class VeblenTerm {
public:
    VeblenTerm() = default;

    static VeblenTerm zero() { return {}; }

    static VeblenTerm phi(Sub subscript, const VeblenTerm& argument) {
        VeblenTerm t;
        t.subs_.reserve(argument.subs_.size() + 1);
        t.subs_.push_back(std::move(subscript));
        t.subs_.insert(t.subs_.end(), argument.subs_.begin(), argument.subs_.end());
        return t;
    }

    static VeblenTerm from_chain(std::vector<Sub> subscripts) {
        VeblenTerm t;
        t.subs_ = std::move(subscripts);
        return t;
    }

    bool is_zero() const noexcept { return subs_.empty(); }
    const Sub& subscript() const { return subs_.at(0); }

    VeblenTerm argument() const {
        if (is_zero())
            throw std::invalid_argument("zero has no argument");
        return from_chain(std::vector<Sub>(subs_.begin() + 1, subs_.end()));
    }

    std::span<const Sub> chain() const noexcept { return subs_; }
    std::size_t node_count() const noexcept { return subs_.size(); }

    friend bool operator==(const VeblenTerm& a, const VeblenTerm& b) { return a.subs_ == b.subs_; }

private:
    std::vector<Sub> subs_;
};

/// Three-way comparison of phi-chains. With a = phi_s(a'), b = phi_t(b'):
///   s < t:  a < b  iff  a' < b
///   s = t:  compare a' with b'
///   s > t:  a < b  iff  a <= b'
/// Each step drops one node from one side, so the loop runs at most |a| + |b| times.
template <class Sub, class Compare = std::compare_three_way>
std::strong_ordering veblen_compare(std::span<const Sub> a, std::span<const Sub> b, Compare cmp = {}) {
    // Each subscript mismatch turns the question into a yes/no question about a
    // smaller pair; record how that answer maps back and resolve at the end.
    enum class Map { lt_else_gt, le_else_gt };
    std::vector<Map> maps;
    while (true) {
        if (a.empty() || b.empty()) {
            std::strong_ordering r = !a.empty() ? std::strong_ordering::greater
                                     : !b.empty() ? std::strong_ordering::less
                                                  : std::strong_ordering::equal;
            for (auto it = maps.rbegin(); it != maps.rend(); ++it) {
                if (*it == Map::lt_else_gt)
                    r = r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
                else
                    r = r <= 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return r;
        }
        auto c = cmp(a.front(), b.front());
        if (c < 0) {
            maps.push_back(Map::lt_else_gt);
            a = a.subspan(1);
        } else if (c > 0) {
            maps.push_back(Map::le_else_gt);
            b = b.subspan(1);
        } else {
            a = a.subspan(1);
            b = b.subspan(1);
        }
    }
}

template <class Sub, class Compare = std::compare_three_way>
std::strong_ordering veblen_compare(const VeblenTerm<Sub>& a, const VeblenTerm<Sub>& b, Compare cmp = {}) {
    return veblen_compare<Sub, Compare>(a.chain(), b.chain(), cmp);
}

/// The strict order exactly as its defining clauses read; used to cross-check
/// veblen_compare and to test trichotomy without assuming it.
template <class Sub, class Compare = std::compare_three_way>
bool veblen_less(std::span<const Sub> a, std::span<const Sub> b, Compare cmp = {}) {
    if (a.empty())
        return !b.empty();
    if (b.empty())
        return false;
    auto c = cmp(a.front(), b.front());
    if (c < 0)
        return veblen_less(a.subspan(1), b, cmp);
    if (c == 0)
        return veblen_less(a.subspan(1), b.subspan(1), cmp);
    return std::equal(a.begin(), a.end(), b.begin() + 1, b.end()) || veblen_less(a, b.subspan(1), cmp);
}

/// A value of the codomain of the binary-theta evaluation map: level 1 holds a
/// natural number, level l > 1 holds a phi-chain whose subscripts are values
/// of level l - 1.
class LeveledOrdValue {
public:
    static LeveledOrdValue base(std::uint64_t k) {
        LeveledOrdValue v;
        v.level_ = 1;
        v.natural_ = k;
        return v;
    }

    static LeveledOrdValue zero(int level) {
        if (level < 1)
            throw std::invalid_argument("level must be positive");
        LeveledOrdValue v;
        v.level_ = level;
        return v;
    }

    static LeveledOrdValue term(int level, VeblenTerm<LeveledOrdValue> t) {
        if (level < 2)
            throw std::invalid_argument("phi-valued levels start at 2");
        for (const auto& s : t.chain())
            if (s.level() != level - 1)
                throw std::invalid_argument("subscript level must be one below the container");
        LeveledOrdValue v;
        v.level_ = level;
        v.term_ = std::move(t);
        return v;
    }

    int level() const noexcept { return level_; }
    bool is_zero() const noexcept { return level_ == 1 ? natural_ == 0 : term_.is_zero(); }

    std::uint64_t natural() const {
        if (level_ != 1)
            throw std::logic_error("only level-1 values are naturals");
        return natural_;
    }

    const VeblenTerm<LeveledOrdValue>& term() const {
        if (level_ == 1)
            throw std::logic_error("level-1 values are naturals");
        return term_;
    }

    friend std::strong_ordering operator<=>(const LeveledOrdValue& a, const LeveledOrdValue& b) {
        if (a.level_ != b.level_)
            throw std::invalid_argument("cannot compare values of different levels");
        if (a.level_ == 1)
            return a.natural_ <=> b.natural_;
        return veblen_compare(a.term_, b.term_);
    }

    friend bool operator==(const LeveledOrdValue& a, const LeveledOrdValue& b) {
        return a.level_ == b.level_ && a.natural_ == b.natural_ && a.term_ == b.term_;
    }

private:
    int level_ = 1;
    std::uint64_t natural_ = 0;
    VeblenTerm<LeveledOrdValue> term_;
};

template <class Sub, class Print>
std::string to_string(const VeblenTerm<Sub>& t, Print print_sub) {
    std::string out;
    for (const auto& s : t.chain())
        out += "phi(" + print_sub(s) + ", ";
    out += "0";
    out.append(t.node_count(), ')');
    return out;
}

inline std::string to_string(const VeblenTerm<unsigned>& t) {
    return to_string(t, [](unsigned s) { return std::to_string(s); });
}

inline std::string to_string(const LeveledOrdValue& v) {
    if (v.level() == 1)
        return std::to_string(v.natural());
    return to_string(v.term(), [](const LeveledOrdValue& s) { return to_string(s); });
}

namespace detail {

template <class Sub, class ParseSub>
VeblenTerm<Sub> parse_veblen(Scanner& in, ParseSub parse_sub) {
    std::vector<Sub> chain;
    std::size_t open = 0;
    while (in.accept("phi")) {
        in.expect('(');
        chain.push_back(parse_sub(in));
        in.expect(',');
        ++open;
    }
    std::size_t at = in.position();
    if (in.digits() != "0")
        throw ParseError(at, "expected '0' or 'phi('");
    for (std::size_t i = 0; i < open; ++i)
        in.expect(')');
    return VeblenTerm<Sub>::from_chain(std::move(chain));
}

inline LeveledOrdValue parse_leveled(Scanner& in, int level) {
    if (level < 1)
        in.fail("level must be positive");
    if (level == 1) {
        std::size_t at = in.position();
        std::string d = in.digits();
        if (d.size() > 18)
            throw ParseError(at, "natural too large");
        return LeveledOrdValue::base(std::stoull(d));
    }
    auto t = parse_veblen<LeveledOrdValue>(in, [level](Scanner& s) { return parse_leveled(s, level - 1); });
    return LeveledOrdValue::term(level, std::move(t));
}

} // namespace detail

/// Parses `0` or `phi(k, A)` with decimal subscripts.
inline VeblenTerm<unsigned> parse_veblen_nat(std::string_view text) {
    detail::Scanner in(text);
    auto t = detail::parse_veblen<unsigned>(in, [](detail::Scanner& s) {
        return static_cast<unsigned>(s.small_natural());
    });
    in.finish();
    return t;
}

inline LeveledOrdValue parse_leveled(std::string_view text, int level) {
    detail::Scanner in(text);
    auto v = detail::parse_leveled(in, level);
    in.finish();
    return v;
}

} // namespace gapord
