#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detail/scanner.hpp"
#include "theta.hpp"

namespace gapord {

/// A finite sequence over the alphabet {0, ..., bound - 1}.
struct GapSequence {
    std::vector<int> labels;
    int bound = 0;

    GapSequence() = default;
    GapSequence(std::vector<int> l, int n) : labels(std::move(l)), bound(n) {
        if (n < 0)
            throw std::invalid_argument("negative alphabet bound");
        for (int x : labels)
            if (x < 0 || x >= n)
                throw std::invalid_argument("label " + std::to_string(x) + " outside alphabet of size " +
                                            std::to_string(n));
    }

    bool empty() const noexcept { return labels.empty(); }
    std::size_t size() const noexcept { return labels.size(); }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;
};

enum class GapMode { weak, strong };

/// Adjacent labels rise by at most one.
inline bool in_sbar(const GapSequence& s) {
    for (std::size_t p = 0; p + 1 < s.size(); ++p)
        if (s.labels[p + 1] > s.labels[p] + 1)
            return false;
    return true;
}

/// Membership in the [i]-restricted subset: empty, or first label at most i.
inline bool first_at_most(const GapSequence& s, int i) { return s.empty() || s.labels.front() <= i; }

/// Gap embedding test. An embedding is a strictly increasing f with
/// s_k = t_{f(k)} such that every label of t strictly between f(k) and f(k+1)
/// is >= s_{k+1}; strong mode also needs every label before f(0) to be >= s_0.
///
/// reach[q] after round k says s_0..s_k embeds with f(k) = q. A round scans t
/// once per reachable q, so the total cost is O(|s| |t|^2).
inline bool gap_leq(const GapSequence& s, const GapSequence& t, GapMode mode) {
    if (s.bound != t.bound)
        throw std::invalid_argument("gap_leq: alphabet bounds differ");
    const auto& x = s.labels;
    const auto& y = t.labels;
    if (x.empty())
        return true;
    std::vector<char> reach(y.size(), 0);
    for (std::size_t q = 0; q < y.size(); ++q) {
        if (y[q] == x[0])
            reach[q] = 1;
        if (mode == GapMode::strong && y[q] < x[0])
            break;
    }
    for (std::size_t k = 1; k < x.size(); ++k) {
        std::vector<char> next(y.size(), 0);
        for (std::size_t p = 0; p < y.size(); ++p) {
            if (!reach[p])
                continue;
            for (std::size_t q = p + 1; q < y.size(); ++q) {
                if (y[q] == x[k])
                    next[q] = 1;
                if (y[q] < x[k])
                    break;
            }
        }
        reach = std::move(next);
    }
    return std::find(reach.begin(), reach.end(), 1) != reach.end();
}

/// Higman's ordering on finite sequences under an element quasi-order.
/// Matching each element at the leftmost admissible position is complete,
/// since an earlier match never leaves fewer options for the rest.
template <class T, class Leq>
bool higman_leq(const std::vector<T>& xs, const std::vector<T>& ys, Leq leq) {
    std::size_t q = 0;
    for (const auto& x : xs) {
        while (q < ys.size() && !leq(x, ys[q]))
            ++q;
        if (q == ys.size())
            return false;
        ++q;
    }
    return true;
}

/// The decomposition of a sequence over {0..n} at its zeros:
/// s = s_0^+ 0 s_1^+ 0 ... 0 s_k^+, each block decremented to a sequence over {0..n-1}.
struct HSplit {
    GapSequence head;
    std::vector<GapSequence> parts;

    friend bool operator==(const HSplit&, const HSplit&) = default;
};

inline HSplit h_split(const GapSequence& s) {
    if (s.bound < 1)
        throw std::invalid_argument("h_split needs an alphabet of size at least 1");
    int n = s.bound - 1;
    std::vector<GapSequence> blocks;
    std::vector<int> current;
    for (int x : s.labels) {
        if (x == 0) {
            blocks.emplace_back(std::move(current), n);
            current.clear();
        } else {
            current.push_back(x - 1);
        }
    }
    blocks.emplace_back(std::move(current), n);
    HSplit out{std::move(blocks.front()), {}};
    out.parts.assign(std::make_move_iterator(blocks.begin() + 1), std::make_move_iterator(blocks.end()));
    return out;
}

inline GapSequence h_unsplit(const HSplit& h) {
    int n = h.head.bound;
    std::vector<int> out;
    auto append = [&](const GapSequence& b) {
        if (b.bound != n)
            throw std::invalid_argument("h_unsplit: blocks over different alphabets");
        for (int x : b.labels)
            out.push_back(x + 1);
    };
    append(h.head);
    for (const auto& part : h.parts) {
        out.push_back(0);
        append(part);
    }
    return GapSequence(std::move(out), n + 1);
}

/// The isomorphism e from unary theta-terms in T_n to S-bar_n: read off the
/// index word.
inline GapSequence seq_of_term(const ThetaTerm& a, int n) {
    if (!theta_validate(a, ThetaSystem::bounded(n)))
        throw std::invalid_argument("term is not in T_" + std::to_string(n));
    return GapSequence(std::vector<int>(a.word().begin(), a.word().end()), n);
}

inline ThetaTerm term_of_seq(const GapSequence& s) {
    if (!in_sbar(s))
        throw std::invalid_argument("sequence has a rise of more than one");
    return ThetaTerm::from_word(s.labels);
}

inline std::string to_string(const GapSequence& s) {
    if (s.empty())
        return "ε";
    std::string out;
    for (int x : s.labels)
        out += x < 10 ? std::string(1, static_cast<char>('0' + x)) : "(" + std::to_string(x) + ")";
    return out;
}

/// Parses a digit string such as `0210`, with labels above 9 written `(12)`;
/// the empty sequence is `ε` or empty input.
inline GapSequence parse_gapseq(std::string_view text, int bound) {
    detail::Scanner in(text);
    std::vector<int> labels;
    if (!in.accept("ε")) {
        while (in.peek_digit() || in.peek() == '(') {
            std::size_t at = in.position();
            int x;
            if (in.accept('(')) {
                x = in.small_natural();
                in.expect(')');
            } else {
                x = in.peek() - '0';
                in.accept(in.peek());
            }
            if (x >= bound)
                throw ParseError(at, "label " + std::to_string(x) + " outside alphabet of size " +
                                         std::to_string(bound));
            labels.push_back(x);
        }
    }
    in.finish();
    return GapSequence(std::move(labels), bound);
}

} // namespace gapord
