#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "btheta.hpp"
#include "cnf.hpp"
#include "enumerate.hpp"
#include "gapseq.hpp"
#include "maps.hpp"
#include "pi.hpp"
#include "theta.hpp"
#include "veblen.hpp"

// Property suites over exhaustively enumerated small domains. Each suite is a
// pure function of its bounds and returns a report; nothing is shared between
// suites.

namespace gapord {

struct SuiteReport {
    std::string suite;
    std::string bound;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> counterexamples;
    double seconds = 0;

    bool ok() const noexcept { return failures == 0; }
};

/// One JSON object per line. Durations are left out when `timing` is false so
/// that reruns compare byte for byte.
inline std::string to_jsonl(const SuiteReport& r, bool timing = true) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["bound"] = r.bound;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["counterexamples"] = r.counterexamples;
    if (timing)
        j["duration_s"] = std::round(r.seconds * 1000) / 1000;
    return j.dump();
}

inline std::string summary_line(const SuiteReport& r) {
    return (r.ok() ? "ok    " : "FAIL  ") + r.suite + "  [" + r.bound + "]  cases=" + std::to_string(r.cases) +
           " failures=" + std::to_string(r.failures);
}

namespace detail {

class Recorder {
public:
    static constexpr std::size_t max_examples = 10;

    Recorder(std::string suite, std::string bound)
        : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(suite);
        report_.bound = std::move(bound);
    }

    template <class Describe>
    void check(bool ok, Describe describe) {
        ++report_.cases;
        if (ok)
            return;
        ++report_.failures;
        if (report_.counterexamples.size() < max_examples)
            report_.counterexamples.push_back(describe());
    }

    void add_bound(const std::string& more) { report_.bound += (report_.bound.empty() ? "" : "; ") + more; }

    SuiteReport finish() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    SuiteReport report_;
    std::chrono::steady_clock::time_point start_;
};

inline const char* sym(std::strong_ordering c) { return c < 0 ? "<" : c > 0 ? ">" : "="; }

// Deterministic grid of index triples: every `stride`-th index on each axis,
// with the axes offset so that the triples are not all diagonal.
template <class F>
void strided_triples(std::size_t n, std::size_t budget, F f) {
    if (n == 0)
        return;
    auto side = static_cast<std::size_t>(std::cbrt(static_cast<double>(budget)));
    std::size_t stride = std::max<std::size_t>(1, (n + side - 1) / std::max<std::size_t>(side, 1));
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = stride / 3; j < n; j += stride)
            for (std::size_t k = (2 * stride) / 3; k < n; k += stride)
                f(i, j, k);
}

// Trichotomy against a clause-level strict order, agreement of the three-way
// comparison with it, and transitivity of the three-way comparison.
template <class T, class Less, class Compare, class Show>
void check_linear_order(Recorder& rec, const std::vector<T>& dom, Less less, Compare cmp, Show show,
                        std::size_t triple_budget = 1'000'000) {
    std::vector<std::vector<std::int8_t>> c(dom.size(), std::vector<std::int8_t>(dom.size()));
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            bool lt = less(dom[i], dom[j]);
            bool gt = less(dom[j], dom[i]);
            bool eq = dom[i] == dom[j];
            rec.check(int(lt) + int(gt) + int(eq) == 1, [&] {
                return "trichotomy: " + show(dom[i]) + " vs " + show(dom[j]) + " (lt=" + std::to_string(lt) +
                       " gt=" + std::to_string(gt) + " eq=" + std::to_string(eq) + ")";
            });
            auto r = cmp(dom[i], dom[j]);
            bool agree = (r < 0) == lt && (r > 0) == gt && (r == 0) == eq;
            rec.check(agree, [&] { return "compare " + show(dom[i]) + " " + sym(r) + " " + show(dom[j]) +
                                          " disagrees with the clause order"; });
            c[i][j] = r < 0 ? -1 : r > 0 ? 1 : 0;
        }
    strided_triples(dom.size(), triple_budget, [&](std::size_t i, std::size_t j, std::size_t k) {
        if (c[i][j] < 0 && c[j][k] < 0)
            rec.check(c[i][k] < 0, [&] {
                return "transitivity: " + show(dom[i]) + " < " + show(dom[j]) + " < " + show(dom[k]);
            });
    });
}

// Trichotomy, antisymmetry and transitivity of a three-way comparison with
// no separate clause-level definition.
template <class T, class Compare, class Show>
void check_three_way(Recorder& rec, const std::vector<T>& dom, Compare cmp, Show show,
                     std::size_t triple_budget = 1'000'000) {
    std::vector<std::vector<std::int8_t>> c(dom.size(), std::vector<std::int8_t>(dom.size()));
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            auto r = cmp(dom[i], dom[j]);
            c[i][j] = r < 0 ? -1 : r > 0 ? 1 : 0;
            rec.check((r == 0) == (dom[i] == dom[j]),
                      [&] { return "equality: " + show(dom[i]) + " " + sym(r) + " " + show(dom[j]); });
        }
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j)
            rec.check(c[i][j] == -c[j][i], [&] { return "antisymmetry: " + show(dom[i]) + " vs " + show(dom[j]); });
    strided_triples(dom.size(), triple_budget, [&](std::size_t i, std::size_t j, std::size_t k) {
        if (c[i][j] < 0 && c[j][k] < 0)
            rec.check(c[i][k] < 0, [&] {
                return "transitivity: " + show(dom[i]) + " < " + show(dom[j]) + " < " + show(dom[k]);
            });
    });
}

// Strict monotonicity of `map` between two ordered sets, over all pairs.
template <class T, class U, class Compare, class Map, class CompareImg, class Show>
void check_monotone(Recorder& rec, const std::vector<T>& dom, Compare cmp, Map map, CompareImg cmp_img, Show show) {
    std::vector<U> img;
    img.reserve(dom.size());
    for (const auto& x : dom)
        img.push_back(map(x));
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            if (i == j)
                continue;
            auto r = cmp(dom[i], dom[j]);
            auto s = cmp_img(img[i], img[j]);
            rec.check(r == s, [&] {
                return "monotone: " + show(dom[i]) + " " + sym(r) + " " + show(dom[j]) + " but images are " + sym(s);
            });
        }
}

inline std::string show_word(const std::vector<int>& w) {
    std::string s;
    for (int x : w)
        s += std::to_string(x);
    return s.empty() ? "ε" : s;
}

// Strict order tables over a subterm-closed list of binary terms, computed
// pair by pair in order of total size. `literal` follows the defining
// clauses; `dispatch` follows btheta_compare's decision rule.
class BinOrderTable {
public:
    explicit BinOrderTable(const std::vector<BinThetaTerm>& terms)
        : n_(terms.size()), words_((n_ * n_ + 63) / 64), literal_(words_, 0), dispatch_(words_, 0) {
        std::unordered_map<const void*, std::uint32_t> id;
        for (std::size_t k = 0; k < n_; ++k)
            id.emplace(terms[k].identity(), static_cast<std::uint32_t>(k));
        auto lookup = [&](const BinThetaTerm& t) {
            auto it = id.find(t.identity());
            if (it == id.end())
                throw std::invalid_argument("BinOrderTable: domain is not closed under subterms");
            return it->second;
        };
        info_.resize(n_);
        std::size_t max_size = 0;
        for (std::size_t k = 0; k < n_; ++k) {
            const auto& t = terms[k];
            auto& in = info_[k];
            in.size = t.size();
            max_size = std::max(max_size, in.size);
            if (t.is_zero())
                continue;
            in.level = t.level();
            in.left = lookup(t.left());
            in.right = lookup(t.right());
            for (const auto& e : k_set(t.level(), t.left()))
                in.k_and_right.push_back(lookup(e));
            in.k_and_right.push_back(in.right);
        }
        std::vector<std::vector<std::uint32_t>> by_size(max_size + 1);
        for (std::size_t k = 0; k < n_; ++k)
            by_size[info_[k].size].push_back(static_cast<std::uint32_t>(k));
        for (std::size_t total = 0; total <= 2 * max_size; ++total)
            for (std::size_t sx = total > max_size ? total - max_size : 0; sx <= std::min(total, max_size); ++sx)
                for (auto x : by_size[sx])
                    for (auto y : by_size[total - sx]) {
                        if (literal_rule(x, y))
                            set(literal_, x, y);
                        if (dispatch_rule(x, y))
                            set(dispatch_, x, y);
                    }
    }

    std::size_t size() const noexcept { return n_; }
    bool literal_less(std::size_t x, std::size_t y) const { return get(literal_, x, y); }
    bool dispatch_less(std::size_t x, std::size_t y) const { return get(dispatch_, x, y); }

private:
    struct Info {
        int level = -1;
        std::size_t size = 0;
        std::uint32_t left = 0, right = 0;
        std::vector<std::uint32_t> k_and_right;
    };

    static void set(std::vector<std::uint64_t>& bits, std::size_t bit) { bits[bit >> 6] |= 1ULL << (bit & 63); }
    void set(std::vector<std::uint64_t>& bits, std::size_t x, std::size_t y) { set(bits, x * n_ + y); }
    bool get(const std::vector<std::uint64_t>& bits, std::size_t x, std::size_t y) const {
        std::size_t bit = x * n_ + y;
        return (bits[bit >> 6] >> (bit & 63)) & 1;
    }

    bool literal_rule(std::uint32_t x, std::uint32_t y) const {
        const Info& a = info_[x];
        const Info& b = info_[y];
        if (a.level < 0 || b.level < 0)
            return a.level < 0 && b.level >= 0;
        if (a.level != b.level)
            return a.level < b.level;
        if (get(literal_, a.left, b.left) &&
            std::all_of(a.k_and_right.begin(), a.k_and_right.end(), [&](auto k) { return get(literal_, k, y); }))
            return true;
        if (a.left == b.left && get(literal_, a.right, b.right))
            return true;
        return get(literal_, b.left, a.left) && std::all_of(b.k_and_right.begin(), b.k_and_right.end(), [&](auto k) {
                   return k == x || get(literal_, x, k);
               });
    }

    bool dispatch_rule(std::uint32_t x, std::uint32_t y) const {
        const Info& a = info_[x];
        const Info& b = info_[y];
        if (a.level < 0 || b.level < 0)
            return a.level < 0 && b.level >= 0;
        if (a.level != b.level)
            return a.level < b.level;
        if (a.left == b.left)
            return get(dispatch_, a.right, b.right);
        if (get(dispatch_, a.left, b.left))
            return std::all_of(a.k_and_right.begin(), a.k_and_right.end(),
                               [&](auto k) { return get(dispatch_, k, y); });
        return std::all_of(b.k_and_right.begin(), b.k_and_right.end(),
                           [&](auto k) { return k == x || get(dispatch_, x, k); });
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> literal_;
    std::vector<std::uint64_t> dispatch_;
    std::vector<Info> info_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Orders

inline SuiteReport suite_order_cnf(std::size_t max_nodes = 8) {
    detail::Recorder rec("order-cnf", "nodes<=" + std::to_string(max_nodes));
    auto dom = enumerate_cnf(max_nodes);
    detail::check_three_way(rec, dom, [](const auto& a, const auto& b) { return cnf_compare(a, b); },
                            [](const CnfOrdinal& a) { return to_string(a); });
    return rec.finish();
}

inline SuiteReport suite_order_pi(int max_n = 3, std::size_t max_len = 6) {
    detail::Recorder rec("order-pi", "n<=" + std::to_string(max_n) + " len<=" + std::to_string(max_len));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_pi(n, max_len);
        detail::check_three_way(rec, dom, [](const auto& a, const auto& b) { return pi_compare(a, b); },
                                [](const PiTerm& a) { return to_string(a); });
    }
    return rec.finish();
}

inline SuiteReport suite_order_theta(int max_n = 3, std::size_t max_lh = 6) {
    detail::Recorder rec("order-theta", "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        detail::check_linear_order(
            rec, dom, [](const ThetaTerm& a, const ThetaTerm& b) { return theta_less(a.word(), b.word()); },
            [](const ThetaTerm& a, const ThetaTerm& b) { return theta_compare(a, b); },
            [](const ThetaTerm& a) { return to_string(a); });
    }
    return rec.finish();
}

inline SuiteReport suite_order_veblen(unsigned max_sub = 2, std::size_t max_nodes = 6) {
    detail::Recorder rec("order-veblen", "");
    {
        rec.add_bound("sub=nat<=" + std::to_string(max_sub) + " nodes<=" + std::to_string(max_nodes));
        auto dom = enumerate_veblen_nat(max_sub, max_nodes);
        detail::check_linear_order(
            rec, dom,
            [](const auto& a, const auto& b) { return veblen_less<unsigned>(a.chain(), b.chain()); },
            [](const auto& a, const auto& b) { return veblen_compare(a, b); },
            [](const VeblenTerm<unsigned>& a) { return to_string(a); });
    }
    {
        rec.add_bound("sub=pi0(2) len<=3 nodes<=3");
        auto subs = enumerate_pi0(2, 3);
        auto dom = enumerate_veblen(subs, 3);
        detail::check_linear_order(
            rec, dom, [](const auto& a, const auto& b) { return veblen_less<PiTerm>(a.chain(), b.chain()); },
            [](const auto& a, const auto& b) { return veblen_compare(a, b); },
            [](const VeblenTerm<PiTerm>& a) {
                return to_string(a, [](const PiTerm& s) { return to_string(s); });
            });
    }
    {
        rec.add_bound("sub=level-2 values of OT_2[0] size<=4, nodes<=3");
        std::vector<LeveledOrdValue> subs;
        for (const auto& t : enumerate_btheta(2, 4, BinSystem::ot0))
            subs.push_back(o_value(t, 2));
        auto dom = enumerate_veblen(subs, 3);
        detail::check_linear_order(
            rec, dom,
            [](const auto& a, const auto& b) { return veblen_less<LeveledOrdValue>(a.chain(), b.chain()); },
            [](const auto& a, const auto& b) { return veblen_compare(a, b); },
            [](const VeblenTerm<LeveledOrdValue>& a) {
                return to_string(a, [](const LeveledOrdValue& s) { return to_string(s); });
            });
    }
    return rec.finish();
}

inline std::string bin_system_name(BinSystem sys, const std::string& k) {
    switch (sys) {
    case BinSystem::t:
        return "T_" + k;
    case BinSystem::ot:
        return "OT_" + k;
    case BinSystem::ot0:
        return "OT_" + k + "[0]";
    }
    return {};
}

/// Binary theta order. Order tables are built bottom-up so that every pair of
/// the domain is decided without recursion; see BinOrderTable.
inline SuiteReport suite_order_btheta(BinSystem sys = BinSystem::t, int max_n = 3, std::size_t max_size = 6) {
    detail::Recorder rec(sys == BinSystem::t ? "order-btheta" : "order-btheta-ot",
                         bin_system_name(sys, "n") +
                             " n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_size));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_btheta(n, max_size, sys);
        detail::BinOrderTable table(dom);
        std::size_t N = dom.size();
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                bool lt = table.literal_less(i, j);
                bool gt = table.literal_less(j, i);
                bool eq = i == j;
                rec.check(int(lt) + int(gt) + int(eq) == 1, [&] {
                    return "trichotomy: " + to_string(dom[i]) + " vs " + to_string(dom[j]) +
                           " (lt=" + std::to_string(lt) + " gt=" + std::to_string(gt) + ")";
                });
                bool dlt = table.dispatch_less(i, j);
                bool dgt = table.dispatch_less(j, i);
                rec.check(dlt == lt && dgt == gt, [&] {
                    return "compare disagrees with the clause order on " + to_string(dom[i]) + " vs " +
                           to_string(dom[j]);
                });
            }
        detail::strided_triples(N, 2'000'000, [&](std::size_t i, std::size_t j, std::size_t k) {
            if (table.dispatch_less(i, j) && table.dispatch_less(j, k))
                rec.check(table.dispatch_less(i, k), [&] {
                    return "transitivity: " + to_string(dom[i]) + " < " + to_string(dom[j]) + " < " +
                           to_string(dom[k]);
                });
        });
        // Spot-check that the table reproduces the recursive functions.
        detail::strided_triples(N, 8000, [&](std::size_t i, std::size_t j, std::size_t) {
            rec.check(btheta_less(dom[i], dom[j]) == table.literal_less(i, j) &&
                          (btheta_compare(dom[i], dom[j]) < 0) == table.dispatch_less(i, j),
                      [&] { return "table mismatch on " + to_string(dom[i]) + " vs " + to_string(dom[j]); });
        });
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------
// Unary theta-terms and gap sequences

inline SuiteReport suite_e_iso(int max_n = 3, std::size_t max_lh = 5) {
    detail::Recorder rec("e-iso", "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        std::vector<GapSequence> seqs;
        for (const auto& a : dom) {
            seqs.push_back(seq_of_term(a, n));
            rec.check(term_of_seq(seqs.back()) == a, [&] { return "round trip of " + to_string(a); });
        }
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = 0; j < dom.size(); ++j) {
                bool lhs = gap_below(dom[i], dom[j]);
                bool rhs = gap_leq(seqs[i], seqs[j], GapMode::strong);
                rec.check(lhs == rhs, [&] {
                    return to_string(dom[i]) + " vs " + to_string(dom[j]) + ": gap_below=" + std::to_string(lhs) +
                           " strong=" + std::to_string(rhs);
                });
            }
    }
    return rec.finish();
}

inline SuiteReport suite_unlhd_subset_lt(int max_n = 3, std::size_t max_lh = 5) {
    detail::Recorder rec("unlhd-subset-lt", "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        for (const auto& a : dom)
            for (const auto& b : dom)
                if (gap_below(a, b))
                    rec.check(theta_compare(a, b) <= 0,
                              [&] { return to_string(a) + " is gap-below " + to_string(b) + " but greater"; });
    }
    return rec.finish();
}

inline SuiteReport suite_unlhd_partial_order(int max_n = 3, std::size_t max_lh = 5) {
    detail::Recorder rec("unlhd-partial-order",
                         "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        std::size_t N = dom.size();
        std::vector<std::vector<char>> g(N, std::vector<char>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                g[i][j] = gap_below(dom[i], dom[j]);
        for (std::size_t i = 0; i < N; ++i) {
            rec.check(g[i][i], [&] { return "not reflexive at " + to_string(dom[i]); });
            for (std::size_t j = i + 1; j < N; ++j)
                rec.check(!(g[i][j] && g[j][i]),
                          [&] { return "not antisymmetric: " + to_string(dom[i]) + ", " + to_string(dom[j]); });
        }
        detail::strided_triples(N, 4'000'000, [&](std::size_t i, std::size_t j, std::size_t k) {
            if (g[i][j] && g[j][k])
                rec.check(g[i][k], [&] {
                    return "not transitive: " + to_string(dom[i]) + ", " + to_string(dom[j]) + ", " +
                           to_string(dom[k]);
                });
        });
    }
    return rec.finish();
}

inline SuiteReport suite_theta_basic(int max_n = 3, std::size_t max_lh = 5) {
    detail::Recorder rec("theta-basic", "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh) +
                                            "; substituted terms in T_n[0] lh<=3");
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        auto small = enumerate_theta(ThetaSystem::bounded_leveled(n, 0), 3);
        for (const auto& a : dom)
            for (int i = 0; i <= n; ++i) {
                ThetaTerm k = k_coeff(i, a);
                rec.check(theta_compare(k, a) <= 0, [&] { return "k_" + std::to_string(i) + " above " + to_string(a); });
                if (a.level() <= i + 1)
                    rec.check(theta_compare(k, ThetaTerm::theta(i, a)) < 0, [&] {
                        return "k_" + std::to_string(i) + "(" + to_string(a) + ") not below v" + std::to_string(i) +
                               " of it";
                    });
                for (const auto& c : small)
                    rec.check(substitute(k, c) == k_coeff(i, substitute(a, c)), [&] {
                        return "k_" + std::to_string(i) + " does not commute with [" + to_string(c) + "] on " +
                               to_string(a);
                    });
            }
        for (const auto& a : dom)
            for (const auto& c : small) {
                auto r = theta_compare(c, substitute(a, c));
                rec.check(r < 0 || (r == 0 && a.is_zero()),
                          [&] { return to_string(c) + " vs " + to_string(a) + "[" + to_string(c) + "]"; });
            }
        for (const auto& a : dom)
            for (const auto& b : dom) {
                if (theta_compare(a, b) >= 0)
                    continue;
                for (const auto& c : small)
                    rec.check(theta_compare(substitute(a, c), substitute(b, c)) < 0, [&] {
                        return to_string(a) + " < " + to_string(b) + " but not after substituting " + to_string(c);
                    });
            }
    }
    return rec.finish();
}

/// Block inequalities for words v0^{k0} v1^{l1} v0^{k1} ... v1^{lr} v0^{kr} v1^m a
/// against v0 v1^m b, with l_i < m, k_i > 0 and a < b of level <= 0.
inline SuiteReport suite_block_inequalities(int max_m = 3, int max_r = 2, int max_k = 2) {
    detail::Recorder rec("block-inequalities", "m<=" + std::to_string(max_m) + " r<=" + std::to_string(max_r) +
                                                   " k<=" + std::to_string(max_k) + "; a,b in T_2[0] lh<=3");
    auto tails = enumerate_theta(ThetaSystem::bounded_leveled(2, 0), 3);
    for (int m = 1; m <= max_m; ++m) {
        // All prefixes v0^{k0} (v1^{l} v0^{k})^r.
        std::vector<std::vector<int>> prefixes;
        std::function<void(std::vector<int>, int)> grow = [&](std::vector<int> w, int blocks) {
            prefixes.push_back(w);
            if (blocks == max_r)
                return;
            for (int l = 0; l < m; ++l)
                for (int k = 1; k <= max_k; ++k) {
                    auto v = w;
                    v.insert(v.end(), l, 1);
                    v.insert(v.end(), k, 0);
                    grow(v, blocks + 1);
                }
        };
        for (int k0 = 1; k0 <= max_k; ++k0)
            grow(std::vector<int>(k0, 0), 0);
        std::vector<int> top(1, 0);
        top.insert(top.end(), m, 1);
        for (const auto& p : prefixes) {
            // v0^{k0} ... v0^{kr} 0 < v0 v1^m 0
            rec.check(theta_compare(p, top) < 0, [&] { return detail::show_word(p) + " not below " + detail::show_word(top); });
            for (const auto& a : tails)
                for (const auto& b : tails) {
                    if (theta_compare(a, b) >= 0)
                        continue;
                    std::vector<int> lhs = p;
                    lhs.insert(lhs.end(), m, 1);
                    lhs.insert(lhs.end(), a.word().begin(), a.word().end());
                    std::vector<int> rhs = top;
                    rhs.insert(rhs.end(), b.word().begin(), b.word().end());
                    rec.check(theta_compare(lhs, rhs) < 0, [&] {
                        return detail::show_word(lhs) + " not below " + detail::show_word(rhs);
                    });
                }
        }
    }
    return rec.finish();
}

inline SuiteReport suite_h_iso(int max_n = 2, std::size_t max_len = 6) {
    detail::Recorder rec("h-iso", "S_{n+1} n<=" + std::to_string(max_n) + " len<=" + std::to_string(max_len));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_gapseq(n + 1, max_len);
        std::vector<HSplit> h;
        for (const auto& s : dom) {
            h.push_back(h_split(s));
            rec.check(h_unsplit(h.back()) == s, [&] { return "h_unsplit(h_split(" + to_string(s) + ")) differs"; });
        }
        auto strong = [](const GapSequence& x, const GapSequence& y) { return gap_leq(x, y, GapMode::strong); };
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = 0; j < dom.size(); ++j) {
                bool lhs = gap_leq(dom[i], dom[j], GapMode::strong);
                bool rhs = strong(h[i].head, h[j].head) && higman_leq(h[i].parts, h[j].parts, strong);
                rec.check(lhs == rhs, [&] {
                    return to_string(dom[i]) + " vs " + to_string(dom[j]) + ": direct=" + std::to_string(lhs) +
                           " split=" + std::to_string(rhs);
                });
            }
    }
    return rec.finish();
}

inline SuiteReport suite_gap_basic(int max_n = 3, std::size_t max_len = 5) {
    detail::Recorder rec("gap-basic", "S_n n<=" + std::to_string(max_n) + " len<=" + std::to_string(max_len));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_gapseq(n, max_len);
        std::size_t N = dom.size();
        std::vector<std::vector<char>> w(N, std::vector<char>(N)), s(N, std::vector<char>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                w[i][j] = gap_leq(dom[i], dom[j], GapMode::weak);
                s[i][j] = gap_leq(dom[i], dom[j], GapMode::strong);
                rec.check(!s[i][j] || w[i][j],
                          [&] { return "strong but not weak: " + to_string(dom[i]) + ", " + to_string(dom[j]); });
                // Prepending 0 reflects the weak order.
                std::vector<int> a{0}, b{0};
                a.insert(a.end(), dom[i].labels.begin(), dom[i].labels.end());
                b.insert(b.end(), dom[j].labels.begin(), dom[j].labels.end());
                if (gap_leq(GapSequence(a, n), GapSequence(b, n), GapMode::weak))
                    rec.check(w[i][j], [&] { return "0s <= 0t but not s <= t for " + to_string(dom[i]) + ", " +
                                                    to_string(dom[j]); });
            }
        for (std::size_t i = 0; i < N; ++i)
            rec.check(w[i][i] && s[i][i], [&] { return "not reflexive at " + to_string(dom[i]); });
        detail::strided_triples(N, 4'000'000, [&](std::size_t i, std::size_t j, std::size_t k) {
            if (w[i][j] && w[j][k])
                rec.check(w[i][k], [&] { return "weak not transitive at " + to_string(dom[i]); });
            if (s[i][j] && s[j][k])
                rec.check(s[i][k], [&] { return "strong not transitive at " + to_string(dom[i]); });
        });
    }
    return rec.finish();
}

inline SuiteReport suite_psi_prime(int max_n = 3, std::size_t max_lh = 5) {
    detail::Recorder rec("psi-prime", "T_n n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_theta(ThetaSystem::bounded(n), max_lh);
        for (const auto& a : dom)
            rec.check(theta_validate(psi_prime(a, n), ThetaSystem::primed(n)),
                      [&] { return "image of " + to_string(a) + " not in T'_" + std::to_string(n); });
        detail::check_monotone<ThetaTerm, ThetaTerm>(
            rec, dom, [](const auto& a, const auto& b) { return theta_compare(a, b); },
            [n](const ThetaTerm& a) { return psi_prime(a, n); },
            [](const auto& a, const auto& b) { return theta_compare(a, b); },
            [](const ThetaTerm& a) { return to_string(a); });
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------
// Translations

inline SuiteReport suite_chi(unsigned max_sub = 4, std::size_t max_nodes = 5, std::size_t image_lh = 6) {
    detail::Recorder rec("chi", "subscripts<=" + std::to_string(max_sub) + " nodes<=" + std::to_string(max_nodes) +
                                    "; image check at lh<=" + std::to_string(image_lh));
    auto dom = enumerate_veblen_nat(max_sub, max_nodes);
    detail::check_monotone<VeblenTerm<unsigned>, ThetaTerm>(
        rec, dom, [](const auto& a, const auto& b) { return veblen_compare(a, b); }, chi,
        [](const auto& a, const auto& b) { return theta_compare(a, b); },
        [](const VeblenTerm<unsigned>& a) { return to_string(a); });
    // Images of length <= image_lh are exactly {0} u T_2[0] at that length.
    // A chain whose image has lh <= L has at most L nodes and subscripts below L.
    std::set<std::vector<int>> image;
    for (const auto& a : enumerate_veblen_nat(static_cast<unsigned>(image_lh), image_lh)) {
        auto t = chi(a);
        if (t.length() <= image_lh)
            image.insert(std::vector<int>(t.word().begin(), t.word().end()));
    }
    std::set<std::vector<int>> target;
    for (const auto& t : enumerate_theta(ThetaSystem::bounded_leveled(2, 0), image_lh))
        target.insert(std::vector<int>(t.word().begin(), t.word().end()));
    rec.check(image == target, [&] {
        return "image has " + std::to_string(image.size()) + " terms, T_2[0] has " + std::to_string(target.size());
    });
    return rec.finish();
}

inline SuiteReport suite_chi_std(std::size_t max_nodes = 8) {
    detail::Recorder rec("chi-std", "CNF < w^(w^3) nodes<=" + std::to_string(max_nodes));
    auto all = enumerate_cnf(max_nodes);
    std::vector<CnfOrdinal> dom;
    auto limit = CnfOrdinal::omega_power(CnfOrdinal::omega_power(CnfOrdinal::natural(3)));
    for (auto& a : all)
        if (a < limit)
            dom.push_back(a);
    for (const auto& a : dom)
        rec.check(theta_validate(chi_std(a), ThetaSystem::bounded_leveled(2, 0)),
                  [&] { return "chi_std(" + to_string(a) + ") not in T_2[0]"; });
    detail::check_monotone<CnfOrdinal, ThetaTerm>(
        rec, dom, [](const auto& a, const auto& b) { return cnf_compare(a, b); }, chi_std,
        [](const auto& a, const auto& b) { return theta_compare(a, b); },
        [](const CnfOrdinal& a) { return to_string(a); });
    return rec.finish();
}

inline SuiteReport suite_psi(int max_n = 2, std::size_t max_nodes = 4, std::size_t max_sub_len = 3) {
    detail::Recorder rec("psi", "n<=" + std::to_string(max_n) + " nodes<=" + std::to_string(max_nodes) +
                                    " subscript D-nodes<=" + std::to_string(max_sub_len));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<PiTerm> subs;
        for (auto& s : enumerate_pi0(n, max_sub_len))
            if (!s.is_zero())
                subs.push_back(s);
        auto dom = enumerate_veblen(subs, max_nodes);
        auto show = [](const VeblenTerm<PiTerm>& a) {
            return to_string(a, [](const PiTerm& s) { return to_string(s); });
        };
        for (const auto& a : dom)
            rec.check(theta_validate(psi_map(a, n), ThetaSystem::bounded_leveled(n + 1, 0)),
                      [&] { return "psi(" + show(a) + ") not in T_" + std::to_string(n + 1) + "[0]"; });
        detail::check_monotone<VeblenTerm<PiTerm>, ThetaTerm>(
            rec, dom, [](const auto& a, const auto& b) { return veblen_compare(a, b); },
            [n](const VeblenTerm<PiTerm>& a) { return psi_map(a, n); },
            [](const auto& a, const auto& b) { return theta_compare(a, b); }, show);
    }
    return rec.finish();
}

inline SuiteReport suite_tau(int max_n = 2, std::size_t max_lh = 6) {
    detail::Recorder rec("tau", "T'_{n+1}[m] n<=" + std::to_string(max_n) + " lh<=" + std::to_string(max_lh));
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= n + 1; ++m) {
            auto dom = enumerate_theta(ThetaSystem::primed(n + 1, m), max_lh);
            auto tag = [&](const ThetaTerm& a) {
                return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + to_string(a);
            };
            if (m == 0) {
                std::vector<CnfOrdinal> img;
                auto bound = omega_tower(static_cast<unsigned>(n + 2));
                for (const auto& a : dom) {
                    img.push_back(tau_zero(a, n));
                    rec.check(img.back() < bound, [&] { return "tau_0 bound fails at " + tag(a); });
                    rec.check(img.back().is_zero() || img.back().is_successor(),
                              [&] { return "tau_0 not zero or successor at " + tag(a); });
                }
                for (std::size_t i = 0; i < dom.size(); ++i)
                    for (std::size_t j = 0; j < dom.size(); ++j)
                        if (theta_compare(dom[i], dom[j]) < 0)
                            rec.check(img[i] < img[j], [&] {
                                return "tau_0 not monotone: " + tag(dom[i]) + " vs " + to_string(dom[j]);
                            });
                continue;
            }
            std::vector<OmegaTuple> img;
            for (const auto& a : dom) {
                img.push_back(tau_tuple(m, a, n));
                const auto& x = img.back();
                rec.check(tuple_normal(x), [&] { return "tuple not normal at " + tag(a) + ": " + to_string(x); });
                rec.check(x.theta_part == k_coeff(m - 1, a),
                          [&] { return "middle part is not k_{m-1} at " + tag(a); });
                // omega_coeff < w_{n-m+1}, i.e. the bound for tau_{(m-1)+1}.
                int k = m - 1;
                auto cap = k < n ? omega_tower(static_cast<unsigned>(n - k)) : CnfOrdinal::natural(1);
                rec.check(x.omega_coeff < cap, [&] { return "coefficient bound fails at " + tag(a); });
            }
            for (std::size_t i = 0; i < dom.size(); ++i)
                for (std::size_t j = 0; j < dom.size(); ++j)
                    if (theta_compare(dom[i], dom[j]) < 0)
                        rec.check(tuple_compare(img[i], img[j]) < 0, [&] {
                            return "tau not monotone: " + tag(dom[i]) + " vs " + to_string(dom[j]);
                        });
        }
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------
// Binary theta-terms

/// The right child lies strictly below its parent.
inline SuiteReport suite_btheta_right_child(BinSystem sys = BinSystem::t, int max_n = 3, std::size_t max_size = 6) {
    detail::Recorder rec(sys == BinSystem::t ? "btheta-right-child" : "btheta-right-child-ot",
                         "n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_size));
    for (int n = 1; n <= max_n; ++n)
        for (const auto& x : enumerate_btheta(n, max_size, sys))
            if (!x.is_zero())
                rec.check(btheta_less(x.right(), x) && btheta_compare(x.right(), x) < 0,
                          [&] { return "right child not below " + to_string(x); });
    return rec.finish();
}

/// Shift-down on terms without th_0: monotone, and K_{i+1} commutes with it.
inline SuiteReport suite_btheta_shift(BinSystem sys = BinSystem::ot, int max_n = 3, std::size_t max_size = 6) {
    detail::Recorder rec(sys == BinSystem::t ? "btheta-shift" : "btheta-shift-ot",
                         "n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_size));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<BinThetaTerm> dom;
        for (auto& x : enumerate_btheta(n, max_size, sys))
            if (k_set(0, x).empty())
                dom.push_back(std::move(x));
        std::vector<BinThetaTerm> shifted;
        for (const auto& x : dom)
            shifted.push_back(shift_down(x));
        for (std::size_t k = 0; k < dom.size(); ++k)
            for (int i = 0; i + 1 < n; ++i) {
                auto lhs = k_set(i + 1, dom[k]);
                for (auto& e : lhs)
                    e = shift_down(e);
                auto rhs = k_set(i, shifted[k]);
                bool same = lhs.size() == rhs.size() && std::all_of(lhs.begin(), lhs.end(), [&](const auto& e) {
                                return std::find(rhs.begin(), rhs.end(), e) != rhs.end();
                            });
                rec.check(same, [&] { return "K_" + std::to_string(i + 1) + " does not commute with shift on " +
                                             to_string(dom[k]); });
            }
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = 0; j < dom.size(); ++j)
                if (btheta_less(dom[i], dom[j]))
                    rec.check(btheta_less(shifted[i], shifted[j]), [&] {
                        return "shift not monotone on " + to_string(dom[i]) + " < " + to_string(dom[j]);
                    });
    }
    return rec.finish();
}

/// o_n is strictly order-preserving on OT_n[0].
inline SuiteReport suite_o_value(int max_n = 3, std::size_t max_size = 8) {
    detail::Recorder rec("o-value", "OT_n[0] n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_size));
    for (int n = 1; n <= max_n; ++n) {
        auto dom = enumerate_btheta(n, max_size, BinSystem::ot0);
        std::vector<LeveledOrdValue> vals;
        for (const auto& x : dom)
            vals.push_back(o_value(x, n));
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = 0; j < dom.size(); ++j)
                if (btheta_less(dom[i], dom[j]))
                    rec.check(vals[i] < vals[j], [&] {
                        return "o_" + std::to_string(n) + " not monotone on " + to_string(dom[i]) + " < " +
                               to_string(dom[j]);
                    });
    }
    return rec.finish();
}

/// The embedding f of S-bar_n: lands in OT_n, is injective, and respects the
/// strong gap order.
inline SuiteReport suite_f_embed(int max_n = 3, std::size_t max_len = 6) {
    detail::Recorder rec("f-embed", "S-bar_n n<=" + std::to_string(max_n) + " len<=" + std::to_string(max_len));
    for (int n = 1; n <= max_n; ++n) {
        auto seqs = enumerate_gapseq(n, max_len, {true, {}});
        std::vector<BinThetaTerm> img;
        for (const auto& s : seqs) {
            img.push_back(embed_seq(s));
            rec.check(in_bin_ot(img.back(), n), [&] { return "f(" + to_string(s) + ") not in OT_n"; });
        }
        for (std::size_t i = 0; i < seqs.size(); ++i)
            for (std::size_t j = 0; j < seqs.size(); ++j) {
                auto c = btheta_compare(img[i], img[j]);
                rec.check((i == j) == (c == 0),
                          [&] { return "f not injective on " + to_string(seqs[i]) + ", " + to_string(seqs[j]); });
                if (gap_leq(seqs[i], seqs[j], GapMode::strong))
                    rec.check(c <= 0, [&] {
                        return to_string(seqs[i]) + " strongly embeds in " + to_string(seqs[j]) +
                               " but f reverses them";
                    });
            }
    }
    return rec.finish();
}

// ---------------------------------------------------------------------------
// CNF arithmetic

inline SuiteReport suite_f_hat(std::size_t max_nodes = 8) {
    detail::Recorder rec("f-hat", "nodes<=" + std::to_string(max_nodes));
    auto dom = enumerate_cnf(max_nodes);
    std::vector<CnfOrdinal> f;
    for (const auto& a : dom)
        f.push_back(f_hat(a));
    // dom is sorted, so checking neighbours covers every pair.
    for (std::size_t i = 0; i + 1 < dom.size(); ++i)
        rec.check(f[i] < f[i + 1], [&] { return "not monotone at " + to_string(dom[i]) + " < " + to_string(dom[i + 1]); });
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const auto& a = dom[i];
        if (a.is_zero())
            continue;
        const auto& e = a.terms().front().exponent;
        auto lo = CnfOrdinal::omega_power(e);
        auto hi = CnfOrdinal::omega_power(cnf_add(e, CnfOrdinal::natural(1)));
        rec.check(lo <= f[i] && f[i] < hi, [&] { return "bound fails at " + to_string(a); });
    }
    for (const auto& a1 : dom)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            const auto& a2 = dom[j];
            auto p = CnfOrdinal::omega_power(a1);
            if (cnf_add(p, a2) != a2)
                continue;
            auto lhs = cnf_add(cnf_add(p, f_hat(a1)), f[j]);
            rec.check(lhs == f[j], [&] {
                return "w^(" + to_string(a1) + ") + f(" + to_string(a1) + ") + f(" + to_string(a2) + ") != f(" +
                       to_string(a2) + ")";
            });
        }
    return rec.finish();
}

inline SuiteReport suite_cnf_algebra(std::size_t max_nodes = 6) {
    detail::Recorder rec("cnf-algebra", "nodes<=" + std::to_string(max_nodes));
    auto dom = enumerate_cnf(max_nodes);
    auto zero = CnfOrdinal{};
    auto one = CnfOrdinal::natural(1);
    for (const auto& a : dom) {
        rec.check(cnf_nat_sum(a, zero) == a, [&] { return to_string(a) + " (+) 0"; });
        rec.check(cnf_nat_prod(a, one) == a, [&] { return to_string(a) + " (x) 1"; });
        rec.check(cnf_add(zero, a) == a && cnf_add(a, zero) == a, [&] { return to_string(a) + " + 0"; });
    }
    for (const auto& a : dom)
        for (const auto& b : dom) {
            rec.check(cnf_nat_sum(a, b) == cnf_nat_sum(b, a),
                      [&] { return to_string(a) + " (+) " + to_string(b) + " not commutative"; });
            rec.check(cnf_nat_prod(a, b) == cnf_nat_prod(b, a),
                      [&] { return to_string(a) + " (x) " + to_string(b) + " not commutative"; });
        }
    for (const auto& a : dom)
        for (std::size_t i = 0; i + 1 < dom.size(); ++i)
            rec.check(cnf_add(a, dom[i]) < cnf_add(a, dom[i + 1]),
                      [&] { return "a + . not monotone at a=" + to_string(a) + ", " + to_string(dom[i]); });
    return rec.finish();
}

// ---------------------------------------------------------------------------
// Enumeration itself

inline SuiteReport suite_enumeration(int max_n = 3, std::size_t max_len = 6) {
    detail::Recorder rec("enumeration", "n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_len));
    for (int n = 1; n <= max_n; ++n) {
        auto terms = enumerate_theta(ThetaSystem::bounded(n), max_len);
        auto seqs = enumerate_gapseq(n, max_len, {true, {}});
        rec.check(terms.size() == seqs.size(), [&] {
            return "T_" + std::to_string(n) + " has " + std::to_string(terms.size()) + " terms, S-bar has " +
                   std::to_string(seqs.size());
        });
        std::set<std::vector<int>> words;
        for (const auto& t : terms)
            rec.check(words.insert(std::vector<int>(t.word().begin(), t.word().end())).second,
                      [&] { return "duplicate " + to_string(t); });
        for (const auto& t : terms)
            for (std::size_t p = 1; p <= t.length(); ++p)
                rec.check(words.count(std::vector<int>(t.word().begin() + p, t.word().end())) == 1,
                          [&] { return "subterm of " + to_string(t) + " missing"; });
        auto bins = enumerate_btheta(n, max_len - 1, BinSystem::t);
        std::set<std::string> seen;
        for (const auto& b : bins)
            seen.insert(to_string(b));
        rec.check(seen.size() == bins.size(), [] { return std::string("duplicate binary terms"); });
        for (const auto& b : bins)
            if (!b.is_zero())
                rec.check(seen.count(to_string(b.left())) && seen.count(to_string(b.right())),
                          [&] { return "subterm of " + to_string(b) + " missing"; });
        for (const auto& p : enumerate_pi(n, max_len)) {
            auto w = p.word();
            for (std::size_t k = 1; k <= w.size(); ++k)
                rec.check(pi_validate(PiTerm::from_word(std::vector<int>(w.begin() + k, w.end())), n),
                          [&] { return "subterm of " + to_string(p) + " not wellformed"; });
        }
    }
    // pi_0(n) is an initial segment of the wellformed terms.
    auto pis = enumerate_pi(3, max_len);
    for (const auto& a : pis)
        for (const auto& b : pis)
            if (in_pi0(b, 3) && pi_compare(a, b) < 0)
                rec.check(in_pi0(a, 3), [&] { return to_string(a) + " below " + to_string(b) + " but not in pi_0"; });
    return rec.finish();
}

// ---------------------------------------------------------------------------

struct SuiteEntry {
    std::string name;
    std::function<SuiteReport()> run;
};

/// Every suite at its default bounds.
inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> entries = {
        {"order-cnf", [] { return suite_order_cnf(); }},
        {"order-pi", [] { return suite_order_pi(); }},
        {"order-theta", [] { return suite_order_theta(); }},
        {"order-veblen", [] { return suite_order_veblen(); }},
        {"order-btheta", [] { return suite_order_btheta(BinSystem::t); }},
        {"order-btheta-ot", [] { return suite_order_btheta(BinSystem::ot, 3, 8); }},
        {"e-iso", [] { return suite_e_iso(); }},
        {"unlhd-subset-lt", [] { return suite_unlhd_subset_lt(); }},
        {"unlhd-partial-order", [] { return suite_unlhd_partial_order(); }},
        {"h-iso", [] { return suite_h_iso(); }},
        {"gap-basic", [] { return suite_gap_basic(); }},
        {"theta-basic", [] { return suite_theta_basic(); }},
        {"block-inequalities", [] { return suite_block_inequalities(); }},
        {"chi", [] { return suite_chi(); }},
        {"chi-std", [] { return suite_chi_std(); }},
        {"psi", [] { return suite_psi(); }},
        {"psi-prime", [] { return suite_psi_prime(); }},
        {"tau", [] { return suite_tau(); }},
        {"btheta-right-child", [] { return suite_btheta_right_child(BinSystem::t); }},
        {"btheta-right-child-ot", [] { return suite_btheta_right_child(BinSystem::ot, 3, 8); }},
        {"btheta-shift", [] { return suite_btheta_shift(BinSystem::t); }},
        {"btheta-shift-ot", [] { return suite_btheta_shift(BinSystem::ot, 3, 8); }},
        {"o-value", [] { return suite_o_value(); }},
        {"f-embed", [] { return suite_f_embed(); }},
        {"f-hat", [] { return suite_f_hat(); }},
        {"cnf-algebra", [] { return suite_cnf_algebra(); }},
        {"enumeration", [] { return suite_enumeration(); }},
    };
    return entries;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<SuiteReport> check_suite(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"tau-monotone", "tau"}, {"h", "h-iso"}, {"e", "e-iso"}};
    std::string key = aliases.contains(name) ? aliases.at(name) : name;
    std::vector<SuiteReport> out;
    for (const auto& e : suite_registry())
        if (key == "all" || e.name == key)
            out.push_back(e.run());
    if (out.empty())
        throw std::invalid_argument("unknown suite: " + name);
    return out;
}

} // namespace gapord
