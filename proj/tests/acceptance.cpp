// Acceptance run: one PASS/FAIL line per criterion, followed by a summary.
//
// Criteria 1 and 11 evaluate the binary theta order on the full system T_n,
// where the clause order is only partial. They print FAIL. The exit status is
// zero when the failing criteria are exactly those two and each fails only in
// its T_n part while the OT_n counterpart passes. Any other outcome, including
// one of them starting to pass, exits nonzero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gapord/gapord.hpp"
#include "gapord/suites.hpp"
#include "oracles.hpp"

using namespace gapord;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    // Set for the known failures when the evidence matches the expected pattern.
    bool expected_failure = false;
};

void add(Outcome& o, const SuiteReport& r) {
    if (!o.detail.empty())
        o.detail += "; ";
    o.detail += r.suite + " " + std::to_string(r.failures) + "/" + std::to_string(r.cases);
    o.pass = o.pass && r.ok();
}

void add_check(Outcome& o, bool ok, const std::string& what) {
    if (!o.detail.empty())
        o.detail += "; ";
    o.detail += what + (ok ? " ok" : " WRONG");
    o.pass = o.pass && ok;
}

void add_time(Outcome& o, const SuiteReport& r, double limit) {
    bool ok = r.seconds < limit;
    if (!ok) {
        o.detail += "; " + r.suite + " took " + std::to_string(r.seconds) + "s";
        o.pass = false;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome c1_totality() {
    Outcome o;
    for (auto r : {suite_order_cnf(8), suite_order_pi(3, 6), suite_order_theta(3, 6), suite_order_veblen(2, 6)}) {
        add(o, r);
        add_time(o, r, 60);
    }
    // Everything except the T_n binary order must hold for the failure to be the known one.
    bool rest = o.pass;
    auto bin_t = suite_order_btheta(BinSystem::t, 3, 6);
    add(o, bin_t);
    add_time(o, bin_t, 60);
    auto bin_ot = suite_order_btheta(BinSystem::ot, 3, 6);
    o.detail += "; on OT_n: " + std::to_string(bin_ot.failures) + "/" + std::to_string(bin_ot.cases);
    if (!bin_t.ok() && !bin_t.counterexamples.empty())
        o.detail += "; first T_n counterexample: " + bin_t.counterexamples.front();
    o.expected_failure = !bin_t.ok() && bin_ot.ok() && rest;
    return o;
}

Outcome c2_e_iso() {
    Outcome o;
    add(o, suite_e_iso(3, 5));
    return o;
}

Outcome c3_unlhd() {
    Outcome o;
    add(o, suite_unlhd_subset_lt(3, 5));
    return o;
}

Outcome c4_h() {
    Outcome o;
    add(o, suite_h_iso(2, 6));
    return o;
}

Outcome c5_theta_basic() {
    Outcome o;
    add(o, suite_theta_basic(3, 5));
    return o;
}

Outcome c6_chi() {
    Outcome o;
    add(o, suite_chi(4, 5, 6));
    return o;
}

Outcome c7_chi_std() {
    Outcome o;
    add(o, suite_chi_std(8));
    return o;
}

Outcome c8_psi() {
    Outcome o;
    add(o, suite_psi(2, 4, 3));
    return o;
}

Outcome c9_psi_prime() {
    Outcome o;
    add(o, suite_psi_prime(3, 5));
    return o;
}

Outcome c10_tau() {
    Outcome o;
    auto r = suite_tau(2, 6);
    add(o, r);
    add_time(o, r, 120);
    add_check(o, tau_zero(parse_theta("v0 0"), 1) == CnfOrdinal::natural(1), "tau_0(v0 0) = 1");
    add_check(o, tau_zero(parse_theta("v0 v0 0"), 1) == parse_cnf("w + 1"), "tau_0(v0 v0 0) = w + 1");
    return o;
}

Outcome c11_binary() {
    Outcome o;
    auto right_t = suite_btheta_right_child(BinSystem::t, 3, 6);
    auto right_ot = suite_btheta_right_child(BinSystem::ot, 3, 6);
    Outcome rest;
    for (auto r : {suite_btheta_shift(BinSystem::t, 3, 6), suite_o_value(3, 8), suite_f_embed(3, 6)})
        add(rest, r);
    bool anchor = o_value(parse_btheta("th0(0, th0(0, 0))"), 1).natural() == 2;
    add_check(rest, anchor, "o_1(th0(0, th0(0, 0))) = 2");
    add(o, right_t);
    o.detail += "; " + rest.detail;
    o.pass = o.pass && rest.pass;
    o.detail += "; right child on OT_n: " + std::to_string(right_ot.failures) + "/" + std::to_string(right_ot.cases);
    if (!right_t.ok() && !right_t.counterexamples.empty())
        o.detail += "; first T_n counterexample: " + right_t.counterexamples.front();
    o.expected_failure = !right_t.ok() && right_ot.ok() && rest.pass;
    return o;
}

Outcome c12_f_hat() {
    Outcome o;
    add(o, suite_f_hat(8));
    return o;
}

Outcome c13_gap_dp() {
    Outcome o;
    std::uint64_t cases = 0, bad = 0;
    std::string first;
    for (int n = 1; n <= 3; ++n) {
        auto dom = enumerate_gapseq(n, 7);
        for (const auto& s : dom)
            for (const auto& t : dom)
                for (bool strong : {false, true}) {
                    ++cases;
                    bool dp = gap_leq(s, t, strong ? GapMode::strong : GapMode::weak);
                    if (dp != oracle::gap_embeds(s.labels, t.labels, strong) && bad++ == 0)
                        first = to_string(s) + " vs " + to_string(t) + (strong ? " strong" : " weak");
                }
    }
    o.pass = bad == 0;
    o.detail = "dp-vs-brute " + std::to_string(bad) + "/" + std::to_string(cases);
    if (!first.empty())
        o.detail += "; first disagreement: " + first;
    return o;
}

Outcome c14_mot_star() {
    Outcome o;
    add_check(o, mot_star(CnfOrdinal::natural(2)) == parse_cnf("w^(w)"), "mot*(2) = w^w");
    add_check(o, mot_star(CnfOrdinal::omega()) == parse_cnf("w^(w^(w))"), "mot*(w) = w^(w^w)");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "totality of the five orders", c1_totality},
        {2, "gap order on terms matches strong gap embedding", c2_e_iso},
        {3, "gap order on terms implies the term order", c3_unlhd},
        {4, "h splits the strong gap order", c4_h},
        {5, "basic facts on k_i and substitution", c5_theta_basic},
        {6, "chi order-preserving onto its image", c6_chi},
        {7, "chi_std order-preserving below w^(w^3)", c7_chi_std},
        {8, "psi order-preserving into T_{n+1}[0]", c8_psi},
        {9, "psi' order-preserving into T'_n", c9_psi_prime},
        {10, "tau invariants, monotonicity, bounds and anchors", c10_tau},
        {11, "binary theta lemmas and o_1 anchor", c11_binary},
        {12, "f_hat properties", c12_f_hat},
        {13, "gap_leq dynamic program against brute force", c13_gap_dp},
        {14, "mot_star spot values", c14_mot_star},
    };
    const std::set<int> known_failures = {1, 11};

    int unexpected = 0;
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = seconds_since(t0);
        std::printf("%s  C%-2d %s  [%s] (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass)
            ++failed;
        bool known = known_failures.contains(c.id);
        if (known && (o.pass || !o.expected_failure)) {
            std::printf("      C%d was expected to fail only on T_n; outcome differs\n", c.id);
            ++unexpected;
        } else if (!known && !o.pass) {
            ++unexpected;
        }
    }
    std::printf("%zu criteria, %d passed, %d failed (known failures: C1, C11 on T_n), %d unexpected\n",
                criteria.size(), static_cast<int>(criteria.size()) - failed, failed, unexpected);
    return unexpected == 0 ? 0 : 1;
}
