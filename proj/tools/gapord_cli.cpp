// gapord: parse, compare, translate and enumerate ordinal notation terms, and
// run the property suites.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapord/gapord.hpp"

using namespace gapord;

namespace {

struct Options {
    std::string system = "theta";
    std::string variant;
    std::string sub = "nat";
    std::string map;
    std::string mode = "weak";
    std::string suite = "all";
    std::optional<int> n;
    std::optional<int> m;
    std::optional<std::size_t> max_lh;
    std::optional<std::size_t> max_len;
    bool no_timing = false;
    std::vector<std::string> terms;
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int need_n(const Options& o, const char* what) {
    if (!o.n)
        throw UsageError(std::string(what) + " needs --n");
    if (*o.n < 1)
        throw UsageError("--n must be positive");
    return *o.n;
}

int max_index(std::span<const int> w) {
    int k = -1;
    for (int x : w)
        k = std::max(k, x);
    return k;
}

int bin_max_index(const BinThetaTerm& t) {
    if (t.is_zero())
        return -1;
    return std::max({t.level(), bin_max_index(t.left()), bin_max_index(t.right())});
}

ThetaTerm read_theta(const Options& o, const std::string& text) {
    ThetaTerm t = parse_theta(text);
    ThetaSystem sys = ThetaSystem::all();
    if (o.variant == "prime")
        sys = ThetaSystem::primed(need_n(o, "T'"), o.m);
    else if (o.n || o.m)
        sys = ThetaSystem{o.n, o.m, false};
    if (!theta_validate(t, sys))
        throw std::invalid_argument(to_string(t) + " is not in " + to_string(sys));
    return t;
}

PiTerm read_pi(const Options& o, const std::string& text) {
    PiTerm t = parse_pi(text);
    if (!pi_validate(t, o.n))
        throw std::invalid_argument(to_string(t) + " is not a wellformed pi term" +
                                    (o.n ? " below " + std::to_string(*o.n) : std::string()));
    return t;
}

VeblenTerm<PiTerm> read_veblen_pi(const std::string& text) {
    detail::Scanner in(text);
    auto t = detail::parse_veblen<PiTerm>(in, [](detail::Scanner& s) { return detail::parse_pi(s); });
    in.finish();
    return t;
}

GapSequence read_seq(const Options& o, const std::string& text) {
    GapSequence s = parse_gapseq(text, need_n(o, "a gap sequence"));
    if (o.variant == "bar" && !in_sbar(s))
        throw std::invalid_argument(to_string(s) + " is not in S-bar");
    return s;
}

BinThetaTerm read_btheta(const Options& o, const std::string& text) {
    BinThetaTerm t = parse_btheta(text);
    int n = o.n ? *o.n : std::max(1, bin_max_index(t) + 1);
    bool ok = o.variant == "ot0" ? in_bin_ot0(t, n) : o.variant == "ot" ? in_bin_ot(t, n) : in_bin_t(t, n);
    if (!ok)
        throw std::invalid_argument(to_string(t) + " is not in the binary system at n = " + std::to_string(n));
    return t;
}

// Canonical text of a term of the selected system.
std::string canonical(const Options& o, const std::string& text) {
    if (o.system == "cnf")
        return to_string(parse_cnf(text));
    if (o.system == "veblen") {
        if (o.sub == "pi") {
            auto t = read_veblen_pi(text);
            for (const auto& s : t.chain())
                read_pi(o, to_string(s));
            return to_string(t, [](const PiTerm& s) { return to_string(s); });
        }
        if (o.sub == "level")
            return to_string(parse_leveled(text, need_n(o, "a leveled value")));
        return to_string(parse_veblen_nat(text));
    }
    if (o.system == "pi")
        return to_string(read_pi(o, text));
    if (o.system == "theta")
        return to_string(read_theta(o, text));
    if (o.system == "gapseq")
        return to_string(read_seq(o, text));
    if (o.system == "btheta")
        return to_string(read_btheta(o, text));
    throw UsageError("unknown system: " + o.system);
}

std::strong_ordering compare_terms(const Options& o, const std::string& x, const std::string& y) {
    if (o.system == "cnf")
        return cnf_compare(parse_cnf(x), parse_cnf(y));
    if (o.system == "veblen") {
        if (o.sub == "pi")
            return veblen_compare(read_veblen_pi(x), read_veblen_pi(y));
        if (o.sub == "level") {
            int n = need_n(o, "a leveled value");
            return parse_leveled(x, n) <=> parse_leveled(y, n);
        }
        return veblen_compare(parse_veblen_nat(x), parse_veblen_nat(y));
    }
    if (o.system == "pi")
        return pi_compare(read_pi(o, x), read_pi(o, y));
    if (o.system == "theta")
        return theta_compare(read_theta(o, x), read_theta(o, y));
    if (o.system == "btheta")
        return btheta_compare(read_btheta(o, x), read_btheta(o, y));
    if (o.system == "gapseq")
        throw UsageError("gap sequences are partially ordered; use embed");
    throw UsageError("unknown system: " + o.system);
}

std::string show_split(const HSplit& h) {
    std::string out = "(" + to_string(h.head) + ", (";
    for (std::size_t k = 0; k < h.parts.size(); ++k)
        out += (k ? ", " : "") + to_string(h.parts[k]);
    return out + "))";
}

std::string translate(const Options& o, const std::string& text) {
    const std::string& m = o.map;
    if (m == "chi")
        return to_string(chi(parse_veblen_nat(text)));
    if (m == "chi-std")
        return to_string(chi_std(parse_cnf(text)));
    if (m == "psi")
        return to_string(psi_map(read_veblen_pi(text), need_n(o, "psi")));
    if (m == "psi-prime") {
        int n = need_n(o, "psi-prime");
        Options in = o;
        in.m.reset();
        return to_string(psi_prime(read_theta(in, text), n));
    }
    if (m == "tau") {
        if (!o.m)
            throw UsageError("tau needs --m");
        int n = need_n(o, "tau");
        ThetaTerm a = parse_theta(text);
        if (*o.m == 0)
            return to_string(tau_zero(a, n));
        return to_string(tau_tuple(*o.m, a, n));
    }
    if (m == "e") {
        ThetaTerm a = parse_theta(text);
        int n = o.n ? *o.n : std::max(1, max_index(a.word()) + 1);
        return to_string(seq_of_term(a, n));
    }
    // h_n acts on S_{n+1}, so --n names the map and the alphabet is one larger.
    if (m == "h")
        return show_split(h_split(parse_gapseq(text, need_n(o, "h") + 1)));
    if (m == "f-embed")
        return to_string(embed_seq(read_seq(o, text)));
    if (m == "o-value") {
        int n = need_n(o, "o-value");
        return to_string(o_value(parse_btheta(text), n));
    }
    throw UsageError("unknown map: " + m);
}

std::size_t need_bound(const Options& o) {
    auto b = o.max_lh ? o.max_lh : o.max_len;
    if (!b)
        throw UsageError("enumerate needs --max-lh or --max-len");
    return *b;
}

void enumerate(const Options& o) {
    std::size_t bound = need_bound(o);
    auto emit = [](const std::string& s) { std::cout << s << '\n'; };
    if (o.system == "cnf") {
        for (const auto& a : enumerate_cnf(bound))
            emit(to_string(a));
    } else if (o.system == "veblen") {
        unsigned subs = o.n ? static_cast<unsigned>(need_n(o, "veblen")) : 2;
        if (o.sub == "pi") {
            auto sub_terms = enumerate_pi0(need_n(o, "pi subscripts"), 3);
            for (const auto& a : enumerate_veblen(sub_terms, bound))
                emit(to_string(a, [](const PiTerm& s) { return to_string(s); }));
        } else {
            for (const auto& a : enumerate_veblen_nat(subs - 1, bound))
                emit(to_string(a));
        }
    } else if (o.system == "pi") {
        for (const auto& a : enumerate_pi(need_n(o, "pi"), bound))
            if (o.variant != "0" || in_pi0(a, *o.n))
                emit(to_string(a));
    } else if (o.system == "theta") {
        int n = need_n(o, "theta");
        ThetaSystem sys = o.variant == "prime" ? ThetaSystem::primed(n, o.m) : ThetaSystem{n, o.m, false};
        for (const auto& a : enumerate_theta(sys, bound))
            emit(to_string(a));
    } else if (o.system == "gapseq") {
        SeqFilter f{o.variant == "bar", o.m};
        for (const auto& s : enumerate_gapseq(need_n(o, "gapseq"), bound, f))
            emit(to_string(s));
    } else if (o.system == "btheta") {
        BinSystem sys = o.variant == "ot0" ? BinSystem::ot0 : o.variant == "ot" ? BinSystem::ot : BinSystem::t;
        for (const auto& t : enumerate_btheta(need_n(o, "btheta"), bound, sys))
            emit(to_string(t));
    } else {
        throw UsageError("unknown system: " + o.system);
    }
}

int check(const Options& o) {
    bool failed = false;
    for (const auto& r : check_suite(o.suite)) {
        std::cout << to_jsonl(r, !o.no_timing) << std::endl;
        std::cerr << summary_line(r) << '\n';
        for (const auto& c : r.counterexamples)
            std::cerr << "      " << c << '\n';
        failed |= !r.ok();
    }
    return failed ? 1 : 0;
}

const char* sym(std::strong_ordering c) { return c < 0 ? "<" : c > 0 ? ">" : "="; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal notation systems for gap sequences"};
    app.require_subcommand(1);
    Options o;

    auto add_system = [&](CLI::App* c) {
        c->add_option("--system", o.system, "cnf | veblen | pi | theta | gapseq | btheta")
            ->check(CLI::IsMember({"cnf", "veblen", "pi", "theta", "gapseq", "btheta"}));
        c->add_option("--variant", o.variant,
                      "theta: prime; gapseq: bar; btheta: ot | ot0; pi: 0")
            ->check(CLI::IsMember({"", "prime", "bar", "ot", "ot0", "0"}));
        c->add_option("--sub", o.sub, "veblen subscripts: nat | pi | level")
            ->check(CLI::IsMember({"nat", "pi", "level"}));
    };
    auto add_bounds = [&](CLI::App* c) {
        c->add_option("--n", o.n, "index or alphabet bound");
        c->add_option("--m", o.m, "level");
    };

    auto* parse = app.add_subcommand("parse", "print the canonical form of a term");
    add_system(parse);
    add_bounds(parse);
    parse->add_option("term", o.terms)->required()->expected(1);

    auto* compare = app.add_subcommand("compare", "print <, = or >");
    add_system(compare);
    add_bounds(compare);
    compare->add_option("terms", o.terms)->required()->expected(2);

    auto* tr = app.add_subcommand("translate", "apply a translation map");
    tr->add_option("--map", o.map)->required()->check(
        CLI::IsMember({"chi", "chi-std", "psi", "psi-prime", "tau", "e", "h", "f-embed", "o-value"}));
    add_bounds(tr);
    tr->add_option("--variant", o.variant)->check(CLI::IsMember({"", "bar", "prime"}));
    tr->add_option("term", o.terms)->required()->expected(1);

    auto* en = app.add_subcommand("enumerate", "list all terms within a bound, one per line");
    add_system(en);
    add_bounds(en);
    en->add_option("--max-lh", o.max_lh, "length bound for unary terms");
    en->add_option("--max-len", o.max_len, "length, node or size bound");

    auto* em = app.add_subcommand("embed", "decide gap-embeddability of two sequences");
    em->add_option("--mode", o.mode)->check(CLI::IsMember({"weak", "strong"}));
    em->add_option("--n", o.n, "alphabet size")->required();
    em->add_option("sequences", o.terms)->required()->expected(2);

    auto* ch = app.add_subcommand("check", "run property suites");
    ch->add_option("--suite", o.suite, "suite name or all");
    ch->add_flag("--no-timing", o.no_timing, "leave durations out of the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*parse) {
            std::cout << canonical(o, o.terms[0]) << '\n';
        } else if (*compare) {
            std::cout << sym(compare_terms(o, o.terms[0], o.terms[1])) << '\n';
        } else if (*tr) {
            std::cout << translate(o, o.terms[0]) << '\n';
        } else if (*en) {
            enumerate(o);
        } else if (*em) {
            GapSequence s = parse_gapseq(o.terms[0], need_n(o, "embed"));
            GapSequence t = parse_gapseq(o.terms[1], *o.n);
            bool r = gap_leq(s, t, o.mode == "strong" ? GapMode::strong : GapMode::weak);
            std::cout << (r ? "true" : "false") << '\n';
        } else if (*ch) {
            return check(o);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
