// Walks one ordinal through the translations: a CNF ordinal below w^(w^w)
// goes to a theta-term, the theta-term to its gap sequence, and the gap
// sequence to a binary theta-term.

#include <iostream>

#include "gapord/gapord.hpp"

int main() {
    using namespace gapord;

    CnfOrdinal a = parse_cnf("w^(w^2 + 1) + w*3 + 2");
    ThetaTerm t = chi_std(a);
    GapSequence s = seq_of_term(t, 2);
    BinThetaTerm b = embed_seq(s);
    std::cout << "cnf        " << to_string(a) << '\n'
              << "chi_std    " << to_string(t) << '\n'
              << "e          " << to_string(s) << '\n'
              << "f          " << to_string(b) << '\n';

    // The image order agrees with the CNF order.
    CnfOrdinal c = parse_cnf("w^(w^2 + 1) + w*3 + 3");
    bool agree = (cnf_compare(a, c) < 0) == (theta_compare(t, chi_std(c)) < 0);
    std::cout << "order kept " << (agree ? "yes" : "no") << '\n';

    // tau_0 of a T'_2 term: an ordinal below w_3.
    ThetaTerm u = parse_theta("v0 v1 v0 v1 0");
    std::cout << "tau_0      " << to_string(tau_zero(u, 1)) << '\n';
    return agree ? 0 : 1;
}
