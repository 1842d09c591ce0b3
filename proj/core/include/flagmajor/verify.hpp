#pragma once

#include <map>
#include <string>

#include "flagmajor/colored_permutation.hpp"
#include "flagmajor/invariant.hpp"

namespace flagmajor {

// Outcome of one named identity check.  Failing reports always carry a
// concrete counterexample payload (a JSON object as text).
struct VerificationReport {
    std::string check;
    std::map<std::string, long long> params;
    bool pass = false;
    std::string counterexample;  // empty iff pass
    double wall_ms = 0.0;
};

// {"check":..,"params":{..},"status":"pass"|"fail",
//  "counterexample":{..}|null,"wall_time_ms":..}
std::string to_json(const VerificationReport& report);

// flag-major = major index when m = 1, for every n <= max_n.
VerificationReport verify_claim_2_1(int max_n, long long budget = kDefaultGroupBudget);
// flag-major and length are equidistributed over B_n (m = 2).
VerificationReport verify_thm_2_2(int n, long long budget = kDefaultGroupBudget);
// ... and they are NOT equidistributed at the given (m, n); the check
// passes when the distributions differ.
VerificationReport verify_thm_2_2_negative(int m, int n,
                                           long long budget = kDefaultGroupBudget);
// phi is a bijection of B_n sending length to flag-major, n <= max_n.
VerificationReport verify_phi_2_2(int max_n, long long budget = kDefaultGroupBudget);
// m*major + color sum equals the canonical flag-major on all of C_m wr S_n.
VerificationReport verify_thm_3_1(int m, int n, long long budget = kDefaultGroupBudget);
// Multiplying by the top flag Coxeter element raises the formula by one
// for every eligible element.
VerificationReport verify_lemma_3_2(int m, int n, long long budget = kDefaultGroupBudget);
// Hilbert series ratio F_D/F_T equals the flag-major tuple sum, both
// product-order conventions, truncated at the bound.
VerificationReport verify_thm_4_1(int m, int n, int t, long long bound,
                                  long long tuple_budget = kDefaultTupleBudget,
                                  long long group_budget = kDefaultGroupBudget);
// t-partite enumeration equals the closed form at the bound.
VerificationReport verify_gg1(int t, int n, long long bound);
// Shuffle sums equal the q-multinomial closed form for all block pairs
// with total size <= max_pair_total and triples <= max_triple_total.
VerificationReport verify_gg2(int max_pair_total, int max_triple_total);
// Projection nonvanishing biconditional on the full exponent box.
VerificationReport verify_claim_5_1(int m, int n, int t, int cap,
                                    long long group_budget = kDefaultGroupBudget);
// The three support/projection/column-permutation conditions agree on all
// F_0 pairs up to the degree cap.
VerificationReport verify_claim_5_2(int m, int n, int t, int max_degree,
                                    long long group_budget = kDefaultGroupBudget);
// tuple <-> data round trips on every tuple with identity product; tuples
// violating the product constraint must be rejected.  Scans all |G|^t
// tuples.
VerificationReport verify_bijection_5_4(int m, int n, int t,
                                        long long tuple_budget = kDefaultTupleBudget,
                                        long long group_budget = kDefaultGroupBudget);
// m = t = 2 closed form: F_D/F_T = sum over B_n of
// q1^{2 major(g) + k(g)} q2^{2 major(g^{-1}) + k(g)}, plus the pointwise
// identity flag-major = 2*major + k.
VerificationReport verify_example_5_5(int n, long long bound);

// Infrastructure sweeps used by the acceptance suite.
// Group laws (identity/inverse exhaustive, associativity exhaustive for
// |G| <= assoc_exhaustive_cap, else seeded random triples) and the
// defining generator relations.
VerificationReport verify_group_laws(int m, int n,
                                     long long budget = kDefaultGroupBudget,
                                     long long assoc_exhaustive_cap = 50,
                                     int assoc_samples = 2000);
// q-multinomials specialize to multinomials at q = 1 (all compositions of
// every n <= max_n) and the series division contract on seeded random
// inputs.
VerificationReport verify_qseries_basics(int max_n, int random_rounds, unsigned seed);

}  // namespace flagmajor
