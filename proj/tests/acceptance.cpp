// Acceptance suite: runs every exact-identity criterion at desk scale and
// prints one pass/fail line per criterion.  Exits nonzero when any fails.

#include <array>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "flagmajor/verify.hpp"

using namespace flagmajor;

namespace {

int failures = 0;

// The (m, n) sweep for "every group with at most 10^4 elements": all
// m <= 12 with m^n * n! within the bound, plus two spot checks with large
// m.  (For n = 1 the bound alone would allow unboundedly many m.)
std::vector<std::pair<int, int>> group_sweep() {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= 12; ++m) {
        for (int n = 1;; ++n) {
            long long order = 1;
            bool fits = true;
            for (int i = 1; i <= n; ++i) {
                order *= m;
                order *= i;
                if (order > 10'000) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            out.emplace_back(m, n);
        }
    }
    out.emplace_back(50, 2);
    out.emplace_back(100, 1);
    return out;
}

void report(int criterion, const std::string& label, bool pass, double ms,
            const std::string& detail = "") {
    std::printf("criterion %02d %-4s %s (%.1f ms)%s\n", criterion, pass ? "PASS" : "FAIL",
                label.c_str(), ms, detail.empty() ? "" : ("  " + detail).c_str());
    if (!pass) ++failures;
}

void run(int criterion, const std::string& label, const VerificationReport& r) {
    report(criterion, label + " [" + r.check + "]", r.pass, r.wall_ms,
           r.pass ? "" : r.counterexample);
}

}  // namespace

int main() {
    // 1. flag-major coincides with the major index for m = 1, n <= 7.
    run(1, "flag-major = major on S_n, n <= 7", verify_claim_2_1(7));

    // 2. flag-major is equidistributed with length on B_n, n <= 5.
    for (int n = 1; n <= 5; ++n)
        run(2, "flag-major ~ length on B_" + std::to_string(n), verify_thm_2_2(n));

    // 3. phi is a bijection sending length to flag-major, n <= 4.
    run(3, "phi bijection on B_n, n <= 4", verify_phi_2_2(4));

    // 4. Negative control: not equidistributed for m = 3.
    run(4, "no equidistribution at (3,2)", verify_thm_2_2_negative(3, 2));
    run(4, "no equidistribution at (3,3)", verify_thm_2_2_negative(3, 3));

    // 5. Formula and increment lemma on every desk-scale group.
    {
        bool pass = true;
        double ms = 0;
        std::string detail;
        for (const auto& [m, n] : group_sweep()) {
            const VerificationReport a = verify_thm_3_1(m, n);
            const VerificationReport b = verify_lemma_3_2(m, n);
            ms += a.wall_ms + b.wall_ms;
            if (!a.pass || !b.pass) {
                pass = false;
                detail = (a.pass ? b : a).counterexample +
                         " at m=" + std::to_string(m) + " n=" + std::to_string(n);
                break;
            }
        }
        report(5, "flag-major formula + top-factor increment, m^n n! <= 10^4 (m <= 12, spots 50/100)",
               pass, ms, detail);
    }

    // 6. Hilbert series ratio equals the flag-major tuple sum at D = 8.
    for (auto [m, n, t] : std::vector<std::array<int, 3>>{
             {1, 2, 2}, {1, 3, 2}, {2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
        run(6,
            "F_D/F_T = tuple sum at (m,n,t)=(" + std::to_string(m) + "," + std::to_string(n) +
                "," + std::to_string(t) + "), D=8",
            verify_thm_4_1(m, n, t, 8));
    }

    // 7. t-partite enumeration equals the closed form at D = 8.
    for (auto [t, nmax] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 3}})
        for (int n = 1; n <= nmax; ++n)
            run(7,
                "partite generating function at (t,n)=(" + std::to_string(t) + "," +
                    std::to_string(n) + "), D=8",
                verify_gg1(t, n, 8));

    // 8. Shuffle sums equal the q-multinomial closed form.
    run(8, "shuffle sums, pairs <= 6 and triples <= 5", verify_gg2(6, 5));

    // 9. Projection nonvanishing boxes and the three-way equivalence.
    for (auto [m, cap] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {4, 8}})
        run(9,
            "projection nonvanishing box, m=" + std::to_string(m) + " cap=" +
                std::to_string(cap),
            verify_claim_5_1(m, 2, 2, cap));
    for (int m : {2, 3})
        run(9, "projection equivalence conditions, m=" + std::to_string(m) + " deg<=3",
            verify_claim_5_2(m, 2, 2, 3));

    // 10. Tuple <-> data bijection round trips over all tuples.
    run(10, "tuple bijection at (2,2,2), 64 tuples", verify_bijection_5_4(2, 2, 2));
    run(10, "tuple bijection at (3,2,2), 324 tuples", verify_bijection_5_4(3, 2, 2));

    // 11. m = t = 2 closed form, n <= 3, plus the pointwise identity at n = 4.
    for (int n = 1; n <= 3; ++n)
        run(11, "signed-permutation closed form, n=" + std::to_string(n) + ", D=8",
            verify_example_5_5(n, 8));
    run(11, "flag-major = 2 major + negatives on B_4", verify_thm_3_1(2, 4));

    // 12. Infrastructure: group laws, relations, q-analog basics.
    {
        bool pass = true;
        double ms = 0;
        std::string detail;
        for (const auto& [m, n] : group_sweep()) {
            const VerificationReport r = verify_group_laws(m, n);
            ms += r.wall_ms;
            if (!r.pass) {
                pass = false;
                detail = r.counterexample + " at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
                break;
            }
        }
        report(12, "group laws and generator relations on all desk-scale groups", pass, ms,
               detail);
    }
    run(12, "q-multinomial specialization and series division contract",
        verify_qseries_basics(8, 40, 0x5eed));

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion line(s) failed\n", failures);
    return 1;
}
