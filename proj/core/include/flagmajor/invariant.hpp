#pragma once

#include <map>
#include <vector>

#include "flagmajor/colored_permutation.hpp"
#include "flagmajor/cyclotomic.hpp"
#include "flagmajor/exponent_matrix.hpp"
#include "flagmajor/partite.hpp"
#include "flagmajor/polynomial.hpp"

namespace flagmajor {

inline constexpr long long kDefaultTupleBudget = 1'000'000;

// True when every column sum of f is divisible by m; exactly the monomials
// whose diagonal-action projection survives.
bool is_F0(const ExponentMatrix& f, int m);

struct ActResult {
    ExponentMatrix image;
    int phase = 0;  // accumulated omega exponent, mod m
    friend bool operator==(const ActResult&, const ActResult&) = default;
};

// g acting on the tensor monomial x^f in one slot (1-based): variables in
// that row are permuted by |g| and the phase picks up color(g(j)) * f(slot, j).
ActResult act_slot(const ColoredPermutation& g, const ExponentMatrix& f, int slot);

// g acting simultaneously in every slot; phases add across rows.
ActResult act_diagonal(const ColoredPermutation& g, const ExponentMatrix& f);

// pi(x^f) = sum over the whole group of the diagonal action; coefficients
// are exact cyclotomic integers with entries that reduce to zero removed.
using TensorMonomialSum = std::map<ExponentMatrix, CyclotomicInt>;
TensorMonomialSum project(const ExponentMatrix& f, int m,
                          long long budget = kDefaultGroupBudget);

struct Claim51Report {
    long long checked = 0;
    std::vector<ExponentMatrix> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies project(f) != 0  <=>  is_F0(f) for every f in the exponent box
// [0, cap)^{t x n}.
Claim51Report claim51_check(int m, int n, int t, int cap,
                            long long budget = kDefaultGroupBudget);

struct Claim52Result {
    bool support_overlap = false;
    bool projection_equal = false;
    bool column_permuted = false;
    bool consistent() const {
        return support_overlap == projection_equal && projection_equal == column_permuted;
    }
};

// Evaluates the three equivalent conditions relating two projected
// monomials with f, h both in F_0.
Claim52Result claim52_equiv(const ExponentMatrix& f, const ExponentMatrix& h, int m,
                            long long budget = kDefaultGroupBudget);

// Hilbert series of the tensor invariant algebra:
// 1 / prod_{i<=t, j<=n} (1 - q_i^{m j}), truncated.
TruncatedSeries hilbert_tia(int m, int n, int t, long long bound);

// Hilbert series of the diagonal invariant algebra, by basis enumeration.
TruncatedSeries hilbert_dia(int m, int n, int t, long long bound);

// Same series assembled from residue classes: sum over the ways to split n
// across residue vectors of the monomial prefactor times t-partite
// generating functions in q_i^m.  Cross-check for hilbert_dia.
TruncatedSeries hilbert_dia_by_residue_classes(int m, int n, int t, long long bound);

// Order in which a tuple's product is taken when testing it against the
// identity: LeftToRight means pi_1 o pi_2 o ... o pi_t.
enum class ProductOrder { LeftToRight, RightToLeft };

// Sum over all t-tuples with product = identity of
// prod_i q_i^{flag_major(pi_i)}.  The free (t-1)-fold enumeration may be
// partitioned across worker threads (thread count from FLAGMAJOR_THREADS
// when threads == 0); the polynomial merge is associative, so the result
// does not depend on the split.
MultiPoly rhs_theorem41(int m, int n, int t,
                        ProductOrder order = ProductOrder::LeftToRight,
                        long long tuple_budget = kDefaultTupleBudget,
                        long long group_budget = kDefaultGroupBudget,
                        unsigned threads = 0);

// The data equivalent to a t-tuple (pi_1,...,pi_t) with
// pi_t o ... o pi_1 = identity: a size n_r per residue vector, for each
// slot a partition of {1..n} into classes of those sizes, and per-class
// bijections chaining the classes with trivial total monodromy.
struct TupleData {
    int m = 1;
    int n = 1;
    int t = 1;
    // Indexed by position in residue_set(m, t).
    std::vector<long long> sizes;
    // classes[i][r]: sorted members of the r-th class in slot i+1.
    std::vector<std::vector<std::vector<int>>> classes;
    // maps[i][r]: bijection classes[i][r] -> classes[(i+1) mod t][r].
    std::vector<std::vector<std::map<int, int>>> maps;
    friend bool operator==(const TupleData&, const TupleData&) = default;
};

TupleData tuple_to_data(const std::vector<ColoredPermutation>& tuple);
std::vector<ColoredPermutation> data_to_tuple(const TupleData& data);

}  // namespace flagmajor
