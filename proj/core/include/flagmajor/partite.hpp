#pragma once

#include <utility>
#include <vector>

#include "flagmajor/exponent_matrix.hpp"
#include "flagmajor/polynomial.hpp"

namespace flagmajor {

// A t x n matrix is a t-partite partition when adjacent columns are weakly
// decreasing in top-to-bottom lexicographic order (equivalently: whenever
// rows above i agree at columns j, j+1, row i must not increase).
bool is_t_partite(const ExponentMatrix& f);

// All t-partite partitions with n parts and entry sum <= max_total, in
// ascending lexicographic order of the column sequence.
std::vector<ExponentMatrix> enumerate_t_partite(int t, int n, long long max_total);

// Generating function of t-partite partitions by row sums, truncated:
// lhs enumerates them, rhs is (sum over t-tuples of S_n permutations with
// product = identity of prod_i q_i^{major(pi_i)}) / prod_{i,j} (1 - q_i^j).
// Both sides agree coefficientwise.
TruncatedSeries gg1_lhs(int t, int n, long long bound);
TruncatedSeries gg1_rhs(int t, int n, long long bound);

// An ordered sequence of distinct letters.
using Block = std::vector<int>;

// Major index of a word of distinct letters under the natural order.
long long word_major_index(const std::vector<int>& word);

// All interleavings of the blocks that preserve each block's internal
// order; block supports must be pairwise disjoint.  Deterministic order:
// at every step the earliest block contributes first.
std::vector<std::vector<int>> shuffles(const std::vector<Block>& blocks);

// (sum of q^major over all shuffles, q-multinomial closed form); the two
// polynomials are equal.
std::pair<MultiPoly, MultiPoly> gg2_check(const std::vector<Block>& blocks);

// A t-tuple of residues mod m with entry sum divisible by m.
using ResidueVector = std::vector<int>;

// All m^{t-1} residue vectors, listed in descending lexicographic order;
// this fixed listing is the linear order used by the basis conditions
// below (earlier in the list = larger).
std::vector<ResidueVector> residue_set(int m, int t);

// Entrywise division by m: f = m*h + r.  Requires every column sum of f
// to be divisible by m (so each residue column lands in residue_set).
std::pair<ExponentMatrix, ExponentMatrix> theta(const ExponentMatrix& f, int m);
ExponentMatrix theta_inv(const ExponentMatrix& h, const ExponentMatrix& r, int m);

// Membership in the diagonal-invariant basis index set: column sums
// divisible by m, residue columns weakly decreasing in the residue order,
// and the quotient columns t-partite within each constant-residue run.
bool is_dia_basis_exponent(const ExponentMatrix& f, int m);

// All basis exponents of total degree <= max_total, each exactly once,
// sorted in ascending matrix order (lexicographic on the flattened rows).
std::vector<ExponentMatrix> enumerate_basis(int m, int n, int t, long long max_total);

}  // namespace flagmajor
