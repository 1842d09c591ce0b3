#pragma once

#include <vector>

#include "flagmajor/polynomial.hpp"

namespace flagmajor {

// Univariate q-analogs, as single-variable MultiPoly values.

// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
MultiPoly q_int(int k);

// [n]!_q = [n]_q [n-1]_q ... [1]_q; [0]!_q = 1.
MultiPoly q_factorial(int n);

// Exact univariate division; throws std::domain_error if the division
// leaves a remainder.
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

// [n; n_1,...,n_r]_q = [n]!_q / ([n_1]!_q ... [n_r]!_q); the parts must sum
// to n and the division is exact by construction.
MultiPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace flagmajor
