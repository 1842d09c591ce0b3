#pragma once

#include <vector>

#include "flagmajor/colored_permutation.hpp"

namespace flagmajor {

// Exponents (k_0,...,k_{n-1}) of the unique factorization
//   g = t_{n-1}^{k_{n-1}} ... t_1^{k_1} t_0^{k_0},  0 <= k_i < m(i+1).
struct CanonicalWord {
    int m = 1;
    std::vector<int> exponents;
    friend auto operator<=>(const CanonicalWord&, const CanonicalWord&) = default;
};

// Total function: every element factors uniquely.  The top exponent is
// recovered in closed form from the image of n (k = n*color + (n - abs) mod n),
// then the element is reduced into C_m wr S_{n-1} and the argument repeats.
CanonicalWord decompose(const ColoredPermutation& g);

ColoredPermutation recompose(const CanonicalWord& w, int n, int m);

// Flag-major index: the sum of the canonical exponents.
long long flag_major(const CanonicalWord& w);
long long flag_major(const ColoredPermutation& g);

}  // namespace flagmajor
