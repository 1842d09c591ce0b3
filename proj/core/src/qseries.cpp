#include "flagmajor/qseries.hpp"

#include <numeric>
#include <stdexcept>

namespace flagmajor {

MultiPoly q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int: k must be >= 0");
    MultiPoly p(1);
    for (int j = 0; j < k; ++j) p.add_term({static_cast<std::uint32_t>(j)}, 1);
    return p;
}

MultiPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    MultiPoly p = MultiPoly::constant(1, 1);
    for (int k = 1; k <= n; ++k) p = poly_mul(p, q_int(k));
    return p;
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (num.nvars() != 1 || den.nvars() != 1)
        throw std::invalid_argument("divide_exact: univariate polynomials only");
    if (den.is_zero()) throw std::domain_error("divide_exact: division by zero");

    // Long division by the leading term; the terms map is ordered, so the
    // leading term is the last entry.
    MultiPoly rem = num;
    MultiPoly quot(1);
    const auto& lead = *den.terms().rbegin();
    const std::uint32_t dden = lead.first[0];
    while (!rem.is_zero()) {
        const auto& top = *rem.terms().rbegin();
        if (top.first[0] < dden) throw std::domain_error("divide_exact: inexact division");
        if (mpz_divisible_p(top.second.get_mpz_t(), lead.second.get_mpz_t()) == 0)
            throw std::domain_error("divide_exact: inexact division");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.second.get_mpz_t(), lead.second.get_mpz_t());
        const Exponents shift = {top.first[0] - dden};
        quot.add_term(shift, q);
        rem = poly_sub(rem, poly_mul(MultiPoly::monomial(1, shift, q), den));
    }
    return quot;
}

MultiPoly q_multinomial(int n, const std::vector<int>& parts) {
    if (n < 0) throw std::invalid_argument("q_multinomial: n must be >= 0");
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: parts must be >= 0");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("q_multinomial: parts must sum to n");
    MultiPoly result = q_factorial(n);
    for (int p : parts) result = divide_exact(result, q_factorial(p));
    return result;
}

}  // namespace flagmajor
