#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flagmajor {

using BigInt = mpz_class;

// Exponent tuple of a term, one entry per variable.
using Exponents = std::vector<std::uint32_t>;

long long degree_of(const Exponents& e);

// Sparse multivariate polynomial with exact integer coefficients.
// Terms are kept in lexicographic exponent order and zero coefficients are
// never stored, so equality is structural.
class MultiPoly {
public:
    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const BigInt& c);
    static MultiPoly monomial(int nvars, Exponents exp, const BigInt& c = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Exponents& e) const;
    BigInt constant_term() const;
    long long total_degree() const;  // -1 for the zero polynomial

    void add_term(const Exponents& e, const BigInt& c);

    // Specialization with every variable set to 1.
    BigInt at_all_ones() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    int nvars_;
    std::map<Exponents, BigInt> terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const MultiPoly& a);

// Drops every term of total degree > bound.
MultiPoly truncate(const MultiPoly& a, long long bound);

// Power series truncated at a total-degree bound: every stored term has
// coordinate-sum <= bound.
struct TruncatedSeries {
    MultiPoly poly;
    long long bound = 0;

    TruncatedSeries(MultiPoly p, long long bound_);
    int nvars() const { return poly.nvars(); }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_one(int nvars, long long bound);
// Mixed bounds truncate the result to the smaller one.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Requires den to have constant term +1 or -1; the result r satisfies
// r * den = num up to the common bound (coefficients are found degree by
// degree).
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

// {"vars":["q1",...],"terms":[{"exp":[...],"coeff":"<decimal>"},...]} in
// lexicographic exponent order; the series form adds "bound".
std::string to_json(const MultiPoly& p);
std::string to_json(const TruncatedSeries& s);

}  // namespace flagmajor
