#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "flagmajor/cyclotomic.hpp"

using namespace flagmajor;

namespace {

// Dense integer polynomial product, ascending degree.
std::vector<long long> dense_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

    // prod over divisors d of m of Phi_d equals x^m - 1.
    for (int m = 1; m <= 30; ++m) {
        std::vector<long long> prod{1};
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod = dense_mul(prod, cyclotomic_polynomial(d));
        std::vector<long long> expected(static_cast<size_t>(m) + 1, 0);
        expected[0] = -1;
        expected[static_cast<size_t>(m)] = 1;
        CHECK(prod == expected);
    }
}

TEST_CASE("exact zero tests") {
    // 1 + omega + omega^2 = 0 for m = 3.
    CyclotomicInt a(3);
    a.add_root_power(0);
    a.add_root_power(1);
    a.add_root_power(2);
    CHECK(a.is_zero());

    // 1 + omega^2 = 0 for m = 4 (omega = i).
    CyclotomicInt b(4);
    b.add_root_power(0);
    b.add_root_power(2);
    CHECK(b.is_zero());

    // Composite modulus: 1 + omega^3 = 0 for m = 6, but 1 + omega is not zero.
    CyclotomicInt c(6);
    c.add_root_power(0);
    c.add_root_power(3);
    CHECK(c.is_zero());
    CyclotomicInt d(6);
    d.add_root_power(0);
    d.add_root_power(1);
    CHECK_FALSE(d.is_zero());

    // Full root sum vanishes for every m.
    for (int m = 1; m <= 12; ++m) {
        CyclotomicInt sum(m);
        for (int k = 0; k < m; ++k) sum.add_root_power(k);
        CHECK(sum.is_zero() == (m > 1));
    }
}

TEST_CASE("rational integer detection and equality") {
    // omega^2 + 2 = 1 for m = 4.
    CyclotomicInt a(4);
    a.add_root_power(2);
    a.add_root_power(0, 2);
    long long value = 0;
    CHECK(a.rational_integer(&value));
    CHECK(value == 1);
    CHECK(a == CyclotomicInt::integer(4, 1));

    CyclotomicInt b(4);
    b.add_root_power(1);
    CHECK_FALSE(b.rational_integer());

    // Representatives differing by a multiple of Phi_m compare equal.
    CHECK(CyclotomicInt::integer(2, -1) == CyclotomicInt::root_power(2, 1));
    CHECK(CyclotomicInt::root_power(3, 5) == CyclotomicInt::root_power(3, 2));
    CHECK_THROWS_AS(CyclotomicInt::integer(3, 1) += CyclotomicInt::integer(4, 1),
                    std::invalid_argument);
}
