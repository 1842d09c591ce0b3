#include <doctest.h>

#include <random>
#include <stdexcept>

#include "flagmajor/polynomial.hpp"

using namespace flagmajor;

namespace {

MultiPoly one_plus_q() {
    MultiPoly p(1);
    p.add_term({0}, 1);
    p.add_term({1}, 1);
    return p;
}

MultiPoly one_minus_q() {
    MultiPoly p(1);
    p.add_term({0}, 1);
    p.add_term({1}, -1);
    return p;
}

MultiPoly random_poly(std::mt19937& rng, int nvars, int terms, int max_exp, int max_coeff) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> expo(0, max_exp);
    MultiPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        Exponents e(static_cast<size_t>(nvars));
        for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
        p.add_term(e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    CHECK(poly_mul(one_plus_q(), one_minus_q()) ==
          poly_sub(MultiPoly::constant(1, 1), MultiPoly::monomial(1, {2})));
    CHECK(poly_add(one_plus_q(), poly_neg(one_plus_q())).is_zero());
    CHECK_THROWS_AS(poly_add(MultiPoly(1), MultiPoly(2)), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly(1).coeff({0, 0}), std::invalid_argument);

    MultiPoly p(2);
    p.add_term({1, 1}, 3);
    p.add_term({1, 1}, -3);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(p.total_degree() == -1);
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937 rng(12345);
    for (int round = 0; round < 25; ++round) {
        const MultiPoly a = random_poly(rng, 2, 5, 4, 6);
        const MultiPoly b = random_poly(rng, 2, 5, 4, 6);
        const MultiPoly c = random_poly(rng, 2, 5, 4, 6);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        CHECK(a.at_all_ones() * b.at_all_ones() == poly_mul(a, b).at_all_ones());
    }
}

TEST_CASE("series truncation") {
    const TruncatedSeries s{one_plus_q(), 1};
    const TruncatedSeries prod = series_mul(s, s);
    MultiPoly expected(1);
    expected.add_term({0}, 1);
    expected.add_term({1}, 2);
    CHECK(prod.poly == expected);
    CHECK(prod.bound == 1);

    // Construction truncates.
    MultiPoly q3 = MultiPoly::monomial(1, {3});
    CHECK(TruncatedSeries(q3, 2).poly.is_zero());
}

TEST_CASE("series division") {
    const TruncatedSeries quotient =
        series_div({poly_mul(one_plus_q(), one_minus_q()), 5}, {one_minus_q(), 5});
    CHECK(quotient.poly == one_plus_q());

    const TruncatedSeries geometric = series_div(series_one(1, 3), {one_minus_q(), 3});
    MultiPoly expected(1);
    for (std::uint32_t k = 0; k <= 3; ++k) expected.add_term({k}, 1);
    CHECK(geometric.poly == expected);

    CHECK_THROWS_AS(series_div(series_one(1, 3), {poly_add(one_plus_q(), one_plus_q()), 3}),
                    std::domain_error);

    // Division by a unit with constant term -1.
    const TruncatedSeries neg = series_div({one_plus_q(), 4}, {poly_neg(one_plus_q()), 4});
    CHECK(neg.poly == poly_neg(MultiPoly::constant(1, 1)));
}

TEST_CASE("division contract on random inputs") {
    std::mt19937 rng(777);
    for (int round = 0; round < 30; ++round) {
        MultiPoly a = random_poly(rng, 2, 6, 5, 4);
        MultiPoly b = random_poly(rng, 2, 6, 5, 4);
        b.add_term({0, 0}, -b.constant_term() + (round % 2 ? 1 : -1));
        const TruncatedSeries sa{a, 6}, sb{b, 6};
        CHECK(series_mul(series_div(sa, sb), sb) == sa);
    }
}

TEST_CASE("JSON serialization") {
    CHECK(to_json(one_plus_q()) ==
          "{\"vars\":[\"q1\"],\"terms\":["
          "{\"exp\":[0],\"coeff\":\"1\"},{\"exp\":[1],\"coeff\":\"1\"}]}");
    CHECK(to_json(TruncatedSeries{one_plus_q(), 4}) ==
          "{\"vars\":[\"q1\"],\"bound\":4,\"terms\":["
          "{\"exp\":[0],\"coeff\":\"1\"},{\"exp\":[1],\"coeff\":\"1\"}]}");

    MultiPoly big(2);
    BigInt huge("123456789012345678901234567890");
    big.add_term({0, 2}, -huge);
    CHECK(to_json(big) ==
          "{\"vars\":[\"q1\",\"q2\"],\"terms\":["
          "{\"exp\":[0,2],\"coeff\":\"-123456789012345678901234567890\"}]}");
}

TEST_CASE("big coefficients stay exact") {
    // (1 + q)^64 has central coefficient C(64, 32), beyond 2^61.
    MultiPoly p = MultiPoly::constant(1, 1);
    for (int i = 0; i < 64; ++i) p = poly_mul(p, one_plus_q());
    CHECK(p.coeff({32}) == BigInt("1832624140942590534"));
    CHECK(p.at_all_ones() == BigInt("18446744073709551616"));  // 2^64
}
