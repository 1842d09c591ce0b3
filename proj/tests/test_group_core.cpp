#include <doctest.h>

#include <set>
#include <stdexcept>

#include "flagmajor/colored_permutation.hpp"
#include "flagmajor/errors.hpp"

using namespace flagmajor;

namespace {

ColoredPermutation cp(int m, std::vector<ColoredLetter> w) { return {m, std::move(w)}; }

}  // namespace

TEST_CASE("identity windows") {
    CHECK(ColoredPermutation::identity(2, 2) == cp(2, {{1, 0}, {2, 0}}));
    CHECK(ColoredPermutation::identity(1, 3) == cp(3, {{1, 0}}));
    CHECK_THROWS_AS(ColoredPermutation::identity(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation::identity(2, 0), std::invalid_argument);
}

TEST_CASE("window invariants enforced at construction") {
    CHECK_THROWS_AS(cp(2, {{1, 0}, {1, 0}}), std::invalid_argument);  // not a permutation
    CHECK_THROWS_AS(cp(2, {{1, 2}, {2, 0}}), std::invalid_argument);  // color out of range
    CHECK_THROWS_AS(cp(2, {{3, 0}, {2, 0}}), std::invalid_argument);  // abs out of range
}

TEST_CASE("composition convention") {
    // m = 1, n = 3: s_1 s_2 maps 1 -> 2, 2 -> 3, 3 -> 1.
    const auto s1 = generator(1, 3, 1);
    const auto s2 = generator(2, 3, 1);
    CHECK(compose(s1, s2) == cp(1, {{2, 0}, {3, 0}, {1, 0}}));

    // m = 2, n = 2: s_1 s_0 is the flag Coxeter element t_1.
    const auto a = compose(generator(1, 2, 2), generator(0, 2, 2));
    CHECK(a == cp(2, {{2, 1}, {1, 0}}));
    CHECK(a == flag_coxeter_element(1, 2, 2));

    CHECK_THROWS_AS(compose(generator(0, 2, 2), generator(0, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(compose(generator(0, 2, 2), generator(0, 3, 2)), std::invalid_argument);
}

TEST_CASE("identity is neutral") {
    const auto id = ColoredPermutation::identity(3, 2);
    for (const auto& g : enumerate_group(3, 2)) {
        CHECK(compose(id, g) == g);
        CHECK(compose(g, id) == g);
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(cp(3, {{1, 1}})) == cp(3, {{1, 2}}));
    const auto id = ColoredPermutation::identity(2, 3);
    CHECK(inverse(id) == id);
    for (int i = 1; i < 3; ++i) {
        const auto s = generator(i, 3, 2);
        CHECK(inverse(s) == s);
    }
    for (const auto& g : enumerate_group(2, 3)) {
        CHECK(compose(g, inverse(g)) == id);
        CHECK(compose(inverse(g), g) == id);
    }
}

TEST_CASE("power") {
    const auto s0 = generator(0, 2, 3);
    CHECK(power(s0, 3) == ColoredPermutation::identity(2, 3));
    CHECK(power(s0, -1) == inverse(s0));
    CHECK(power(s0, 0) == ColoredPermutation::identity(2, 3));
}

TEST_CASE("generators") {
    CHECK(generator(0, 2, 3) == cp(3, {{1, 1}, {2, 0}}));
    CHECK(generator(1, 3, 1) == cp(1, {{2, 0}, {1, 0}, {3, 0}}));
    CHECK(generator(0, 4, 1) == ColoredPermutation::identity(4, 1));  // m = 1: s_0 = id
    CHECK_THROWS_AS(generator(3, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(generator(-1, 3, 2), std::invalid_argument);
}

TEST_CASE("flag Coxeter elements") {
    CHECK(flag_coxeter_element(2, 3, 1) == cp(1, {{3, 0}, {1, 0}, {2, 0}}));
    CHECK(flag_coxeter_element(1, 2, 2) == cp(2, {{2, 1}, {1, 0}}));
    CHECK_THROWS_AS(flag_coxeter_element(3, 3, 2), std::invalid_argument);
    for (int n : {2, 4})
        for (int m : {1, 3}) CHECK(flag_coxeter_element(0, n, m) == generator(0, n, m));

    // Window form of the top element: j -> j-1 except 1 -> omega * n.
    const auto t = flag_coxeter_element(3, 4, 3);
    CHECK(t(1) == ColoredLetter{4, 1});
    for (int j = 2; j <= 4; ++j) CHECK(t(j) == ColoredLetter{j - 1, 0});

    // Its order is m * n.
    const auto id = ColoredPermutation::identity(3, 2);
    auto acc = flag_coxeter_element(2, 3, 2);
    int order = 1;
    while (acc != id) {
        acc = compose(acc, flag_coxeter_element(2, 3, 2));
        ++order;
        REQUIRE(order <= 6);
    }
    CHECK(order == 6);
}

TEST_CASE("basic generator relations") {
    const int n = 2, m = 3;
    const auto id = ColoredPermutation::identity(n, m);
    const auto s0 = generator(0, n, m);
    const auto s1 = generator(1, n, m);
    CHECK(power(s0, m) == id);
    CHECK(compose(s1, s1) == id);
    CHECK(power(compose(s0, s1), 2 * m) == id);
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(2, 2).size() == 8);
    CHECK(enumerate_group(3, 1).size() == 6);
    CHECK(enumerate_group(2, 3).size() == 18);

    std::set<ColoredPermutation> distinct;
    for (const auto& g : enumerate_group(2, 3)) distinct.insert(g);
    CHECK(distinct.size() == 18);

    CHECK_THROWS_AS(enumerate_group(7, 3), budget_error);
    CHECK(group_order_checked(2, 2) == 8);
    CHECK_THROWS_AS(group_order_checked(10, 10), budget_error);
}

TEST_CASE("window text format") {
    const auto g = cp(2, {{2, 1}, {1, 0}});
    CHECK(format_window(g) == "2^1,1^0");
    CHECK(parse_window("2^1,1^0", 2, 2) == g);
    CHECK(parse_window("-2,1", 2, 2) == g);
    CHECK(parse_window(" -2 , 1 ", 2, 2) == g);
    CHECK(parse_window("2,1", 2, 3) == cp(3, {{2, 0}, {1, 0}}));

    for (const auto& h : enumerate_group(3, 2))
        CHECK(parse_window(format_window(h), 3, 2) == h);

    CHECK_THROWS_AS(parse_window("-2,1", 2, 3), std::invalid_argument);   // shorthand needs m=2
    CHECK_THROWS_AS(parse_window("2^1", 2, 2), std::invalid_argument);    // wrong length
    CHECK_THROWS_AS(parse_window("2^1,,1^0", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("a,b", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("-2^1,1", 2, 2), std::invalid_argument);  // sign + color
}
