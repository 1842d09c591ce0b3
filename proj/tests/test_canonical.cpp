#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "flagmajor/canonical.hpp"

using namespace flagmajor;

namespace {

ColoredPermutation cp(int m, std::vector<ColoredLetter> w) { return {m, std::move(w)}; }

// Independent oracle for the top exponent: try every k in [0, mn) until
// the stripped element fixes the top letter with color 0.
int brute_force_top_exponent(const ColoredPermutation& g) {
    const int n = g.n();
    const ColoredPermutation t = flag_coxeter_element(n - 1, n, g.m());
    for (int k = 0; k < g.m() * n; ++k) {
        const ColoredPermutation rest = compose(power(t, -k), g);
        if (rest(n).abs == n && rest(n).color == 0) return k;
    }
    return -1;
}

// Exhaustive oracle: build the full word -> element table by recomposing
// every bound-respecting exponent vector.
std::map<ColoredPermutation, CanonicalWord> brute_force_table(int n, int m) {
    std::map<ColoredPermutation, CanonicalWord> table;
    std::vector<int> exp(static_cast<size_t>(n), 0);
    for (;;) {
        CanonicalWord w{m, exp};
        table.emplace(recompose(w, n, m), w);
        int pos = n - 1;
        while (pos >= 0) {
            if (++exp[static_cast<size_t>(pos)] < m * (pos + 1)) break;
            exp[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return table;
}

}  // namespace

TEST_CASE("top exponent closed form matches brute force") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {1, 4}, {3, 1}, {2, 4}})
        for (const auto& g : enumerate_group(n, m))
            CHECK(decompose(g).exponents.back() == brute_force_top_exponent(g));
}

TEST_CASE("decompose agrees with the exhaustive table") {
    const auto table = brute_force_table(2, 2);
    REQUIRE(table.size() == 8);  // recompose is injective on the box
    for (const auto& [g, w] : table) CHECK(decompose(g) == w);

    CHECK(decompose(cp(2, {{2, 1}, {1, 0}})).exponents == std::vector<int>{0, 1});
    CHECK(decompose(cp(2, {{1, 1}, {2, 0}})).exponents == std::vector<int>{1, 0});
    CHECK(decompose(ColoredPermutation::identity(3, 2)).exponents == std::vector<int>{0, 0, 0});
}

TEST_CASE("round trips") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        for (const auto& g : enumerate_group(n, m)) {
            const CanonicalWord w = decompose(g);
            for (size_t i = 0; i < w.exponents.size(); ++i) {
                CHECK(w.exponents[i] >= 0);
                CHECK(w.exponents[i] < m * (static_cast<int>(i) + 1));
            }
            CHECK(recompose(w, n, m) == g);
        }
        // decompose is injective and its image fills the whole exponent box.
        std::set<CanonicalWord> words;
        for (const auto& g : enumerate_group(n, m)) words.insert(decompose(g));
        CHECK(words.size() == enumerate_group(n, m).size());
    }
}

TEST_CASE("recompose basics and validation") {
    CHECK(recompose({2, {0, 0}}, 2, 2) == ColoredPermutation::identity(2, 2));
    CHECK(recompose({2, {1, 0}}, 2, 2) == generator(0, 2, 2));
    CHECK_THROWS_AS(recompose({2, {0, 4}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(recompose({2, {0, -1}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(recompose({3, {0, 0}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(recompose({2, {0}}, 2, 2), std::invalid_argument);
}

TEST_CASE("flag-major") {
    CHECK(flag_major(ColoredPermutation::identity(4, 2)) == 0);
    CHECK(flag_major(cp(2, {{2, 1}, {1, 0}})) == 1);

    // The maximum is sum m(i+1) - 1 and is attained exactly once.
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
        long long expected = 0;
        for (int i = 0; i < n; ++i) expected += m * (i + 1) - 1;
        long long best = -1, hits = 0;
        for (const auto& g : enumerate_group(n, m)) {
            const long long fm = flag_major(g);
            if (fm > best) {
                best = fm;
                hits = 1;
            } else if (fm == best) {
                ++hits;
            }
        }
        CHECK(best == expected);
        CHECK(hits == 1);
    }
}
