#include "flagmajor/canonical.hpp"

#include <numeric>
#include <stdexcept>

namespace flagmajor {

CanonicalWord decompose(const ColoredPermutation& g) {
    const int m = g.m();
    std::vector<int> exponents(static_cast<size_t>(g.n()), 0);
    ColoredPermutation cur = g;
    for (int i = g.n() - 1; i >= 1; --i) {
        const int size = i + 1;
        const ColoredLetter top = cur(size);
        const int k = size * top.color + (size - top.abs) % size;
        exponents[static_cast<size_t>(i)] = k;
        // Strip the factor t_i^k; the remainder fixes the top letter.
        ColoredPermutation rest = compose(power(flag_coxeter_element(i, size, m), -k), cur);
        std::vector<ColoredLetter> w(rest.window().begin(), rest.window().end() - 1);
        cur = {m, std::move(w)};
    }
    exponents[0] = cur(1).color;
    return {m, std::move(exponents)};
}

ColoredPermutation recompose(const CanonicalWord& w, int n, int m) {
    if (w.m != m || static_cast<int>(w.exponents.size()) != n)
        throw std::invalid_argument("recompose: word does not match (n, m)");
    ColoredPermutation acc = ColoredPermutation::identity(n, m);
    for (int i = n - 1; i >= 0; --i) {
        const int k = w.exponents[static_cast<size_t>(i)];
        if (k < 0 || k >= m * (i + 1))
            throw std::invalid_argument("recompose: exponent out of bounds");
        acc = compose(acc, power(flag_coxeter_element(i, n, m), k));
    }
    return acc;
}

long long flag_major(const CanonicalWord& w) {
    return std::accumulate(w.exponents.begin(), w.exponents.end(), 0ll);
}

long long flag_major(const ColoredPermutation& g) { return flag_major(decompose(g)); }

}  // namespace flagmajor
