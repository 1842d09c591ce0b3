#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace flagmajor {

// One window entry: the letter omega^color * abs, where omega is a fixed
// primitive m-th root of unity.
struct ColoredLetter {
    int abs = 1;    // in 1..n
    int color = 0;  // exponent of omega, in 0..m-1
    friend auto operator<=>(const ColoredLetter&, const ColoredLetter&) = default;
};

// An element of the wreath product C_m wr S_n in window notation:
// window[j-1] is the image of j.  The abs values form a permutation of
// {1..n} and every color lies in [0, m).  Both invariants are enforced at
// construction, so equality of elements is structural equality.
class ColoredPermutation {
public:
    ColoredPermutation(int m, std::vector<ColoredLetter> window);
    static ColoredPermutation identity(int n, int m);

    int m() const { return m_; }
    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<ColoredLetter>& window() const { return window_; }

    // Image of position j (1-based).
    const ColoredLetter& operator()(int j) const { return window_[static_cast<size_t>(j) - 1]; }

    // Image of the colored letter omega^c * v: colors multiply through,
    // i.e. g(omega^c * v) = omega^c * g(v).
    ColoredLetter apply(ColoredLetter x) const;

    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    int m_;
    std::vector<ColoredLetter> window_;
};

// Composition of maps: (a o b)(j) = a(b(j)), with colors added mod m.
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b);
ColoredPermutation inverse(const ColoredPermutation& a);

// Left-to-right product f1 o f2 o ... o fk (the rightmost factor acts first).
// Empty products need the ambient (n, m).
ColoredPermutation product(const std::vector<ColoredPermutation>& factors, int n, int m);

// a^k; k may be negative.
ColoredPermutation power(const ColoredPermutation& a, long long k);

// s_i for i >= 1 swaps i and i+1; s_0 advances the color of letter 1.
// For m = 1, s_0 is the identity.
ColoredPermutation generator(int i, int n, int m);

// t_i = s_i s_{i-1} ... s_1 s_0 (left-to-right product as above).
// t_{n-1} maps j to j-1 for j != 1 and 1 to omega * n.
ColoredPermutation flag_coxeter_element(int i, int n, int m);

inline constexpr long long kDefaultGroupBudget = 10'000;

// |C_m wr S_n| = m^n * n!, or a budget_error if it exceeds the budget.
long long group_order_checked(int n, int m, long long budget = kDefaultGroupBudget);

// Visits every element exactly once, ordered by ascending canonical
// exponent vector (k_0,...,k_{n-1}) in lexicographic order (k_{n-1}
// varies fastest); see canonical.hpp for the factorization.
void for_each_element(int n, int m, long long budget,
                      const std::function<void(const ColoredPermutation&)>& fn);
std::vector<ColoredPermutation> enumerate_group(int n, int m,
                                                long long budget = kDefaultGroupBudget);

// Window text format: comma-separated "abs^color" tokens ("abs" alone means
// color 0).  For m = 2 the signed shorthand "-abs" is accepted on input and
// normalized to "abs^1".
std::string format_window(const ColoredPermutation& g);
ColoredPermutation parse_window(const std::string& text, int n, int m);

struct WindowHash {
    size_t operator()(const ColoredPermutation& g) const;
};

}  // namespace flagmajor
