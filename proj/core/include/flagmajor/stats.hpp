#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagmajor/colored_permutation.hpp"

namespace flagmajor {

// Alphabet order  1*w^{m-1} < ... < n*w^{m-1} < ... < 1*w^0 < ... < n*w^0:
// higher color sorts lower, ties break by abs value.
bool letter_less(const ColoredLetter& a, const ColoredLetter& b);

// Sum of the (1-based) positions i < n with window[i] > window[i+1] in the
// alphabet order above.
long long major_index(const ColoredPermutation& g);

// Sum of the colors across the window.
long long log_sum(const ColoredPermutation& g);

// m * major_index + log_sum; agrees with the canonical flag-major index.
long long flag_major_formula(const ColoredPermutation& g);

// Steps used for Cayley-graph length.  s_0 has order m, so for m > 2 a word
// may or may not be allowed to use s_0^{-1}; both readings are provided and
// they agree for m <= 2.
enum class S0Steps { WithInverse, Single };

// Distances from the identity in the Cayley graph over {s_0,...,s_{n-1}}
// (plus s_0^{-1} in WithInverse mode).  Built once by BFS over the whole
// group; memory is one table entry per element within the budget.
class LengthTable {
public:
    LengthTable(int n, int m, long long budget = kDefaultGroupBudget,
                S0Steps steps = S0Steps::WithInverse);

    long long operator[](const ColoredPermutation& g) const;
    const std::unordered_map<ColoredPermutation, long long, WindowHash>& distances() const {
        return dist_;
    }

private:
    std::unordered_map<ColoredPermutation, long long, WindowHash> dist_;
};

long long length(const ColoredPermutation& g, long long budget = kDefaultGroupBudget,
                 S0Steps steps = S0Steps::WithInverse);

struct Distribution {
    std::map<long long, long long> counts;
    long long total = 0;
    friend bool operator==(const Distribution&, const Distribution&) = default;
};

enum class Statistic { FlagMajor, Major, Length, LogSum };

// Accepts "flag-major", "major", "length", "log-sum".
Statistic parse_statistic(const std::string& name);
std::string statistic_name(Statistic stat);

Distribution distribution(int n, int m, Statistic stat,
                          long long budget = kDefaultGroupBudget,
                          S0Steps steps = S0Steps::WithInverse);

// {"m":..,"n":..,"stat":..,"distribution":{..},"total":..} with the
// distribution keys in ascending numeric order.
std::string to_json(const Distribution& d, int m, int n, Statistic stat);
// "value,count" rows in ascending value order, after a header line.
std::string to_csv(const Distribution& d);

// Minimal-length representatives of the left cosets of B_{n-1} in B_n
// (m = 2 only); length(coset_rep(n, idx)) == idx for 0 <= idx < 2n.
ColoredPermutation coset_rep(int n, int idx);

// The bijection of B_n (m = 2 only) obtained by replacing each coset
// representative in the unique factorization g = r_{n,c_n} ... r_{1,c_1}
// with the matching power of a flag Coxeter element:
// phi(g) = t_{n-1}^{c_n} ... t_0^{c_1}.  Sends length to flag-major.
ColoredPermutation phi(const ColoredPermutation& g);

}  // namespace flagmajor
