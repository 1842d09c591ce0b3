#include "flagmajor/stats.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "flagmajor/canonical.hpp"
#include "flagmajor/errors.hpp"

namespace flagmajor {

bool letter_less(const ColoredLetter& a, const ColoredLetter& b) {
    if (a.color != b.color) return a.color > b.color;
    return a.abs < b.abs;
}

long long major_index(const ColoredPermutation& g) {
    long long sum = 0;
    for (int i = 1; i < g.n(); ++i)
        if (letter_less(g(i + 1), g(i))) sum += i;
    return sum;
}

long long log_sum(const ColoredPermutation& g) {
    long long sum = 0;
    for (int j = 1; j <= g.n(); ++j) sum += g(j).color;
    return sum;
}

long long flag_major_formula(const ColoredPermutation& g) {
    return static_cast<long long>(g.m()) * major_index(g) + log_sum(g);
}

LengthTable::LengthTable(int n, int m, long long budget, S0Steps steps) {
    const long long order = group_order_checked(n, m, budget);
    std::vector<ColoredPermutation> moves;
    for (int i = 0; i < n; ++i) moves.push_back(generator(i, n, m));
    if (steps == S0Steps::WithInverse && m > 2) moves.push_back(inverse(generator(0, n, m)));

    dist_.reserve(static_cast<size_t>(order));
    std::deque<ColoredPermutation> queue;
    queue.push_back(ColoredPermutation::identity(n, m));
    dist_.emplace(queue.back(), 0);
    while (!queue.empty()) {
        ColoredPermutation g = std::move(queue.front());
        queue.pop_front();
        const long long d = dist_.at(g);
        for (const auto& s : moves) {
            ColoredPermutation next = compose(g, s);
            if (dist_.emplace(next, d + 1).second) queue.push_back(std::move(next));
        }
    }
}

long long LengthTable::operator[](const ColoredPermutation& g) const {
    auto it = dist_.find(g);
    if (it == dist_.end()) throw std::invalid_argument("LengthTable: element not in table");
    return it->second;
}

long long length(const ColoredPermutation& g, long long budget, S0Steps steps) {
    return LengthTable(g.n(), g.m(), budget, steps)[g];
}

Statistic parse_statistic(const std::string& name) {
    if (name == "flag-major") return Statistic::FlagMajor;
    if (name == "major") return Statistic::Major;
    if (name == "length") return Statistic::Length;
    if (name == "log-sum") return Statistic::LogSum;
    throw std::invalid_argument("unknown statistic: " + name);
}

std::string statistic_name(Statistic stat) {
    switch (stat) {
        case Statistic::FlagMajor: return "flag-major";
        case Statistic::Major: return "major";
        case Statistic::Length: return "length";
        case Statistic::LogSum: return "log-sum";
    }
    throw std::logic_error("statistic_name: bad enum");
}

Distribution distribution(int n, int m, Statistic stat, long long budget, S0Steps steps) {
    Distribution d;
    if (stat == Statistic::Length) {
        LengthTable table(n, m, budget, steps);
        for (const auto& [g, len] : table.distances()) {
            ++d.counts[len];
            ++d.total;
        }
        return d;
    }
    for_each_element(n, m, budget, [&](const ColoredPermutation& g) {
        long long value = 0;
        switch (stat) {
            case Statistic::FlagMajor: value = flag_major(g); break;
            case Statistic::Major: value = major_index(g); break;
            case Statistic::LogSum: value = log_sum(g); break;
            case Statistic::Length: break;  // handled above
        }
        ++d.counts[value];
        ++d.total;
    });
    return d;
}

std::string to_json(const Distribution& d, int m, int n, Statistic stat) {
    std::ostringstream out;
    out << "{\"m\":" << m << ",\"n\":" << n << ",\"stat\":\"" << statistic_name(stat)
        << "\",\"distribution\":{";
    bool first = true;
    for (const auto& [value, count] : d.counts) {
        if (!first) out << ',';
        first = false;
        out << '"' << value << "\":" << count;
    }
    out << "},\"total\":" << d.total << '}';
    return out.str();
}

std::string to_csv(const Distribution& d) {
    std::ostringstream out;
    out << "value,count\n";
    for (const auto& [value, count] : d.counts) out << value << ',' << count << '\n';
    return out.str();
}

ColoredPermutation coset_rep(int n, int idx) {
    if (n < 1) throw std::invalid_argument("coset_rep: n must be >= 1");
    if (idx < 0 || idx >= 2 * n) throw std::invalid_argument("coset_rep: index out of range");
    const int m = 2;
    std::vector<ColoredPermutation> factors;
    if (idx == 0) return ColoredPermutation::identity(n, m);
    if (idx <= n) {
        for (int j = n - idx; j <= n - 1; ++j) factors.push_back(generator(j, n, m));
    } else {
        for (int j = idx - n; j >= 1; --j) factors.push_back(generator(j, n, m));
        for (int j = 0; j <= n - 1; ++j) factors.push_back(generator(j, n, m));
    }
    return product(factors, n, m);
}

ColoredPermutation phi(const ColoredPermutation& g) {
    if (g.m() != 2) throw std::invalid_argument("phi: defined for m = 2 only");
    const int n = g.n();
    // Peel coset representatives top-down: g = r_{size,c} * rest with rest
    // fixing the top letter, for a unique c in [0, 2*size).
    CanonicalWord word{2, std::vector<int>(static_cast<size_t>(n), 0)};
    ColoredPermutation cur = g;
    for (int i = n - 1; i >= 1; --i) {
        const int size = i + 1;
        int chosen = -1;
        for (int c = 0; c < 2 * size; ++c) {
            ColoredPermutation rest = compose(inverse(coset_rep(size, c)), cur);
            if (rest(size).abs == size && rest(size).color == 0) {
                chosen = c;
                std::vector<ColoredLetter> w(rest.window().begin(), rest.window().end() - 1);
                cur = {2, std::move(w)};
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("phi: no coset representative matched");
        word.exponents[static_cast<size_t>(i)] = chosen;
    }
    word.exponents[0] = cur(1).color;
    return recompose(word, n, 2);
}

}  // namespace flagmajor
