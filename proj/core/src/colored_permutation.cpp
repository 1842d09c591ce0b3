#include "flagmajor/colored_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "flagmajor/errors.hpp"

namespace flagmajor {

ColoredPermutation::ColoredPermutation(int m, std::vector<ColoredLetter> window)
    : m_(m), window_(std::move(window)) {
    if (m_ < 1) throw std::invalid_argument("ColoredPermutation: m must be >= 1");
    const int n = static_cast<int>(window_.size());
    if (n < 1) throw std::invalid_argument("ColoredPermutation: n must be >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& letter : window_) {
        if (letter.abs < 1 || letter.abs > n)
            throw std::invalid_argument("ColoredPermutation: abs value out of range");
        if (letter.color < 0 || letter.color >= m_)
            throw std::invalid_argument("ColoredPermutation: color out of range");
        if (seen[static_cast<size_t>(letter.abs) - 1])
            throw std::invalid_argument("ColoredPermutation: abs values are not a permutation");
        seen[static_cast<size_t>(letter.abs) - 1] = 1;
    }
}

ColoredPermutation ColoredPermutation::identity(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("identity: n and m must be >= 1");
    std::vector<ColoredLetter> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) w[static_cast<size_t>(j) - 1] = {j, 0};
    return {m, std::move(w)};
}

ColoredLetter ColoredPermutation::apply(ColoredLetter x) const {
    const ColoredLetter& image = (*this)(x.abs);
    return {image.abs, (image.color + x.color) % m_};
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.m() != b.m() || a.n() != b.n())
        throw std::invalid_argument("compose: mismatched (m, n)");
    std::vector<ColoredLetter> w(static_cast<size_t>(a.n()));
    for (int j = 1; j <= a.n(); ++j) w[static_cast<size_t>(j) - 1] = a.apply(b(j));
    return {a.m(), std::move(w)};
}

ColoredPermutation inverse(const ColoredPermutation& a) {
    std::vector<ColoredLetter> w(static_cast<size_t>(a.n()));
    for (int j = 1; j <= a.n(); ++j) {
        const ColoredLetter& image = a(j);
        w[static_cast<size_t>(image.abs) - 1] = {j, (a.m() - image.color) % a.m()};
    }
    return {a.m(), std::move(w)};
}

ColoredPermutation product(const std::vector<ColoredPermutation>& factors, int n, int m) {
    ColoredPermutation acc = ColoredPermutation::identity(n, m);
    for (const auto& f : factors) acc = compose(acc, f);
    return acc;
}

ColoredPermutation power(const ColoredPermutation& a, long long k) {
    ColoredPermutation base = k >= 0 ? a : inverse(a);
    long long e = k >= 0 ? k : -k;
    ColoredPermutation acc = ColoredPermutation::identity(a.n(), a.m());
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

ColoredPermutation generator(int i, int n, int m) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("generator: index out of range");
    std::vector<ColoredLetter> w(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) w[static_cast<size_t>(j) - 1] = {j, 0};
    if (i == 0) {
        w[0] = {1, 1 % m};
    } else {
        std::swap(w[static_cast<size_t>(i) - 1].abs, w[static_cast<size_t>(i)].abs);
    }
    return {m, std::move(w)};
}

ColoredPermutation flag_coxeter_element(int i, int n, int m) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("flag_coxeter_element: index out of range");
    ColoredPermutation acc = generator(i, n, m);
    for (int j = i - 1; j >= 0; --j) acc = compose(acc, generator(j, n, m));
    return acc;
}

long long group_order_checked(int n, int m, long long budget) {
    if (n < 1 || m < 1) throw std::invalid_argument("group order: n and m must be >= 1");
    long long order = 1;
    for (int i = 1; i <= n; ++i) {
        order *= m;
        if (order > budget) throw budget_error("group size exceeds enumeration budget");
        order *= i;
        if (order > budget) throw budget_error("group size exceeds enumeration budget");
    }
    return order;
}

void for_each_element(int n, int m, long long budget,
                      const std::function<void(const ColoredPermutation&)>& fn) {
    group_order_checked(n, m, budget);
    // Powers of each flag Coxeter element: pow[i][k] = t_i^k for k < m(i+1).
    std::vector<std::vector<ColoredPermutation>> pow(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const ColoredPermutation t = flag_coxeter_element(i, n, m);
        auto& powers = pow[static_cast<size_t>(i)];
        powers.push_back(ColoredPermutation::identity(n, m));
        for (int k = 1; k < m * (i + 1); ++k) powers.push_back(compose(powers.back(), t));
    }
    std::vector<int> exp(static_cast<size_t>(n), 0);
    for (;;) {
        ColoredPermutation g = pow[static_cast<size_t>(n) - 1][static_cast<size_t>(exp[static_cast<size_t>(n) - 1])];
        for (int i = n - 2; i >= 0; --i)
            g = compose(g, pow[static_cast<size_t>(i)][static_cast<size_t>(exp[static_cast<size_t>(i)])]);
        fn(g);
        // Odometer over (k_0,...,k_{n-1}) in lexicographic order: the last
        // coordinate is incremented first.
        int pos = n - 1;
        while (pos >= 0) {
            if (++exp[static_cast<size_t>(pos)] < m * (pos + 1)) break;
            exp[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

std::vector<ColoredPermutation> enumerate_group(int n, int m, long long budget) {
    std::vector<ColoredPermutation> out;
    out.reserve(static_cast<size_t>(group_order_checked(n, m, budget)));
    for_each_element(n, m, budget, [&](const ColoredPermutation& g) { out.push_back(g); });
    return out;
}

std::string format_window(const ColoredPermutation& g) {
    std::string out;
    for (int j = 1; j <= g.n(); ++j) {
        if (j > 1) out += ',';
        out += std::to_string(g(j).abs);
        out += '^';
        out += std::to_string(g(j).color);
    }
    return out;
}

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("parse_window: bad ") + what);
    return value;
}

}  // namespace

ColoredPermutation parse_window(const std::string& text, int n, int m) {
    std::vector<ColoredLetter> w;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string_view token(text.data() + start, end - start);
        // trim spaces
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) throw std::invalid_argument("parse_window: empty token");
        bool negative = false;
        if (token.front() == '-') {
            if (m != 2)
                throw std::invalid_argument("parse_window: signed shorthand requires m = 2");
            negative = true;
            token.remove_prefix(1);
        }
        int abs = 0;
        int color = negative ? 1 : 0;
        if (size_t caret = token.find('^'); caret != std::string_view::npos) {
            if (negative)
                throw std::invalid_argument("parse_window: sign and explicit color conflict");
            abs = parse_int(token.substr(0, caret), "abs value");
            color = parse_int(token.substr(caret + 1), "color");
        } else {
            abs = parse_int(token, "abs value");
        }
        w.push_back({abs, color});
        start = end + 1;
        if (end == text.size()) break;
    }
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("parse_window: wrong number of letters");
    return {m, std::move(w)};
}

size_t WindowHash::operator()(const ColoredPermutation& g) const {
    // FNV-1a over the window entries.
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<size_t>(g.m()));
    for (const auto& letter : g.window()) {
        mix(static_cast<size_t>(letter.abs));
        mix(static_cast<size_t>(letter.color));
    }
    return h;
}

}  // namespace flagmajor
