#include "flagmajor/partite.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagmajor/qseries.hpp"

namespace flagmajor {

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Visits all t-tuples with sum <= max_sum, optionally <=_lex bound, in
// ascending lexicographic order.
void visit_tuples(int t, long long max_sum, const std::vector<int>* bound,
                  std::vector<int>& scratch, int pos, bool tight,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == t) {
        fn(scratch);
        return;
    }
    const int limit_by_bound = tight ? (*bound)[static_cast<size_t>(pos)]
                                     : std::numeric_limits<int>::max();
    const long long limit = std::min<long long>(limit_by_bound, max_sum);
    for (int v = 0; v <= limit; ++v) {
        scratch[static_cast<size_t>(pos)] = v;
        visit_tuples(t, max_sum - v, bound, scratch, pos + 1,
                     tight && v == limit_by_bound, fn);
    }
    scratch[static_cast<size_t>(pos)] = 0;
}

void for_each_tuple(int t, long long max_sum, const std::vector<int>* lex_bound,
                    const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> scratch(static_cast<size_t>(t), 0);
    visit_tuples(t, max_sum, lex_bound, scratch, 0, lex_bound != nullptr, fn);
}

using Perm = std::vector<int>;  // one-line notation over 1..n

Perm perm_compose(const Perm& a, const Perm& b) {  // (a o b)(j) = a(b(j))
    Perm out(a.size());
    for (size_t j = 0; j < a.size(); ++j)
        out[j] = a[static_cast<size_t>(b[j]) - 1];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (size_t j = 0; j < a.size(); ++j) out[static_cast<size_t>(a[j]) - 1] = static_cast<int>(j) + 1;
    return out;
}

}  // namespace

bool is_t_partite(const ExponentMatrix& f) {
    for (int j = 0; j + 1 < f.cols(); ++j)
        if (lex_less(f.column(j), f.column(j + 1))) return false;
    return true;
}

std::vector<ExponentMatrix> enumerate_t_partite(int t, int n, long long max_total) {
    if (t < 1 || n < 0) throw std::invalid_argument("enumerate_t_partite: bad shape");
    std::vector<ExponentMatrix> out;
    ExponentMatrix f(t, n);
    std::vector<std::vector<int>> cols(static_cast<size_t>(n));

    std::function<void(int, long long)> fill = [&](int j, long long remaining) {
        if (j == n) {
            out.push_back(f);
            return;
        }
        const std::vector<int>* bound =
            j == 0 ? nullptr : &cols[static_cast<size_t>(j) - 1];
        for_each_tuple(t, remaining, bound, [&](const std::vector<int>& col) {
            cols[static_cast<size_t>(j)] = col;
            for (int i = 0; i < t; ++i) f.at(i, j) = col[static_cast<size_t>(i)];
            long long used = std::accumulate(col.begin(), col.end(), 0ll);
            fill(j + 1, remaining - used);
        });
    };
    fill(0, max_total);
    return out;
}

TruncatedSeries gg1_lhs(int t, int n, long long bound) {
    MultiPoly sum(t);
    for (const auto& f : enumerate_t_partite(t, n, bound)) {
        Exponents e(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i) e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(f.row_sum(i));
        sum.add_term(e, 1);
    }
    return {std::move(sum), bound};
}

TruncatedSeries gg1_rhs(int t, int n, long long bound) {
    if (t < 1 || n < 0) throw std::invalid_argument("gg1_rhs: bad shape");
    // Numerator: tuples (pi_1,...,pi_t) with pi_1 o ... o pi_t = identity;
    // the first t-1 factors are free.
    std::vector<Perm> all;
    Perm base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    Perm p = base;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto major_of = [](const Perm& q) { return word_major_index(q); };

    MultiPoly numerator(t);
    std::vector<size_t> idx(static_cast<size_t>(t) - 1, 0);
    for (;;) {
        Perm prod = base;
        Exponents e(static_cast<size_t>(t));
        for (size_t i = 0; i + 1 < static_cast<size_t>(t); ++i) {
            prod = perm_compose(prod, all[idx[i]]);
            e[i] = static_cast<std::uint32_t>(major_of(all[idx[i]]));
        }
        e[static_cast<size_t>(t) - 1] = static_cast<std::uint32_t>(major_of(perm_inverse(prod)));
        numerator.add_term(e, 1);
        // odometer
        size_t pos = idx.size();
        while (pos > 0) {
            if (++idx[pos - 1] < all.size()) break;
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    MultiPoly denominator = MultiPoly::constant(t, 1);
    for (int i = 0; i < t; ++i) {
        for (int j = 1; j <= n; ++j) {
            MultiPoly factor = MultiPoly::constant(t, 1);
            Exponents e(static_cast<size_t>(t), 0);
            e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(j);
            factor.add_term(e, -1);
            denominator = poly_mul(denominator, factor);
        }
    }
    return series_div({std::move(numerator), bound}, {std::move(denominator), bound});
}

long long word_major_index(const std::vector<int>& word) {
    long long sum = 0;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) sum += static_cast<long long>(i) + 1;
    return sum;
}

std::vector<std::vector<int>> shuffles(const std::vector<Block>& blocks) {
    std::set<int> support;
    size_t total = 0;
    for (const auto& b : blocks) {
        total += b.size();
        for (int letter : b)
            if (!support.insert(letter).second)
                throw std::invalid_argument("shuffles: blocks must have disjoint supports");
    }
    std::vector<std::vector<int>> out;
    std::vector<size_t> taken(blocks.size(), 0);
    std::vector<int> word;
    word.reserve(total);
    std::function<void()> step = [&]() {
        if (word.size() == total) {
            out.push_back(word);
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (taken[b] < blocks[b].size()) {
                word.push_back(blocks[b][taken[b]]);
                ++taken[b];
                step();
                --taken[b];
                word.pop_back();
            }
        }
    };
    step();
    return out;
}

std::pair<MultiPoly, MultiPoly> gg2_check(const std::vector<Block>& blocks) {
    MultiPoly shuffle_sum(1);
    for (const auto& word : shuffles(blocks))
        shuffle_sum.add_term({static_cast<std::uint32_t>(word_major_index(word))}, 1);

    int total = 0;
    std::vector<int> sizes;
    long long major_offset = 0;
    for (const auto& b : blocks) {
        total += static_cast<int>(b.size());
        sizes.push_back(static_cast<int>(b.size()));
        major_offset += word_major_index(b);
    }
    MultiPoly closed = poly_mul(
        q_multinomial(total, sizes),
        MultiPoly::monomial(1, {static_cast<std::uint32_t>(major_offset)}, 1));
    return {std::move(shuffle_sum), std::move(closed)};
}

std::vector<ResidueVector> residue_set(int m, int t) {
    if (m < 1 || t < 1) throw std::invalid_argument("residue_set: m and t must be >= 1");
    std::vector<ResidueVector> out;
    ResidueVector r(static_cast<size_t>(t), 0);
    std::function<void(int, int)> fill = [&](int pos, int sum) {
        if (pos == t - 1) {
            r[static_cast<size_t>(pos)] = (m - sum % m) % m;
            out.push_back(r);
            return;
        }
        for (int v = 0; v < m; ++v) {
            r[static_cast<size_t>(pos)] = v;
            fill(pos + 1, sum + v);
        }
    };
    fill(0, 0);
    std::sort(out.begin(), out.end(), [](const ResidueVector& a, const ResidueVector& b) {
        return b < a;  // descending lexicographic
    });
    return out;
}

std::pair<ExponentMatrix, ExponentMatrix> theta(const ExponentMatrix& f, int m) {
    if (m < 1) throw std::invalid_argument("theta: m must be >= 1");
    for (int j = 0; j < f.cols(); ++j) {
        long long colsum = 0;
        for (int i = 0; i < f.rows(); ++i) colsum += f.at(i, j);
        if (colsum % m != 0)
            throw std::domain_error("theta: column sums must be divisible by m");
    }
    ExponentMatrix h(f.rows(), f.cols());
    ExponentMatrix r(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            h.at(i, j) = f.at(i, j) / m;
            r.at(i, j) = f.at(i, j) % m;
        }
    }
    return {std::move(h), std::move(r)};
}

ExponentMatrix theta_inv(const ExponentMatrix& h, const ExponentMatrix& r, int m) {
    if (h.rows() != r.rows() || h.cols() != r.cols())
        throw std::invalid_argument("theta_inv: shape mismatch");
    ExponentMatrix f(h.rows(), h.cols());
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            const int rij = r.at(i, j);
            if (rij < 0 || rij >= m) throw std::invalid_argument("theta_inv: residue out of range");
            f.at(i, j) = m * h.at(i, j) + rij;
        }
    }
    return f;
}

bool is_dia_basis_exponent(const ExponentMatrix& f, int m) {
    for (int j = 0; j < f.cols(); ++j) {
        long long colsum = 0;
        for (int i = 0; i < f.rows(); ++i) colsum += f.at(i, j);
        if (colsum % m != 0) return false;
    }
    const auto [h, r] = theta(f, m);
    // Column keys (residue column, quotient column) must be weakly
    // decreasing lexicographically; the residue part dominates, which
    // matches the residue_set listing, and ties reduce to the t-partite
    // condition on the quotient columns.
    std::vector<int> prev, cur;
    for (int j = 0; j < f.cols(); ++j) {
        cur = r.column(j);
        const std::vector<int> hc = h.column(j);
        cur.insert(cur.end(), hc.begin(), hc.end());
        if (j > 0 && lex_less(prev, cur)) return false;
        prev = cur;
    }
    return true;
}

std::vector<ExponentMatrix> enumerate_basis(int m, int n, int t, long long max_total) {
    if (m < 1 || t < 1 || n < 0) throw std::invalid_argument("enumerate_basis: bad shape");
    std::vector<ResidueVector> residues = residue_set(m, t);
    std::sort(residues.begin(), residues.end());  // ascending for the candidate scan

    std::vector<ExponentMatrix> out;
    ExponentMatrix f(t, n);
    std::vector<std::vector<int>> keys(static_cast<size_t>(n));

    std::function<void(int, long long)> fill = [&](int j, long long remaining) {
        if (j == n) {
            out.push_back(f);
            return;
        }
        for (const auto& r : residues) {
            long long rsum = std::accumulate(r.begin(), r.end(), 0ll);
            if (rsum > remaining) continue;
            const long long hbudget = (remaining - rsum) / m;
            for_each_tuple(t, hbudget, nullptr, [&](const std::vector<int>& h) {
                std::vector<int> key = r;
                key.insert(key.end(), h.begin(), h.end());
                if (j > 0 && lex_less(keys[static_cast<size_t>(j) - 1], key)) return;
                long long used = rsum;
                for (int i = 0; i < t; ++i) {
                    f.at(i, j) = m * h[static_cast<size_t>(i)] + r[static_cast<size_t>(i)];
                    used += static_cast<long long>(m) * h[static_cast<size_t>(i)];
                }
                keys[static_cast<size_t>(j)] = std::move(key);
                fill(j + 1, remaining - used);
            });
        }
    };
    fill(0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flagmajor
