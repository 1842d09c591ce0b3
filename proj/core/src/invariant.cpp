#include "flagmajor/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "flagmajor/canonical.hpp"
#include "flagmajor/errors.hpp"

namespace flagmajor {

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FLAGMAJOR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace

bool is_F0(const ExponentMatrix& f, int m) {
    if (m < 1) throw std::invalid_argument("is_F0: m must be >= 1");
    for (int j = 0; j < f.cols(); ++j) {
        long long colsum = 0;
        for (int i = 0; i < f.rows(); ++i) colsum += f.at(i, j);
        if (colsum % m != 0) return false;
    }
    return true;
}

ActResult act_slot(const ColoredPermutation& g, const ExponentMatrix& f, int slot) {
    if (g.n() != f.cols()) throw std::invalid_argument("act_slot: dimension mismatch");
    if (slot < 1 || slot > f.rows()) throw std::invalid_argument("act_slot: slot out of range");
    ExponentMatrix image = f;
    long long phase = 0;
    const int i = slot - 1;
    for (int j = 1; j <= g.n(); ++j) {
        const ColoredLetter& letter = g(j);
        image.at(i, letter.abs - 1) = f.at(i, j - 1);
        phase += static_cast<long long>(letter.color) * f.at(i, j - 1);
    }
    return {std::move(image), static_cast<int>(phase % g.m())};
}

ActResult act_diagonal(const ColoredPermutation& g, const ExponentMatrix& f) {
    if (g.n() != f.cols()) throw std::invalid_argument("act_diagonal: dimension mismatch");
    ExponentMatrix image = f;
    long long phase = 0;
    for (int j = 1; j <= g.n(); ++j) {
        const ColoredLetter& letter = g(j);
        for (int i = 0; i < f.rows(); ++i) {
            image.at(i, letter.abs - 1) = f.at(i, j - 1);
            phase += static_cast<long long>(letter.color) * f.at(i, j - 1);
        }
    }
    return {std::move(image), static_cast<int>(phase % g.m())};
}

TensorMonomialSum project(const ExponentMatrix& f, int m, long long budget) {
    TensorMonomialSum sum;
    for_each_element(f.cols(), m, budget, [&](const ColoredPermutation& g) {
        ActResult res = act_diagonal(g, f);
        auto [it, inserted] = sum.try_emplace(std::move(res.image), m);
        it->second.add_root_power(res.phase);
    });
    for (auto it = sum.begin(); it != sum.end();) {
        if (it->second.is_zero())
            it = sum.erase(it);
        else
            ++it;
    }
    return sum;
}

Claim51Report claim51_check(int m, int n, int t, int cap, long long budget) {
    if (cap < 1) throw std::invalid_argument("claim51_check: cap must be >= 1");
    Claim51Report report;
    ExponentMatrix f(t, n);
    const int cells = t * n;
    for (;;) {
        const bool nonzero = !project(f, m, budget).empty();
        ++report.checked;
        if (nonzero != is_F0(f, m)) report.violations.push_back(f);
        int pos = cells - 1;
        while (pos >= 0) {
            int& v = f.at(pos / n, pos % n);
            if (++v < cap) break;
            v = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return report;
}

Claim52Result claim52_equiv(const ExponentMatrix& f, const ExponentMatrix& h, int m,
                            long long budget) {
    if (!is_F0(f, m) || !is_F0(h, m))
        throw std::invalid_argument("claim52_equiv: both exponents must lie in F_0");
    const TensorMonomialSum pf = project(f, m, budget);
    const TensorMonomialSum ph = project(h, m, budget);

    Claim52Result result;
    for (const auto& [e, c] : pf) {
        if (ph.count(e)) {
            result.support_overlap = true;
            break;
        }
    }
    result.projection_equal = pf == ph;

    // Condition (iii): h's columns are a permutation of f's columns.
    std::vector<std::vector<int>> cf, ch;
    for (int j = 0; j < f.cols(); ++j) cf.push_back(f.column(j));
    for (int j = 0; j < h.cols(); ++j) ch.push_back(h.column(j));
    std::sort(cf.begin(), cf.end());
    std::sort(ch.begin(), ch.end());
    result.column_permuted = f.rows() == h.rows() && cf == ch;
    return result;
}

TruncatedSeries hilbert_tia(int m, int n, int t, long long bound) {
    MultiPoly denominator = MultiPoly::constant(t, 1);
    for (int i = 0; i < t; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (static_cast<long long>(m) * j > bound) continue;  // factor is 1 up to the bound
            MultiPoly factor = MultiPoly::constant(t, 1);
            Exponents e(static_cast<size_t>(t), 0);
            e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(m * j);
            factor.add_term(e, -1);
            denominator = poly_mul(denominator, factor);
        }
    }
    return series_div(series_one(t, bound), {std::move(denominator), bound});
}

TruncatedSeries hilbert_dia(int m, int n, int t, long long bound) {
    MultiPoly sum(t);
    for (const auto& f : enumerate_basis(m, n, t, bound)) {
        Exponents e(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i)
            e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(f.row_sum(i));
        sum.add_term(e, 1);
    }
    return {std::move(sum), bound};
}

TruncatedSeries hilbert_dia_by_residue_classes(int m, int n, int t, long long bound) {
    const std::vector<ResidueVector> residues = residue_set(m, t);

    // t-partite generating function with k parts, in the variables q_i^m.
    auto partite_gf_scaled = [&](int k) {
        MultiPoly sum(t);
        for (const auto& f : enumerate_t_partite(t, k, bound / m)) {
            Exponents e(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i)
                e[static_cast<size_t>(i)] =
                    static_cast<std::uint32_t>(m * f.row_sum(i));
            sum.add_term(e, 1);
        }
        return TruncatedSeries{std::move(sum), bound};
    };
    std::vector<TruncatedSeries> partite_gf;
    for (int k = 0; k <= n; ++k) partite_gf.push_back(partite_gf_scaled(k));

    MultiPoly total(t);
    std::vector<int> split(residues.size(), 0);
    std::function<void(size_t, int)> assign = [&](size_t pos, int remaining) {
        if (pos + 1 == split.size()) {
            split[pos] = remaining;
            TruncatedSeries term = series_one(t, bound);
            Exponents prefix(static_cast<size_t>(t), 0);
            for (size_t ri = 0; ri < residues.size(); ++ri) {
                for (int i = 0; i < t; ++i)
                    prefix[static_cast<size_t>(i)] += static_cast<std::uint32_t>(
                        residues[ri][static_cast<size_t>(i)] * split[ri]);
                term = series_mul(term, partite_gf[static_cast<size_t>(split[ri])]);
            }
            term = series_mul(term, {MultiPoly::monomial(t, prefix, 1), bound});
            total = poly_add(total, term.poly);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            split[pos] = k;
            assign(pos + 1, remaining - k);
        }
    };
    assign(0, n);
    return {std::move(total), bound};
}

MultiPoly rhs_theorem41(int m, int n, int t, ProductOrder order, long long tuple_budget,
                        long long group_budget, unsigned threads) {
    const std::vector<ColoredPermutation> elements = enumerate_group(n, m, group_budget);
    const size_t size = elements.size();

    long long tuples = 1;
    for (int i = 0; i + 1 < t; ++i) {
        tuples *= static_cast<long long>(size);
        if (tuples > tuple_budget) throw budget_error("tuple count exceeds budget");
    }

    std::vector<long long> fm(size);
    for (size_t i = 0; i < size; ++i) fm[i] = flag_major(elements[i]);

    // The outer index of the free (t-1)-fold product is split across
    // workers; each accumulates a local polynomial.
    const unsigned workers =
        std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<size_t>(size, 1)));

    auto run_range = [&](size_t lo, size_t hi, MultiPoly& local) {
        std::vector<size_t> idx(static_cast<size_t>(t > 0 ? t - 1 : 0), 0);
        Exponents e(static_cast<size_t>(t));
        for (size_t first = lo; first < hi; ++first) {
            if (!idx.empty()) idx[0] = first;
            for (;;) {
                ColoredPermutation prod = ColoredPermutation::identity(n, m);
                for (size_t i = 0; i < idx.size(); ++i) {
                    const ColoredPermutation& next = elements[idx[i]];
                    prod = order == ProductOrder::LeftToRight ? compose(prod, next)
                                                              : compose(next, prod);
                    e[i] = static_cast<std::uint32_t>(fm[idx[i]]);
                }
                e[static_cast<size_t>(t) - 1] =
                    static_cast<std::uint32_t>(flag_major(inverse(prod)));
                local.add_term(e, 1);
                // odometer over idx[1..], the first coordinate is fixed
                size_t pos = idx.size();
                while (pos > 1) {
                    if (++idx[pos - 1] < size) break;
                    idx[pos - 1] = 0;
                    --pos;
                }
                if (pos <= 1) break;
            }
            if (idx.empty()) break;  // t == 1: a single tuple
        }
    };

    if (t == 1 || workers == 1 || size == 0) {
        MultiPoly sum(t);
        run_range(0, t == 1 ? 1 : size, sum);
        return sum;
    }

    std::vector<MultiPoly> partial(workers, MultiPoly(t));
    std::vector<std::thread> pool;
    const size_t chunk = (size + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t lo = std::min(static_cast<size_t>(w) * chunk, size);
        const size_t hi = std::min(lo + chunk, size);
        pool.emplace_back(run_range, lo, hi, std::ref(partial[w]));
    }
    for (auto& th : pool) th.join();
    MultiPoly sum(t);
    for (const auto& p : partial) sum = poly_add(sum, p);
    return sum;
}

namespace {

size_t residue_index(const std::vector<ResidueVector>& residues, const ResidueVector& r) {
    const auto it = std::find(residues.begin(), residues.end(), r);
    if (it == residues.end())
        throw std::invalid_argument("tuple bijection: residue column not in residue set");
    return static_cast<size_t>(it - residues.begin());
}

}  // namespace

TupleData tuple_to_data(const std::vector<ColoredPermutation>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("tuple_to_data: empty tuple");
    const int m = tuple.front().m();
    const int n = tuple.front().n();
    const int t = static_cast<int>(tuple.size());
    for (const auto& g : tuple)
        if (g.m() != m || g.n() != n)
            throw std::invalid_argument("tuple_to_data: mixed (m, n)");

    // Product constraint: pi_t o ... o pi_1 = identity (pi_1 acts first).
    ColoredPermutation check = tuple.front();
    for (int i = 1; i < t; ++i) check = compose(tuple[static_cast<size_t>(i)], check);
    if (check != ColoredPermutation::identity(n, m))
        throw std::invalid_argument("tuple_to_data: tuple product is not the identity");

    // Prefix products P_i = pi_i o ... o pi_1; P_0 = identity.
    std::vector<ColoredPermutation> prefix{ColoredPermutation::identity(n, m)};
    for (int i = 0; i < t; ++i) prefix.push_back(compose(tuple[static_cast<size_t>(i)], prefix.back()));

    const std::vector<ResidueVector> residues = residue_set(m, t);
    TupleData data;
    data.m = m;
    data.n = n;
    data.t = t;
    data.sizes.assign(residues.size(), 0);
    data.classes.assign(static_cast<size_t>(t),
                        std::vector<std::vector<int>>(residues.size()));
    data.maps.assign(static_cast<size_t>(t), std::vector<std::map<int, int>>(residues.size()));

    for (int j = 1; j <= n; ++j) {
        ResidueVector r(static_cast<size_t>(t));
        for (int i = 1; i <= t; ++i) {
            const int carried = prefix[static_cast<size_t>(i) - 1](j).abs;
            r[static_cast<size_t>(i) - 1] = tuple[static_cast<size_t>(i) - 1](carried).color;
        }
        const size_t ri = residue_index(residues, r);
        ++data.sizes[ri];
        for (int i = 1; i <= t; ++i) {
            const int member = prefix[static_cast<size_t>(i) - 1](j).abs;
            data.classes[static_cast<size_t>(i) - 1][ri].push_back(member);
            data.maps[static_cast<size_t>(i) - 1][ri][member] =
                tuple[static_cast<size_t>(i) - 1](member).abs;
        }
    }
    for (auto& per_slot : data.classes)
        for (auto& members : per_slot) std::sort(members.begin(), members.end());
    return data;
}

std::vector<ColoredPermutation> data_to_tuple(const TupleData& data) {
    const int m = data.m;
    const int n = data.n;
    const int t = data.t;
    const std::vector<ResidueVector> residues = residue_set(m, t);
    if (data.sizes.size() != residues.size() ||
        data.classes.size() != static_cast<size_t>(t) ||
        data.maps.size() != static_cast<size_t>(t))
        throw std::invalid_argument("data_to_tuple: malformed data");
    if (std::accumulate(data.sizes.begin(), data.sizes.end(), 0ll) != n)
        throw std::invalid_argument("data_to_tuple: sizes must sum to n");

    std::vector<ColoredPermutation> tuple;
    for (int i = 0; i < t; ++i) {
        std::vector<ColoredLetter> window(static_cast<size_t>(n), ColoredLetter{0, 0});
        for (size_t ri = 0; ri < residues.size(); ++ri) {
            const auto& members = data.classes[static_cast<size_t>(i)][ri];
            if (static_cast<long long>(members.size()) != data.sizes[ri])
                throw std::invalid_argument("data_to_tuple: class size mismatch");
            const auto& map = data.maps[static_cast<size_t>(i)][ri];
            const auto& next_class = data.classes[static_cast<size_t>((i + 1) % t)][ri];
            const int color = residues[ri][static_cast<size_t>(i)];
            for (int a : members) {
                const auto it = map.find(a);
                if (it == map.end())
                    throw std::invalid_argument("data_to_tuple: map does not cover its class");
                if (!std::binary_search(next_class.begin(), next_class.end(), it->second))
                    throw std::invalid_argument(
                        "data_to_tuple: map leaves the matching class of the next slot");
                if (a < 1 || a > n || window[static_cast<size_t>(a) - 1].abs != 0)
                    throw std::invalid_argument("data_to_tuple: classes do not partition {1..n}");
                window[static_cast<size_t>(a) - 1] = {it->second, color};
            }
        }
        tuple.emplace_back(m, std::move(window));
    }

    // The construction must reproduce a tuple with identity product; the
    // class chain condition is validated by this check.
    ColoredPermutation check = tuple.front();
    for (int i = 1; i < t; ++i) check = compose(tuple[static_cast<size_t>(i)], check);
    if (check != ColoredPermutation::identity(n, m))
        throw std::invalid_argument("data_to_tuple: class maps have nontrivial monodromy");
    return tuple;
}

}  // namespace flagmajor
