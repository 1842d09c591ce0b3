#include "flagmajor/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <unordered_set>

#include "flagmajor/canonical.hpp"
#include "flagmajor/errors.hpp"
#include "flagmajor/qseries.hpp"
#include "flagmajor/stats.hpp"

namespace flagmajor {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

VerificationReport finish(std::string check, std::map<std::string, long long> params,
                          bool pass, std::string counterexample, const Timer& timer) {
    VerificationReport report;
    report.check = std::move(check);
    report.params = std::move(params);
    report.pass = pass;
    report.counterexample = pass ? std::string{} : std::move(counterexample);
    report.wall_ms = timer.ms();
    return report;
}

json distribution_json(const Distribution& d) {
    json obj = json::object();
    for (const auto& [value, count] : d.counts) obj[std::to_string(value)] = count;
    return obj;
}

json matrix_json(const ExponentMatrix& f) {
    json rows = json::array();
    for (int i = 0; i < f.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < f.cols(); ++j) row.push_back(f.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
    json j;
    j["check"] = report.check;
    j["params"] = report.params;
    j["status"] = report.pass ? "pass" : "fail";
    j["counterexample"] =
        report.counterexample.empty() ? json(nullptr) : json::parse(report.counterexample);
    j["wall_time_ms"] = report.wall_ms;
    return j.dump();
}

VerificationReport verify_claim_2_1(int max_n, long long budget) {
    Timer timer;
    std::string cex;
    bool pass = true;
    for (int n = 1; n <= max_n && pass; ++n) {
        for_each_element(n, 1, budget, [&](const ColoredPermutation& g) {
            if (!pass) return;
            const long long fm = flag_major(g);
            const long long major = major_index(g);
            if (fm != major) {
                pass = false;
                cex = json{{"n", n},
                           {"window", format_window(g)},
                           {"flag_major", fm},
                           {"major", major}}
                          .dump();
            }
        });
    }
    return finish("claim-2.1", {{"n", max_n}}, pass, std::move(cex), timer);
}

VerificationReport verify_thm_2_2(int n, long long budget) {
    Timer timer;
    const Distribution fm = distribution(n, 2, Statistic::FlagMajor, budget);
    const Distribution len = distribution(n, 2, Statistic::Length, budget);
    const bool pass = fm == len;
    std::string cex;
    if (!pass)
        cex = json{{"flag_major_distribution", distribution_json(fm)},
                   {"length_distribution", distribution_json(len)}}
                  .dump();
    return finish("thm-2.2", {{"m", 2}, {"n", n}}, pass, std::move(cex), timer);
}

VerificationReport verify_thm_2_2_negative(int m, int n, long long budget) {
    Timer timer;
    const Distribution fm = distribution(n, m, Statistic::FlagMajor, budget);
    const Distribution len = distribution(n, m, Statistic::Length, budget);
    const bool pass = !(fm == len);
    std::string cex;
    if (!pass)
        cex = json{{"note", "distributions unexpectedly coincide"},
                   {"distribution", distribution_json(fm)}}
                  .dump();
    return finish("thm-2.2-negative", {{"m", m}, {"n", n}}, pass, std::move(cex), timer);
}

VerificationReport verify_phi_2_2(int max_n, long long budget) {
    Timer timer;
    std::string cex;
    bool pass = true;
    for (int n = 1; n <= max_n && pass; ++n) {
        const LengthTable lengths(n, 2, budget);
        std::unordered_set<ColoredPermutation, WindowHash> images;
        for_each_element(n, 2, budget, [&](const ColoredPermutation& g) {
            if (!pass) return;
            const ColoredPermutation image = phi(g);
            if (!images.insert(image).second) {
                pass = false;
                cex = json{{"n", n},
                           {"window", format_window(g)},
                           {"note", "phi image repeated"},
                           {"image", format_window(image)}}
                          .dump();
                return;
            }
            const long long len = lengths[g];
            const long long fm = flag_major(image);
            if (len != fm) {
                pass = false;
                cex = json{{"n", n},
                           {"window", format_window(g)},
                           {"length", len},
                           {"flag_major_of_image", fm}}
                          .dump();
            }
        });
    }
    return finish("phi-2.2", {{"m", 2}, {"n", max_n}}, pass, std::move(cex), timer);
}

VerificationReport verify_thm_3_1(int m, int n, long long budget) {
    Timer timer;
    std::string cex;
    bool pass = true;
    for_each_element(n, m, budget, [&](const ColoredPermutation& g) {
        if (!pass) return;
        const long long canonical = flag_major(g);
        const long long formula = flag_major_formula(g);
        if (canonical != formula) {
            pass = false;
            cex = json{{"window", format_window(g)},
                       {"flag_major", canonical},
                       {"formula", formula}}
                      .dump();
        }
    });
    return finish("thm-3.1", {{"m", m}, {"n", n}}, pass, std::move(cex), timer);
}

VerificationReport verify_lemma_3_2(int m, int n, long long budget) {
    Timer timer;
    std::string cex;
    bool pass = true;
    const ColoredPermutation top = flag_coxeter_element(n - 1, n, m);
    for_each_element(n, m, budget, [&](const ColoredPermutation& g) {
        if (!pass) return;
        const ColoredLetter last = g(n);
        if (last.abs == 1 && last.color == m - 1) return;  // ineligible
        const long long before = flag_major_formula(g);
        const long long after = flag_major_formula(compose(top, g));
        if (after - before != 1) {
            pass = false;
            cex = json{{"window", format_window(g)},
                       {"formula", before},
                       {"formula_after_top_factor", after}}
                      .dump();
        }
    });
    return finish("lemma-3.2", {{"m", m}, {"n", n}}, pass, std::move(cex), timer);
}

VerificationReport verify_thm_4_1(int m, int n, int t, long long bound,
                                  long long tuple_budget, long long group_budget) {
    Timer timer;
    const TruncatedSeries dia = hilbert_dia(m, n, t, bound);
    const TruncatedSeries tia = hilbert_tia(m, n, t, bound);
    const TruncatedSeries ratio = series_div(dia, tia);
    const MultiPoly lhs_rhs = rhs_theorem41(m, n, t, ProductOrder::LeftToRight,
                                            tuple_budget, group_budget);
    const MultiPoly rhs_rhs = rhs_theorem41(m, n, t, ProductOrder::RightToLeft,
                                            tuple_budget, group_budget);
    const MultiPoly left = truncate(lhs_rhs, bound);
    const MultiPoly right = truncate(rhs_rhs, bound);

    std::string cex;
    bool pass = true;
    if (left != right) {
        pass = false;
        cex = json{{"note", "the two product-order conventions disagree"},
                   {"left_to_right", json::parse(to_json(lhs_rhs))},
                   {"right_to_left", json::parse(to_json(rhs_rhs))}}
                  .dump();
    } else if (ratio.poly != left) {
        pass = false;
        cex = json{{"note", "series ratio differs from the tuple sum"},
                   {"ratio", json::parse(to_json(ratio))},
                   {"tuple_sum", json::parse(to_json(left))}}
                  .dump();
    }
    return finish("thm-4.1", {{"m", m}, {"n", n}, {"t", t}, {"d", bound}}, pass,
                  std::move(cex), timer);
}

VerificationReport verify_gg1(int t, int n, long long bound) {
    Timer timer;
    const TruncatedSeries lhs = gg1_lhs(t, n, bound);
    const TruncatedSeries rhs = gg1_rhs(t, n, bound);
    const bool pass = lhs == rhs;
    std::string cex;
    if (!pass)
        cex = json{{"enumeration", json::parse(to_json(lhs))},
                   {"closed_form", json::parse(to_json(rhs))}}
                  .dump();
    return finish("gg1", {{"t", t}, {"n", n}, {"d", bound}}, pass, std::move(cex), timer);
}

namespace {

// Visits every way to order the given block contents, one block at a time.
void visit_orderings(std::vector<Block>& blocks, size_t pos,
                     const std::function<void(const std::vector<Block>&)>& fn) {
    if (pos == blocks.size()) {
        fn(blocks);
        return;
    }
    Block& block = blocks[pos];
    std::sort(block.begin(), block.end());
    do {
        visit_orderings(blocks, pos + 1, fn);
    } while (std::next_permutation(block.begin(), block.end()));
}

bool gg2_case_holds(const std::vector<Block>& blocks, std::string* cex) {
    const auto [shuffle_sum, closed] = gg2_check(blocks);
    if (shuffle_sum == closed) return true;
    json jb = json::array();
    for (const auto& b : blocks) jb.push_back(b);
    *cex = json{{"blocks", jb},
                {"shuffle_sum", json::parse(to_json(shuffle_sum))},
                {"closed_form", json::parse(to_json(closed))}}
               .dump();
    return false;
}

bool gg2_sweep(int total, int nblocks, std::string* cex) {
    // Assign each letter to one of nblocks blocks, then try every ordering.
    std::vector<int> assign(static_cast<size_t>(total), 0);
    for (;;) {
        std::vector<Block> blocks(static_cast<size_t>(nblocks));
        for (int letter = 1; letter <= total; ++letter)
            blocks[static_cast<size_t>(assign[static_cast<size_t>(letter) - 1])].push_back(letter);
        bool ok = true;
        visit_orderings(blocks, 0, [&](const std::vector<Block>& arranged) {
            if (ok && !gg2_case_holds(arranged, cex)) ok = false;
        });
        if (!ok) return false;
        int pos = total - 1;
        while (pos >= 0) {
            if (++assign[static_cast<size_t>(pos)] < nblocks) break;
            assign[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return true;
}

}  // namespace

VerificationReport verify_gg2(int max_pair_total, int max_triple_total) {
    Timer timer;
    std::string cex;
    bool pass = true;
    for (int total = 1; total <= max_pair_total && pass; ++total)
        pass = gg2_sweep(total, 2, &cex);
    for (int total = 1; total <= max_triple_total && pass; ++total)
        pass = gg2_sweep(total, 3, &cex);
    return finish("gg2",
                  {{"max_pair_total", max_pair_total}, {"max_triple_total", max_triple_total}},
                  pass, std::move(cex), timer);
}

VerificationReport verify_claim_5_1(int m, int n, int t, int cap, long long group_budget) {
    Timer timer;
    const Claim51Report report = claim51_check(m, n, t, cap, group_budget);
    std::string cex;
    if (!report.ok()) {
        const ExponentMatrix& f = report.violations.front();
        cex = json{{"exponents", matrix_json(f)},
                   {"in_F0", is_F0(f, m)},
                   {"projection_nonzero", !project(f, m, group_budget).empty()}}
                  .dump();
    }
    return finish("claim-5.1", {{"m", m}, {"n", n}, {"t", t}, {"cap", cap}}, report.ok(),
                  std::move(cex), timer);
}

VerificationReport verify_claim_5_2(int m, int n, int t, int max_degree,
                                    long long group_budget) {
    Timer timer;
    // All F_0 members within the degree cap.
    std::vector<ExponentMatrix> members;
    ExponentMatrix f(t, n);
    const int cells = t * n;
    for (;;) {
        if (f.total() <= max_degree && is_F0(f, m)) members.push_back(f);
        int pos = cells - 1;
        while (pos >= 0) {
            int& v = f.at(pos / n, pos % n);
            if (++v <= max_degree) break;
            v = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    std::string cex;
    bool pass = true;
    for (size_t a = 0; a < members.size() && pass; ++a) {
        for (size_t b = a; b < members.size() && pass; ++b) {
            const Claim52Result r = claim52_equiv(members[a], members[b], m, group_budget);
            if (!r.consistent()) {
                pass = false;
                cex = json{{"f", matrix_json(members[a])},
                           {"h", matrix_json(members[b])},
                           {"support_overlap", r.support_overlap},
                           {"projection_equal", r.projection_equal},
                           {"column_permuted", r.column_permuted}}
                          .dump();
            }
        }
    }
    return finish("claim-5.2", {{"m", m}, {"n", n}, {"t", t}, {"degree", max_degree}}, pass,
                  std::move(cex), timer);
}

VerificationReport verify_bijection_5_4(int m, int n, int t, long long tuple_budget,
                                        long long group_budget) {
    Timer timer;
    const std::vector<ColoredPermutation> elements = enumerate_group(n, m, group_budget);
    long long tuples = 1;
    for (int i = 0; i < t; ++i) {
        tuples *= static_cast<long long>(elements.size());
        if (tuples > tuple_budget)
            throw budget_error("bijection check: tuple count exceeds budget");
    }

    std::string cex;
    bool pass = true;
    long long with_identity_product = 0;
    std::vector<size_t> idx(static_cast<size_t>(t), 0);
    const ColoredPermutation id = ColoredPermutation::identity(n, m);
    for (;;) {
        std::vector<ColoredPermutation> tuple;
        tuple.reserve(static_cast<size_t>(t));
        for (size_t i : idx) tuple.push_back(elements[i]);
        ColoredPermutation prod = tuple.front();
        for (int i = 1; i < t; ++i) prod = compose(tuple[static_cast<size_t>(i)], prod);

        auto tuple_json = [&]() {
            json arr = json::array();
            for (const auto& g : tuple) arr.push_back(format_window(g));
            return arr;
        };

        if (prod == id) {
            ++with_identity_product;
            const TupleData data = tuple_to_data(tuple);
            if (data_to_tuple(data) != tuple) {
                pass = false;
                cex = json{{"note", "tuple -> data -> tuple round trip failed"},
                           {"tuple", tuple_json()}}
                          .dump();
            } else if (tuple_to_data(data_to_tuple(data)) != data) {
                pass = false;
                cex = json{{"note", "data -> tuple -> data round trip failed"},
                           {"tuple", tuple_json()}}
                          .dump();
            }
        } else {
            bool rejected = false;
            try {
                tuple_to_data(tuple);
            } catch (const std::invalid_argument&) {
                rejected = true;
            }
            if (!rejected) {
                pass = false;
                cex = json{{"note", "tuple with non-identity product was accepted"},
                           {"tuple", tuple_json()}}
                          .dump();
            }
        }
        if (!pass) break;

        size_t pos = idx.size();
        while (pos > 0) {
            if (++idx[pos - 1] < elements.size()) break;
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    // Sanity: the number of constrained tuples is |G|^{t-1}.
    if (pass) {
        long long expected = 1;
        for (int i = 0; i + 1 < t; ++i) expected *= static_cast<long long>(elements.size());
        if (with_identity_product != expected) {
            pass = false;
            cex = json{{"note", "unexpected number of identity-product tuples"},
                       {"found", with_identity_product},
                       {"expected", expected}}
                      .dump();
        }
    }
    return finish("bijection-5.4", {{"m", m}, {"n", n}, {"t", t}}, pass, std::move(cex), timer);
}

VerificationReport verify_example_5_5(int n, long long bound) {
    Timer timer;
    const int m = 2;
    const TruncatedSeries ratio =
        series_div(hilbert_dia(m, n, 2, bound), hilbert_tia(m, n, 2, bound));

    MultiPoly sum(2);
    std::string cex;
    bool pass = true;
    for_each_element(n, m, kDefaultGroupBudget, [&](const ColoredPermutation& g) {
        if (!pass) return;
        const long long k = log_sum(g);  // number of color-1 letters
        const ColoredPermutation gi = inverse(g);
        if (k != log_sum(gi)) {
            pass = false;
            cex = json{{"window", format_window(g)},
                       {"note", "negative-letter count differs from the inverse's"}}
                      .dump();
            return;
        }
        const long long fm = flag_major(g);
        if (fm != 2 * major_index(g) + k) {
            pass = false;
            cex = json{{"window", format_window(g)},
                       {"flag_major", fm},
                       {"two_major_plus_k", 2 * major_index(g) + k}}
                      .dump();
            return;
        }
        sum.add_term({static_cast<std::uint32_t>(2 * major_index(g) + k),
                      static_cast<std::uint32_t>(2 * major_index(gi) + k)},
                     1);
    });
    if (pass && truncate(sum, bound) != ratio.poly) {
        pass = false;
        cex = json{{"note", "ratio differs from the signed-permutation sum"},
                   {"ratio", json::parse(to_json(ratio))},
                   {"sum", json::parse(to_json(truncate(sum, bound)))}}
                  .dump();
    }
    return finish("example-5.5", {{"m", 2}, {"t", 2}, {"n", n}, {"d", bound}}, pass,
                  std::move(cex), timer);
}

VerificationReport verify_group_laws(int m, int n, long long budget,
                                     long long assoc_exhaustive_cap, int assoc_samples) {
    Timer timer;
    const std::vector<ColoredPermutation> elements = enumerate_group(n, m, budget);
    const ColoredPermutation id = ColoredPermutation::identity(n, m);
    std::string cex;

    auto fail = [&](const std::string& what, const ColoredPermutation& g) {
        cex = json{{"law", what}, {"window", format_window(g)}}.dump();
        return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
    };

    // Count and distinctness.
    std::unordered_set<ColoredPermutation, WindowHash> seen(elements.begin(), elements.end());
    if (static_cast<long long>(seen.size()) != group_order_checked(n, m, budget) ||
        seen.size() != elements.size()) {
        cex = json{{"law", "enumeration yields m^n * n! distinct elements"},
                   {"distinct", static_cast<long long>(seen.size())},
                   {"listed", static_cast<long long>(elements.size())}}
                  .dump();
        return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
    }

    for (const auto& g : elements) {
        if (compose(g, id) != g || compose(id, g) != g) return fail("identity", g);
        const ColoredPermutation gi = inverse(g);
        if (compose(g, gi) != id || compose(gi, g) != id) return fail("inverse", g);
    }

    // Associativity: exhaustive on small groups, seeded random triples above.
    const long long size = static_cast<long long>(elements.size());
    auto check_triple = [&](size_t a, size_t b, size_t c) {
        return compose(compose(elements[a], elements[b]), elements[c]) ==
               compose(elements[a], compose(elements[b], elements[c]));
    };
    if (size <= assoc_exhaustive_cap) {
        for (size_t a = 0; a < elements.size(); ++a)
            for (size_t b = 0; b < elements.size(); ++b)
                for (size_t c = 0; c < elements.size(); ++c)
                    if (!check_triple(a, b, c)) return fail("associativity", elements[a]);
    } else {
        std::mt19937 rng(0xf1a6u);
        std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
        for (int round = 0; round < assoc_samples; ++round)
            if (!check_triple(pick(rng), pick(rng), pick(rng)))
                return fail("associativity", id);
    }

    // Defining relations of the generators.
    auto relation = [&](const ColoredPermutation& word, const std::string& name) {
        if (word != id) {
            cex = json{{"law", name}}.dump();
            return false;
        }
        return true;
    };
    const ColoredPermutation s0 = generator(0, n, m);
    if (!relation(power(s0, m), "s_0^m = 1"))
        return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
    for (int i = 1; i < n; ++i) {
        const ColoredPermutation si = generator(i, n, m);
        if (!relation(compose(si, si), "s_i^2 = 1"))
            return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
        if (i + 1 < n) {
            const ColoredPermutation si1 = generator(i + 1, n, m);
            if (!relation(power(compose(si, si1), 3), "(s_i s_{i+1})^3 = 1"))
                return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
        }
        for (int j = i + 2; j < n; ++j) {
            const ColoredPermutation sj = generator(j, n, m);
            if (!relation(power(compose(si, sj), 2), "(s_i s_j)^2 = 1, |i-j| > 1"))
                return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
        }
    }
    if (n >= 2) {
        const ColoredPermutation s1 = generator(1, n, m);
        if (!relation(power(compose(s0, s1), 2 * m), "(s_0 s_1)^{2m} = 1"))
            return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
        for (int i = 2; i < n; ++i) {
            const ColoredPermutation si = generator(i, n, m);
            if (compose(s0, si) != compose(si, s0)) {
                cex = json{{"law", "s_0 s_i = s_i s_0 for i > 1"}, {"i", i}}.dump();
                return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
            }
        }
    }

    // Window form of the top flag Coxeter element and its action.
    const ColoredPermutation top = flag_coxeter_element(n - 1, n, m);
    for (int j = 1; j <= n; ++j) {
        const ColoredLetter expected =
            j == 1 ? ColoredLetter{n, 1 % m} : ColoredLetter{j - 1, 0};
        if (top(j) != expected) return fail("t_{n-1} window form", top);
    }
    for (const auto& g : elements) {
        const ColoredPermutation tg = compose(top, g);
        for (int j = 1; j <= n; ++j) {
            const ColoredLetter x = g(j);
            const ColoredLetter expected = x.abs != 1
                                               ? ColoredLetter{x.abs - 1, x.color}
                                               : ColoredLetter{n, (x.color + 1) % m};
            if (tg(j) != expected) return fail("t_{n-1} pointwise action", g);
        }
    }
    // Order of t_{n-1} is exactly m*n.
    ColoredPermutation acc = top;
    long long order = 1;
    while (acc != id) {
        acc = compose(acc, top);
        ++order;
        if (order > static_cast<long long>(m) * n) break;
    }
    if (order != static_cast<long long>(m) * n) {
        cex = json{{"law", "order of t_{n-1} is m*n"}, {"order", order}}.dump();
        return finish("group-laws", {{"m", m}, {"n", n}}, false, std::move(cex), timer);
    }

    return finish("group-laws", {{"m", m}, {"n", n}}, true, "", timer);
}

VerificationReport verify_qseries_basics(int max_n, int random_rounds, unsigned seed) {
    Timer timer;
    std::string cex;

    // q = 1 specialization over all compositions with positive parts.
    auto multinomial = [](int n, const std::vector<int>& parts) {
        BigInt v = 1;
        for (int k = 2; k <= n; ++k) v *= k;
        for (int p : parts) {
            BigInt f = 1;
            for (int k = 2; k <= p; ++k) f *= k;
            v /= f;
        }
        return v;
    };
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::vector<int>> compositions;
        std::vector<int> cur;
        std::function<void(int)> build = [&](int remaining) {
            if (remaining == 0) {
                compositions.push_back(cur);
                return;
            }
            for (int p = 1; p <= remaining; ++p) {
                cur.push_back(p);
                build(remaining - p);
                cur.pop_back();
            }
        };
        build(n);
        for (const auto& parts : compositions) {
            const MultiPoly q = q_multinomial(n, parts);
            for (const auto& [e, c] : q.terms()) {
                if (c < 0) {
                    cex = json{{"note", "negative q-multinomial coefficient"}, {"n", n}}.dump();
                    return finish("qseries-basics", {{"max_n", max_n}}, false, std::move(cex),
                                  timer);
                }
            }
            if (q.at_all_ones() != multinomial(n, parts)) {
                json jp = json::array();
                for (int p : parts) jp.push_back(p);
                cex = json{{"note", "q = 1 specialization mismatch"}, {"n", n}, {"parts", jp}}
                          .dump();
                return finish("qseries-basics", {{"max_n", max_n}}, false, std::move(cex),
                              timer);
            }
        }
        // Palindromic Gaussian binomials.
        for (int k = 0; k <= n; ++k) {
            const MultiPoly q = q_multinomial(n, {k, n - k});
            const long long deg = std::max<long long>(q.total_degree(), 0);
            for (const auto& [e, c] : q.terms()) {
                if (q.coeff({static_cast<std::uint32_t>(deg - e[0])}) != c) {
                    cex = json{{"note", "Gaussian binomial not palindromic"},
                               {"n", n},
                               {"k", k}}
                              .dump();
                    return finish("qseries-basics", {{"max_n", max_n}}, false, std::move(cex),
                                  timer);
                }
            }
        }
    }

    // Division contract on random series with unit constant term.
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 5);
    const long long bound = 6;
    for (int round = 0; round < random_rounds; ++round) {
        MultiPoly a(2), b(2);
        for (int terms = 0; terms < 8; ++terms) {
            a.add_term({static_cast<std::uint32_t>(expo(rng)),
                        static_cast<std::uint32_t>(expo(rng))},
                       coeff(rng));
            b.add_term({static_cast<std::uint32_t>(expo(rng)),
                        static_cast<std::uint32_t>(expo(rng))},
                       coeff(rng));
        }
        // Force a unit constant term.
        b.add_term({0, 0}, -b.constant_term() + ((round % 2) ? 1 : -1));
        const TruncatedSeries sa{a, bound}, sb{b, bound};
        const TruncatedSeries q = series_div(sa, sb);
        if (series_mul(q, sb) != sa) {
            cex = json{{"note", "series division contract failed"},
                       {"round", round},
                       {"a", json::parse(to_json(sa))},
                       {"b", json::parse(to_json(sb))}}
                      .dump();
            return finish("qseries-basics", {{"max_n", max_n}}, false, std::move(cex), timer);
        }
    }
    return finish("qseries-basics", {{"max_n", max_n}, {"rounds", random_rounds}}, true, "",
                  timer);
}

}  // namespace flagmajor
