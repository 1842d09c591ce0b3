#include "flagmajor/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagmajor {

long long degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0ll);
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: nvars must be >= 0");
}

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents exp, const BigInt& c) {
    MultiPoly p(nvars);
    p.add_term(exp, c);
    return p;
}

BigInt MultiPoly::coeff(const Exponents& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("MultiPoly: exponent tuple has wrong length");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::constant_term() const {
    return coeff(Exponents(static_cast<size_t>(nvars_), 0));
}

long long MultiPoly::total_degree() const {
    long long deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, degree_of(e));
    return deg;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("MultiPoly: exponent tuple has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt MultiPoly::at_all_ones() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial nvars mismatch");
}

}  // namespace

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

MultiPoly poly_neg(const MultiPoly& a) {
    MultiPoly out(a.nvars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly out(a.nvars());
    Exponents e(static_cast<size_t>(a.nvars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly truncate(const MultiPoly& a, long long bound) {
    MultiPoly out(a.nvars());
    for (const auto& [e, c] : a.terms())
        if (degree_of(e) <= bound) out.add_term(e, c);
    return out;
}

TruncatedSeries::TruncatedSeries(MultiPoly p, long long bound_)
    : poly(truncate(p, bound_)), bound(bound_) {
    if (bound_ < 0) throw std::invalid_argument("TruncatedSeries: bound must be >= 0");
}

TruncatedSeries series_one(int nvars, long long bound) {
    return {MultiPoly::constant(nvars, 1), bound};
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    return {poly_add(a.poly, b.poly), std::min(a.bound, b.bound)};
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    return {poly_sub(a.poly, b.poly), std::min(a.bound, b.bound)};
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_vars(a.poly, b.poly);
    const long long bound = std::min(a.bound, b.bound);
    MultiPoly out(a.nvars());
    Exponents e(static_cast<size_t>(a.nvars()));
    for (const auto& [ea, ca] : a.poly.terms()) {
        const long long da = degree_of(ea);
        if (da > bound) continue;
        for (const auto& [eb, cb] : b.poly.terms()) {
            if (da + degree_of(eb) > bound) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return {std::move(out), bound};
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
    require_same_vars(num.poly, den.poly);
    const long long bound = std::min(num.bound, den.bound);
    const BigInt c0 = den.poly.constant_term();
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("series_div: divisor constant term must be +1 or -1");

    MultiPoly result(num.nvars());
    for (long long d = 0; d <= bound; ++d) {
        // Defect at degree d after the current partial quotient.
        MultiPoly defect = poly_sub(truncate(num.poly, bound),
                                    truncate(poly_mul(result, den.poly), bound));
        MultiPoly layer(num.nvars());
        for (const auto& [e, c] : defect.terms())
            if (degree_of(e) == d) layer.add_term(e, c0 == 1 ? c : -c);
        result = poly_add(result, layer);
    }
    return {std::move(result), bound};
}

namespace {

void write_terms_json(std::ostream& out, const MultiPoly& p) {
    out << "\"vars\":[";
    for (int i = 0; i < p.nvars(); ++i) {
        if (i) out << ',';
        out << "\"q" << i + 1 << '"';
    }
    out << "],";
}

void write_term_array(std::ostream& out, const MultiPoly& p) {
    out << "\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ',';
        first = false;
        out << "{\"exp\":[";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ',';
            out << e[i];
        }
        out << "],\"coeff\":\"" << c.get_str() << "\"}";
    }
    out << ']';
}

}  // namespace

std::string to_json(const MultiPoly& p) {
    std::ostringstream out;
    out << '{';
    write_terms_json(out, p);
    write_term_array(out, p);
    out << '}';
    return out.str();
}

std::string to_json(const TruncatedSeries& s) {
    std::ostringstream out;
    out << '{';
    write_terms_json(out, s.poly);
    out << "\"bound\":" << s.bound << ',';
    write_term_array(out, s.poly);
    out << '}';
    return out.str();
}

}  // namespace flagmajor
