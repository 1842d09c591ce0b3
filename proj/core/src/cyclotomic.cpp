#include "flagmajor/cyclotomic.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace flagmajor {

namespace {

using DensePoly = std::vector<long long>;  // ascending degree, trimmed

void trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
DensePoly divide_monic(DensePoly num, const DensePoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("cyclotomic: divisor must be monic");
    DensePoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (size_t i = num.size(); i-- > 0;) {
        if (i + 1 < den.size()) break;
        const long long c = num[i];
        if (c == 0) continue;
        const size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic: division left a remainder");
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
    static std::map<int, DensePoly> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    // Compute iteratively so recursion never re-enters the lock.
    for (int k = 1; k <= m; ++k) {
        if (cache.count(k)) continue;
        DensePoly numerator(static_cast<size_t>(k) + 1, 0);
        numerator[0] = -1;
        numerator[static_cast<size_t>(k)] = 1;  // x^k - 1
        for (int d = 1; d < k; ++d)
            if (k % d == 0) numerator = divide_monic(std::move(numerator), cache.at(d));
        cache.emplace(k, std::move(numerator));
    }
    return cache.at(m);
}

CyclotomicInt::CyclotomicInt(int m) : m_(m), coeffs_(static_cast<size_t>(m), 0) {
    if (m < 1) throw std::invalid_argument("CyclotomicInt: m must be >= 1");
}

CyclotomicInt CyclotomicInt::integer(int m, long long value) {
    CyclotomicInt c(m);
    c.coeffs_[0] = value;
    return c;
}

CyclotomicInt CyclotomicInt::root_power(int m, long long k) {
    CyclotomicInt c(m);
    c.add_root_power(k);
    return c;
}

void CyclotomicInt::add_root_power(long long k, long long c) {
    long long r = k % m_;
    if (r < 0) r += m_;
    coeffs_[static_cast<size_t>(r)] += c;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
    if (m_ != other.m_) throw std::invalid_argument("CyclotomicInt: modulus mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

std::vector<long long> CyclotomicInt::reduced() const {
    const std::vector<long long> phi = cyclotomic_polynomial(m_);
    const size_t deg = phi.size() - 1;  // = phi(m), the Euler totient
    // Reduce in arbitrary precision, then convert back.
    std::vector<mpz_class> work;
    work.reserve(coeffs_.size());
    for (long long c : coeffs_) work.emplace_back(static_cast<long>(c));
    for (size_t i = work.size(); i-- > deg;) {
        const mpz_class c = work[i];
        if (c == 0) continue;
        const size_t shift = i - deg;
        for (size_t j = 0; j < phi.size(); ++j)
            work[shift + j] -= c * static_cast<long>(phi[j]);
    }
    std::vector<long long> out(static_cast<size_t>(m_), 0);
    for (size_t i = 0; i < deg && i < work.size(); ++i) {
        if (!work[i].fits_slong_p())
            throw std::overflow_error("CyclotomicInt: reduced coefficient overflow");
        out[i] = work[i].get_si();
    }
    return out;
}

bool CyclotomicInt::is_zero() const {
    for (long long c : reduced())
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::rational_integer(long long* value) const {
    const std::vector<long long> r = reduced();
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return false;
    if (value) *value = r[0];
    return true;
}

}  // namespace flagmajor
