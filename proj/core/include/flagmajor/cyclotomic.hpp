#pragma once

#include <compare>
#include <vector>

namespace flagmajor {

// Coefficients of the m-th cyclotomic polynomial, ascending degree.
// Computed over the integers by dividing x^m - 1 by every proper
// cyclotomic factor; results are memoized.
std::vector<long long> cyclotomic_polynomial(int m);

// An element of Z[omega], omega a primitive m-th root of unity, stored as
// the integer coefficient vector of sum c_k omega^k (0 <= k < m).  The
// zero-test reduces modulo the m-th cyclotomic polynomial, so it is exact
// for composite m as well (e.g. 1 + omega^3 = 0 for m = 6).
class CyclotomicInt {
public:
    explicit CyclotomicInt(int m);
    static CyclotomicInt integer(int m, long long value);
    static CyclotomicInt root_power(int m, long long k);

    int m() const { return m_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // this += c * omega^k.
    void add_root_power(long long k, long long c = 1);
    CyclotomicInt& operator+=(const CyclotomicInt& other);

    // Canonical representative: degree reduced below deg(Phi_m), padded
    // back to length m with zeros.
    std::vector<long long> reduced() const;
    bool is_zero() const;
    // True when the element is a rational integer; stores it in *value.
    bool rational_integer(long long* value = nullptr) const;

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return a.m_ == b.m_ && a.reduced() == b.reduced();
    }

private:
    int m_;
    std::vector<long long> coeffs_;  // raw accumulation, length m
};

}  // namespace flagmajor
