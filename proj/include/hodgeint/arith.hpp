#pragma once

#include <gmpxx.h>

#include <vector>

#include "hodgeint/errors.hpp"
#include "hodgeint/rational.hpp"

// Bernoulli table size; covers every genus the engine is asked for by a
// comfortable margin.  Override at build time if deeper tables are needed.
#ifndef HODGEINT_BERNOULLI_MAX
#define HODGEINT_BERNOULLI_MAX 64
#endif

namespace hodgeint {

inline Rat factorial(long n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

inline Rat binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(z);
}

/// n! / (parts_1! ... parts_r! (n - sum parts)!), exact.
inline Rat multinomial(long n, const std::vector<long>& parts) {
    if (n < 0) throw domain_error("multinomial: negative n");
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw domain_error("multinomial: negative part");
        total += p;
    }
    if (total > n) throw domain_error("multinomial: parts exceed n");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class acc(z);
    auto divide_by_fac = [&acc](long p) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        acc /= f;
    };
    for (long p : parts) divide_by_fac(p);
    divide_by_fac(n - total);
    return Rat(mpz_class(acc.get_num())); // exact integer by construction
}

/// m!! for odd m >= -1, with (-1)!! = 1 (empty product).
inline Rat double_factorial(long m) {
    if (m == -1) return Rat(1);
    if (m < -1 || m % 2 == 0) throw domain_error("double_factorial: argument must be odd and >= -1");
    mpz_class z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(m));
    return Rat(z);
}

/// 1 + 1/2 + ... + 1/n.
inline Rat harmonic(long n) {
    Rat acc(0);
    for (long k = 1; k <= n; ++k) acc += Rat(1, k);
    return acc;
}

/// Bernoulli numbers under the t/(e^t - 1) convention, so B_1 = -1/2.
///
/// The table is filled by the defining recurrence and independently by
/// inverting the series (e^t - 1)/t; the two constructions must agree or the
/// constructor refuses to hand out a table at all.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_index = HODGEINT_BERNOULLI_MAX) : values_(max_index + 1) {
        // sum_{k=0}^{m} binom(m+1,k) B_k = 0 for m >= 1, solved for B_m.
        values_[0] = Rat(1);
        for (int m = 1; m <= max_index; ++m) {
            Rat s(0);
            for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * values_[k];
            values_[m] = -s / binomial(m + 1, m);
        }

        // Cross-check: B_m = m! [t^m] 1 / ((e^t - 1)/t).
        std::vector<Rat> c(max_index + 1), inv(max_index + 1);
        for (int m = 0; m <= max_index; ++m) c[m] = Rat(1) / factorial(m + 1);
        inv[0] = Rat(1);
        for (int m = 1; m <= max_index; ++m) {
            Rat s(0);
            for (int i = 1; i <= m; ++i) s += c[i] * inv[m - i];
            inv[m] = -s;
        }
        for (int m = 0; m <= max_index; ++m) {
            if (inv[m] * factorial(m) != values_[m])
                throw integrity_error("BernoulliTable: recurrence and series inversion disagree at m=" +
                                      std::to_string(m));
        }
    }

    int max_index() const { return static_cast<int>(values_.size()) - 1; }

    const Rat& at(int m) const {
        if (m < 0) throw domain_error("bernoulli: negative index");
        if (m > max_index())
            throw capacity_error("bernoulli: index " + std::to_string(m) + " exceeds table limit " +
                                 std::to_string(max_index()));
        return values_[m];
    }

private:
    std::vector<Rat> values_;
};

/// Process-wide Bernoulli table (immutable after first use).
inline const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table;
    return table;
}

inline const Rat& bernoulli(int m) { return bernoulli_table().at(m); }

} // namespace hodgeint
