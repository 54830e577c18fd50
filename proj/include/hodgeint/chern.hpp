#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hodgeint/arith.hpp"
#include "hodgeint/errors.hpp"
#include "hodgeint/keys.hpp"
#include "hodgeint/rational.hpp"

namespace hodgeint {

/// Monomial in Chern characters of the Hodge bundle: the multiset of indices,
/// sorted descending.  Only odd indices occur; the even components vanish.
using ChMonomial = std::vector<int>;

inline int ch_monomial_degree(const ChMonomial& m) {
    int d = 0;
    for (int i : m) d += i;
    return d;
}

/// Formal linear combination of ChMonomials with Rat coefficients.  The
/// cohomological degree of every monomial is the sum of its indices.
struct ChPoly {
    std::map<ChMonomial, Rat> terms;

    void add_term(ChMonomial m, const Rat& c) {
        if (c.is_zero()) return;
        std::sort(m.begin(), m.end(), std::greater<int>());
        Rat& slot = terms[m];
        slot += c;
        if (slot.is_zero()) terms.erase(m);
    }

    ChPoly& operator+=(const ChPoly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    ChPoly& operator*=(const Rat& s) {
        if (s.is_zero()) { terms.clear(); return *this; }
        for (auto& [m, c] : terms) c *= s;
        return *this;
    }

    /// Product with all monomials of degree > max_degree discarded.
    friend ChPoly mul_truncated(const ChPoly& a, const ChPoly& b, int max_degree) {
        ChPoly r;
        for (const auto& [ma, ca] : a.terms) {
            int da = ch_monomial_degree(ma);
            for (const auto& [mb, cb] : b.terms) {
                if (da + ch_monomial_degree(mb) > max_degree) continue;
                ChMonomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const ChPoly& a, const ChPoly& b) { return a.terms == b.terms; }
};

/// lambda_j expressed in odd Chern characters, via
///   sum_{k>=1} (-1)^{k-1} (k-1)! ch_k t^k = log c_t(E),
/// exponentiated with the even ch's deleted.  For odd k the sign is +1, so
/// lambda_j is the degree-j part of exp(sum_{odd k} (k-1)! ch_k).
inline ChPoly lambda_class_in_ch(int j) {
    if (j < 0) throw domain_error("lambda_class_in_ch: negative index");
    ChPoly result;
    if (j == 0) {
        result.add_term({}, Rat(1));
        return result;
    }
    ChPoly p; // the odd-part log series, truncated at degree j
    for (int k = 1; k <= j; k += 2) p.add_term({k}, factorial(k - 1));

    ChPoly power;
    power.add_term({}, Rat(1));
    ChPoly exp_p = power; // running exp(p) truncated at degree j
    for (int m = 1; m <= j; ++m) {
        power = mul_truncated(power, p, j);
        ChPoly scaled = power;
        scaled *= Rat(1) / factorial(m);
        exp_p += scaled;
        if (power.terms.empty()) break;
    }
    for (const auto& [m, c] : exp_p.terms)
        if (ch_monomial_degree(m) == j) result.add_term(m, c);
    return result;
}

/// Exact expression of a lambda-monomial in odd ch's; degrees are preserved.
inline ChPoly lambda_to_ch(const LambdaMonomial& mono) {
    int degree = 0;
    for (size_t j = 0; j < mono.lambda.size(); ++j) {
        if (mono.lambda[j] < 0) throw domain_error("lambda_to_ch: negative exponent");
        degree += static_cast<int>(j + 1) * mono.lambda[j];
    }
    ChPoly acc;
    acc.add_term({}, Rat(1));
    for (size_t j = 0; j < mono.lambda.size(); ++j) {
        ChPoly base = lambda_class_in_ch(static_cast<int>(j + 1));
        for (int e = 0; e < mono.lambda[j]; ++e) acc = mul_truncated(acc, base, degree);
    }
    return acc;
}

} // namespace hodgeint
