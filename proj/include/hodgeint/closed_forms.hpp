#pragma once

#include <string>
#include <vector>

#include "hodgeint/arith.hpp"
#include "hodgeint/errors.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/series.hpp"

// Closed-form evaluations and Bernoulli identities, implemented without any
// reference to the integral engine so that the two sides can serve as each
// other's oracle in the verification suites.

namespace hodgeint {

/// b_g = int_{Mbar_{g,1}} psi^{2g-2} lambda_g:
/// 1 for g = 0, else (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!.
inline Rat b_closed(int g) {
    if (g < 0) throw domain_error("b_closed: negative genus");
    if (g == 0) return Rat(1);
    Rat p = pow(Rat(2), 2 * g - 1);
    return (p - Rat(1)) / p * abs(bernoulli(2 * g)) / factorial(2 * g);
}

/// sum_g c_g t^{2g} with c_g = int psi^{2g-1} lambda_{g-1}, via the closed
/// form ((t/2)/sin(t/2)) * log((t/2)/sin(t/2)).
inline Series c_closed_series(int order) {
    if (order < 2) throw domain_error("c_closed_series: order must be >= 2");
    Series f0 = sinc_half_inverse(order);
    return f0 * series_log(f0);
}

/// Degree-d genus-g multiple-cover contribution of a rigid rational curve
/// with normal bundle O(-1) + O(-1).
inline Rat C_closed(int g, long d) {
    if (d <= 0) throw domain_error("C_closed: degree must be positive");
    if (g < 0) throw domain_error("C_closed: negative genus");
    if (g == 0) return Rat(1) / (Rat(d) * Rat(d) * Rat(d));
    if (g == 1) return Rat(1) / Rat(12 * d);
    return abs(bernoulli(2 * g)) * pow(Rat(d), 2 * g - 3) / (Rat(2 * g) * factorial(2 * g - 2));
}

/// int_{Mbar_g} lambda_{g-1}^3 = |B_{2g}|/2g * |B_{2g-2}|/(2g-2) * 1/(2g-2)!.
inline Rat lambda3_closed(int g) {
    if (g < 2) throw domain_error("lambda3_closed: genus must be >= 2");
    return abs(bernoulli(2 * g)) / Rat(2 * g) * abs(bernoulli(2 * g - 2)) / Rat(2 * g - 2) /
           factorial(2 * g - 2);
}

/// int psi^{k_1}...psi^{k_n} lambda_g = multinomial(2g+n-3; k) * b_g,
/// valid when sum k_i = 2g-3+n; zero otherwise.
inline Rat lamg_closed(int g, const std::vector<int>& ks) {
    if (g < 0) throw domain_error("lamg_closed: negative genus");
    long total = 0;
    for (int k : ks) {
        if (k < 0) throw domain_error("lamg_closed: negative exponent");
        total += k;
    }
    const long n = static_cast<long>(ks.size());
    if (total != 2 * g - 3 + n) return Rat(0);
    std::vector<long> parts(ks.begin(), ks.end());
    return multinomial(2 * g + n - 3, parts) * b_closed(g);
}

/// int psi^{k_1}...psi^{k_n} lambda_g lambda_{g-1} relative to the one-point
/// base integral int psi^{g-1} lambda_g lambda_{g-1}, which the caller
/// supplies (typically from the engine):
///   (2g+n-3)! (2g-1)!! / ((2g-1)! prod (2k_i-1)!!) * base.
inline Rat lamgg_closed(int g, const std::vector<int>& ks, const Rat& base) {
    if (g < 2) throw domain_error("lamgg_closed: genus must be >= 2");
    long total = 0;
    for (int k : ks) {
        if (k <= 0) throw domain_error("lamgg_closed: exponents must be positive");
        total += k;
    }
    const long n = static_cast<long>(ks.size());
    if (total != g - 2 + n) return Rat(0);
    Rat value = factorial(2 * g + n - 3) * double_factorial(2 * g - 1) / factorial(2 * g - 1);
    for (int k : ks) value /= double_factorial(2 * k - 1);
    return value * base;
}

/// Both sides of the c_g prediction:
///   c_g  vs  (sum_{k=1}^{2g-1} 1/k) b_g
///            - 1/2 sum_{g1+g2=g, gi>0} (2g1-1)!(2g2-1)!/(2g-1)! b_{g1} b_{g2}.
struct IhopPair {
    Rat lhs;
    Rat rhs;
};

inline IhopPair ihop_check(int g) {
    if (g < 1) throw domain_error("ihop_check: genus must be >= 1");
    Rat lhs = c_closed_series(2 * g)[2 * g];
    Rat rhs = harmonic(2 * g - 1) * b_closed(g);
    for (int g1 = 1; g1 < g; ++g1)
        rhs -= Rat(1, 2) * factorial(2 * g1 - 1) * factorial(2 * (g - g1) - 1) / factorial(2 * g - 1) *
               b_closed(g1) * b_closed(g - g1);
    return {lhs, rhs};
}

struct IdentityCheck {
    std::string id;
    Rat lhs;
    Rat rhs;
    bool pass() const { return lhs == rhs; }
};

/// Exact per-genus verification of the three Bernoulli lemmas:
/// the b-convolution, the log-series coefficients, and Zagier's
/// a(g) + b(g) = c(g) identity.  Failures are reported, not thrown.
inline std::vector<IdentityCheck> bernoulli_identity_checks(int g) {
    if (g < 1) throw domain_error("bernoulli_identity_checks: genus must be >= 1");
    std::vector<IdentityCheck> checks;

    {
        Rat conv(0);
        for (int h = 0; h <= g; ++h) conv += b_closed(h) * b_closed(g - h);
        checks.push_back({"lemma2.convolution(g=" + std::to_string(g) + ")", conv,
                          abs(bernoulli(2 * g)) / (Rat(2 * g) * factorial(2 * g - 2))});
    }
    {
        Rat coeff = series_log(sinc_half_inverse(2 * g))[2 * g];
        checks.push_back({"lemma3.log_coeff(k=" + std::to_string(g) + ")", coeff,
                          abs(bernoulli(2 * g)) / (Rat(2 * g) * factorial(2 * g))});
    }
    {
        auto beta = [](int h) {
            return (Rat(2) - pow(Rat(2), 2 * h)) * bernoulli(2 * h) / factorial(2 * h);
        };
        Rat a = harmonic(2 * g - 1) * beta(g);
        Rat b(0);
        for (int n = 1; n <= g; ++n)
            b += pow(Rat(2), 2 * n) * bernoulli(2 * n) / (Rat(2 * n) * factorial(2 * n)) * beta(g - n);
        Rat c(0);
        for (int g1 = 1; g1 < g; ++g1)
            c += Rat(1, 2) * factorial(2 * g1 - 1) * factorial(2 * (g - g1) - 1) / factorial(2 * g - 1) *
                 beta(g1) * beta(g - g1);
        checks.push_back({"lemma4.zagier(g=" + std::to_string(g) + ")", a + b, c});
    }
    return checks;
}

} // namespace hodgeint
