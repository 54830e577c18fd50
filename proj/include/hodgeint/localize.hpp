#pragma once

#include <array>
#include <vector>

#include "hodgeint/engine.hpp"
#include "hodgeint/errors.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/series.hpp"

// Fixed-locus sums over genus splittings and partitions: the localization
// side of the verification suites.  All integrals are delegated to the
// engine; a genus-zero factor is the point Mbar_{0,1} and contributes 1.

namespace hodgeint {

/// Integer partition with parts sorted descending.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    long sum() const {
        long s = 0;
        for (int p : parts) s += p;
        return s;
    }
    /// prod (multiplicity of each part value)!, recomputed on demand.
    Rat aut() const {
        Rat a(1);
        int run = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            ++run;
            if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
                a *= factorial(run);
                run = 0;
            }
        }
        return a;
    }
};

inline std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw domain_error("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// The torus weights [alpha, alpha] and [beta, beta+1] picked for the two
/// line bundles in the localization computations.
struct Linearization {
    long alpha = 0;
    long beta = 0;
};

/// int_{Mbar_{h,1}} Lambda(w0) Lambda(w1) Lambda(w2) / (1 - psi_1), where
/// Lambda(w) = sum_i w^i lambda_{h-i}; the h = 0 factor is a point and
/// contributes exactly 1.
inline Rat capped_triple_factor(Engine& engine, int h, const std::array<Rat, 3>& w) {
    if (h < 0) throw domain_error("capped_triple_factor: negative genus");
    if (h == 0) return Rat(1);
    Rat total(0);
    for (int i = 0; i <= h; ++i) {
        for (int j = 0; j <= h; ++j) {
            for (int k = 0; k <= h; ++k) {
                const int m = i + j + k - 2; // psi power filling the dimension
                if (m < 0 || m > 3 * h - 2) continue;
                Rat coeff = pow(w[0], i) * pow(w[1], j) * pow(w[2], k);
                if (coeff.is_zero()) continue;
                std::vector<int> lambda(h, 0);
                if (h - i > 0) ++lambda[h - i - 1];
                if (h - j > 0) ++lambda[h - j - 1];
                if (h - k > 0) ++lambda[h - k - 1];
                total += coeff * engine.hodge_integral({h, {m}, lambda});
            }
        }
    }
    return total;
}

/// Fixed-locus sum for the x.y integral with linearizations
/// [alpha, alpha] and [beta, beta+1].
inline Rat I_g(Engine& engine, int g, Linearization lin) {
    if (g < 1) throw domain_error("I_g: genus must be >= 1");
    const Rat a(lin.alpha), b(lin.beta);
    Rat total(0);
    for (int g1 = 0; g1 <= g; ++g1)
        total += capped_triple_factor(engine, g1, {Rat(-1), -a, -b}) *
                 capped_triple_factor(engine, g - g1, {Rat(-1), a, b + Rat(1)});
    return total;
}

/// Fixed-locus sum for the y.y integral with linearizations
/// [alpha, alpha+1] and [beta, beta+1].
inline Rat J_g(Engine& engine, int g, Linearization lin) {
    if (g < 1) throw domain_error("J_g: genus must be >= 1");
    const Rat a(lin.alpha), b(lin.beta);
    Rat total(0);
    for (int g1 = 0; g1 <= g; ++g1)
        total += capped_triple_factor(engine, g1, {Rat(-1), -a, -b}) *
                 capped_triple_factor(engine, g - g1, {Rat(-1), a + Rat(1), b + Rat(1)});
    return total;
}

/// g_xi(t) = 1 + sum t^{2g} int Lambda(-1) Lambda(0) Lambda(-xi) / (1-psi_1).
inline Series g_xi_series(Engine& engine, long xi, int max_genus) {
    Series s(2 * max_genus);
    s[0] = Rat(1);
    for (int g = 1; g <= max_genus; ++g)
        s[2 * g] = capped_triple_factor(engine, g, {Rat(-1), Rat(0), Rat(-xi)});
    return s;
}

/// Multiple-cover contribution assembled from engine values of b_g (the
/// closed form stays on the other side of the comparison):
///   C(g,d) = d^{2g-3} sum_{g1+g2=g} b_{g1} b_{g2}.
inline Rat C_localized(Engine& engine, int g, long d) {
    if (d <= 0) throw domain_error("C_localized: degree must be positive");
    if (g < 0) throw domain_error("C_localized: negative genus");
    std::vector<Rat> b(g + 1);
    b[0] = Rat(1);
    if (g >= 1) {
        Series f0 = engine.capped_lambda_series(0, g);
        for (int h = 1; h <= g; ++h) b[h] = f0[2 * h];
    }
    Rat sum(0);
    for (int g1 = 0; g1 <= g; ++g1) sum += b[g1] * b[g - g1];
    return pow(Rat(d), 2 * g - 3) * sum;
}

/// The degree-d partition relation: sums
///   (-1)^{d+l(m)} prod m_i^{m_i} / (Aut(m) prod m_i prod m_i!)
///   * int_{Mbar_{g,l(m)+1}} lambda_g / prod (1 - m_i psi_i)
/// over all partitions m of d; the integrand is expanded to psi-degree
/// 2g-2+l(m), the extra marking carrying exponent zero.  Expected zero.
inline Rat partition_relation(Engine& engine, int g, int d) {
    if (g < 1) throw domain_error("partition_relation: genus must be >= 1");
    if (d < 2) throw domain_error("partition_relation: degree must be >= 2");

    Rat total(0);
    for (const Partition& m : partitions_of(d)) {
        const int l = m.length();
        Rat coeff(1);
        for (int p : m.parts) coeff *= pow(Rat(p), p) / (Rat(p) * factorial(p));
        coeff /= m.aut();
        if ((d + l) % 2 == 1) coeff = -coeff;

        std::vector<int> lambda(g, 0);
        lambda[g - 1] = 1;

        // Sum over compositions (j_1..j_l) of 2g-2+l, weighted by prod m_i^{j_i}.
        Rat integral(0);
        std::vector<int> exps(l + 1, 0);
        auto rec = [&](auto&& self, int idx, int remaining, Rat weight) -> void {
            if (idx == l - 1) {
                exps[idx] = remaining;
                Rat w = weight * pow(Rat(m.parts[idx]), remaining);
                integral += w * engine.hodge_integral({g, exps, lambda});
                return;
            }
            for (int j = 0; j <= remaining; ++j) {
                exps[idx] = j;
                self(self, idx + 1, remaining - j, weight * pow(Rat(m.parts[idx]), j));
            }
        };
        rec(rec, 0, 2 * g - 2 + l, Rat(1));
        total += coeff * integral;
    }
    return total;
}

} // namespace hodgeint
