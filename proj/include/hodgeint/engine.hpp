#pragma once

#include <cassert>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hodgeint/arith.hpp"
#include "hodgeint/cache.hpp"
#include "hodgeint/chern.hpp"
#include "hodgeint/errors.hpp"
#include "hodgeint/keys.hpp"
#include "hodgeint/kpoly.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

namespace detail {

/// One way of splitting a multiset (kept as a sorted-descending vector) into
/// an ordered pair of sub-multisets, together with the number of labelled
/// subsets realizing it.
struct MultisetSplit {
    std::vector<int> taken;
    std::vector<int> rest;
    long taken_sum = 0;
    Rat ways;
};

inline std::vector<MultisetSplit> multiset_splits(const std::vector<int>& sorted_desc) {
    std::vector<std::pair<int, int>> groups; // (value, multiplicity)
    for (int v : sorted_desc) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1);
    }
    std::vector<MultisetSplit> out;
    MultisetSplit cur;
    cur.ways = Rat(1);
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == groups.size()) {
            out.push_back(cur);
            return;
        }
        auto [value, mult] = groups[gi];
        for (int take = 0; take <= mult; ++take) {
            MultisetSplit saved = cur;
            for (int i = 0; i < take; ++i) cur.taken.push_back(value);
            for (int i = take; i < mult; ++i) cur.rest.push_back(value);
            cur.taken_sum += static_cast<long>(take) * value;
            cur.ways *= binomial(mult, take);
            self(self, gi + 1);
            cur = std::move(saved);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<int> with_extra(std::vector<int> v, int extra) {
    v.push_back(extra);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

inline std::vector<int> with_replaced(const std::vector<int>& v, int from, int to) {
    std::vector<int> r = v;
    auto it = std::find(r.begin(), r.end(), from);
    assert(it != r.end());
    *it = to;
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

inline std::vector<int> without_one(const std::vector<int>& v, int value) {
    std::vector<int> r = v;
    auto it = std::find(r.begin(), r.end(), value);
    assert(it != r.end());
    r.erase(it);
    return r;
}

inline bool stable_space(int g, int n) { return g >= 0 && 2 * g - 2 + n > 0; }

} // namespace detail

/// One summand of a Grothendieck-Riemann-Roch reduction step: coeff times the
/// integral of `first`, or coeff times the product of two connected integrals
/// for reducible boundary terms.
struct GrrTerm {
    Rat coeff;
    HodgeKey first;
    std::optional<HodgeKey> second;
};

/// Rewrites the highest Chern-character insertion ch_{2l-1} of `key` as
/// B_{2l}/(2l)! times a kappa_{2l-1} term plus one half of the boundary sum:
/// the irreducible term of genus g-1 with two new markings carrying psi
/// exponents i and 2l-2-i (sign (-1)^i), and the reducible terms over ordered
/// genus splittings with every distribution of markings and of the remaining
/// ch insertions across the two factors.  Splittings with an unstable factor
/// index no stratum and are dropped, as are reducible terms whose factors
/// cannot meet their dimension gates.
///
/// Kappa insertions must have been eliminated beforehand; the restriction of
/// kappa classes to boundary strata is deliberately not implemented.
inline std::vector<GrrTerm> grr_step(const HodgeKey& key) {
    if (key.chs.empty()) throw domain_error("grr_step: no Chern-character insertion present");
    if (!key.kappas.empty()) throw domain_error("grr_step: eliminate kappa insertions first");
    for (int b : key.chs)
        if (b >= 2 && b % 2 == 0) return {}; // even ch components vanish
    if (key.chs.front() == 0) {
        // Only ch_0 insertions left; each is the rank g.
        HodgeKey stripped{key.genus, key.psi, key.kappas, {}};
        return {{pow(Rat(key.genus), static_cast<long>(key.chs.size())), std::move(stripped), std::nullopt}};
    }

    const int g = key.genus;
    const int b = key.chs.front(); // largest index, = 2l-1
    const int l = (b + 1) / 2;
    const std::vector<int> rest_ch = detail::without_one(key.chs, b);
    const Rat pref = bernoulli(2 * l) / factorial(2 * l);
    const Rat half(1, 2);

    std::vector<GrrTerm> terms;

    // kappa_{2l-1} term.
    {
        HodgeKey t{g, key.psi, detail::with_extra(key.kappas, b), rest_ch};
        t.canonicalize();
        terms.push_back({pref, std::move(t), std::nullopt});
    }

    // Irreducible boundary: genus drops by one, two new markings appear.
    if (g >= 1 && detail::stable_space(g - 1, key.n() + 2)) {
        for (int i = 0; i <= b - 1; ++i) {
            HodgeKey t{g - 1, detail::with_extra(detail::with_extra(key.psi, i), b - 1 - i), {}, rest_ch};
            t.canonicalize();
            Rat c = pref * half;
            if (i % 2 == 1) c = -c;
            terms.push_back({std::move(c), std::move(t), std::nullopt});
        }
    }

    // Reducible boundary: ordered genus splittings with every marking and ch
    // distribution.  For a fixed distribution at most one psi exponent i on
    // the new marking satisfies the first factor's dimension gate.
    const auto psi_splits = detail::multiset_splits(key.psi);
    const auto ch_splits = detail::multiset_splits(rest_ch);
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (const auto& ps : psi_splits) {
            const int n1 = static_cast<int>(ps.taken.size()) + 1;
            const int n2 = static_cast<int>(ps.rest.size()) + 1;
            if (!detail::stable_space(g1, n1) || !detail::stable_space(g2, n2)) continue;
            for (const auto& cs : ch_splits) {
                long ch1_sum = 0;
                for (int c : cs.taken) ch1_sum += c;
                const long i = (3 * g1 - 3 + n1) - ps.taken_sum - ch1_sum;
                if (i < 0 || i > b - 1) continue;
                HodgeKey first{g1, detail::with_extra(ps.taken, static_cast<int>(i)), {}, cs.taken};
                HodgeKey second{g2, detail::with_extra(ps.rest, static_cast<int>(b - 1 - i)), {}, cs.rest};
                if (second.degree() != second.dim()) continue;
                first.canonicalize();
                second.canonicalize();
                Rat c = pref * half * ps.ways * cs.ways;
                if (i % 2 == 1) c = -c;
                terms.push_back({std::move(c), std::move(first), std::move(second)});
            }
        }
    }
    return terms;
}

/// Elimination order for multiple kappa insertions; the result is
/// order-independent, which the test suite checks on random keys.
enum class KappaOrder { largest_first, smallest_first };

struct EngineOptions {
    KappaOrder kappa_order = KappaOrder::largest_first;
    /// Shortcut tau_0 / tau_1 insertions through the string and dilaton
    /// equations before falling back to the full recursion.  Disabled only by
    /// tests that use the plain recursion as an independent oracle.
    bool use_string_dilaton = true;
};

/// Exact evaluator for psi/kappa/ch/lambda integrals over Mbar_{g,n}.
///
/// Evaluation is a pure function of the key; all state is the memo table,
/// which follows the write-once concurrent contract of IntegralCache.
class Engine {
public:
    Engine() = default;
    explicit Engine(EngineOptions opt) : opt_(opt) {}

    /// <tau_{k_1} ... tau_{k_n}>_g, exactly; zero when the dimension gate fails.
    Rat psi_integral(const PsiKey& key) {
        for (int e : key.exps)
            if (e < 0) throw domain_error("psi_integral: negative exponent");
        return eval(HodgeKey{key.genus, key.exps, {}, {}});
    }

    /// Psi integral with kappa insertions eliminated one at a time.
    Rat kappa_psi_integral(const KappaPsiKey& key) {
        for (int e : key.exps)
            if (e < 0) throw domain_error("kappa_psi_integral: negative exponent");
        for (int a : key.kappas)
            if (a < 1) throw domain_error("kappa_psi_integral: kappa index must be positive");
        return eval(HodgeKey{key.genus, key.exps, key.kappas, {}});
    }

    /// Integral of a psi-lambda monomial, via conversion to Chern characters
    /// and repeated GRR reduction.
    Rat hodge_integral(const LambdaMonomial& mono) {
        if (mono.genus < 0) throw domain_error("hodge_integral: negative genus");
        if (static_cast<int>(mono.lambda.size()) > mono.genus)
            throw domain_error("hodge_integral: lambda index exceeds genus");
        for (int e : mono.psi)
            if (e < 0) throw domain_error("hodge_integral: negative psi exponent");
        for (int e : mono.lambda)
            if (e < 0) throw domain_error("hodge_integral: negative lambda exponent");
        if (!detail::stable_space(mono.genus, static_cast<int>(mono.psi.size())))
            throw domain_error("hodge_integral: unstable (g,n)");

        long degree = 0;
        for (int e : mono.psi) degree += e;
        for (size_t j = 0; j < mono.lambda.size(); ++j)
            degree += static_cast<long>(j + 1) * mono.lambda[j];
        if (degree != 3 * mono.genus - 3 + static_cast<long>(mono.psi.size())) return Rat(0);

        std::string memo_key = HodgeKey{mono.genus, mono.psi, {}, {}}.text() + "|lam:";
        {
            std::vector<int> lam = mono.lambda;
            for (size_t j = 0; j < lam.size(); ++j)
                memo_key += (j ? "," : "") + std::to_string(lam[j]);
        }
        {
            std::lock_guard<std::mutex> lock(mono_mutex_);
            auto it = mono_cache_.find(memo_key);
            if (it != mono_cache_.end()) return it->second;
        }

        ChPoly poly = lambda_to_ch(mono);
        Rat total(0);
        for (const auto& [m, c] : poly.terms) {
            HodgeKey key{mono.genus, mono.psi, {}, m};
            key.canonicalize();
            total += c * eval_internal(key);
        }
        std::lock_guard<std::mutex> lock(mono_mutex_);
        auto [it, fresh] = mono_cache_.emplace(memo_key, total);
        if (!fresh && it->second != total)
            throw integrity_error("hodge_integral: conflicting memo values for " + memo_key);
        return total;
    }

    /// Fully validated evaluation of a canonical key.
    Rat eval(HodgeKey key) {
        if (key.genus < 0) throw domain_error("eval: negative genus");
        for (int e : key.psi)
            if (e < 0) throw domain_error("eval: negative psi exponent");
        for (int a : key.kappas)
            if (a < 1) throw domain_error("eval: kappa index must be positive");
        for (int b : key.chs)
            if (b < 0) throw domain_error("eval: negative ch index");
        if (!key.stable())
            throw domain_error("eval: unstable (g,n) = (" + std::to_string(key.genus) + "," +
                               std::to_string(key.n()) + ")");
        key.canonicalize();
        return eval_canonical(key);
    }

    /// One-point integral over Mbar_{g,1} of psi_1^a lambda_j (j = 0 meaning
    /// no lambda factor).
    Rat one_point(int g, int psi_exp, int lambda_index) {
        LambdaMonomial mono;
        mono.genus = g;
        mono.psi = {psi_exp};
        if (lambda_index > 0) {
            mono.lambda.assign(lambda_index, 0);
            mono.lambda[lambda_index - 1] = 1;
        }
        return hodge_integral(mono);
    }

    /// f_xi(t) through order t^{2G}: coefficient of t^{2g} is
    /// sum_i xi^i int psi^{2g-2+i} lambda_{g-i}.
    Series capped_lambda_series(long xi, int max_genus) {
        if (max_genus < 1) throw domain_error("capped_lambda_series: max genus must be >= 1");
        Series f(2 * max_genus);
        f[0] = Rat(1);
        for (int g = 1; g <= max_genus; ++g) {
            Rat acc(0);
            for (int i = 0; i <= g; ++i) acc += pow(Rat(xi), i) * one_point(g, 2 * g - 2 + i, g - i);
            f[2 * g] = acc;
        }
        return f;
    }

    /// F(t,k) through order t^{2G}: coefficient of t^{2g} is the polynomial
    /// sum_i k^i int psi^{2g-2+i} lambda_{g-i}, of k-degree at most g.
    KSeries F_table(int max_genus) {
        if (max_genus < 1) throw domain_error("F_table: max genus must be >= 1");
        KSeries f(2 * max_genus);
        f[0] = KPoly(1);
        for (int g = 1; g <= max_genus; ++g) {
            std::vector<Rat> coeffs(g + 1);
            for (int i = 0; i <= g; ++i) coeffs[i] = one_point(g, 2 * g - 2 + i, g - i);
            KPoly p(std::move(coeffs));
            if (p.degree() > g) throw integrity_error("F_table: k-degree bound violated");
            f[2 * g] = std::move(p);
        }
        return f;
    }

    IntegralCache& cache() { return cache_; }
    const IntegralCache& cache() const { return cache_; }

private:
    /// Internal recursion entry: canonicalizes and drops unstable strata.
    Rat eval_internal(HodgeKey key) {
        key.canonicalize();
        if (!key.stable()) return Rat(0);
        return eval_canonical(key);
    }

    Rat eval_canonical(const HodgeKey& key) {
        // ch_0(E) insertions scale by the rank g.
        if (!key.chs.empty() && key.chs.back() == 0) {
            HodgeKey stripped = key;
            int zeros = 0;
            while (!stripped.chs.empty() && stripped.chs.back() == 0) {
                stripped.chs.pop_back();
                ++zeros;
            }
            return pow(Rat(key.genus), zeros) * eval_canonical(stripped);
        }
        for (int b : key.chs)
            if (b % 2 == 0) return Rat(0); // even components vanish
        if (key.degree() != key.dim()) return Rat(0);

        if (auto hit = cache_.find(key)) return *hit;
        Rat value = !key.kappas.empty() ? eval_kappa(key)
                  : !key.chs.empty()    ? eval_ch(key)
                                        : eval_psi(key);
        cache_.insert(key, value);
        return value;
    }

    /// Mumford-convention kappa exchange: kappa_a trades for a new marking
    /// with psi exponent a+1 minus one correction per existing marking, with
    /// remaining kappa and ch insertions carried through unchanged (the Hodge
    /// bundle and the Mumford kappas pull back along the forgetful map up to
    /// terms killed by the new marking's psi power).
    Rat eval_kappa(const HodgeKey& key) {
        const int a = opt_.kappa_order == KappaOrder::largest_first ? key.kappas.front() : key.kappas.back();
        const std::vector<int> rest = detail::without_one(key.kappas, a);

        Rat total = eval_internal(HodgeKey{key.genus, detail::with_extra(key.psi, a + 1), rest, key.chs});
        int prev = -1;
        for (size_t j = 0; j < key.psi.size(); ++j) {
            const int v = key.psi[j];
            if (v == prev) continue; // one correction per distinct value, weighted
            prev = v;
            const long mult = std::count(key.psi.begin(), key.psi.end(), v);
            Rat corr = eval_internal(HodgeKey{key.genus, detail::with_replaced(key.psi, v, v + a), rest, key.chs});
            total -= Rat(mult) * corr;
        }
        return total;
    }

    Rat eval_ch(const HodgeKey& key) {
        Rat total(0);
        for (const GrrTerm& term : grr_step(key)) {
            Rat v = eval_internal(term.first);
            if (v.is_zero()) continue;
            if (term.second) v *= eval_internal(*term.second);
            total += term.coeff * v;
        }
        return total;
    }

    // --- pure psi layer -----------------------------------------------------

    Rat psi_rec(int g, std::vector<int> psi) {
        return eval_internal(HodgeKey{g, std::move(psi), {}, {}});
    }

    /// Witten-conjecture values by the genus-recursive KdV/Virasoro recursion,
    /// with string/dilaton shortcuts for tau_0/tau_1 insertions.  Seeds:
    /// <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
    Rat eval_psi(const HodgeKey& key) {
        const int g = key.genus;
        const std::vector<int>& d = key.psi;
        const int n = key.n();

        if (g == 0 && n == 3) return Rat(1); // gate forces all exponents zero
        if (g == 1 && n == 1) return Rat(1, 24); // gate forces the exponent 1

        if (opt_.use_string_dilaton && n >= 2) {
            if (d.back() == 0) { // string equation
                Rat total(0);
                std::vector<int> rest = d;
                rest.pop_back();
                int prev = -1;
                for (size_t j = 0; j < rest.size(); ++j) {
                    const int v = rest[j];
                    if (v == prev || v == 0) continue;
                    prev = v;
                    const long mult = std::count(rest.begin(), rest.end(), v);
                    total += Rat(mult) * psi_rec(g, detail::with_replaced(rest, v, v - 1));
                }
                return total;
            }
            if (d.back() == 1) { // dilaton equation
                std::vector<int> rest = d;
                rest.pop_back();
                assert(detail::stable_space(g, n - 1));
                return Rat(2 * g - 2 + (n - 1)) * psi_rec(g, rest);
            }
        }

        // Main recursion on the largest exponent k+1.
        const int k = d.front() - 1;
        assert(k >= 0);
        const std::vector<int> rest(d.begin() + 1, d.end());
        const int nr = static_cast<int>(rest.size());

        Rat total(0);
        // Joining the new insertion with one of the remaining markings.
        {
            int prev = -1;
            for (int j = 0; j < nr; ++j) {
                const int v = rest[j];
                if (v == prev) continue;
                prev = v;
                const long mult = std::count(rest.begin(), rest.end(), v);
                Rat w = double_factorial(2 * (k + v) + 1) / double_factorial(2 * v - 1);
                total += Rat(mult) * w * psi_rec(g, detail::with_replaced(rest, v, k + v));
            }
        }

        // Boundary terms.
        const auto splits = detail::multiset_splits(rest);
        const Rat half(1, 2);
        for (int a = 0; a <= k - 1; ++a) {
            const int b = k - 1 - a;
            const Rat w = double_factorial(2 * a + 1) * double_factorial(2 * b + 1) * half;

            if (g >= 1 && detail::stable_space(g - 1, nr + 2))
                total += w * psi_rec(g - 1, detail::with_extra(detail::with_extra(rest, a), b));

            for (int g1 = 0; g1 <= g; ++g1) {
                const int g2 = g - g1;
                for (const auto& sp : splits) {
                    const int n1 = static_cast<int>(sp.taken.size()) + 1;
                    const int n2 = static_cast<int>(sp.rest.size()) + 1;
                    if (!detail::stable_space(g1, n1) || !detail::stable_space(g2, n2)) continue;
                    if (sp.taken_sum + a != 3 * g1 - 3 + n1) continue; // factor dimension gate
                    Rat left = psi_rec(g1, detail::with_extra(sp.taken, a));
                    if (left.is_zero()) continue;
                    Rat right = psi_rec(g2, detail::with_extra(sp.rest, b));
                    total += w * sp.ways * left * right;
                }
            }
        }
        return total / double_factorial(2 * k + 3);
    }

    EngineOptions opt_;
    IntegralCache cache_;
    std::mutex mono_mutex_;
    std::unordered_map<std::string, Rat> mono_cache_;
};

} // namespace hodgeint
