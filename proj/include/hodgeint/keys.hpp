#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hodgeint/errors.hpp"

namespace hodgeint {

/// Pure psi-integral descriptor: <tau_{k_1} ... tau_{k_n}>_g.
struct PsiKey {
    int genus = 0;
    std::vector<int> exps; // one entry per marking
};

/// Psi-integral with kappa-class insertions (indices of kappa_a, a >= 1).
struct KappaPsiKey {
    int genus = 0;
    std::vector<int> exps;
    std::vector<int> kappas;
};

/// psi^k lambda-monomial descriptor over Mbar_{g,n}; lambda[j-1] is the
/// exponent of lambda_j.
struct LambdaMonomial {
    int genus = 0;
    std::vector<int> psi;
    std::vector<int> lambda;
};

/// Canonical descriptor of an integral over Mbar_{g,n}: psi exponents per
/// marking, kappa indices and Chern-character indices of the Hodge bundle.
/// Lists are kept sorted descending; integrals are symmetric in markings.
struct HodgeKey {
    int genus = 0;
    std::vector<int> psi;
    std::vector<int> kappas;
    std::vector<int> chs;

    int n() const { return static_cast<int>(psi.size()); }
    int dim() const { return 3 * genus - 3 + n(); }
    bool stable() const { return 2 * genus - 2 + n() > 0; }
    long degree() const {
        auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
        return sum(psi) + sum(kappas) + sum(chs);
    }

    void canonicalize() {
        std::sort(psi.begin(), psi.end(), std::greater<int>());
        std::sort(kappas.begin(), kappas.end(), std::greater<int>());
        std::sort(chs.begin(), chs.end(), std::greater<int>());
    }

    friend bool operator==(const HodgeKey& a, const HodgeKey& b) {
        return a.genus == b.genus && a.psi == b.psi && a.kappas == b.kappas && a.chs == b.chs;
    }

    /// Canonical textual form "g|psi:...|kappa:...|ch:..." used by the cache file.
    std::string text() const {
        std::ostringstream os;
        os << genus << "|psi:";
        append_list(os, psi);
        os << "|kappa:";
        append_list(os, kappas);
        os << "|ch:";
        append_list(os, chs);
        return os.str();
    }

private:
    static void append_list(std::ostringstream& os, const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
    }
};

struct HodgeKeyHash {
    size_t operator()(const HodgeKey& k) const {
        size_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](size_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        mix(static_cast<size_t>(k.genus));
        mix(0x7001);
        for (int e : k.psi) mix(static_cast<size_t>(e) + 1);
        mix(0x7002);
        for (int e : k.kappas) mix(static_cast<size_t>(e) + 1);
        mix(0x7003);
        for (int e : k.chs) mix(static_cast<size_t>(e) + 1);
        return h;
    }
};

inline HodgeKey parse_hodge_key(const std::string& text) {
    auto parse_list = [](const std::string& body) {
        std::vector<int> v;
        std::string cur;
        std::istringstream is(body);
        while (std::getline(is, cur, ',')) {
            if (cur.empty()) throw domain_error("parse_hodge_key: empty list entry");
            v.push_back(std::stoi(cur));
        }
        return v;
    };
    auto expect = [&text](size_t pos, const std::string& tag) {
        if (text.compare(pos, tag.size(), tag) != 0)
            throw domain_error("parse_hodge_key: malformed key \"" + text + "\"");
        return pos + tag.size();
    };

    size_t bar = text.find('|');
    if (bar == std::string::npos) throw domain_error("parse_hodge_key: malformed key \"" + text + "\"");
    HodgeKey key;
    key.genus = std::stoi(text.substr(0, bar));

    size_t psi_at = expect(bar + 1, "psi:");
    size_t bar2 = text.find('|', psi_at);
    size_t kappa_at = expect(bar2 + 1, "kappa:");
    size_t bar3 = text.find('|', kappa_at);
    size_t ch_at = expect(bar3 + 1, "ch:");

    key.psi = parse_list(text.substr(psi_at, bar2 - psi_at));
    key.kappas = parse_list(text.substr(kappa_at, bar3 - kappa_at));
    key.chs = parse_list(text.substr(ch_at));
    key.canonicalize();
    return key;
}

} // namespace hodgeint
