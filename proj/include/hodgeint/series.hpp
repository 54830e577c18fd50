#pragma once

#include <string>
#include <vector>

#include "hodgeint/arith.hpp"
#include "hodgeint/errors.hpp"
#include "hodgeint/rational.hpp"

namespace hodgeint {

/// Truncated formal power series with coefficients in a commutative ring C.
///
/// A series carries its truncation order as part of its identity: coeffs has
/// length exactly order+1 and trailing zeros are kept.  Binary operations
/// insist on equal orders -- silent re-truncation is how wrong "identities"
/// get verified, so mixed orders are a hard error.
template <class C>
class SeriesT {
public:
    explicit SeriesT(int order) : order_(check_order(order)), c_(order + 1) {}
    SeriesT(int order, std::vector<C> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != order_ + 1)
            throw domain_error("Series: coefficient count must be order+1");
    }

    static SeriesT one(int order) {
        SeriesT s(order);
        s.c_[0] = C(1);
        return s;
    }

    int order() const { return order_; }
    const C& operator[](int m) const { return c_.at(m); }
    C& operator[](int m) { return c_.at(m); }
    const std::vector<C>& coeffs() const { return c_; }

    SeriesT& operator+=(const SeriesT& o) {
        require_same_order(o);
        for (int m = 0; m <= order_; ++m) c_[m] += o.c_[m];
        return *this;
    }
    SeriesT& operator-=(const SeriesT& o) {
        require_same_order(o);
        for (int m = 0; m <= order_; ++m) c_[m] -= o.c_[m];
        return *this;
    }
    SeriesT& operator*=(const C& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend SeriesT operator+(SeriesT a, const SeriesT& b) { a += b; return a; }
    friend SeriesT operator-(SeriesT a, const SeriesT& b) { a -= b; return a; }
    friend SeriesT operator*(SeriesT a, const C& s) { a *= s; return a; }

    /// Cauchy product truncated at the common order.
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        a.require_same_order(b);
        SeriesT r(a.order_);
        for (int m = 0; m <= a.order_; ++m) {
            C acc{};
            for (int i = 0; i <= m; ++i) acc += a.c_[i] * b.c_[m - i];
            r.c_[m] = acc;
        }
        return r;
    }

    friend bool operator==(const SeriesT& a, const SeriesT& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SeriesT& a, const SeriesT& b) { return !(a == b); }

private:
    static int check_order(int order) {
        if (order < 0) throw domain_error("Series: negative order");
        return order;
    }
    void require_same_order(const SeriesT& o) const {
        if (order_ != o.order_)
            throw domain_error("Series: order mismatch (" + std::to_string(order_) + " vs " +
                               std::to_string(o.order_) + ")");
    }

    int order_;
    std::vector<C> c_;
};

using Series = SeriesT<Rat>;

/// Multiplicative inverse to the stored order; the constant term must be a unit.
inline Series series_inverse(const Series& a) {
    if (a[0].is_zero()) throw singularity_error("series_inverse: constant term is zero");
    Series b(a.order());
    b[0] = Rat(1) / a[0];
    for (int m = 1; m <= a.order(); ++m) {
        Rat s(0);
        for (int i = 1; i <= m; ++i) s += a[i] * b[m - i];
        b[m] = -s / a[0];
    }
    return b;
}

/// Formal logarithm; requires constant term 1.  Standard formal-ODE recurrence.
inline Series series_log(const Series& a) {
    if (a[0] != Rat(1)) throw domain_error("series_log: constant term must be 1");
    Series l(a.order());
    for (int m = 1; m <= a.order(); ++m) {
        Rat s(0);
        for (int k = 1; k < m; ++k) s += Rat(k) * l[k] * a[m - k];
        l[m] = a[m] - s / Rat(m);
    }
    return l;
}

/// Formal exponential; requires constant term 0.
inline Series series_exp(const Series& a) {
    if (!a[0].is_zero()) throw domain_error("series_exp: constant term must be 0");
    Series e(a.order());
    e[0] = Rat(1);
    for (int m = 1; m <= a.order(); ++m) {
        Rat s(0);
        for (int k = 1; k <= m; ++k) s += Rat(k) * a[k] * e[m - k];
        e[m] = s / Rat(m);
    }
    return e;
}

/// a^e for integer e via repeated multiplication (negative e through inversion).
inline Series series_pow_int(const Series& a, long e) {
    Series base = e < 0 ? series_inverse(a) : a;
    if (e < 0) e = -e;
    Series acc = Series::one(a.order());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

/// Substitutes t -> it in an even series: the t^{2j} coefficient flips sign
/// for odd j.  Storage stays rational; odd coefficients must vanish.
inline Series substitute_it(const Series& a) {
    Series r = a;
    for (int m = 1; m <= a.order(); ++m) {
        if (m % 2 == 1) {
            if (!a[m].is_zero())
                throw domain_error("substitute_it: series has an odd-degree term");
            continue;
        }
        if ((m / 2) % 2 == 1) r[m] = -a[m];
    }
    return r;
}

/// sin(t/2) / (t/2) = sum_j (-1)^j t^{2j} / (4^j (2j+1)!).
inline Series sin_half_over_half(int order) {
    Series s(order);
    for (int j = 0; 2 * j <= order; ++j) {
        Rat c = Rat(1) / (pow(Rat(4), j) * factorial(2 * j + 1));
        s[2 * j] = (j % 2 == 0) ? c : -c;
    }
    return s;
}

/// (t/2) / sin(t/2), built two independent ways and cross-checked:
/// (i)  1 + sum_g (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)! t^{2g},
/// (ii) term-by-term inversion of the sine expansion.
/// A mismatch signals a Bernoulli-convention bug and is fatal.
inline Series sinc_half_inverse(int order) {
    Series closed(order);
    closed[0] = Rat(1);
    for (int g = 1; 2 * g <= order; ++g) {
        Rat p = pow(Rat(2), 2 * g - 1);
        closed[2 * g] = (p - Rat(1)) / p * abs(bernoulli(2 * g)) / factorial(2 * g);
    }
    Series inverted = series_inverse(sin_half_over_half(order));
    if (closed != inverted)
        throw integrity_error("sinc_half_inverse: Bernoulli closed form disagrees with sine inversion");
    return closed;
}

} // namespace hodgeint
