#pragma once

#include <vector>

#include "hodgeint/errors.hpp"
#include "hodgeint/rational.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

/// Polynomial in the formal variable k with Rat coefficients.
///
/// Canonical form: the highest stored coefficient is nonzero; the zero
/// polynomial is the empty array.
class KPoly {
public:
    KPoly() = default;
    KPoly(long c) { // NOLINT: constants embed
        if (c != 0) c_.push_back(Rat(c));
    }
    explicit KPoly(Rat c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit KPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static KPoly k() { return KPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    KPoly& operator+=(const KPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    KPoly& operator-=(const KPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    KPoly& operator*=(const KPoly& o) { *this = *this * o; return *this; }
    KPoly& operator*=(const Rat& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend KPoly operator+(KPoly a, const KPoly& b) { a += b; return a; }
    friend KPoly operator-(KPoly a, const KPoly& b) { a -= b; return a; }
    friend KPoly operator*(KPoly a, const Rat& s) { a *= s; return a; }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        if (a.is_zero() || b.is_zero()) return KPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return KPoly(std::move(r));
    }

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Truncated power series in t with KPoly coefficients: the home of F(t,k).
using KSeries = SeriesT<KPoly>;

/// Evaluates every coefficient at an integer k, producing an ordinary Series.
inline Series kseries_eval(const KSeries& f, long k) {
    Series r(f.order());
    for (int m = 0; m <= f.order(); ++m) r[m] = f[m].eval(Rat(k));
    return r;
}

/// Largest k-degree appearing among the t^m coefficients with m <= bound.
inline int kseries_kdegree(const KSeries& f, int m) { return f[m].degree(); }

/// a(t)^{k+1} = exp((k+1) log a) as a KSeries; requires constant term 1.
///
/// The t^{2g} coefficient automatically has k-degree <= g because log a has
/// no constant or linear term for the even series this library feeds in; for
/// general input the degree is bounded by the t-valuation of log a.
inline KSeries series_pow_kplus1(const Series& a) {
    if (a[0] != Rat(1)) throw domain_error("series_pow_kplus1: constant term must be 1");
    const int order = a.order();
    Series log_a = series_log(a);
    KSeries result(order);
    result[0] = KPoly(1);

    Series power = Series::one(order); // log(a)^j / j!
    KPoly k_plus_1 = KPoly(1) + KPoly::k();
    KPoly k_power(1); // (k+1)^j
    for (int j = 1; j <= order; ++j) {
        power = power * log_a;
        power *= Rat(1, j);
        k_power *= k_plus_1;
        bool all_zero = true;
        for (int m = 0; m <= order; ++m) {
            if (power[m].is_zero()) continue;
            all_zero = false;
            result[m] += k_power * power[m];
        }
        if (all_zero) break;
    }
    return result;
}

} // namespace hodgeint
