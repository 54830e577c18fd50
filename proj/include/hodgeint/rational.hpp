#pragma once

#include <gmpxx.h>

#include <string>

#include "hodgeint/errors.hpp"

namespace hodgeint {

/// Arbitrary-precision rational number, the universal scalar of the library.
///
/// Invariants: always stored in lowest terms, denominator strictly positive,
/// zero is 0/1.  All arithmetic is exact; there is deliberately no conversion
/// to floating point.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, integers embed in Q
    Rat(long num, long den) {
        if (den == 0) throw domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpz_class num, mpz_class den) {
        if (den == 0) throw domain_error("Rat: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    /// Parses "num/den" or "num" (lowest terms are restored if needed).
    explicit Rat(const std::string& s) {
        v_ = mpq_class(s, 10); // throws std::invalid_argument on bad input
        if (v_.get_den() == 0) throw domain_error("Rat: zero denominator in \"" + s + "\"");
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    /// Renders as "num/den" in lowest terms, or "num" for integers.
    std::string str() const { return v_.get_str(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

/// a^e for integer e; negative exponents require a nonzero base.
inline Rat pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    Rat base = a;
    if (e < 0) {
        if (a.is_zero()) throw domain_error("Rat: negative power of zero");
        base = Rat(1) / a;
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

} // namespace hodgeint
