#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "qgalois/errors.hpp"

namespace qgalois {

/// Exact rational scalar, arbitrary precision.
/// Invariants: stored reduced, denominator positive. Division by zero and
/// inversion of zero raise Error instead of trapping inside GMP.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}  // implicit by design: integer literals act as scalars
    Scalar(long num, long den) {
        if (den == 0) throw Error("scalar with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Accepts "p" or "p/q" in base 10, optional leading sign.
    static Scalar from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
        if (sgn(v.get_den()) == 0) throw Error("rational literal with zero denominator: " + s);
        v.canonicalize();
        return Scalar(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }

    Scalar& operator+=(const Scalar& o) {
        v_ += o.v_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        v_ -= o.v_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        v_ *= o.v_;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw Error("division of scalar by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw Error("inverse of zero scalar");
        return Scalar(mpq_class(1 / v_));
    }

    /// Integer power; negative exponents require a nonzero base.
    Scalar pow(long e) const {
        if (e == 0) return Scalar(1);
        if (e < 0) return inverse().pow(-e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        // r stays canonical: gcd(p,q) = 1 gives gcd(p^e,q^e) = 1, and q^e > 0
        return Scalar(std::move(r));
    }

    /// "p" or "p/q", reduced, '-' on the numerator.
    std::string str() const { return v_.get_str(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace qgalois
