// Exact rational scalar backed by GMP. Always reduced, denominator > 0,
// canonical zero is 0/1. All symbolic computation in the workbench runs on
// this type; doubles only enter through the explicit numeric layer.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "workbench/errors.hpp"

namespace workbench {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) { init(n, d); }
    explicit Rational(const mpq_class& q) : v_(q) {
        if (v_.get_den() == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q"; q must be a positive integer literal.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominatorError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const { return Rational(1) / *this; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    double to_double() const { return v_.get_d(); }

private:
    void init(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    mpq_class v_;
};

}  // namespace workbench
