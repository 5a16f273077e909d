#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace flarl {

// Arbitrary-precision rational, always kept in canonical lowest terms with a
// positive denominator. Thin value wrapper over GMP's mpq_class; everything
// the kit computes exactly flows through this type.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}          // NOLINT: implicit by design
    Rational(int n) : q_(n) {}           // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-' on the numerator.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational reciprocal() const;

    // Exact integer power; negative exponents invert (base must be nonzero).
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // True iff the value is the square of a rational; sqrt() requires it.
    bool is_perfect_square() const;
    Rational sqrt() const;

    double to_double() const { return q_.get_d(); }

    // Lowest terms, "p" or "p/q", sign on the numerator.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n choose k as an exact integer-valued rational; k outside [0, n] gives 0.
Rational binomial(unsigned n, unsigned k);

Rational factorial(unsigned n);

} // namespace flarl
