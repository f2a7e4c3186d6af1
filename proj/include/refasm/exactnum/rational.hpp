#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace refasm {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction with canonical representation.
/**
 * The denominator is always positive and coprime to the numerator; zero is
 * stored as 0/1. Every constructor and arithmetic result is canonicalized
 * eagerly, so structural equality is value equality.
 */
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v);
    Rational(const Integer& v) : value_(v) {}
    /// Throws DivisionByZero when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p" or "p/q" with optional leading sign. Decimal points and
    /// exponents are rejected.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    /// Throws DivisionByZero for zero.
    Rational inverse() const;
    /// Integer power; negative exponents invert (throws on 0^-k).
    Rational pow(long exponent) const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(unsigned long n);

/// Rising factorial a(a+1)...(a+n-1).
Rational rising_factorial(const Rational& a, unsigned long n);

} // namespace refasm
