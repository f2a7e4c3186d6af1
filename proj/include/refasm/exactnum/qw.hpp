#pragma once

#include "refasm/exactnum/rational.hpp"

#include <iosfwd>
#include <string>

namespace refasm {

/// Element re + im*sqrt(-3) of the quadratic field Q(sqrt(-3)).
class Qw {
public:
    Qw() = default;
    Qw(int v) : re_(v) {}
    Qw(Rational re) : re_(std::move(re)) {}
    Qw(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// sqrt(-3) itself.
    static Qw sqrt_minus3() { return Qw(Rational(0), Rational(1)); }
    /// w = (1 + sqrt(-3))/2, a primitive sixth root of unity.
    static Qw w() { return Qw(Rational(1, 2), Rational(1, 2)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    Qw conjugate() const { return Qw(re_, -im_); }
    /// re^2 + 3 im^2; multiplicative.
    Rational norm() const { return re_ * re_ + Rational(3) * im_ * im_; }
    /// Throws DivisionByZero for zero.
    Qw inverse() const;
    Qw pow(long exponent) const;

    /// "a+b*r3" where r3 stands for sqrt(-3); a and b use the rational
    /// serialization ("-1/2+3*r3", "0+0*r3", "2+-1/2*r3").
    std::string to_string() const;

    Qw& operator+=(const Qw& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Qw& operator-=(const Qw& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Qw& operator*=(const Qw& o);
    Qw& operator/=(const Qw& o) { return *this *= o.inverse(); }

    friend Qw operator+(Qw a, const Qw& b) { return a += b; }
    friend Qw operator-(Qw a, const Qw& b) { return a -= b; }
    friend Qw operator*(Qw a, const Qw& b) { return a *= b; }
    friend Qw operator/(Qw a, const Qw& b) { return a /= b; }
    Qw operator-() const { return Qw(-re_, -im_); }

    friend bool operator==(const Qw&, const Qw&) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Qw& z);

inline bool is_zero(const Qw& z) { return z.is_zero(); }

/// w^k for w = e^{i pi/3} = (1 + sqrt(-3))/2; any integer k.
Qw qw_pow_w(long k);

} // namespace refasm
