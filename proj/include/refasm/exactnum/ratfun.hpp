#pragma once

#include "refasm/errors.hpp"
#include "refasm/exactnum/poly.hpp"
#include "refasm/exactnum/poly_rational.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace refasm {

/// Rational function num/den over a field F, kept in lowest terms.
/**
 * Invariants: den is monic and nonzero, gcd(num, den) = 1, and zero is 0/1.
 * Arithmetic uses the gcd-splitting formulas for sums and products so that
 * intermediate polynomials stay close to the size of the reduced result.
 */
template <class F>
class RatFun {
public:
    using PolyT = Poly<F>;

    RatFun() : den_(F(1)) {}
    RatFun(int c) : num_(F(c)), den_(F(1)) {}
    RatFun(F c) : num_(std::move(c)), den_(F(1)) {}
    RatFun(PolyT p) : num_(std::move(p)), den_(F(1)) {}
    /// Throws DivisionByZero when den is zero.
    RatFun(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero_poly()) {
            throw DivisionByZero("rational function with zero denominator");
        }
        normalize();
    }

    /// The indeterminate itself.
    static RatFun variable() { return RatFun(PolyT::x()); }

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws PoleHit when the reduced denominator vanishes at the point.
    F eval(const F& point) const
    {
        F d = den_.eval(point);
        if (refasm::is_zero(d)) {
            throw PoleHit("rational function evaluated at a pole");
        }
        return num_.eval(point) / d;
    }

    RatFun inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of the zero rational function");
        }
        RatFun r;
        F lead = num_.leading();
        F inv = F(1) / lead;
        r.num_ = inv * den_;
        r.den_ = inv * num_;
        return r;
    }

    RatFun pow(long k) const
    {
        if (k < 0) {
            return inverse().pow(-k);
        }
        RatFun r;
        r.num_ = num_.pow(static_cast<unsigned>(k));
        r.den_ = den_.pow(static_cast<unsigned>(k));
        return r;
    }

    RatFun& operator+=(const RatFun& o) { return *this = add(*this, o, false); }
    RatFun& operator-=(const RatFun& o) { return *this = add(*this, o, true); }
    RatFun& operator*=(const RatFun& o) { return *this = mul(*this, o); }
    RatFun& operator/=(const RatFun& o) { return *this = mul(*this, o.inverse()); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return mul(a, b); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return mul(a, b.inverse()); }
    RatFun operator-() const
    {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RatFun& a, const RatFun& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "s") const
    {
        if (is_polynomial()) {
            return num_.to_string(var);
        }
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero_poly()) {
            den_ = PolyT(F(1));
            return;
        }
        PolyT g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        make_den_monic();
    }

    void make_den_monic()
    {
        if (den_.leading() == F(1)) {
            return;
        }
        F inv = F(1) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }

    static RatFun add(const RatFun& a, const RatFun& b, bool subtract)
    {
        if (b.is_zero()) {
            return a;
        }
        if (a.is_zero()) {
            return subtract ? -b : b;
        }
        RatFun r;
        if (a.den_ == b.den_) {
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            if (r.num_.is_zero_poly()) {
                return RatFun();
            }
            PolyT g = poly_gcd(r.num_, a.den_);
            if (g.degree() > 0) {
                r.num_ = poly_exact_div(r.num_, g);
                r.den_ = poly_exact_div(a.den_, g);
            } else {
                r.den_ = a.den_;
            }
            r.make_den_monic();
            return r;
        }
        PolyT g = poly_gcd(a.den_, b.den_);
        PolyT bd = g.degree() > 0 ? poly_exact_div(b.den_, g) : b.den_;
        PolyT ad = g.degree() > 0 ? poly_exact_div(a.den_, g) : a.den_;
        PolyT t = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
        if (t.is_zero_poly()) {
            return RatFun();
        }
        if (g.degree() > 0) {
            PolyT g2 = poly_gcd(t, g);
            if (g2.degree() > 0) {
                t = poly_exact_div(t, g2);
                r.den_ = ad * poly_exact_div(b.den_, g2);
            } else {
                r.den_ = ad * b.den_;
            }
        } else {
            r.den_ = a.den_ * b.den_;
        }
        r.num_ = std::move(t);
        r.make_den_monic();
        return r;
    }

    static RatFun mul(const RatFun& a, const RatFun& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return RatFun();
        }
        PolyT g1 = poly_gcd(a.num_, b.den_);
        PolyT g2 = poly_gcd(b.num_, a.den_);
        RatFun r;
        auto reduce = [](const PolyT& p, const PolyT& g) {
            return g.degree() > 0 ? poly_exact_div(p, g) : p;
        };
        r.num_ = reduce(a.num_, g1) * reduce(b.num_, g2);
        r.den_ = reduce(a.den_, g2) * reduce(b.den_, g1);
        r.make_den_monic();
        return r;
    }

    PolyT num_;
    PolyT den_;
};

template <class F>
bool is_zero(const RatFun<F>& r)
{
    return r.is_zero();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const RatFun<F>& r)
{
    return os << r.to_string();
}

} // namespace refasm
