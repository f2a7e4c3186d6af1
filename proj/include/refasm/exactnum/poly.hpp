#pragma once

#include "refasm/errors.hpp"
#include "refasm/exactnum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace refasm {

namespace detail {

// Rational-coefficient kernels routed through integer Kronecker substitution.
std::vector<Rational> mul_rational(std::span<const Rational> a, std::span<const Rational> b);
// Throws NonzeroRemainder when b does not divide a.
std::vector<Rational> exact_div_rational(std::span<const Rational> a, std::span<const Rational> b);

} // namespace detail

/// Dense univariate polynomial over a field (or integral domain) F.
/**
 * Coefficient i multiplies x^i. Trailing zeros are trimmed after every
 * operation, so a nonzero polynomial always has a nonzero leading
 * coefficient and the zero polynomial has no coefficients at all.
 *
 * F must be constructible from int, support + - * and ==, and provide an
 * ADL-visible is_zero(const F&). Division-based operations additionally
 * need operator/.
 */
template <class F>
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(int c) : Poly(F(c)) {}
    Poly(F c)
    {
        if (!is_zero(c)) {
            coeffs_.push_back(std::move(c));
        }
    }
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(F(1), 1); }
    static Poly monomial(F c, std::size_t k)
    {
        if (is_zero(c)) {
            return Poly();
        }
        std::vector<F> v(k + 1, F(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i; zero beyond the degree.
    F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
    const F& leading() const { return coeffs_.back(); }
    std::span<const F> coefficients() const { return coeffs_; }

    F eval(const F& point) const
    {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * point + *it;
        }
        return acc;
    }

    /// p(c x).
    Poly scale_arg(const F& c) const
    {
        std::vector<F> v = coeffs_;
        F power(1);
        for (auto& a : v) {
            a = a * power;
            power = power * c;
        }
        return Poly(std::move(v));
    }

    /// p(x^k).
    Poly substitute_power(std::size_t k) const
    {
        if (coeffs_.empty()) {
            return Poly();
        }
        std::vector<F> v((coeffs_.size() - 1) * k + 1, F(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v[i * k] = coeffs_[i];
        }
        return Poly(std::move(v));
    }

    /// Throws ZeroPolynomial for the zero polynomial.
    Poly monic() const
    {
        if (coeffs_.empty()) {
            throw ZeroPolynomial("monic() of the zero polynomial");
        }
        if (leading() == F(1)) {
            return *this;
        }
        F inv = F(1) / leading();
        std::vector<F> v = coeffs_;
        for (auto& a : v) {
            a = a * inv;
        }
        return Poly(std::move(v));
    }

    Poly pow(unsigned k) const
    {
        Poly result(1);
        Poly base = *this;
        while (k > 0) {
            if (k & 1u) {
                result *= base;
            }
            k >>= 1u;
            if (k > 0) {
                base *= base;
            }
        }
        return result;
    }

    template <class G, class Fn>
    Poly<G> map(Fn&& fn) const
    {
        std::vector<G> v;
        v.reserve(coeffs_.size());
        for (const auto& a : coeffs_) {
            v.push_back(fn(a));
        }
        return Poly<G>(std::move(v));
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), F(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            return Poly();
        }
        if constexpr (std::is_same_v<F, Rational>) {
            return Poly(detail::mul_rational(a.coeffs_, b.coeffs_));
        }
        std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const F& c, const Poly& p)
    {
        std::vector<F> v = p.coeffs_;
        for (auto& a : v) {
            a = c * a;
        }
        return Poly(std::move(v));
    }
    Poly operator-() const
    {
        std::vector<F> v = coeffs_;
        for (auto& a : v) {
            a = -a;
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero(coeffs_[i])) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << coeffs_[i] << ")";
            if (i >= 1) {
                os << "*" << var;
            }
            if (i >= 2) {
                os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Poly<F>& p)
{
    return p.is_zero_poly();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p)
{
    return os << p.to_string();
}

/// Euclidean division a = q*b + r with deg r < deg b. Throws
/// DivisionByZero when b is zero.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const Poly<F>& a, const Poly<F>& b)
{
    if (b.is_zero_poly()) {
        throw DivisionByZero("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly<F>(), a};
    }
    auto bc = b.coefficients();
    std::vector<F> rem(a.coefficients().begin(), a.coefficients().end());
    const std::size_t db = bc.size() - 1;
    std::vector<F> quot(rem.size() - db, F(0));
    const F& lead = bc.back();
    const bool unit_lead = lead == F(1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        F c = unit_lead ? rem[k + db] : rem[k + db] / lead;
        if (is_zero(c)) {
            continue;
        }
        for (std::size_t j = 0; j < db; ++j) {
            rem[k + j] -= c * bc[j];
        }
        rem[k + db] = F(0);
        quot[k] = std::move(c);
    }
    rem.resize(db);
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

/// Quotient q with a = q*b exactly. Throws NonzeroRemainder when b does not
/// divide a, DivisionByZero when b is zero.
template <class F>
Poly<F> poly_exact_div(const Poly<F>& a, const Poly<F>& b)
{
    if constexpr (std::is_same_v<F, Rational>) {
        if (b.is_zero_poly()) {
            throw DivisionByZero("polynomial division by zero");
        }
        return Poly<F>(detail::exact_div_rational(a.coefficients(), b.coefficients()));
    }
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero_poly()) {
        throw NonzeroRemainder("divisor of degree " + std::to_string(b.degree())
                               + " leaves a remainder of degree " + std::to_string(r.degree()));
    }
    return q;
}

/// Synthetic division by (x - point): returns (quotient, p(point)).
template <class F>
std::pair<Poly<F>, F> synthetic_division(const Poly<F>& p, const F& point)
{
    auto c = p.coefficients();
    if (c.empty()) {
        return {Poly<F>(), F(0)};
    }
    std::vector<F> q(c.size() - 1, F(0));
    F acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * point + c[i];
        if (i > 0) {
            q[i - 1] = acc;
        }
    }
    return {Poly<F>(std::move(q)), acc};
}

/// Largest k with (x - point)^k dividing p. Throws ZeroPolynomial for p = 0.
template <class F>
unsigned vanishing_order(const Poly<F>& p, const F& point)
{
    if (p.is_zero_poly()) {
        throw ZeroPolynomial("vanishing order of the zero polynomial");
    }
    unsigned k = 0;
    Poly<F> cur = p;
    for (;;) {
        auto [q, r] = synthetic_division(cur, point);
        if (!is_zero(r)) {
            return k;
        }
        cur = std::move(q);
        ++k;
    }
}

/// Divides out (x - point)^k; throws NonzeroRemainder if it does not divide.
template <class F>
Poly<F> remove_root_power(const Poly<F>& p, const F& point, unsigned k)
{
    Poly<F> cur = p;
    for (unsigned i = 0; i < k; ++i) {
        auto [q, r] = synthetic_division(cur, point);
        if (!is_zero(r)) {
            throw NonzeroRemainder("root multiplicity is below " + std::to_string(k));
        }
        cur = std::move(q);
    }
    return cur;
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero_poly()) {
        auto r = poly_divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero_poly() ? std::move(r) : r.monic();
    }
    return a.is_zero_poly() ? a : a.monic();
}

} // namespace refasm
