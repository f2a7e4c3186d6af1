#pragma once

#include "refasm/errors.hpp"
#include "refasm/exactnum/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace refasm::qcalc {

/// The deformation parameter q over a coefficient field F.
/**
 * q = 1 is rejected at construction. Vanishing of 1 - q^k for larger k is
 * detected where a division by it actually happens.
 */
template <class F>
class QContext {
public:
    /// Throws DegenerateQ for q = 1.
    explicit QContext(F q) : q_(std::move(q))
    {
        if (q_ == F(1)) {
            throw DegenerateQ("q = 1");
        }
    }

    const F& q() const { return q_; }

    /// q^k for k >= 0, memoized.
    const F& power(std::size_t k) const
    {
        if (powers_.empty()) {
            powers_.push_back(F(1));
        }
        while (powers_.size() <= k) {
            powers_.push_back(powers_.back() * q_);
        }
        return powers_[k];
    }

    /// [k]_q = 1 + q + ... + q^{k-1} = (1 - q^k)/(1 - q).
    F bracket(std::size_t k) const
    {
        F acc(0);
        for (std::size_t i = 0; i < k; ++i) {
            acc += power(i);
        }
        return acc;
    }

private:
    F q_;
    mutable std::vector<F> powers_;
};

/// (a)_n = (1 - a)(1 - qa)...(1 - q^{n-1} a); (a)_0 = 1.
template <class F>
F q_pochhammer(const QContext<F>& ctx, const F& a, std::size_t n)
{
    F r(1);
    for (std::size_t i = 0; i < n; ++i) {
        r = r * (F(1) - ctx.power(i) * a);
    }
    return r;
}

/// D_q p = (p(x) - p(qx))/((1-q)x), applied monomialwise:
/// x^a -> [a]_q x^{a-1}.
template <class F>
Poly<F> q_derivative(const QContext<F>& ctx, const Poly<F>& p)
{
    auto c = p.coefficients();
    if (c.size() <= 1) {
        return Poly<F>();
    }
    std::vector<F> out(c.size() - 1, F(0));
    F bracket(1);
    for (std::size_t a = 1; a < c.size(); ++a) {
        out[a - 1] = bracket * c[a];
        bracket = bracket + ctx.power(a);
    }
    return Poly<F>(std::move(out));
}

template <class F>
Poly<F> q_derivative_n(const QContext<F>& ctx, Poly<F> p, std::size_t n)
{
    for (std::size_t i = 0; i < n && !p.is_zero_poly(); ++i) {
        p = q_derivative(ctx, p);
    }
    return p;
}

/// Normalized Jackson integral (1/(1-q)) * int_c^d p(x) d_q x.
/**
 * Evaluated termwise: x^a contributes (d^{a+1} - c^{a+1})/(1 - q^{a+1}).
 * Throws DegenerateQ when 1 - q^{a+1} vanishes for a degree a present in p.
 */
template <class F>
F jackson_integral(const QContext<F>& ctx, const Poly<F>& p, const F& c, const F& d)
{
    auto coeffs = p.coefficients();
    F acc(0);
    F cp = c;
    F dp = d;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        if (!is_zero(coeffs[a])) {
            F denom = F(1) - ctx.power(a + 1);
            if (is_zero(denom)) {
                throw DegenerateQ("1 - q^" + std::to_string(a + 1) + " = 0");
            }
            acc += coeffs[a] * (dp - cp) / denom;
        }
        cp = cp * c;
        dp = dp * d;
    }
    return acc;
}

} // namespace refasm::qcalc
