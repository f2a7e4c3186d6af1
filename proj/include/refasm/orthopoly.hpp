#pragma once

#include "refasm/errors.hpp"
#include "refasm/exactnum/matrix.hpp"
#include "refasm/exactnum/poly.hpp"
#include "refasm/exactnum/ratfun_matrix.hpp"
#include "refasm/qcalc.hpp"

#include <functional>
#include <type_traits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace refasm::orthopoly {

/// Moments c_i = T(x^i) of a linear functional, produced on demand and
/// cached. A cached instance must not be shared between threads.
template <class F>
class MomentSeq {
public:
    using Generator = std::function<F(std::size_t)>;

    explicit MomentSeq(Generator gen) : gen_(std::move(gen)) {}
    /// Finite list; indices past the end throw OutOfRange.
    explicit MomentSeq(std::vector<F> values)
        : gen_([values](std::size_t i) -> F {
              if (i >= values.size()) {
                  throw OutOfRange("moment index " + std::to_string(i) + " beyond supplied list");
              }
              return values[i];
          })
    {
    }

    const F& operator()(std::size_t i) const
    {
        while (cache_.size() <= i) {
            cache_.push_back(gen_(cache_.size()));
        }
        return cache_[i];
    }

    /// T(p) = sum_j p_j c_j.
    F apply(const Poly<F>& p) const
    {
        auto c = p.coefficients();
        F acc(0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!is_zero(c[j])) {
                acc += c[j] * (*this)(j);
            }
        }
        return acc;
    }

private:
    Generator gen_;
    mutable std::vector<F> cache_;
};

namespace detail {

template <class F>
inline constexpr bool is_qratfun = std::is_same_v<F, RatFun<Rational>>;

} // namespace detail

/// Exact determinant over F. Rational functions in s are cleared row by row
/// and eliminated fraction-free over Q[s].
template <class F>
F determinant(SquareMatrix<F> m)
{
    if constexpr (detail::is_qratfun<F>) {
        return ratfun_det(m);
    } else {
        return bareiss_det(std::move(m));
    }
}

template <class F>
struct HankelResult {
    std::size_t n = 0;
    F delta;
};

/// Delta_n = det(c_{i+j}), 0 <= i, j <= n.
template <class F>
F hankel_delta(const MomentSeq<F>& m, std::size_t n)
{
    SquareMatrix<F> h(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            h(i, j) = m(i + j);
        }
    }
    return determinant(std::move(h));
}

template <class F>
HankelResult<F> hankel(const MomentSeq<F>& m, std::size_t n)
{
    return {n, hankel_delta(m, n)};
}

/// Monic degree-n orthogonal polynomial from the bordered Hankel
/// determinant (last row 1, x, ..., x^n) divided by Delta_{n-1}.
/// Throws SingularHankel if Delta_k = 0 for some k < n.
template <class F>
Poly<F> monic_op(const MomentSeq<F>& m, std::size_t n)
{
    if (n == 0) {
        return Poly<F>(F(1));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(hankel_delta(m, k))) {
            throw SingularHankel("Delta_" + std::to_string(k) + " = 0");
        }
    }
    // Rows 0..n-1 of the bordered matrix; row i holds c_i .. c_{i+n}.
    // Coefficient k is (-1)^{n+k} times the minor without column k, over
    // Delta_{n-1} (the minor without column n).
    auto minor_without = [&](std::size_t k) {
        SquareMatrix<F> minor(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0, mj = 0; j <= n; ++j) {
                if (j != k) {
                    minor(i, mj++) = m(i + j);
                }
            }
        }
        return minor;
    };
    std::vector<F> coeffs(n + 1, F(0));
    coeffs[n] = F(1);
    if constexpr (detail::is_qratfun<F>) {
        // All minors share rows, so the row multipliers cancel in the ratio.
        SquareMatrix<F> rows(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                rows(i, j) = m(i + j);
            }
        }
        rows(n, 0) = F(1);
        ClearedMatrix cleared = clear_row_denominators(rows);
        auto poly_minor = [&](std::size_t k) {
            SquareMatrix<QPoly> minor(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0, mj = 0; j <= n; ++j) {
                    if (j != k) {
                        minor(i, mj++) = cleared.cleared(i, j);
                    }
                }
            }
            return poly_det(minor);
        };
        QPoly delta = poly_minor(n);
        if (delta.is_zero_poly()) {
            throw SingularHankel("Delta_" + std::to_string(n - 1) + " = 0");
        }
        for (std::size_t k = 0; k < n; ++k) {
            F cof(poly_minor(k), delta);
            coeffs[k] = ((n + k) % 2 == 0) ? cof : -cof;
        }
    } else {
        F prev_delta = determinant(minor_without(n));
        if (is_zero(prev_delta)) {
            throw SingularHankel("Delta_" + std::to_string(n - 1) + " = 0");
        }
        for (std::size_t k = 0; k < n; ++k) {
            F cof = determinant(minor_without(k)) / prev_delta;
            coeffs[k] = ((n + k) % 2 == 0) ? cof : -cof;
        }
    }
    return Poly<F>(std::move(coeffs));
}

/// Delta_n / Delta_{n-1}, cross-checked against T(x^n P_n) evaluated from
/// the moments. Throws SingularHankel or CrossCheckFailed.
template <class F>
F corollary1(const MomentSeq<F>& m, std::size_t n)
{
    Poly<F> p = monic_op(m, n);
    F ratio = hankel_delta(m, n) / hankel_delta(m, n - 1);
    F direct = m.apply(Poly<F>::monomial(F(1), n) * p);
    if (!(ratio == direct)) {
        throw CrossCheckFailed("Delta_n/Delta_{n-1} differs from T(x^n P_n) at n = " + std::to_string(n));
    }
    return ratio;
}

/// Gamma_n: the Hankel matrix of order n+1 with its last row replaced by
/// d_0 .. d_n.
template <class F>
F bordered_gamma(const MomentSeq<F>& mT, const MomentSeq<F>& mS, std::size_t n)
{
    SquareMatrix<F> g(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            g(i, j) = mT(i + j);
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        g(n, j) = mS(j);
    }
    return determinant(std::move(g));
}

/// Gamma_n / Delta_n, computed as a determinant ratio and as
/// S(P_n) / T(x^n P_n); the two must agree.
template <class F>
F corollary2(const MomentSeq<F>& mT, const MomentSeq<F>& mS, std::size_t n)
{
    F delta = hankel_delta(mT, n);
    if (is_zero(delta)) {
        throw SingularHankel("Delta_" + std::to_string(n) + " = 0");
    }
    Poly<F> p = monic_op(mT, n);
    F det_route = bordered_gamma(mT, mS, n) / delta;
    F fun_route = mS.apply(p) / mT.apply(Poly<F>::monomial(F(1), n) * p);
    if (!(det_route == fun_route)) {
        throw CrossCheckFailed("Gamma_n/Delta_n differs from S(P_n)/T(x^n P_n) at n = " + std::to_string(n));
    }
    return det_route;
}

/// (1-q)^n/(q^{n+1})_n * D_q^n { prod_{i<n} (x - a q^i)(x - b q^i) }.
template <class F>
Poly<F> q_legendre(const qcalc::QContext<F>& ctx, std::size_t n, const F& a, const F& b)
{
    F norm = qcalc::q_pochhammer(ctx, ctx.power(n + 1), n);
    if (is_zero(norm)) {
        throw DegenerateQ("(q^{n+1})_n = 0 at n = " + std::to_string(n));
    }
    Poly<F> f(F(1));
    for (std::size_t i = 0; i < n; ++i) {
        f *= Poly<F>(std::vector<F>{-(a * ctx.power(i)), F(1)});
        f *= Poly<F>(std::vector<F>{-(b * ctx.power(i)), F(1)});
    }
    F one_minus_q = F(1) - ctx.q();
    F scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        scale = scale * one_minus_q;
    }
    Poly<F> p = (scale / norm) * qcalc::q_derivative_n(ctx, std::move(f), n);
    if (p.degree() != static_cast<int>(n) || !(p.leading() == F(1))) {
        throw CrossCheckFailed("Rodrigues polynomial of degree " + std::to_string(n) + " is not monic");
    }
    return p;
}

/// T(p) = (1/(1-q)) int_s^1 p d_q x with q = s^3.
template <class F>
F functional_T(const Poly<F>& p, const F& s)
{
    qcalc::QContext<F> ctx(s * s * s);
    return qcalc::jackson_integral(ctx, p, s, F(1));
}

/// Moments of T: c_i = (1 - s^{i+1})/(1 - s^{3(i+1)}).
template <class F>
MomentSeq<F> t_moments(const F& s)
{
    return MomentSeq<F>([s](std::size_t i) {
        F sp(1);
        for (std::size_t k = 0; k <= i; ++k) {
            sp = sp * s;
        }
        F den = F(1) - sp * sp * sp;
        if (is_zero(den)) {
            throw PoleHit("1 - s^" + std::to_string(3 * (i + 1)) + " = 0");
        }
        return (F(1) - sp) / den;
    });
}

/// d_j = S(x^j) = (1 - X s^{n+j+1})/(1 - X^3 s^{3(n+j+1)}).
template <class F>
MomentSeq<F> s_moments(const F& X, const F& s, std::size_t n)
{
    return MomentSeq<F>([X, s, n](std::size_t j) {
        F sp(1);
        for (std::size_t k = 0; k < n + j + 1; ++k) {
            sp = sp * s;
        }
        F den = F(1) - X * X * X * sp * sp * sp;
        if (is_zero(den)) {
            throw PoleHit("1 - X^3 s^" + std::to_string(3 * (n + j + 1)) + " = 0");
        }
        return (F(1) - X * sp) / den;
    });
}

/// S extended linearly from its closed form on monomials; throws PoleHit.
template <class F>
F functional_S(const Poly<F>& p, const F& X, const F& s, std::size_t n)
{
    return s_moments(X, s, n).apply(p);
}

} // namespace refasm::orthopoly
