#pragma once

#include "refasm/errors.hpp"
#include "refasm/exactnum/poly.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace refasm {

/// Dense row-major square matrix over a ring T.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
    /// Throws NonSquare when the rows are ragged or not n x n.
    explicit SquareMatrix(const std::vector<std::vector<T>>& rows) : n_(rows.size())
    {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw NonSquare("row of length " + std::to_string(row.size()) + " in a "
                                + std::to_string(n_) + "-row matrix");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < n_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    /// Matrix with row i and column j removed.
    SquareMatrix minor(std::size_t row, std::size_t col) const
    {
        SquareMatrix m(n_ - 1);
        for (std::size_t i = 0, mi = 0; i < n_; ++i) {
            if (i == row) {
                continue;
            }
            for (std::size_t j = 0, mj = 0; j < n_; ++j) {
                if (j == col) {
                    continue;
                }
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

namespace detail {

template <class T>
struct is_poly : std::false_type {};
template <class F>
struct is_poly<Poly<F>> : std::true_type {};

template <class T>
T exact_quotient(const T& a, const T& b)
{
    if constexpr (is_poly<T>::value) {
        return poly_exact_div(a, b);
    } else {
        return a / b;
    }
}

} // namespace detail

/// Determinant by fraction-free (Bareiss) elimination over an integral
/// domain T. Every division is exact; for polynomial T a nonzero remainder
/// raises NonzeroRemainder. Works unchanged over fields.
template <class T>
T bareiss_det(SquareMatrix<T> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return T(1);
    }
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) {
                ++p;
            }
            if (p == n) {
                return T(0);
            }
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = detail::exact_quotient(v, prev);
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Exact determinant of a square matrix of polynomials.
template <class F>
Poly<F> poly_det(const SquareMatrix<Poly<F>>& m)
{
    return bareiss_det(m);
}

} // namespace refasm
