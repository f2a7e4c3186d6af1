#pragma once

#include "refasm/exactnum/matrix.hpp"
#include "refasm/exactnum/poly_rational.hpp"
#include "refasm/exactnum/ratfun.hpp"

#include <vector>

namespace refasm {

/// Matrix of rational functions with every row scaled to polynomials.
/**
 * cleared(i, j) = m(i, j) * row_multiplier[i], where row_multiplier[i] is
 * the monic lcm of the denominators in row i. Determinants of the original
 * matrix are det(cleared) / prod(row_multiplier).
 */
struct ClearedMatrix {
    SquareMatrix<QPoly> cleared;
    std::vector<QPoly> row_multiplier;
};

ClearedMatrix clear_row_denominators(const SquareMatrix<RatFun<Rational>>& m);

/// Determinant over Q(s) via Bareiss on the cleared polynomial matrix.
RatFun<Rational> ratfun_det(const SquareMatrix<RatFun<Rational>>& m);

} // namespace refasm
