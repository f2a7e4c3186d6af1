#include "refasm/exactnum/ratfun_matrix.hpp"

namespace refasm {

ClearedMatrix clear_row_denominators(const SquareMatrix<RatFun<Rational>>& m)
{
    const std::size_t n = m.size();
    ClearedMatrix out{SquareMatrix<QPoly>(n), {}};
    out.row_multiplier.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        QPoly mult(1);
        for (std::size_t j = 0; j < n; ++j) {
            mult = poly_lcm(mult, m(i, j).den());
        }
        for (std::size_t j = 0; j < n; ++j) {
            out.cleared(i, j) = m(i, j).num() * poly_exact_div(mult, m(i, j).den());
        }
        out.row_multiplier.push_back(std::move(mult));
    }
    return out;
}

RatFun<Rational> ratfun_det(const SquareMatrix<RatFun<Rational>>& m)
{
    ClearedMatrix c = clear_row_denominators(m);
    QPoly den(1);
    for (const auto& r : c.row_multiplier) {
        den *= r;
    }
    return RatFun<Rational>(poly_det(c.cleared), std::move(den));
}

} // namespace refasm
