#pragma once

#include "refasm/exactnum/matrix.hpp"
#include "refasm/exactnum/poly.hpp"
#include "refasm/exactnum/poly_rational.hpp"
#include "refasm/exactnum/qw.hpp"
#include "refasm/exactnum/rational.hpp"
#include "refasm/exactnum/ratfun.hpp"
#include "refasm/exactnum/ratfun_matrix.hpp"
#include "refasm/exactnum/zkernel.hpp"

namespace refasm {

/// Rational functions in one variable over Q.
using QRatFun = RatFun<Rational>;

} // namespace refasm
