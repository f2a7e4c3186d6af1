#pragma once

#include "refasm/exactnum/poly.hpp"
#include "refasm/exactnum/rational.hpp"

namespace refasm {

using QPoly = Poly<Rational>;

/// Monic gcd over Q. Coprime inputs are detected with a modular test before
/// falling back to the Euclidean remainder sequence.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Least common multiple, monic.
QPoly poly_lcm(const QPoly& a, const QPoly& b);

/// Returns (c, p/c) with p/c having integer coefficients and content 1.
std::pair<Rational, QPoly> primitive_part(const QPoly& p);

} // namespace refasm
