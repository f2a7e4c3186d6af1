#pragma once

#include "refasm/exactnum/rational.hpp"

#include <optional>
#include <span>
#include <vector>

/// Integer-coefficient polynomial kernels on coefficient vectors
/// (index = degree, no trailing zeros). Multiplication and exact division
/// go through Kronecker substitution so that GMP's large-integer
/// multiplication does the heavy lifting.
namespace refasm::zkernel {

using Coeffs = std::vector<Integer>;

/// Below this length (of the shorter operand) schoolbook is used.
inline constexpr std::size_t kKroneckerThreshold = 12;

Coeffs mul(std::span<const Integer> a, std::span<const Integer> b);
Coeffs mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b);

/// q with a = q*b when b divides a over Z[x]; nullopt otherwise.
std::optional<Coeffs> exact_div(std::span<const Integer> a, std::span<const Integer> b);

/// gcd of the coefficients (nonnegative; 0 for an empty vector).
Integer content(std::span<const Integer> a);

/// Primitive gcd with positive leading coefficient, by heuristic
/// evaluation at a large power of two; nullopt when the heuristic gives up.
std::optional<Coeffs> gcd_heuristic(std::span<const Integer> a, std::span<const Integer> b);

/// Bit length of the largest |coefficient|.
std::size_t max_bits(std::span<const Integer> a);

/// Evaluates at 2^(64*slot_limbs) exactly.
Integer pack(std::span<const Integer> a, std::size_t slot_limbs);

/// Inverse of pack for a value whose balanced base-2^(64*slot_limbs) digits
/// are the coefficients; reads digits until the value is exhausted.
Coeffs unpack(const Integer& v, std::size_t slot_limbs);

} // namespace refasm::zkernel
