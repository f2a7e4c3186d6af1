#pragma once

#include "refasm/exactnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace refasm::identity {

/// Outcome of one check. Details are exact values serialized as strings.
struct Verdict {
    std::string name;
    bool pass = false;
    std::map<std::string, std::string> details;
};

/// N_{n+1}(X) over Q[s] after clearing each row's denominators.
/**
 * Entry (i, j) stands for (1 - s^{i+j+1})/(1 - s^{3(i+j+1)}) in the first n
 * rows and (1 - X s^{n+j+1})/(1 - X^3 s^{3(n+j+1)}) in the last row.
 * cleared(i, j) = entry(i, j) * row_multiplier[i], with row_multiplier[i]
 * the monic lcm of the reduced denominators of row i, so
 * det N = det(cleared) / prod(row_multiplier).
 */
struct NMatrixSpec {
    int n = 0;
    Rational X;
    SquareMatrix<QPoly> cleared;
    std::vector<QPoly> row_multiplier;
};

NMatrixSpec build_n_matrix(int n, const Rational& X);

/// det N_{n+1}(X) as a rational function of s.
QRatFun n_matrix_det(const NMatrixSpec& spec);

/// lim_{s->1} (1-s)^n det N_{n+1}(X) / det N_{n+1}(1). Throws UnexpectedPole.
Rational lhs_notyetdone(int n, const Rational& X);

/// Closed-form right side in Q(sqrt(-3)); throws NonrealResult if the
/// sqrt(-3) component is nonzero.
Qw rhs_notyetdone(int n, const Rational& X);

Verdict verify_notyetdone(int n, const Rational& X);

struct DoneSides {
    int n = 0;
    QPoly lhs;
    Poly<Qw> rhs;
};

/// Leading constant (-1)^n (3n+1)! / (3^{n+1} n!^3 (-n+1/3)_{2n+1}).
Rational done_constant(int n);

/// Coefficients a_0 .. a_{4n+1} of (1-Y)^{2n+1} sum_k p(k) Y^k for
/// p(k) = (k+1)_n (k+offset)_n, by finite convolution. Entries past 2n must
/// vanish; the caller decides whether to enforce it.
std::vector<Rational> annihilated_series(int n, const Rational& offset);

/// Throws AnnihilationFailed or NonzeroRemainder.
QPoly lhs_done(int n);
/// Expansion over Q(sqrt(-3))[X] before the realness check.
Poly<Qw> rhs_done_qw(int n);
/// Throws NonrealCoefficient.
QPoly rhs_done(int n);
DoneSides done_sides(int n);

/// Coefficientwise equality, degree n, and a palindromic coefficient list.
Verdict verify_done(int n);

/// q^{n^2} (q)_n^2 (q^{-n} s)_{2n+1} / ((q^{n+1})_n (q^{n+1})_{n+1}), q = s^3,
/// for symbolic s.
QRatFun prop_bottom_closed_form(int n);
Rational prop_bottom_closed_form(int n, const Rational& s);

/// Symbolic in s: T(x^n Q_n(x; s, 1)) against the closed form.
Verdict prop_bottom(int n);
/// Same check at a rational point s.
Verdict prop_bottom_at(int n, const Rational& s);

struct TailBracket {
    Rational partial_sum;
    Rational tail_bound;

    bool contains(const Rational& v) const
    {
        return (v - partial_sum).abs() <= tail_bound;
    }
};

/// Partial sum through k = K of the series for (1/(1-q)) int_s^1 x^{n+alpha}
/// P_n(x) d_q x (X = q^{alpha/3}, q = s^3), with a geometric majorant of the
/// omitted terms. Requires 0 < s < 1 (OutOfRange otherwise) and |q X^3| < 1
/// (DivergentParameters otherwise).
TailBracket prop_top_bracket(int n, const Rational& s, const Rational& X, int K);

/// Same series without the q^{-n(n-1)/2} normalization that the n-fold
/// parts integration produces; kept to document the discrepancy.
TailBracket prop_top_bracket_uncorrected(int n, const Rational& s, const Rational& X, int K);

/// Exact value of the same integral through the closed form of S applied to
/// the coefficients of P_n.
Rational prop_top_oracle(int n, const Rational& s, const Rational& X);

Verdict verify_prop_top(int n, const Rational& s, const Rational& X, int K);

/// det N_{n+1}(1) directly versus c_0 times the product of the
/// prop_bottom_closed_form(m) for m = 1..n, symbolic in s.
Verdict hankel_vs_corollary(int n);

/// The same comparison after evaluating at a rational point s.
Verdict hankel_vs_corollary_at(int n, const Rational& s);

/// T(Q_n Q_m) = 0 for all m < n, and Q_n equal to the Hankel-formula
/// polynomial of the T-moments. Symbolic in s.
Verdict legendre_orthogonality(int n);
Verdict legendre_orthogonality_at(int n, const Rational& s);

/// c_0(n) u_n + c_1(n) u_{n+1} + ... + c_order(n) u_{n+order} = 0.
struct Recurrence {
    std::vector<QPoly> coeffs;

    /// Residual at index n (zero when the relation holds there).
    Rational residual(const std::vector<Rational>& u, std::size_t n) const;
    bool annihilates(const std::vector<Rational>& u) const;
};

/// Fits a recurrence of the given order with coefficient polynomials of
/// degree <= coeff_degree by exact null-space computation. Returns nullopt
/// when only the zero solution exists. With values u_0..u_m, throws
/// InsufficientData unless m >= (order+1)(coeff_degree+1) + 4.
std::optional<Recurrence> fit_recurrence(const std::vector<Rational>& values, int order, int coeff_degree);

} // namespace refasm::identity
