#pragma once

#include "refasm/exactnum/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace refasm::asmcount {

/// Largest order accepted by enumerate_asm unless the caller overrides it.
inline constexpr int kDefaultEnumerationLimit = 6;
/// Largest order accepted by count_refined unless the caller overrides it.
inline constexpr int kDefaultCountLimit = 12;

/// Square matrix over {-1, 0, 1}, row-major.
class AsmMatrix {
public:
    AsmMatrix() = default;
    AsmMatrix(int n, std::vector<std::int8_t> entries);

    static AsmMatrix identity(int n);

    int order() const { return n_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;

    /// 1-based column of the 1 in the first row.
    int first_row_position() const;

    /// Mirror image (column j -> n-1-j); an involution on ASMs.
    AsmMatrix column_reversed() const;

    friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> entries_;
};

/// Rows 1..n of strictly increasing 1-based column indices.
struct MonotoneTriangle {
    std::vector<std::vector<int>> rows;

    int order() const { return static_cast<int>(rows.size()); }
    int top() const { return rows.front().front(); }

    friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
    friend auto operator<=>(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

struct RefinedCount {
    int n = 0;
    /// Entry r-1 is the number of order-n ASMs whose first-row 1 is in column r.
    std::vector<Integer> by_position;
    Integer total;
};

struct Validation {
    bool valid = true;
    /// Empty when valid, otherwise names the first offending row or column.
    std::string detail;
};

/// Checks the alternating-sign conditions. Throws NonSquare for ragged or
/// non-square input and BadEntry for values outside {-1, 0, 1}.
Validation validate_asm(const std::vector<std::vector<int>>& candidate);

/// Builds an AsmMatrix after validation; throws InvalidAsm on failure.
AsmMatrix make_asm(const std::vector<std::vector<int>>& rows);

MonotoneTriangle asm_to_monotone(const AsmMatrix& m);
/// Throws InvalidAsm if the triangle is not a monotone triangle with
/// bottom row 1..n.
AsmMatrix monotone_to_asm(const MonotoneTriangle& t);

/// monotone_to_asm(asm_to_monotone(m)); throws InvalidAsm for invalid input.
AsmMatrix asm_mt_roundtrip(const AsmMatrix& m);

/// Visits every order-n ASM once, in lexicographic order of the monotone
/// triangle. Throws OrderTooLarge when n > limit and OutOfRange for n < 1.
void for_each_asm(int n, const std::function<void(const AsmMatrix&)>& visit,
                  int limit = kDefaultEnumerationLimit);

std::vector<AsmMatrix> enumerate_asm(int n, int limit = kDefaultEnumerationLimit);

/// Histogram of first-row positions over enumerate_asm(n).
std::vector<Integer> enumeration_histogram(int n, int limit = kDefaultEnumerationLimit);

/// Exact refined counts by dynamic programming over monotone-triangle rows.
RefinedCount count_refined(int n, int limit = kDefaultCountLimit);

/// 1!4!7!...(3n-2)! / (n!(n+1)!...(2n-1)!).
Integer closed_form_A(int n);

/// A(n) C(n+r-2, n-1) C(2n-1-r, n-1) / C(3n-2, n-1).
Integer closed_form_A_refined(int n, int r);

} // namespace refasm::asmcount
