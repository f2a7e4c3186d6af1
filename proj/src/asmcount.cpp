#include "refasm/asmcount.hpp"

#include "refasm/errors.hpp"

#include <map>

namespace refasm::asmcount {

AsmMatrix::AsmMatrix(int n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries))
{
    if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw NonSquare("entry count does not match order " + std::to_string(n));
    }
}

AsmMatrix AsmMatrix::identity(int n)
{
    std::vector<std::int8_t> e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) {
        e[static_cast<std::size_t>(i * n + i)] = 1;
    }
    return AsmMatrix(n, std::move(e));
}

std::vector<std::vector<int>> AsmMatrix::rows() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
        }
    }
    return out;
}

int AsmMatrix::first_row_position() const
{
    for (int j = 0; j < n_; ++j) {
        if (at(0, j) == 1) {
            return j + 1;
        }
    }
    throw InvalidAsm("first row has no 1");
}

AsmMatrix AsmMatrix::column_reversed() const
{
    std::vector<std::int8_t> e(entries_.size());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            e[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::int8_t>(at(i, n_ - 1 - j));
        }
    }
    return AsmMatrix(n_, std::move(e));
}

namespace {

// Partial sums along a line must stay in {0,1} and end at 1.
bool line_ok(const std::vector<int>& line)
{
    int sum = 0;
    for (int v : line) {
        sum += v;
        if (sum < 0 || sum > 1) {
            return false;
        }
    }
    return sum == 1;
}

} // namespace

Validation validate_asm(const std::vector<std::vector<int>>& candidate)
{
    const std::size_t n = candidate.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (candidate[i].size() != n) {
            throw NonSquare("row " + std::to_string(i + 1) + " has length " + std::to_string(candidate[i].size())
                            + ", expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            int v = candidate[i][j];
            if (v < -1 || v > 1) {
                throw BadEntry("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = "
                               + std::to_string(v));
            }
        }
    }
    if (n == 0) {
        return {false, "empty matrix"};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!line_ok(candidate[i])) {
            return {false, "row " + std::to_string(i + 1)};
        }
    }
    std::vector<int> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = candidate[i][j];
        }
        if (!line_ok(col)) {
            return {false, "column " + std::to_string(j + 1)};
        }
    }
    return {};
}

AsmMatrix make_asm(const std::vector<std::vector<int>>& rows)
{
    auto v = validate_asm(rows);
    if (!v.valid) {
        throw InvalidAsm(v.detail);
    }
    const int n = static_cast<int>(rows.size());
    std::vector<std::int8_t> e;
    e.reserve(static_cast<std::size_t>(n * n));
    for (const auto& r : rows) {
        for (int x : r) {
            e.push_back(static_cast<std::int8_t>(x));
        }
    }
    return AsmMatrix(n, std::move(e));
}

MonotoneTriangle asm_to_monotone(const AsmMatrix& m)
{
    const int n = m.order();
    MonotoneTriangle t;
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        for (int j = 0; j < n; ++j) {
            colsum[static_cast<std::size_t>(j)] += m.at(i, j);
            if (colsum[static_cast<std::size_t>(j)] == 1) {
                row.push_back(j + 1);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

AsmMatrix monotone_to_asm(const MonotoneTriangle& t)
{
    const int n = t.order();
    if (n == 0) {
        throw InvalidAsm("empty triangle");
    }
    std::vector<std::int8_t> e(static_cast<std::size_t>(n * n), 0);
    std::vector<int> prev(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != i + 1) {
            throw InvalidAsm("triangle row " + std::to_string(i + 1) + " has wrong length");
        }
        std::vector<int> cur(static_cast<std::size_t>(n), 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 1 || row[k] > n || (k > 0 && row[k] <= row[k - 1])) {
                throw InvalidAsm("triangle row " + std::to_string(i + 1) + " is not strictly increasing in 1..n");
            }
            cur[static_cast<std::size_t>(row[k] - 1)] = 1;
        }
        for (int j = 0; j < n; ++j) {
            e[static_cast<std::size_t>(i * n + j)] =
                static_cast<std::int8_t>(cur[static_cast<std::size_t>(j)] - prev[static_cast<std::size_t>(j)]);
        }
        prev = std::move(cur);
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].assign(e.begin() + i * n, e.begin() + (i + 1) * n);
    }
    return make_asm(rows);
}

AsmMatrix asm_mt_roundtrip(const AsmMatrix& m)
{
    auto v = validate_asm(m.rows());
    if (!v.valid) {
        throw InvalidAsm(v.detail);
    }
    return monotone_to_asm(asm_to_monotone(m));
}

namespace {

void check_order(int n, int limit)
{
    if (n < 1) {
        throw OutOfRange("order must be at least 1, got " + std::to_string(n));
    }
    if (n > limit) {
        throw OrderTooLarge("order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    }
}

// Calls emit(next) for every strictly increasing row of length above.size()+1
// that interlaces `above`: next[i] <= above[i] <= next[i+1]. Rows arrive in
// lexicographic order.
template <class Emit>
void interlacing_rows_below(const std::vector<int>& above, int n, Emit&& emit)
{
    const std::size_t len = above.size() + 1;
    std::vector<int> next(len);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            emit(next);
            return;
        }
        int lo = i == 0 ? 1 : std::max(next[i - 1] + 1, above[i - 1]);
        int hi = i < above.size() ? above[i] : n;
        for (int v = lo; v <= hi; ++v) {
            next[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

// Rows of length above.size()-1 that interlace below `above`:
// above[i] <= next[i] <= above[i+1], strictly increasing.
template <class Emit>
void interlacing_rows_above(const std::vector<int>& below, Emit&& emit)
{
    const std::size_t len = below.size() - 1;
    std::vector<int> next(len);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            emit(next);
            return;
        }
        int lo = i == 0 ? below[0] : std::max(next[i - 1] + 1, below[i]);
        int hi = below[i + 1];
        for (int v = lo; v <= hi; ++v) {
            next[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

void for_each_asm(int n, const std::function<void(const AsmMatrix&)>& visit, int limit)
{
    check_order(n, limit);
    MonotoneTriangle t;
    t.rows.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self) -> void {
        if (t.order() == n) {
            for (int j = 0; j < n; ++j) {
                if (t.rows.back()[static_cast<std::size_t>(j)] != j + 1) {
                    return;
                }
            }
            visit(monotone_to_asm(t));
            return;
        }
        interlacing_rows_below(t.rows.back(), n, [&](const std::vector<int>& row) {
            t.rows.push_back(row);
            self(self);
            t.rows.pop_back();
        });
    };
    for (int r = 1; r <= n; ++r) {
        t.rows.push_back({r});
        rec(rec);
        t.rows.pop_back();
    }
}

std::vector<AsmMatrix> enumerate_asm(int n, int limit)
{
    std::vector<AsmMatrix> out;
    for_each_asm(n, [&](const AsmMatrix& m) { out.push_back(m); }, limit);
    return out;
}

std::vector<Integer> enumeration_histogram(int n, int limit)
{
    std::vector<Integer> hist(static_cast<std::size_t>(std::max(n, 0)), 0);
    for_each_asm(n, [&](const AsmMatrix& m) { hist[static_cast<std::size_t>(m.first_row_position() - 1)] += 1; },
                 limit);
    return hist;
}

RefinedCount count_refined(int n, int limit)
{
    check_order(n, limit);
    // ways[row] = number of completions of a triangle from this row down to
    // the fixed bottom row (1, ..., n).
    std::map<std::vector<int>, Integer> ways;
    std::vector<int> bottom(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        bottom[static_cast<std::size_t>(j)] = j + 1;
    }
    ways.emplace(std::move(bottom), 1);
    for (int len = n; len > 1; --len) {
        std::map<std::vector<int>, Integer> up;
        for (const auto& [row, count] : ways) {
            interlacing_rows_above(row, [&](const std::vector<int>& above) { up[above] += count; });
        }
        ways = std::move(up);
    }
    RefinedCount rc;
    rc.n = n;
    rc.by_position.assign(static_cast<std::size_t>(n), 0);
    rc.total = 0;
    for (const auto& [row, count] : ways) {
        rc.by_position[static_cast<std::size_t>(row.front() - 1)] = count;
        rc.total += count;
    }
    return rc;
}

Integer closed_form_A(int n)
{
    if (n < 1) {
        throw OutOfRange("A(n) needs n >= 1, got " + std::to_string(n));
    }
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < n; ++i) {
        num *= factorial(static_cast<unsigned long>(3 * i + 1));
        den *= factorial(static_cast<unsigned long>(n + i));
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InexactDivision("A(" + std::to_string(n) + ") is not integral");
    }
    return Integer(num / den);
}

Integer closed_form_A_refined(int n, int r)
{
    if (n < 1 || r < 1 || r > n) {
        throw OutOfRange("A(n,r) needs 1 <= r <= n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
    Integer num = closed_form_A(n) * binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1);
    Integer den = binomial(3 * n - 2, n - 1);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InexactDivision("A(" + std::to_string(n) + "," + std::to_string(r) + ") is not integral");
    }
    return Integer(num / den);
}

} // namespace refasm::asmcount
