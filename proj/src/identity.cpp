#include "refasm/identity.hpp"

#include "refasm/errors.hpp"
#include "refasm/orthopoly.hpp"
#include "refasm/qcalc.hpp"

#include <algorithm>

namespace refasm::identity {

namespace {

QPoly s_power(std::size_t k)
{
    return QPoly::monomial(Rational(1), k);
}

// (1 - X s^m) / (1 - X^3 s^{3m}) in lowest terms.
QRatFun n_entry(const Rational& X, std::size_t m)
{
    QPoly num = QPoly(1) - X * s_power(m);
    QPoly den = QPoly(1) - (X * X * X) * s_power(3 * m);
    return QRatFun(std::move(num), std::move(den));
}

std::string details_of(const QPoly& p)
{
    std::string out = "[";
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += c[i].to_string();
    }
    return out + "]";
}

Verdict failed(std::string name, const std::exception& e)
{
    Verdict v;
    v.name = std::move(name);
    v.pass = false;
    v.details["error"] = e.what();
    return v;
}

} // namespace

NMatrixSpec build_n_matrix(int n, const Rational& X)
{
    if (n < 0) {
        throw OutOfRange("n must be nonnegative");
    }
    const auto size = static_cast<std::size_t>(n + 1);
    NMatrixSpec spec;
    spec.n = n;
    spec.X = X;
    SquareMatrix<QRatFun> entries(size);
    for (std::size_t i = 0; i < size; ++i) {
        const bool last = i + 1 == size;
        const Rational x = last ? X : Rational(1);
        const std::size_t base = last ? static_cast<std::size_t>(n) : i;
        for (std::size_t j = 0; j < size; ++j) {
            entries(i, j) = n_entry(x, base + j + 1);
        }
    }
    ClearedMatrix c = clear_row_denominators(entries);
    spec.cleared = std::move(c.cleared);
    spec.row_multiplier = std::move(c.row_multiplier);
    return spec;
}

QRatFun n_matrix_det(const NMatrixSpec& spec)
{
    QPoly den(1);
    for (const auto& m : spec.row_multiplier) {
        den *= m;
    }
    return QRatFun(poly_det(spec.cleared), std::move(den));
}

Rational lhs_notyetdone(int n, const Rational& X)
{
    if (n < 0) {
        throw OutOfRange("n must be nonnegative");
    }
    if (X == Rational(1)) {
        return n == 0 ? Rational(1) : Rational(0);
    }
    NMatrixSpec nx = build_n_matrix(n, X);
    NMatrixSpec n1 = build_n_matrix(n, Rational(1));
    // The first n rows and their multipliers coincide, so only the last-row
    // multipliers survive in the ratio.
    const auto last = static_cast<std::size_t>(n);
    QPoly one_minus_s(std::vector<Rational>{Rational(1), Rational(-1)});
    QPoly num = one_minus_s.pow(static_cast<unsigned>(n)) * poly_det(nx.cleared) * n1.row_multiplier[last];
    QPoly den = poly_det(n1.cleared) * nx.row_multiplier[last];
    if (den.is_zero_poly()) {
        throw UnexpectedPole("det N_{n+1}(1) vanishes identically");
    }
    if (num.is_zero_poly()) {
        return Rational(0);
    }
    const Rational one(1);
    unsigned vn = vanishing_order(num, one);
    unsigned vd = vanishing_order(den, one);
    if (vn > vd) {
        return Rational(0);
    }
    if (vn < vd) {
        throw UnexpectedPole("ratio has a pole of order " + std::to_string(vd - vn) + " at s = 1");
    }
    Rational top = remove_root_power(num, one, vn).eval(one);
    Rational bottom = remove_root_power(den, one, vd).eval(one);
    return top / bottom;
}

Qw rhs_notyetdone(int n, const Rational& X)
{
    if (n < 0) {
        throw OutOfRange("n must be nonnegative");
    }
    const Qw w = Qw::w();
    const Qw w2 = w * w;
    const Qw x(X);
    Qw sum(0);
    for (int r = 0; r <= n; ++r) {
        Qw term = qw_pow_w(-r) * Qw(Rational(binomial(n + r, n) * binomial(2 * n - r, n)));
        term *= (Qw(1) + w * x).pow(r);
        term *= (Qw(1) - w2 * x).pow(n - r);
        sum += term;
    }
    Rational q = Rational(1) + X + X * X;
    Qw pre = -(Qw((Rational(1) - X).pow(n)) * Qw::sqrt_minus3().pow(n + 2) * qw_pow_w(-n));
    Rational denom = Rational(factorial(static_cast<unsigned long>(n))) * q.pow(n + 1)
                     * Rational(binomial(3 * n + 1, n));
    Qw value = pre * sum / Qw(denom);
    if (!value.is_rational()) {
        throw NonrealResult("sqrt(-3) component " + value.im().to_string());
    }
    return value;
}

Verdict verify_notyetdone(int n, const Rational& X)
{
    Verdict v;
    v.name = "notyetdone";
    v.details["n"] = std::to_string(n);
    v.details["X"] = X.to_string();
    try {
        Rational lhs = lhs_notyetdone(n, X);
        Qw rhs = rhs_notyetdone(n, X);
        v.details["lhs"] = lhs.to_string();
        v.details["rhs"] = rhs.re().to_string();
        v.pass = rhs.is_rational() && lhs == rhs.re();
    } catch (const Error& e) {
        v.pass = false;
        v.details["error"] = e.what();
    }
    return v;
}

Rational done_constant(int n)
{
    const Rational third(1, 3);
    Rational rising(1);
    Rational f = Rational(-n) + third;
    for (int i = 0; i < 2 * n + 1; ++i) {
        if (f.is_zero()) {
            throw InexactDivision("(-n+1/3)_{2n+1} has a zero factor");
        }
        rising *= f;
        f += Rational(1);
    }
    Rational nf(factorial(static_cast<unsigned long>(n)));
    Rational c = Rational(factorial(static_cast<unsigned long>(3 * n + 1)))
                 / (Rational(3).pow(n + 1) * nf * nf * nf * rising);
    return n % 2 == 0 ? c : -c;
}

std::vector<Rational> annihilated_series(int n, const Rational& offset)
{
    const int terms = 4 * n + 2;
    std::vector<Rational> p(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        p[static_cast<std::size_t>(k)] = rising_factorial(Rational(k + 1), static_cast<unsigned long>(n))
                                         * rising_factorial(Rational(k) + offset, static_cast<unsigned long>(n));
    }
    std::vector<Rational> a(static_cast<std::size_t>(terms));
    for (int m = 0; m < terms; ++m) {
        Rational acc(0);
        for (int j = 0; j <= std::min(m, 2 * n + 1); ++j) {
            Rational t = Rational(binomial(2 * n + 1, j)) * p[static_cast<std::size_t>(m - j)];
            acc += j % 2 == 0 ? t : -t;
        }
        a[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return a;
}

QPoly lhs_done(int n)
{
    if (n < 0) {
        throw OutOfRange("n must be nonnegative");
    }
    auto truncate = [n](std::vector<Rational> a, const char* which) {
        for (std::size_t m = static_cast<std::size_t>(2 * n + 1); m < a.size(); ++m) {
            if (!a[m].is_zero()) {
                throw AnnihilationFailed(std::string(which) + " coefficient " + std::to_string(m) + " = "
                                         + a[m].to_string());
            }
        }
        a.resize(static_cast<std::size_t>(2 * n + 1));
        return QPoly(std::move(a));
    };
    QPoly a1 = truncate(annihilated_series(n, Rational(2, 3)), "A1");
    QPoly a2 = truncate(annihilated_series(n, Rational(4, 3)), "A2");
    QPoly combined = a1.substitute_power(3) - QPoly::x() * a2.substitute_power(3);
    QPoly one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    QPoly q = poly_exact_div(combined, one_minus_x.pow(static_cast<unsigned>(2 * n + 1)));
    return done_constant(n) * q;
}

Poly<Qw> rhs_done_qw(int n)
{
    if (n < 0) {
        throw OutOfRange("n must be nonnegative");
    }
    const Qw w = Qw::w();
    const Poly<Qw> a(std::vector<Qw>{Qw(1), w});
    const Poly<Qw> b(std::vector<Qw>{Qw(1), -(w * w)});
    Poly<Qw> sum;
    for (int r = 0; r <= n; ++r) {
        Qw c = qw_pow_w(-r - n) * Qw(Rational(binomial(n + r, n) * binomial(2 * n - r, n)));
        sum += c * (a.pow(static_cast<unsigned>(r)) * b.pow(static_cast<unsigned>(n - r)));
    }
    return Qw::sqrt_minus3().pow(n) * sum;
}

QPoly rhs_done(int n)
{
    Poly<Qw> p = rhs_done_qw(n);
    std::vector<Rational> out;
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_rational()) {
            throw NonrealCoefficient("coefficient of X^" + std::to_string(i) + " is " + c[i].to_string());
        }
        out.push_back(c[i].re());
    }
    return QPoly(std::move(out));
}

DoneSides done_sides(int n)
{
    return {n, lhs_done(n), rhs_done_qw(n)};
}

Verdict verify_done(int n)
{
    Verdict v;
    v.name = "done";
    v.details["n"] = std::to_string(n);
    try {
        QPoly lhs = lhs_done(n);
        QPoly rhs = rhs_done(n);
        v.details["lhs"] = details_of(lhs);
        v.details["rhs"] = details_of(rhs);
        v.details["degree"] = std::to_string(lhs.degree());
        auto c = rhs.coefficients();
        const bool palindromic = std::equal(c.begin(), c.end(), c.rbegin());
        v.details["palindromic"] = palindromic ? "true" : "false";
        v.pass = lhs == rhs && lhs.degree() == n && palindromic;
    } catch (const Error& e) {
        return failed("done", e);
    }
    return v;
}

namespace {

template <class F>
F prop_bottom_value(int n, const F& s)
{
    const qcalc::QContext<F> ctx(s * s * s);
    const auto un = static_cast<std::size_t>(n);
    const F& q = ctx.q();
    F qn2(1);
    for (int i = 0; i < n * n; ++i) {
        qn2 = qn2 * q;
    }
    F q_minus_n = F(1) / ctx.power(un);
    F qq = qcalc::q_pochhammer(ctx, q, un);
    F num = qn2 * qq * qq * qcalc::q_pochhammer(ctx, q_minus_n * s, 2 * un + 1);
    F den = qcalc::q_pochhammer(ctx, ctx.power(un + 1), un) * qcalc::q_pochhammer(ctx, ctx.power(un + 1), un + 1);
    return num / den;
}

template <class F>
F t_of_xn_legendre(int n, const F& s)
{
    const qcalc::QContext<F> ctx(s * s * s);
    const auto un = static_cast<std::size_t>(n);
    Poly<F> p = orthopoly::q_legendre(ctx, un, s, F(1));
    return orthopoly::functional_T(Poly<F>::monomial(F(1), un) * p, s);
}

} // namespace

QRatFun prop_bottom_closed_form(int n)
{
    return prop_bottom_value(n, QRatFun::variable());
}

Rational prop_bottom_closed_form(int n, const Rational& s)
{
    return prop_bottom_value(n, s);
}

Verdict prop_bottom(int n)
{
    Verdict v;
    v.name = "prop-bottom";
    v.details["n"] = std::to_string(n);
    v.details["mode"] = "symbolic";
    try {
        QRatFun s = QRatFun::variable();
        QRatFun lhs = t_of_xn_legendre(n, s);
        QRatFun rhs = prop_bottom_value(n, s);
        v.details["lhs"] = lhs.to_string();
        v.details["rhs"] = rhs.to_string();
        v.pass = lhs == rhs;
    } catch (const Error& e) {
        return failed("prop-bottom", e);
    }
    return v;
}

Verdict prop_bottom_at(int n, const Rational& s)
{
    Verdict v;
    v.name = "prop-bottom";
    v.details["n"] = std::to_string(n);
    v.details["mode"] = "numeric";
    v.details["s"] = s.to_string();
    try {
        Rational lhs = t_of_xn_legendre(n, s);
        Rational rhs = prop_bottom_value(n, s);
        v.details["lhs"] = lhs.to_string();
        v.details["rhs"] = rhs.to_string();
        v.pass = lhs == rhs;
    } catch (const Error& e) {
        return failed("prop-bottom", e);
    }
    return v;
}

namespace {

TailBracket top_bracket(int n, const Rational& s, const Rational& X, int K, bool corrected)
{
    if (n < 0 || K < 0) {
        throw OutOfRange("n and K must be nonnegative");
    }
    if (s <= Rational(0) || s >= Rational(1)) {
        throw OutOfRange("s must lie in (0,1), got " + s.to_string());
    }
    const Rational q = s.pow(3);
    const Rational X3 = X.pow(3);
    const Rational ratio = (q * X3).abs();
    if (ratio >= Rational(1)) {
        throw DivergentParameters("|q X^3| = " + ratio.to_string() + " >= 1");
    }
    const qcalc::QContext<Rational> ctx(q);
    const auto un = static_cast<std::size_t>(n);

    Rational pre = qcalc::q_pochhammer(ctx, q * X3, un) / qcalc::q_pochhammer(ctx, ctx.power(un + 1), un);
    if (n % 2 == 1) {
        pre = -pre;
    }
    if (corrected) {
        pre *= q.pow(-static_cast<long>(n) * (n - 1) / 2);
    }

    // Both series share the factor q^k X^{3k}; the products depend on
    // y = q^{n+k} (first series) or s q^{n+k} (second).
    auto product = [&](const Rational& y) {
        Rational r(1);
        for (std::size_t i = 0; i < un; ++i) {
            r *= (y - ctx.power(i)) * (y - s * ctx.power(i));
        }
        return r;
    };

    Rational sum(0);
    Rational geo(1);
    Rational qk = ctx.power(un);
    const Rational sX = s * X;
    for (int k = 0; k <= K; ++k) {
        sum += geo * (product(qk) - sX * product(s * qk));
        geo *= q * X3;
        qk *= q;
    }

    // |y - q^r| <= y + q^r and y <= q^n (resp. s q^n) for k >= 0.
    auto majorant = [&](const Rational& y) {
        Rational r(1);
        for (std::size_t i = 0; i < un; ++i) {
            r *= (y + ctx.power(i)) * (y + s * ctx.power(i));
        }
        return r;
    };
    Rational bound = majorant(ctx.power(un)) + sX.abs() * majorant(s * ctx.power(un));
    Rational tail = pre.abs() * bound * ratio.pow(K + 1) / (Rational(1) - ratio);
    return {pre * sum, tail};
}

} // namespace

TailBracket prop_top_bracket(int n, const Rational& s, const Rational& X, int K)
{
    return top_bracket(n, s, X, K, true);
}

TailBracket prop_top_bracket_uncorrected(int n, const Rational& s, const Rational& X, int K)
{
    return top_bracket(n, s, X, K, false);
}

Rational prop_top_oracle(int n, const Rational& s, const Rational& X)
{
    const qcalc::QContext<Rational> ctx(s.pow(3));
    const auto un = static_cast<std::size_t>(n);
    QPoly p = orthopoly::q_legendre(ctx, un, s, Rational(1));
    return orthopoly::functional_S(p, X, s, un);
}

Verdict verify_prop_top(int n, const Rational& s, const Rational& X, int K)
{
    Verdict v;
    v.name = "prop-top";
    v.details["n"] = std::to_string(n);
    v.details["s"] = s.to_string();
    v.details["X"] = X.to_string();
    v.details["K"] = std::to_string(K);
    try {
        TailBracket b = prop_top_bracket(n, s, X, K);
        Rational oracle = prop_top_oracle(n, s, X);
        v.details["partialSum"] = b.partial_sum.to_string();
        v.details["tailBound"] = b.tail_bound.to_string();
        v.details["oracle"] = oracle.to_string();
        v.pass = b.contains(oracle);
    } catch (const Error& e) {
        return failed("prop-top", e);
    }
    return v;
}

Verdict hankel_vs_corollary(int n)
{
    Verdict v;
    v.name = "hankel";
    v.details["n"] = std::to_string(n);
    try {
        QRatFun direct = n_matrix_det(build_n_matrix(n, Rational(1)));
        QRatFun s = QRatFun::variable();
        QRatFun telescoped = orthopoly::t_moments(s)(0);
        for (int m = 1; m <= n; ++m) {
            telescoped *= prop_bottom_value(m, s);
        }
        v.details["direct"] = direct.to_string();
        v.details["telescoped"] = telescoped.to_string();
        v.pass = direct == telescoped;
    } catch (const Error& e) {
        return failed("hankel", e);
    }
    return v;
}

Verdict hankel_vs_corollary_at(int n, const Rational& s)
{
    Verdict v;
    v.name = "hankel";
    v.details["n"] = std::to_string(n);
    v.details["s"] = s.to_string();
    try {
        Rational direct = n_matrix_det(build_n_matrix(n, Rational(1))).eval(s);
        Rational telescoped = orthopoly::t_moments(s)(0);
        for (int m = 1; m <= n; ++m) {
            telescoped *= prop_bottom_value(m, s);
        }
        v.details["direct"] = direct.to_string();
        v.details["telescoped"] = telescoped.to_string();
        v.pass = direct == telescoped;
    } catch (const Error& e) {
        return failed("hankel", e);
    }
    return v;
}

namespace {

template <class F>
void legendre_checks(int n, const F& s, Verdict& v)
{
    const qcalc::QContext<F> ctx(s * s * s);
    const auto un = static_cast<std::size_t>(n);
    Poly<F> qn = orthopoly::q_legendre(ctx, un, s, F(1));
    int nonzero = 0;
    for (std::size_t m = 0; m < un; ++m) {
        Poly<F> qm = orthopoly::q_legendre(ctx, m, s, F(1));
        if (!is_zero(orthopoly::functional_T(qn * qm, s))) {
            ++nonzero;
        }
    }
    orthopoly::MomentSeq<F> moments = orthopoly::t_moments(s);
    const bool unique = orthopoly::monic_op(moments, un) == qn;
    v.details["nonzeroProducts"] = std::to_string(nonzero);
    v.details["matchesHankelFormula"] = unique ? "true" : "false";
    v.pass = nonzero == 0 && unique;
}

} // namespace

Verdict legendre_orthogonality(int n)
{
    Verdict v;
    v.name = "qlegendre-ortho";
    v.details["n"] = std::to_string(n);
    v.details["mode"] = "symbolic";
    try {
        legendre_checks(n, QRatFun::variable(), v);
    } catch (const Error& e) {
        return failed("qlegendre-ortho", e);
    }
    return v;
}

Verdict legendre_orthogonality_at(int n, const Rational& s)
{
    Verdict v;
    v.name = "qlegendre-ortho";
    v.details["n"] = std::to_string(n);
    v.details["mode"] = "numeric";
    v.details["s"] = s.to_string();
    try {
        legendre_checks(n, s, v);
    } catch (const Error& e) {
        return failed("qlegendre-ortho", e);
    }
    return v;
}

Rational Recurrence::residual(const std::vector<Rational>& u, std::size_t n) const
{
    Rational acc(0);
    const Rational at(static_cast<long>(n));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += coeffs[i].eval(at) * u[n + i];
    }
    return acc;
}

bool Recurrence::annihilates(const std::vector<Rational>& u) const
{
    if (coeffs.empty() || u.size() < coeffs.size()) {
        return false;
    }
    for (std::size_t n = 0; n + coeffs.size() <= u.size(); ++n) {
        if (!residual(u, n).is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<Recurrence> fit_recurrence(const std::vector<Rational>& values, int order, int coeff_degree)
{
    if (order < 1 || coeff_degree < 0) {
        throw OutOfRange("order must be >= 1 and coefficient degree >= 0");
    }
    const auto ord = static_cast<std::size_t>(order);
    const auto width = static_cast<std::size_t>(coeff_degree + 1);
    const std::size_t unknowns = (ord + 1) * width;
    if (values.empty() || values.size() - 1 < unknowns + 4) {
        throw InsufficientData("need at least " + std::to_string(unknowns + 5) + " values, got "
                               + std::to_string(values.size()));
    }
    // Row n: sum_i sum_e x_{i,e} n^e u_{n+i} = 0.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t n = 0; n + ord < values.size(); ++n) {
        std::vector<Rational> row(unknowns);
        for (std::size_t i = 0; i <= ord; ++i) {
            Rational np(1);
            for (std::size_t e = 0; e < width; ++e) {
                row[i * width + e] = np * values[n + i];
                np *= Rational(static_cast<long>(n));
            }
        }
        rows.push_back(std::move(row));
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        Rational inv = rows[r][c].inverse();
        for (auto& x : rows[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            Rational f = rows[i][c];
            for (std::size_t j = c; j < unknowns; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    // First free column gives the basis vector.
    std::size_t free_col = unknowns;
    for (std::size_t c = 0, k = 0; c < unknowns; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c) {
            ++k;
            continue;
        }
        free_col = c;
        break;
    }
    if (free_col == unknowns) {
        return std::nullopt;
    }
    std::vector<Rational> sol(unknowns);
    sol[free_col] = Rational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        sol[pivot_cols[k]] = -rows[k][free_col];
    }
    // Scale so the last nonzero unknown is 1.
    Rational lead;
    for (std::size_t c = unknowns; c-- > 0;) {
        if (!sol[c].is_zero()) {
            lead = sol[c];
            break;
        }
    }
    Recurrence rec;
    for (std::size_t i = 0; i <= ord; ++i) {
        std::vector<Rational> cs;
        for (std::size_t e = 0; e < width; ++e) {
            cs.push_back(sol[i * width + e] / lead);
        }
        rec.coeffs.emplace_back(std::move(cs));
    }
    if (!rec.annihilates(values)) {
        throw CrossCheckFailed("fitted recurrence fails verification");
    }
    return rec;
}

} // namespace refasm::identity
