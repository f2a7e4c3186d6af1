#include "support.hpp"

#include "refasm/qcalc.hpp"

#include <doctest.h>

using namespace refasm;
using namespace refasm::qcalc;
using refasm::test::qpoly;
using refasm::test::Sampler;
using refasm::test::seeds_for;

namespace {

Rational random_q(Sampler& g)
{
    for (;;) {
        Rational q = g.rational(9);
        if (q != Rational(1) && q != Rational(-1) && !q.is_zero()) {
            return q;
        }
    }
}

QPoly compose_scaled(const QPoly& p, const Rational& c)
{
    return p.scale_arg(c);
}

// (1-q) * sum_{r<=K} d * (d q^r) q^r, the raw Jackson sum of x over [0, d].
Rational raw_jackson_of_x(const Rational& q, const Rational& d, int K)
{
    Rational acc(0);
    Rational qr(1);
    for (int r = 0; r <= K; ++r) {
        acc += d * (d * qr) * qr;
        qr *= q;
    }
    return (Rational(1) - q) * acc;
}

} // namespace

TEST_CASE("q-Pochhammer")
{
    QContext<Rational> ctx(Rational(2, 5));
    const Rational a(3, 7);
    const Rational q = ctx.q();
    CHECK(q_pochhammer(ctx, a, 0) == Rational(1));
    CHECK(q_pochhammer(ctx, a, 2) == (Rational(1) - a) * (Rational(1) - q * a));
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = 0; n < 4; ++n) {
            CHECK(q_pochhammer(ctx, a, m + n) == q_pochhammer(ctx, a, m) * q_pochhammer(ctx, ctx.power(m) * a, n));
        }
    }

    QRatFun s = QRatFun::variable();
    QContext<QRatFun> sym(s * s * s);
    QPoly one_minus_s3 = QPoly(1) - QPoly::monomial(Rational(1), 3);
    QPoly one_minus_s6 = QPoly(1) - QPoly::monomial(Rational(1), 6);
    CHECK(q_pochhammer(sym, sym.q(), 2) == QRatFun(one_minus_s3 * one_minus_s6));
    CHECK_THROWS_AS(QContext<Rational>(Rational(1)), DegenerateQ);
}

TEST_CASE("q-derivative")
{
    QContext<Rational> ctx(Rational(3, 4));
    const Rational q = ctx.q();
    QPoly x = QPoly::x();
    CHECK(q_derivative(ctx, x * x) == (Rational(1) + q) * x);
    CHECK(q_derivative(ctx, QPoly(Rational(5))).is_zero_poly());
    CHECK(q_derivative(ctx, x * x * x + x) == (Rational(1) + q + q * q) * (x * x) + QPoly(1));
    CHECK(ctx.bracket(3) == Rational(1) + q + q * q);

    QPoly p = qpoly({Rational(1), Rational(-2), Rational(0), Rational(7)});
    CHECK(q_derivative_n(ctx, p, 0) == p);
    CHECK(q_derivative_n(ctx, x * x, 2) == QPoly(Rational(1) + q));
    CHECK(q_derivative_n(ctx, p, 4).is_zero_poly());

    // Difference quotient (f(x) - f(qx)) / ((1-q) x).
    QPoly diff = p - p.scale_arg(q);
    CHECK(poly_exact_div(diff, (Rational(1) - q) * x) == q_derivative(ctx, p));
}

TEST_CASE("Jackson integral closed form")
{
    QRatFun s = QRatFun::variable();
    QContext<QRatFun> sym(s * s * s);
    Poly<QRatFun> one(QRatFun(1));
    CHECK(jackson_integral(sym, one, s, QRatFun(1)) == (QRatFun(1) - s) / (QRatFun(1) - sym.q()));

    QContext<Rational> ctx(Rational(1, 3));
    const Rational q = ctx.q();
    CHECK(jackson_integral(ctx, QPoly::x(), Rational(0), Rational(1)) == (Rational(1) - q * q).inverse());

    QPoly F = QPoly::x() * QPoly::x();
    const Rational c(-2, 3), d(5, 2);
    CHECK(jackson_integral(ctx, q_derivative(ctx, F), c, d) == (F.eval(d) - F.eval(c)) / (Rational(1) - q));

    // Against the raw node sum: the omitted part is exactly geometric.
    for (int K : {0, 5, 20}) {
        Rational raw = raw_jackson_of_x(q, Rational(1), K);
        Rational closed = (Rational(1) - q) * jackson_integral(ctx, QPoly::x(), Rational(0), Rational(1));
        Rational tail = (Rational(1) - q) * q.pow(2 * (K + 1)) / (Rational(1) - q * q);
        CHECK(closed - raw == tail);
    }

    QContext<Rational> minus(Rational(-1));
    CHECK_THROWS_AS(jackson_integral(minus, QPoly::x(), Rational(0), Rational(1)), DegenerateQ);
    CHECK_NOTHROW(jackson_integral(minus, QPoly(1), Rational(0), Rational(1)));
}

TEST_CASE("product rule")
{
    auto cfg = seeds_for("qcalc");
    for (auto seed : cfg.seeds) {
        Sampler g(seed);
        for (int i = 0; i < cfg.samples; ++i) {
            QContext<Rational> ctx(random_q(g));
            QPoly f = g.poly(5), h = g.poly(5);
            CHECK(q_derivative(ctx, f * h)
                  == f * q_derivative(ctx, h) + q_derivative(ctx, f) * compose_scaled(h, ctx.q()));
        }
    }
}

TEST_CASE("fundamental theorem")
{
    auto cfg = seeds_for("qcalc");
    for (auto seed : cfg.seeds) {
        Sampler g(seed);
        for (int i = 0; i < cfg.samples; ++i) {
            QContext<Rational> ctx(random_q(g));
            QPoly F = g.poly(6);
            Rational c = g.rational(), d = g.rational();
            CHECK(jackson_integral(ctx, q_derivative(ctx, F), c, d) == (F.eval(d) - F.eval(c)) / (Rational(1) - ctx.q()));
        }
    }
}

TEST_CASE("integration by parts")
{
    auto cfg = seeds_for("qcalc");
    for (auto seed : cfg.seeds) {
        Sampler g(seed);
        for (int i = 0; i < cfg.samples; ++i) {
            QContext<Rational> ctx(random_q(g));
            const Rational q = ctx.q();
            Rational c = g.rational(), d = g.rational();
            QPoly f = g.poly(4);

            QPoly vanish = QPoly(std::vector<Rational>{-c, Rational(1)}) * QPoly(std::vector<Rational>{-d, Rational(1)});
            QPoly h = vanish * g.poly(3);
            CHECK(jackson_integral(ctx, f * q_derivative(ctx, h), c, d)
                  == -jackson_integral(ctx, q_derivative(ctx, f) * h.scale_arg(q), c, d));

            // n-fold: g(q^i x) vanishes at c and d for i < n. Each pass moves
            // one D_q across and rescales by q^{-i}, hence q^{-n(n-1)/2}.
            for (std::size_t n = 1; n <= 3; ++n) {
                QPoly gn = g.nonzero_poly(2);
                for (std::size_t k = 0; k < n; ++k) {
                    gn *= QPoly(std::vector<Rational>{-(c * ctx.power(k)), Rational(1)});
                    gn *= QPoly(std::vector<Rational>{-(d * ctx.power(k)), Rational(1)});
                }
                Rational lhs = jackson_integral(ctx, f * q_derivative_n(ctx, gn, n), c, d);
                Rational rhs = jackson_integral(ctx, q_derivative_n(ctx, f, n) * gn.scale_arg(ctx.power(n)), c, d);
                const long nn = static_cast<long>(n);
                Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
                CHECK(lhs == sign * q.pow(-nn * (nn - 1) / 2) * rhs);
            }
        }
    }
}

TEST_CASE("n-fold parts formula without the q power fails for n >= 2")
{
    QContext<Rational> ctx(Rational(2, 7));
    const Rational c(1, 3), d(5, 4);
    QPoly f = qpoly({Rational(2), Rational(-1), Rational(0), Rational(3)});
    for (std::size_t n = 1; n <= 3; ++n) {
        QPoly gn = qpoly({Rational(1), Rational(1)});
        for (std::size_t k = 0; k < n; ++k) {
            gn *= QPoly(std::vector<Rational>{-(c * ctx.power(k)), Rational(1)});
            gn *= QPoly(std::vector<Rational>{-(d * ctx.power(k)), Rational(1)});
        }
        Rational lhs = jackson_integral(ctx, f * q_derivative_n(ctx, gn, n), c, d);
        Rational rhs = jackson_integral(ctx, q_derivative_n(ctx, f, n) * gn.scale_arg(ctx.power(n)), c, d);
        Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        const Rational ratio = lhs / (sign * rhs);
        CHECK(ratio == Rational(7, 2).pow(static_cast<long>(n * (n - 1) / 2)));
        CHECK((ratio == Rational(1)) == (n == 1));
    }
}

TEST_CASE("q -> 1 recovers the ordinary derivative")
{
    // q = 1 + e with e the indeterminate of Q(e).
    QRatFun e = QRatFun::variable();
    QContext<QRatFun> ctx(QRatFun(1) + e);
    Sampler g(seeds_for("qcalc").seeds.front());
    for (int i = 0; i < 10; ++i) {
        QPoly p = g.poly(7);
        Poly<QRatFun> lifted = p.map<QRatFun>([](const Rational& c) { return QRatFun(c); });
        Poly<QRatFun> dq = q_derivative(ctx, lifted);
        QPoly at_zero = dq.map<Rational>([](const QRatFun& c) { return c.eval(Rational(0)); });
        std::vector<Rational> classical;
        auto pc = p.coefficients();
        for (std::size_t a = 1; a < pc.size(); ++a) {
            classical.push_back(Rational(static_cast<long>(a)) * pc[a]);
        }
        CHECK(at_zero == QPoly(classical));
    }
}
