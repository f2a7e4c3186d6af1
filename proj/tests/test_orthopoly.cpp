#include "support.hpp"

#include "refasm/identity.hpp"
#include "refasm/orthopoly.hpp"

#include <doctest.h>

using namespace refasm;
using namespace refasm::orthopoly;
using refasm::test::cofactor_det;
using refasm::test::Sampler;
using refasm::test::seeds_for;

namespace {

QRatFun sym_s()
{
    return QRatFun::variable();
}

MomentSeq<Rational> list(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return MomentSeq<Rational>(out);
}

MomentSeq<Rational> random_moments(Sampler& g, std::size_t count)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < count; ++i) {
        c.push_back(g.rational(20));
    }
    return MomentSeq<Rational>(c);
}

Poly<QRatFun> legendre(std::size_t n)
{
    QRatFun s = sym_s();
    qcalc::QContext<QRatFun> ctx(s * s * s);
    return q_legendre(ctx, n, s, QRatFun(1));
}

} // namespace

TEST_CASE("moment sequences")
{
    int calls = 0;
    MomentSeq<Rational> m([&calls](std::size_t i) {
        ++calls;
        return Rational(static_cast<long>(i * i));
    });
    CHECK(m(3) == Rational(9));
    CHECK(m(3) == Rational(9));
    CHECK(calls == 4);
    CHECK(m.apply(QPoly(std::vector<Rational>{Rational(1), Rational(1), Rational(1)})) == Rational(0 + 1 + 4));
    CHECK_THROWS_AS(list({1, 2})(2), OutOfRange);
}

TEST_CASE("Hankel determinants")
{
    MomentSeq<Rational> c = list({2, 3, 7, 1, 5});
    CHECK(hankel_delta(c, 0) == Rational(2));
    CHECK(hankel_delta(c, 1) == Rational(2 * 7 - 3 * 3));
    SquareMatrix<Rational> h(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            h(i, j) = c(i + j);
        }
    }
    CHECK(hankel(c, 2).delta == cofactor_det(h));

    QRatFun s = sym_s();
    CHECK(hankel_delta(t_moments(s), 0) == QRatFun(QPoly(1), QPoly(std::vector<Rational>{1, 1, 1})));
}

TEST_CASE("monic orthogonal polynomials")
{
    MomentSeq<Rational> c = list({2, 3, 7, 1, 5, 4, 9});
    CHECK(monic_op(c, 0) == QPoly(1));
    CHECK(monic_op(c, 1) == QPoly::x() - QPoly(Rational(3, 2)));
    for (std::size_t n = 1; n <= 3; ++n) {
        QPoly p = monic_op(c, n);
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.leading() == Rational(1));
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(c.apply(p * QPoly::monomial(Rational(1), k)).is_zero());
        }
    }

    QRatFun s = sym_s();
    QRatFun q = s * s * s;
    Poly<QRatFun> p1 = monic_op(t_moments(s), 1);
    CHECK(p1 == Poly<QRatFun>(std::vector<QRatFun>{-(QRatFun(1) + s) / (QRatFun(1) + q), QRatFun(1)}));

    CHECK_THROWS_AS(monic_op(list({0, 1, 1, 1}), 1), SingularHankel);
    CHECK_THROWS_AS(monic_op(list({1, 1, 1, 1, 1, 1}), 2), SingularHankel);
}

TEST_CASE("Hankel ratio formula")
{
    MomentSeq<Rational> c = list({2, 3, 7, 1, 5});
    CHECK(corollary1(c, 1) == (Rational(2) * 7 - Rational(9)) / Rational(2));

    auto cfg = seeds_for("moments");
    for (auto seed : cfg.seeds) {
        Sampler g(seed);
        for (int i = 0; i < cfg.samples; ++i) {
            MomentSeq<Rational> m = random_moments(g, 13);
            for (std::size_t n = 1; n <= 6; ++n) {
                try {
                    Rational v = corollary1(m, n);
                    CHECK(v == hankel_delta(m, n) / hankel_delta(m, n - 1));
                } catch (const SingularHankel&) {
                    // A random functional may have no orthogonal family here.
                }
            }
        }
    }

    QRatFun s = sym_s();
    CHECK(corollary1(t_moments(s), 1) == identity::prop_bottom_closed_form(1));
}

TEST_CASE("functional ratio formula")
{
    MomentSeq<Rational> c = list({1, 2, 5, 3, 4});
    CHECK(corollary2(c, c, 1).is_zero());
    MomentSeq<Rational> d = list({1, 3, 8});
    CHECK(corollary2(c, d, 1) == Rational(1));

    auto cfg = seeds_for("moments");
    for (auto seed : cfg.seeds) {
        Sampler g(seed);
        for (int i = 0; i < cfg.samples; ++i) {
            MomentSeq<Rational> mt = random_moments(g, 13);
            MomentSeq<Rational> ms = random_moments(g, 7);
            for (std::size_t n = 1; n <= 6; ++n) {
                try {
                    corollary2(mt, ms, n);
                } catch (const SingularHankel&) {
                }
            }
        }
    }
}

TEST_CASE("functional ratio with T and S is the N-matrix ratio")
{
    QRatFun s = sym_s();
    for (const Rational& X : {Rational(2), Rational(1, 2)}) {
        for (int n = 1; n <= 4; ++n) {
            const auto un = static_cast<std::size_t>(n);
            QRatFun ratio = corollary2(t_moments(s), s_moments(QRatFun(X), s, un), un);
            QRatFun direct = identity::n_matrix_det(identity::build_n_matrix(n, X))
                             / identity::n_matrix_det(identity::build_n_matrix(n, Rational(1)));
            CHECK(ratio == direct);
        }
    }
}

TEST_CASE("q-Legendre polynomials")
{
    QRatFun s = sym_s();
    QRatFun q = s * s * s;
    CHECK(legendre(0) == Poly<QRatFun>(QRatFun(1)));
    CHECK(legendre(1) == Poly<QRatFun>(std::vector<QRatFun>{-(QRatFun(1) + s) / (QRatFun(1) + q), QRatFun(1)}));
    CHECK(legendre(2) == monic_op(t_moments(s), 2));
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(legendre(n).leading() == QRatFun(1));
    }

    qcalc::QContext<Rational> bad(Rational(-1));
    CHECK_THROWS_AS(q_legendre(bad, 1, Rational(1, 2), Rational(1)), DegenerateQ);
}

TEST_CASE("functional T")
{
    QRatFun s = sym_s();
    QRatFun q = s * s * s;
    CHECK(functional_T(Poly<QRatFun>(QRatFun(1)), s) == QRatFun(1) / (QRatFun(1) + s + s * s));
    for (std::size_t j = 0; j < 5; ++j) {
        QRatFun sj1 = s.pow(static_cast<long>(j + 1));
        CHECK(functional_T(Poly<QRatFun>::monomial(QRatFun(1), j), s) == (QRatFun(1) - sj1) / (QRatFun(1) - sj1.pow(3)));
    }
    CHECK(functional_T(legendre(1), s).is_zero());
}

TEST_CASE("functional S")
{
    QRatFun s = sym_s();
    const Rational X(5, 7);
    const QRatFun x(X);
    for (std::size_t n = 0; n < 3; ++n) {
        QRatFun sn1 = s.pow(static_cast<long>(n + 1));
        QRatFun expected = (QRatFun(1) - x * sn1) / (QRatFun(1) - x * x * x * sn1.pow(3));
        CHECK(functional_S(Poly<QRatFun>(QRatFun(1)), x, s, n) == expected);
        for (std::size_t j = 0; j < 4; ++j) {
            auto mono = Poly<QRatFun>::monomial(QRatFun(1), j);
            CHECK(functional_S(mono, QRatFun(1), s, n) == functional_T(Poly<QRatFun>::monomial(QRatFun(1), n + j), s));
        }
    }
    CHECK_THROWS_AS(functional_S(QPoly(1), Rational(1), Rational(1), 0), PoleHit);

    // S(P_1) through both routes of corollary2 at a rational point.
    const Rational sr(1, 2);
    MomentSeq<Rational> mt = t_moments(sr);
    MomentSeq<Rational> ms = s_moments(X, sr, 1);
    QPoly p1 = monic_op(mt, 1);
    CHECK(corollary2(mt, ms, 1) == functional_S(p1, X, sr, 1) / mt.apply(QPoly::x() * p1));
}

TEST_CASE("orthogonality and uniqueness, symbolic in s, n <= 5")
{
    QRatFun s = sym_s();
    std::vector<Poly<QRatFun>> q;
    for (std::size_t n = 0; n <= 5; ++n) {
        q.push_back(legendre(n));
    }
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t m = 0; m < n; ++m) {
            CHECK(functional_T(q[n] * q[m], s).is_zero());
        }
        CHECK_FALSE(functional_T(q[n] * q[n], s).is_zero());
        CHECK(q[n] == monic_op(t_moments(s), n));
    }
}
