// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status is
// the number of failures.

#include "refasm/asmcount.hpp"
#include "refasm/errors.hpp"
#include "refasm/identity.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace refasm;
namespace asmc = refasm::asmcount;
namespace id = refasm::identity;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            note = what;
        } else if (!ok) {
            note += "; " + what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

Outcome ac1()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 12; ++n) {
        asmc::RefinedCount rc = asmc::count_refined(n);
        for (int r = 1; r <= n; ++r) {
            o.require(rc.by_position[static_cast<std::size_t>(r - 1)] == asmc::closed_form_A_refined(n, r),
                      "B(" + std::to_string(n) + "," + std::to_string(r) + ") != A(n,r)");
        }
        if (n <= 6) {
            o.require(asmc::enumeration_histogram(n) == rc.by_position,
                      "enumeration disagrees with DP at n=" + std::to_string(n));
        }
    }
    o.require(asmc::count_refined(4).by_position == ints({7, 14, 14, 7}), "n=4 spot values");
    o.require(asmc::count_refined(5).by_position == ints({42, 105, 135, 105, 42}), "n=5 spot values");
    o.require(asmc::count_refined(4).total == 42 && asmc::count_refined(5).total == 429, "totals 42, 429");
    const double secs = seconds_since(t0);
    o.require(secs < 5.0, "took " + std::to_string(secs) + " s, budget 5 s");
    return o;
}

Outcome ac2()
{
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        o.require(asmc::closed_form_A(n) == asmc::count_refined(n).total, "A(" + std::to_string(n) + ") != DP total");
    }
    o.require(asmc::closed_form_A(7) == 218348, "A(7) != 218348");
    return o;
}

Outcome ac3()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 0; n <= 40; ++n) {
        id::Verdict v = id::verify_done(n);
        o.require(v.pass, "done fails at n=" + std::to_string(n));
    }
    o.require(id::lhs_done(0) == QPoly(1) && id::rhs_done(0) == QPoly(1), "n=0 anchor");
    QPoly six(std::vector<Rational>{Rational(6), Rational(6)});
    o.require(id::lhs_done(1) == six && id::rhs_done(1) == six, "n=1 anchor 6+6X");
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, "took " + std::to_string(secs) + " s, budget 120 s");
    return o;
}

Outcome ac4()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (const Rational& X : {Rational(2), Rational(1, 2), Rational(-3), Rational(5, 7)}) {
        for (int n = 0; n <= 5; ++n) {
            o.require(id::verify_notyetdone(n, X).pass,
                      "notyetdone fails at n=" + std::to_string(n) + ", X=" + X.to_string());
        }
    }
    o.require(id::lhs_notyetdone(0, Rational(2)) == Rational(3, 7), "n=0, X=2 left side");
    o.require(id::rhs_notyetdone(0, Rational(2)) == Qw(Rational(3, 7)), "n=0, X=2 right side");
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, "took " + std::to_string(secs) + " s, budget 120 s");
    return o;
}

Outcome ac5()
{
    Outcome o;
    for (int n = 0; n <= 8; ++n) {
        id::Verdict v = id::legendre_orthogonality(n);
        o.require(v.pass, "orthogonality/uniqueness fails at n=" + std::to_string(n));
    }
    return o;
}

Outcome ac6()
{
    Outcome o;
    for (int n = 0; n <= 8; ++n) {
        o.require(id::prop_bottom(n).pass, "symbolic mismatch at n=" + std::to_string(n));
    }
    QRatFun s = QRatFun::variable();
    o.require(id::prop_bottom_closed_form(0) == (QRatFun(1) - s) / (QRatFun(1) - s * s * s), "n=0 anchor");
    return o;
}

Outcome ac7()
{
    Outcome o;
    const Rational s(1, 2), X(1, 3);
    const Rational eps(Integer(1), Integer("1000000000000000000000000000000"));
    for (int n = 0; n <= 6; ++n) {
        id::TailBracket b = id::prop_top_bracket(n, s, X, 60);
        o.require(b.contains(id::prop_top_oracle(n, s, X)), "bracket misses the oracle at n=" + std::to_string(n));
        o.require(b.tail_bound < eps, "tail bound >= 1e-30 at n=" + std::to_string(n));
    }
    return o;
}

Outcome ac8()
{
    Outcome o;
    for (int n = 0; n <= 8; ++n) {
        o.require(id::hankel_vs_corollary(n).pass, "mismatch at n=" + std::to_string(n));
    }
    return o;
}

Outcome ac9()
{
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        auto b = asmc::count_refined(n).by_position;
        o.require(std::equal(b.begin(), b.end(), b.rbegin()), "B(n,r) not palindromic at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 40; ++n) {
        try {
            QPoly lhs = id::lhs_done(n);
            Poly<Qw> raw = id::rhs_done_qw(n);
            bool real = true;
            for (const auto& c : raw.coefficients()) {
                real = real && c.is_rational();
            }
            o.require(real, "rhs has a sqrt(-3) component at n=" + std::to_string(n));
            QPoly rhs = id::rhs_done(n);
            auto c = rhs.coefficients();
            o.require(std::equal(c.begin(), c.end(), c.rbegin()), "rhs not palindromic at n=" + std::to_string(n));
        } catch (const AnnihilationFailed& e) {
            o.require(false, e.what());
        } catch (const NonzeroRemainder& e) {
            o.require(false, e.what());
        }
    }
    return o;
}

Outcome ac10()
{
    Outcome o;
    const Rational X(1, 5);
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    for (int n = 0; n <= 40; ++n) {
        lhs.push_back(id::lhs_done(n).eval(X));
        rhs.push_back(id::rhs_done(n).eval(X));
    }
    std::optional<id::Recurrence> rec;
    int degree = 0;
    for (; degree <= 6 && !rec; ++degree) {
        rec = id::fit_recurrence(lhs, 2, degree);
    }
    o.require(rec.has_value(), "no order-2 recurrence with coefficient degree <= 6");
    if (rec) {
        bool nontrivial = false;
        for (const auto& c : rec->coeffs) {
            nontrivial = nontrivial || !c.is_zero_poly();
        }
        o.require(nontrivial && rec->coeffs.size() == 3, "degenerate recurrence");
        o.require(rec->annihilates(lhs), "recurrence does not annihilate the left side");
        o.require(rec->annihilates(rhs), "recurrence does not annihilate the right side");
        o.note = "coefficient degree " + std::to_string(degree - 1);
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "refined counts equal A(n,r) for n <= 12", ac1},
        {"AC2", "A(n) product formula equals DP total for n <= 12", ac2},
        {"AC3", "identity (Done) for 0 <= n <= 40", ac3},
        {"AC4", "identity (NotYetDone) for n <= 5, X in {2, 1/2, -3, 5/7}", ac4},
        {"AC5", "q-Legendre orthogonality and uniqueness, symbolic, n <= 8", ac5},
        {"AC6", "T(x^n Q_n) product form, symbolic, n <= 8", ac6},
        {"AC7", "truncated series bracket at s=1/2, X=1/3, K=60, n <= 6", ac7},
        {"AC8", "det N_{n+1}(1) against telescoped product, symbolic, n <= 8", ac8},
        {"AC9", "palindromy, realness, no annihilation or division failure", ac9},
        {"AC10", "order-2 recurrence annihilating both sides at X=1/5, n <= 40", ac10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = seconds_since(t0);
        std::printf("%s %-4s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.note.empty() ? "" : " -- ", o.note.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures;
}
