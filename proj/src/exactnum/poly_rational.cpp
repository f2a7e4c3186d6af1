#include "refasm/exactnum/poly_rational.hpp"

#include "refasm/exactnum/zkernel.hpp"

#include <array>
#include <cstdint>

namespace refasm {

namespace {

// Integer image: a = (1/den) * ints.
struct Scaled {
    zkernel::Coeffs ints;
    Integer den;
};

Scaled clear_denominators(std::span<const Rational> a)
{
    Scaled s{{}, 1};
    for (const auto& c : a) {
        mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    s.ints.reserve(a.size());
    for (const auto& c : a) {
        if (c.is_integer()) {
            s.ints.push_back(c.numerator() * s.den);
        } else {
            s.ints.push_back(c.numerator() * (s.den / c.denominator()));
        }
    }
    return s;
}

std::vector<Rational> to_rationals(const zkernel::Coeffs& ints, const Integer& den)
{
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& c : ints) {
        out.push_back(den == 1 ? Rational(c) : Rational(c, den));
    }
    return out;
}

std::vector<Rational> schoolbook(std::span<const Rational> a, std::span<const Rational> b)
{
    std::vector<Rational> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            v[i + j] += a[i] * b[j];
        }
    }
    return v;
}

} // namespace

namespace detail {

std::vector<Rational> mul_rational(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    if (std::min(a.size(), b.size()) < zkernel::kKroneckerThreshold) {
        return schoolbook(a, b);
    }
    Scaled sa = clear_denominators(a);
    Scaled sb = clear_denominators(b);
    return to_rationals(zkernel::mul(sa.ints, sb.ints), sa.den * sb.den);
}

std::vector<Rational> exact_div_rational(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() < b.size()) {
        if (a.empty()) {
            return {};
        }
        throw NonzeroRemainder("dividend degree is below divisor degree");
    }
    if (std::min(a.size() - b.size() + 1, b.size()) < zkernel::kKroneckerThreshold) {
        std::vector<Rational> rem(a.begin(), a.end());
        const std::size_t db = b.size() - 1;
        std::vector<Rational> quot(a.size() - db);
        const Rational inv = b.back().inverse();
        for (std::size_t k = quot.size(); k-- > 0;) {
            if (rem[k + db].is_zero()) {
                continue;
            }
            Rational c = rem[k + db] * inv;
            for (std::size_t j = 0; j < db; ++j) {
                rem[k + j] -= c * b[j];
            }
            rem[k + db] = Rational(0);
            quot[k] = std::move(c);
        }
        for (std::size_t j = 0; j < db; ++j) {
            if (!rem[j].is_zero()) {
                throw NonzeroRemainder("divisor of degree " + std::to_string(db) + " leaves a nonzero remainder");
            }
        }
        return quot;
    }
    auto [ca, pa] = primitive_part(QPoly(std::vector<Rational>(a.begin(), a.end())));
    auto [cb, pb] = primitive_part(QPoly(std::vector<Rational>(b.begin(), b.end())));
    zkernel::Coeffs ia;
    zkernel::Coeffs ib;
    for (const auto& c : pa.coefficients()) {
        ia.push_back(c.numerator());
    }
    for (const auto& c : pb.coefficients()) {
        ib.push_back(c.numerator());
    }
    auto q = zkernel::exact_div(ia, ib);
    if (!q) {
        throw NonzeroRemainder("divisor of degree " + std::to_string(b.size() - 1)
                               + " does not divide a polynomial of degree " + std::to_string(a.size() - 1));
    }
    Rational scale = ca / cb;
    std::vector<Rational> out;
    out.reserve(q->size());
    for (const auto& c : *q) {
        out.push_back(scale * Rational(c));
    }
    return out;
}

} // namespace detail

std::pair<Rational, QPoly> primitive_part(const QPoly& p)
{
    if (p.is_zero_poly()) {
        return {Rational(1), p};
    }
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(p.coefficients().size());
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(ints.size());
    for (auto& v : ints) {
        coeffs.emplace_back(Integer(v / content));
    }
    return {Rational(content, den_lcm), QPoly(std::move(coeffs))};
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1u) {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1u;
    }
    return r;
}

void trim(Residues& v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

// Degree of gcd(a, b) over Z/p; a and b have nonzero leading residues.
int gcd_degree_mod(Residues a, Residues b, std::uint64_t p)
{
    while (!b.empty()) {
        std::uint64_t inv = pow_mod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t c = a.back() * inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
            }
            trim(a);
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

Residues reduce_mod(const QPoly& integral, std::uint64_t p)
{
    Residues r;
    r.reserve(integral.coefficients().size());
    Integer tmp;
    for (const auto& c : integral.coefficients()) {
        mpz_fdiv_r_ui(tmp.get_mpz_t(), c.raw().get_num_mpz_t(), p);
        r.push_back(tmp.get_ui());
    }
    return r;
}

// True when a modular image proves gcd(a, b) = 1. Inputs are primitive
// integral polynomials of positive degree.
bool provably_coprime(const QPoly& a, const QPoly& b)
{
    static constexpr std::array<std::uint64_t, 3> primes = {2147483647ULL, 2147483629ULL,
                                                            2147483587ULL};
    for (auto p : primes) {
        Residues ra = reduce_mod(a, p);
        Residues rb = reduce_mod(b, p);
        if (ra.back() == 0 || rb.back() == 0) {
            continue;
        }
        return gcd_degree_mod(std::move(ra), std::move(rb), p) == 0;
    }
    return false;
}

} // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b)
{
    if (a.is_zero_poly()) {
        return b.is_zero_poly() ? b : b.monic();
    }
    if (b.is_zero_poly()) {
        return a.monic();
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return QPoly(1);
    }
    QPoly pa = primitive_part(a).second;
    QPoly pb = primitive_part(b).second;
    if (provably_coprime(pa, pb)) {
        return QPoly(1);
    }
    {
        zkernel::Coeffs ia;
        zkernel::Coeffs ib;
        for (const auto& c : pa.coefficients()) {
            ia.push_back(c.numerator());
        }
        for (const auto& c : pb.coefficients()) {
            ib.push_back(c.numerator());
        }
        if (auto g = zkernel::gcd_heuristic(ia, ib)) {
            return QPoly(to_rationals(*g, 1)).monic();
        }
    }
    if (pa.degree() < pb.degree()) {
        std::swap(pa, pb);
    }
    while (!pb.is_zero_poly()) {
        QPoly r = poly_divrem(pa, pb).second;
        pa = std::move(pb);
        pb = r.is_zero_poly() ? std::move(r) : primitive_part(r).second;
    }
    return pa.monic();
}

QPoly poly_lcm(const QPoly& a, const QPoly& b)
{
    if (a.is_zero_poly() || b.is_zero_poly()) {
        return QPoly();
    }
    QPoly g = poly_gcd(a, b);
    return (poly_exact_div(a, g) * b).monic();
}

} // namespace refasm
