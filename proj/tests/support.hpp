#pragma once

#include "refasm/exactnum.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace refasm::test {

struct SeedSet {
    std::vector<std::uint64_t> seeds;
    int samples = 0;
};

inline SeedSet seeds_for(const std::string& key)
{
    std::ifstream in(std::string(REFASM_TEST_DATA_DIR) + "/property_seeds.json");
    nlohmann::json doc = nlohmann::json::parse(in);
    const auto& entry = doc.at(key);
    return {entry.at("seeds").get<std::vector<std::uint64_t>>(), entry.at("samples").get<int>()};
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 30)
    {
        return Rational(Integer(integer(-bound, bound)), Integer(integer(1, bound)));
    }

    Rational nonzero_rational(long bound = 30)
    {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) {
                return r;
            }
        }
    }

    Qw qw(long bound = 12) { return Qw(rational(bound), rational(bound)); }

    QPoly poly(int max_degree, long bound = 9)
    {
        std::vector<Rational> c;
        const long d = integer(0, max_degree);
        for (long i = 0; i <= d; ++i) {
            c.push_back(rational(bound));
        }
        return QPoly(std::move(c));
    }

    QPoly nonzero_poly(int max_degree, long bound = 9)
    {
        for (;;) {
            QPoly p = poly(max_degree, bound);
            if (!p.is_zero_poly()) {
                return p;
            }
        }
    }

    zkernel::Coeffs big_ints(std::size_t len, int bits)
    {
        zkernel::Coeffs out;
        for (std::size_t i = 0; i < len; ++i) {
            Integer v = 0;
            for (int b = 0; b < bits; b += 30) {
                v = v * (Integer(1) << 30) + Integer(integer(0, (1L << 30) - 1));
            }
            if (integer(0, 1) == 1) {
                v = -v;
            }
            out.push_back(v);
        }
        if (!out.empty() && sgn(out.back()) == 0) {
            out.back() = 1;
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

/// Laplace expansion along the first row; exponential, for small oracles.
template <class T>
T cofactor_det(const SquareMatrix<T>& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return T(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        T term = m(0, j) * cofactor_det(m.minor(0, j));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline QPoly qpoly(std::initializer_list<Rational> c)
{
    return QPoly(std::vector<Rational>(c));
}

} // namespace refasm::test
