#include "refasm/exactnum/qw.hpp"

#include "refasm/errors.hpp"

#include <array>
#include <ostream>

namespace refasm {

Qw& Qw::operator*=(const Qw& o)
{
    Rational re = re_ * o.re_ - Rational(3) * im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Qw Qw::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero in Q(sqrt(-3))");
    }
    Rational n = norm();
    return Qw(re_ / n, -im_ / n);
}

Qw Qw::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Qw result(1);
    Qw base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

std::string Qw::to_string() const
{
    return re_.to_string() + "+" + im_.to_string() + "*r3";
}

std::ostream& operator<<(std::ostream& os, const Qw& z)
{
    return os << z.to_string();
}

Qw qw_pow_w(long k)
{
    // w^j for j = 0..5 in the basis (1, sqrt(-3)).
    static const std::array<Qw, 6> table = {
        Qw(Rational(1)),
        Qw(Rational(1, 2), Rational(1, 2)),
        Qw(Rational(-1, 2), Rational(1, 2)),
        Qw(Rational(-1)),
        Qw(Rational(-1, 2), Rational(-1, 2)),
        Qw(Rational(1, 2), Rational(-1, 2)),
    };
    long r = k % 6;
    if (r < 0) {
        r += 6;
    }
    return table[static_cast<std::size_t>(r)];
}

} // namespace refasm
