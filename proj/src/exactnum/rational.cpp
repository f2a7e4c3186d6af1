#include "refasm/exactnum/rational.hpp"

#include "refasm/errors.hpp"

#include <cctype>
#include <ostream>

namespace refasm {

Rational::Rational(long long v)
{
    value_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool valid_integer_literal(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                            : text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-'
        || den.front() == '+') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::abs() const
{
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rising_factorial(const Rational& a, unsigned long n)
{
    Rational r(1);
    Rational f = a;
    for (unsigned long i = 0; i < n; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

} // namespace refasm
