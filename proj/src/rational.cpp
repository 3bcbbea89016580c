#include "npg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace npg {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

// Accepts plain decimals such as "0.25" exactly (as 25/100).
Rational parse_decimal(std::string_view s)
{
    auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (digits.empty() || digits == "-" || digits == "+")
        digits += "0";
    Integer num = parse_integer(digits + frac);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

Rational make_ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("make_ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (text.find('.') != std::string_view::npos)
            return parse_decimal(text);
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& value)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rational from_double(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("cannot convert non-finite double to rational");
    Rational r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

}  // namespace npg
