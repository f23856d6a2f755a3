#include "nhr/rational.hpp"

#include "nhr/error.hpp"

#include <cctype>

namespace nhr {

namespace {

    BigInt parse_integer(std::string_view digits, std::string_view whole)
    {
        require(!digits.empty(), ErrorKind::Parse, "empty number in '" + std::string(whole) + "'");
        for (char c : digits)
            require(std::isdigit(static_cast<unsigned char>(c)) != 0, ErrorKind::Parse,
                    "bad digit in '" + std::string(whole) + "'");
        return BigInt(std::string(digits));
    }

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        require(den != 0, ErrorKind::Parse, "zero denominator in '" + std::string(whole) + "'");
        value = Rational(parse_integer(text.substr(0, slash), whole), den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        std::string_view intpart = text.substr(0, dot);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = (intpart.empty() ? BigInt(0) : parse_integer(intpart, whole)) * scale +
                     (frac.empty() ? BigInt(0) : parse_integer(frac, whole));
        value = Rational(num, scale);
    } else {
        value = Rational(parse_integer(text, whole));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt floor(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt quotient = num / den;
    if (num % den != 0 && num < 0) quotient -= 1;
    return quotient;
}

BigInt ceil(const Rational& q) { return -floor(Rational(-q)); }

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

}  // namespace nhr
