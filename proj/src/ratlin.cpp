#include "radrank/ratlin.hpp"

#include <cctype>

namespace radrank {

std::string to_string(const Integer& z)
{
    return z.str();
}

std::string to_string(const Rational& q)
{
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer integer_from(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true))
        throw FormatError("invalid rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(integer_from(num));

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
        throw FormatError("invalid rational '" + std::string(text) + "'");
    const Integer d = integer_from(den);
    if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return Rational(integer_from(num), d);
}

}  // namespace radrank
