#include <homlab/error.hh>
#include <homlab/ext_rational.hh>

#include <cctype>

using std::string;
using std::string_view;

namespace
{
    auto valid_integer(string_view text) -> bool
    {
        if (text.empty())
            return false;
        std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (start == text.size())
            return false;
        for (auto i = start ; i < text.size() ; ++i)
            if (! std::isdigit(static_cast<unsigned char>(text[i])))
                return false;
        return true;
    }

    auto strip_plus(string_view text) -> string
    {
        if (! text.empty() && text[0] == '+')
            text.remove_prefix(1);
        return string{ text };
    }
}

auto homlab::parse_rational(string_view text) -> Rational
{
    auto slash = text.find('/');
    if (slash == string_view::npos) {
        if (! valid_integer(text))
            throw InvalidInput("not a rational number: '" + string{ text } + "'");
        return Rational{ mpz_class{ strip_plus(text) } };
    }

    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (! valid_integer(num) || ! valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw InvalidInput("not a rational number: '" + string{ text } + "'");

    mpz_class d{ string{ den } };
    if (d == 0)
        throw InvalidInput("zero denominator in '" + string{ text } + "'");

    Rational result{ mpz_class{ strip_plus(num) }, d };
    result.canonicalize();
    return result;
}

auto homlab::to_string(const Rational & value) -> string
{
    return value.get_str();
}

auto homlab::ExtRational::operator+= (const ExtRational & other) -> ExtRational &
{
    if (_infinite || other._infinite) {
        _infinite = true;
        _value = 0;
    }
    else
        _value += other._value;
    return *this;
}

auto homlab::operator== (const ExtRational & a, const ExtRational & b) -> bool
{
    if (a._infinite || b._infinite)
        return a._infinite == b._infinite;
    return a._value == b._value;
}

auto homlab::operator<=> (const ExtRational & a, const ExtRational & b) -> std::strong_ordering
{
    if (a._infinite || b._infinite)
        return static_cast<int>(a._infinite) <=> static_cast<int>(b._infinite);
    int c = cmp(a._value, b._value);
    return c <=> 0;
}

auto homlab::parse_ext_rational(string_view text) -> ExtRational
{
    if (text == "inf" || text == "+inf" || text == "infinity")
        return ExtRational::infinity();
    return ExtRational{ parse_rational(text) };
}

auto homlab::to_string(const ExtRational & value) -> string
{
    return value.is_infinite() ? string{ "inf" } : value.value().get_str();
}

auto homlab::operator<< (std::ostream & stream, const ExtRational & value) -> std::ostream &
{
    return stream << to_string(value);
}
