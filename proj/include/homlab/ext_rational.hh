#ifndef HOMLAB_GUARD_HOMLAB_EXT_RATIONAL_HH
#define HOMLAB_GUARD_HOMLAB_EXT_RATIONAL_HH 1

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace homlab
{
    using Rational = mpq_class;

    using std::to_string;

    auto parse_rational(std::string_view text) -> Rational;

    /// Always lowest terms, "p" when the denominator is one.
    auto to_string(const Rational & value) -> std::string;

    /**
     * A rational number or +infinity. Addition absorbs at infinity; there is no
     * subtraction, since costs only ever accumulate.
     */
    class ExtRational
    {
        private:
            Rational _value;
            bool _infinite = false;

        public:
            ExtRational() = default;
            ExtRational(const Rational & value) : _value(value) { _value.canonicalize(); }
            ExtRational(long value) : _value(value) { }
            ExtRational(int value) : _value(value) { }

            [[nodiscard]] static auto infinity() -> ExtRational
            {
                ExtRational result;
                result._infinite = true;
                return result;
            }

            [[nodiscard]] auto is_infinite() const -> bool { return _infinite; }
            [[nodiscard]] auto is_finite() const -> bool { return ! _infinite; }

            /// Only meaningful when finite.
            [[nodiscard]] auto value() const -> const Rational & { return _value; }

            auto operator+= (const ExtRational & other) -> ExtRational &;

            friend auto operator+ (ExtRational a, const ExtRational & b) -> ExtRational
            {
                a += b;
                return a;
            }

            friend auto operator== (const ExtRational & a, const ExtRational & b) -> bool;
            friend auto operator<=> (const ExtRational & a, const ExtRational & b) -> std::strong_ordering;
    };

    auto operator== (const ExtRational & a, const ExtRational & b) -> bool;
    auto operator<=> (const ExtRational & a, const ExtRational & b) -> std::strong_ordering;

    /// Accepts "inf", an integer, or "p/q".
    auto parse_ext_rational(std::string_view text) -> ExtRational;

    auto to_string(const ExtRational & value) -> std::string;

    auto operator<< (std::ostream & stream, const ExtRational & value) -> std::ostream &;
}

#endif
