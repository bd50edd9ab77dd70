#ifndef MTP_SCALAR_HPP
#define MTP_SCALAR_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual input (numbers, problem files).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two interpolation nodes coincide, or are closer than the separation guard.
class separation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A linear system that should have a unique solution turned out singular.
class singular_system_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-field behaviour. Every numeric routine in the library is written
/// against this trait, so exactness is chosen by the scalar type alone.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "rational";

    static Rational from_integer(const Integer& v) { return Rational(v); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
    static Rational default_separation() { return Rational(0); }

    // "p/q", or "p" when the denominator is one.
    static std::string to_string(const Rational& v)
    {
        const Integer& den = boost::multiprecision::denominator(v);
        std::string s = boost::multiprecision::numerator(v).str();
        if (den != 1) {
            s += '/';
            s += den.str();
        }
        return s;
    }

    // Accepts "p", "p/q" and plain decimals ("-0.125", "2.5e-3"), all exactly.
    static Rational parse(std::string_view text)
    {
        text = trim(text);
        if (text.empty())
            throw parse_error("empty number");
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            Integer num = parse_integer(text.substr(0, slash));
            Integer den = parse_integer(text.substr(slash + 1));
            if (den == 0)
                throw parse_error("zero denominator in '" + std::string(text) + "'");
            return Rational(num, den);
        }
        return parse_decimal(text);
    }

private:
    static std::string_view trim(std::string_view s)
    {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    static Integer parse_integer(std::string_view s)
    {
        s = trim(s);
        bool negative = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty())
            throw parse_error("expected an integer");
        Integer v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw parse_error("invalid integer digit '" + std::string(1, c) + "'");
            v = v * 10 + (c - '0');
        }
        return negative ? Integer(-v) : v;
    }

    static Rational parse_decimal(std::string_view s)
    {
        int exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = s.substr(e + 1);
            if (!exp_text.empty() && exp_text.front() == '+')
                exp_text.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size())
                throw parse_error("invalid exponent in '" + std::string(s) + "'");
            s = s.substr(0, e);
        }
        std::string digits;
        bool negative = false;
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        bool seen_point = false;
        for (char c : s) {
            if (c == '.' && !seen_point) {
                seen_point = true;
                continue;
            }
            if (c < '0' || c > '9')
                throw parse_error("invalid number '" + std::string(s) + "'");
            digits += c;
            if (seen_point)
                --exponent;
        }
        if (digits.empty())
            throw parse_error("invalid number '" + std::string(s) + "'");
        Rational v{Integer(digits)};
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
        v = exponent >= 0 ? Rational(v * scale) : Rational(v / scale);
        return negative ? Rational(-v) : v;
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "floating";

    static double from_integer(const Integer& v) { return v.convert_to<double>(); }
    static double abs(double v) { return std::fabs(v); }
    static double to_double(double v) { return v; }
    static double default_separation() { return 1e-10; }

    // Shortest decimal that round-trips.
    static std::string to_string(double v)
    {
        std::array<char, 64> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), ptr);
    }

    // Plain decimals, plus "p/q" as a convenience.
    static double parse(std::string_view text)
    {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
            text.remove_prefix(1);
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
            text.remove_suffix(1);
        if (auto slash = text.find('/'); slash != std::string_view::npos)
            return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw parse_error("invalid number '" + std::string(text) + "'");
        return v;
    }
};

template <class T>
concept Scalar = requires {
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
};

template <Scalar T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <Scalar T>
T abs_value(const T& v)
{
    return scalar_traits<T>::abs(v);
}

template <Scalar T>
std::string to_string(const T& v)
{
    return scalar_traits<T>::to_string(v);
}

template <Scalar T>
T parse_scalar(std::string_view text)
{
    return scalar_traits<T>::parse(text);
}

} // namespace mtp

#endif // MTP_SCALAR_HPP
