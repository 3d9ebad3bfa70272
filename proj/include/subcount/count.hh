#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace subcount
{
    using Integer = boost::multiprecision::cpp_int;
    using Count = Integer;
    using Rational = boost::multiprecision::cpp_rational;

    // Input does not satisfy an operation's documented precondition.
    class PreconditionError : public std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    // An identity that must hold exactly was violated: a division left a
    // remainder, a system was singular, or a count came out negative.
    class InconsistencyError : public std::logic_error
    {
        using std::logic_error::logic_error;
    };

    auto falling_factorial(const Integer & x, unsigned length) -> Integer;
    auto factorial(unsigned n) -> Integer;

    // C(n, k) for n >= 0; zero when k > n.
    auto binomial(const Integer & n, unsigned k) -> Integer;

    auto exact_divide(const Integer & numerator, const Integer & denominator, const std::string & what) -> Integer;

    // Converts an exact rational that must be a nonnegative integer.
    auto to_count(const Rational & value, const std::string & what) -> Count;

    inline auto to_string(const Integer & value) -> std::string
    {
        return value.str();
    }
}
