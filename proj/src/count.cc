#include <subcount/count.hh>

namespace subcount
{
    auto falling_factorial(const Integer & x, unsigned length) -> Integer
    {
        if (x < 0)
            throw PreconditionError{"falling_factorial: negative base"};
        Integer result = 1;
        for (unsigned i = 0; i < length; ++i) {
            Integer factor = x - i;
            if (factor <= 0)
                return 0;
            result *= factor;
        }
        return result;
    }

    auto factorial(unsigned n) -> Integer
    {
        Integer result = 1;
        for (unsigned i = 2; i <= n; ++i)
            result *= i;
        return result;
    }

    auto binomial(const Integer & n, unsigned k) -> Integer
    {
        if (n < 0)
            throw PreconditionError{"binomial: negative upper index"};
        if (Integer(k) > n)
            return 0;
        return falling_factorial(n, k) / factorial(k);
    }

    auto exact_divide(const Integer & numerator, const Integer & denominator, const std::string & what) -> Integer
    {
        if (denominator == 0)
            throw InconsistencyError{what + ": division by zero"};
        Integer quotient, remainder;
        boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
        if (remainder != 0)
            throw InconsistencyError{what + ": " + numerator.str() + " is not divisible by " + denominator.str()};
        return quotient;
    }

    auto to_count(const Rational & value, const std::string & what) -> Count
    {
        if (boost::multiprecision::denominator(value) != 1)
            throw InconsistencyError{what + ": non-integral value"};
        Integer result = boost::multiprecision::numerator(value);
        if (result < 0)
            throw InconsistencyError{what + ": negative count " + result.str()};
        return result;
    }
}
