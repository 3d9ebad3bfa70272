#pragma once

#include <subcount/count.hh>

#include <optional>
#include <string>
#include <vector>

namespace subcount
{
    // Integer coefficients, lowest degree first, no trailing zeros.
    class IntPolynomial
    {
    public:
        IntPolynomial() = default;
        explicit IntPolynomial(std::vector<Integer> coefficients);

        auto coefficients() const -> const std::vector<Integer> & { return _coefficients; }
        // -1 for the zero polynomial.
        auto degree() const -> int { return static_cast<int>(_coefficients.size()) - 1; }
        auto is_zero() const -> bool { return _coefficients.empty(); }
        auto operator()(const Integer & x) const -> Integer;
        auto operator==(const IntPolynomial & other) const -> bool = default;
        auto str() const -> std::string;

    private:
        std::vector<Integer> _coefficients;
    };

    using RationalPolynomial = std::vector<Rational>;

    auto evaluate(const RationalPolynomial & p, const Rational & x) -> Rational;

    // Unique polynomial of degree < xs.size() through the given points, in monomial form.
    auto interpolate(const std::vector<Integer> & xs, const std::vector<Integer> & ys) -> RationalPolynomial;

    auto to_int_polynomial(const RationalPolynomial & p) -> std::optional<IntPolynomial>;

    // Coefficients c_i with p(x) = sum_i c_i * C(x + i, i).
    auto binomial_basis(const RationalPolynomial & p) -> std::vector<Rational>;

    // Integer b >= 0 with no real root of p in [b, inf), from the bound
    // 1 + max|negative coefficient| / leading coefficient. p must be nonzero.
    auto nonvanishing_from(const IntPolynomial & p) -> Integer;

    using IntMatrix = std::vector<std::vector<Integer>>;
    using RationalMatrix = std::vector<std::vector<Rational>>;

    auto determinant(IntMatrix m) -> Integer;
    auto inverse(const IntMatrix & m) -> std::optional<RationalMatrix>;
    auto rank(RationalMatrix m) -> int;
    auto to_rational(const IntMatrix & m) -> RationalMatrix;
}
