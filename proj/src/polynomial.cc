#include <subcount/polynomial.hh>

#include <sstream>
#include <utility>

namespace subcount
{
    IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) :
        _coefficients(std::move(coefficients))
    {
        while (! _coefficients.empty() && _coefficients.back() == 0)
            _coefficients.pop_back();
    }

    auto IntPolynomial::operator()(const Integer & x) const -> Integer
    {
        Integer result = 0;
        for (auto it = _coefficients.rbegin(); it != _coefficients.rend(); ++it)
            result = result * x + *it;
        return result;
    }

    auto IntPolynomial::str() const -> std::string
    {
        if (is_zero())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const auto & c = _coefficients[i];
            if (c == 0)
                continue;
            Integer magnitude = c < 0 ? Integer(-c) : c;
            if (first)
                out << (c < 0 ? "-" : "");
            else
                out << (c < 0 ? " - " : " + ");
            first = false;
            if (magnitude != 1 || i == 0)
                out << magnitude;
            if (i >= 1)
                out << (magnitude != 1 ? "*" : "") << "n";
            if (i >= 2)
                out << "^" << i;
        }
        return out.str();
    }

    auto evaluate(const RationalPolynomial & p, const Rational & x) -> Rational
    {
        Rational result = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            result = result * x + *it;
        return result;
    }

    auto interpolate(const std::vector<Integer> & xs, const std::vector<Integer> & ys) -> RationalPolynomial
    {
        if (xs.size() != ys.size() || xs.empty())
            throw PreconditionError{"interpolate: mismatched or empty samples"};
        auto size = xs.size();

        // Newton divided differences.
        std::vector<Rational> diff(ys.begin(), ys.end());
        for (std::size_t level = 1; level < size; ++level)
            for (std::size_t i = size - 1; i >= level; --i) {
                if (xs[i] == xs[i - level])
                    throw PreconditionError{"interpolate: repeated sample point"};
                diff[i] = (diff[i] - diff[i - 1]) / Rational(xs[i] - xs[i - level]);
            }

        RationalPolynomial result(size, Rational(0));
        RationalPolynomial basis{Rational(1)};
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j)
                result[j] += diff[i] * basis[j];
            RationalPolynomial next(basis.size() + 1, Rational(0));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                next[j + 1] += basis[j];
                next[j] -= basis[j] * Rational(xs[i]);
            }
            basis = std::move(next);
        }
        while (! result.empty() && result.back() == 0)
            result.pop_back();
        return result;
    }

    auto to_int_polynomial(const RationalPolynomial & p) -> std::optional<IntPolynomial>
    {
        std::vector<Integer> coefficients;
        for (auto & c : p) {
            if (boost::multiprecision::denominator(c) != 1)
                return std::nullopt;
            coefficients.push_back(boost::multiprecision::numerator(c));
        }
        return IntPolynomial{std::move(coefficients)};
    }

    namespace
    {
        // Monomial coefficients of C(x + i, i) = (x + 1)(x + 2)...(x + i) / i!.
        auto binomial_basis_polynomial(unsigned i) -> RationalPolynomial
        {
            RationalPolynomial poly{Rational(1)};
            for (unsigned j = 1; j <= i; ++j) {
                RationalPolynomial next(poly.size() + 1, Rational(0));
                for (std::size_t a = 0; a < poly.size(); ++a) {
                    next[a + 1] += poly[a];
                    next[a] += poly[a] * Rational(j);
                }
                poly = std::move(next);
            }
            Rational scale{factorial(i)};
            for (auto & c : poly)
                c /= scale;
            return poly;
        }
    }

    auto binomial_basis(const RationalPolynomial & p) -> std::vector<Rational>
    {
        RationalPolynomial rest = p;
        while (! rest.empty() && rest.back() == 0)
            rest.pop_back();
        std::vector<Rational> result(rest.size(), Rational(0));
        for (int d = static_cast<int>(rest.size()) - 1; d >= 0; --d) {
            auto basis = binomial_basis_polynomial(d);
            Rational c = rest[d] / basis[d];
            result[d] = c;
            for (int a = 0; a <= d; ++a)
                rest[a] -= c * basis[a];
        }
        return result;
    }

    auto nonvanishing_from(const IntPolynomial & p) -> Integer
    {
        if (p.is_zero())
            throw PreconditionError{"nonvanishing_from: zero polynomial"};
        auto coefficients = p.coefficients();
        if (coefficients.back() < 0)
            for (auto & c : coefficients)
                c = -c;
        const Integer & lead = coefficients.back();
        Integer worst = 0;
        for (std::size_t i = 0; i + 1 < coefficients.size(); ++i)
            if (coefficients[i] < 0 && -coefficients[i] > worst)
                worst = -coefficients[i];
        if (worst == 0)
            return coefficients.front() == 0 ? 1 : 0;
        // ceil(1 + worst / lead)
        return 1 + (worst + lead - 1) / lead;
    }

    auto determinant(IntMatrix m) -> Integer
    {
        auto n = m.size();
        if (n == 0)
            return 1;
        Integer sign = 1, previous = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                std::size_t swap = k + 1;
                while (swap < n && m[swap][k] == 0)
                    ++swap;
                if (swap == n)
                    return 0;
                std::swap(m[k], m[swap]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            previous = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    auto to_rational(const IntMatrix & m) -> RationalMatrix
    {
        RationalMatrix result;
        for (auto & row : m)
            result.emplace_back(row.begin(), row.end());
        return result;
    }

    auto inverse(const IntMatrix & m) -> std::optional<RationalMatrix>
    {
        auto n = m.size();
        auto a = to_rational(m);
        RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            inv[i][i] = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a[pivot][col] == 0)
                ++pivot;
            if (pivot == n)
                return std::nullopt;
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            Rational scale = a[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[col][j] /= scale;
                inv[col][j] /= scale;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || a[i][col] == 0)
                    continue;
                Rational factor = a[i][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] -= factor * a[col][j];
                    inv[i][j] -= factor * inv[col][j];
                }
            }
        }
        return inv;
    }

    auto rank(RationalMatrix m) -> int
    {
        int result = 0;
        std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
        for (std::size_t col = 0; col < cols && static_cast<std::size_t>(result) < rows; ++col) {
            std::size_t pivot = result;
            while (pivot < rows && m[pivot][col] == 0)
                ++pivot;
            if (pivot == rows)
                continue;
            std::swap(m[pivot], m[result]);
            for (std::size_t i = result + 1; i < rows; ++i) {
                if (m[i][col] == 0)
                    continue;
                Rational factor = m[i][col] / m[result][col];
                for (std::size_t j = col; j < cols; ++j)
                    m[i][j] -= factor * m[result][j];
            }
            ++result;
        }
        return result;
    }
}
