#ifndef ZDISK_RATIONAL_POLY_HPP
#define ZDISK_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace zdisk {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[j] is the coefficient of r^j; trailing zeros are trimmed so that
/// the zero polynomial has an empty coefficient vector.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> coeffs);

    static RationalPoly monomial(std::size_t power, const mpq_class& c = 1);

    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    mpq_class coeff(std::size_t power) const;

    mpq_class eval(const mpq_class& x) const;
    /// Exact at x (a dyadic rational), rounded once.
    double eval(double x) const;

    RationalPoly derivative() const;
    /// Exact value of the integral of p(r) * r^weight_power over [0,1].
    mpq_class integrate_unit(std::size_t weight_power = 0) const;

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const mpq_class& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const mpq_class& s) { return a *= s; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b);

    std::string to_string() const;

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

} // namespace zdisk

#endif
