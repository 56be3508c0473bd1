#ifndef ZDISK_ZERNIKE_BASIS_HPP
#define ZDISK_ZERNIKE_BASIS_HPP

#include "zdisk/rational_poly.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace zdisk {

/// Degree n and absolute azimuthal order m of a radial Zernike polynomial.
/// Valid when m <= n and n - m is even.
struct RadialIndex {
    unsigned n = 0;
    unsigned m = 0;

    bool valid() const noexcept { return m <= n && (n - m) % 2 == 0; }
    friend bool operator==(const RadialIndex&, const RadialIndex&) = default;
    friend auto operator<=>(const RadialIndex&, const RadialIndex&) = default;
};

/// Label (k, l) of the complex mode V_{k,l}. The degree is n = k + l and the
/// signed azimuthal order is m = k - l, so n - |m| is always even.
struct ModeIndex {
    unsigned k = 0;
    unsigned l = 0;

    unsigned n() const noexcept { return k + l; }
    int m() const noexcept { return static_cast<int>(k) - static_cast<int>(l); }
    unsigned abs_m() const noexcept { return k >= l ? k - l : l - k; }
    RadialIndex radial() const noexcept { return {n(), abs_m()}; }

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
    friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

/// Value of a complex mode at a point; bounded by sqrt(k+l+1) on the closed disk.
using ModeValue = std::complex<double>;

/// R^m_n(r) with exact rational coefficients. Only the powers m, m+2, ..., n
/// are nonzero. Evaluation is exact at the (dyadic) double argument and
/// rounds once; monomial Horner in doubles loses ~1e-6 by n = 24.
class RadialPolynomial {
public:
    RadialPolynomial(RadialIndex index, RationalPoly poly);

    RadialIndex index() const noexcept { return index_; }
    const RationalPoly& exact() const noexcept { return poly_; }

    /// Evaluation without the domain check.
    double eval_unchecked(double r) const;

private:
    RadialIndex index_;
    RationalPoly poly_;
};

/// Builds R^m_n from the closed-form sum
///   sum_s (-1)^s (n-s)! / (s! ((n+m)/2-s)! ((n-m)/2-s)!) r^(n-2s).
/// Throws DomainError for an invalid index.
RadialPolynomial build_radial(RadialIndex index);

/// Shared, lazily built instance for an index. Thread-safe; references stay valid.
const RadialPolynomial& radial(RadialIndex index);

/// All R^m_n(r) with n <= n_max at once, by the three-term recurrence
///   R^m_n = r (R^{|m-1|}_{n-1} + R^{m+1}_{n-1}) - R^m_{n-2}.
/// out[n * (n_max + 1) + m]; entries with invalid (n, m) are 0. Stable in
/// doubles, unlike monomial Horner. No domain check.
void radial_table(double r, unsigned n_max, std::vector<double>& out);

/// Throws DomainError unless 0 <= r <= 1.
double eval_radial(const RadialPolynomial& p, double r);

/// Exact termwise derivative.
RationalPoly radial_derivative(const RadialPolynomial& p);

/// V_{k,l}(r, theta) = sqrt(k+l+1) R^{|k-l|}_{k+l}(r) exp(i (k-l) theta).
ModeValue eval_mode(ModeIndex idx, double r, double theta);

/// Real Zernike pair (R cos(m theta), R sin(m theta)) with n = k+l, m = |k-l|.
std::pair<double, double> to_real_modes(ModeIndex idx, double r, double theta);

/// Residual of the radial equation
///   (1-r^2) R'' - (3r - 1/r) R' + n(n+2) R - m^2 R / r^2
/// for the mode's radial factor scaled by sqrt(n+1), rearranged as the
/// explicit second-derivative form. Requires 0 < r < 1.
double mode_ode_residual(ModeIndex idx, double r);

/// theta reduced to [-pi, pi]; odd in theta, so conjugate symmetry survives reduction.
double reduce_angle(double theta) noexcept;

} // namespace zdisk

#endif
