#ifndef ZDISK_DIFFERENTIAL_OPS_HPP
#define ZDISK_DIFFERENTIAL_OPS_HPP

#include "zdisk/ladder_algebra.hpp"
#include "zdisk/zernike_basis.hpp"

#include <complex>
#include <span>
#include <vector>

namespace zdisk {

/// First-order differential form of a ladder generator acting on one mode,
/// with K and L replaced by the mode's eigenvalues:
///
///   (e^{phase_sign i theta} / 2)
///     [ dr_sign (1 - r^2) d/dr + r (k + l + radial_shift) + inv_r_sign (k - l) / r ]
///     sqrt((k + l + sqrt_shift) / (k + l + 1))
struct DifferentialLadderForm {
    Generator generator;
    int phase_sign;
    int dr_sign;
    unsigned radial_shift;
    int inv_r_sign;
    unsigned sqrt_shift;
};

/// Throws DomainError for generators other than A+, A-, B+, B-.
DifferentialLadderForm ladder_form(Generator g);

/// Exact radial factor of V_{k,l} (including sqrt(k+l+1)) and its first two derivatives.
struct ModeDerivativeBundle {
    ModeIndex index;
    RationalPoly value;
    RationalPoly first;
    RationalPoly second;

    explicit ModeDerivativeBundle(ModeIndex idx);
};

/// Pointwise value of the differential form of g applied to V_{k,l}.
/// Requires 0 < r < 1, except that r = 0 is accepted when k == l (the 1/r
/// term vanishes identically there). Throws DomainError otherwise.
std::vector<std::complex<double>> apply_ladder_differential(Generator g, ModeIndex idx,
                                                            std::span<const PolarPoint> points);

/// Max over points of |D_R^2 V - RHS V| where
///   RHS = (1/(1-R^2)) [ (3R - 1/R) D_R - (K+L)(K+L+2) + (K-L)^2 / R^2 ].
/// Requires 0 < r < 1 at every point.
double verify_dr2_identity(ModeIndex idx, std::span<const PolarPoint> points);

} // namespace zdisk

#endif
