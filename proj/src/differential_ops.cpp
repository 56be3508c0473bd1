#include "zdisk/differential_ops.hpp"

#include "zdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zdisk {

namespace {

// sqrt(n+1) is irrational in general; it is applied in floating point after
// exact differentiation of R itself.
double mode_scale(ModeIndex idx) { return std::sqrt(static_cast<double>(idx.n() + 1)); }

} // namespace

DifferentialLadderForm ladder_form(Generator g) {
    switch (g) {
    case Generator::APlus: return {g, +1, -1, 2, +1, 2};
    case Generator::AMinus: return {g, -1, +1, 0, +1, 0};
    case Generator::BPlus: return {g, -1, -1, 2, -1, 2};
    case Generator::BMinus: return {g, +1, +1, 0, -1, 0};
    default: break;
    }
    throw DomainError("no first-order differential form for generator " + std::string(to_string(g)));
}

ModeDerivativeBundle::ModeDerivativeBundle(ModeIndex idx)
    : index(idx), value(radial(idx.radial()).exact()), first(value.derivative()), second(first.derivative()) {}

std::vector<std::complex<double>> apply_ladder_differential(Generator g, ModeIndex idx,
                                                            std::span<const PolarPoint> points) {
    const DifferentialLadderForm form = ladder_form(g);
    const ModeDerivativeBundle bundle(idx);
    const double k = idx.k;
    const double l = idx.l;
    const double scale = mode_scale(idx);
    const double sqrt_factor = std::sqrt((k + l + form.sqrt_shift) / (k + l + 1.0));

    std::vector<std::complex<double>> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const bool allow_origin = idx.k == idx.l;
        if (!(p.r < 1.0 && (p.r > 0.0 || (allow_origin && p.r == 0.0))))
            throw DomainError("ladder differential form needs 0 < r < 1, got r=" + std::to_string(p.r));
        const double v = scale * bundle.value.eval(p.r);
        const double dv = scale * bundle.first.eval(p.r);
        double bracket = form.dr_sign * (1.0 - p.r * p.r) * dv + p.r * (k + l + form.radial_shift) * v;
        if (idx.k != idx.l) bracket += form.inv_r_sign * (k - l) / p.r * v;
        // The operator acts on the full mode, whose phase is e^{i(k-l) theta}.
        const double phase = (form.phase_sign + idx.m()) * reduce_angle(p.theta);
        out.push_back(0.5 * bracket * sqrt_factor * std::polar(1.0, phase));
    }
    return out;
}

double verify_dr2_identity(ModeIndex idx, std::span<const PolarPoint> points) {
    const ModeDerivativeBundle bundle(idx);
    const double scale = mode_scale(idx);
    const double s = idx.n();
    const double d = idx.m();
    double worst = 0.0;
    for (const auto& p : points) {
        if (!(p.r > 0.0 && p.r < 1.0))
            throw DomainError("second-derivative identity needs 0 < r < 1, got r=" + std::to_string(p.r));
        const double r = p.r;
        const std::complex<double> phase = std::polar(1.0, d * reduce_angle(p.theta));
        const std::complex<double> v = scale * bundle.value.eval(r) * phase;
        const std::complex<double> dv = scale * bundle.first.eval(r) * phase;
        const std::complex<double> d2v = scale * bundle.second.eval(r) * phase;
        const std::complex<double> rhs = ((3.0 * r - 1.0 / r) * dv - s * (s + 2.0) * v + d * d / (r * r) * v) / (1.0 - r * r);
        worst = std::max(worst, std::abs(d2v - rhs));
    }
    return worst;
}

} // namespace zdisk
