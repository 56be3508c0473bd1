#include "zdisk/zernike_basis.hpp"

#include "zdisk/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace zdisk {

namespace {

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

void check_radius(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius " + std::to_string(r) + " outside [0,1]");
}

} // namespace

RadialPolynomial::RadialPolynomial(RadialIndex index, RationalPoly poly)
    : index_(index), poly_(std::move(poly)) {}

double RadialPolynomial::eval_unchecked(double r) const { return poly_.eval(r); }

RadialPolynomial build_radial(RadialIndex index) {
    if (!index.valid())
        throw DomainError("invalid radial index n=" + std::to_string(index.n) + " m=" + std::to_string(index.m));
    const unsigned n = index.n;
    const unsigned m = index.m;
    std::vector<mpq_class> coeffs(n + 1, mpq_class(0));
    for (unsigned s = 0; s <= (n - m) / 2; ++s) {
        mpz_class num = factorial(n - s);
        mpz_class den = factorial(s) * factorial((n + m) / 2 - s) * factorial((n - m) / 2 - s);
        mpq_class c(num, den);
        c.canonicalize();
        if (s % 2 == 1) c = -c;
        coeffs[n - 2 * s] = c;
    }
    return RadialPolynomial(index, RationalPoly(std::move(coeffs)));
}

const RadialPolynomial& radial(RadialIndex index) {
    static std::mutex mtx;
    static std::map<RadialIndex, RadialPolynomial> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(index);
    if (it == cache.end()) it = cache.emplace(index, build_radial(index)).first;
    return it->second;
}

void radial_table(double r, unsigned n_max, std::vector<double>& out) {
    const std::size_t w = n_max + 1;
    out.assign(w * w, 0.0);
    double rn = 1.0;
    for (unsigned n = 0; n <= n_max; ++n) {
        out[n * w + n] = rn;
        rn *= r;
        for (unsigned m = n % 2; m + 2 <= n; m += 2) {
            const double left = out[(n - 1) * w + (m == 0 ? 1 : m - 1)];
            const double right = out[(n - 1) * w + m + 1];
            out[n * w + m] = r * (left + right) - (n >= 2 ? out[(n - 2) * w + m] : 0.0);
        }
    }
}

double eval_radial(const RadialPolynomial& p, double r) {
    check_radius(r);
    return p.eval_unchecked(r);
}

RationalPoly radial_derivative(const RadialPolynomial& p) { return p.exact().derivative(); }

double reduce_angle(double theta) noexcept { return std::remainder(theta, 2.0 * std::numbers::pi); }

ModeValue eval_mode(ModeIndex idx, double r, double theta) {
    check_radius(r);
    const double amp = std::sqrt(static_cast<double>(idx.n() + 1)) * radial(idx.radial()).eval_unchecked(r);
    const double phase = idx.m() * reduce_angle(theta);
    return {amp * std::cos(phase), amp * std::sin(phase)};
}

std::pair<double, double> to_real_modes(ModeIndex idx, double r, double theta) {
    check_radius(r);
    const double rad = radial(idx.radial()).eval_unchecked(r);
    const double phase = static_cast<double>(idx.abs_m()) * reduce_angle(theta);
    return {rad * std::cos(phase), rad * std::sin(phase)};
}

double mode_ode_residual(ModeIndex idx, double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("ODE residual needs 0 < r < 1, got " + std::to_string(r));
    const auto& p = radial(idx.radial());
    const RationalPoly d1 = p.exact().derivative();
    const RationalPoly d2 = d1.derivative();
    const double scale = std::sqrt(static_cast<double>(idx.n() + 1));
    const double v = scale * p.eval_unchecked(r);
    const double dv = scale * d1.eval(r);
    const double d2v = scale * d2.eval(r);
    const double n = idx.n();
    const double m = idx.m();
    const double rhs = ((3.0 * r - 1.0 / r) * dv - n * (n + 2.0) * v + m * m / (r * r) * v) / (1.0 - r * r);
    return std::abs(d2v - rhs);
}

} // namespace zdisk
