#include "gram_schmidt_oracle.hpp"

#include "zdisk/errors.hpp"
#include "zdisk/zernike_basis.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zdisk;

namespace {

std::vector<mpq_class> dense(const RadialPolynomial& p) {
    std::vector<mpq_class> v(p.index().n + 1, mpq_class(0));
    for (std::size_t j = 0; j < p.exact().coeffs().size(); ++j) v[j] = p.exact().coeffs()[j];
    return v;
}

} // namespace

TEST_CASE("build_radial small cases") {
    CHECK(build_radial({0, 0}).exact() == RationalPoly({mpq_class(1)}));
    CHECK(build_radial({1, 1}).exact() == RationalPoly({mpq_class(0), mpq_class(1)}));
    CHECK(build_radial({2, 0}).exact() == RationalPoly({mpq_class(-1), mpq_class(0), mpq_class(2)}));

    // Same values from the Gram-Schmidt oracle.
    CHECK(oracle::gram_schmidt_radial(1, 1) == std::vector<mpq_class>{0, 1});
    CHECK(oracle::gram_schmidt_radial(2, 0) == std::vector<mpq_class>{-1, 0, 2});
}

TEST_CASE("build_radial rejects invalid indices") {
    CHECK_THROWS_AS(build_radial({1, 2}), DomainError);
    CHECK_THROWS_AS(build_radial({3, 0}), DomainError);
    CHECK_THROWS_AS(build_radial({4, 1}), DomainError);
}

TEST_CASE("build_radial matches Gram-Schmidt exactly for n <= 12") {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned m = n % 2; m <= n; m += 2) {
            INFO("n=" << n << " m=" << m);
            CHECK(dense(build_radial({n, m})) == oracle::gram_schmidt_radial(n, m));
        }
}

TEST_CASE("radial polynomial structure") {
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned m = n % 2; m <= n; m += 2) {
            const auto p = build_radial({n, m});
            CHECK(p.exact().eval(mpq_class(1)) == 1);
            CHECK(p.exact().degree() == static_cast<int>(n));
            for (unsigned j = 0; j < m; ++j) CHECK(sgn(p.exact().coeff(j)) == 0);
            CHECK(sgn(p.exact().coeff(m)) != 0);
            for (unsigned j = m + 1; j <= n; j += 2) CHECK(sgn(p.exact().coeff(j)) == 0);
        }
}

TEST_CASE("eval_radial") {
    CHECK(eval_radial(radial({2, 0}), 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(eval_radial(radial({0, 0}), 0.3) == 1.0);
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned m = n % 2; m <= n; m += 2) CHECK(eval_radial(radial({n, m}), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(eval_radial(radial({2, 0}), 1.5), DomainError);
    CHECK_THROWS_AS(eval_radial(radial({2, 0}), -0.1), DomainError);
    CHECK_THROWS_AS(eval_radial(radial({2, 0}), std::nan("")), DomainError);
}

TEST_CASE("eval_mode examples") {
    const auto v00 = eval_mode({0, 0}, 0.37, 2.1);
    CHECK(v00.real() == 1.0);
    CHECK(v00.imag() == 0.0);

    const auto v11 = eval_mode({1, 1}, 0.5, 0.7);
    CHECK(v11.real() == doctest::Approx(-std::sqrt(3.0) * 0.5).epsilon(1e-14));
    CHECK(std::abs(v11.imag()) < 1e-15);

    const auto v10 = eval_mode({1, 0}, 0.5, std::numbers::pi / 2);
    CHECK(std::abs(v10.real()) < 1e-15);
    CHECK(v10.imag() == doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-14));

    CHECK_THROWS_AS(eval_mode({1, 0}, 1.01, 0.0), DomainError);
    // Periodic in theta, no domain error.
    CHECK(std::abs(eval_mode({3, 1}, 0.4, 0.3 + 20 * std::numbers::pi) - eval_mode({3, 1}, 0.4, 0.3)) < 1e-12);
}

TEST_CASE("mode symmetry and bound (property)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned> idx(0, 12);
    std::uniform_real_distribution<double> ur(0.0, 1.0), ut(-10.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned k = idx(rng), l = idx(rng);
        const double r = ur(rng), t = ut(rng);
        const auto v = eval_mode({k, l}, r, t);
        CHECK(std::abs(eval_mode({l, k}, r, t) - std::conj(v)) <= 1e-14);
        CHECK(std::abs(eval_mode({k, l}, r, -t) - std::conj(v)) <= 1e-14);
        CHECK(std::abs(v) <= std::sqrt(k + l + 1.0) + 1e-12);
    }
}

TEST_CASE("to_real_modes") {
    auto [c1, s1] = to_real_modes({1, 0}, 1.0, 0.0);
    CHECK(c1 == doctest::Approx(1.0));
    CHECK(s1 == doctest::Approx(0.0));
    auto [c0, s0] = to_real_modes({0, 0}, 0.2, 1.3);
    CHECK(c0 == 1.0);
    CHECK(s0 == 0.0);
    auto [c2, s2] = to_real_modes({1, 0}, 0.5, std::numbers::pi / 2);
    CHECK(std::abs(c2) < 1e-15);
    CHECK(s2 == doctest::Approx(0.5));

    // Consistent with the complex mode up to sqrt(n+1) and the sign of m.
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned l = 0; l <= 6; ++l) {
            const auto v = eval_mode({k, l}, 0.61, 0.9);
            const auto [zc, zs] = to_real_modes({k, l}, 0.61, 0.9);
            const double s = std::sqrt(k + l + 1.0);
            CHECK(v.real() == doctest::Approx(s * zc).epsilon(1e-13));
            CHECK(v.imag() == doctest::Approx((k >= l ? 1.0 : -1.0) * s * zs).epsilon(1e-13));
        }
}

TEST_CASE("radial_derivative") {
    CHECK(radial_derivative(radial({1, 1})) == RationalPoly({mpq_class(1)}));
    CHECK(radial_derivative(radial({2, 0})) == RationalPoly({mpq_class(0), mpq_class(4)}));
    CHECK(radial_derivative(radial({0, 0})).is_zero());
}

TEST_CASE("radial ODE residual for k, l <= 12") {
    double worst = 0.0;
    for (unsigned k = 0; k <= 12; ++k)
        for (unsigned l = 0; l <= 12; ++l)
            for (int i = 1; i <= 9; ++i) worst = std::max(worst, mode_ode_residual({k, l}, i / 10.0));
    CHECK(worst < 1e-9);
    CHECK_THROWS_AS(mode_ode_residual({1, 1}, 1.0), DomainError);
    CHECK_THROWS_AS(mode_ode_residual({1, 1}, 0.0), DomainError);
}

TEST_CASE("radial orthogonality is exact") {
    for (unsigned m = 0; m <= 8; ++m)
        for (unsigned n = m; n <= 16; n += 2)
            for (unsigned n2 = m; n2 <= 16; n2 += 2) {
                const mpq_class got = (radial({n, m}).exact() * radial({n2, m}).exact()).integrate_unit(1);
                CHECK(got == (n == n2 ? mpq_class(1, 2 * (n + 1)) : mpq_class(0)));
            }
}

TEST_CASE("radial_table matches exact evaluation") {
    std::vector<double> table;
    for (double r : {0.0, 0.05, 0.37, 0.5, 0.81, 0.99, 1.0}) {
        radial_table(r, 30, table);
        for (unsigned n = 0; n <= 30; ++n)
            for (unsigned m = 0; m <= n; ++m) {
                const double want = (n - m) % 2 == 0 ? radial({n, m}).eval_unchecked(r) : 0.0;
                CHECK(table[n * 31 + m] == doctest::Approx(want).epsilon(1e-12).scale(1.0));
            }
    }
}
