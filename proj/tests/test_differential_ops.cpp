#include "zdisk/differential_ops.hpp"
#include "zdisk/errors.hpp"
#include "zdisk/transform.hpp"

#include <doctest.h>

#include <cmath>

using namespace zdisk;
using G = Generator;

namespace {

std::vector<PolarPoint> grid_points() {
    std::vector<PolarPoint> pts;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.95})
        for (int j = 0; j < 8; ++j) pts.push_back({r, -3.0 + 0.8 * j});
    return pts;
}

} // namespace

TEST_CASE("ladder forms") {
    const auto ap = ladder_form(G::APlus);
    CHECK(ap.phase_sign == 1);
    CHECK(ap.dr_sign == -1);
    CHECK(ap.radial_shift == 2);
    CHECK(ap.inv_r_sign == 1);
    CHECK(ap.sqrt_shift == 2);
    const auto bm = ladder_form(G::BMinus);
    CHECK(bm.phase_sign == 1);
    CHECK(bm.dr_sign == 1);
    CHECK(bm.inv_r_sign == -1);
    CHECK(bm.sqrt_shift == 0);
    CHECK_THROWS_AS(ladder_form(G::A3), DomainError);
    CHECK_THROWS_AS(ladder_form(G::K), DomainError);
}

TEST_CASE("apply_ladder_differential examples") {
    const std::vector<PolarPoint> pt{{0.5, 0.7}};
    const auto ap = apply_ladder_differential(G::APlus, {0, 0}, pt);
    CHECK(std::abs(ap[0] - std::sqrt(2.0) * 0.5 * std::polar(1.0, 0.7)) < 1e-15);
    CHECK(std::abs(ap[0] - eval_mode({1, 0}, 0.5, 0.7)) < 1e-15);

    const auto bp = apply_ladder_differential(G::BPlus, {0, 0}, pt);
    CHECK(std::abs(bp[0] - std::sqrt(2.0) * 0.5 * std::polar(1.0, -0.7)) < 1e-15);
    CHECK(std::abs(bp[0] - eval_mode({0, 1}, 0.5, 0.7)) < 1e-15);

    for (unsigned l = 0; l <= 6; ++l) {
        const auto am = apply_ladder_differential(G::AMinus, {0, l}, pt);
        CHECK(std::abs(am[0]) < 1e-13);
    }
    CHECK(apply_ladder_differential(G::AMinus, {0, 0}, pt)[0] == std::complex<double>(0.0));
}

TEST_CASE("origin and rim handling") {
    const std::vector<PolarPoint> origin{{0.0, 1.0}};
    CHECK_NOTHROW(apply_ladder_differential(G::APlus, {2, 2}, origin));
    CHECK_THROWS_AS(apply_ladder_differential(G::APlus, {2, 1}, origin), DomainError);
    const std::vector<PolarPoint> rim{{1.0, 0.0}};
    CHECK_THROWS_AS(apply_ladder_differential(G::BPlus, {1, 1}, rim), DomainError);
    CHECK_THROWS_AS(verify_dr2_identity({1, 1}, rim), DomainError);
    CHECK_THROWS_AS(verify_dr2_identity({1, 1}, origin), DomainError);

    // At the origin with k == l only the r (k+l+c) and D_R terms survive.
    const auto at0 = apply_ladder_differential(G::APlus, {1, 1}, origin)[0];
    CoefficientTable expect = CoefficientTable::basis({2, 1}, 2.0);
    CHECK(std::abs(at0 - evaluate(expect, 0.0, 1.0)) < 1e-13);
}

TEST_CASE("differential forms agree with the recurrences for k, l <= 10") {
    const auto pts = grid_points();
    double worst = 0.0;
    for (unsigned k = 0; k <= 10; ++k)
        for (unsigned l = 0; l <= 10; ++l)
            for (G g : {G::APlus, G::AMinus, G::BPlus, G::BMinus}) {
                const auto diff = apply_ladder_differential(g, {k, l}, pts);
                const auto expect = evaluate(apply_generator(g, CoefficientTable::basis({k, l})), pts);
                for (std::size_t p = 0; p < pts.size(); ++p) worst = std::max(worst, std::abs(diff[p] - expect[p]));
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("second-derivative identity") {
    const std::vector<PolarPoint> two{{0.3, 0.2}, {0.7, 1.1}};
    CHECK(verify_dr2_identity({1, 1}, two) < 1e-10);
    CHECK(verify_dr2_identity({0, 0}, two) == 0.0);
    const std::vector<PolarPoint> half{{0.5, 0.0}};
    CHECK(verify_dr2_identity({3, 1}, half) < 1e-10);

    const auto pts = grid_points();
    double worst = 0.0;
    for (unsigned k = 0; k <= 10; ++k)
        for (unsigned l = 0; l <= 10; ++l) worst = std::max(worst, verify_dr2_identity({k, l}, pts));
    CHECK(worst < 1e-9);
}

TEST_CASE("identity restricted to one mode matches the radial ODE residual") {
    for (unsigned k = 0; k <= 8; ++k)
        for (unsigned l = 0; l <= 8; ++l)
            for (double r : {0.2, 0.45, 0.8}) {
                const std::vector<PolarPoint> p{{r, 0.0}};
                CHECK(verify_dr2_identity({k, l}, p) == doctest::Approx(mode_ode_residual({k, l}, r)).epsilon(1e-6).scale(1e-12));
            }
}
