#include "zdisk/verify.hpp"

#include "zdisk/differential_ops.hpp"
#include "zdisk/ladder_algebra.hpp"
#include "zdisk/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace zdisk {

namespace {

CoefficientTable random_table(std::mt19937_64& rng, unsigned max_k, unsigned max_l) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CoefficientTable t(max_k, max_l);
    for (unsigned k = 0; k <= max_k; ++k)
        for (unsigned l = 0; l <= max_l; ++l) t(k, l) = {u(rng), u(rng)};
    return t;
}

std::vector<PolarPoint> interior_points() {
    std::vector<PolarPoint> pts;
    for (double r : {0.15, 0.35, 0.55, 0.75, 0.9})
        for (int j = 0; j < 8; ++j) pts.push_back({r, 0.3 + 0.785 * j});
    return pts;
}

CheckResult check(std::string name, double measured, double tol) {
    return {std::move(name), measured, tol, measured <= tol};
}

} // namespace

std::vector<CheckResult> run_verification(unsigned max_index, double tol, unsigned seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    const unsigned degree = 2 * max_index;

    {
        const auto grid = build_grid(degree);
        std::vector<std::pair<ModeIndex, SampledField>> modes;
        for (unsigned k = 0; k <= max_index; ++k)
            for (unsigned l = 0; l <= max_index; ++l)
                modes.emplace_back(ModeIndex{k, l}, SampledField::sample(grid, [&](double r, double t) {
                                       return eval_mode({k, l}, r, t);
                                   }));
        double worst = 0.0;
        for (std::size_t a = 0; a < modes.size(); ++a)
            for (std::size_t b = a; b < modes.size(); ++b) {
                const double expect = a == b ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(inner_product(modes[a].second, modes[b].second) - expect));
            }
        out.push_back(check("orthonormality", worst, tol));
    }

    {
        bool exact = true;
        for (unsigned n = 0; n <= degree; ++n)
            for (unsigned m = n % 2; m <= n; m += 2)
                for (unsigned n2 = m; n2 <= degree; n2 += 2) {
                    const RationalPoly prod = radial({n, m}).exact() * radial({n2, m}).exact();
                    const mpq_class expect = n == n2 ? mpq_class(1, 2 * (n + 1)) : mpq_class(0);
                    if (prod.integrate_unit(1) != expect) exact = false;
                }
        out.push_back(check("radial_orthogonality_exact", exact ? 0.0 : 1.0, 0.0));
    }

    {
        double worst = 0.0;
        for (unsigned k = 0; k <= max_index; ++k)
            for (unsigned l = 0; l <= max_index; ++l)
                for (int i = 1; i < 40; ++i) worst = std::max(worst, mode_ode_residual({k, l}, i / 40.0));
        out.push_back(check("radial_ode_residual", worst, tol));
    }

    {
        double worst = 0.0;
        for (unsigned k = 0; k <= max_index; ++k)
            for (unsigned l = 0; l <= max_index; ++l) {
                const auto basis = CoefficientTable::basis({k, l});
                worst = std::max(worst, max_abs_diff(apply_generator(Generator::APlus, basis),
                                                     CoefficientTable::basis({k + 1, l}, k + 1.0)));
                worst = std::max(worst, max_abs_diff(apply_generator(Generator::BPlus, basis),
                                                     CoefficientTable::basis({k, l + 1}, l + 1.0)));
                worst = std::max(worst, max_abs_diff(apply_generator(Generator::AMinus, basis),
                                                     k ? CoefficientTable::basis({k - 1, l}, double(k))
                                                       : CoefficientTable(0, 0)));
                worst = std::max(worst, max_abs_diff(apply_generator(Generator::BMinus, basis),
                                                     l ? CoefficientTable::basis({k, l - 1}, double(l))
                                                       : CoefficientTable(0, 0)));
            }
        out.push_back(check("ladder_recurrences", worst, tol));
    }

    {
        using G = Generator;
        const OperatorExpr zero;
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_table(rng, max_index, max_index);
            worst = std::max(worst, commutator_defect(G::APlus, G::AMinus, c, OperatorExpr::generator(G::A3, -2.0)));
            worst = std::max(worst, commutator_defect(G::BPlus, G::BMinus, c, OperatorExpr::generator(G::B3, -2.0)));
            worst = std::max(worst, commutator_defect(G::A3, G::APlus, c, OperatorExpr::generator(G::APlus)));
            worst = std::max(worst, commutator_defect(G::A3, G::AMinus, c, OperatorExpr::generator(G::AMinus, -1.0)));
            worst = std::max(worst, commutator_defect(G::B3, G::BPlus, c, OperatorExpr::generator(G::BPlus)));
            worst = std::max(worst, commutator_defect(G::B3, G::BMinus, c, OperatorExpr::generator(G::BMinus, -1.0)));
            worst = std::max(worst, commutator_defect(G::K, G::APlus, c, OperatorExpr::generator(G::APlus)));
            worst = std::max(worst, commutator_defect(G::L, G::BMinus, c, OperatorExpr::generator(G::BMinus, -1.0)));
            for (G a : {G::APlus, G::A3, G::AMinus})
                for (G b : {G::BPlus, G::B3, G::BMinus}) worst = std::max(worst, commutator_defect(a, b, c, zero));
        }
        out.push_back(check("su11_relations", worst, tol));
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_table(rng, max_index, max_index);
            worst = std::max(worst, max_abs_diff(casimir(Family::A, c), 0.25 * c));
            worst = std::max(worst, max_abs_diff(casimir(Family::B, c), 0.25 * c));
        }
        out.push_back(check("casimir_quarter", worst, tol));
    }

    {
        const auto pts = interior_points();
        double worst = 0.0;
        for (unsigned k = 0; k <= max_index; ++k)
            for (unsigned l = 0; l <= max_index; ++l)
                for (Generator g : {Generator::APlus, Generator::AMinus, Generator::BPlus, Generator::BMinus}) {
                    const auto diff = apply_ladder_differential(g, {k, l}, pts);
                    const auto alg = apply_generator(g, CoefficientTable::basis({k, l}));
                    const auto expect = evaluate(alg, pts);
                    for (std::size_t p = 0; p < pts.size(); ++p) worst = std::max(worst, std::abs(diff[p] - expect[p]));
                }
        out.push_back(check("differential_algebraic_equivalence", worst, tol));
    }

    {
        const auto pts = interior_points();
        double worst = 0.0;
        for (unsigned k = 0; k <= max_index; ++k)
            for (unsigned l = 0; l <= max_index; ++l) worst = std::max(worst, verify_dr2_identity({k, l}, pts));
        out.push_back(check("second_derivative_identity", worst, tol));
    }

    {
        const auto grid = build_grid(degree);
        double parseval = 0.0;
        double round_trip = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const auto c = random_table(rng, max_index, max_index);
            const auto field = synthesize(c, grid);
            const auto back = analyze(field, max_index, max_index);
            parseval = std::max(parseval, parseval_gap(back, field));
            round_trip = std::max(round_trip, max_abs_diff(back, c));
        }
        out.push_back(check("parseval_band_limited", parseval, tol));
        out.push_back(check("analyze_synthesize_round_trip", round_trip, tol));
    }

    return out;
}

} // namespace zdisk
