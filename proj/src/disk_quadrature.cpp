#include "zdisk/disk_quadrature.hpp"

#include "zdisk/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zdisk {

double QuadratureGrid::theta(std::size_t j) const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
}

double QuadratureGrid::theta_weight() const noexcept { return 2.0 * std::numbers::pi / static_cast<double>(n_theta); }

void gauss_legendre(std::size_t count, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(count, 0.0);
    weights.assign(count, 0.0);
    const auto legendre = [count](double x, double& deriv) {
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= count; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
            p0 = p1;
            p1 = pk;
        }
        deriv = static_cast<double>(count) * (x * p1 - p0) / (x * x - 1.0);
        return p1;
    };
    const std::size_t half = (count + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(count) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const double dx = legendre(x, dp) / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre(x, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[count - 1 - i] = x;
        weights[count - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
}

GridPtr build_grid(unsigned max_degree) { return build_grid(max_degree, max_degree + 2); }

GridPtr build_grid(unsigned max_degree, std::size_t radial_nodes, std::size_t n_theta) {
    const std::size_t min_theta = 2 * static_cast<std::size_t>(max_degree) + 3;
    if (radial_nodes < static_cast<std::size_t>(max_degree) + 2)
        throw UsageError("radial node count " + std::to_string(radial_nodes) + " too small for degree " +
                         std::to_string(max_degree));
    if (n_theta != 0 && n_theta < min_theta)
        throw UsageError("angle count " + std::to_string(n_theta) + " too small for degree " + std::to_string(max_degree));
    std::vector<double> x, w;
    gauss_legendre(radial_nodes, x, w);
    auto grid = std::make_shared<QuadratureGrid>();
    grid->radial_nodes.resize(radial_nodes);
    grid->radial_weights.resize(radial_nodes);
    for (std::size_t i = 0; i < radial_nodes; ++i) {
        const double r = 0.5 * (x[i] + 1.0);
        grid->radial_nodes[i] = r;
        grid->radial_weights[i] = 0.5 * w[i] * r;
    }
    grid->n_theta = n_theta == 0 ? min_theta : n_theta;
    grid->max_exact_degree = max_degree;
    return grid;
}

SampledField::SampledField(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size()) {}

SampledField::SampledField(GridPtr grid, std::vector<std::complex<double>> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size())
        throw UsageError("sample count " + std::to_string(values_.size()) + " does not match grid size " +
                         std::to_string(grid_->size()));
}

SampledField SampledField::sample(GridPtr grid, const std::function<std::complex<double>(double, double)>& f) {
    SampledField out(std::move(grid));
    const auto& g = out.grid();
    for (std::size_t i = 0; i < g.n_radial(); ++i)
        for (std::size_t j = 0; j < g.n_theta; ++j) out.at(i, j) = f(g.radial_nodes[i], g.theta(j));
    return out;
}

bool SampledField::same_grid(const SampledField& other) const noexcept {
    return grid_ == other.grid_ || *grid_ == *other.grid_;
}

std::complex<double> inner_product(const SampledField& f, const SampledField& g) {
    if (!f.same_grid(g)) throw UsageError("inner product of fields sampled on different grids");
    const auto& grid = f.grid();
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < grid.n_radial(); ++i) {
        std::complex<double> ring = 0.0;
        for (std::size_t j = 0; j < grid.n_theta; ++j) ring += f.at(i, j) * std::conj(g.at(i, j));
        total += grid.radial_weights[i] * ring;
    }
    return total * grid.theta_weight() / std::numbers::pi;
}

double norm_squared(const SampledField& f) {
    const auto& grid = f.grid();
    double total = 0.0;
    for (std::size_t i = 0; i < grid.n_radial(); ++i) {
        double ring = 0.0;
        for (std::size_t j = 0; j < grid.n_theta; ++j) ring += std::norm(f.at(i, j));
        total += grid.radial_weights[i] * ring;
    }
    return total * grid.theta_weight() / std::numbers::pi;
}

} // namespace zdisk
