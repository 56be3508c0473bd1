#ifndef ZDISK_DISK_QUADRATURE_HPP
#define ZDISK_DISK_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace zdisk {

/// Product rule on the unit disk: Gauss-Legendre in r with the measure factor
/// r folded into the weights, uniform trapezoid in theta.
///
/// radial_weights sum to 1/2 (the integral of r over [0,1]). With
/// max_exact_degree = D the rule integrates p(r) r dr exactly for polynomial p
/// of degree <= 2D, and any trigonometric polynomial of order <= 2D in theta.
struct QuadratureGrid {
    std::vector<double> radial_nodes;
    std::vector<double> radial_weights;
    std::size_t n_theta = 0;
    unsigned max_exact_degree = 0;

    std::size_t n_radial() const noexcept { return radial_nodes.size(); }
    std::size_t size() const noexcept { return radial_nodes.size() * n_theta; }
    double theta(std::size_t j) const noexcept;
    double theta_weight() const noexcept;

    friend bool operator==(const QuadratureGrid&, const QuadratureGrid&) = default;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

/// Grid exact for all in-band products of modes with k + l <= max_degree.
/// Uses max_degree + 2 radial nodes and 2 max_degree + 3 angles.
GridPtr build_grid(unsigned max_degree);

/// Same exactness budget with explicit (larger) node counts; n_theta = 0 picks
/// the default. Throws UsageError if radial_nodes < max_degree + 2 or a
/// nonzero n_theta < 2 max_degree + 3.
GridPtr build_grid(unsigned max_degree, std::size_t radial_nodes, std::size_t n_theta = 0);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(std::size_t count, std::vector<double>& nodes, std::vector<double>& weights);

/// Complex samples on a grid, stored radial-major: values[i * n_theta + j]
/// is the sample at (radial_nodes[i], theta(j)).
class SampledField {
public:
    explicit SampledField(GridPtr grid);
    SampledField(GridPtr grid, std::vector<std::complex<double>> values);

    /// Samples f(r, theta) at every node.
    static SampledField sample(GridPtr grid, const std::function<std::complex<double>(double, double)>& f);

    const QuadratureGrid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    const std::vector<std::complex<double>>& values() const noexcept { return values_; }
    std::vector<std::complex<double>>& values() noexcept { return values_; }

    std::complex<double>& at(std::size_t i, std::size_t j) { return values_[i * grid_->n_theta + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return values_[i * grid_->n_theta + j]; }

    bool same_grid(const SampledField& other) const noexcept;

private:
    GridPtr grid_;
    std::vector<std::complex<double>> values_;
};

/// (1/pi) * integral over the disk of f conj(g) r dr dtheta.
/// Throws UsageError when the fields live on different grids.
std::complex<double> inner_product(const SampledField& f, const SampledField& g);

/// (1/pi) * integral of |f|^2 r dr dtheta.
double norm_squared(const SampledField& f);

} // namespace zdisk

#endif
