#ifndef ZDISK_TRANSFORM_HPP
#define ZDISK_TRANSFORM_HPP

#include "zdisk/disk_quadrature.hpp"
#include "zdisk/zernike_basis.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zdisk {

/// Dense table of expansion coefficients f_{k,l}, 0 <= k <= max_k, 0 <= l <= max_l.
/// Stored row-major in (k, l).
class CoefficientTable {
public:
    CoefficientTable() : CoefficientTable(0, 0) {}
    CoefficientTable(unsigned max_k, unsigned max_l);

    /// Table with a single unit entry at (k, l), sized to fit it.
    static CoefficientTable basis(ModeIndex idx, std::complex<double> value = 1.0);

    unsigned max_k() const noexcept { return max_k_; }
    unsigned max_l() const noexcept { return max_l_; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::complex<double>& operator()(unsigned k, unsigned l) { return entries_[k * (max_l_ + 1) + l]; }
    const std::complex<double>& operator()(unsigned k, unsigned l) const { return entries_[k * (max_l_ + 1) + l]; }
    /// Zero outside the stored rectangle.
    std::complex<double> get(unsigned k, unsigned l) const noexcept;

    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }

    /// Copy zero-padded or cropped to the given rectangle.
    CoefficientTable resized(unsigned max_k, unsigned max_l) const;

    double energy() const noexcept;
    double max_abs() const noexcept;

    /// f_{l,k} == conj(f_{k,l}) within tol for every pair present in the table.
    bool is_hermitian(double tol) const noexcept;

    CoefficientTable& operator*=(std::complex<double> s);
    /// Sums pad to the larger rectangle.
    CoefficientTable& operator+=(const CoefficientTable& rhs);
    CoefficientTable& operator-=(const CoefficientTable& rhs);
    friend CoefficientTable operator+(CoefficientTable a, const CoefficientTable& b) { return a += b; }
    friend CoefficientTable operator-(CoefficientTable a, const CoefficientTable& b) { return a -= b; }
    friend CoefficientTable operator*(std::complex<double> s, CoefficientTable a) { return a *= s; }

private:
    unsigned max_k_;
    unsigned max_l_;
    std::vector<std::complex<double>> entries_;
};

/// Largest entrywise magnitude of a - b, treating missing entries as zero.
double max_abs_diff(const CoefficientTable& a, const CoefficientTable& b) noexcept;

/// f_{k,l} = <f, V_{k,l}> for 0 <= k <= max_k, 0 <= l <= max_l.
/// Throws UsageError if the grid's exact degree is below max_k + max_l.
CoefficientTable analyze(const SampledField& f, unsigned max_k, unsigned max_l);

/// Pointwise sum of f_{k,l} V_{k,l} on the grid.
SampledField synthesize(const CoefficientTable& c, GridPtr grid);

/// Pointwise sum of f_{k,l} V_{k,l} at one point.
std::complex<double> evaluate(const CoefficientTable& c, double r, double theta);
/// Same sum at many points; skips zero entries and shares powers of r per point.
/// Throws DomainError if any r is outside [0, 1].
std::vector<std::complex<double>> evaluate(const CoefficientTable& c, std::span<const PolarPoint> points);

/// | ||f||^2 - sum |f_{k,l}|^2 |.
double parseval_gap(const CoefficientTable& c, const SampledField& f);

/// sum (k+1)^2 (l+1)^2 |f_{k,l}|^2; finite-table smoothness diagnostic.
double schwartz_norm(const CoefficientTable& c) noexcept;

struct TruncationIndices {
    unsigned k_max = 0;
    unsigned l_max = 0;
    friend bool operator==(const TruncationIndices&, const TruncationIndices&) = default;
};

/// Smallest rectangle [0,k_max] x [0,l_max] whose tail energy is at most
/// eps^2 times the total energy. "Smallest" is by area (k_max+1)(l_max+1),
/// ties broken by smaller k_max + l_max, then smaller k_max.
/// Throws DomainError unless eps > 0. An all-zero table gives (0, 0).
TruncationIndices truncate_to_tolerance(const CoefficientTable& c, double eps);

/// CSV with header `k,l,re,im`, one row per entry in row-major (k, l) order,
/// values printed with 17 significant digits.
void write_csv(std::ostream& os, const CoefficientTable& c);
void write_csv(const std::string& path, const CoefficientTable& c);
/// Inverse of write_csv. Rows may come in any order; missing entries are zero.
/// Throws IoError on malformed input.
CoefficientTable read_csv(std::istream& is);
CoefficientTable read_csv(const std::string& path);

} // namespace zdisk

#endif
