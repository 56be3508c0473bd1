#ifndef ZDISK_DISK_IMAGE_HPP
#define ZDISK_DISK_IMAGE_HPP

#include "zdisk/disk_quadrature.hpp"
#include "zdisk/zernike_basis.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace zdisk {

/// Grayscale raster with the largest inscribed disk marked.
///
/// Pixel (i, j) (column i, row j) has center
///   x = (2i - (W-1)) / (min(W,H) - 1),  y = (2j - (H-1)) / (min(W,H) - 1)
/// and lies in the mask iff x^2 + y^2 <= 1. Loaded images hold luminance in
/// [0,1]; rendered images may hold any finite value until written out.
class DiskImage {
public:
    DiskImage(std::size_t width, std::size_t height);
    DiskImage(std::size_t width, std::size_t height, std::vector<double> values);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }

    double& operator()(std::size_t i, std::size_t j) { return values_[j * width_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[j * width_ + i]; }
    bool in_disk(std::size_t i, std::size_t j) const { return mask_[j * width_ + i] != 0; }

    const std::vector<double>& values() const noexcept { return values_; }

    /// Disk coordinates of a pixel center.
    PolarPoint polar(std::size_t i, std::size_t j) const noexcept;
    double x_of(double i) const noexcept;
    double y_of(double j) const noexcept;
    /// Fractional pixel coordinates of a disk point.
    double column_of(double x) const noexcept;
    double row_of(double y) const noexcept;

private:
    double scale() const noexcept;

    std::size_t width_;
    std::size_t height_;
    std::vector<double> values_;
    std::vector<unsigned char> mask_;
};

/// Reads a binary (P5) or ASCII (P2) portable graymap with 8- or 16-bit samples,
/// normalizing by maxval. Throws IoError for unreadable or zero-size images.
DiskImage load_image(const std::string& path);

/// Writes a P5 graymap; values are clamped to [0,1]. bits is 8 or 16.
void save_image(const std::string& path, const DiskImage& img, unsigned bits = 16);

/// Evaluates f(r, theta) at every in-disk pixel center; other pixels are 0.
DiskImage render(std::size_t width, std::size_t height, const std::function<double(double, double)>& f);

/// Bilinear interpolation of the image at every grid node. Neighbours
/// outside the image or the disk mask get weight 0 and the remaining weights
/// are renormalized, so a constant disk resamples to the same constant right
/// up to the rim. A node with no masked neighbour takes the nearest masked
/// pixel; with none nearby it reads 0.
SampledField resample_to_grid(const DiskImage& img, GridPtr grid);

} // namespace zdisk

#endif
