#ifndef ZDISK_PIPELINE_HPP
#define ZDISK_PIPELINE_HPP

#include "zdisk/disk_image.hpp"
#include "zdisk/ladder_algebra.hpp"
#include "zdisk/transform.hpp"

#include <string>

namespace zdisk {

struct PipelineOptions {
    unsigned max_k = 16;
    unsigned max_l = 16;
    /// Relative tail-energy tolerance for truncation.
    double eps = 1e-4;
    /// Treat pixels as intensity |f|^2: sqrt on input, square on output.
    bool intensity = false;
};

struct PipelineResult {
    CoefficientTable input_full;
    CoefficientTable input;
    CoefficientTable output;
    TruncationIndices truncation;
    double parseval_gap = 0.0;
    double schwartz_norm = 0.0;
    double output_scale = 0.0;
    DiskImage output_image{1, 1};
};

/// Grid used for images: exact to degree max_k + max_l, oversampled twice in
/// both directions to keep aliasing from out-of-band image content low.
GridPtr image_grid(unsigned max_k, unsigned max_l);

/// Resample onto image_grid and analyze. Pixels are amplitudes unless
/// intensity is set.
CoefficientTable analyze_image(const DiskImage& img, unsigned max_k, unsigned max_l, bool intensity = false);

/// |sum f_{k,l} V_{k,l}| at every in-disk pixel center (raw, not normalized).
DiskImage render_magnitude(const CoefficientTable& c, std::size_t width, std::size_t height);

/// Re(sum f_{k,l} V_{k,l}) at every in-disk pixel center.
DiskImage render_real(const CoefficientTable& c, std::size_t width, std::size_t height);

/// Analyze, truncate to eps, apply the operator, re-synthesize at the input
/// resolution. The output image is |g| divided by its maximum (squared again
/// in intensity mode); the divisor is reported as output_scale.
PipelineResult run_pipeline(const DiskImage& img, const OperatorExpr& op, const PipelineOptions& options);

/// Flat JSON object {parseval_gap, schwartz_norm, k_max, l_max, output_scale}.
std::string report_json(const PipelineResult& result);

} // namespace zdisk

#endif
