#include "zdisk/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace zdisk {

GridPtr image_grid(unsigned max_k, unsigned max_l) {
    const unsigned degree = max_k + max_l;
    return build_grid(degree, 2 * static_cast<std::size_t>(degree) + 4, 4 * static_cast<std::size_t>(degree) + 6);
}

CoefficientTable analyze_image(const DiskImage& img, unsigned max_k, unsigned max_l, bool intensity) {
    SampledField field = resample_to_grid(img, image_grid(max_k, max_l));
    if (intensity)
        for (auto& v : field.values()) v = std::sqrt(std::max(v.real(), 0.0));
    return analyze(field, max_k, max_l);
}

namespace {

template <class Map>
DiskImage render_with(const CoefficientTable& c, std::size_t width, std::size_t height, Map map) {
    DiskImage img(width, height);
    std::vector<PolarPoint> points;
    std::vector<std::pair<std::size_t, std::size_t>> pixels;
    for (std::size_t j = 0; j < height; ++j)
        for (std::size_t i = 0; i < width; ++i)
            if (img.in_disk(i, j)) {
                PolarPoint p = img.polar(i, j);
                p.r = std::min(p.r, 1.0);
                points.push_back(p);
                pixels.emplace_back(i, j);
            }
    const auto values = evaluate(c, points);
    for (std::size_t p = 0; p < pixels.size(); ++p) img(pixels[p].first, pixels[p].second) = map(values[p]);
    return img;
}

} // namespace

DiskImage render_magnitude(const CoefficientTable& c, std::size_t width, std::size_t height) {
    return render_with(c, width, height, [](std::complex<double> v) { return std::abs(v); });
}

DiskImage render_real(const CoefficientTable& c, std::size_t width, std::size_t height) {
    return render_with(c, width, height, [](std::complex<double> v) { return v.real(); });
}

PipelineResult run_pipeline(const DiskImage& img, const OperatorExpr& op, const PipelineOptions& options) {
    PipelineResult res;
    SampledField field = resample_to_grid(img, image_grid(options.max_k, options.max_l));
    if (options.intensity)
        for (auto& v : field.values()) v = std::sqrt(std::max(v.real(), 0.0));
    res.input_full = analyze(field, options.max_k, options.max_l);
    res.truncation = truncate_to_tolerance(res.input_full, options.eps);
    res.input = res.input_full.resized(res.truncation.k_max, res.truncation.l_max);
    res.parseval_gap = parseval_gap(res.input, field);
    res.schwartz_norm = schwartz_norm(res.input);
    res.output = apply_operator(op, res.input);

    DiskImage out = render_magnitude(res.output, img.width(), img.height());
    const double peak = *std::max_element(out.values().begin(), out.values().end());
    res.output_scale = peak;
    std::vector<double> values = out.values();
    for (auto& v : values) {
        v = peak > 0.0 ? v / peak : 0.0;
        if (options.intensity) v *= v;
    }
    res.output_image = DiskImage(img.width(), img.height(), std::move(values));
    return res;
}

std::string report_json(const PipelineResult& result) {
    nlohmann::ordered_json j;
    j["parseval_gap"] = result.parseval_gap;
    j["schwartz_norm"] = result.schwartz_norm;
    j["k_max"] = result.truncation.k_max;
    j["l_max"] = result.truncation.l_max;
    j["output_scale"] = result.output_scale;
    return j.dump(2);
}

} // namespace zdisk
