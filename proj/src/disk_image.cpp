#include "zdisk/disk_image.hpp"

#include "zdisk/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

namespace zdisk {

DiskImage::DiskImage(std::size_t width, std::size_t height)
    : DiskImage(width, height, std::vector<double>(width * height, 0.0)) {}

DiskImage::DiskImage(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)), mask_(width * height, 0) {
    if (width == 0 || height == 0) throw IoError("zero-size image");
    if (values_.size() != width * height) throw UsageError("pixel count does not match image dimensions");
    for (std::size_t j = 0; j < height_; ++j)
        for (std::size_t i = 0; i < width_; ++i) {
            const double x = x_of(static_cast<double>(i));
            const double y = y_of(static_cast<double>(j));
            mask_[j * width_ + i] = x * x + y * y <= 1.0 ? 1 : 0;
        }
}

double DiskImage::scale() const noexcept {
    const std::size_t s = std::min(width_, height_);
    return s > 1 ? static_cast<double>(s - 1) : 1.0;
}

double DiskImage::x_of(double i) const noexcept { return (2.0 * i - static_cast<double>(width_ - 1)) / scale(); }
double DiskImage::y_of(double j) const noexcept { return (2.0 * j - static_cast<double>(height_ - 1)) / scale(); }
double DiskImage::column_of(double x) const noexcept { return (x * scale() + static_cast<double>(width_ - 1)) / 2.0; }
double DiskImage::row_of(double y) const noexcept { return (y * scale() + static_cast<double>(height_ - 1)) / 2.0; }

PolarPoint DiskImage::polar(std::size_t i, std::size_t j) const noexcept {
    const double x = x_of(static_cast<double>(i));
    const double y = y_of(static_cast<double>(j));
    return {std::hypot(x, y), std::atan2(y, x)};
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& is) {
    std::string tok;
    char c;
    while (is.get(c)) {
        if (c == '#') {
            std::string skip;
            std::getline(is, skip);
            if (!tok.empty()) break;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!tok.empty()) break;
            continue;
        }
        tok += c;
    }
    return tok;
}

std::size_t header_number(std::istream& is, const std::string& path, const char* what) {
    const std::string tok = header_token(is);
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        throw IoError(path + ": bad " + what + " in graymap header");
    }
    if (pos != tok.size()) throw IoError(path + ": bad " + what + " in graymap header");
    return v;
}

} // namespace

DiskImage load_image(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open image " + path);
    const std::string magic = header_token(is);
    if (magic != "P5" && magic != "P2") throw IoError(path + ": not a portable graymap (P2/P5)");
    const std::size_t width = header_number(is, path, "width");
    const std::size_t height = header_number(is, path, "height");
    const std::size_t maxval = header_number(is, path, "maxval");
    if (width == 0 || height == 0) throw IoError(path + ": zero-size image");
    if (maxval == 0 || maxval > 65535) throw IoError(path + ": maxval out of range");

    std::vector<double> values(width * height);
    if (magic == "P5") {
        const std::size_t bytes = maxval < 256 ? 1 : 2;
        std::vector<unsigned char> raw(width * height * bytes);
        is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (is.gcount() != static_cast<std::streamsize>(raw.size())) throw IoError(path + ": truncated pixel data");
        for (std::size_t p = 0; p < values.size(); ++p) {
            const unsigned v = bytes == 1 ? raw[p] : (static_cast<unsigned>(raw[2 * p]) << 8) | raw[2 * p + 1];
            values[p] = static_cast<double>(std::min<std::size_t>(v, maxval)) / static_cast<double>(maxval);
        }
    } else {
        for (auto& v : values) {
            unsigned long s = 0;
            if (!(is >> s)) throw IoError(path + ": truncated pixel data");
            v = static_cast<double>(std::min<std::size_t>(s, maxval)) / static_cast<double>(maxval);
        }
    }
    return DiskImage(width, height, std::move(values));
}

void save_image(const std::string& path, const DiskImage& img, unsigned bits) {
    if (bits != 8 && bits != 16) throw UsageError("graymap bit depth must be 8 or 16");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    const unsigned maxval = bits == 8 ? 255 : 65535;
    os << "P5\n" << img.width() << ' ' << img.height() << '\n' << maxval << '\n';
    std::vector<unsigned char> raw;
    raw.reserve(img.values().size() * (bits / 8));
    for (double v : img.values()) {
        const double c = std::isfinite(v) ? std::clamp(v, 0.0, 1.0) : 0.0;
        const auto q = static_cast<unsigned>(std::lround(c * maxval));
        if (bits == 16) raw.push_back(static_cast<unsigned char>(q >> 8));
        raw.push_back(static_cast<unsigned char>(q & 0xff));
    }
    os.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!os) throw IoError("failed writing " + path);
}

DiskImage render(std::size_t width, std::size_t height, const std::function<double(double, double)>& f) {
    DiskImage img(width, height);
    for (std::size_t j = 0; j < height; ++j)
        for (std::size_t i = 0; i < width; ++i) {
            if (!img.in_disk(i, j)) continue;
            const PolarPoint p = img.polar(i, j);
            img(i, j) = f(std::min(p.r, 1.0), p.theta);
        }
    return img;
}

SampledField resample_to_grid(const DiskImage& img, GridPtr grid) {
    SampledField out(grid);
    const auto& g = *grid;
    const auto masked = [&](long i, long j) {
        return i >= 0 && j >= 0 && i < static_cast<long>(img.width()) && j < static_cast<long>(img.height()) &&
               img.in_disk(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    };
    for (std::size_t ri = 0; ri < g.n_radial(); ++ri)
        for (std::size_t tj = 0; tj < g.n_theta; ++tj) {
            const double r = g.radial_nodes[ri];
            const double th = g.theta(tj);
            const double fi = img.column_of(r * std::cos(th));
            const double fj = img.row_of(r * std::sin(th));
            const double i0 = std::floor(fi);
            const double j0 = std::floor(fj);
            const double ax = fi - i0;
            const double ay = fj - j0;
            const long ii = static_cast<long>(i0);
            const long jj = static_cast<long>(j0);
            const std::array<std::pair<long, long>, 4> at{{{ii, jj}, {ii + 1, jj}, {ii, jj + 1}, {ii + 1, jj + 1}}};
            const std::array<double, 4> w{(1.0 - ax) * (1.0 - ay), ax * (1.0 - ay), (1.0 - ax) * ay, ax * ay};
            double sum = 0.0;
            double weight = 0.0;
            for (std::size_t q = 0; q < 4; ++q)
                if (masked(at[q].first, at[q].second)) {
                    sum += w[q] * img(static_cast<std::size_t>(at[q].first), static_cast<std::size_t>(at[q].second));
                    weight += w[q];
                }
            double v = 0.0;
            if (weight > 1e-9) {
                v = sum / weight;
            } else {
                // Sliver between the rim and the outer pixel centers: nearest masked pixel.
                double best = std::numeric_limits<double>::infinity();
                for (long dj = -2; dj <= 3; ++dj)
                    for (long di = -2; di <= 3; ++di) {
                        const long pi = ii + di;
                        const long pj = jj + dj;
                        if (!masked(pi, pj)) continue;
                        const double d = std::hypot(static_cast<double>(pi) - fi, static_cast<double>(pj) - fj);
                        if (d < best) {
                            best = d;
                            v = img(static_cast<std::size_t>(pi), static_cast<std::size_t>(pj));
                        }
                    }
            }
            out.at(ri, tj) = v;
        }
    return out;
}

} // namespace zdisk
