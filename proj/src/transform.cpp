#include "zdisk/transform.hpp"

#include "zdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace zdisk {

CoefficientTable::CoefficientTable(unsigned max_k, unsigned max_l)
    : max_k_(max_k), max_l_(max_l),
      entries_(static_cast<std::size_t>(max_k + 1) * static_cast<std::size_t>(max_l + 1)) {}

CoefficientTable CoefficientTable::basis(ModeIndex idx, std::complex<double> value) {
    CoefficientTable t(idx.k, idx.l);
    t(idx.k, idx.l) = value;
    return t;
}

std::complex<double> CoefficientTable::get(unsigned k, unsigned l) const noexcept {
    if (k > max_k_ || l > max_l_) return 0.0;
    return (*this)(k, l);
}

CoefficientTable CoefficientTable::resized(unsigned max_k, unsigned max_l) const {
    CoefficientTable out(max_k, max_l);
    for (unsigned k = 0; k <= std::min(max_k, max_k_); ++k)
        for (unsigned l = 0; l <= std::min(max_l, max_l_); ++l) out(k, l) = (*this)(k, l);
    return out;
}

double CoefficientTable::energy() const noexcept {
    double e = 0.0;
    for (const auto& v : entries_) e += std::norm(v);
    return e;
}

double CoefficientTable::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : entries_) m = std::max(m, std::abs(v));
    return m;
}

bool CoefficientTable::is_hermitian(double tol) const noexcept {
    const unsigned top = std::max(max_k_, max_l_);
    for (unsigned k = 0; k <= top; ++k)
        for (unsigned l = 0; l <= k; ++l)
            if (std::abs(get(k, l) - std::conj(get(l, k))) > tol) return false;
    return true;
}

CoefficientTable& CoefficientTable::operator*=(std::complex<double> s) {
    for (auto& v : entries_) v *= s;
    return *this;
}

CoefficientTable& CoefficientTable::operator+=(const CoefficientTable& rhs) {
    if (rhs.max_k_ > max_k_ || rhs.max_l_ > max_l_)
        *this = resized(std::max(max_k_, rhs.max_k_), std::max(max_l_, rhs.max_l_));
    for (unsigned k = 0; k <= rhs.max_k_; ++k)
        for (unsigned l = 0; l <= rhs.max_l_; ++l) (*this)(k, l) += rhs(k, l);
    return *this;
}

CoefficientTable& CoefficientTable::operator-=(const CoefficientTable& rhs) {
    if (rhs.max_k_ > max_k_ || rhs.max_l_ > max_l_)
        *this = resized(std::max(max_k_, rhs.max_k_), std::max(max_l_, rhs.max_l_));
    for (unsigned k = 0; k <= rhs.max_k_; ++k)
        for (unsigned l = 0; l <= rhs.max_l_; ++l) (*this)(k, l) -= rhs(k, l);
    return *this;
}

double max_abs_diff(const CoefficientTable& a, const CoefficientTable& b) noexcept {
    const unsigned mk = std::max(a.max_k(), b.max_k());
    const unsigned ml = std::max(a.max_l(), b.max_l());
    double d = 0.0;
    for (unsigned k = 0; k <= mk; ++k)
        for (unsigned l = 0; l <= ml; ++l) d = std::max(d, std::abs(a.get(k, l) - b.get(k, l)));
    return d;
}

namespace {

double mode_scale(unsigned n) { return std::sqrt(static_cast<double>(n + 1)); }

// sqrt(n+1) R^{|k-l|}_{k+l}(r_i) for every node and every (k, l) in range.
std::vector<double> radial_table(const QuadratureGrid& grid, unsigned max_k, unsigned max_l) {
    const std::size_t modes = static_cast<std::size_t>(max_k + 1) * (max_l + 1);
    std::vector<double> out(grid.n_radial() * modes);
    for (unsigned k = 0; k <= max_k; ++k)
        for (unsigned l = 0; l <= max_l; ++l) {
            const ModeIndex idx{k, l};
            const auto& p = radial(idx.radial());
            const double s = mode_scale(idx.n());
            const std::size_t col = static_cast<std::size_t>(k) * (max_l + 1) + l;
            for (std::size_t i = 0; i < grid.n_radial(); ++i)
                out[i * modes + col] = s * p.eval_unchecked(grid.radial_nodes[i]);
        }
    return out;
}

} // namespace

CoefficientTable analyze(const SampledField& f, unsigned max_k, unsigned max_l) {
    const auto& grid = f.grid();
    if (grid.max_exact_degree < max_k + max_l)
        throw UsageError("grid exact to degree " + std::to_string(grid.max_exact_degree) +
                         " cannot resolve max_k + max_l = " + std::to_string(max_k + max_l));
    const int m_lo = -static_cast<int>(max_l);
    const int m_hi = static_cast<int>(max_k);
    const std::size_t n_m = static_cast<std::size_t>(m_hi - m_lo + 1);

    // Angular projections F_i(m) = sum_j f(r_i, theta_j) exp(-i m theta_j).
    std::vector<std::complex<double>> phase(n_m * grid.n_theta);
    for (int m = m_lo; m <= m_hi; ++m)
        for (std::size_t j = 0; j < grid.n_theta; ++j)
            phase[static_cast<std::size_t>(m - m_lo) * grid.n_theta + j] = std::polar(1.0, -m * reduce_angle(grid.theta(j)));
    std::vector<std::complex<double>> ring(grid.n_radial() * n_m);
    for (std::size_t i = 0; i < grid.n_radial(); ++i)
        for (std::size_t mi = 0; mi < n_m; ++mi) {
            std::complex<double> acc = 0.0;
            for (std::size_t j = 0; j < grid.n_theta; ++j) acc += f.at(i, j) * phase[mi * grid.n_theta + j];
            ring[i * n_m + mi] = acc;
        }

    const auto rad = radial_table(grid, max_k, max_l);
    const std::size_t modes = static_cast<std::size_t>(max_k + 1) * (max_l + 1);
    const double norm = grid.theta_weight() / std::numbers::pi;
    CoefficientTable out(max_k, max_l);
    for (unsigned k = 0; k <= max_k; ++k)
        for (unsigned l = 0; l <= max_l; ++l) {
            const std::size_t mi = static_cast<std::size_t>(static_cast<int>(k) - static_cast<int>(l) - m_lo);
            const std::size_t col = static_cast<std::size_t>(k) * (max_l + 1) + l;
            std::complex<double> acc = 0.0;
            for (std::size_t i = 0; i < grid.n_radial(); ++i)
                acc += grid.radial_weights[i] * rad[i * modes + col] * ring[i * n_m + mi];
            out(k, l) = acc * norm;
        }
    return out;
}

SampledField synthesize(const CoefficientTable& c, GridPtr grid_ptr) {
    SampledField out(grid_ptr);
    const auto& grid = *grid_ptr;
    const unsigned max_k = c.max_k();
    const unsigned max_l = c.max_l();
    const int m_lo = -static_cast<int>(max_l);
    const std::size_t n_m = static_cast<std::size_t>(max_k + max_l + 1);
    const auto rad = radial_table(grid, max_k, max_l);
    const std::size_t modes = c.size();

    std::vector<std::complex<double>> phase(n_m * grid.n_theta);
    for (std::size_t mi = 0; mi < n_m; ++mi)
        for (std::size_t j = 0; j < grid.n_theta; ++j)
            phase[mi * grid.n_theta + j] =
                std::polar(1.0, (static_cast<int>(mi) + m_lo) * reduce_angle(grid.theta(j)));

    std::vector<std::complex<double>> by_order(n_m);
    for (std::size_t i = 0; i < grid.n_radial(); ++i) {
        std::fill(by_order.begin(), by_order.end(), std::complex<double>(0.0));
        for (unsigned k = 0; k <= max_k; ++k)
            for (unsigned l = 0; l <= max_l; ++l) {
                const std::size_t col = static_cast<std::size_t>(k) * (max_l + 1) + l;
                by_order[static_cast<std::size_t>(static_cast<int>(k) - static_cast<int>(l) - m_lo)] +=
                    c(k, l) * rad[i * modes + col];
            }
        for (std::size_t j = 0; j < grid.n_theta; ++j) {
            std::complex<double> acc = 0.0;
            for (std::size_t mi = 0; mi < n_m; ++mi) acc += by_order[mi] * phase[mi * grid.n_theta + j];
            out.at(i, j) = acc;
        }
    }
    return out;
}

std::complex<double> evaluate(const CoefficientTable& c, double r, double theta) {
    std::complex<double> acc = 0.0;
    for (unsigned k = 0; k <= c.max_k(); ++k)
        for (unsigned l = 0; l <= c.max_l(); ++l) {
            const auto v = c(k, l);
            if (v == std::complex<double>(0.0)) continue;
            acc += v * eval_mode({k, l}, r, theta);
        }
    return acc;
}

std::vector<std::complex<double>> evaluate(const CoefficientTable& c, std::span<const PolarPoint> points) {
    struct Term {
        std::complex<double> weight;
        std::size_t slot;
        int order;
    };
    const unsigned top = c.max_k() + c.max_l();
    std::vector<Term> terms;
    for (unsigned k = 0; k <= c.max_k(); ++k)
        for (unsigned l = 0; l <= c.max_l(); ++l) {
            if (c(k, l) == std::complex<double>(0.0)) continue;
            const ModeIndex idx{k, l};
            terms.push_back({c(k, l) * mode_scale(idx.n()), idx.n() * (top + 1) + idx.abs_m(), idx.m()});
        }
    const int m_lo = -static_cast<int>(c.max_l());
    std::vector<double> rad;
    std::vector<std::complex<double>> phases(c.max_k() + c.max_l() + 1);
    std::vector<std::complex<double>> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.r >= 0.0 && p.r <= 1.0)) throw DomainError("radius " + std::to_string(p.r) + " outside [0,1]");
        radial_table(p.r, top, rad);
        const double theta = reduce_angle(p.theta);
        for (std::size_t mi = 0; mi < phases.size(); ++mi)
            phases[mi] = std::polar(1.0, (static_cast<int>(mi) + m_lo) * theta);
        std::complex<double> acc = 0.0;
        for (const auto& t : terms) acc += t.weight * rad[t.slot] * phases[static_cast<std::size_t>(t.order - m_lo)];
        out.push_back(acc);
    }
    return out;
}

double parseval_gap(const CoefficientTable& c, const SampledField& f) { return std::abs(norm_squared(f) - c.energy()); }

double schwartz_norm(const CoefficientTable& c) noexcept {
    double s = 0.0;
    for (unsigned k = 0; k <= c.max_k(); ++k)
        for (unsigned l = 0; l <= c.max_l(); ++l) {
            const double w = static_cast<double>(k + 1) * static_cast<double>(l + 1);
            s += w * w * std::norm(c(k, l));
        }
    return s;
}

TruncationIndices truncate_to_tolerance(const CoefficientTable& c, double eps) {
    if (!(eps > 0.0)) throw DomainError("truncation tolerance must be positive");
    const double total = c.energy();
    if (total == 0.0) return {};
    const double budget = eps * eps * total;

    // Tail summed directly from the entries outside the candidate rectangle.
    const unsigned mk = c.max_k();
    const unsigned ml = c.max_l();
    TruncationIndices best{mk, ml};
    auto area = [](const TruncationIndices& t) {
        return static_cast<unsigned long long>(t.k_max + 1) * (t.l_max + 1);
    };
    auto better = [&](const TruncationIndices& a, const TruncationIndices& b) {
        if (area(a) != area(b)) return area(a) < area(b);
        if (a.k_max + a.l_max != b.k_max + b.l_max) return a.k_max + a.l_max < b.k_max + b.l_max;
        return a.k_max < b.k_max;
    };
    for (unsigned K = 0; K <= mk; ++K)
        for (unsigned L = 0; L <= ml; ++L) {
            double tail = 0.0;
            for (unsigned k = 0; k <= mk; ++k)
                for (unsigned l = 0; l <= ml; ++l)
                    if (k > K || l > L) tail += std::norm(c(k, l));
            const TruncationIndices cand{K, L};
            if (tail <= budget && better(cand, best)) best = cand;
        }
    return best;
}

void write_csv(std::ostream& os, const CoefficientTable& c) {
    os << "k,l,re,im\n";
    os << std::setprecision(17);
    for (unsigned k = 0; k <= c.max_k(); ++k)
        for (unsigned l = 0; l <= c.max_l(); ++l) os << k << ',' << l << ',' << c(k, l).real() << ',' << c(k, l).imag() << '\n';
}

void write_csv(const std::string& path, const CoefficientTable& c) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_csv(os, c);
    if (!os) throw IoError("failed writing " + path);
}

CoefficientTable read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty coefficient CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "k,l,re,im") throw IoError("coefficient CSV header must be 'k,l,re,im', got '" + line + "'");
    std::map<std::pair<unsigned, unsigned>, std::complex<double>> rows;
    unsigned mk = 0, ml = 0;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long k = -1, l = -1;
        double re = 0.0, im = 0.0;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(ls >> k >> c1 >> l >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',' || k < 0 || l < 0)
            throw IoError("malformed coefficient CSV row " + std::to_string(lineno) + ": '" + line + "'");
        ls >> std::ws;
        if (!ls.eof()) throw IoError("trailing data on coefficient CSV row " + std::to_string(lineno));
        rows[{static_cast<unsigned>(k), static_cast<unsigned>(l)}] = {re, im};
        mk = std::max(mk, static_cast<unsigned>(k));
        ml = std::max(ml, static_cast<unsigned>(l));
    }
    if (rows.empty()) throw IoError("coefficient CSV has no rows");
    CoefficientTable out(mk, ml);
    for (const auto& [kl, v] : rows) out(kl.first, kl.second) = v;
    return out;
}

CoefficientTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    return read_csv(is);
}

} // namespace zdisk
