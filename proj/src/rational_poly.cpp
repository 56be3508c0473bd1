#include "zdisk/rational_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zdisk {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPoly RationalPoly::monomial(std::size_t power, const mpq_class& c) {
    std::vector<mpq_class> v(power + 1, mpq_class(0));
    v[power] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : mpq_class(0);
}

mpq_class RationalPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval(double x) const {
    if (coeffs_.empty()) return 0.0;
    // x = mant * 2^-shift exactly; p(x) * den * 2^(shift*deg) is then an integer
    // and Horner runs in mpz with one rounding at the end.
    int exp2 = 0;
    const double frac = std::frexp(x, &exp2);
    const long shift = std::max(0L, 53L - exp2);
    const mpz_class mant(std::ldexp(frac, static_cast<int>(exp2 + shift)));
    mpz_class den = 1;
    for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const std::size_t deg = coeffs_.size() - 1;
    mpz_class acc = 0;
    mpz_class pow2 = 1;
    for (std::size_t j = deg + 1; j-- > 0;) {
        const mpz_class a = coeffs_[j].get_num() * (den / coeffs_[j].get_den());
        acc = acc * mant + a * pow2;
        pow2 <<= shift;
    }
    mpq_class value(acc, den);
    mpz_mul_2exp(value.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<mp_bitcnt_t>(shift * deg));
    value.canonicalize();
    return value.get_d();
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
    return RationalPoly(std::move(d));
}

mpq_class RationalPoly::integrate_unit(std::size_t weight_power) const {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        acc += coeffs_[j] / mpq_class(static_cast<unsigned long>(j + weight_power + 1));
    return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(out));
}

bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

std::string RationalPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        if (!first) os << " + ";
        os << '(' << coeffs_[j] << ")r^" << j;
        first = false;
    }
    return os.str();
}

} // namespace zdisk
