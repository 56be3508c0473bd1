#include "zdisk/ladder_algebra.hpp"

#include <algorithm>

namespace zdisk {

std::string_view to_string(Generator g) noexcept {
    switch (g) {
    case Generator::APlus: return "A+";
    case Generator::AMinus: return "A-";
    case Generator::A3: return "A3";
    case Generator::BPlus: return "B+";
    case Generator::BMinus: return "B-";
    case Generator::B3: return "B3";
    case Generator::K: return "K";
    case Generator::L: return "L";
    }
    return "?";
}

std::optional<Generator> parse_generator(std::string_view token) noexcept {
    for (Generator g : {Generator::APlus, Generator::AMinus, Generator::A3, Generator::BPlus, Generator::BMinus,
                        Generator::B3, Generator::K, Generator::L})
        if (to_string(g) == token) return g;
    return std::nullopt;
}

CoefficientTable apply_generator(Generator g, const CoefficientTable& c) {
    const unsigned mk = c.max_k();
    const unsigned ml = c.max_l();
    switch (g) {
    case Generator::APlus: {
        CoefficientTable out(mk + 1, ml);
        for (unsigned k = 1; k <= mk + 1; ++k)
            for (unsigned l = 0; l <= ml; ++l) out(k, l) = static_cast<double>(k) * c(k - 1, l);
        return out;
    }
    case Generator::AMinus: {
        CoefficientTable out(mk, ml);
        for (unsigned k = 0; k < mk; ++k)
            for (unsigned l = 0; l <= ml; ++l) out(k, l) = static_cast<double>(k + 1) * c(k + 1, l);
        return out;
    }
    case Generator::BPlus: {
        CoefficientTable out(mk, ml + 1);
        for (unsigned k = 0; k <= mk; ++k)
            for (unsigned l = 1; l <= ml + 1; ++l) out(k, l) = static_cast<double>(l) * c(k, l - 1);
        return out;
    }
    case Generator::BMinus: {
        CoefficientTable out(mk, ml);
        for (unsigned k = 0; k <= mk; ++k)
            for (unsigned l = 0; l < ml; ++l) out(k, l) = static_cast<double>(l + 1) * c(k, l + 1);
        return out;
    }
    case Generator::A3:
    case Generator::K:
    case Generator::B3:
    case Generator::L: {
        const double shift = (g == Generator::A3 || g == Generator::B3) ? 0.5 : 0.0;
        const bool on_k = (g == Generator::A3 || g == Generator::K);
        CoefficientTable out(mk, ml);
        for (unsigned k = 0; k <= mk; ++k)
            for (unsigned l = 0; l <= ml; ++l) out(k, l) = (static_cast<double>(on_k ? k : l) + shift) * c(k, l);
        return out;
    }
    }
    return c;
}

bool UEAMonomial::is_identity_word() const noexcept {
    return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

OperatorExpr OperatorExpr::identity() { return OperatorExpr{{UEAMonomial{}}}; }

OperatorExpr OperatorExpr::generator(Generator g, std::complex<double> coefficient) {
    OperatorExpr out;
    switch (g) {
    case Generator::K:
        out.monomials.push_back({coefficient, {0, 1, 0, 0, 0, 0}});
        out.monomials.push_back({-0.5 * coefficient, {}});
        return out;
    case Generator::L:
        out.monomials.push_back({coefficient, {0, 0, 0, 0, 1, 0}});
        out.monomials.push_back({-0.5 * coefficient, {}});
        return out;
    default: break;
    }
    UEAMonomial m{coefficient, {}};
    for (std::size_t s = 0; s < UEAMonomial::slots.size(); ++s)
        if (UEAMonomial::slots[s] == g) m.exponents[s] = 1;
    out.monomials.push_back(m);
    return out;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& rhs) {
    monomials.insert(monomials.end(), rhs.monomials.begin(), rhs.monomials.end());
    return *this;
}

OperatorExpr& OperatorExpr::operator*=(std::complex<double> s) {
    for (auto& m : monomials) m.coefficient *= s;
    return *this;
}

CoefficientTable apply_monomial(const UEAMonomial& m, const CoefficientTable& c) {
    CoefficientTable out = c;
    for (std::size_t s = UEAMonomial::slots.size(); s-- > 0;)
        for (unsigned e = 0; e < m.exponents[s]; ++e) out = apply_generator(UEAMonomial::slots[s], out);
    out *= m.coefficient;
    return out;
}

CoefficientTable apply_operator(const OperatorExpr& o, const CoefficientTable& c) {
    CoefficientTable out(c.max_k(), c.max_l());
    for (const auto& m : o.monomials) out += apply_monomial(m, c);
    return out;
}

CoefficientTable casimir(Family family, const CoefficientTable& c) {
    const Generator up = family == Family::A ? Generator::APlus : Generator::BPlus;
    const Generator down = family == Family::A ? Generator::AMinus : Generator::BMinus;
    const Generator diag = family == Family::A ? Generator::A3 : Generator::B3;
    CoefficientTable anti = apply_generator(up, apply_generator(down, c));
    anti += apply_generator(down, apply_generator(up, c));
    anti *= 0.5;
    return anti - apply_generator(diag, apply_generator(diag, c));
}

double commutator_defect(Generator g1, Generator g2, const CoefficientTable& c, const OperatorExpr& expected) {
    CoefficientTable lhs = apply_generator(g1, apply_generator(g2, c));
    lhs -= apply_generator(g2, apply_generator(g1, c));
    return max_abs_diff(lhs, apply_operator(expected, c));
}

} // namespace zdisk
