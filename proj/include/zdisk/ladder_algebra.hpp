#ifndef ZDISK_LADDER_ALGEBRA_HPP
#define ZDISK_LADDER_ALGEBRA_HPP

#include "zdisk/transform.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zdisk {

// Action on coefficients induced by the basis action
//   A+ V_{k,l} = (k+1) V_{k+1,l}     A- V_{k,l} = k V_{k-1,l}
//   B+ V_{k,l} = (l+1) V_{k,l+1}     B- V_{k,l} = l V_{k,l-1}
//   A3 = K + 1/2,  B3 = L + 1/2,  K V_{k,l} = k V_{k,l},  L V_{k,l} = l V_{k,l}.
// If f = sum f_{k,l} V_{k,l}, then A+ f has coefficients g_{k,l} = k f_{k-1,l}
// and A- f has g_{k,l} = (k+1) f_{k+1,l}; the B family acts on l the same way.

enum class Generator { APlus, AMinus, A3, BPlus, BMinus, B3, K, L };

enum class Family { A, B };

std::string_view to_string(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view token) noexcept;

/// Raising generators grow the table by one in their index; lowering at the
/// bottom row annihilates.
CoefficientTable apply_generator(Generator g, const CoefficientTable& c);

/// c * A+^a1 A3^a2 A-^a3 B+^b1 B3^b2 B-^b3, the ordered basis word of the
/// enveloping algebra.
struct UEAMonomial {
    std::complex<double> coefficient{1.0, 0.0};
    std::array<unsigned, 6> exponents{};

    /// Slot order of the ordered word.
    static constexpr std::array<Generator, 6> slots{Generator::APlus, Generator::A3, Generator::AMinus,
                                                    Generator::BPlus, Generator::B3, Generator::BMinus};

    unsigned a_plus() const noexcept { return exponents[0]; }
    unsigned a3() const noexcept { return exponents[1]; }
    unsigned a_minus() const noexcept { return exponents[2]; }
    unsigned b_plus() const noexcept { return exponents[3]; }
    unsigned b3() const noexcept { return exponents[4]; }
    unsigned b_minus() const noexcept { return exponents[5]; }

    bool is_identity_word() const noexcept;

    friend bool operator==(const UEAMonomial&, const UEAMonomial&) = default;
};

/// Finite sum of ordered monomials.
struct OperatorExpr {
    std::vector<UEAMonomial> monomials;

    static OperatorExpr identity();
    static OperatorExpr generator(Generator g, std::complex<double> coefficient = 1.0);

    OperatorExpr& operator+=(const OperatorExpr& rhs);
    OperatorExpr& operator*=(std::complex<double> s);
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator*(std::complex<double> s, OperatorExpr a) { return a *= s; }

    friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;
};

/// Applies the word right to left (B- first, A+ last) and scales by the coefficient.
CoefficientTable apply_monomial(const UEAMonomial& m, const CoefficientTable& c);

/// Sum of the monomial images. The empty expression maps any table to zeros
/// of the same shape.
CoefficientTable apply_operator(const OperatorExpr& o, const CoefficientTable& c);

/// (1/2)(X+ X- + X- X+) - X3^2 for the chosen family, by composition of
/// generator actions. Equals c / 4 on every table.
CoefficientTable casimir(Family family, const CoefficientTable& c);

/// Max entry magnitude of (g1 g2 - g2 g1 - expected) applied to c.
double commutator_defect(Generator g1, Generator g2, const CoefficientTable& c, const OperatorExpr& expected);

} // namespace zdisk

#endif
