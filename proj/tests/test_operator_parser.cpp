#include "zdisk/operator_parser.hpp"

#include <doctest.h>

#include <random>

using namespace zdisk;

namespace {

UEAMonomial word(std::complex<double> c, std::array<unsigned, 6> e) { return {c, e}; }

} // namespace

TEST_CASE("parse_operator examples") {
    CHECK(parse_operator("A+") == OperatorExpr{{word(1.0, {1, 0, 0, 0, 0, 0})}});
    CHECK(parse_operator("2.0*A+^2 B-") == OperatorExpr{{word(2.0, {2, 0, 0, 0, 0, 1})}});
    CHECK(parse_operator("K") == OperatorExpr{{word(1.0, {0, 1, 0, 0, 0, 0}), word(-0.5, {})}});
    CHECK(parse_operator("L") == OperatorExpr{{word(1.0, {0, 0, 0, 0, 1, 0}), word(-0.5, {})}});
}

TEST_CASE("scalars") {
    CHECK(parse_operator("1.0*") == OperatorExpr{{word(1.0, {})}});
    CHECK(parse_operator("3") == OperatorExpr{{word(3.0, {})}});
    CHECK(parse_operator("1+2i*A+") == OperatorExpr{{word({1.0, 2.0}, {1, 0, 0, 0, 0, 0})}});
    CHECK(parse_operator("(1.5-0.25i)*B3") == OperatorExpr{{word({1.5, -0.25}, {0, 0, 0, 0, 1, 0})}});
    CHECK(parse_operator("(-2)*A-") == OperatorExpr{{word(-2.0, {0, 0, 1, 0, 0, 0})}});
    CHECK(parse_operator("(-1+2i)*A-") == OperatorExpr{{word({-1.0, 2.0}, {0, 0, 1, 0, 0, 0})}});
    CHECK(parse_operator("(-2i)*A-") == OperatorExpr{{word({0.0, -2.0}, {0, 0, 1, 0, 0, 0})}});
    CHECK(parse_operator("2i*A3") == OperatorExpr{{word({0.0, 2.0}, {0, 1, 0, 0, 0, 0})}});
    CHECK(parse_operator("1e-3*B+") == OperatorExpr{{word(1e-3, {0, 0, 0, 1, 0, 0})}});
    CHECK(parse_operator(".5*A+") == OperatorExpr{{word(0.5, {1, 0, 0, 0, 0, 0})}});
    // Whitespace splits the literal into two terms.
    CHECK(parse_operator("1 + 2i*A+") == OperatorExpr{{word(1.0, {}), word({0.0, 2.0}, {1, 0, 0, 0, 0, 0})}});
}

TEST_CASE("sums, signs, powers and K/L expansion") {
    CHECK(parse_operator("A+ B+") == OperatorExpr{{word(1.0, {1, 0, 0, 1, 0, 0})}});
    CHECK(parse_operator("A+B+") == OperatorExpr{{word(1.0, {1, 0, 0, 1, 0, 0})}});
    CHECK(parse_operator("-A+ + A-") == OperatorExpr{{word(-1.0, {1, 0, 0, 0, 0, 0}), word(1.0, {0, 0, 1, 0, 0, 0})}});
    CHECK(parse_operator("A+-B-") == OperatorExpr{{word(1.0, {1, 0, 0, 0, 0, 0}), word(-1.0, {0, 0, 0, 0, 0, 1})}});
    CHECK(parse_operator("A+ A+ A3^2") == OperatorExpr{{word(1.0, {2, 2, 0, 0, 0, 0})}});
    CHECK(parse_operator("A+^0") == OperatorExpr{{word(1.0, {})}});
    // K^2 = A3^2 - A3 + 1/4.
    CHECK(parse_operator("K^2") == OperatorExpr{{word(1.0, {0, 2, 0, 0, 0, 0}), word(-1.0, {0, 1, 0, 0, 0, 0}), word(0.25, {})}});
    // A+ K A- = A+ A3 A- - 1/2 A+ A-.
    CHECK(parse_operator("A+ K A-") == OperatorExpr{{word(1.0, {1, 1, 1, 0, 0, 0}), word(-0.5, {1, 0, 1, 0, 0, 0})}});
    CHECK(parse_operator("2*K L") == OperatorExpr{{word(2.0, {0, 1, 0, 0, 1, 0}), word(-1.0, {0, 1, 0, 0, 0, 0}),
                                                   word(-1.0, {0, 0, 0, 0, 1, 0}), word(0.5, {})}});
    CHECK(parse_operator("  A3 K  ") == OperatorExpr{{word(1.0, {0, 2, 0, 0, 0, 0}), word(-0.5, {0, 1, 0, 0, 0, 0})}});
}

TEST_CASE("syntax errors carry byte offsets") {
    struct Case {
        const char* src;
        std::size_t offset;
    };
    for (const Case& c : {Case{"", 0}, Case{"   ", 3}, Case{"A", 0}, Case{"A+ +", 4}, Case{"C+", 0}, Case{"2 A+", 2},
                          Case{"A+^", 3}, Case{"A+ * B+", 3}, Case{"(1+2i", 5}, Case{"A+ 2", 3}, Case{"A4", 0},
                          Case{"*A+", 0}, Case{"A+ B+ )", 6}, Case{"A+^x", 3}}) {
        INFO("source: '" << c.src << "'");
        try {
            parse_operator(c.src);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseError::Kind::Syntax);
            CHECK(e.offset() == c.offset);
        }
    }
}

TEST_CASE("ordering errors") {
    struct Case {
        const char* src;
        std::size_t offset;
    };
    for (const Case& c : {Case{"A- A+", 3}, Case{"B+ A+", 3}, Case{"A3 A+", 3}, Case{"B- B3", 3}, Case{"L K", 2},
                          Case{"2*B+ A-", 5}, Case{"A+ + B- A3", 8}}) {
        INFO("source: '" << c.src << "'");
        try {
            parse_operator(c.src);
            FAIL("expected an ordering error");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseError::Kind::Ordering);
            CHECK(e.offset() == c.offset);
            CHECK(std::string(e.what()).find("A+ A3 A- B+ B3 B-") != std::string::npos);
        }
    }
}

TEST_CASE("format then parse is the identity (property)") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<unsigned> e(0, 3), count(1, 5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        OperatorExpr o;
        const unsigned n = count(rng);
        for (unsigned i = 0; i < n; ++i)
            o.monomials.push_back(word({u(rng), trial % 3 ? u(rng) : 0.0}, {e(rng), e(rng), e(rng), e(rng), e(rng), e(rng)}));
        const std::string text = format_operator(o);
        INFO(text);
        CHECK(parse_operator(text) == o);
    }
    CHECK(format_operator(OperatorExpr{}) == "0");
    CHECK(format_operator(parse_operator("2*A+^2 B-")) == "(2+0i)*A+^2 B-");
}
