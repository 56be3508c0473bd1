#ifndef ZDISK_OPERATOR_PARSER_HPP
#define ZDISK_OPERATOR_PARSER_HPP

#include "zdisk/ladder_algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zdisk {

// Operator mini-language:
//
//   expr   := [sign] term (sign term)*
//   term   := scalar ['*' factor*] | factor+
//   factor := gen ['^' nat]
//   gen    := A+ | A- | A3 | B+ | B- | B3 | K | L
//   scalar := real | real 'i' | real sign real 'i' | '(' [sign] scalar ')'
//
// Factors in a term must follow the ordered basis A+ A3 A- B+ B3 B-; K and L
// sit in the A3 and B3 slots and are rewritten as A3 - 1/2 and B3 - 1/2.
// Whitespace separates tokens but may not split a bare complex literal, so
// "1+2i*A+" is one term while "1 + 2i*A+" is two.

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Ordering };

    ParseError(Kind kind, std::size_t offset, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// Byte offset into the source where the problem was detected.
    std::size_t offset() const noexcept { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

OperatorExpr parse_operator(std::string_view src);

/// Canonical text that parse_operator maps back to an identical expression:
/// every monomial as "(re+imi)*word", joined by " + ". The empty expression
/// prints as "0" (which reparses to a single zero-coefficient identity term).
std::string format_operator(const OperatorExpr& o);

} // namespace zdisk

#endif
