#include "zdisk/operator_parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace zdisk {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& message)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"), kind_(kind), offset_(offset) {}

namespace {

using Complex = std::complex<double>;

struct Factor {
    Generator gen;
    unsigned power;
    std::size_t offset;
};

std::size_t slot_of(Generator g) {
    switch (g) {
    case Generator::APlus: return 0;
    case Generator::A3:
    case Generator::K: return 1;
    case Generator::AMinus: return 2;
    case Generator::BPlus: return 3;
    case Generator::B3:
    case Generator::L: return 4;
    case Generator::BMinus: return 5;
    }
    return 0;
}

double binomial(unsigned n, unsigned k) {
    double b = 1.0;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    OperatorExpr parse() {
        skip_ws();
        if (at_end()) fail(pos_, "empty operator expression");
        OperatorExpr out;
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
            skip_ws();
        }
        out += parse_term(sign);
        skip_ws();
        while (!at_end()) {
            const char c = peek();
            if (c != '+' && c != '-') fail(pos_, std::string("expected '+', '-' or end of input, found '") + c + "'");
            ++pos_;
            skip_ws();
            if (at_end()) fail(pos_, "expected a term after '" + std::string(1, c) + "'");
            out += parse_term(c == '-' ? -1.0 : 1.0);
            skip_ws();
        }
        return out;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw ParseError(ParseError::Kind::Syntax, at, msg);
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool starts_number(std::size_t at) const {
        if (at >= src_.size()) return false;
        const char c = src_[at];
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        return c == '.' && at + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at + 1]));
    }

    // Unsigned decimal with optional fraction and exponent, starting at `at`.
    // Returns the end offset, or nullopt if nothing numeric is there.
    std::optional<std::size_t> scan_number(std::size_t at) const {
        if (!starts_number(at)) return std::nullopt;
        std::size_t p = at;
        auto digits = [&] {
            while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
        };
        digits();
        if (p < src_.size() && src_[p] == '.') {
            ++p;
            digits();
        }
        if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
            if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
                p = q;
                digits();
            }
        }
        return p;
    }

    double number_value(std::size_t begin, std::size_t end) const {
        double v = 0.0;
        const auto res = std::from_chars(src_.data() + begin, src_.data() + end, v);
        if (res.ec != std::errc() || res.ptr != src_.data() + end) fail(begin, "malformed number");
        return v;
    }

    // real | real 'i' | real sign real 'i'
    // lead_sign applies to the first number only, so "(-1+2i)" keeps +2i.
    Complex parse_bare_scalar(double lead_sign = 1.0) {
        const auto end = scan_number(pos_);
        if (!end) fail(pos_, "expected a number");
        const double first = lead_sign * number_value(pos_, *end);
        pos_ = *end;
        if (peek() == 'i') {
            ++pos_;
            return {0.0, first};
        }
        if (peek() == '+' || peek() == '-') {
            const std::size_t sign_at = pos_;
            if (auto imag_end = scan_number(sign_at + 1); imag_end && *imag_end < src_.size() && src_[*imag_end] == 'i') {
                const double imag = number_value(sign_at + 1, *imag_end);
                pos_ = *imag_end + 1;
                return {first, src_[sign_at] == '-' ? -imag : imag};
            }
        }
        return {first, 0.0};
    }

    Complex parse_scalar() {
        if (peek() != '(') return parse_bare_scalar();
        const std::size_t open = pos_;
        ++pos_;
        skip_ws();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1.0 : 1.0;
            ++pos_;
        }
        const Complex v = parse_bare_scalar(sign);
        skip_ws();
        if (peek() != ')') fail(pos_, "expected ')' closing the scalar opened at byte " + std::to_string(open));
        ++pos_;
        return v;
    }

    std::optional<Factor> try_factor() {
        const std::size_t at = pos_;
        const char c = peek();
        std::optional<Generator> gen;
        if (c == 'K' || c == 'L') {
            gen = c == 'K' ? Generator::K : Generator::L;
            pos_ += 1;
        } else if (c == 'A' || c == 'B') {
            const char d = peek(1);
            if (d != '+' && d != '-' && d != '3') fail(at, std::string("unknown generator '") + c + (d ? std::string(1, d) : "") + "'");
            gen = parse_generator(src_.substr(pos_, 2));
            pos_ += 2;
        } else {
            return std::nullopt;
        }
        unsigned power = 1;
        if (peek() == '^') {
            ++pos_;
            const std::size_t nat_at = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (nat_at == pos_) fail(nat_at, "expected a natural exponent after '^'");
            const auto res = std::from_chars(src_.data() + nat_at, src_.data() + pos_, power);
            if (res.ec != std::errc()) fail(nat_at, "exponent out of range");
        }
        return Factor{*gen, power, at};
    }

    OperatorExpr parse_term(double sign) {
        Complex coefficient = sign;
        bool have_scalar = false;
        if (peek() == '(' || starts_number(pos_)) {
            coefficient *= parse_scalar();
            have_scalar = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (peek() == 'A' || peek() == 'B' || peek() == 'K' || peek() == 'L') {
                fail(pos_, "expected '*' between scalar and generator");
            }
        }
        std::vector<UEAMonomial> expansion{UEAMonomial{coefficient, {}}};
        std::optional<Factor> previous;
        while (auto f = try_factor()) {
            const std::size_t slot = slot_of(f->gen);
            if (previous && slot < slot_of(previous->gen))
                throw ParseError(ParseError::Kind::Ordering, f->offset,
                                 "factor '" + std::string(to_string(f->gen)) + "' may not follow '" +
                                     std::string(to_string(previous->gen)) +
                                     "': words must be ordered as A+ A3 A- B+ B3 B- (PBW basis)");
            multiply(expansion, *f, slot);
            previous = f;
            skip_ws();
        }
        if (!have_scalar && !previous) {
            if (at_end()) fail(pos_, "expected a term");
            fail(pos_, std::string("unexpected character '") + peek() + "'");
        }
        return OperatorExpr{std::move(expansion)};
    }

    static void multiply(std::vector<UEAMonomial>& expansion, const Factor& f, std::size_t slot) {
        if (f.gen != Generator::K && f.gen != Generator::L) {
            for (auto& m : expansion) m.exponents[slot] += f.power;
            return;
        }
        // (X3 - 1/2)^p = sum_j C(p, j) (-1/2)^(p-j) X3^j, highest power first.
        std::vector<UEAMonomial> out;
        for (const auto& m : expansion)
            for (unsigned j = f.power + 1; j-- > 0;) {
                UEAMonomial t = m;
                t.exponents[slot] += j;
                t.coefficient *= binomial(f.power, j) * std::pow(-0.5, static_cast<double>(f.power - j));
                bool merged = false;
                for (auto& existing : out)
                    if (existing.exponents == t.exponents) {
                        existing.coefficient += t.coefficient;
                        merged = true;
                        break;
                    }
                if (!merged) out.push_back(t);
            }
        expansion = std::move(out);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

OperatorExpr parse_operator(std::string_view src) { return Parser(src).parse(); }

std::string format_operator(const OperatorExpr& o) {
    if (o.monomials.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < o.monomials.size(); ++i) {
        const auto& m = o.monomials[i];
        if (i) out += " + ";
        const double im = m.coefficient.imag();
        out += '(' + format_real(m.coefficient.real()) + (std::signbit(im) ? '-' : '+') + format_real(std::abs(im)) + "i)";
        bool first = true;
        for (std::size_t s = 0; s < UEAMonomial::slots.size(); ++s) {
            if (m.exponents[s] == 0) continue;
            out += first ? "*" : " ";
            first = false;
            out += to_string(UEAMonomial::slots[s]);
            if (m.exponents[s] != 1) out += '^' + std::to_string(m.exponents[s]);
        }
    }
    return out;
}

} // namespace zdisk
