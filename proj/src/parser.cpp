#include "workbench/parser.hpp"

#include <cctype>
#include <string>

#include "workbench/errors.hpp"

namespace workbench {

bool VariableBounds::allows(VarId v) const {
    switch (v.kind) {
        case VarKind::T: {
            int idx = v.block - first_block;
            if (idx < 0 || idx >= static_cast<int>(block_sizes.size())) return false;
            return v.pos >= 1 && v.pos <= block_sizes[static_cast<std::size_t>(idx)];
        }
        case VarKind::S:
            return v.pos >= 1 && v.pos <= s_count;
        default:
            return true;  // parameters are always in scope
    }
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::optional<VariableBounds>& bounds)
        : text_(text), bounds_(bounds) {}

    SparsePolynomial run() {
        SparsePolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    const std::optional<VariableBounds>& bounds_;

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(pos_, expected,
                          "parse error at position " + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) fail(what);
    }

    mpz_class parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("unsigned integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int parse_index() {
        mpz_class z = parse_uint();
        if (!z.fits_sint_p()) fail("index in range");
        return static_cast<int>(z.get_si());
    }

    int parse_exponent() {
        mpz_class z = parse_uint();
        if (!z.fits_sint_p() || z > 4096) fail("exponent <= 4096");
        return static_cast<int>(z.get_si());
    }

    SparsePolynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        SparsePolynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    SparsePolynomial term() {
        SparsePolynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    SparsePolynomial factor() {
        SparsePolynomial a = atom();
        if (eat('^')) return a.pow(parse_exponent());
        return a;
    }

    VarId variable() {
        std::size_t at = pos_;
        char c = text_[pos_++];
        VarId v;
        if (c == 'T') {
            expect('[', "'[' after T");
            int block = parse_index();
            expect(']', "']'");
            expect('[', "second index of T variable");
            int p = parse_index();
            expect(']', "']'");
            v = VarId::T(block, p);
        } else if (c == 'S') {
            expect('[', "'[' after S");
            int k = parse_index();
            expect(']', "']'");
            v = VarId::S(k);
        } else if (c == 't') {
            v = VarId::param_t();
        } else {
            v = VarId::param_s();
        }
        if (bounds_ && !bounds_->allows(v)) {
            throw UnknownVariableError(
                v.name(), "unknown variable " + v.name() + " at position " + std::to_string(at));
        }
        return v;
    }

    SparsePolynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePolynomial p = expr();
            expect(')', "')'");
            return p;
        }
        if (c == 'T' || c == 'S' || c == 't' || c == 's') {
            return SparsePolynomial::variable(variable());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg = (c == '-');
            if (neg) ++pos_;
            mpz_class num = parse_uint();
            if (neg) num = -num;
            if (eat('/')) {
                mpz_class den = parse_uint();
                if (den == 0) fail("nonzero denominator");
                return SparsePolynomial(Rational(num, den));
            }
            return SparsePolynomial(Rational(num));
        }
        fail("rational, variable or '('");
    }
};

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text,
                                  const std::optional<VariableBounds>& bounds) {
    return Parser(text, bounds).run();
}

}  // namespace workbench
