#include "weylsector/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace weylsector {

ParseError::ParseError(std::size_t column, const std::string& what)
    : InputError("parse error at column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ElementExpr run() {
        ElementExpr e;
        e.source = std::string(text_);
        skip();
        if (at_end()) fail("empty expression");
        bool negated = false;
        if (peek() == '+' || peek() == '-') {
            // A leading sign directly followed by a digit belongs to the scalar.
            std::size_t save = pos_;
            char sign = text_[pos_++];
            if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
                pos_ = save;
            } else {
                negated = sign == '-';
            }
        }
        e.terms.push_back(term(negated));
        skip();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+', '-' or end of input, found '") + op + "'");
            ++pos_;
            skip();
            e.terms.push_back(term(op == '-'));
            skip();
        }
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at + 1, what); }

    void expect(char c) {
        skip();
        if (peek() != c) {
            if (at_end()) fail(std::string("expected '") + c + "', found end of input");
            fail(std::string("expected '") + c + "', found '" + peek() + "'");
        }
        ++pos_;
    }

    static bool is_gen_start(char c) { return c == 'U' || c == 'V' || c == 'W'; }

    TermExpr term(bool negated) {
        TermExpr t;
        t.negated = negated;
        skip();
        if (at_end()) fail("expected a term, found end of input");
        if (is_gen_start(peek())) {
            t.gens.push_back(gen());
        } else {
            t.scalar = scalar();
        }
        skip();
        while (peek() == '*') {
            ++pos_;
            skip();
            if (!is_gen_start(peek())) {
                if (at_end()) fail("expected U, V or W after '*'");
                fail(std::string("expected U, V or W after '*', found '") + peek() + "'");
            }
            t.gens.push_back(gen());
            skip();
        }
        return t;
    }

    GenExpr gen() {
        GenExpr g;
        char k = text_[pos_++];
        g.kind = k == 'U' ? GenExpr::Kind::U : k == 'V' ? GenExpr::Kind::V : GenExpr::Kind::W;
        if (peek() == '_') {
            ++pos_;
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected a dimension index after '_'");
            std::size_t dim = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, dim);
            if (ec != std::errc{} || dim > 64) fail_at(start, "dimension index out of range");
            g.dim = dim;
        }
        expect('(');
        g.first = label_rational();
        if (g.kind == GenExpr::Kind::W) {
            expect(',');
            g.second = label_rational();
        }
        expect(')');
        return g;
    }

    // Extent of a numeric literal (digits, optional '.', optional exponent) starting at pos_.
    std::size_t decimal_end(std::size_t from) const {
        std::size_t p = from;
        auto digit = [&](std::size_t i) { return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])); };
        while (digit(p)) ++p;
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            while (digit(p)) ++p;
        }
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (digit(q)) {
                p = q;
                while (digit(p)) ++p;
            }
        }
        return p;
    }

    Rational label_rational() {
        skip();
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t s = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            fail_at(s, "label '" + std::string(text_.substr(s, pos_ - s)) +
                           "' is not an exact rational; labels must be written as p or p/q");
        }
        std::size_t digits_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits_start == pos_) {
            if (at_end()) fail("expected a rational label, found end of input");
            fail(std::string("expected a rational label, found '") + peek() + "'");
        }
        if (peek() == '.' || peek() == 'e' || peek() == 'E') {
            std::size_t end = decimal_end(digits_start);
            fail_at(start, "decimal label '" + std::string(text_.substr(start, end - start)) +
                               "' is not allowed; write labels as p/q");
        }
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            std::size_t den_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (den_start == pos_) fail("expected a positive denominator after '/'");
            if (peek() == '.') fail_at(den_start, "decimal denominator is not allowed");
        }
        std::string literal;
        for (std::size_t i = start; i < pos_; ++i)
            if (!std::isspace(static_cast<unsigned char>(text_[i]))) literal += text_[i];
        try {
            return Rational::parse(literal);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            fail_at(start, ex.what());
        }
    }

    double real_literal(bool allow_sign) {
        skip();
        std::size_t start = pos_;
        if (allow_sign && (peek() == '+' || peek() == '-')) ++pos_;
        std::size_t body = pos_;
        std::size_t end = decimal_end(body);
        if (end == body || (end == body + 1 && text_[body] == '.')) {
            if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::size_t s = pos_;
                while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
                fail_at(s, "unknown symbol '" + std::string(text_.substr(s, pos_ - s)) + "'");
            }
            if (at_end()) fail("expected a number, found end of input");
            fail(std::string("expected a number, found '") + peek() + "'");
        }
        pos_ = end;
        std::string literal(text_.substr(start, end - start));
        double value = std::strtod(literal.c_str(), nullptr);
        if (!std::isfinite(value)) fail_at(start, "number out of range");
        return value;
    }

    Complex scalar() {
        if (peek() == '(') {
            ++pos_;
            double re = real_literal(true);
            skip();
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-' in a complex scalar");
            ++pos_;
            double im = real_literal(false);
            skip();
            if (peek() != 'i') fail("expected 'i' after the imaginary part");
            ++pos_;
            expect(')');
            return {re, op == '-' ? -im : im};
        }
        std::size_t start = pos_;
        double value = real_literal(true);
        skip();
        std::string_view lit = text_.substr(start, pos_ - start);
        bool integer_literal = lit.find_first_of(".eE") == std::string_view::npos;
        if (integer_literal && peek() == '/') {
            ++pos_;
            skip();
            std::size_t den_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (den_start == pos_) fail("expected a positive denominator after '/'");
            std::string den(text_.substr(den_start, pos_ - den_start));
            double d = std::strtod(den.c_str(), nullptr);
            if (d == 0.0) fail_at(den_start, "division by zero");
            value /= d;
        }
        return {value, 0.0};
    }
};

AlgebraElement gen_element(const GenExpr& g) {
    switch (g.kind) {
        case GenExpr::Kind::U:
            return AlgebraElement::generator(WeylLabel::in_dim(g.dim, g.first, 0));
        case GenExpr::Kind::V:
            return AlgebraElement::generator(WeylLabel::in_dim(g.dim, 0, g.first));
        case GenExpr::Kind::W:
            break;
    }
    return AlgebraElement::generator(WeylLabel::in_dim(g.dim, g.first, g.second));
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string gen_text(const GenExpr& g) {
    std::string name = g.kind == GenExpr::Kind::U ? "U" : g.kind == GenExpr::Kind::V ? "V" : "W";
    if (g.dim != 0) name += "_" + std::to_string(g.dim);
    name += "(" + g.first.str();
    if (g.kind == GenExpr::Kind::W) name += "," + g.second.str();
    return name + ")";
}

}  // namespace

ElementExpr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string format_scalar(Complex c) {
    if (c.imag() == 0.0) return format_real(c.real());
    std::string im = format_real(std::abs(c.imag()));
    return "(" + format_real(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + im + "i)";
}

std::string print_expression(const ElementExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        if (i == 0) {
            if (t.negated) out += "-";
        } else {
            out += t.negated ? " - " : " + ";
        }
        std::string body;
        if (t.scalar) {
            // "-x" after a leading '-' would reparse as a signed scalar, so use the complex form.
            bool bare = i == 0 && t.negated && t.scalar->imag() == 0.0;
            body = bare ? "(" + format_real(t.scalar->real()) + "+0i)" : format_scalar(*t.scalar);
        }
        for (const auto& g : t.gens) {
            if (!body.empty()) body += "*";
            body += gen_text(g);
        }
        out += body;
    }
    return out;
}

AlgebraElement evaluate(const ElementExpr& e) {
    AlgebraElement sum;
    for (const auto& t : e.terms) {
        AlgebraElement term = AlgebraElement::identity();
        if (t.scalar) term = term.scaled(*t.scalar);
        for (const auto& g : t.gens) term = term * gen_element(g);
        sum += t.negated ? term.scaled(-1.0) : term;
    }
    return sum;
}

AlgebraElement parse_element(std::string_view text) { return evaluate(parse_expression(text)); }

std::string format_element(const AlgebraElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [label, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        out += format_scalar(c) + "*" + label.str();
    }
    return out;
}

}  // namespace weylsector
