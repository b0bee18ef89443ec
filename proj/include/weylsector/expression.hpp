#pragma once

// Text syntax for field-algebra elements.
//
//   expr   := term (('+'|'-') term)*
//   term   := scalar ('*' gen)* | gen ('*' gen)*
//   gen    := 'U' dim? '(' rat ')' | 'V' dim? '(' rat ')' | 'W' dim? '(' rat ',' rat ')'
//   dim    := '_' digits                      (dimension index, default 0)
//   rat    := int ('/' posint)?
//   scalar := decimal | rat | '(' decimal ('+'|'-') decimal 'i' ')'
//
// U/V/W arguments are in structure units (u for U, b for V). Only coefficients
// may be decimals; labels must be exact rationals. The first term may carry a
// leading sign and decimals may carry an exponent.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylsector/errors.hpp"
#include "weylsector/weyl_algebra.hpp"

namespace weylsector {

class ParseError : public InputError {
public:
    ParseError(std::size_t column, const std::string& what);
    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct GenExpr {
    enum class Kind { U, V, W };
    Kind kind = Kind::W;
    std::size_t dim = 0;
    Rational first;   // u for U and W, b for V
    Rational second;  // b for W

    bool operator==(const GenExpr&) const = default;
};

struct TermExpr {
    bool negated = false;
    std::optional<Complex> scalar;
    std::vector<GenExpr> gens;

    bool operator==(const TermExpr&) const = default;
};

struct ElementExpr {
    std::string source;
    std::vector<TermExpr> terms;

    /// AST equality; the source text is ignored.
    bool operator==(const ElementExpr& o) const { return terms == o.terms; }
};

ElementExpr parse_expression(std::string_view text);
std::string print_expression(const ElementExpr& e);
AlgebraElement evaluate(const ElementExpr& e);

/// parse_expression + evaluate: the normal-ordered element.
AlgebraElement parse_element(std::string_view text);

/// Normal form as text, e.g. "-1*W(1/2,1) + (0.5+0.25i)*W(0,0)". Reparses to the same element.
std::string format_element(const AlgebraElement& a);

/// Shortest decimal that round-trips the double.
std::string format_scalar(Complex c);

}  // namespace weylsector
