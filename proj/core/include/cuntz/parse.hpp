#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

// Syntax or range error while reading element text. Offsets are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// An element together with where each parsed term sits in the source text,
// for error reporting by callers that post-process terms.
struct ParsedExpression {
    std::string source;
    Element element;
    std::vector<std::pair<std::size_t, std::size_t>> term_spans;  // [begin, end) offsets
};

// Reads the element grammar
//   element := ['-'] term (('+'|'-') term)*
//   term    := [scalar '*'?] factor+ | scalar
//   factor  := 'S(' word ')' | 'S*(' word ')' | 'P(' word ')' | '1'
//   word    := '[' (int (',' int)*)? ']'
//   scalar  := rat | rat ('+'|'-') rat 'i' | rat 'i'   (parentheses allowed)
//   rat     := int ['/' int]
// over the n-letter alphabet. P(mu) means S(mu) S*(mu); juxtaposed factors
// multiply left to right; whitespace is insignificant. A bare 'i' is accepted
// for 1i. Throws ParseError on syntax errors and out-of-range letters.
ParsedExpression parse_element(const std::string& text, int n);

// Canonical text form: terms in the element's own (degree, beta, alpha)
// order, P(mu) for diagonal monomials, unit coefficients omitted, compound
// scalars parenthesized. parse_element(render_element(x), n) reproduces x
// exactly. The zero element renders as "0".
std::string render_element(const Element& x);

std::string render_scalar(const Scalar& c);

}  // namespace cuntz
