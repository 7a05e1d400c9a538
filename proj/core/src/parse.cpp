#include "cuntz/parse.hpp"

#include <cctype>

namespace cuntz {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t pos) {
    int line = 1;
    std::size_t bol = 0;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i)
        if (text[i] == '\n') {
            ++line;
            bol = i + 1;
        }
    return {line, static_cast<int>(pos - bol) + 1};
}

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), alphabet_(n) {}

    ParsedExpression run() {
        ParsedExpression out{text_, Element(alphabet_), {}};
        skip_ws();
        if (at_end()) fail("empty element text");

        bool first = true;
        while (true) {
            Scalar sign(1);
            if (!first || peek() == '+' || peek() == '-') {
                if (first) {
                    if (peek() == '-') sign = Scalar(-1);
                    ++pos_;
                } else {
                    if (peek() == '+') {
                        ++pos_;
                    } else if (peek() == '-') {
                        sign = Scalar(-1);
                        ++pos_;
                    } else {
                        fail("expected '+' or '-' between terms");
                    }
                }
                skip_ws();
            }
            std::size_t begin = pos_;
            Element term = parse_term();
            std::size_t end = pos_;
            while (end > begin && std::isspace(static_cast<unsigned char>(text_[end - 1])))
                --end;
            out.term_spans.emplace_back(begin, end);
            out.element += sign * term;
            first = false;
            skip_ws();
            if (at_end()) break;
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
        auto [line, col] = line_column(text_, pos);
        throw ParseError(message, line, col);
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected '") + c + "' " + what);
        ++pos_;
    }

    bool starts_scalar() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i';
    }

    bool starts_factor() const {
        char c = peek();
        return c == 'S' || c == 'P' || c == '1';
    }

    Integer parse_digits(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return Integer(digits);
    }

    Rational parse_rat() {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
            skip_ws();
        }
        Integer num = parse_digits("a number");
        Integer den = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            den = parse_digits("a denominator");
            if (den == 0) fail_at("zero denominator", den_pos);
        }
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    // One summand of a scalar: rat, rat 'i', or bare 'i'.
    std::pair<Rational, bool> parse_scalar_part() {
        if (peek() == 'i' || ((peek() == '+' || peek() == '-') && ahead_is_bare_i())) {
            Rational r(1);
            if (peek() == '-') {
                r = -1;
                ++pos_;
                skip_ws();
            } else if (peek() == '+') {
                ++pos_;
                skip_ws();
            }
            ++pos_;  // 'i'
            return {r, true};
        }
        Rational r = parse_rat();
        if (peek() == 'i') {
            ++pos_;
            return {r, true};
        }
        return {r, false};
    }

    bool ahead_is_bare_i() const {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && text_[p] == 'i';
    }

    Scalar parse_scalar() {
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            auto [first, first_imag] = parse_scalar_part();
            Scalar value = first_imag ? Scalar(Rational(0), first) : Scalar(first);
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                Rational sign(peek() == '-' ? -1 : 1);
                ++pos_;
                skip_ws();
                std::size_t part_pos = pos_;
                auto [second, second_imag] = parse_scalar_part();
                if (first_imag || !second_imag)
                    fail_at("a compound scalar must be real part then imaginary part", part_pos);
                value = Scalar(first, sign * second);
                skip_ws();
            }
            expect(')', "closing the scalar");
            return value;
        }
        auto [r, imag] = parse_scalar_part();
        return imag ? Scalar(Rational(0), r) : Scalar(r);
    }

    Word parse_word() {
        expect('[', "opening a word");
        std::vector<int> letters;
        skip_ws();
        if (peek() != ']') {
            while (true) {
                skip_ws();
                std::size_t letter_pos = pos_;
                bool neg = peek() == '-';
                if (neg) ++pos_;
                Integer value = parse_digits("a letter");
                if (neg || value < 1 || value > alphabet_.size())
                    fail_at("letter out of range 1.." + std::to_string(alphabet_.size()),
                            letter_pos);
                letters.push_back(static_cast<int>(value.get_si()));
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(']', "closing the word");
        return Word(std::move(letters));
    }

    Element parse_factor() {
        if (peek() == '1') {
            ++pos_;
            return Element::one(alphabet_);
        }
        if (peek() == 'P') {
            ++pos_;
            skip_ws();
            expect('(', "after 'P'");
            skip_ws();
            Word mu = parse_word();
            skip_ws();
            expect(')', "closing 'P(...)'");
            return Element::projection(alphabet_, mu);
        }
        if (peek() == 'S') {
            ++pos_;
            bool adjoint = peek() == '*';
            if (adjoint) ++pos_;
            skip_ws();
            expect('(', adjoint ? "after 'S*'" : "after 'S'");
            skip_ws();
            Word mu = parse_word();
            skip_ws();
            expect(')', "closing the factor");
            return adjoint ? Element::s_star(alphabet_, mu) : Element::s(alphabet_, mu);
        }
        fail("expected a factor S(...), S*(...), P(...) or 1");
    }

    Element parse_term() {
        Scalar coeff(1);
        bool have_scalar = false;
        bool explicit_star = false;
        if (starts_scalar()) {
            coeff = parse_scalar();
            have_scalar = true;
            skip_ws();
            if (peek() == '*') {
                explicit_star = true;
                ++pos_;
                skip_ws();
            }
        }
        Element acc = Element::one(alphabet_);
        bool have_factor = false;
        while (starts_factor()) {
            acc = acc * parse_factor();
            have_factor = true;
            skip_ws();
        }
        if (explicit_star && !have_factor) fail("expected a factor after '*'");
        if (!have_scalar && !have_factor) fail("expected a term");
        return coeff * acc;
    }

    const std::string& text_;
    Alphabet alphabet_;
    std::size_t pos_ = 0;
};

std::string rat_str(const Rational& r) { return to_string(r); }

}  // namespace

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message) + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

ParsedExpression parse_element(const std::string& text, int n) {
    return Parser(text, n).run();
}

std::string render_scalar(const Scalar& c) {
    if (c.im() == 0) return rat_str(c.re());
    if (c.re() == 0) return rat_str(c.im()) + "i";
    std::string out = "(" + rat_str(c.re());
    out += c.im() < 0 ? " - " : " + ";
    Rational mag = c.im() < 0 ? Rational(-c.im()) : c.im();
    out += rat_str(mag) + "i)";
    return out;
}

std::string render_element(const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        bool negative = (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
        Scalar magnitude = negative ? -c : c;

        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string body;
        if (m.alpha == m.beta) {
            body = m.alpha.empty() ? "1" : "P(" + m.alpha.str() + ")";
        } else if (m.beta.empty()) {
            body = "S(" + m.alpha.str() + ")";
        } else if (m.alpha.empty()) {
            body = "S*(" + m.beta.str() + ")";
        } else {
            body = "S(" + m.alpha.str() + ") S*(" + m.beta.str() + ")";
        }

        if (magnitude.is_one()) {
            out += body;
        } else if (body == "1") {
            out += render_scalar(magnitude);
        } else {
            out += render_scalar(magnitude) + " * " + body;
        }
    }
    return out;
}

}  // namespace cuntz
