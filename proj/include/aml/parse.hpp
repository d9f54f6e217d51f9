#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aml/errors.hpp"
#include "aml/laurent.hpp"
#include "aml/monoid.hpp"

namespace aml {

/// Textual definition of a multiplication map:
///   dim <n>; mul = (expr_1, ..., expr_n) [; unit = (q_1, ..., q_n)]
/// Expressions range over u1..un, v1..vn with integer or rational literals
/// p/q, the operators + - * ^ (nonnegative integer exponents only) and
/// parentheses.
struct MonoidSource {
    std::size_t dimension = 0;
    std::vector<std::string> component_expressions;
    std::optional<Point> unit_hint;
};

namespace detail {

struct Token {
    enum class Kind { Ident, Integer, Symbol, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& input) : input_(input) {}

    Token next() {
        skip_space();
        const int line = line_, col = col_;
        if (pos_ >= input_.size()) return {Token::Kind::End, "", line, col};
        const char ch = input_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string word;
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                    input_[pos_] == '_'))
                word += advance();
            return {Token::Kind::Ident, word, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (pos_ < input_.size() &&
                   std::isdigit(static_cast<unsigned char>(input_[pos_])))
                digits += advance();
            return {Token::Kind::Integer, digits, line, col};
        }
        static const std::string symbols = ";=(),+-*^/";
        if (symbols.find(ch) != std::string::npos)
            return {Token::Kind::Symbol, std::string(1, advance()), line, col};
        throw parse_error(std::string("unexpected character '") + ch + "'", line, col);
    }

private:
    char advance() {
        const char ch = input_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space() {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_])))
            advance();
    }

    const std::string& input_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class SourceParser {
public:
    explicit SourceParser(const std::string& input) : lexer_(input) { shift(); }

    std::pair<std::vector<LaurentPolynomial>, std::optional<Point>> parse() {
        expect_ident("dim");
        dimension_ = parse_count();
        expect_symbol(";");
        expect_ident("mul");
        expect_symbol("=");
        expect_symbol("(");
        std::vector<LaurentPolynomial> comps;
        comps.push_back(parse_expr());
        while (at_symbol(",")) {
            shift();
            comps.push_back(parse_expr());
        }
        expect_symbol(")");
        if (comps.size() != dimension_)
            throw parse_error("dim " + std::to_string(dimension_) + " needs " +
                                  std::to_string(dimension_) + " expressions, got " +
                                  std::to_string(comps.size()),
                              current_.line, current_.column);

        std::optional<Point> unit;
        if (at_symbol(";")) {
            shift();
            if (current_.kind == Token::Kind::End)
                return {std::move(comps), std::move(unit)};
            expect_ident("unit");
            expect_symbol("=");
            expect_symbol("(");
            Point e;
            e.push_back(parse_signed_rational());
            while (at_symbol(",")) {
                shift();
                e.push_back(parse_signed_rational());
            }
            expect_symbol(")");
            if (e.size() != dimension_)
                throw parse_error("unit point needs " + std::to_string(dimension_) +
                                      " coordinates, got " + std::to_string(e.size()),
                                  current_.line, current_.column);
            unit = std::move(e);
            if (at_symbol(";")) shift();
        }
        if (current_.kind != Token::Kind::End)
            throw parse_error("unexpected trailing input '" + current_.text + "'",
                              current_.line, current_.column);
        return {std::move(comps), std::move(unit)};
    }

private:
    void shift() { current_ = lexer_.next(); }

    bool at_symbol(const std::string& s) const {
        return current_.kind == Token::Kind::Symbol && current_.text == s;
    }

    void expect_symbol(const std::string& s) {
        if (!at_symbol(s))
            throw parse_error("expected '" + s + "', found '" + current_.text + "'",
                              current_.line, current_.column);
        shift();
    }

    void expect_ident(const std::string& word) {
        if (current_.kind != Token::Kind::Ident || current_.text != word)
            throw parse_error("expected '" + word + "', found '" + current_.text + "'",
                              current_.line, current_.column);
        shift();
    }

    std::size_t parse_count() {
        const std::uint64_t v = parse_unsigned();
        if (v < 1 || v > 26)
            throw parse_error("dimension must be between 1 and 26", current_.line,
                              current_.column);
        return static_cast<std::size_t>(v);
    }

    std::uint64_t parse_unsigned() {
        if (current_.kind != Token::Kind::Integer)
            throw parse_error("expected an integer, found '" + current_.text + "'",
                              current_.line, current_.column);
        std::uint64_t v = 0;
        try {
            v = std::stoull(current_.text);
        } catch (const std::exception&) {
            throw parse_error("integer out of range", current_.line, current_.column);
        }
        if (v > (std::uint64_t{1} << 31))
            throw parse_error("integer too large", current_.line, current_.column);
        shift();
        return v;
    }

    Rational parse_rational_literal() {
        if (current_.kind != Token::Kind::Integer)
            throw parse_error("expected a number, found '" + current_.text + "'",
                              current_.line, current_.column);
        Integer num(current_.text);
        shift();
        if (at_symbol("/")) {
            shift();
            if (current_.kind != Token::Kind::Integer)
                throw parse_error("expected a denominator, found '" + current_.text + "'",
                                  current_.line, current_.column);
            Integer den(current_.text);
            if (den == 0)
                throw parse_error("zero denominator", current_.line, current_.column);
            shift();
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational parse_signed_rational() {
        bool negative = false;
        if (at_symbol("-")) {
            negative = true;
            shift();
        }
        Rational v = parse_rational_literal();
        return negative ? -v : v;
    }

    // expr := ['-'] term (('+'|'-') term)*
    LaurentPolynomial parse_expr() {
        LaurentPolynomial acc(2 * dimension_);
        bool negate = false;
        if (at_symbol("-")) {
            negate = true;
            shift();
        }
        LaurentPolynomial first = parse_term();
        acc = negate ? -first : first;
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = current_.text == "-";
            shift();
            const LaurentPolynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    // term := factor ('*' factor)*
    LaurentPolynomial parse_term() {
        LaurentPolynomial acc = parse_factor();
        while (at_symbol("*")) {
            shift();
            acc *= parse_factor();
        }
        return acc;
    }

    // factor := primary ['^' integer]
    LaurentPolynomial parse_factor() {
        LaurentPolynomial base = parse_primary();
        if (at_symbol("^")) {
            const int line = current_.line, col = current_.column;
            shift();
            if (at_symbol("-"))
                throw parse_error("negative exponents are not allowed in source text",
                                  line, col);
            const std::uint64_t e = parse_unsigned();
            base = base.pow(static_cast<std::int64_t>(e));
        }
        return base;
    }

    LaurentPolynomial parse_primary() {
        if (at_symbol("(")) {
            shift();
            LaurentPolynomial inner = parse_expr();
            expect_symbol(")");
            return inner;
        }
        if (current_.kind == Token::Kind::Integer)
            return LaurentPolynomial::constant(2 * dimension_, parse_rational_literal());
        if (current_.kind == Token::Kind::Ident) return parse_variable();
        throw parse_error("expected a variable, number or '('; found '" +
                              current_.text + "'",
                          current_.line, current_.column);
    }

    LaurentPolynomial parse_variable() {
        const std::string& word = current_.text;
        const int line = current_.line, col = current_.column;
        const auto reject = [&] {
            throw parse_error("unknown variable '" + word + "' (expected u1..u" +
                                  std::to_string(dimension_) + ", v1..v" +
                                  std::to_string(dimension_) + ")",
                              line, col);
        };
        if (word.size() < 2 || word.size() > 8 || (word[0] != 'u' && word[0] != 'v'))
            reject();
        for (std::size_t i = 1; i < word.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(word[i]))) reject();
        const long long index = std::stoll(word.substr(1));
        if (index < 1 || static_cast<std::size_t>(index) > dimension_) reject();
        shift();
        const std::size_t offset = word[0] == 'u' ? 0 : dimension_;
        return LaurentPolynomial::variable(2 * dimension_,
                                           offset + static_cast<std::size_t>(index) - 1);
    }

    Lexer lexer_;
    Token current_{Token::Kind::End, "", 1, 1};
    std::size_t dimension_ = 0;
};

}  // namespace detail

/// Parses a multiplication map from source text; a declared unit is verified
/// exactly and rejected with unit_error if false.
inline PolynomialMonoid parse_monoid(const std::string& text) {
    detail::SourceParser parser(text);
    auto [components, unit] = parser.parse();
    return PolynomialMonoid(std::move(components), std::move(unit));
}

/// Canonical source rendering; parse_monoid(to_source_text(m)) reproduces m.
inline std::string to_source_text(const PolynomialMonoid& m) {
    const auto names = argument_pair_names(m.dimension());
    std::string out = "dim " + std::to_string(m.dimension()) + "; mul = (";
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        if (i) out += ", ";
        out += to_string(m.components()[i], names);
    }
    out += ")";
    if (m.unit()) {
        out += "; unit = (";
        for (std::size_t i = 0; i < m.unit()->size(); ++i) {
            if (i) out += ", ";
            out += to_string((*m.unit())[i]);
        }
        out += ")";
    }
    return out;
}

inline MonoidSource make_source(const PolynomialMonoid& m) {
    MonoidSource src;
    src.dimension = m.dimension();
    const auto names = argument_pair_names(m.dimension());
    for (const auto& c : m.components())
        src.component_expressions.push_back(to_string(c, names));
    src.unit_hint = m.unit();
    return src;
}

}  // namespace aml
