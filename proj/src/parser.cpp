#include "minterp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace minterp {

namespace {

enum class Tok { rational, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok type;
    std::size_t pos;
    std::string text;  // ident name or literal text
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ == text_.size()) {
            current_ = {Tok::end, start, ""};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            // `p/q` is one token when the slash is unspaced and followed by
            // digits; a slash anywhere else is rejected below.
            if (j < text_.size() && text_[j] == '/' && j + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[j + 1]))) {
                ++j;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            }
            current_ = {Tok::rational, start, text_.substr(start, j - start)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            current_ = {Tok::ident, start, text_.substr(start, j - start)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': current_ = {Tok::plus, start, "+"}; return;
            case '-': current_ = {Tok::minus, start, "-"}; return;
            case '*': current_ = {Tok::star, start, "*"}; return;
            case '^': current_ = {Tok::caret, start, "^"}; return;
            case '(': current_ = {Tok::lparen, start, "("}; return;
            case ')': current_ = {Tok::rparen, start, ")"}; return;
            case '/': throw ParseError(start, "'/' is only valid inside a rational literal like 1/2");
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lexer_(text), dim_(variables.size()) {
        for (std::size_t i = 0; i < variables.size(); ++i)
            var_index_[variables[i]] = i;
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (lexer_.current().type != Tok::end)
            throw ParseError(lexer_.current().pos, "expected '+', '-', '*' or end of input");
        return p;
    }

private:
    Polynomial expr() {
        bool negate = accept(Tok::minus);
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            if (accept(Tok::plus)) p += term();
            else if (accept(Tok::minus)) p -= term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept(Tok::star)) p = p * factor();
        return p;
    }

    Polynomial factor() {
        const Token tok = lexer_.current();
        switch (tok.type) {
            case Tok::rational: {
                lexer_.advance();
                return Polynomial::constant(dim_, Rational::parse(tok.text));
            }
            case Tok::ident: {
                auto it = var_index_.find(tok.text);
                if (it == var_index_.end())
                    throw UnknownVariable(tok.pos, tok.text);
                lexer_.advance();
                int power = 1;
                if (accept(Tok::caret)) power = exponent();
                return Polynomial::term(Monomial::variable(dim_, it->second, power),
                                        Rational(1));
            }
            case Tok::lparen: {
                lexer_.advance();
                Polynomial p = expr();
                if (!accept(Tok::rparen))
                    throw ParseError(lexer_.current().pos, "expected ')'");
                return p;
            }
            default:
                throw ParseError(tok.pos, "expected a rational, a variable or '('");
        }
    }

    int exponent() {
        const Token tok = lexer_.current();
        if (tok.type == Tok::minus)
            throw NegativeExponent(tok.pos);
        if (tok.type != Tok::rational || tok.text.find('/') != std::string::npos)
            throw ParseError(tok.pos, "expected a nonnegative integer exponent");
        long v = 0;
        for (char c : tok.text) {
            v = v * 10 + (c - '0');
            if (v > 1000000)
                throw ParseError(tok.pos, "exponent too large");
        }
        lexer_.advance();
        return static_cast<int>(v);
    }

    bool accept(Tok t) {
        if (lexer_.current().type != t) return false;
        lexer_.advance();
        return true;
    }

    Lexer lexer_;
    std::size_t dim_;
    std::map<std::string, std::size_t> var_index_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    if (variables.empty())
        throw Error("parse_polynomial needs at least one variable");
    return Parser(text, variables).parse();
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
    if (m.dim() != variables.size())
        throw DimensionMismatch("monomial dimension does not match the variables");
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variables[i];
        if (m[i] >= 2) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variables,
                              const MonomialOrder& order) {
    if (p.dim() != variables.size())
        throw DimensionMismatch("polynomial dimension does not match the variables");
    if (p.is_zero()) return "0";

    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });

    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [m, c] = terms[i];
        Rational abs_c = c.sign() < 0 ? -c : c;
        if (i == 0)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        std::string mono = format_monomial(m, variables);
        if (mono == "1")
            out += abs_c.str();
        else if (abs_c == Rational(1))
            out += mono;
        else
            out += abs_c.str() + "*" + mono;
    }
    return out;
}

}  // namespace minterp
