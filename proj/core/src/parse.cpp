#include "lognc/parse.hpp"

#include <cctype>

namespace lognc {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line(line),
      column(column) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::End, "", line, col};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num.push_back(s_[pos_]);
                bump();
            }
            tok_ = {Tok::Number, num, line, col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id.push_back(s_[pos_]);
                bump();
            }
            tok_ = {Tok::Ident, id, line, col};
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        bump();
        tok_ = {k, std::string(1, c), line, col};
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    Parser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), lex_(text) {}

    Poly parse() {
        Poly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("trailing input", t.line, t.col);
        return p;
    }

  private:
    Poly expr() {
        Poly acc = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.next();
                acc = acc + term();
            } else if (k == Tok::Minus) {
                lex_.next();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::Star) {
                lex_.next();
                acc = acc * factor();
            } else if (t.kind == Tok::Slash) {
                Token slash = lex_.next();
                Poly d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by nonzero constants", slash.line, slash.col);
                acc = acc * (Rat(1) / d.constant_term());
            } else if (t.kind == Tok::Ident || t.kind == Tok::LParen) {
                // Implicit multiplication, as in "2x" or "3(x+y)".
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.next();
            Token e = lex_.next();
            bool neg = false;
            if (e.kind == Tok::Minus) {
                neg = true;
                e = lex_.next();
            }
            if (e.kind != Tok::Number || neg)
                throw ParseError("exponent must be a non-negative integer", caret.line, caret.col);
            return base.pow(std::stoi(e.text));
        }
        return base;
    }

    Poly atom() {
        Token t = lex_.next();
        switch (t.kind) {
            case Tok::Number:
                return Poly::constant(ring_, rat_from_string(t.text));
            case Tok::Ident: {
                int v = ring_->var_index(t.text);
                if (v < 0) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
                return Poly::variable(ring_, v);
            }
            case Tok::LParen: {
                Poly p = expr();
                Token r = lex_.next();
                if (r.kind != Tok::RParen) throw ParseError("expected ')'", r.line, r.col);
                return p;
            }
            case Tok::Minus:
                return -factor();
            case Tok::Plus:
                return factor();
            default:
                throw ParseError("expected a number, variable or '('", t.line, t.col);
        }
    }

    RingPtr ring_;
    Lexer lex_;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).parse();
}

}  // namespace lognc
