#include "lexer.hpp"

#include <cctype>

namespace dcasm::detail {

const char* describe(Tok kind) {
    switch (kind) {
        case Tok::identifier: return "identifier";
        case Tok::variable: return "variable";
        case Tok::number: return "number";
        case Tok::directive: return "directive";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::semicolon: return "';'";
        case Tok::double_semicolon: return "';;'";
        case Tok::pipe: return "'|'";
        case Tok::dot: return "'.'";
        case Tok::slash: return "'/'";
        case Tok::if_: return "':-'";
        case Tok::equals2: return "'=='";
        case Tok::end: return "end of input";
    }
    return "token";
}

Token Lexer::next() {
    Token out = current_;
    advance();
    return out;
}

bool Lexer::accept(Tok kind) {
    if (current_.kind != kind) {
        return false;
    }
    advance();
    return true;
}

Token Lexer::expect(Tok kind, const char* context) {
    if (current_.kind != kind) {
        std::string found = current_.kind == Tok::end ? "end of input" : "'" + current_.text + "'";
        fail(current_, std::string("expected ") + describe(kind) + " " + context + ", found " + found);
    }
    return next();
}

void Lexer::fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
}

void Lexer::bump(std::size_t count) {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i) {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
}

void Lexer::skip_blanks() {
    for (;;) {
        const char ch = at();
        if (ch == '%') {
            while (at() != '\n' && at() != '\0') {
                bump();
            }
        } else if (ch != '\0' && std::isspace(static_cast<unsigned char>(ch))) {
            bump();
        } else {
            return;
        }
    }
}

void Lexer::advance() {
    skip_blanks();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    const char ch = at();
    if (ch == '\0') {
        current_.kind = Tok::end;
        return;
    }
    auto word = [&](std::size_t start) {
        std::size_t len = start;
        while (std::isalnum(static_cast<unsigned char>(at(len))) || at(len) == '_') {
            ++len;
        }
        std::string text(text_.substr(pos_, len));
        bump(len);
        return text;
    };
    const auto uch = static_cast<unsigned char>(ch);
    if (std::islower(uch)) {
        current_.kind = Tok::identifier;
        current_.text = word(0);
        return;
    }
    if (std::isupper(uch) || ch == '_') {
        current_.kind = Tok::variable;
        current_.text = word(0);
        return;
    }
    if (std::isdigit(uch)) {
        std::size_t len = 0;
        while (std::isdigit(static_cast<unsigned char>(at(len)))) {
            ++len;
        }
        current_.kind = Tok::number;
        current_.text = std::string(text_.substr(pos_, len));
        bump(len);
        return;
    }
    if (ch == '#') {
        if (!std::isalpha(static_cast<unsigned char>(at(1)))) {
            throw ParseError(line_, column_, "expected directive name after '#'");
        }
        current_.kind = Tok::directive;
        current_.text = word(1).substr(1);
        return;
    }
    auto single = [&](Tok kind, std::size_t len) {
        current_.kind = kind;
        current_.text = std::string(text_.substr(pos_, len));
        bump(len);
    };
    switch (ch) {
        case '(': return single(Tok::lparen, 1);
        case ')': return single(Tok::rparen, 1);
        case '{': return single(Tok::lbrace, 1);
        case '}': return single(Tok::rbrace, 1);
        case ',': return single(Tok::comma, 1);
        case '|': return single(Tok::pipe, 1);
        case '.': return single(Tok::dot, 1);
        case '/': return single(Tok::slash, 1);
        case ';': return at(1) == ';' ? single(Tok::double_semicolon, 2) : single(Tok::semicolon, 1);
        case ':':
            if (at(1) == '-') {
                return single(Tok::if_, 2);
            }
            break;
        case '=':
            if (at(1) == '=') {
                return single(Tok::equals2, 2);
            }
            break;
        default: break;
    }
    throw ParseError(line_, column_, std::string("unexpected character '") + ch + "'");
}

} // namespace dcasm::detail
