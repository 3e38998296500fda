#pragma once

// Tokenizer shared by the theory and ground-program readers.

#include "dcasm/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace dcasm::detail {

enum class Tok {
    identifier,
    variable,  // Uppercase-initial name; rejected by both grammars, reported precisely.
    number,
    directive, // `#name`
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    semicolon,
    double_semicolon,
    pipe,
    dot,
    slash,
    if_,       // `:-`
    equals2,   // `==`
    end
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

const char* describe(Tok kind);

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return current_; }
    Token next();
    bool accept(Tok kind);
    Token expect(Tok kind, const char* context);
    [[noreturn]] void fail(const Token& at, const std::string& message) const;

private:
    void advance();
    void skip_blanks();
    char at(std::size_t offset = 0) const noexcept {
        return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
    }
    void bump(std::size_t count = 1);

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

} // namespace dcasm::detail
