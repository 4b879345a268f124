#pragma once

#include <string>
#include <vector>

namespace vapi::java {

enum class TokenKind {
    Identifier,   // includes keywords; the parser distinguishes by text
    Number,
    String,       // "..." with escapes, text kept verbatim incl. quotes
    Char,         // '...'
    Operator,     // multi-char operators and single punctuation
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 0;
    int col = 0;

    bool is(const char* s) const { return text == s; }
};

struct LexError {
    std::string message;
    int line;
    int col;
};

// Tokenizes Java source. Comments and whitespace are discarded.
// Throws ParseError (see parser.hpp) on unterminated strings/comments.
std::vector<Token> lex(const std::string& source, const std::string& path);

} // namespace vapi::java
