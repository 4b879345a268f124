#include "vapi/java/lexer.hpp"

#include "vapi/java/parser.hpp"

#include <cctype>

namespace vapi::java {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_part(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Longest-match operator table; order within a length class is irrelevant.
const char* THREE_OPS[] = {">>>", "<<=", ">>=", "...", nullptr};
const char* TWO_OPS[] = {"==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=",
                         "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::", nullptr};

} // namespace

std::vector<Token> lex(const std::string& src, const std::string& path) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') { ++line; col = 1; } else ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            int sl = line, sc = col;
            advance(2);
            while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) advance(1);
            if (i + 1 >= src.size())
                throw ParseError(path, sl, sc, "unterminated block comment");
            advance(2);
            continue;
        }
        int tl = line, tc = col;
        if (ident_start(c)) {
            size_t b = i;
            while (i < src.size() && ident_part(src[i])) advance(1);
            out.push_back({TokenKind::Identifier, src.substr(b, i - b), tl, tc});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t b = i;
            while (i < src.size() &&
                   (ident_part(src[i]) || src[i] == '.' ||
                    ((src[i] == '+' || src[i] == '-') && i > b &&
                     (src[i - 1] == 'e' || src[i - 1] == 'E')))) {
                // stop a trailing '.' that is actually a member access: 1.foo is not a number
                if (src[i] == '.' && i + 1 < src.size() && ident_start(src[i + 1])) break;
                advance(1);
            }
            out.push_back({TokenKind::Number, src.substr(b, i - b), tl, tc});
            continue;
        }
        if (c == '"') {
            size_t b = i;
            advance(1);
            while (i < src.size() && src[i] != '"') {
                if (src[i] == '\\' && i + 1 < src.size()) advance(1);
                if (src[i] == '\n') throw ParseError(path, tl, tc, "unterminated string literal");
                advance(1);
            }
            if (i >= src.size()) throw ParseError(path, tl, tc, "unterminated string literal");
            advance(1);
            out.push_back({TokenKind::String, src.substr(b, i - b), tl, tc});
            continue;
        }
        if (c == '\'') {
            size_t b = i;
            advance(1);
            while (i < src.size() && src[i] != '\'') {
                if (src[i] == '\\' && i + 1 < src.size()) advance(1);
                advance(1);
            }
            if (i >= src.size()) throw ParseError(path, tl, tc, "unterminated char literal");
            advance(1);
            out.push_back({TokenKind::Char, src.substr(b, i - b), tl, tc});
            continue;
        }
        // operators and punctuation, longest match first
        bool matched = false;
        for (const char** t = THREE_OPS; *t; ++t) {
            if (src.compare(i, 3, *t) == 0) {
                out.push_back({TokenKind::Operator, *t, tl, tc});
                advance(3);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (const char** t = TWO_OPS; *t; ++t) {
            if (src.compare(i, 2, *t) == 0) {
                out.push_back({TokenKind::Operator, *t, tl, tc});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        static const std::string singles = "(){}[];,.<>=!&|^+-*/%~?:@";
        if (singles.find(c) != std::string::npos) {
            out.push_back({TokenKind::Operator, std::string(1, c), tl, tc});
            advance(1);
            continue;
        }
        throw ParseError(path, tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::End, "", line, col});
    return out;
}

} // namespace vapi::java
