#include "lexer.hpp"

#include <lgraph/error.hpp>

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>

namespace lgraph::detail {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i < text.size() && text[i] == '.') {
                ++i;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
                if (j < text.size() && is_digit(text[j])) {
                    i = j;
                    while (i < text.size() && is_digit(text[i])) ++i;
                }
            }
            std::string literal(text.substr(start, i - start));
            errno = 0;
            const double value = std::strtod(literal.c_str(), nullptr);
            if (errno == ERANGE || !std::isfinite(value))
                throw ParseError("numeric literal out of range", start);
            tokens.push_back({TokenKind::number, start, std::move(literal), value});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < text.size() && is_ident_char(text[i])) ++i;
            tokens.push_back({TokenKind::identifier, start, std::string(text.substr(start, i - start))});
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        case '*': kind = TokenKind::star; break;
        case '/': kind = TokenKind::slash; break;
        case '^': kind = TokenKind::caret; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        tokens.push_back({kind, start, std::string(1, c)});
        ++i;
    }
    tokens.push_back({TokenKind::end, text.size(), ""});
    return tokens;
}

} // namespace lgraph::detail
