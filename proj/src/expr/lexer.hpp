#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lgraph::detail {

enum class TokenKind
{
    number,
    identifier,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end
};

struct Token
{
    TokenKind kind;
    std::size_t position;
    std::string text;
    double number = 0.0;
};

std::vector<Token> tokenize(std::string_view text);

} // namespace lgraph::detail
