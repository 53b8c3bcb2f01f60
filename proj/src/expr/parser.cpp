#include "lexer.hpp"

#include <lgraph/expr.hpp>

#include <cmath>
#include <optional>
#include <utility>

namespace lgraph {

namespace {

using detail::Token;
using detail::TokenKind;

std::optional<Func> lookup_func(std::string_view name)
{
    static constexpr std::pair<std::string_view, Func> table[] = {
        {"sin", Func::sin},   {"cos", Func::cos},   {"tan", Func::tan},
        {"atan", Func::atan}, {"exp", Func::exp},   {"log", Func::log},
        {"sqrt", Func::sqrt}, {"cosh", Func::cosh}, {"sinh", Func::sinh},
    };
    for (const auto& [n, f] : table)
        if (n == name) return f;
    return std::nullopt;
}

std::string describe(const Token& t)
{
    if (t.kind == TokenKind::end) return "end of input";
    return "'" + t.text + "'";
}

NodePtr make_constant(double v)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::constant;
    n->value = v;
    return n;
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs)
{
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

// Folds a variable-free subtree; nullopt if any variable appears.
std::optional<double> fold(const Node& n)
{
    switch (n.kind) {
    case NodeKind::constant: return n.value;
    case NodeKind::variable: return std::nullopt;
    case NodeKind::neg: {
        auto a = fold(*n.lhs);
        return a ? std::optional(-*a) : std::nullopt;
    }
    case NodeKind::pow: {
        auto a = fold(*n.lhs);
        return a ? std::optional(std::pow(*a, n.value)) : std::nullopt;
    }
    case NodeKind::func: {
        auto a = fold(*n.lhs);
        if (!a) return std::nullopt;
        switch (n.func) {
        case Func::sin: return std::sin(*a);
        case Func::cos: return std::cos(*a);
        case Func::tan: return std::tan(*a);
        case Func::atan: return std::atan(*a);
        case Func::exp: return std::exp(*a);
        case Func::log: return std::log(*a);
        case Func::sqrt: return std::sqrt(*a);
        case Func::cosh: return std::cosh(*a);
        case Func::sinh: return std::sinh(*a);
        }
        return std::nullopt;
    }
    default: break;
    }
    auto a = fold(*n.lhs);
    auto b = fold(*n.rhs);
    if (!a || !b) return std::nullopt;
    switch (n.kind) {
    case NodeKind::add: return *a + *b;
    case NodeKind::sub: return *a - *b;
    case NodeKind::mul: return *a * *b;
    case NodeKind::div: return *a / *b;
    default: return std::nullopt;
    }
}

class Parser
{
public:
    Parser(std::vector<Token> tokens, int dim) : tokens_(std::move(tokens)), dim_(dim) {}

    NodePtr parse_all()
    {
        NodePtr root = sum();
        if (peek().kind != TokenKind::end) fail("unexpected " + describe(peek()));
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, peek().position);
    }

    void expect(TokenKind kind, const char* what)
    {
        if (peek().kind != kind) fail(std::string("expected ") + what + " but found " + describe(peek()));
        ++pos_;
    }

    NodePtr sum()
    {
        NodePtr lhs = product();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const auto kind = advance().kind == TokenKind::plus ? NodeKind::add : NodeKind::sub;
            lhs = make_binary(kind, std::move(lhs), product());
        }
        return lhs;
    }

    NodePtr product()
    {
        NodePtr lhs = unary();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            const auto kind = advance().kind == TokenKind::star ? NodeKind::mul : NodeKind::div;
            lhs = make_binary(kind, std::move(lhs), unary());
        }
        return lhs;
    }

    NodePtr unary()
    {
        if (peek().kind == TokenKind::minus) {
            advance();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::neg;
            n->lhs = unary();
            return n;
        }
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (peek().kind != TokenKind::caret) return base;
        advance();
        const std::size_t exponent_pos = peek().position;
        NodePtr exponent = unary();
        const auto value = fold(*exponent);
        if (!value) throw ParseError("exponent must be a constant", exponent_pos);
        if (!std::isfinite(*value)) throw ParseError("exponent is not finite", exponent_pos);
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::pow;
        n->lhs = std::move(base);
        n->value = *value;
        return n;
    }

    NodePtr atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::number:
            advance();
            return make_constant(t.number);
        case TokenKind::lparen: {
            advance();
            NodePtr inner = sum();
            expect(TokenKind::rparen, "')'");
            return inner;
        }
        case TokenKind::identifier: return identifier();
        default: fail("unexpected " + describe(t));
        }
    }

    NodePtr identifier()
    {
        const Token& t = advance();
        if (t.text == "pi") return make_constant(M_PI);
        if (auto f = lookup_func(t.text)) {
            if (peek().kind != TokenKind::lparen)
                fail("expected '(' after function '" + t.text + "' but found " + describe(peek()));
            advance();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::func;
            n->func = *f;
            n->lhs = sum();
            expect(TokenKind::rparen, "')'");
            return n;
        }
        if (t.text.size() > 1 && t.text[0] == 'x'
            && t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
            // Digit strings too long for an int are necessarily out of range.
            const long k = t.text.size() > 9 ? -1 : std::stol(t.text.substr(1));
            if (k < 1 || k > dim_)
                throw ParseError("variable index out of range: " + t.text + " (dim " + std::to_string(dim_) + ")",
                                 t.position);
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::variable;
            n->index = static_cast<int>(k - 1);
            return n;
        }
        throw ParseError("unknown identifier '" + t.text + "'", t.position);
    }

    std::vector<Token> tokens_;
    int dim_;
    std::size_t pos_ = 0;
};

} // namespace

Expression parse(std::string_view text, int dim)
{
    if (dim < 1) throw ArgumentError("expression dimension must be positive");
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty expression", 0);
    Parser parser(detail::tokenize(text), dim);
    return Expression(dim, parser.parse_all());
}

} // namespace lgraph
