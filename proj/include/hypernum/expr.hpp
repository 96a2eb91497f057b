#pragma once

#include "hypernum/hyperadd.hpp"
#include "hypernum/mult.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hypernum {

/// Syntax error with byte offset and the tokens that would have been
/// accepted at that position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message, std::vector<std::string> expected = {})
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message +
                             render_expected(expected)),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string render_expected(const std::vector<std::string>& expected) {
        if (expected.empty()) return "";
        std::string out = " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) out += expected.size() == 2 ? " or " : ", ";
            out += expected[i];
        }
        return out + ")";
    }
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Well-formed syntax with an invalid value, e.g. a nonpositive literal
/// magnitude.
class SemanticError : public std::runtime_error {
public:
    SemanticError(std::size_t offset, const std::string& message)
        : std::runtime_error("semantic error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Expression tree.  The node structure mirrors the source
/// parenthesization exactly; nothing is ever re-associated, since
/// bracketing changes hyper-sum results.
struct Expr {
    struct Literal {
        Hyper value;
    };
    struct HyperAdd {
        std::unique_ptr<Expr> lhs, rhs;
    };
    struct Mul {
        std::unique_ptr<Expr> lhs, rhs;
    };
    struct ScalarMul {
        Rational scalar;
        std::unique_ptr<Expr> operand;
    };
    struct Neg {
        std::unique_ptr<Expr> operand;
    };

    std::variant<Literal, HyperAdd, Mul, ScalarMul, Neg> node;
};

using ExprPtr = std::unique_ptr<Expr>;

inline ExprPtr make_expr(decltype(Expr::node) node) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    return e;
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Expr::Literal>(&a.node))
        return la->value == std::get<Expr::Literal>(b.node).value;
    if (const auto* ha = std::get_if<Expr::HyperAdd>(&a.node)) {
        const auto& hb = std::get<Expr::HyperAdd>(b.node);
        return structurally_equal(*ha->lhs, *hb.lhs) && structurally_equal(*ha->rhs, *hb.rhs);
    }
    if (const auto* ma = std::get_if<Expr::Mul>(&a.node)) {
        const auto& mb = std::get<Expr::Mul>(b.node);
        return structurally_equal(*ma->lhs, *mb.lhs) && structurally_equal(*ma->rhs, *mb.rhs);
    }
    if (const auto* sa = std::get_if<Expr::ScalarMul>(&a.node)) {
        const auto& sb = std::get<Expr::ScalarMul>(b.node);
        return sa->scalar == sb.scalar && structurally_equal(*sa->operand, *sb.operand);
    }
    const auto& na = std::get<Expr::Neg>(a.node);
    const auto& nb = std::get<Expr::Neg>(b.node);
    return structurally_equal(*na.operand, *nb.operand);
}

/// Canonical text form; reparsing it yields a structurally identical
/// tree.
inline std::string pretty(const Expr& e) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node)) return lit->value.str();
    if (const auto* add = std::get_if<Expr::HyperAdd>(&e.node))
        return "(" + pretty(*add->lhs) + " + " + pretty(*add->rhs) + ")";
    if (const auto* mul = std::get_if<Expr::Mul>(&e.node))
        return "(" + pretty(*mul->lhs) + " * " + pretty(*mul->rhs) + ")";
    if (const auto* sm = std::get_if<Expr::ScalarMul>(&e.node))
        return "(" + sm->scalar.str() + " * " + pretty(*sm->operand) + ")";
    return "neg(" + pretty(*std::get<Expr::Neg>(e.node).operand) + ")";
}

namespace detail {

enum class TokKind { LParen, RParen, Plus, Minus, Star, Number, Ident, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        char ch = src[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        switch (ch) {
            case '(': out.push_back({TokKind::LParen, "(", start}); ++i; continue;
            case ')': out.push_back({TokKind::RParen, ")", start}); ++i; continue;
            case '+': out.push_back({TokKind::Plus, "+", start}); ++i; continue;
            case '-': out.push_back({TokKind::Minus, "-", start}); ++i; continue;
            case '*': out.push_back({TokKind::Star, "*", start}); ++i; continue;
            default: break;
        }
        if (ch >= '0' && ch <= '9') {
            std::size_t j = i;
            while (j < n && src[j] >= '0' && src[j] <= '9') ++j;
            if (j < n && src[j] == '/') {
                std::size_t k = j + 1;
                while (k < n && src[k] >= '0' && src[k] <= '9') ++k;
                if (k == j + 1) throw ParseError(j + 1, "expected digits after '/'", {"digits"});
                j = k;
            }
            if (j < n && src[j] == '.')
                throw ParseError(j, "decimal numbers are rejected; write an exact rational p/q");
            out.push_back({TokKind::Number, std::string(src.substr(i, j - i)), start});
            i = j;
            continue;
        }
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')) {
            std::size_t j = i;
            while (j < n && ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z')))
                ++j;
            out.push_back({TokKind::Ident, std::string(src.substr(i, j - i)), start});
            i = j;
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({TokKind::End, "", n});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        expect(TokKind::End, {"end of input", "'+'", "'*'"});
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_++]; }

    void expect(TokKind kind, std::vector<std::string> expected) {
        if (peek().kind != kind)
            throw ParseError(peek().offset, "unexpected '" + describe(peek()) + "'",
                             std::move(expected));
        advance();
    }

    static std::string describe(const Token& t) {
        return t.kind == TokKind::End ? "end of input" : t.text;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == TokKind::Plus) {
            advance();
            ExprPtr rhs = parse_term();
            lhs = make_expr(Expr::HyperAdd{std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == TokKind::Star) {
            advance();
            ExprPtr rhs = parse_factor();
            lhs = make_expr(Expr::Mul{std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    // A signed rational: [-] NUMBER.  Used for literal magnitudes and
    // scalar factors.
    Rational parse_rational(std::size_t& offset_out) {
        bool negative = false;
        offset_out = peek().offset;
        if (peek().kind == TokKind::Minus) {
            advance();
            negative = true;
        }
        if (peek().kind != TokKind::Number)
            throw ParseError(peek().offset, "unexpected '" + describe(peek()) + "'", {"a rational"});
        const Token& tok = advance();
        auto value = Rational::try_parse(tok.text);
        if (!value) throw ParseError(tok.offset, "invalid rational '" + tok.text + "'");
        return negative ? -*value : *value;
    }

    ExprPtr parse_signed_literal(Sign sign) {
        std::size_t mag_offset = 0;
        Rational magnitude = parse_rational(mag_offset);
        expect(TokKind::RParen, {"')'"});
        if (!magnitude.is_positive())
            throw SemanticError(mag_offset, "magnitude must be positive");
        return make_expr(Expr::Literal{Hyper::make(sign, std::move(magnitude))});
    }

    ExprPtr parse_factor() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokKind::Minus:
            case TokKind::Number: {
                // A rational here is only meaningful as a scalar factor,
                // except that a bare 0 is the zero hypernumber.
                std::size_t offset = 0;
                Rational value = parse_rational(offset);
                if (peek().kind == TokKind::Star) {
                    advance();
                    ExprPtr operand = parse_factor();
                    return make_expr(Expr::ScalarMul{std::move(value), std::move(operand)});
                }
                if (value.is_zero()) return make_expr(Expr::Literal{Hyper::zero()});
                throw ParseError(peek().offset,
                                 "a bare nonzero rational is not a hypernumber", {"'*'"});
            }
            case TokKind::Ident: {
                if (tok.text == "neg") {
                    advance();
                    expect(TokKind::LParen, {"'('"});
                    ExprPtr operand = parse_expr();
                    expect(TokKind::RParen, {"')'"});
                    return make_expr(Expr::Neg{std::move(operand)});
                }
                throw ParseError(tok.offset, "unknown name '" + tok.text + "'",
                                 {"'neg'", "a literal", "'('"});
            }
            case TokKind::LParen: {
                advance();
                switch (peek().kind) {
                    case TokKind::Plus:
                        advance();
                        return parse_signed_literal(Sign::Plus);
                    case TokKind::Ident:
                        if (peek().text == "L") {
                            advance();
                            return parse_signed_literal(Sign::Lambda);
                        }
                        break;
                    case TokKind::Minus:
                        // "(- m)" is a minus literal; "(-s * e)" is a
                        // parenthesized scalar product.  Decide by the token
                        // after the rational.
                        if (peek(1).kind == TokKind::Number && peek(2).kind == TokKind::RParen) {
                            advance();
                            return parse_signed_literal(Sign::Minus);
                        }
                        if (peek(1).kind == TokKind::Minus || // "(- -m)": literal, rejected later
                            (peek(1).kind == TokKind::Number && peek(2).kind != TokKind::Star)) {
                            advance();
                            return parse_signed_literal(Sign::Minus);
                        }
                        break;
                    default:
                        break;
                }
                ExprPtr inner = parse_expr();
                expect(TokKind::RParen, {"')'"});
                return inner;
            }
            default:
                throw ParseError(tok.offset, "unexpected '" + describe(tok) + "'",
                                 {"a literal", "'('", "'neg'", "a scalar"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the expression language:
///   literals      0, (+ m), (- m), (L m) with m a positive rational
///   hyperaddition e1 + e2          (left-associative)
///   multiplication e1 * e2
///   scalar action  t * e           (t a rational, possibly negative)
///   inverse        neg(e)
/// Parentheses fix the bracketing verbatim.
inline ExprPtr parse(std::string_view src) { return detail::Parser(src).parse(); }

struct EvalResult {
    HyperSet value_set;
    std::optional<std::vector<std::pair<std::string, HyperSet>>> trace;
};

namespace detail {

inline HyperSet eval_node(const Expr& e,
                          std::vector<std::pair<std::string, HyperSet>>* trace) {
    HyperSet out;
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node)) {
        out = HyperSet::singleton(lit->value);
    } else if (const auto* add = std::get_if<Expr::HyperAdd>(&e.node)) {
        HyperSet lhs = eval_node(*add->lhs, trace);
        HyperSet rhs = eval_node(*add->rhs, trace);
        out = hyper_add_sets(lhs, rhs);
    } else if (const auto* mul_node = std::get_if<Expr::Mul>(&e.node)) {
        HyperSet lhs = eval_node(*mul_node->lhs, trace);
        HyperSet rhs = eval_node(*mul_node->rhs, trace);
        for (const Hyper& a : lhs)
            for (const Hyper& b : rhs) out.insert(mul(a, b));
    } else if (const auto* sm = std::get_if<Expr::ScalarMul>(&e.node)) {
        for (const Hyper& a : eval_node(*sm->operand, trace))
            out.insert(scalar_mul(sm->scalar, a));
    } else {
        for (const Hyper& a : eval_node(*std::get<Expr::Neg>(e.node).operand, trace))
            out.insert(neg(a));
    }
    if (trace) trace->emplace_back(pretty(e), out);
    return out;
}

} // namespace detail

/// Evaluates the tree bottom-up, respecting its bracketing verbatim.
/// With with_trace, records (subexpression, value set) in evaluation
/// (post-) order.
inline EvalResult eval(const Expr& e, bool with_trace = false) {
    EvalResult result;
    if (with_trace) {
        std::vector<std::pair<std::string, HyperSet>> trace;
        result.value_set = detail::eval_node(e, &trace);
        result.trace = std::move(trace);
    } else {
        result.value_set = detail::eval_node(e, nullptr);
    }
    return result;
}

} // namespace hypernum
