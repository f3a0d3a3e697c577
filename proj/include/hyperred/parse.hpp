#pragma once

// Expression parser and tower builder.
//
// Grammar (whitespace insignificant):
//   expr   := '-'? term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'x' | ident | '(' expr ')'
//           | 'exp' '(' ('int' '(' expr ')' | expr) ')'
//
// exp(...) forms are resolved structurally against the declared generators;
// generators must be declared before use.

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyperred/tower.hpp"
#include "hyperred/value.hpp"

namespace hyperred {

enum class AstType { Number, VarX, GeneratorRef, Add, Sub, Mul, Div, Pow, Neg, Exp, ExpInt };

struct AstNode {
    AstType type;
    std::size_t pos = 0;
    Rational number;                           // Number
    int generator = 0;                         // GeneratorRef: variable index
    long exponent = 0;                         // Pow
    std::vector<std::unique_ptr<AstNode>> children;
};

struct SourceExpression {
    std::string text;
    std::unique_ptr<AstNode> ast;
};

namespace detail_parse {

class Parser {
public:
    Parser(const std::string& text, const TowerSpec& spec) : text_(text), spec_(spec) {}

    std::unique_ptr<AstNode> run() {
        skip_ws();
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    const TowerSpec& spec_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    std::unique_ptr<AstNode> node(AstType t, std::size_t pos) {
        auto n = std::make_unique<AstNode>();
        n->type = t;
        n->pos = pos;
        return n;
    }

    std::unique_ptr<AstNode> expr() {
        skip_ws();
        std::size_t start = pos_;
        std::unique_ptr<AstNode> acc;
        if (accept('-')) {
            auto neg = node(AstType::Neg, start);
            neg->children.push_back(term());
            acc = std::move(neg);
        } else {
            acc = term();
        }
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('+')) {
                auto n = node(AstType::Add, at);
                n->children.push_back(std::move(acc));
                n->children.push_back(term());
                acc = std::move(n);
            } else if (accept('-')) {
                auto n = node(AstType::Sub, at);
                n->children.push_back(std::move(acc));
                n->children.push_back(term());
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    std::unique_ptr<AstNode> term() {
        auto acc = factor();
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('*')) {
                auto n = node(AstType::Mul, at);
                n->children.push_back(std::move(acc));
                n->children.push_back(factor());
                acc = std::move(n);
            } else if (accept('/')) {
                auto n = node(AstType::Div, at);
                n->children.push_back(std::move(acc));
                n->children.push_back(factor());
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    std::unique_ptr<AstNode> factor() {
        auto b = base();
        skip_ws();
        std::size_t at = pos_;
        if (accept('^')) {
            auto n = node(AstType::Pow, at);
            n->exponent = integer();
            n->children.push_back(std::move(b));
            return n;
        }
        return b;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = accept('-');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected integer exponent", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw SyntaxError("exponent too large", start);
            ++pos_;
        }
        return negative ? -v : v;
    }

    std::unique_ptr<AstNode> base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        std::size_t start = pos_;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            auto n = node(AstType::Number, start);
            n->number = rat_from_string(digits);
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            if (name == "exp") return exp_form(start);
            if (name == "int") throw SyntaxError("'int' is only valid inside exp(...)", start);
            if (name == "x") return node(AstType::VarX, start);
            for (int i = 1; i <= spec_.depth(); ++i) {
                if (spec_.gen(i).name == name) {
                    auto n = node(AstType::GeneratorRef, start);
                    n->generator = i;
                    return n;
                }
            }
            throw UnknownIdentifier(name, start);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::unique_ptr<AstNode> exp_form(std::size_t start) {
        expect('(');
        skip_ws();
        bool integral = false;
        // lookahead for "int ("
        std::size_t save = pos_;
        if (pos_ + 3 <= text_.size() && text_.compare(pos_, 3, "int") == 0) {
            std::size_t after = pos_ + 3;
            while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
            bool is_ident_tail = after < text_.size() &&
                                 (std::isalnum(static_cast<unsigned char>(text_[pos_ + 3])) || text_[pos_ + 3] == '_');
            if (!is_ident_tail && after < text_.size() && text_[after] == '(') {
                integral = true;
                pos_ = after + 1;
            } else {
                pos_ = save;
            }
        }
        auto n = node(integral ? AstType::ExpInt : AstType::Exp, start);
        n->children.push_back(expr());
        if (integral) expect(')');
        expect(')');
        return n;
    }
};

} // namespace detail_parse

inline SourceExpression parse_expression(const std::string& text, const TowerSpec& spec) {
    detail_parse::Parser p(text, spec);
    return SourceExpression{text, p.run()};
}

inline Value evaluate_ast(const AstNode& n, const TowerSpec& spec) {
    switch (n.type) {
        case AstType::Number: return Value(n.number);
        case AstType::VarX: return value_from_poly(poly_var(0));
        case AstType::GeneratorRef: return value_from_poly(poly_var(n.generator));
        case AstType::Neg: return -evaluate_ast(*n.children[0], spec);
        case AstType::Add: return evaluate_ast(*n.children[0], spec) + evaluate_ast(*n.children[1], spec);
        case AstType::Sub: return evaluate_ast(*n.children[0], spec) - evaluate_ast(*n.children[1], spec);
        case AstType::Mul: return evaluate_ast(*n.children[0], spec) * evaluate_ast(*n.children[1], spec);
        case AstType::Div: {
            Value d = evaluate_ast(*n.children[1], spec);
            if (d.is_zero()) throw EvaluationError("division by an expression that normalizes to zero");
            return evaluate_ast(*n.children[0], spec) / d;
        }
        case AstType::Pow: {
            Value b = evaluate_ast(*n.children[0], spec);
            if (b.is_zero() && n.exponent < 0) throw EvaluationError("zero raised to a negative power");
            return value_pow(b, n.exponent);
        }
        case AstType::Exp:
        case AstType::ExpInt: {
            Value r = evaluate_ast(*n.children[0], spec);
            Value sigma;
            if (n.type == AstType::Exp) {
                if (r.level() > 0) throw UnsupportedTower("exp argument is not rational in x");
                sigma = derive(r, spec);
            } else {
                sigma = r;
            }
            for (int i = 1; i <= spec.depth(); ++i)
                if (spec.gen(i).sigma == sigma) return value_from_poly(poly_var(i));
            throw UnknownIdentifier("exp(...) form does not match a declared generator", n.pos);
        }
    }
    throw InternalError("unhandled AST node");
}

inline Value parse_value(const std::string& text, const TowerSpec& spec) {
    SourceExpression e = parse_expression(text, spec);
    return evaluate_ast(*e.ast, spec);
}

// ---- tower building ---------------------------------------------------------------

// declarations like {"t1", "exp(x)"}, {"t2", "exp(int(1/(x^3-x-2)))"}
inline TowerSpec build_tower(const std::vector<std::pair<std::string, std::string>>& decls) {
    TowerSpec spec;
    for (const auto& [name, form] : decls) {
        if (name.empty() || name == "x") throw DuplicateGenerator(name.empty() ? "<empty>" : name);
        for (const auto& g : spec.generators)
            if (g.name == name) throw DuplicateGenerator(name);
        SourceExpression e = parse_expression(form, spec);
        if (e.ast->type != AstType::Exp && e.ast->type != AstType::ExpInt)
            throw UnsupportedTower("generator '" + name + "' must be declared as exp(...) or exp(int(...))");
        Value r = evaluate_ast(*e.ast->children[0], spec);
        if (r.level() > 0)
            throw UnsupportedTower("generator '" + name + "': logarithmic derivative not rational in x");
        Value sigma = e.ast->type == AstType::Exp ? derive(r, spec) : r;
        if (sigma.level() > 0)
            throw UnsupportedTower("generator '" + name + "': logarithmic derivative not rational in x");
        spec.generators.push_back(Generator{name, sigma, form, true});
    }
    spec.validate();
    return spec;
}

// "t1=exp(x); t2=exp(x^2/2)"
inline TowerSpec build_tower_from_string(const std::string& decls) {
    std::vector<std::pair<std::string, std::string>> list;
    std::size_t start = 0;
    while (start <= decls.size()) {
        std::size_t end = decls.find(';', start);
        std::string piece = decls.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t eq = piece.find('=');
        std::string name, form;
        if (eq != std::string::npos) {
            name = piece.substr(0, eq);
            form = piece.substr(eq + 1);
        }
        auto strip = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\n");
            std::size_t b = s.find_last_not_of(" \t\n");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        name = strip(name);
        form = strip(form);
        if (!name.empty()) list.emplace_back(name, form);
        else if (!strip(piece).empty())
            throw SyntaxError("malformed tower declaration '" + piece + "'", start);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return build_tower(list);
}

} // namespace hyperred
