/*
   Copyright 2026 The psi-umbral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PSI_UMBRAL_EXPR_PARSER_HPP
#define PSI_UMBRAL_EXPR_PARSER_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operators.hpp"
#include "psi_spec.hpp"

// Operator expressions:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' natural)*
//   atom  := name ['[' rational ']'] | rational | '(' expr ')'
// with names D X Q[q] D0 Dq[q] Dpsi Xpsi Nhat Delta E[y]. A rational literal
// p/q is one token and denotes that multiple of the identity; * is
// composition.

namespace psi {

struct Expr {
    enum class Kind { atom, number, neg, add, sub, mul, pow };

    Kind kind = Kind::number;
    std::string name;           // atom
    std::optional<Rational> arg; // atom bracket argument
    Rational value;             // number
    unsigned exponent = 0;      // pow
    std::size_t column = 0;
    std::vector<Expr> kids;
};

namespace detail {

struct Token {
    enum class Type { name, number, plus, minus, star, caret, lparen, rparen, lbracket, rbracket, end };
    Type type;
    std::string text;
    std::size_t column;
};

[[noreturn]] inline void syntax_error(std::size_t column, const std::string& what) {
    throw Error(ErrorCode::parse, "column " + std::to_string(column) + ": " + what);
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };
    while (i < src.size()) {
        const char c = src[i];
        const std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Type::name, std::string(src.substr(i, j - i)), col});
            i = j;
        } else if (digit(i)) {
            std::size_t j = i;
            while (digit(j)) ++j;
            if (j < src.size() && src[j] == '/') {
                if (!digit(j + 1)) syntax_error(j + 2, "malformed rational: expected digits after '/'");
                ++j;
                while (digit(j)) ++j;
            }
            out.push_back({Token::Type::number, std::string(src.substr(i, j - i)), col});
            i = j;
        } else {
            Token::Type t{};
            switch (c) {
                case '+': t = Token::Type::plus; break;
                case '-': t = Token::Type::minus; break;
                case '*': t = Token::Type::star; break;
                case '^': t = Token::Type::caret; break;
                case '(': t = Token::Type::lparen; break;
                case ')': t = Token::Type::rparen; break;
                case '[': t = Token::Type::lbracket; break;
                case ']': t = Token::Type::rbracket; break;
                default: {
                    const auto u = static_cast<unsigned char>(c);
                    syntax_error(col, u < 0x20 || u >= 0x7f ? "unexpected byte " + std::to_string(u)
                                                            : std::string("unexpected character '") + c + "'");
                }
            }
            out.push_back({t, std::string(1, c), col});
            ++i;
        }
    }
    out.push_back({Token::Type::end, "", src.size() + 1});
    return out;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : toks_(tokenize(src)) {}

    Expr parse() {
        Expr e = expr();
        if (peek().type != Token::Type::end) syntax_error(peek().column, "unexpected '" + peek().text + "'");
        return e;
    }

private:
    static constexpr int max_depth = 256;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Token::Type t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Type t, const char* what) {
        if (!accept(t)) syntax_error(peek().column, std::string("expected ") + what);
    }

    struct Depth {
        explicit Depth(int& d) : d_(d) {
            if (++d_ > max_depth) throw Error(ErrorCode::parse, "expression nested too deeply");
        }
        ~Depth() { --d_; }
        int& d_;
    };

    static Expr binary(Expr::Kind k, Expr a, Expr b, std::size_t column) {
        Expr e;
        e.kind = k;
        e.column = column;
        e.kids.push_back(std::move(a));
        e.kids.push_back(std::move(b));
        return e;
    }

    Expr expr() {
        Depth guard(depth_);
        Expr lhs = term();
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            const Token& op = next();
            lhs = binary(op.type == Token::Type::plus ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), term(), op.column);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peek().type == Token::Type::star) {
            const std::size_t col = next().column;
            lhs = binary(Expr::Kind::mul, std::move(lhs), unary(), col);
        }
        return lhs;
    }

    Expr unary() {
        Depth guard(depth_);
        if (peek().type == Token::Type::minus) {
            Expr e;
            e.kind = Expr::Kind::neg;
            e.column = next().column;
            e.kids.push_back(unary());
            return e;
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        while (peek().type == Token::Type::caret) {
            const std::size_t col = next().column;
            const Token& n = peek();
            if (n.type != Token::Type::number || n.text.find('/') != std::string::npos || n.text.size() > 6)
                syntax_error(n.column, "expected an exponent between 0 and 999999");
            next();
            Expr e;
            e.kind = Expr::Kind::pow;
            e.column = col;
            e.exponent = static_cast<unsigned>(std::stoul(n.text));
            e.kids.push_back(std::move(base));
            base = std::move(e);
        }
        return base;
    }

    Rational number(const Token& t) {
        try {
            return Rational::parse(t.text);
        } catch (const Error&) {
            syntax_error(t.column, "malformed rational '" + t.text + "'");
        }
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::number: {
                next();
                Expr e;
                e.kind = Expr::Kind::number;
                e.value = number(t);
                e.column = t.column;
                return e;
            }
            case Token::Type::lparen: {
                next();
                Expr e = expr();
                expect(Token::Type::rparen, "')'");
                return e;
            }
            case Token::Type::name: return named();
            case Token::Type::end: syntax_error(t.column, "unexpected end of expression");
            default: syntax_error(t.column, "unexpected '" + t.text + "'");
        }
    }

    Expr named() {
        const Token& t = next();
        static const std::vector<std::string> plain{"D", "X", "D0", "Dpsi", "Xpsi", "Nhat", "Delta"};
        static const std::vector<std::string> with_arg{"Q", "Dq", "E"};
        const bool is_plain = std::find(plain.begin(), plain.end(), t.text) != plain.end();
        const bool takes_arg = std::find(with_arg.begin(), with_arg.end(), t.text) != with_arg.end();
        if (!is_plain && !takes_arg) syntax_error(t.column, "unknown operator '" + t.text + "'");
        Expr e;
        e.kind = Expr::Kind::atom;
        e.name = t.text;
        e.column = t.column;
        if (peek().type == Token::Type::lbracket) {
            if (!takes_arg) syntax_error(peek().column, t.text + " takes no argument");
            next();
            const bool negative = accept(Token::Type::minus);
            const Token& n = peek();
            if (n.type != Token::Type::number) syntax_error(n.column, "expected a rational argument");
            next();
            e.arg = negative ? -number(n) : number(n);
            expect(Token::Type::rbracket, "']'");
        } else if (takes_arg) {
            syntax_error(peek().column, t.text + " needs an argument, as in " + t.text + "[1/2]");
        }
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

/// Upper bound on how far the expression can raise degrees.
inline std::size_t raise_budget(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::atom: return e.name == "X" || e.name == "Xpsi" ? 1 : 0;
        case Expr::Kind::number: return 0;
        case Expr::Kind::neg: return raise_budget(e.kids[0]);
        case Expr::Kind::add:
        case Expr::Kind::sub: return std::max(raise_budget(e.kids[0]), raise_budget(e.kids[1]));
        case Expr::Kind::mul: return raise_budget(e.kids[0]) + raise_budget(e.kids[1]);
        case Expr::Kind::pow: return std::min<std::size_t>(e.exponent * raise_budget(e.kids[0]), 1u << 20);
    }
    return 0;
}

/// Largest product of nested exponents; bounds coefficient growth.
inline std::size_t power_depth(const Expr& e) {
    std::size_t inner = 1;
    for (const auto& k : e.kids) inner = std::max(inner, power_depth(k));
    if (e.kind != Expr::Kind::pow) return inner;
    return std::min<std::size_t>(inner * std::max(e.exponent, 1u), std::size_t{1} << 40);
}

} // namespace detail

struct ExprContext {
    PsiSpec psi;
    std::size_t cap = 16;
};

inline Expr parse_expr(std::string_view src) {
    constexpr std::size_t max_length = 4096;
    if (src.size() > max_length)
        throw Error(ErrorCode::parse, "expression longer than " + std::to_string(max_length) + " characters");
    return detail::ExprParser(src).parse();
}

namespace detail {

inline GradedOperator evaluate_at(const Expr& e, const PsiSequence& psi, std::size_t cap) {
    switch (e.kind) {
        case Expr::Kind::number: return GradedOperator::identity(cap) * e.value;
        case Expr::Kind::neg: return -evaluate_at(e.kids[0], psi, cap);
        case Expr::Kind::add: return evaluate_at(e.kids[0], psi, cap) + evaluate_at(e.kids[1], psi, cap);
        case Expr::Kind::sub: return evaluate_at(e.kids[0], psi, cap) - evaluate_at(e.kids[1], psi, cap);
        case Expr::Kind::mul: return op_compose(evaluate_at(e.kids[0], psi, cap), evaluate_at(e.kids[1], psi, cap));
        case Expr::Kind::pow: {
            GradedOperator base = evaluate_at(e.kids[0], psi, cap);
            GradedOperator acc = GradedOperator::identity(cap);
            for (unsigned k = e.exponent; k > 0; k >>= 1) {
                if (k & 1u) acc = op_compose(base, acc);
                if (k > 1) base = op_compose(base, base);
            }
            return acc;
        }
        case Expr::Kind::atom: break;
    }
    const std::string& n = e.name;
    if (n == "D") return build_D(cap);
    if (n == "X") return build_X(cap);
    if (n == "D0") return build_D0(cap);
    if (n == "Q") return build_dilation(*e.arg, cap);
    if (n == "Dq") return build_Dq(*e.arg, cap);
    if (n == "Dpsi") return build_Dpsi(psi, cap);
    if (n == "Xpsi") return build_Xpsi(psi, cap);
    if (n == "Nhat") return build_Nhat(psi, cap);
    if (n == "Delta") return build_Delta(psi, cap);
    if (n == "E") return build_shift(psi, *e.arg, cap);
    throw Error(ErrorCode::parse, "unknown operator '" + n + "'");
}

} // namespace detail

/// Evaluates a parsed expression on x^0 .. x^cap. Atoms are built with enough
/// headroom that raising factors do not shrink the result below the cap.
inline GradedOperator evaluate(const Expr& e, const ExprContext& ctx) {
    constexpr std::size_t max_raise = 256;
    const std::size_t raise = detail::raise_budget(e);
    if (raise > max_raise)
        throw Error(ErrorCode::validation, "expression raises degree by up to " + std::to_string(raise) +
                                               ", more than the supported " + std::to_string(max_raise));
    constexpr std::size_t max_power = 1u << 16;
    if (detail::power_depth(e) > max_power)
        throw Error(ErrorCode::validation, "nested exponents multiply past " + std::to_string(max_power));
    const std::size_t build_cap = ctx.cap + raise;
    const PsiSequence psi = ctx.psi.materialize(std::min(build_cap + 1, ctx.psi.max_cap()));
    GradedOperator t = detail::evaluate_at(e, psi, build_cap);
    if (t.effective_cap() < ctx.cap)
        throw Error(ErrorCode::cap_exhausted, "expression is known only up to x^" + std::to_string(t.effective_cap()) +
                                                  " (psi " + ctx.psi.name() + " too short for cap " +
                                                  std::to_string(ctx.cap) + ")");
    return t.restricted(ctx.cap);
}

inline GradedOperator parse_operator_expr(std::string_view src, const ExprContext& ctx) {
    return evaluate(parse_expr(src), ctx);
}

} // namespace psi

#endif // PSI_UMBRAL_EXPR_PARSER_HPP
