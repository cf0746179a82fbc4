/*
   Copyright 2026 The atinf Authors

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

#ifndef ATINF_PARSE_HPP
#define ATINF_PARSE_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"

namespace atinf {

struct ParseOptions {
    std::size_t max_depth = 64;  ///< parenthesis nesting
    int max_degree = 1000;       ///< bound on the degree of any subexpression
};

/// Syntax tree of a polynomial expression.
struct PolyExpr {
    enum class Kind { Literal, VarX, VarY, Neg, Add, Sub, Mul, Pow };
    Kind kind = Kind::Literal;
    Rational value;        ///< Literal
    unsigned exponent = 0;  ///< Pow
    std::size_t offset = 0;
    std::vector<std::unique_ptr<PolyExpr>> children;
};

namespace detail {

class Parser {
   public:
    Parser(std::string_view text, const ParseOptions& opt) : s_(text), opt_(opt) {}

    std::unique_ptr<PolyExpr> run() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty expression");
        auto e = expr();
        skip();
        if (pos_ < s_.size()) {
            if (s_[pos_] == ')') throw SyntaxError(pos_, "unbalanced ')'");
            throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        }
        return e;
    }

   private:
    std::string_view s_;
    const ParseOptions& opt_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    static std::unique_ptr<PolyExpr> node(PolyExpr::Kind k, std::size_t off) {
        auto n = std::make_unique<PolyExpr>();
        n->kind = k;
        n->offset = off;
        return n;
    }
    static std::unique_ptr<PolyExpr> binary(PolyExpr::Kind k, std::size_t off, std::unique_ptr<PolyExpr> a,
                                            std::unique_ptr<PolyExpr> b) {
        auto n = node(k, off);
        n->children.push_back(std::move(a));
        n->children.push_back(std::move(b));
        return n;
    }

    std::unique_ptr<PolyExpr> expr() {
        auto lhs = term();
        while (true) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return lhs;
            std::size_t off = pos_;
            auto k = s_[pos_] == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub;
            ++pos_;
            lhs = binary(k, off, std::move(lhs), term());
        }
    }

    std::unique_ptr<PolyExpr> term() {
        auto lhs = factor();
        while (peek('*')) {
            std::size_t off = pos_++;
            lhs = binary(PolyExpr::Kind::Mul, off, std::move(lhs), factor());
        }
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x' || s_[pos_] == 'y' ||
                                 std::isdigit(static_cast<unsigned char>(s_[pos_]))))
            throw SyntaxError(pos_, "missing '*' between factors");
        return lhs;
    }

    std::unique_ptr<PolyExpr> factor() {
        std::vector<std::size_t> negs;
        while (peek('-')) negs.push_back(pos_++);
        auto base = atom();
        if (peek('^')) {
            // right-associative chain of literal exponents
            std::vector<std::pair<std::size_t, unsigned long>> exps;
            while (peek('^')) {
                std::size_t off = pos_++;
                skip();
                std::size_t at = pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ExponentNotInteger(at);
                mpz_class e = uint_literal();
                skip();
                if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.')) throw ExponentNotInteger(at);
                if (e > opt_.max_degree) throw SyntaxError(at, "exponent exceeds the degree limit");
                exps.emplace_back(off, e.get_ui());
            }
            unsigned long e = exps.back().second;
            for (std::size_t i = exps.size() - 1; i-- > 0;) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), exps[i].second, e);
                if (p > opt_.max_degree) throw SyntaxError(exps[i].first, "exponent exceeds the degree limit");
                e = p.get_ui();
            }
            auto n = node(PolyExpr::Kind::Pow, exps.front().first);
            n->exponent = static_cast<unsigned>(e);
            n->children.push_back(std::move(base));
            base = std::move(n);
        }
        for (auto it = negs.rbegin(); it != negs.rend(); ++it) {
            auto n = node(PolyExpr::Kind::Neg, *it);
            n->children.push_back(std::move(base));
            base = std::move(n);
        }
        return base;
    }

    mpz_class uint_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    std::unique_ptr<PolyExpr> atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        std::size_t off = pos_;
        char c = s_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                throw SyntaxError(pos_, "unknown identifier");
            return node(c == 'x' ? PolyExpr::Kind::VarX : PolyExpr::Kind::VarY, off);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = uint_literal();
            mpz_class den = 1;
            if (pos_ < s_.size() && s_[pos_] == '.') throw SyntaxError(pos_, "decimal literals are not supported");
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw SyntaxError(pos_, "expected a denominator");
                std::size_t at = pos_;
                den = uint_literal();
                if (den == 0) throw SyntaxError(at, "zero denominator");
            } else {
                pos_ = save;
            }
            auto n = node(PolyExpr::Kind::Literal, off);
            n->value = Rational(num, den);
            return n;
        }
        if (c == '(') {
            if (++depth_ > opt_.max_depth) throw DepthExceeded(off, opt_.max_depth);
            ++pos_;
            auto e = expr();
            if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
            ++pos_;
            --depth_;
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(off, "unknown identifier");
        throw SyntaxError(off, std::string("unexpected '") + c + "'");
    }
};

inline BiPoly<Rational> expand(const PolyExpr& e, int max_degree) {
    using K = PolyExpr::Kind;
    auto check = [&](const BiPoly<Rational>& p) {
        if (p.total_degree() > max_degree) throw SyntaxError(e.offset, "polynomial degree exceeds the limit");
        return p;
    };
    switch (e.kind) {
        case K::Literal: return BiPoly<Rational>(e.value);
        case K::VarX: return BiPoly<Rational>::var(0);
        case K::VarY: return BiPoly<Rational>::var(1);
        case K::Neg: return -expand(*e.children[0], max_degree);
        case K::Add: return expand(*e.children[0], max_degree) + expand(*e.children[1], max_degree);
        case K::Sub: return expand(*e.children[0], max_degree) - expand(*e.children[1], max_degree);
        case K::Mul: {
            auto a = expand(*e.children[0], max_degree);
            auto b = expand(*e.children[1], max_degree);
            if (a.total_degree() + b.total_degree() > max_degree) throw SyntaxError(e.offset, "polynomial degree exceeds the limit");
            return a * b;
        }
        case K::Pow: {
            auto b = expand(*e.children[0], max_degree);
            if (static_cast<long>(b.total_degree()) * e.exponent > max_degree)
                throw SyntaxError(e.offset, "polynomial degree exceeds the limit");
            return check(b.pow(static_cast<int>(e.exponent)));
        }
    }
    return {};
}

}  // namespace detail

/// Parses the text into a syntax tree.
inline std::unique_ptr<PolyExpr> parse_expr(std::string_view text, const ParseOptions& opt = {}) {
    return detail::Parser(text, opt).run();
}

/// Parses and expands a polynomial in x and y with rational coefficients.
inline BiPoly<Rational> parse_poly(std::string_view text, const ParseOptions& opt = {}) {
    auto e = parse_expr(text, opt);
    return detail::expand(*e, opt.max_degree);
}

/// Canonical text: graded order with x before y, e.g. "x*y^2 - y", "5/6*x".
inline std::string format_poly(const BiPoly<Rational>& p) { return p.to_string({"x", "y"}); }

}  // namespace atinf

#endif
