#include "mutpot/expression.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace mutpot {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// c * X^m * prod (1+X^a)^e, e of either sign.
struct Factored {
    Rational c;
    ExponentVector m;
    std::map<ExponentVector, int> binomials;
};

struct Value {
    BinomialRationalFn f;
    std::optional<Factored> factored;
};

// Reads a factorization off a normalized function whose numerator is a
// monomial or c X^p (1 + X^q).
std::optional<Factored> recognize(const BinomialRationalFn& f) {
    const LaurentPoly& n = f.numerator();
    Factored out{Rational(1), ExponentVector(f.rank()), {}};
    if (n.size() == 1) {
        out.c = n.terms().begin()->second;
        out.m = n.terms().begin()->first;
    } else if (n.size() == 2) {
        auto lo = n.terms().begin();
        auto hi = std::next(lo);
        if (lo->second != hi->second) return std::nullopt;
        out.c = lo->second;
        out.m = lo->first;
        out.binomials[hi->first - lo->first] = 1;
    } else {
        return std::nullopt;
    }
    for (const auto& [dir, e] : f.denominators()) out.binomials[dir] -= e;
    return out;
}

Factored multiply(Factored a, const Factored& b) {
    a.c *= b.c;
    a.m += b.m;
    for (const auto& [dir, e] : b.binomials) a.binomials[dir] += e;
    return a;
}

Factored power(const Factored& a, std::int64_t n) {
    Factored out{a.c.pow(n), n * a.m, {}};
    for (const auto& [dir, e] : a.binomials) out.binomials[dir] = static_cast<int>(e * n);
    return out;
}

// 1 / (c X^m prod (1+X^a)^e) as a binomial rational function.
BinomialRationalFn reciprocal(const Factored& d, std::size_t rank) {
    LaurentPoly num = LaurentPoly::monomial(-d.m, d.c.inverse());
    std::vector<BinomialFactor> den;
    for (const auto& [dir, e] : d.binomials) {
        if (e > 0) den.push_back({dir, e});
        if (e < 0) num *= LaurentPoly::one_plus(dir).pow(static_cast<std::uint64_t>(-e));
    }
    require_same_rank(num.rank(), rank);
    return BinomialRationalFn(std::move(num), den);
}

class Parser {
public:
    Parser(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {}

    BinomialRationalFn run() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Value v = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return v.f.normalized();
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Value expr() {
        Value acc = term();
        for (;;) {
            if (accept('+')) {
                acc = combine(acc, term(), false);
            } else if (accept('-')) {
                acc = combine(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    static Value combine(const Value& a, const Value& b, bool subtract) {
        BinomialRationalFn f = subtract ? a.f - b.f : a.f + b.f;
        auto fac = recognize(f);
        return {std::move(f), std::move(fac)};
    }

    Value term() {
        Value acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                Value b = unary();
                BinomialRationalFn f = acc.f * b.f;
                std::optional<Factored> fac;
                if (acc.factored && b.factored) fac = multiply(*acc.factored, *b.factored);
                else fac = recognize(f);
                acc = {std::move(f), std::move(fac)};
            } else if (peek() == '/') {
                ++pos_;
                skip_space();
                const std::size_t at = pos_;
                Value b = unary();
                acc = divide(acc, b, at);
            } else {
                return acc;
            }
        }
    }

    Value divide(const Value& a, const Value& b, std::size_t at) const {
        if (b.f.is_zero()) throw ParseError("division by zero", at);
        if (!b.factored) {
            throw ParseError("unsupported denominator " + b.f.str() +
                                 ": only monomials and binomials (1+monomial)^e may divide",
                             at);
        }
        BinomialRationalFn f = a.f * reciprocal(*b.factored, rank_);
        std::optional<Factored> fac;
        if (a.factored) fac = multiply(*a.factored, power(*b.factored, -1));
        else fac = recognize(f);
        return {std::move(f), std::move(fac)};
    }

    Value unary() {
        if (accept('-')) {
            Value v = unary();
            v.f = -v.f;
            if (v.factored) v.factored->c = -v.factored->c;
            return v;
        }
        if (accept('+')) return unary();
        return power_expr();
    }

    Value power_expr() {
        Value base = primary();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        bool negative = false;
        bool paren = accept('(');
        if (accept('-')) negative = true;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", pos_);
        std::int64_t n = integer_literal();
        if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
        if (n > 10000) throw ParseError("exponent too large", at);
        if (!negative) {
            BinomialRationalFn f = base.f.pow(static_cast<std::uint64_t>(n));
            std::optional<Factored> fac;
            if (base.factored) fac = power(*base.factored, n);
            else fac = recognize(f);
            return {std::move(f), std::move(fac)};
        }
        Value one{BinomialRationalFn(LaurentPoly::constant(rank_, Rational(1))),
                  Factored{Rational(1), ExponentVector(rank_), {}}};
        Value p{base.f.pow(static_cast<std::uint64_t>(n)), base.factored ? std::optional(power(*base.factored, n))
                                                                          : std::nullopt};
        if (!p.factored) p.factored = recognize(p.f);
        return divide(one, p, at);
    }

    std::int64_t integer_literal() {
        const std::size_t start = pos_;
        std::int64_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (n > (INT64_MAX - 9) / 10) throw ParseError("integer literal too large", start);
            n = n * 10 + (text_[pos_++] - '0');
        }
        return n;
    }

    Value primary() {
        skip_space();
        const std::size_t at = pos_;
        if (accept('(')) {
            Value v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            Rational r = Rational::parse(text_.substr(at, pos_ - at));
            Factored fac{r, ExponentVector(rank_), {}};
            return {BinomialRationalFn(LaurentPoly::constant(rank_, r)), fac};
        }
        if (c == 'x') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
            const std::int64_t i = integer_literal();
            if (i < 1 || static_cast<std::size_t>(i) > rank_) {
                throw ParseError("variable x" + std::to_string(i) + " out of range for rank " + std::to_string(rank_),
                                 at);
            }
            ExponentVector m = ExponentVector::unit(rank_, static_cast<std::size_t>(i - 1));
            return {BinomialRationalFn(LaurentPoly::monomial(m)), Factored{Rational(1), m, {}}};
        }
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t rank_;
    std::size_t pos_ = 0;
};

}  // namespace

BinomialRationalFn parse_function(std::string_view text, std::size_t rank) {
    if (rank == 0) throw std::invalid_argument("rank must be positive");
    return Parser(text, rank).run();
}

Expression parse_expression(std::string_view text, std::size_t rank) {
    BinomialRationalFn f = parse_function(text, rank);
    LaurentCheck lc = rf_as_laurent(f);
    if (lc.is_laurent()) return std::move(*lc.laurent);
    return f;
}

}  // namespace mutpot
