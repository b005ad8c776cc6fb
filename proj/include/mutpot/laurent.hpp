#pragma once

// Sparse Laurent polynomials with rational coefficients, Q[L*].

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mutpot/int_vector.hpp"
#include "mutpot/rational.hpp"

namespace mutpot {

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    LaurentPoly() = default;
    /// The zero polynomial in `rank` variables.
    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

    static LaurentPoly constant(std::size_t rank, const Rational& c);
    static LaurentPoly monomial(const ExponentVector& m, const Rational& c = Rational(1));
    /// x_{i+1}, zero-based index.
    static LaurentPoly variable(std::size_t rank, std::size_t i);
    /// 1 + X^a
    static LaurentPoly one_plus(const ExponentVector& a);
    static LaurentPoly from_terms(std::size_t rank, const std::vector<std::pair<ExponentVector, Rational>>& terms);

    std::size_t rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coefficient(const ExponentVector& m) const;

    /// Adds c*X^m, dropping the term if it cancels.
    void add_term(const ExponentVector& m, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const;
    /// Multiplication by the monomial X^m.
    LaurentPoly shifted(const ExponentVector& m) const;
    LaurentPoly pow(std::uint64_t n) const;

    /// Componentwise minimum / maximum exponent; the polynomial must be nonzero.
    ExponentVector min_exponents() const;
    ExponentVector max_exponents() const;

    bool has_integer_coefficients() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Canonical rendering, terms in descending lexicographic exponent order,
    /// e.g. "x1^2*x2^-1 - 3/4*x1 + 1". Parseable by parse_expression.
    std::string str() const;

private:
    std::size_t rank_ = 0;
    TermMap terms_;
};

/// Renders c*X^m as a single term without sign handling of the first term.
std::string render_monomial(const ExponentVector& m);

enum class ArithOp { add, sub, mul };

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);
LaurentPoly lp_pow(const LaurentPoly& a, std::uint64_t n);

/// Splits W by level l = (m, u): W = sum_l piece_l, pieces nonzero.
std::map<Coord, LaurentPoly> grade_by(const LaurentPoly& w, const LatticeVector& u);

/// Outcome of dividing W by (1 + X^a)^e in the Laurent ring.
struct BinomialDivision {
    /// Set iff (1+X^a)^e divides W; then W = quotient * (1+X^a)^e exactly.
    std::optional<LaurentPoly> quotient;
    /// When not divisible: the nonzero remainder R of the first failing step,
    /// W_t = Q*(1+X^a) + R where W_t is W with `factors_divided` copies removed.
    LaurentPoly remainder;
    int factors_divided = 0;

    bool divisible() const { return quotient.has_value(); }
};

/// Throws std::invalid_argument when a = 0 or e < 1.
BinomialDivision binomial_divide(const LaurentPoly& w, const ExponentVector& a, int e);

/// (1+X^a) and (1+X^-a) differ by a unit, so the verdict ignores the sign of a.
bool is_divisible_up_to_unit(const LaurentPoly& w, const ExponentVector& a, int e);

/// Pullback along a monomial map: X^m -> X^{M m}. Throws std::domain_error on singular M.
LaurentPoly monomial_substitution(const LaurentPoly& w, const IntMatrix& m);

/// Gauss content: positive gcd of the coefficients. Throws std::domain_error on zero.
Rational content(const LaurentPoly& w);

/// Exact value at a point with nonzero rational coordinates.
Rational evaluate(const LaurentPoly& w, std::span<const Rational> point);

/// Exact division by an arbitrary nonzero Laurent polynomial, if it divides.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& w, const LaurentPoly& divisor);

}  // namespace mutpot
