#pragma once

// Rational functions whose denominator is a product of binomials (1+X^a)^e.
// This is the class of functions produced by mutating Laurent polynomials.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mutpot/laurent.hpp"

namespace mutpot {

/// (1 + X^direction)^exponent with direction sign-normalized.
struct BinomialFactor {
    ExponentVector direction;
    int exponent = 1;

    LaurentPoly expand() const { return LaurentPoly::one_plus(direction).pow(static_cast<std::uint64_t>(exponent)); }
    std::string str() const;
    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

class BinomialRationalFn {
public:
    using Denominators = std::map<ExponentVector, int>;

    BinomialRationalFn() = default;
    /// A Laurent polynomial viewed as a rational function.
    BinomialRationalFn(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
    /// numerator / prod (1+X^a)^e. Directions need not be sign-normalized: a
    /// negative direction is flipped and the unit X^{-a e} moves to the
    /// numerator. No cancellation is attempted; call normalized() for that.
    BinomialRationalFn(LaurentPoly numerator, const std::vector<BinomialFactor>& denominators);

    std::size_t rank() const { return numerator_.rank(); }
    const LaurentPoly& numerator() const { return numerator_; }
    const Denominators& denominators() const { return denominators_; }
    bool has_denominator() const { return !denominators_.empty(); }
    bool is_zero() const { return numerator_.is_zero(); }

    /// Product of the denominator factors as a Laurent polynomial.
    LaurentPoly denominator_poly() const;

    /// Cancels every denominator binomial that divides the numerator.
    BinomialRationalFn normalized() const;

    BinomialRationalFn operator-() const;
    friend BinomialRationalFn operator+(const BinomialRationalFn& a, const BinomialRationalFn& b);
    friend BinomialRationalFn operator-(const BinomialRationalFn& a, const BinomialRationalFn& b);
    friend BinomialRationalFn operator*(const BinomialRationalFn& a, const BinomialRationalFn& b);
    BinomialRationalFn pow(std::uint64_t n) const;
    /// Division by c * X^m * prod (1+X^a)^e.
    BinomialRationalFn divided_by(const Rational& c, const ExponentVector& m,
                                  const std::vector<BinomialFactor>& binomials) const;

    /// Equality as elements of the function field (cross-multiplied).
    friend bool operator==(const BinomialRationalFn& a, const BinomialRationalFn& b);

    /// "N" when there is no denominator, otherwise "(N)/((1+X^a)^e*...)".
    std::string str() const;

private:
    void add_denominator(const ExponentVector& a, int e);

    LaurentPoly numerator_;
    Denominators denominators_;
};

BinomialRationalFn rf_normalize(const BinomialRationalFn& f);

/// Either the Laurent polynomial equal to F, or a denominator factor that
/// survives normalization.
struct LaurentCheck {
    std::optional<LaurentPoly> laurent;
    std::optional<BinomialFactor> witness;

    bool is_laurent() const { return laurent.has_value(); }
};

LaurentCheck rf_as_laurent(const BinomialRationalFn& f);

/// Substitutes x_i -> images[i] (and x_i^-1 -> inverse_images[i]) into W.
BinomialRationalFn substitute(const LaurentPoly& w, const std::vector<BinomialRationalFn>& images,
                              const std::vector<BinomialRationalFn>& inverse_images);

/// Throws std::domain_error when a coordinate is zero or a denominator factor vanishes.
Rational evaluate(const BinomialRationalFn& f, std::span<const Rational> point);

}  // namespace mutpot
