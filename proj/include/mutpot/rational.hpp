#pragma once

// Exact rational numbers.
//
// A thin value wrapper around GMP's mpq_class. The wrapper exists so that
// the rest of the library never sees GMP expression templates: every
// operation returns a canonical Rational (gcd(|num|, den) = 1, den > 0,
// zero is 0/1).

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mutpot {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpz_class& n);
    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational abs() const;
    /// Throws std::domain_error on zero.
    Rational inverse() const;
    Rational pow(std::int64_t e) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Canonical literal: "p" for integers, "p/q" otherwise.
    std::string str() const;
    std::size_t hash() const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Positive gcd of two rationals: gcd of numerators over lcm of denominators.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace mutpot

template <>
struct std::hash<mutpot::Rational> {
    std::size_t operator()(const mutpot::Rational& r) const noexcept { return r.hash(); }
};
