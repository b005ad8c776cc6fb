#include "mutpot/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace mutpot {

namespace {

mpz_class to_mpz(std::int64_t v) {
    // mpz_class has no int64 constructor on every platform; go through a string
    // only when the value does not fit in a long.
    if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX)) {
        return mpz_class(static_cast<long>(v));
    }
    return mpz_class(std::to_string(v));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(to_mpz(num), to_mpz(den));
    value_.canonicalize();
}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const { return value_.get_str(); }

std::size_t Rational::hash() const { return std::hash<std::string>{}(str()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_gcd(const Rational& a, const Rational& b) {
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
    return Rational(mpq_class(num, den));
}

}  // namespace mutpot
