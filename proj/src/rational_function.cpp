#include "mutpot/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace mutpot {

std::string BinomialFactor::str() const {
    std::string s = "(1+" + render_monomial(direction) + ")";
    if (exponent != 1) s += "^" + std::to_string(exponent);
    return s;
}

BinomialRationalFn::BinomialRationalFn(LaurentPoly numerator) : numerator_(std::move(numerator)) {}

BinomialRationalFn::BinomialRationalFn(LaurentPoly numerator, const std::vector<BinomialFactor>& denominators)
    : numerator_(std::move(numerator)) {
    for (const auto& f : denominators) add_denominator(f.direction, f.exponent);
}

void BinomialRationalFn::add_denominator(const ExponentVector& a, int e) {
    require_same_rank(a.rank(), rank());
    if (a.is_zero()) throw std::invalid_argument("binomial factor with zero direction");
    if (e < 0) throw std::invalid_argument("negative binomial exponent");
    if (e == 0) return;
    ExponentVector dir = sign_normalized(a);
    if (dir != a) {
        // 1/(1+X^a)^e = X^{-a e} / (1+X^{-a})^e
        numerator_ = numerator_.shifted(static_cast<Coord>(-e) * a);
    }
    denominators_[dir] += e;
}

LaurentPoly BinomialRationalFn::denominator_poly() const {
    LaurentPoly d = LaurentPoly::constant(rank(), Rational(1));
    for (const auto& [dir, e] : denominators_) d *= BinomialFactor{dir, e}.expand();
    return d;
}

BinomialRationalFn BinomialRationalFn::normalized() const {
    BinomialRationalFn out;
    out.numerator_ = numerator_;
    if (numerator_.is_zero()) return out;
    for (const auto& [dir, e] : denominators_) {
        int left = e;
        while (left > 0) {
            auto div = binomial_divide(out.numerator_, dir, 1);
            if (!div.divisible()) break;
            out.numerator_ = std::move(*div.quotient);
            --left;
        }
        if (left > 0) out.denominators_[dir] = left;
    }
    return out;
}

BinomialRationalFn BinomialRationalFn::operator-() const {
    BinomialRationalFn r(*this);
    r.numerator_ = -r.numerator_;
    return r;
}

namespace {

// Multiplies `num` by the factors of `target` that are missing from `have`.
LaurentPoly lift(const LaurentPoly& num, const BinomialRationalFn::Denominators& have,
                 const BinomialRationalFn::Denominators& target) {
    LaurentPoly out = num;
    for (const auto& [dir, e] : target) {
        auto it = have.find(dir);
        int missing = e - (it == have.end() ? 0 : it->second);
        if (missing > 0) out *= BinomialFactor{dir, missing}.expand();
    }
    return out;
}

BinomialRationalFn::Denominators merged_max(const BinomialRationalFn::Denominators& a,
                                            const BinomialRationalFn::Denominators& b) {
    auto out = a;
    for (const auto& [dir, e] : b) out[dir] = std::max(out[dir], e);
    return out;
}

std::vector<BinomialFactor> as_factors(const BinomialRationalFn::Denominators& d) {
    std::vector<BinomialFactor> out;
    for (const auto& [dir, e] : d) out.push_back({dir, e});
    return out;
}

}  // namespace

BinomialRationalFn operator+(const BinomialRationalFn& a, const BinomialRationalFn& b) {
    require_same_rank(a.rank(), b.rank());
    auto common = merged_max(a.denominators_, b.denominators_);
    LaurentPoly num = lift(a.numerator_, a.denominators_, common) + lift(b.numerator_, b.denominators_, common);
    return BinomialRationalFn(std::move(num), as_factors(common)).normalized();
}

BinomialRationalFn operator-(const BinomialRationalFn& a, const BinomialRationalFn& b) { return a + (-b); }

BinomialRationalFn operator*(const BinomialRationalFn& a, const BinomialRationalFn& b) {
    require_same_rank(a.rank(), b.rank());
    BinomialRationalFn out(a.numerator_ * b.numerator_);
    out.denominators_ = a.denominators_;
    for (const auto& [dir, e] : b.denominators_) out.denominators_[dir] += e;
    return out.normalized();
}

BinomialRationalFn BinomialRationalFn::pow(std::uint64_t n) const {
    BinomialRationalFn out(numerator_.pow(n));
    for (const auto& [dir, e] : denominators_) out.denominators_[dir] = e * static_cast<int>(n);
    if (n == 0) out.denominators_.clear();
    return out.normalized();
}

BinomialRationalFn BinomialRationalFn::divided_by(const Rational& c, const ExponentVector& m,
                                                  const std::vector<BinomialFactor>& binomials) const {
    if (c.is_zero()) throw std::domain_error("division by zero");
    BinomialRationalFn out(*this);
    out.numerator_ = out.numerator_.shifted(-m).scaled(c.inverse());
    for (const auto& f : binomials) out.add_denominator(f.direction, f.exponent);
    return out.normalized();
}

bool operator==(const BinomialRationalFn& a, const BinomialRationalFn& b) {
    if (a.rank() != b.rank()) return false;
    if (a.denominators_ == b.denominators_) return a.numerator_ == b.numerator_;
    // N_a * (D_b / g) == N_b * (D_a / g) with g the common factors.
    auto common = merged_max(a.denominators_, b.denominators_);
    return lift(a.numerator_, a.denominators_, common) == lift(b.numerator_, b.denominators_, common);
}

std::string BinomialRationalFn::str() const {
    if (denominators_.empty()) return numerator_.str();
    std::string den;
    for (const auto& [dir, e] : denominators_) {
        if (!den.empty()) den += '*';
        den += BinomialFactor{dir, e}.str();
    }
    std::string num = numerator_.str();
    if (numerator_.size() > 1) num = "(" + num + ")";
    if (denominators_.size() > 1 || denominators_.begin()->second != 1) den = "(" + den + ")";
    return num + "/" + den;
}

BinomialRationalFn rf_normalize(const BinomialRationalFn& f) { return f.normalized(); }

LaurentCheck rf_as_laurent(const BinomialRationalFn& f) {
    BinomialRationalFn n = f.normalized();
    LaurentCheck out;
    if (!n.has_denominator()) {
        out.laurent = n.numerator();
    } else {
        const auto& [dir, e] = *n.denominators().begin();
        out.witness = BinomialFactor{dir, e};
    }
    return out;
}

BinomialRationalFn substitute(const LaurentPoly& w, const std::vector<BinomialRationalFn>& images,
                              const std::vector<BinomialRationalFn>& inverse_images) {
    if (images.size() != w.rank() || inverse_images.size() != w.rank()) {
        throw std::invalid_argument("substitute: one image per variable is required");
    }
    const std::size_t target_rank = images.empty() ? 0 : images.front().rank();
    BinomialRationalFn total{LaurentPoly(target_rank)};
    for (const auto& [m, c] : w.terms()) {
        BinomialRationalFn term(LaurentPoly::constant(target_rank, c));
        for (std::size_t i = 0; i < m.rank(); ++i) {
            if (m[i] > 0) term = term * images[i].pow(static_cast<std::uint64_t>(m[i]));
            if (m[i] < 0) term = term * inverse_images[i].pow(static_cast<std::uint64_t>(-m[i]));
        }
        total = total + term;
    }
    return total;
}

Rational evaluate(const BinomialRationalFn& f, std::span<const Rational> point) {
    Rational den(1);
    for (const auto& [dir, e] : f.denominators()) {
        Rational v = evaluate(LaurentPoly::one_plus(dir), point);
        if (v.is_zero()) throw std::domain_error("evaluate: denominator (1+" + render_monomial(dir) + ") vanishes");
        den *= v.pow(e);
    }
    return evaluate(f.numerator(), point) / den;
}

}  // namespace mutpot
