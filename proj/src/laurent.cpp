#include "mutpot/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "mutpot/lattice.hpp"

namespace mutpot {

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rational& c) {
    LaurentPoly p(rank);
    p.add_term(ExponentVector(rank), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& m, const Rational& c) {
    LaurentPoly p(m.rank());
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t i) {
    return monomial(ExponentVector::unit(rank, i));
}

LaurentPoly LaurentPoly::one_plus(const ExponentVector& a) {
    LaurentPoly p = constant(a.rank(), Rational(1));
    p.add_term(a, Rational(1));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank,
                                    const std::vector<std::pair<ExponentVector, Rational>>& terms) {
    LaurentPoly p(rank);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

Rational LaurentPoly::coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& m, const Rational& c) {
    require_same_rank(m.rank(), rank_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_rank(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_rank(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_rank(a.rank_, b.rank_);
    LaurentPoly p(a.rank_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma + mb, ca * cb);
    }
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return LaurentPoly(rank_);
    LaurentPoly r(*this);
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& m) const {
    require_same_rank(m.rank(), rank_);
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
    return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t n) const {
    LaurentPoly result = constant(rank_, Rational(1));
    LaurentPoly base = *this;
    while (n) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n) base *= base;
    }
    return result;
}

ExponentVector LaurentPoly::min_exponents() const {
    if (is_zero()) throw std::domain_error("min_exponents of the zero polynomial");
    ExponentVector out = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < rank_; ++i) out[i] = std::min(out[i], m[i]);
    }
    return out;
}

ExponentVector LaurentPoly::max_exponents() const {
    if (is_zero()) throw std::domain_error("max_exponents of the zero polynomial");
    ExponentVector out = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < rank_; ++i) out[i] = std::max(out[i], m[i]);
    }
    return out;
}

bool LaurentPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

std::string render_monomial(const ExponentVector& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (m[i] != 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) s += '-';
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = render_monomial(m);
        if (mono.empty()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += mono;
        } else {
            s += mag.str() + '*' + mono;
        }
    }
    return s;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

LaurentPoly lp_pow(const LaurentPoly& a, std::uint64_t n) { return a.pow(n); }

std::map<Coord, LaurentPoly> grade_by(const LaurentPoly& w, const LatticeVector& u) {
    std::map<Coord, LaurentPoly> pieces;
    for (const auto& [m, c] : w.terms()) {
        auto [it, inserted] = pieces.try_emplace(pair(m, u), w.rank());
        it->second.add_term(m, c);
    }
    return pieces;
}

namespace {

// Univariate Laurent polynomial in y1 whose coefficients are indexed by the
// remaining coordinates of the rectified exponent.
using Tail = std::vector<Coord>;
using Univariate = std::map<Coord, Rational>;

// Divides p by (1 + y^d) once. Returns false (and leaves the remainder in
// `rem`) when the division is not exact.
bool divide_once(const Univariate& p, Coord d, Univariate& quot, Univariate& rem) {
    quot.clear();
    rem.clear();
    if (p.empty()) return true;
    const Coord low = p.begin()->first;
    const Coord high = p.rbegin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(high - low + 1));
    for (const auto& [e, c] : p) coeffs[static_cast<std::size_t>(e - low)] = c;
    // Long division from the top by the monic y^d + 1.
    for (Coord n = high - low; n >= d; --n) {
        Rational lead = coeffs[static_cast<std::size_t>(n)];
        if (lead.is_zero()) continue;
        quot[n - d + low] = lead;
        coeffs[static_cast<std::size_t>(n - d)] -= lead;
        coeffs[static_cast<std::size_t>(n)] = Rational(0);
    }
    for (Coord n = 0; n < std::min<Coord>(d, high - low + 1); ++n) {
        if (!coeffs[static_cast<std::size_t>(n)].is_zero()) rem[n + low] = coeffs[static_cast<std::size_t>(n)];
    }
    return rem.empty();
}

LaurentPoly assemble(std::size_t rank, const std::map<Tail, Univariate>& groups, const IntMatrix& back) {
    LaurentPoly out(rank);
    for (const auto& [tail, uni] : groups) {
        for (const auto& [e, c] : uni) {
            std::vector<Coord> rect;
            rect.reserve(rank);
            rect.push_back(e);
            rect.insert(rect.end(), tail.begin(), tail.end());
            out.add_term(ExponentVector(back.apply(rect)), c);
        }
    }
    return out;
}

}  // namespace

BinomialDivision binomial_divide(const LaurentPoly& w, const ExponentVector& a, int e) {
    require_same_rank(w.rank(), a.rank());
    if (a.is_zero()) throw std::invalid_argument("binomial_divide: direction is zero");
    if (e < 1) throw std::invalid_argument("binomial_divide: exponent must be positive");

    // a = d * a0 with a0 primitive; rectify so that X^a becomes y1^d.
    const Coord d = gcd_of(a.coords());
    std::vector<Coord> a0(a.vec());
    for (Coord& c : a0) c /= d;
    const IntMatrix to_rect = complete_to_basis(ExponentVector(a0));
    const IntMatrix from_rect = to_rect.unimodular_inverse();

    std::map<Tail, Univariate> groups;
    for (const auto& [m, c] : w.terms()) {
        std::vector<Coord> rect = to_rect.apply(m.coords());
        Tail tail(rect.begin() + 1, rect.end());
        groups[tail][rect[0]] = c;
    }

    BinomialDivision result;
    for (int step = 0; step < e; ++step) {
        std::map<Tail, Univariate> next, rems;
        for (const auto& [tail, uni] : groups) {
            Univariate q, r;
            if (!divide_once(uni, d, q, r)) rems[tail] = std::move(r);
            if (!q.empty()) next[tail] = std::move(q);
        }
        if (!rems.empty()) {
            result.remainder = assemble(w.rank(), rems, from_rect);
            result.factors_divided = step;
            return result;
        }
        groups = std::move(next);
    }
    result.quotient = assemble(w.rank(), groups, from_rect);
    result.remainder = LaurentPoly(w.rank());
    result.factors_divided = e;
    return result;
}

bool is_divisible_up_to_unit(const LaurentPoly& w, const ExponentVector& a, int e) {
    if (a.is_zero()) throw std::invalid_argument("is_divisible_up_to_unit: direction is zero");
    return binomial_divide(w, sign_normalized(a), e).divisible();
}

LaurentPoly monomial_substitution(const LaurentPoly& w, const IntMatrix& m) {
    if (!m.is_square() || m.rows() != w.rank()) {
        throw std::invalid_argument("monomial_substitution: matrix shape does not match rank");
    }
    if (m.determinant() == 0) throw std::domain_error("monomial_substitution: singular matrix " + m.str());
    LaurentPoly out(w.rank());
    for (const auto& [e, c] : w.terms()) out.add_term(m.apply_to<ExponentVector>(e), c);
    return out;
}

Rational content(const LaurentPoly& w) {
    if (w.is_zero()) throw std::domain_error("content of the zero polynomial");
    Rational g(0);
    for (const auto& [m, c] : w.terms()) g = rational_gcd(g, c);
    return g;
}

Rational evaluate(const LaurentPoly& w, std::span<const Rational> point) {
    require_same_rank(w.rank(), point.size());
    for (const auto& x : point) {
        if (x.is_zero()) throw std::domain_error("evaluate: zero coordinate");
    }
    Rational sum(0);
    for (const auto& [m, c] : w.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < m.rank(); ++i) {
            if (m[i] != 0) term *= point[i].pow(m[i]);
        }
        sum += term;
    }
    return sum;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& w, const LaurentPoly& divisor) {
    require_same_rank(w.rank(), divisor.rank());
    if (divisor.is_zero()) throw std::domain_error("exact_divide by zero");
    if (w.is_zero()) return LaurentPoly(w.rank());

    // Strip monomial factors so both sides are polynomials and the divisor has
    // no x_i factor; then lex-leading-term division decides divisibility.
    const ExponentVector wmin = w.min_exponents();
    const ExponentVector dmin = divisor.min_exponents();
    LaurentPoly rem = w.shifted(-wmin);
    const LaurentPoly d = divisor.shifted(-dmin);
    const auto& [dlead, dcoef] = *d.terms().rbegin();

    LaurentPoly quot(w.rank());
    while (!rem.is_zero()) {
        const auto [rlead, rcoef] = *rem.terms().rbegin();
        ExponentVector t = rlead - dlead;
        for (std::size_t i = 0; i < t.rank(); ++i) {
            if (t[i] < 0) return std::nullopt;
        }
        Rational f = rcoef / dcoef;
        quot.add_term(t, f);
        rem -= d.shifted(t).scaled(f);
    }
    return quot.shifted(wmin - dmin);
}

}  // namespace mutpot
