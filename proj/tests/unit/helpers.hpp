#pragma once

#include <random>

#include "mutpot/expression.hpp"
#include "mutpot/mutation.hpp"

namespace testing {

using namespace mutpot;

inline LaurentPoly lp(std::string_view text) { return std::get<LaurentPoly>(parse_expression(text, 2)); }
inline BinomialRationalFn rf(std::string_view text) { return parse_function(text, 2); }

inline LaurentPoly term(Coord a, Coord b, std::int64_t c = 1) {
    return LaurentPoly::monomial(ExponentVector{a, b}, Rational(c));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 6, Coord max_exp = 3) {
    std::uniform_int_distribution<Coord> e(-max_exp, max_exp), c(-4, 4), n(1, max_terms);
    LaurentPoly w(2);
    for (Coord i = n(rng); i > 0; --i) w.add_term(ExponentVector{e(rng), e(rng)}, Rational(c(rng)));
    return w;
}

// Direct evaluation of X^m -> X^m (1 + X^c)^{(u,m)} at a point, term by term.
inline Rational mutated_value(const LaurentPoly& w, const LatticeVector& u, const SkewForm& omega,
                              const std::vector<Rational>& p, int times = 1) {
    const ExponentVector c = i_omega(omega, u);
    const Rational base = Rational(1) + p[0].pow(c[0]) * p[1].pow(c[1]);
    Rational sum(0);
    for (const auto& [m, coef] : w.terms()) {
        sum += coef * p[0].pow(m[0]) * p[1].pow(m[1]) * base.pow(times * pair(m, u));
    }
    return sum;
}

}  // namespace testing
