#include "mutpot/upper_bound.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace mutpot {

std::string LaurentnessVerdict::witness() const {
    if (laurent || !failing_level) return "";
    std::string s = "level " + std::to_string(*failing_level);
    if (remainder && !remainder->is_zero()) {
        const auto& [m, c] = *remainder->terms().rbegin();
        s += ": remainder " + remainder->str() + " (leading term " + LaurentPoly::monomial(m, c).str() + ")";
    }
    return s;
}

LaurentnessVerdict mutation_is_laurent(const LaurentPoly& w, const LatticeVector& u, const SkewForm& omega,
                                       int times) {
    LaurentnessVerdict out;
    const ExponentVector c = i_omega(omega, u);
    if (c.is_zero() || times <= 0) return out;
    const ExponentVector dir = sign_normalized(c);
    for (const auto& [level, piece] : grade_by(w, u)) {
        const Coord need = -static_cast<Coord>(times) * level;
        if (need <= 0) break;  // grades are ascending
        auto div = binomial_divide(piece, dir, static_cast<int>(need));
        if (!div.divisible()) {
            out.laurent = false;
            out.failing_level = level;
            out.remainder = std::move(div.remainder);
            return out;
        }
    }
    return out;
}

MembershipReport check_property_V(const BinomialRationalFn& w, const ExchangeCollection& v, const SkewForm& omega) {
    require_same_rank(w.rank(), omega.rank());
    require_same_rank(v.rank(), omega.rank());
    MembershipReport report;
    LaurentCheck lc = rf_as_laurent(w);
    report.potential_laurent = lc.is_laurent();
    if (!lc.is_laurent()) {
        report.potential_witness = lc.witness;
        report.verdict = false;
        return report;
    }
    report.verdict = true;
    for (const auto& [vec, m] : v.multiplicities()) {
        DirectionResult r{vec, m, mutation_is_laurent(*lc.laurent, vec, omega, m)};
        report.verdict = report.verdict && r.verdict.laurent;
        report.directions.push_back(std::move(r));
    }
    return report;
}

MembershipReport ub_member(const BinomialRationalFn& w, const CSeed& seed) {
    if (!seed.is_base_cluster()) throw std::invalid_argument("ub_member supports only the base cluster");
    return check_property_V(w, seed.collection, seed.form);
}

std::string to_string(SeedShape shape) {
    switch (shape) {
        case SeedShape::one_vector: return "one-vector";
        case SeedShape::opposite_pair: return "opposite-pair";
        case SeedShape::unimodular_pair: return "unimodular-pair";
    }
    return "unknown";
}

namespace {

Coord det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Some w with det[w v] = 1, for primitive v.
LatticeVector complement(const LatticeVector& v) {
    auto [g, s, t] = extended_gcd(v[1], v[0]);
    // s v1 + t v0 = 1  =>  w = (s, -t) has s*v[1] - (-t)*v[0] = 1.
    return LatticeVector{s, -t};
}

IntMatrix columns(const LatticeVector& a, const LatticeVector& b) { return IntMatrix{{a[0], b[0]}, {a[1], b[1]}}; }

LaurentPoly x_pow(Coord a, Coord b) { return LaurentPoly::monomial(ExponentVector{a, b}); }

LaurentPoly one_plus_pow(Coord a, Coord b, Coord e) {
    return LaurentPoly::one_plus(ExponentVector{a, b}).pow(static_cast<std::uint64_t>(e));
}

std::vector<LaurentPoly> standard_generators(const ShapeNormalization& s) {
    const Coord k = std::abs(s.k);
    switch (s.shape) {
        case SeedShape::one_vector:
            return {x_pow(1, 0), x_pow(-1, 0), x_pow(0, 1), one_plus_pow(k, 0, s.m1).shifted(ExponentVector{0, -1})};
        case SeedShape::opposite_pair:
            return {x_pow(1, 0), x_pow(-1, 0), one_plus_pow(k, 0, s.m2).shifted(ExponentVector{0, 1}),
                    one_plus_pow(k, 0, s.m1).shifted(ExponentVector{0, -1})};
        case SeedShape::unimodular_pair: return unimodular_pair_generators(s.k, s.m1, s.m2);
    }
    return {};
}

// Grade-by-grade decomposition for the one-vector and opposite-pair rings
// Q[x1^+-1, x2 (1+x1^K)^{m2}, (1+x1^K)^{m1}/x2] (m2 = 0 for one vector).
std::optional<GeneratorExpansion> expand_along_e2(const LaurentPoly& w, Coord k, int m1, int m2) {
    GeneratorExpansion out;
    const ExponentVector dir{std::abs(k), 0};
    for (const auto& [level, piece] : grade_by(w, LatticeVector{0, 1})) {
        const Coord need = level >= 0 ? static_cast<Coord>(m2) * level : static_cast<Coord>(m1) * -level;
        LaurentPoly q = piece;
        if (need > 0) {
            auto div = binomial_divide(piece, dir, static_cast<int>(need));
            if (!div.divisible()) return std::nullopt;
            q = std::move(*div.quotient);
        }
        for (const auto& [m, c] : q.terms()) {
            std::vector<int> e(4, 0);
            e[0] = static_cast<int>(std::max<Coord>(m[0], 0));
            e[1] = static_cast<int>(std::max<Coord>(-m[0], 0));
            e[level >= 0 ? 2 : 3] = static_cast<int>(std::abs(level));
            out.terms.push_back({c, std::move(e)});
        }
    }
    return out;
}

}  // namespace

ShapeNormalization classify_shape(const ExchangeCollection& v, const SkewForm& omega) {
    if (omega.rank() != 2 || v.rank() != 2) throw UnsupportedShape("generator presentations need rank two");
    if (omega.is_zero()) throw UnsupportedShape("degenerate form: every mutation is trivial");
    if (!v.all_primitive()) throw UnsupportedShape("collection " + v.str() + " has non-primitive vectors");
    const auto& mult = v.multiplicities();

    if (mult.size() == 1) {
        const auto& [vec, m] = *mult.begin();
        const LatticeVector w = complement(vec);
        return {SeedShape::one_vector, columns(w, vec), omega(w, vec), m, 0};
    }
    if (mult.size() == 2) {
        auto it = mult.begin();
        const auto& [a, ma] = *it++;
        const auto& [b, mb] = *it;
        if (a == -b) {
            const LatticeVector vec = sign_normalized(a);
            const LatticeVector w = complement(vec);
            return {SeedShape::opposite_pair, columns(w, vec), omega(w, vec), v.multiplicity(vec),
                    v.multiplicity(-vec)};
        }
        const Coord det = det2(a, b);
        if (det == 1) return {SeedShape::unimodular_pair, columns(a, b), omega(a, b), ma, mb};
        if (det == -1) return {SeedShape::unimodular_pair, columns(b, a), omega(b, a), mb, ma};
        throw UnsupportedShape("vectors " + a.str() + " and " + b.str() + " span a sublattice of index " +
                               std::to_string(std::abs(det)));
    }
    throw UnsupportedShape("collection " + v.str() + " is not a one-vector, opposite-pair or unimodular-pair shape");
}

std::vector<LaurentPoly> unimodular_pair_generators(Coord k, int m1, int m2) {
    const Coord kk = std::abs(k);
    return {x_pow(1, 0), x_pow(0, 1), one_plus_pow(0, kk, m1).shifted(ExponentVector{-1, 0}),
            one_plus_pow(kk, 0, m2).shifted(ExponentVector{0, -1})};
}

std::optional<GeneratorExpansion> expand_unimodular_pair(const LaurentPoly& w, Coord k, int m1, int m2) {
    // Standard monomials x1^a x2^b g1^c g2^d with a*c = 0 and b*d = 0 are
    // indexed by their lower-left corner (p, q) = (a - c, b - d), where
    // s_{p,q} = x1^p x2^q (1+x2^K)^{m1 c} (1+x1^K)^{m2 d}. The corner is the
    // unique term minimizing p + q, so peeling off the minimal term of the
    // remainder recovers the (unique) expansion.
    GeneratorExpansion out;
    if (w.is_zero()) return out;
    const Coord kk = std::abs(k);
    const ExponentVector lo = w.min_exponents();
    const ExponentVector hi = w.max_exponents();
    const Coord c_max = std::max<Coord>(0, -lo[0]);
    const Coord d_max = std::max<Coord>(0, -lo[1]);
    const Coord slack = kk * (m2 * d_max + m1 * c_max);
    const Coord p_hi = hi[0] + slack;
    const Coord q_hi = hi[1] + slack;
    const Coord budget = (p_hi - lo[0] + 1) * (q_hi - lo[1] + 1) + 1;

    LaurentPoly rem = w;
    for (Coord step = 0; !rem.is_zero(); ++step) {
        if (step > budget) return std::nullopt;
        const ExponentVector* best = nullptr;
        Rational coef;
        for (const auto& [m, c] : rem.terms()) {
            if (!best || m[0] + m[1] < (*best)[0] + (*best)[1]) {
                best = &m;
                coef = c;
            }
        }
        const Coord p = (*best)[0], q = (*best)[1];
        if (p < lo[0] || q < lo[1] || p > p_hi || q > q_hi) return std::nullopt;
        const Coord c = std::max<Coord>(0, -p), d = std::max<Coord>(0, -q);
        LaurentPoly s = (one_plus_pow(0, kk, m1 * c) * one_plus_pow(kk, 0, m2 * d)).shifted(ExponentVector{p, q});
        out.terms.push_back({coef, {static_cast<int>(std::max<Coord>(p, 0)), static_cast<int>(std::max<Coord>(q, 0)),
                                    static_cast<int>(c), static_cast<int>(d)}});
        rem -= s.scaled(coef);
    }
    return out;
}

LaurentPoly GeneratorExpansion::evaluate(const std::vector<LaurentPoly>& generators) const {
    if (generators.empty()) throw std::invalid_argument("no generators");
    LaurentPoly sum(generators.front().rank());
    for (const auto& t : terms) {
        if (t.exponents.size() != generators.size()) throw std::invalid_argument("expansion/generator size mismatch");
        LaurentPoly prod = LaurentPoly::constant(sum.rank(), t.coefficient);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (t.exponents[i] > 0) prod *= generators[i].pow(static_cast<std::uint64_t>(t.exponents[i]));
        }
        sum += prod;
    }
    return sum;
}

GeneratorPresentation generators_for(const ExchangeCollection& v, const SkewForm& omega) {
    const ShapeNormalization s = classify_shape(v, omega);
    GeneratorPresentation out{s.shape, {}, std::nullopt};
    const bool standard = s.basis == IntMatrix::identity(2);
    const IntMatrix back = s.from_standard();
    for (const auto& g : standard_generators(s)) {
        out.generators.push_back(standard ? g : monomial_substitution(g, back));
    }
    if (!standard) out.coordinate_change = back;
    return out;
}

GeneratorPresentation generators_for(const CSeed& seed) {
    if (!seed.is_base_cluster()) throw std::invalid_argument("generators_for supports only the base cluster");
    return generators_for(seed.collection, seed.form);
}

std::optional<GeneratorExpansion> expand_in_generators(const LaurentPoly& w, const ExchangeCollection& v,
                                                       const SkewForm& omega) {
    const ShapeNormalization s = classify_shape(v, omega);
    require_same_rank(w.rank(), 2);
    const LaurentPoly ws = monomial_substitution(w, s.to_standard());
    std::optional<GeneratorExpansion> exp;
    switch (s.shape) {
        case SeedShape::one_vector: exp = expand_along_e2(ws, s.k, s.m1, 0); break;
        case SeedShape::opposite_pair: exp = expand_along_e2(ws, s.k, s.m1, s.m2); break;
        case SeedShape::unimodular_pair: exp = expand_unimodular_pair(ws, s.k, s.m1, s.m2); break;
    }
    // The expansion must reproduce W exactly in the generators.
    if (exp && !(exp->evaluate(standard_generators(s)) == ws)) return std::nullopt;
    return exp;
}

bool member_via_generators(const BinomialRationalFn& w, const ExchangeCollection& v, const SkewForm& omega) {
    LaurentCheck lc = rf_as_laurent(w);
    if (!lc.is_laurent()) {
        classify_shape(v, omega);  // still report unsupported shapes
        return false;
    }
    return expand_in_generators(*lc.laurent, v, omega).has_value();
}

bool member_via_generators(const BinomialRationalFn& w, const CSeed& seed) {
    if (!seed.is_base_cluster()) throw std::invalid_argument("member_via_generators supports only the base cluster");
    return member_via_generators(w, seed.collection, seed.form);
}

bool verify_vlemma(const CSeed& seed, const LatticeVector& d, const BinomialRationalFn& w) {
    if (!seed.collection.contains(d)) throw DirectionNotInCollection(d);
    const bool before = ub_member(w, seed).verdict;
    const BinomialRationalFn mutated = potential_mutate(w, d, seed.form);
    bool after = false;
    if (rf_as_laurent(mutated).is_laurent()) {
        after = check_property_V(mutated, collection_mutate(seed.collection, d, seed.form), seed.form).verdict;
    }
    return before == after;
}

namespace {

LaurentPoly random_combination(const std::vector<LaurentPoly>& gens, const SampleBounds& bounds,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(1, std::max(1, bounds.max_coefficient));
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> nfactors(0, std::max(0, bounds.max_factors));
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    LaurentPoly sum(gens.front().rank());
    for (int t = 0; t < bounds.terms; ++t) {
        int c = coef(rng);
        if (sign(rng)) c = -c;
        LaurentPoly prod = LaurentPoly::constant(sum.rank(), Rational(c));
        const int n = nfactors(rng);
        for (int f = 0; f < n; ++f) prod *= gens[pick(rng)];
        sum += prod;
    }
    return sum;
}

}  // namespace

LaurentPoly sample_ub_element(const ExchangeCollection& v, const SkewForm& omega, const SampleBounds& bounds,
                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    try {
        const ShapeNormalization s = classify_shape(v, omega);
        return monomial_substitution(random_combination(standard_generators(s), bounds, rng), s.from_standard());
    } catch (const UnsupportedShape&) {
        if (omega.rank() != 2 || omega.is_zero() || v.multiplicities().size() != 2 || !v.all_primitive()) throw;
    }
    // Non-collinear pair spanning a proper sublattice L' = <v1, v2>. In the
    // basis (v1, v2) of L' the seed is a unimodular pair; its upper bound
    // intersected with Q[L*] is the upper bound over L, and dropping the
    // monomials that are not characters of L projects onto that intersection.
    auto it = v.multiplicities().begin();
    const auto& [a, ma] = *it++;
    const auto& [b, mb] = *it;
    const Coord det = det2(a, b);
    if (det == 0) throw UnsupportedShape("collinear vectors " + a.str() + " and " + b.str());
    const LaurentPoly sub = random_combination(unimodular_pair_generators(omega(a, b), ma, mb), bounds, rng);
    // n' = B^T n with B = [a b]; invert by the adjugate.
    const IntMatrix adj{{b[1], -a[1]}, {-b[0], a[0]}};  // adj(B^T)
    LaurentPoly out(2);
    for (const auto& [m, c] : sub.terms()) {
        std::vector<Coord> n = adj.apply(m.coords());
        if (n[0] % det != 0 || n[1] % det != 0) continue;
        out.add_term(ExponentVector{n[0] / det, n[1] / det}, c);
    }
    return out;
}

namespace {

Rational binomial_coefficient(Coord n, Coord j) {
    Rational r(1);
    for (Coord i = 1; i <= j; ++i) r = r * Rational(n - j + i) / Rational(i);
    return r;
}

Rational factorial(Coord n) {
    Rational r(1);
    for (Coord i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

LaurentPoly tail_sum(Coord k, bool variant) {
    LaurentPoly s(2);
    for (Coord j = 1; j <= k; ++j) {
        Rational coef = variant ? factorial(k) / (Rational(j) * factorial(k - j)) : binomial_coefficient(k, j);
        s.add_term(ExponentVector{0, k * j - 1}, coef);
    }
    return s;
}

}  // namespace

RingIdentityReport verify_ring_identities(Coord k, int m2) {
    if (k < 1 || m2 < 1) throw std::invalid_argument("verify_ring_identities needs k >= 1 and m2 >= 1");
    RingIdentityReport rep;
    rep.k = k;
    rep.m2 = m2;

    const LaurentPoly x1 = x_pow(1, 0), x2 = x_pow(0, 1);
    const LaurentPoly x1k = x_pow(k, 0);
    const LaurentPoly one_x1k = one_plus_pow(k, 0, 1);
    const LaurentPoly one_x2k_k = one_plus_pow(0, k, k);

    // (x1^k + (1+x2^k)^k) / (x1^k x2)
    const LaurentPoly lhs = (x1k + one_x2k_k).shifted(ExponentVector{-k, -1});
    const LaurentPoly g2 = one_x1k.shifted(ExponentVector{0, -1});           // (1+x1^k)/x2
    const LaurentPoly g1k = one_x2k_k.shifted(ExponentVector{-k, 0});        // (1+x2^k)^k/x1^k
    rep.first_identity = lhs == g2 * g1k - tail_sum(k, false);
    rep.second_identity = g2 == x1k * lhs - tail_sum(k, false);
    rep.second_identity_variant = g2 == x1k * lhs - tail_sum(k, true);

    // R1 = Q[x1, x2, A, (1+x1^k)^m2/x2], R2 = Q[x1, x2, A, G] with A = (1+x2^k)/x1.
    const LaurentPoly a = one_plus_pow(0, k, 1).shifted(ExponentVector{-1, 0});
    const LaurentPoly g = (x1k + one_x2k_k).pow(static_cast<std::uint64_t>(m2)).shifted(ExponentVector{-m2 * k, -1});
    const LaurentPoly r1_last = one_plus_pow(k, 0, m2).shifted(ExponentVector{0, -1});

    rep.forward_membership = true;
    for (const auto& gen : {x1, x2, a, g}) {
        rep.forward_membership = rep.forward_membership && expand_unimodular_pair(gen, k, 1, m2).has_value();
    }

    // In y = (x2, A) coordinates, x1 = (1+y1^k)/y2 and x2 = y1, and R2 becomes
    // Q[y1, y2, (1+y2^k)^m2/y1, (1+y1^k)/y2].
    const std::vector<BinomialRationalFn> images{BinomialRationalFn(one_plus_pow(k, 0, 1).shifted(ExponentVector{0, -1})),
                                                 BinomialRationalFn(x1)};
    const std::vector<BinomialRationalFn> inverses{
        BinomialRationalFn(x_pow(0, 1), {BinomialFactor{ExponentVector{k, 0}, 1}}), BinomialRationalFn(x_pow(-1, 0))};
    rep.backward_membership = true;
    for (const auto& gen : {x1, x2, a, r1_last}) {
        LaurentCheck lc = rf_as_laurent(substitute(gen, images, inverses));
        rep.backward_membership =
            rep.backward_membership && lc.is_laurent() && expand_unimodular_pair(*lc.laurent, k, m2, 1).has_value();
    }
    (void)x2;
    return rep;
}

}  // namespace mutpot
