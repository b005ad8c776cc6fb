#pragma once

// Property (V), upper-bound membership and generator presentations of the
// upper bound for the rank-two seed shapes that admit one.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutpot/mutation.hpp"

namespace mutpot {

/// Result of testing whether (mu_u^*)^m W is a Laurent polynomial.
struct LaurentnessVerdict {
    bool laurent = true;
    /// Smallest grade l = (u, m) whose piece is not divisible by (1+X^c)^{-m l}.
    std::optional<Coord> failing_level;
    /// Remainder of that piece, in original coordinates.
    std::optional<LaurentPoly> remainder;

    /// Human-readable witness, e.g. "level -1: remainder 1 (leading term 1)".
    std::string witness() const;
};

LaurentnessVerdict mutation_is_laurent(const LaurentPoly& w, const LatticeVector& u, const SkewForm& omega,
                                       int times);

struct DirectionResult {
    LatticeVector vector;
    int multiplicity = 0;
    LaurentnessVerdict verdict;
};

struct MembershipReport {
    bool verdict = false;
    bool potential_laurent = false;
    /// Set when the potential itself is not Laurent.
    std::optional<BinomialFactor> potential_witness;
    std::vector<DirectionResult> directions;
};

/// W is Laurent and (mu_v^*)^{m_V(v)} W is Laurent for every distinct v in V.
MembershipReport check_property_V(const BinomialRationalFn& w, const ExchangeCollection& v, const SkewForm& omega);

/// Upper-bound membership for a C-seed with the base cluster.
/// Throws std::invalid_argument for any other cluster.
MembershipReport ub_member(const BinomialRationalFn& w, const CSeed& seed);

enum class SeedShape { one_vector, opposite_pair, unimodular_pair };

std::string to_string(SeedShape shape);

class UnsupportedShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A rank-two seed rewritten in a basis (b1, b2) of L with det 1, where it
/// takes one of the standard forms
///   one_vector:      {m1 x e2}
///   opposite_pair:   {m1 x e2, m2 x (-e2)}
///   unimodular_pair: {m1 x e1, m2 x e2}
/// Exponents transform as n' = B^T n (n'_i = (n, b_i)).
struct ShapeNormalization {
    SeedShape shape;
    IntMatrix basis;  // columns b1, b2
    Coord k = 0;      // omega(b1, b2); the upper bound depends only on |k|
    int m1 = 0;
    int m2 = 0;

    /// Original exponents -> standard exponents.
    IntMatrix to_standard() const { return basis.transpose(); }
    /// Standard exponents -> original exponents.
    IntMatrix from_standard() const { return basis.transpose().unimodular_inverse(); }
};

/// Throws UnsupportedShape for anything outside the three shapes, for
/// non-primitive vectors, degenerate forms and rank != 2.
ShapeNormalization classify_shape(const ExchangeCollection& v, const SkewForm& omega);

struct GeneratorPresentation {
    SeedShape shape;
    /// Generators in original coordinates; inverted coordinates such as x1^-1
    /// appear as separate generators.
    std::vector<LaurentPoly> generators;
    /// Exponent map from the standard coordinates z to the original ones;
    /// absent when the seed is already in standard position.
    std::optional<IntMatrix> coordinate_change;
};

GeneratorPresentation generators_for(const ExchangeCollection& v, const SkewForm& omega);
GeneratorPresentation generators_for(const CSeed& seed);

/// W = sum coefficient * prod generators[i]^exponents[i].
struct GeneratorExpansion {
    struct Term {
        Rational coefficient;
        std::vector<int> exponents;
    };
    std::vector<Term> terms;

    /// Re-expands the combination in the given generators.
    LaurentPoly evaluate(const std::vector<LaurentPoly>& generators) const;
};

/// Constructive membership: the expansion of W in generators_for(V, omega),
/// or nothing when W is not in the generated ring.
std::optional<GeneratorExpansion> expand_in_generators(const LaurentPoly& w, const ExchangeCollection& v,
                                                       const SkewForm& omega);
bool member_via_generators(const BinomialRationalFn& w, const ExchangeCollection& v, const SkewForm& omega);
bool member_via_generators(const BinomialRationalFn& w, const CSeed& seed);

/// Standard-position helpers: the ring Q[x1, x2, (1+x2^K)^m1/x1, (1+x1^K)^m2/x2].
std::vector<LaurentPoly> unimodular_pair_generators(Coord k, int m1, int m2);
std::optional<GeneratorExpansion> expand_unimodular_pair(const LaurentPoly& w, Coord k, int m1, int m2);

/// [W in U(seed)] == [potential_mutate(W, d) is Laurent and lies in U(mu_d seed)].
/// Throws DirectionNotInCollection.
bool verify_vlemma(const CSeed& seed, const LatticeVector& d, const BinomialRationalFn& w);

struct SampleBounds {
    int terms = 3;       // products summed
    int max_factors = 2; // generators per product
    int max_coefficient = 3;
};

/// Random element of U(V): a sum of random products of generators. Besides
/// the three shapes, non-collinear pairs with |det| > 1 are sampled through
/// the sublattice they span, keeping the monomials integral on L.
/// Throws UnsupportedShape otherwise.
LaurentPoly sample_ub_element(const ExchangeCollection& v, const SkewForm& omega, const SampleBounds& bounds,
                              std::uint64_t seed);

struct RingIdentityReport {
    Coord k = 0;
    int m2 = 0;
    /// (x1^k + (1+x2^k)^k)/(x1^k x2) = ((1+x1^k)/x2)((1+x2^k)^k/x1^k) - sum_j C(k,j) x2^{kj-1}
    bool first_identity = false;
    /// (1+x1^k)/x2 = x1^k (x1^k + (1+x2^k)^k)/(x1^k x2) - sum_j C(k,j) x2^{kj-1}
    bool second_identity = false;
    /// The second identity with k!/(j (k-j)!) in place of the binomial coefficient.
    bool second_identity_variant = false;
    /// Generators of Q[x1, x2, (1+x2^k)/x1, (x1^k+(1+x2^k)^k)^m2/(x1^{m2 k} x2)] lie in
    /// Q[x1, x2, (1+x2^k)/x1, (1+x1^k)^m2/x2] ...
    bool forward_membership = false;
    /// ... and vice versa.
    bool backward_membership = false;

    bool ok() const { return first_identity && second_identity && forward_membership && backward_membership; }
};

RingIdentityReport verify_ring_identities(Coord k, int m2);

}  // namespace mutpot
