#pragma once

// Exchange collections, seeds, birational mutations and exchange matrices.

#include <map>
#include <string>
#include <vector>

#include "mutpot/lattice.hpp"
#include "mutpot/rational_function.hpp"

namespace mutpot {

/// Raised when a mutation direction is not in the exchange collection.
class DirectionNotInCollection : public std::invalid_argument {
public:
    explicit DirectionNotInCollection(const LatticeVector& d);
};

/// Raised when a mutated denominator factor does not cancel and is not a
/// binomial, i.e. the result leaves the binomial-denominator class.
class OutsideBinomialClass : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Multiset of lattice vectors, stored as a multiplicity function.
class ExchangeCollection {
public:
    using Multiplicities = std::map<LatticeVector, int>;

    explicit ExchangeCollection(std::size_t rank = 2) : rank_(rank) {}
    ExchangeCollection(std::size_t rank, const std::vector<std::pair<LatticeVector, int>>& entries);
    /// One copy per list entry; repeated vectors accumulate.
    static ExchangeCollection from_list(std::size_t rank, const std::vector<LatticeVector>& vectors);

    std::size_t rank() const { return rank_; }
    void add(const LatticeVector& v, int multiplicity = 1);
    /// Removes one copy; throws DirectionNotInCollection.
    void remove_one(const LatticeVector& v);

    int multiplicity(const LatticeVector& v) const;
    bool contains(const LatticeVector& v) const { return multiplicity(v) > 0; }
    const Multiplicities& multiplicities() const { return mult_; }
    /// n = sum of multiplicities.
    int size() const;
    bool empty() const { return mult_.empty(); }
    /// Vectors repeated by multiplicity, in sorted order.
    std::vector<LatticeVector> ordered() const;
    bool is_subcollection_of(const ExchangeCollection& other) const;
    bool all_primitive() const;

    friend bool operator==(const ExchangeCollection&, const ExchangeCollection&) = default;
    /// "{(0,-1)x1, (0,1)x2}"
    std::string str() const;

private:
    std::size_t rank_;
    Multiplicities mult_;
};

/// The monomial rule X^m -> X^m (1+X^{i_omega(u)})^{(u,m)}, normalized.
/// A degenerate direction (i_omega(u) = 0) leaves F unchanged.
/// Throws OutsideBinomialClass when a denominator of F maps outside the class.
BinomialRationalFn fn_mutate(const BinomialRationalFn& f, const LatticeVector& u, const SkewForm& omega);

/// fn_mutate applied `times` times, in one pass: X^m -> X^m (1+X^c)^{times (u,m)}.
BinomialRationalFn fn_mutate_iter(const BinomialRationalFn& f, const LatticeVector& u, const SkewForm& omega,
                                  int times);

/// How a potential transforms when its collection is mutated at d, so that
/// (W, V) has property (V) iff (potential_mutate(W, d), collection_mutate(V, d))
/// does: X^m -> X^m (1+X^{-i_omega(d)})^{times (d,m)}, i.e. fn_mutate with the
/// opposite form. For d = e_2 and omega_1 this is x_2 -> x_2 (1+x_1), the
/// inverse of the display convention below.
BinomialRationalFn potential_mutate(const BinomialRationalFn& w, const LatticeVector& d, const SkewForm& omega,
                                    int times = 1);

/// Images of the coordinates x_1..x_r under fn_mutate.
std::vector<BinomialRationalFn> coordinate_images(const LatticeVector& u, const SkewForm& omega);
/// The alternative display convention x_2 -> x_2/(1+x_1) for u = e_2, omega_1;
/// it differs from coordinate_images by a monomial automorphism.
std::vector<BinomialRationalFn> display_coordinate_images(const LatticeVector& u, const SkewForm& omega);

/// One copy of d becomes -d, every other vector v becomes pl_mutate(omega, d, v).
ExchangeCollection collection_mutate(const ExchangeCollection& v, const LatticeVector& d, const SkewForm& omega);
/// Ordered variant: entry k becomes -v_k, entries i != k become pl_mutate(omega, v_k, v_i).
std::vector<LatticeVector> collection_mutate(const std::vector<LatticeVector>& v, std::size_t k,
                                             const SkewForm& omega);

struct SeedValidation {
    bool primitive = true;
    bool nondegenerate = true;
    bool ok() const { return primitive && nondegenerate; }
};

SeedValidation validate(const SkewForm& omega, const ExchangeCollection& v);

struct VSeed {
    SkewForm form;
    ExchangeCollection collection;
    BinomialRationalFn potential;

    SeedValidation validation() const { return validate(form, collection); }
};

struct CSeed {
    SkewForm form;
    ExchangeCollection collection;
    std::vector<BinomialRationalFn> cluster;

    /// Cluster = coordinate functions x_1..x_r.
    static CSeed base(SkewForm form, ExchangeCollection collection);
    bool is_base_cluster() const;
    SeedValidation validation() const { return validate(form, collection); }
};

/// Collection by collection_mutate, potential by potential_mutate.
VSeed vseed_mutate(const VSeed& seed, const LatticeVector& d);
CSeed cseed_mutate(const CSeed& seed, const LatticeVector& d);

/// b_ij = omega(v_i, v_j)
IntMatrix b_matrix(const std::vector<LatticeVector>& v, const SkewForm& omega);

/// Exchange-matrix mutation at zero-based index k.
/// Throws std::out_of_range when k >= n.
IntMatrix bfz_matrix_mutate(const IntMatrix& b, std::size_t k);

}  // namespace mutpot
