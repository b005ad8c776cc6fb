#pragma once

// Lattice combinatorics: skew forms, the map i_omega, symplectic reflections,
// piecewise-linear mutations and unimodular basis machinery.

#include <string>

#include "mutpot/int_vector.hpp"

namespace mutpot {

/// Integer skew-symmetric bilinear form on L, stored as the Gram matrix
/// omega(e_i, e_j).
class SkewForm {
public:
    SkewForm() = default;
    /// Throws std::invalid_argument unless the matrix is square and skew-symmetric.
    explicit SkewForm(IntMatrix gram);
    /// Rank-two form omega_k with omega_k(e1, e2) = k.
    static SkewForm rank2(Coord k);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    Coord operator()(const LatticeVector& a, const LatticeVector& b) const;

    SkewForm scaled(Coord s) const;
    SkewForm operator-() const { return scaled(-1); }
    bool is_zero() const;
    /// omega(e1, e2) for rank-two forms.
    Coord rank2_k() const;

    friend bool operator==(const SkewForm&, const SkewForm&) = default;
    std::string str() const;

private:
    IntMatrix gram_;
};

/// The linear form v' -> omega(u, v').
ExponentVector i_omega(const SkewForm& omega, const LatticeVector& u);

/// R_{omega,u}(v) = v + omega(u,v) u
LatticeVector reflect(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v);
/// mu_{omega,u}(v) = v + max(0, omega(u,v)) u
LatticeVector pl_mutate(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v);
/// mu_{omega,u}^{-1}(v) = v - max(0, omega(u,v)) u
LatticeVector pl_mutate_inv(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v);

/// Nonzero with coprime coordinates.
template <class Tag>
bool is_primitive(const IntVector<Tag>& v) {
    return !v.is_zero() && gcd_of(v.coords()) == 1;
}

/// Unimodular M with M a = (1,0,...,0). Standard basis vectors e_j map through
/// the transposition (1 j); other vectors go through extended-gcd reduction.
/// Throws std::invalid_argument when a is not primitive.
IntMatrix complete_to_basis(const ExponentVector& a);

/// Form-compatible linear map f: (L, omega) -> (L', omega'), matrix of size r' x r.
class LatticeMap {
public:
    /// Throws std::invalid_argument when omega(v1,v2) != omega'(f v1, f v2) on a basis pair.
    LatticeMap(IntMatrix matrix, SkewForm source, SkewForm target);

    const IntMatrix& matrix() const { return matrix_; }
    const SkewForm& source() const { return source_; }
    const SkewForm& target() const { return target_; }
    LatticeVector operator()(const LatticeVector& v) const;
    /// The adjoint f*: L'* -> L*, i.e. the transposed matrix.
    IntMatrix dual() const { return matrix_.transpose(); }

private:
    IntMatrix matrix_;
    SkewForm source_;
    SkewForm target_;
};

LatticeVector push_forward(const LatticeMap& f, const LatticeVector& v);

/// Change of basis sending v1 -> e1', v2 -> e2' (rank two, det[v1 v2] = 1).
/// `dual` acts on exponent vectors: z_1 = X^{dual f1'} = x1^d x2^-c,
/// z_2 = X^{dual f2'} = x1^-b x2^a for v1 = (a,b), v2 = (c,d).
struct Sl2ChangeOfBasis {
    LatticeMap map;
    IntMatrix dual;
};

/// Throws std::invalid_argument when the rank is not two or det != 1.
Sl2ChangeOfBasis sl2_change_of_basis(const SkewForm& omega, const LatticeVector& v1, const LatticeVector& v2);

}  // namespace mutpot
