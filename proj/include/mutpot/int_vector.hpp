#pragma once

// Integer vectors of a fixed rank and small dense integer matrices.
//
// LatticeVector lives in L (basis e_1..e_r), ExponentVector in the dual L*
// (basis f_1..f_r). They share a representation but are distinct types so
// that the pairing L* x L -> Z is the only way to combine them.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutpot {

using Coord = std::int64_t;

class RankMismatch : public std::invalid_argument {
public:
    RankMismatch(std::size_t a, std::size_t b);
};

inline void require_same_rank(std::size_t a, std::size_t b) {
    if (a != b) throw RankMismatch(a, b);
}

template <class Tag>
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t rank) : coords_(rank, 0) {}
    explicit IntVector(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<Coord> coords) : coords_(coords) {}

    static IntVector unit(std::size_t rank, std::size_t i) {
        IntVector v(rank);
        v.coords_.at(i) = 1;
        return v;
    }

    std::size_t rank() const { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    Coord& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Coord> coords() const { return coords_; }
    const std::vector<Coord>& vec() const { return coords_; }

    bool is_zero() const {
        for (Coord c : coords_) {
            if (c != 0) return false;
        }
        return true;
    }

    IntVector operator-() const {
        IntVector r(*this);
        for (Coord& c : r.coords_) c = -c;
        return r;
    }
    IntVector& operator+=(const IntVector& o) {
        require_same_rank(rank(), o.rank());
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    IntVector& operator-=(const IntVector& o) {
        require_same_rank(rank(), o.rank());
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    friend IntVector operator*(Coord s, IntVector v) {
        for (Coord& c : v.coords_) c *= s;
        return v;
    }

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector&, const IntVector&) = default;

    /// "(a,b,...)"
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coords_[i]);
        }
        return s + ")";
    }

private:
    std::vector<Coord> coords_;
};

struct LatticeTag {};
struct DualTag {};

using LatticeVector = IntVector<LatticeTag>;
using ExponentVector = IntVector<DualTag>;

/// Canonical pairing (m, v) = sum m_i v_i.
Coord pair(const ExponentVector& m, const LatticeVector& v);

Coord gcd_of(std::span<const Coord> coords);

/// Sign normalization: first nonzero coordinate positive.
template <class Tag>
IntVector<Tag> sign_normalized(const IntVector<Tag>& v) {
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i] != 0) return v[i] < 0 ? -v : v;
    }
    return v;
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
struct ExtendedGcd {
    Coord g, s, t;
};
ExtendedGcd extended_gcd(Coord a, Coord b);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Coord>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Coord>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Coord operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Coord& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Coord> apply(std::span<const Coord> v) const;

    template <class Out, class In>
    Out apply_to(const In& v) const {
        return Out(apply(v.coords()));
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_skew_symmetric() const;
    /// Exact determinant (fraction-free elimination); square matrices only.
    Coord determinant() const;
    /// Inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
    IntMatrix unimodular_inverse() const;

    std::vector<std::vector<Coord>> to_rows() const;
    /// "[[a,b],[c,d]]"
    std::string str() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Coord> data_;
};

}  // namespace mutpot
