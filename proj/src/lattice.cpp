#include "mutpot/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace mutpot {

SkewForm::SkewForm(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_skew_symmetric()) {
        throw std::invalid_argument("form matrix " + gram_.str() + " is not skew-symmetric");
    }
}

SkewForm SkewForm::rank2(Coord k) { return SkewForm(IntMatrix{{0, k}, {-k, 0}}); }

Coord SkewForm::operator()(const LatticeVector& a, const LatticeVector& b) const {
    require_same_rank(a.rank(), rank());
    require_same_rank(b.rank(), rank());
    Coord s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_(i, j) * b[j];
    }
    return s;
}

SkewForm SkewForm::scaled(Coord s) const {
    IntMatrix g = gram_;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= s;
    }
    return SkewForm(std::move(g));
}

bool SkewForm::is_zero() const { return gram_ == IntMatrix(rank(), rank()); }

Coord SkewForm::rank2_k() const {
    if (rank() != 2) throw std::invalid_argument("rank2_k on a form of rank " + std::to_string(rank()));
    return gram_(0, 1);
}

std::string SkewForm::str() const { return gram_.str(); }

ExponentVector i_omega(const SkewForm& omega, const LatticeVector& u) {
    require_same_rank(u.rank(), omega.rank());
    ExponentVector out(omega.rank());
    for (std::size_t j = 0; j < omega.rank(); ++j) {
        Coord s = 0;
        for (std::size_t i = 0; i < omega.rank(); ++i) s += u[i] * omega.gram()(i, j);
        out[j] = s;
    }
    return out;
}

LatticeVector reflect(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v) {
    return v + omega(u, v) * u;
}

LatticeVector pl_mutate(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v) {
    return v + std::max<Coord>(0, omega(u, v)) * u;
}

LatticeVector pl_mutate_inv(const SkewForm& omega, const LatticeVector& u, const LatticeVector& v) {
    return v - std::max<Coord>(0, omega(u, v)) * u;
}

IntMatrix complete_to_basis(const ExponentVector& a) {
    if (!is_primitive(a)) throw std::invalid_argument("complete_to_basis: " + a.str() + " is not primitive");
    const std::size_t r = a.rank();
    IntMatrix m = IntMatrix::identity(r);

    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] != 0) {
            ++nonzero;
            where = i;
        }
    }
    if (nonzero == 1 && a[where] == 1) {
        if (where != 0) {
            m(0, 0) = 0;
            m(where, where) = 0;
            m(0, where) = 1;
            m(where, 0) = 1;
        }
        return m;
    }

    // Fold coordinate i into coordinate 0 with the unimodular 2x2 block
    // [[s, t], [-a_i/g, a_0/g]], which sends (a_0, a_i) to (g, 0).
    std::vector<Coord> cur(a.vec());
    for (std::size_t i = 1; i < r; ++i) {
        if (cur[i] == 0) continue;
        auto [g, s, t] = extended_gcd(cur[0], cur[i]);
        IntMatrix step = IntMatrix::identity(r);
        step(0, 0) = s;
        step(0, i) = t;
        step(i, 0) = -cur[i] / g;
        step(i, i) = cur[0] / g;
        m = step * m;
        cur = m.apply(a.coords());
    }
    if (cur[0] == -1) {
        for (std::size_t j = 0; j < r; ++j) m(0, j) = -m(0, j);
    }
    return m;
}

LatticeMap::LatticeMap(IntMatrix matrix, SkewForm source, SkewForm target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target)) {
    if (matrix_.cols() != source_.rank() || matrix_.rows() != target_.rank()) {
        throw std::invalid_argument("lattice map shape does not match the forms");
    }
    for (std::size_t i = 0; i < source_.rank(); ++i) {
        for (std::size_t j = 0; j < source_.rank(); ++j) {
            auto ei = LatticeVector::unit(source_.rank(), i);
            auto ej = LatticeVector::unit(source_.rank(), j);
            if (source_(ei, ej) != target_((*this)(ei), (*this)(ej))) {
                throw std::invalid_argument("lattice map " + matrix_.str() + " does not respect the forms");
            }
        }
    }
}

LatticeVector LatticeMap::operator()(const LatticeVector& v) const {
    return matrix_.apply_to<LatticeVector>(v);
}

LatticeVector push_forward(const LatticeMap& f, const LatticeVector& v) { return f(v); }

Sl2ChangeOfBasis sl2_change_of_basis(const SkewForm& omega, const LatticeVector& v1, const LatticeVector& v2) {
    if (omega.rank() != 2 || v1.rank() != 2 || v2.rank() != 2) {
        throw std::invalid_argument("sl2_change_of_basis needs rank two");
    }
    const Coord a = v1[0], b = v1[1], c = v2[0], d = v2[1];
    if (a * d - b * c != 1) {
        throw std::invalid_argument("sl2_change_of_basis: det[" + v1.str() + " " + v2.str() + "] != 1");
    }
    // Columns are m(e1) = d e1' - b e2' and m(e2) = -c e1' + a e2'.
    IntMatrix m{{d, -c}, {-b, a}};
    LatticeMap map(m, omega, SkewForm::rank2(omega(v1, v2)));
    return {map, map.dual()};
}

}  // namespace mutpot
