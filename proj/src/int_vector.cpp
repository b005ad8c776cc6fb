#include "mutpot/int_vector.hpp"

#include <numeric>

#include "mutpot/rational.hpp"

namespace mutpot {

RankMismatch::RankMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

Coord pair(const ExponentVector& m, const LatticeVector& v) {
    require_same_rank(m.rank(), v.rank());
    Coord s = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) s += m[i] * v[i];
    return s;
}

Coord gcd_of(std::span<const Coord> coords) {
    Coord g = 0;
    for (Coord c : coords) g = std::gcd(g, c);
    return g;
}

ExtendedGcd extended_gcd(Coord a, Coord b) {
    Coord old_r = a, r = b;
    Coord old_s = 1, s = 0;
    Coord old_t = 0, t = 1;
    while (r != 0) {
        Coord q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Coord>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Coord>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require_same_rank(cols_, o.rows_);
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Coord a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    }
    return p;
}

std::vector<Coord> IntMatrix::apply(std::span<const Coord> v) const {
    require_same_rank(cols_, v.size());
    std::vector<Coord> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    }
    return out;
}

bool IntMatrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
    }
    return true;
}

namespace {

// Gauss-Jordan over Q on [A | I]; returns determinant and fills the inverse
// when the matrix is nonsingular.
Rational gauss_jordan(const IntMatrix& a, std::vector<std::vector<Rational>>* inverse) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
        m[i][n + i] = Rational(1);
    }
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        Rational p = m[col][col];
        det *= p;
        Rational inv = p.inverse();
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    if (inverse) {
        inverse->assign(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) (*inverse)[i][j] = m[i][n + j];
        }
    }
    return det;
}

}  // namespace

Coord IntMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    Rational d = gauss_jordan(*this, nullptr);
    return d.numerator().get_si();
}

IntMatrix IntMatrix::unimodular_inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::vector<std::vector<Rational>> inv;
    Rational d = gauss_jordan(*this, &inv);
    if (d != Rational(1) && d != Rational(-1)) {
        throw std::domain_error("matrix " + str() + " is not unimodular (det " + d.str() + ")");
    }
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = inv[i][j].numerator().get_si();
    }
    return out;
}

std::vector<std::vector<Coord>> IntMatrix::to_rows() const {
    std::vector<std::vector<Coord>> out(rows_, std::vector<Coord>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
}

std::string IntMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ',';
            s += std::to_string((*this)(i, j));
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace mutpot
