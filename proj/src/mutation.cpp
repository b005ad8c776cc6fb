#include "mutpot/mutation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mutpot {

DirectionNotInCollection::DirectionNotInCollection(const LatticeVector& d)
    : std::invalid_argument("direction " + d.str() + " is not in the exchange collection") {}

ExchangeCollection::ExchangeCollection(std::size_t rank, const std::vector<std::pair<LatticeVector, int>>& entries)
    : rank_(rank) {
    for (const auto& [v, m] : entries) add(v, m);
}

ExchangeCollection ExchangeCollection::from_list(std::size_t rank, const std::vector<LatticeVector>& vectors) {
    ExchangeCollection c(rank);
    for (const auto& v : vectors) c.add(v);
    return c;
}

void ExchangeCollection::add(const LatticeVector& v, int multiplicity) {
    require_same_rank(v.rank(), rank_);
    if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (multiplicity == 0) return;
    mult_[v] += multiplicity;
}

void ExchangeCollection::remove_one(const LatticeVector& v) {
    auto it = mult_.find(v);
    if (it == mult_.end()) throw DirectionNotInCollection(v);
    if (--it->second == 0) mult_.erase(it);
}

int ExchangeCollection::multiplicity(const LatticeVector& v) const {
    auto it = mult_.find(v);
    return it == mult_.end() ? 0 : it->second;
}

int ExchangeCollection::size() const {
    int n = 0;
    for (const auto& [v, m] : mult_) n += m;
    return n;
}

std::vector<LatticeVector> ExchangeCollection::ordered() const {
    std::vector<LatticeVector> out;
    for (const auto& [v, m] : mult_) out.insert(out.end(), static_cast<std::size_t>(m), v);
    return out;
}

bool ExchangeCollection::is_subcollection_of(const ExchangeCollection& other) const {
    for (const auto& [v, m] : mult_) {
        if (m > other.multiplicity(v)) return false;
    }
    return true;
}

bool ExchangeCollection::all_primitive() const {
    for (const auto& [v, m] : mult_) {
        if (!is_primitive(v)) return false;
    }
    return true;
}

std::string ExchangeCollection::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, m] : mult_) {
        if (!first) s += ", ";
        first = false;
        s += v.str() + "x" + std::to_string(m);
    }
    return s + "}";
}

namespace {

LaurentPoly binomial_power(const ExponentVector& c, Coord e) {
    return LaurentPoly::one_plus(c).pow(static_cast<std::uint64_t>(e));
}

// Recognizes alpha * X^p * (1 + X^q).
struct UnitTimesBinomial {
    Rational alpha;
    ExponentVector shift;
    ExponentVector direction;
};

std::optional<UnitTimesBinomial> as_unit_times_binomial(const LaurentPoly& p) {
    if (p.size() != 2) return std::nullopt;
    auto lo = p.terms().begin();
    auto hi = std::next(lo);
    if (lo->second != hi->second) return std::nullopt;
    return UnitTimesBinomial{lo->second, lo->first, hi->first - lo->first};
}

BinomialRationalFn mutate_scaled(const BinomialRationalFn& f, const LatticeVector& u, const SkewForm& omega,
                                 Coord times) {
    require_same_rank(f.rank(), u.rank());
    const ExponentVector c = i_omega(omega, u);
    if (c.is_zero() || times == 0) return f;

    // Numerator: sum_l N_l (1+X^c)^{times*l} over the common denominator (1+X^c)^L.
    const auto pieces = grade_by(f.numerator(), u);
    Coord lowest = 0;
    for (const auto& [l, piece] : pieces) lowest = std::min(lowest, times * l);
    const Coord common = -lowest;

    LaurentPoly numerator(f.rank());
    for (const auto& [l, piece] : pieces) numerator += piece * binomial_power(c, times * l + common);

    std::vector<BinomialFactor> denominators;
    if (common > 0) denominators.push_back({c, static_cast<int>(common)});

    Rational scale(1);
    ExponentVector unit_shift(f.rank());
    std::vector<std::pair<LaurentPoly, int>> pending;

    for (const auto& [b, e] : f.denominators()) {
        const Coord level = pair(b, u);
        if (level == 0) {
            denominators.push_back({b, e});
            continue;
        }
        // mu(1+X^b) = P / (1+X^c)^t with P = (1+X^c)^t + X^b (1+X^c)^{t + times*level}.
        const Coord t = std::max<Coord>(0, -times * level);
        LaurentPoly p = binomial_power(c, t) + binomial_power(c, t + times * level).shifted(b);
        numerator *= binomial_power(c, t * e);
        if (auto ub = as_unit_times_binomial(p)) {
            scale *= ub->alpha.pow(e);
            unit_shift += static_cast<Coord>(e) * ub->shift;
            denominators.push_back({ub->direction, e});
        } else {
            pending.emplace_back(std::move(p), e);
        }
    }

    for (const auto& [p, e] : pending) {
        for (int i = 0; i < e; ++i) {
            auto q = exact_divide(numerator, p);
            if (!q) {
                throw OutsideBinomialClass("mutation along " + u.str() + " produces the non-binomial denominator " +
                                           p.str());
            }
            numerator = std::move(*q);
        }
    }

    BinomialRationalFn out(numerator, denominators);
    return out.divided_by(scale, unit_shift, {});
}

}  // namespace

BinomialRationalFn fn_mutate(const BinomialRationalFn& f, const LatticeVector& u, const SkewForm& omega) {
    return mutate_scaled(f, u, omega, 1);
}

BinomialRationalFn fn_mutate_iter(const BinomialRationalFn& f, const LatticeVector& u, const SkewForm& omega,
                                  int times) {
    if (times < 0) throw std::invalid_argument("fn_mutate_iter: negative repetition count");
    return mutate_scaled(f, u, omega, times);
}

BinomialRationalFn potential_mutate(const BinomialRationalFn& w, const LatticeVector& d, const SkewForm& omega,
                                    int times) {
    return fn_mutate_iter(w, d, -omega, times);
}

std::vector<BinomialRationalFn> coordinate_images(const LatticeVector& u, const SkewForm& omega) {
    std::vector<BinomialRationalFn> out;
    for (std::size_t i = 0; i < omega.rank(); ++i) {
        out.push_back(fn_mutate(LaurentPoly::variable(omega.rank(), i), u, omega));
    }
    return out;
}

std::vector<BinomialRationalFn> display_coordinate_images(const LatticeVector& u, const SkewForm& omega) {
    return coordinate_images(-u, omega);
}

ExchangeCollection collection_mutate(const ExchangeCollection& v, const LatticeVector& d, const SkewForm& omega) {
    if (!v.contains(d)) throw DirectionNotInCollection(d);
    ExchangeCollection out(v.rank());
    for (const auto& [w, m] : v.multiplicities()) {
        if (w == d) {
            out.add(-d, 1);
            out.add(d, m - 1);
        } else {
            out.add(pl_mutate(omega, d, w), m);
        }
    }
    return out;
}

std::vector<LatticeVector> collection_mutate(const std::vector<LatticeVector>& v, std::size_t k,
                                             const SkewForm& omega) {
    if (k >= v.size()) throw std::out_of_range("collection_mutate: index out of range");
    std::vector<LatticeVector> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(i == k ? -v[k] : pl_mutate(omega, v[k], v[i]));
    return out;
}

SeedValidation validate(const SkewForm& omega, const ExchangeCollection& v) {
    return {v.all_primitive(), !omega.is_zero()};
}

CSeed CSeed::base(SkewForm form, ExchangeCollection collection) {
    CSeed s{std::move(form), std::move(collection), {}};
    for (std::size_t i = 0; i < s.form.rank(); ++i) s.cluster.emplace_back(LaurentPoly::variable(s.form.rank(), i));
    return s;
}

bool CSeed::is_base_cluster() const {
    if (cluster.size() != form.rank()) return false;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        if (!(cluster[i] == BinomialRationalFn(LaurentPoly::variable(form.rank(), i)))) return false;
    }
    return true;
}

VSeed vseed_mutate(const VSeed& seed, const LatticeVector& d) {
    if (!seed.collection.contains(d)) throw DirectionNotInCollection(d);
    return {seed.form, collection_mutate(seed.collection, d, seed.form), potential_mutate(seed.potential, d, seed.form)};
}

CSeed cseed_mutate(const CSeed& seed, const LatticeVector& d) {
    if (!seed.collection.contains(d)) throw DirectionNotInCollection(d);
    CSeed out{seed.form, collection_mutate(seed.collection, d, seed.form), {}};
    for (const auto& y : seed.cluster) out.cluster.push_back(fn_mutate(y, d, seed.form));
    return out;
}

IntMatrix b_matrix(const std::vector<LatticeVector>& v, const SkewForm& omega) {
    IntMatrix b(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) b(i, j) = omega(v[i], v[j]);
    }
    return b;
}

IntMatrix bfz_matrix_mutate(const IntMatrix& b, std::size_t k) {
    if (!b.is_square()) throw std::invalid_argument("exchange matrix must be square");
    if (k >= b.rows()) throw std::out_of_range("bfz_matrix_mutate: index out of range");
    IntMatrix out(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
            } else {
                const Coord bik = b(i, k), bkj = b(k, j);
                out(i, j) = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    }
    return out;
}

}  // namespace mutpot
