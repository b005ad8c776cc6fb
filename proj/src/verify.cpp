#include "mutpot/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "mutpot/upper_bound.hpp"

namespace mutpot {

void SuiteResult::record(bool pass, const std::string& what) {
    ++total;
    if (pass) {
        ++passed;
    } else if (failures.size() < 10) {
        failures.push_back(what);
    }
}

namespace {

using Rng = std::mt19937_64;

Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }

Coord nonzero(Rng& rng, Coord bound) {
    Coord c = uniform(rng, 1, bound);
    return uniform(rng, 0, 1) ? c : -c;
}

LaurentPoly random_laurent(Rng& rng, int max_terms = 8, Coord max_exp = 4, Coord max_coef = 5) {
    LaurentPoly w(2);
    const Coord n = uniform(rng, 1, max_terms);
    for (Coord i = 0; i < n; ++i) {
        w.add_term(ExponentVector{uniform(rng, -max_exp, max_exp), uniform(rng, -max_exp, max_exp)},
                   Rational(nonzero(rng, max_coef)));
    }
    return w;
}

LatticeVector random_nonzero_vector(Rng& rng, Coord bound) {
    for (;;) {
        LatticeVector v{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (!v.is_zero()) return v;
    }
}

LatticeVector random_primitive(Rng& rng, Coord bound) {
    for (;;) {
        LatticeVector v = random_nonzero_vector(rng, bound);
        if (is_primitive(v)) return v;
    }
}

// Columns of a random matrix with determinant +-1.
std::pair<LatticeVector, LatticeVector> random_unimodular_pair(Rng& rng) {
    for (;;) {
        LatticeVector a = random_primitive(rng, 3);
        auto [g, s, t] = extended_gcd(a[0], a[1]);
        (void)g;
        // a0*s + a1*t = 1, so b = (-t, s) + j a has det[a b] = 1.
        const Coord j = uniform(rng, -1, 1);
        LatticeVector b{-t + j * a[0], s + j * a[1]};
        if (std::max(std::abs(b[0]), std::abs(b[1])) > 4) continue;
        if (uniform(rng, 0, 1)) b = -b;
        return uniform(rng, 0, 1) ? std::pair{a, b} : std::pair{b, a};
    }
}

// W whose mutation along u (m times) is Laurent: every grade-l piece with
// m l < 0 carries the factor (1+X^c)^{-m l}.
LaurentPoly random_mutable(Rng& rng, const LatticeVector& u, const SkewForm& omega, int m, Coord max_coef = 5) {
    const ExponentVector c = i_omega(omega, u);
    LaurentPoly w(2);
    for (const auto& [l, piece] : grade_by(random_laurent(rng, 5, 3, max_coef), u)) {
        const Coord need = std::max<Coord>(0, -m * l);
        w += piece * LaurentPoly::one_plus(c).pow(static_cast<std::uint64_t>(need));
    }
    return w;
}

std::vector<Rational> random_point(Rng& rng) {
    std::vector<Rational> p;
    for (int i = 0; i < 2; ++i) p.emplace_back(nonzero(rng, 9), uniform(rng, 1, 7));
    return p;
}

std::string describe(const LaurentPoly& w, const LatticeVector& u, const SkewForm& omega, int m) {
    return "W=" + w.str() + " u=" + u.str() + " k=" + std::to_string(omega.rank2_k()) + " m=" + std::to_string(m);
}

SuiteResult suite_pl(const SuiteOptions&) {
    SuiteResult r{"pl", 0, 0, {}};
    const std::vector<LatticeVector> us{{0, 1}, {1, 0}, {1, 1}, {1, -1}, {2, 1}};
    for (Coord k = 1; k <= 3; ++k) {
        const SkewForm omega = SkewForm::rank2(k);
        for (const auto& u : us) {
            for (Coord x = -10; x <= 10; ++x) {
                for (Coord y = -10; y <= 10; ++y) {
                    const LatticeVector v{x, y};
                    const std::string tag = "k=" + std::to_string(k) + " u=" + u.str() + " v=" + v.str();
                    r.record(pl_mutate(omega, -u, pl_mutate(omega, u, v)) == reflect(omega, u, v),
                             "mu_{-u} mu_u != R_u " + tag);
                    r.record(pl_mutate_inv(omega, u, pl_mutate(omega, u, v)) == v &&
                                 pl_mutate(omega, u, pl_mutate_inv(omega, u, v)) == v,
                             "inverse " + tag);
                    r.record(reflect(-omega, u, reflect(omega, u, v)) == v, "reflection inverse " + tag);
                    for (Coord a = 1; a <= 3; ++a) {
                        for (Coord b = 1; b <= 3; ++b) {
                            LatticeVector it = v;
                            for (Coord i = 0; i < a * b * b; ++i) it = reflect(omega, u, it);
                            r.record(reflect(omega.scaled(a), b * u, v) == it,
                                     "scaling a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + tag);
                        }
                    }
                }
            }
        }
    }
    return r;
}

SuiteResult suite_birational(const SuiteOptions& o) {
    SuiteResult r{"birational", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 200;
    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPoly w = random_laurent(rng);
        const LatticeVector u = random_nonzero_vector(rng, 2);
        const SkewForm omega = SkewForm::rank2(uniform(rng, 1, 3));
        const BinomialRationalFn f = fn_mutate(w, u, omega);
        const bool back = fn_mutate(f, -u, -omega) == BinomialRationalFn(w);
        // mu_{-u} mu_u is the monomial map X^m -> X^{m + (u,m) i_omega(u)}.
        const ExponentVector c = i_omega(omega, u);
        LaurentPoly reflected(2);
        for (const auto& [m, coef] : w.terms()) reflected.add_term(m + pair(m, u) * c, coef);
        const bool refl = fn_mutate(f, -u, omega) == BinomialRationalFn(reflected);
        r.record(back && refl, describe(w, u, omega, 1) + (back ? "" : " (inverse)") + (refl ? "" : " (reflection)"));
    }
    return r;
}

SuiteResult suite_lemma(const SuiteOptions& o) {
    SuiteResult r{"lemma", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 500;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticeVector u = random_nonzero_vector(rng, 2);
        const SkewForm omega = SkewForm::rank2(uniform(rng, 1, 3));
        const int m = static_cast<int>(uniform(rng, 1, 3));
        LaurentPoly w = i % 2 ? random_laurent(rng) : random_mutable(rng, u, omega, m);
        if (i % 4 == 2) w.add_term(ExponentVector{uniform(rng, -3, 3), uniform(rng, -3, 3)}, Rational(1));

        // Oracle: clear the denominator (1+X^c)^L, divide exactly, and
        // confirm N = Q D at random rational points.
        const ExponentVector c = i_omega(omega, u);
        const auto pieces = grade_by(w, u);
        Coord lowest = 0;
        for (const auto& [l, piece] : pieces) lowest = std::min(lowest, m * l);
        const LaurentPoly d = LaurentPoly::one_plus(c).pow(static_cast<std::uint64_t>(-lowest));
        LaurentPoly num(2);
        for (const auto& [l, piece] : pieces) {
            num += piece * LaurentPoly::one_plus(c).pow(static_cast<std::uint64_t>(m * l - lowest));
        }
        bool oracle = false;
        if (auto q = exact_divide(num, d)) {
            oracle = true;
            for (int t = 0; t < 20; ++t) {
                const auto p = random_point(rng);
                oracle = oracle && evaluate(num, p) == evaluate(*q, p) * evaluate(d, p);
            }
        }
        const bool verdict = mutation_is_laurent(w, u, omega, m).laurent;
        r.record(verdict == oracle, describe(w, u, omega, m) + " verdict=" + (verdict ? "true" : "false"));
    }
    return r;
}

SuiteResult suite_bmatrix(const SuiteOptions& o) {
    SuiteResult r{"bmatrix", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 200;
    for (std::size_t i = 0; i < n; ++i) {
        const SkewForm omega = SkewForm::rank2(uniform(rng, 1, 3));
        std::vector<LatticeVector> v(static_cast<std::size_t>(uniform(rng, 1, 6)));
        for (auto& x : v) x = LatticeVector{uniform(rng, -5, 5), uniform(rng, -5, 5)};
        const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(v.size()) - 1));
        const IntMatrix b = b_matrix(v, omega);
        const IntMatrix mb = bfz_matrix_mutate(b, k);
        const bool commute = b_matrix(collection_mutate(v, k, omega), omega) == mb;
        const bool involutive = bfz_matrix_mutate(mb, k) == b;
        r.record(commute && involutive, "B=" + b.str() + " k=" + std::to_string(k));
    }
    return r;
}

SuiteResult suite_content(const SuiteOptions& o) {
    SuiteResult r{"content", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 200;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly p = random_laurent(rng, 6, 3, 30).scaled(Rational(uniform(rng, 1, 6)));
        LaurentPoly q = random_laurent(rng, 6, 3, 30).scaled(Rational(uniform(rng, 1, 6)));
        r.record(content(p * q) == content(p) * content(q), "P=" + p.str() + " Q=" + q.str());
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(1, n / 2); ++i) {
        const LatticeVector u = random_nonzero_vector(rng, 2);
        const SkewForm omega = SkewForm::rank2(uniform(rng, 1, 3));
        const int m = static_cast<int>(uniform(rng, 1, 3));
        const LaurentPoly w = random_mutable(rng, u, omega, m, 9);
        LaurentCheck lc = rf_as_laurent(fn_mutate_iter(w, u, omega, m));
        r.record(lc.is_laurent() && lc.laurent->has_integer_coefficients(), "integrality " + describe(w, u, omega, m));
    }
    return r;
}

struct RandomSeed {
    ExchangeCollection v{2};
    SkewForm omega = SkewForm::rank2(1);
};

RandomSeed random_shape(Rng& rng, SeedShape shape) {
    RandomSeed s;
    s.omega = SkewForm::rank2(nonzero(rng, 3));
    auto mult = [&] { return static_cast<int>(uniform(rng, 1, 3)); };
    switch (shape) {
        case SeedShape::one_vector: s.v.add(random_primitive(rng, 3), mult()); break;
        case SeedShape::opposite_pair: {
            const LatticeVector a = random_primitive(rng, 3);
            s.v.add(a, mult());
            s.v.add(-a, mult());
            break;
        }
        case SeedShape::unimodular_pair: {
            auto [a, b] = random_unimodular_pair(rng);
            s.v.add(a, mult());
            s.v.add(b, mult());
            break;
        }
    }
    return s;
}

// Non-collinear primitive pair spanning a sublattice of index > 1.
RandomSeed random_sublattice_pair(Rng& rng) {
    RandomSeed s;
    s.omega = SkewForm::rank2(uniform(rng, 1, 3));
    for (;;) {
        const LatticeVector a = random_primitive(rng, 2), b = random_primitive(rng, 2);
        const Coord det = a[0] * b[1] - a[1] * b[0];
        if (std::abs(det) < 2) continue;
        s.v.add(a, static_cast<int>(uniform(rng, 1, 2)));
        s.v.add(b, static_cast<int>(uniform(rng, 1, 2)));
        return s;
    }
}

LaurentPoly candidate(Rng& rng, const RandomSeed& s, std::size_t i) {
    if (i % 2 == 0) return sample_ub_element(s.v, s.omega, SampleBounds{}, rng());
    if (i % 4 == 1) return random_laurent(rng);
    // A ring element nudged by one monomial: usually just outside.
    LaurentPoly w = sample_ub_element(s.v, s.omega, SampleBounds{}, rng());
    w.add_term(ExponentVector{uniform(rng, -2, 2), uniform(rng, -2, 2)}, Rational(nonzero(rng, 2)));
    return w;
}

SuiteResult suite_ub(const SuiteOptions& o) {
    SuiteResult r{"ub", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 200;
    for (SeedShape shape : {SeedShape::one_vector, SeedShape::opposite_pair, SeedShape::unimodular_pair}) {
        for (std::size_t i = 0; i < n; ++i) {
            const RandomSeed s = random_shape(rng, shape);
            const LaurentPoly w = candidate(rng, s, i);
            const bool by_v = check_property_V(w, s.v, s.omega).verdict;
            const bool by_gen = member_via_generators(w, s.v, s.omega);
            const bool sampled_ok = i % 2 != 0 || by_v;
            r.record(by_v == by_gen && sampled_ok, to_string(shape) + " V=" + s.v.str() + " k=" +
                                                       std::to_string(s.omega.rank2_k()) + " W=" + w.str());
        }
    }
    return r;
}

SuiteResult suite_vlemma(const SuiteOptions& o) {
    SuiteResult r{"vlemma", 0, 0, {}};
    Rng rng(o.rng_seed);
    const std::size_t n = o.cases ? o.cases : 500;
    for (std::size_t i = 0; i < n; ++i) {
        RandomSeed s;
        switch (i % 4) {
            case 0: s = random_shape(rng, SeedShape::opposite_pair); break;
            case 1: s = random_shape(rng, SeedShape::unimodular_pair); break;
            case 2: s = random_sublattice_pair(rng); break;
            default: s = random_shape(rng, SeedShape::one_vector); break;
        }
        const auto dirs = s.v.ordered();
        const LatticeVector d = dirs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(dirs.size()) - 1))];
        const LaurentPoly w = candidate(rng, s, i / 4);
        const CSeed seed = CSeed::base(s.omega, s.v);
        r.record(verify_vlemma(seed, d, w),
                 "V=" + s.v.str() + " k=" + std::to_string(s.omega.rank2_k()) + " d=" + d.str() + " W=" + w.str());
    }
    return r;
}

SuiteResult suite_identities(const SuiteOptions&) {
    SuiteResult r{"identities", 0, 0, {}};
    for (Coord k = 1; k <= 3; ++k) {
        for (int m2 = 1; m2 <= 2; ++m2) {
            const RingIdentityReport rep = verify_ring_identities(k, m2);
            r.record(rep.ok(), "k=" + std::to_string(k) + " m2=" + std::to_string(m2));
        }
    }
    return r;
}

const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>> suites{
        {"pl", suite_pl},           {"birational", suite_birational}, {"lemma", suite_lemma},
        {"bmatrix", suite_bmatrix}, {"content", suite_content},       {"ub", suite_ub},
        {"vlemma", suite_vlemma},   {"identities", suite_identities},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) return fn(options);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options) {
    if (name != "all") return {run_suite(name, options)};
    std::vector<SuiteResult> out;
    for (const auto& [n, fn] : registry()) out.push_back(fn(options));
    return out;
}

}  // namespace mutpot
