#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mutpot/orbit.hpp"
#include "mutpot/seed_file.hpp"
#include "mutpot/upper_bound.hpp"

using namespace mutpot;
using testing::term;

TEST_CASE("parse_expression examples") {
    Expression a = parse_expression("x1 + x2 + 1/(x1*x2)");
    REQUIRE(std::holds_alternative<LaurentPoly>(a));
    CHECK(std::get<LaurentPoly>(a) == term(1, 0) + term(0, 1) + term(-1, -1));

    Expression b = parse_expression("(1+x1)^2/x2");
    REQUIRE(std::holds_alternative<LaurentPoly>(b));
    CHECK(std::get<LaurentPoly>(b) == term(0, -1) + term(1, -1, 2) + term(2, -1));

    Expression c = parse_expression("1/(1+x1)");
    REQUIRE(std::holds_alternative<BinomialRationalFn>(c));
    const auto& f = std::get<BinomialRationalFn>(c);
    CHECK(f.numerator() == term(0, 0));
    CHECK(f.denominators().at(ExponentVector{1, 0}) == 1);
}

TEST_CASE("parser precedence and literals") {
    using testing::lp;
    CHECK(lp("-x1^2") == term(2, 0, -1));
    CHECK(lp("2*x1^-1") == term(-1, 0, 2));
    CHECK(lp("x1^(-2)") == term(-2, 0));
    CHECK(lp("1 - 2 - 3") == LaurentPoly::constant(2, Rational(-4)));
    CHECK(lp("3/4*x1") == LaurentPoly::monomial(ExponentVector{1, 0}, Rational(3, 4)));
    CHECK(lp("x1/x2/x2") == term(1, -2));
    CHECK(lp("(x1+x2)^0") == term(0, 0));
    CHECK(lp("  x1 *  ( x2 + 1 ) ") == term(1, 1) + term(1, 0));
    CHECK(lp("x2 / (2*x1*(1+x1))*(1+x1)") == LaurentPoly::monomial(ExponentVector{-1, 1}, Rational(1, 2)));
    CHECK(lp("(1+x1)^-2*(1+x1)^3") == term(0, 0) + term(1, 0));
    CHECK(lp("1/(x1+x1)") == LaurentPoly::monomial(ExponentVector{-1, 0}, Rational(1, 2)));
    CHECK(parse_function("1/(x1^-1+1)") == parse_function("x1/(1+x1)"));
}

TEST_CASE("parse errors carry positions") {
    auto pos = [](std::string_view text) -> std::size_t {
        try {
            parse_expression(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 9999;
    };
    CHECK(pos("x1 + ") == 5);
    CHECK(pos("x1 + * x2") == 5);
    CHECK(pos("x3") == 0);
    CHECK(pos("1/(1+x1+x2)") == 2);
    CHECK(pos("(x1") == 3);
    CHECK(pos("x1 x2") == 3);
    CHECK(pos("x1^x2") == 3);
    CHECK(pos("1/0") == 2);
    CHECK(pos("") == 0);
    CHECK(pos("1/(1+2*x1)") == 2);
    CHECK_NOTHROW(parse_expression("x3", 3));
}

TEST_CASE("rendered polynomials parse back") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly w = testing::random_laurent(rng);
        CHECK(testing::lp(w.str()) == w);
        const BinomialRationalFn f(w, {BinomialFactor{ExponentVector{1, -1}, 2}, BinomialFactor{ExponentVector{0, 3}, 1}});
        CHECK(parse_function(f.str()) == f);
    }
}

TEST_CASE("seed documents round-trip") {
    const std::string text =
        "# a comment\n"
        "name = demo\n"
        "comment = two lines of metadata\n"
        "rank = 2\n"
        "form = k 2\n"
        "vector = (0,-1) x 3\n"
        "vector = (0,1) x 1\n"
        "potential = x1 + x2^-1\n";
    const SeedDocument doc = parse_seed(text);
    CHECK(doc.name == "demo");
    CHECK(doc.form == SkewForm::rank2(2));
    CHECK(doc.collection.multiplicity(LatticeVector{0, -1}) == 3);
    CHECK(render_seed(doc) == text);
    CHECK(parse_seed(render_seed(doc)) == doc);

    const SeedDocument loose = parse_seed("vector=(0,1)\nform = [[0,1],[-1,0]]\n\nvector = ( 0 , 1 ) x 2\nrank=2");
    CHECK(loose.collection.multiplicity(LatticeVector{0, 1}) == 3);
    CHECK_FALSE(loose.form_shorthand);
    CHECK(render_seed(loose) == "rank = 2\nform = [[0,1],[-1,0]]\nvector = (0,1) x 3\n");
    CHECK(parse_seed(render_seed(loose)) == loose);
}

TEST_CASE("random seed documents round-trip") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<Coord> c(-4, 4), m(1, 3), n(0, 4);
    for (int i = 0; i < 100; ++i) {
        SeedDocument doc;
        doc.form = SkewForm::rank2(c(rng));
        doc.form_shorthand = i % 3 != 0;
        for (Coord j = n(rng); j > 0; --j) doc.collection.add(LatticeVector{c(rng), c(rng)}, static_cast<int>(m(rng)));
        if (i % 2) doc.potential = BinomialRationalFn(testing::random_laurent(rng), {BinomialFactor{ExponentVector{1, 2}, 1}});
        if (i % 4 == 1) doc.name = "seed-" + std::to_string(i);
        if (i % 5 == 2) doc.comments = {" generated", "no space"};
        CHECK(parse_seed(render_seed(doc)) == doc);
        CHECK(render_seed(parse_seed(render_seed(doc))) == render_seed(doc));
    }
}

TEST_CASE("seed file errors") {
    CHECK_THROWS_AS(parse_seed("rank = 2\n"), SeedFileError);
    CHECK_THROWS_AS(parse_seed("form = k 1\nvector = (1,2,3)\n"), SeedFileError);
    CHECK_THROWS_AS(parse_seed("form = k 1\nform = k 2\n"), SeedFileError);
    CHECK_THROWS_AS(parse_seed("form = [[0,1],[1,0]]\n"), SeedFileError);
    CHECK_THROWS_AS(parse_seed("form = k 1\nshape = 3\n"), SeedFileError);
    CHECK_THROWS_AS(parse_seed("form = k 1\npotential = 1/(1+x1+x2)\n"), SeedFileError);
    try {
        parse_seed("form = k 1\nvector = (1,x)\n");
        FAIL("expected an error");
    } catch (const SeedFileError& e) {
        CHECK(e.line() == 2);
    }
    SeedDocument three = parse_seed("rank = 3\nform = [[0,1,0],[-1,0,2],[0,-2,0]]\nvector = (1,0,1)\n");
    CHECK(three.rank == 3);
    CHECK(parse_seed(render_seed(three)) == three);
}

TEST_CASE("orbit of a single vector") {
    ExchangeCollection v(2);
    v.add(LatticeVector{0, 1});
    const VSeed seed{SkewForm::rank2(1), v, BinomialRationalFn(LaurentPoly(2))};
    const OrbitGraph g = explore_orbit(seed, 2);
    REQUIRE(g.nodes.size() == 2);
    CHECK(g.nodes[0].collection.str() == "{(0,1)x1}");
    CHECK(g.nodes[1].collection.str() == "{(0,-1)x1}");
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].from == 0);
    CHECK(g.edges[0].to == 1);
    CHECK(g.edges[0].direction == LatticeVector{0, 1});
    CHECK(g.edges[1].from == 1);
    CHECK(g.edges[1].to == 0);
    CHECK(g.edges[1].direction == LatticeVector{0, -1});
    CHECK_FALSE(g.truncated);

    const std::string dot = to_dot(g);
    CHECK(dot ==
          "digraph orbit {\n"
          "  n0 [label=\"{(0,1)x1}\"];\n"
          "  n1 [label=\"{(0,-1)x1}\"];\n"
          "  n0 -> n1 [label=\"(0,1)\"];\n"
          "  n1 -> n0 [label=\"(0,-1)\"];\n"
          "}\n");
    CHECK(to_dot(explore_orbit(seed, 2)) == dot);

    const OrbitGraph single = explore_orbit(seed, 0);
    CHECK(single.nodes.size() == 1);
    CHECK(single.edges.empty());
    CHECK(single.truncated);
    CHECK(to_dot(single) == "digraph orbit {\n  n0 [label=\"{(0,1)x1}\"];\n}\n");
}

TEST_CASE("orbit invariants") {
    ExchangeCollection v(2);
    v.add(LatticeVector{1, 0});
    v.add(LatticeVector{0, 1});
    v.add(LatticeVector{1, 1});
    const SkewForm omega = SkewForm::rank2(1);
    const OrbitGraph g = explore_orbit(VSeed{omega, v, BinomialRationalFn(LaurentPoly(2))}, 3);
    std::set<std::string> seen;
    for (const auto& n : g.nodes) CHECK(seen.insert(canonical_encoding(omega, n.collection)).second);
    for (const auto& e : g.edges) {
        CHECK(g.nodes[e.from].collection.contains(e.direction));
        CHECK(collection_mutate(g.nodes[e.from].collection, e.direction, omega) == g.nodes[e.to].collection);
        CHECK(g.nodes[e.to].depth <= g.nodes[e.from].depth + 1);
    }
    CHECK(g.depth_reached == 3);
}

TEST_CASE("orbit with potentials") {
    ExchangeCollection v(2);
    v.add(LatticeVector{0, 1});
    v.add(LatticeVector{0, -1});
    const SkewForm omega = SkewForm::rank2(1);
    const VSeed seed{omega, v, testing::rf("x2*(1+x1) + (1+x1)/x2")};
    const OrbitGraph g = explore_orbit(seed, 3, true);
    for (const auto& n : g.nodes) {
        REQUIRE(n.potential);
        CHECK(check_property_V(*n.potential, n.collection, omega).verdict);
    }
}
