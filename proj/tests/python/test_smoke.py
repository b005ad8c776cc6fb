from fractions import Fraction
from pathlib import Path

import pytest

import mutpot

SEEDS = Path(__file__).resolve().parents[2] / "data" / "seeds"


def test_parse_returns_laurent_or_rational_function():
    w = mutpot.parse("x1 + x2 + 1/(x1*x2)")
    assert isinstance(w, mutpot.Laurent)
    assert w.terms() == {(1, 0): 1, (0, 1): 1, (-1, -1): 1}
    f = mutpot.parse("1/(1+x1)")
    assert isinstance(f, mutpot.RationalFunction)
    assert not f.is_laurent()
    assert f.denominators == {(1, 0): 1}


def test_parse_error_position():
    with pytest.raises(mutpot.ParseError):
        mutpot.parse("x1 + ")
    with pytest.raises(ValueError):
        mutpot.parse("1/(1+x1+x2)")


def test_arithmetic_and_evaluation():
    w = mutpot.Laurent("(1+x1)^2/x2")
    assert w == mutpot.Laurent("1/x2 + 2*x1/x2 + x1^2/x2")
    assert (w * mutpot.Laurent("x2")) ** 2 == mutpot.Laurent("(1+x1)^4")
    assert w.evaluate([Fraction(1, 2), 3]) == Fraction(9, 4) / 3
    assert mutpot.Laurent("6*x1 + 4*x2").content() == 2


def test_fn_mutate_round_trip():
    w = mutpot.Laurent("x1 + x2^2 - 3/x2")
    f = mutpot.fn_mutate(w, (0, 1), 2)
    assert mutpot.fn_mutate(f, (0, -1), -2) == w


def test_potential_mutate_display_convention():
    w = mutpot.Laurent("x2 + (1+x1)/x2")
    assert mutpot.potential_mutate(w, (0, 1), 1) == mutpot.Laurent("x2*(1+x1) + 1/x2")


def test_mutation_is_laurent():
    assert mutpot.mutation_is_laurent("x1 + x2", (0, 1), 1)["laurent"]
    verdict = mutpot.mutation_is_laurent("1/x2", (0, 1), 1)
    assert not verdict["laurent"]
    assert verdict["failing_level"] == -1


def test_pl_and_collections():
    assert mutpot.pl_mutate(1, (1, 0), (0, 1)) == (1, 1)
    assert mutpot.reflect(1, (0, 1), (1, 0)) == (1, -1)
    assert mutpot.collection_mutate([(0, 1)], (0, 1), 1) == [((0, -1), 1)]
    b = mutpot.b_matrix([(1, 0), (0, 1), (1, 1)], 1)
    assert mutpot.bfz_matrix_mutate(mutpot.bfz_matrix_mutate(b, 1), 1) == b


def test_membership_and_generators():
    report = mutpot.check_property_v("x2 + 1/x2", {(0, 1): 1}, 1)
    assert report["verdict"] is False
    gens = mutpot.generators({(0, 1): 2}, 1)
    assert gens["shape"] == "one-vector"
    assert set(gens["generators"]) == {"x1", "x1^-1", "x2", str(mutpot.Laurent("(1+x1)^2/x2"))}
    assert mutpot.member_via_generators("x2 + (1+x1)^3/x2", {(0, 1): 3}, 1)
    assert not mutpot.member_via_generators("x1^-1", [(1, 0), (0, 1)], 1)


def test_sampled_elements_are_members_and_vlemma_holds():
    coll = [((0, 1), 1), ((0, -1), 2)]
    for seed in range(5):
        w = mutpot.sample_ub_element(coll, 2, seed=seed)
        assert mutpot.check_property_v(w, coll, 2)["verdict"]
        assert mutpot.verify_vlemma(coll, 2, (0, 1), w)


def test_ring_identities():
    r = mutpot.verify_ring_identities(3, 2)
    assert r["ok"]
    assert not r["second_identity_variant"]


def test_bundled_seeds():
    for path in sorted(SEEDS.glob("*.seed")):
        text = path.read_text()
        seed = mutpot.Seed.parse(text)
        assert seed.render() == text
        assert seed.check_property_v()["verdict"]
    seed = mutpot.Seed.load(str(SEEDS / "opposite-pair-k1.seed"))
    assert seed.collection == [((0, -1), 1), ((0, 1), 1)]
    mutated = seed.mutate((0, 1))
    assert mutated.check_property_v()["verdict"]
    assert seed.orbit_dot(0).startswith("digraph orbit {")


def test_seed_errors():
    with pytest.raises(mutpot.SeedFileError):
        mutpot.Seed.parse("rank = 2\n")


def test_unsupported_shape():
    with pytest.raises(mutpot.UnsupportedShape):
        mutpot.generators([(1, 0), (0, 1), (1, 1)], 1)


def test_suites():
    assert "vlemma" in mutpot.suite_names()
    result = mutpot.run_suite("bmatrix", cases=20, rng_seed=3)
    assert result["passed"] == result["total"] == 20
