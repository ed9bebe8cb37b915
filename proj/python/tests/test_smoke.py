import os

import pytest

skewbrace = pytest.importorskip("skewbrace")

FIXTURES = os.environ.get("FIXTURES_DIR", os.path.join(
    os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    return skewbrace.load(os.path.join(FIXTURES, f"{name}.cocycle.json"))


def test_trivial_brace_roundtrip():
    cyc = skewbrace.groups_of_order(6)[0]
    b = skewbrace.trivial(cyc)
    assert b.order == 6
    again = skewbrace.from_json(b.to_json())
    assert again.add_table == b.add_table
    assert again.mul_table == b.mul_table


def test_fixture_structure():
    b = fixture("b16")
    assert b.order == 16
    assert skewbrace.centre(b) == [0, 10]
    assert skewbrace.fitting(b) == list(range(16))
    assert skewbrace.frattini(b) == [0, 2, 8, 10]
    assert skewbrace.nilpotency_class(b) == 3
    ideals = skewbrace.substructures(b, "ideal")
    assert len(ideals) == 9
    assert all(s["ideal"] for s in ideals)


def test_commutator_and_star_span():
    b = fixture("b16")
    ideal = [0, 1, 2, 3, 8, 9, 10, 11]
    assert skewbrace.star_span(b, ideal, ideal) == [0, 8]
    assert skewbrace.commutator(b, ideal, ideal) == [0, 2, 8, 10]
    with pytest.raises(skewbrace.BraceError):
        skewbrace.commutator(b, [0, 1], [0, 1])


def test_series_and_subideal():
    b = fixture("b24")
    der = skewbrace.derived_series(b)
    assert der["stabilised"]
    sub = skewbrace.subideal_series(b, [0, 4, 8, 12, 16, 20])
    assert sub["subideal"] and sub["defect"] == 2
    assert not skewbrace.sylow(b)["decomposes"]


def test_enumeration_and_ybe():
    assert len(skewbrace.enumerate_braces(6)) == 6
    sol = skewbrace.ybe_solution(fixture("b32c"))
    assert sol["braid"] and sol["nondegenerate"]


def test_validation_rejects_bad_tables():
    cyc = skewbrace.groups_of_order(4)[0]
    bad = [row[:] for row in cyc]
    bad[1][2] = bad[1][3]
    with pytest.raises(skewbrace.BraceError):
        skewbrace.validate(4, bad, cyc)


def test_manifest_runs_clean():
    report = skewbrace.run_manifest(os.path.join(FIXTURES, "manifest.json"))
    assert report["all_pass"]
