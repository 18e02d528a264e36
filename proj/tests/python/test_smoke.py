from fractions import Fraction

import pytest

import oortscan


def test_classify_dihedral_passes():
    v = oortscan.classify("D:18", 3)
    assert v["shape"] == "D18"
    assert v["passes"]
    assert v["local"] == "pass"
    assert v["forbidden_quotients"] == []


def test_classify_quaternion_fails_with_witness():
    v = oortscan.classify("SL23", 2)
    assert not v["oort_candidate"]
    assert v["witness"] == "Q8"
    assert v["corollaries"]["sylow2_cyclic_or_dihedral"] == "fail"


def test_klein_from_spec_text():
    v = oortscan.classify_spec("degree 4\n(0 1)(2 3)\n(0 2)(1 3)\n", 2)
    assert v["shape"] == "D4"
    assert "C2^2" in v["shape_aliases"]
    assert v["passes"]


def test_forbidden_quotient_reported():
    v = oortscan.classify("prod(D:6,C:5)", 3)
    assert v["local"] == "fail"
    assert 4 in [h["type"] for h in v["forbidden_quotients"]]


def test_structure_helpers():
    assert oortscan.recognize("EA:2^2") == "D4"
    assert oortscan.subgroup_count("S4") == 30
    assert oortscan.group_order("sd(EA:3^2,2,inv)") == 18
    assert oortscan.forbidden_fixture(3, 1) == "EA:3^2"
    text = oortscan.make("Q:8")
    assert oortscan.classify_spec(text, 2)["shape"] == "Q8"


def test_genus():
    assert oortscan.artin_schreier_genus(3, 4) == 3
    assert oortscan.wild_genus("order 8\nchar 2\npoint e=8 filtration=8,8,2,2,2,2\n") == 2
    assert oortscan.tame_genus("order 2\npoint e=2 count=6\n") == 2
    assert oortscan.different_exponent([8, 8, 2, 2, 2, 2], 2) == 18


def test_filtrations():
    assert oortscan.upper_jumps([8, 8, 2, 2, 2, 2], 2) == [(Fraction(1), 2), (Fraction(2), 1)]
    assert oortscan.upper_jumps([8, 8, 4, 2], 2)[1][0] == Fraction(3, 2)
    assert oortscan.hasse_arf_check([8, 8, 2, 2, 2, 2], 2, 2)
    assert not oortscan.hasse_arf_check([8, 8, 2, 2], 2, 2)


def test_scenarios():
    for name in oortscan.scenario_names():
        assert oortscan.scenario(name)["obstruction"]
    r = oortscan.scenario("odd_type4_lp", p=3)
    assert r["values"]["charp.genus_Y"] == "3"


def test_errors():
    with pytest.raises(oortscan.ParseError):
        oortscan.classify("Z:3", 2)
    with pytest.raises(oortscan.UnknownScenario):
        oortscan.scenario("missing")
    with pytest.raises(oortscan.OortscanError):
        oortscan.upper_jumps([8, 6], 2)


def test_corpus_smoke_matches():
    rows = oortscan.corpus("smoke", [2], 2)
    assert rows
    assert all(r["status"] == "MATCH" for r in rows)
