from fractions import Fraction

import pytest

import hypermod


def test_catalog_counts():
    cat = hypermod.catalog()
    sizes = {g["id"]: len(g["entries"]) for g in cat["groups"]}
    assert (sizes["T1"], sizes["T2"], sizes["T3"]) == (42, 23, 13)


def test_series_heads():
    assert hypermod.series_coeffs("F6c", 4) == [1, 4, 60, 1120]
    assert hypermod.series_coeffs("G6c", 3) == [1, -3, 9]
    assert hypermod.expand_entry("T3.01", 5) == [1, 2, 6, 20, 70, 244]


def test_group_report():
    rep = hypermod.verify_group("T3", 30)
    assert rep["status"] == "certified"
    assert rep["pairwise_count"] == 78


def test_clausen_and_zs():
    assert hypermod.verify_clausen(2, 30)["status"] == "certified"
    assert hypermod.verify_zs("c", 30)["status"] == "certified"
    with pytest.raises(ValueError):
        hypermod.verify_zs("d")


def test_fit_ode():
    out = hypermod.fit_ode("T2.01", 50)
    assert out["ode"]["order"] == 2
    assert "(0)*t(n-1)" in out["recurrence"]["text"]


def test_q_identity():
    assert "L72.1" in hypermod.q_identities()
    assert hypermod.verify_q_identity("L72.1", 30)["status"] == "certified"


def test_pi():
    assert hypermod.pi_reference(12).startswith("3.14159265358")
    rep = hypermod.verify_pi_formula("EQ9.6", 30)
    assert rep["status"] == "certified"
    assert rep["digits"] == 30


def test_equivalence():
    rep = hypermod.verify_equivalence("THM9.3", 30)
    assert rep["status"] == "certified"
    names = [c["name"] for c in rep["exact_checks"]]
    assert "claim arg:T1.20" in names


def test_unknown_ids():
    with pytest.raises(KeyError):
        hypermod.verify_group("T9")
    with pytest.raises(KeyError):
        hypermod.verify_pi_formula("EQ0")


def test_fractions_are_exact():
    c = hypermod.series_coeffs("f4", 3)
    assert all(isinstance(x, Fraction) for x in c)
    assert c == [1, 4, 36]
