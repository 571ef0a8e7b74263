"""Smoke tests for the pydsq extension module."""

import os

import pytest

import pydsq

DATA = os.environ.get("DSQ_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def load_link(name):
    with open(os.path.join(DATA, "links", name)) as f:
        return pydsq.Diagram.from_text(f.read())


def test_z6_structure_is_valid():
    z6 = pydsq.z6()
    report = z6.check()
    assert report["passed"]
    assert report["families_checked"] == 14
    assert z6.order == 6
    assert z6.r1.at(4, 2) == 1


def test_reference_counts():
    z6 = pydsq.z6()
    assert pydsq.count(load_link("L1.lnk"), z6)["count"] == 36
    assert pydsq.count(load_link("L2.lnk"), z6)["count"] == 6
    assert pydsq.count(load_link("L3.lnk"), z6)["count"] == 12


def test_l2_pair_set():
    z6 = pydsq.z6()
    res = pydsq.count(load_link("L2.lnk"), z6, list_all=True)
    ix, iy = res["arcs"].index("x"), res["arcs"].index("y")
    pairs = sorted((c[ix], c[iy]) for c in res["colorings"])
    assert pairs == [(0, 3), (1, 4), (2, 5), (3, 0), (4, 1), (5, 2)]


def test_search_affine_matches_frozen_verdicts():
    assert pydsq.search_affine(7, "B") == [0, 1, 2, 3, 4, 5, 6]
    assert pydsq.search_affine(9, "m") == [0, 3, 6]


def test_hom_count_agrees_with_solver():
    z6 = pydsq.z6()
    d = load_link("L3.lnk")
    assert pydsq.hom_count(d, z6) == pydsq.count(d, z6)["count"]
    assert pydsq.hom_count(d, z6, simplify=True) == 12


def test_presentation_simplifies_the_worked_example():
    p = pydsq.presentation(load_link("dsq_example.lnk"), simplify=True)
    assert p["generators"] == ["x", "y"]
    assert "R1(y *1 (x *2 y), (x *2 y) *2 (y *1 (x *2 y)))" in p["relations"][0] + p["relations"][1]


def test_moves_preserve_counts():
    z6 = pydsq.z6()
    d = load_link("L1.lnk")
    kinked = d.kink("x")
    assert not kinked.validate()
    assert pydsq.count(kinked, z6)["count"] == 36
    poked = d.poke("x", "y")
    assert pydsq.count(poked, z6)["count"] == 36


def test_structure_round_trip_and_enumeration():
    z6 = pydsq.z6()
    again = pydsq.Disingquandle.from_text(z6.to_text())
    assert again.to_text() == z6.to_text()
    found = pydsq.enumerate_disingquandles(2)
    assert len(found) == 4
    assert all(d.is_valid() for d in found)


def test_invalid_structure_is_refused():
    bad = pydsq.affine_m(9, 1)
    assert not bad.is_valid()
    with pytest.raises(ValueError):
        pydsq.count(load_link("L1.lnk"), bad)


def test_gfamily_and_induced_quandle():
    fam = pydsq.cyclic_type_family(3)
    assert fam.check()["passed"]
    ind = fam.induced_quandle()
    assert ind.order == 6
    assert pydsq.check_involutive_quandle(pydsq.dihedral(5))["passed"]
