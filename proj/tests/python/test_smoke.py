import os

import pytest

import gmconn

DATA = os.environ.get("GMCONN_DATA_DIR")
pytestmark = pytest.mark.skipif(DATA is None, reason="GMCONN_DATA_DIR not set")


def arr(name):
    return os.path.join(DATA, "arrangements", name + ".json")


def test_betti():
    assert gmconn.betti(arr("lines4_base")) == [1, 4, 5]
    assert gmconn.betti(arr("lines4_doubled")) == [1, 3, 3]


def test_dep():
    d = gmconn.dep(arr("lines4_doubled"))
    assert d["n"] == 4
    assert d["dep"]["2"] == [[1, 2]]
    assert d["betti"] == [1, 3, 3]
    coincident = gmconn.dep(arr("lines5_coincident"))
    assert coincident["multiplicity"]["1,2,5"] == 2


def test_omega():
    o = gmconn.omega(arr("lines4_base"), arr("lines4_doubled"))
    sets = sorted(tuple(entry["set"]) for entry in o["relative_dep"])
    assert sets == [(1, 2), (1, 2, 4), (1, 2, 5)]
    # degree-1 induced endomorphism, rows=domain: first row is (y2, -y2, 0, 0)
    deg1 = o["induced"]["degrees"]["1"]
    assert deg1[0] == ["y2", "-y2", "0", "0"]


def test_omega_rejects_reversed_pairs():
    with pytest.raises(Exception):
        gmconn.omega(arr("lines4_doubled"), arr("lines4_base"))


def test_gm():
    g = gmconn.gm(arr("lines4_base"), arr("lines4_quadruple"), "1/2,1/3,1/5,1/7")
    assert g["degree"] == 2
    assert g["nonresonant"] is True
    assert g["entries"] == [["247/210", "0"], ["0", "247/210"]]


def test_verify():
    v = gmconn.verify(arr("lines4_base"), arr("lines4_parallel"))
    assert v["pass"] is True
    assert v["cover"]["all_pass"] is True
    assert v["ideal_invariance"] is True
