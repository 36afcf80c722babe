import json

import pytest

import fsplit


@pytest.fixture
def plane():
    return fsplit.Ring(2, ["x", "y"])


def test_polynomial_arithmetic(plane):
    f = plane.polynomial("x + y")
    assert str(f * f) == str(plane.polynomial("x^2 + y^2"))
    assert (f + f).is_zero
    assert fsplit.frobenius(f) == f * f


def test_splitting_and_compatibility(plane):
    phi = fsplit.standard_splitting(plane)
    assert str(phi.premultiplier) == "x*y"
    assert phi.is_graded()
    ok, witness = phi.is_compatible(plane.ideal(["x"]))
    assert ok and witness is None
    ok, witness = phi.is_compatible(plane.ideal(["x + y"]))
    assert not ok
    assert witness in plane.ideal(["x + y"])


def test_not_a_splitting(plane):
    with pytest.raises(fsplit.NotASplitting):
        fsplit.Splitting(plane.polynomial("x^2"))


def test_lattice_and_rigidity(plane):
    phi = fsplit.standard_splitting(plane)
    members = phi.brute_force_toric()
    assert len(members) == 6
    assert all(I.is_monomial for I in members)
    report = phi.rigidity(plane.ideal(["x"]))
    assert report["dim_hom"] == 1
    assert report["dim_intertwined"] == 0


def test_ideal_operations(plane):
    x, y = plane.ideal(["x"]), plane.ideal(["y"])
    assert (x & y) == plane.ideal(["x*y"])
    assert (x + y) == plane.ideal(["x", "y"])
    assert plane.ideal(["x*y"]).hilbert_polynomial() == "2"
    assert [plane.ideal(["x"]).hilbert_function(n) for n in range(4)] == [1, 1, 1, 1]


def test_run_scenario():
    text = "ring p=2 vars=x,y\nsplitting standard\nideal I = x\n"
    summary, report, code = fsplit.run_scenario(text, ["rigidity", "I"])
    assert code == 0
    assert "dim_hom=1 dim_intertwined=0" in summary
    assert json.loads(report)["schema_version"] == 1
    with pytest.raises(fsplit.ParseError):
        fsplit.run_scenario("ring p=4 vars=x\n", ["check-splitting"])
