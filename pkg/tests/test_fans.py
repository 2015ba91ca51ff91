"""
着色锥、扇的完备性、切片最高权与齐性判定
"""

from fractions import Fraction

import pytest

from src.core.exceptions import ConeError
from src.lie.fans import (
    ColoredCone,
    ColoredFan,
    Verdict,
    homogeneity_verdict,
    is_complete,
    slice_highest_weight,
    validate_cone,
    weight_coordinates,
)
from src.lie.involutions import InvolutionData
from src.lie.polyhedra import cone_membership, fourier_motzkin, satisfies
from src.lie.restricted import lattice_basis, restrict


def _setup(entry):
    rrs = restrict(InvolutionData.from_spec(entry.group, entry.theta.to_spec()))
    lattice = lattice_basis(rrs, entry.lattice.kind, entry.lattice.basis)
    cones = [ColoredCone.from_tokens(rrs, c.generators, c.colors) for c in entry.fan]
    return rrs, lattice, cones


def test_fourier_motzkin():
    a = [[1, 0], [0, 1], [-1, -1]]
    b = [1, 1, 0]
    x = fourier_motzkin(a, b)
    assert x is not None and satisfies(a, b, x)
    assert fourier_motzkin([[1], [-1]], [1, -2]) is None


def test_cone_membership():
    gens = [[1, 0], [1, 1]]
    assert cone_membership(gens, [2, 1]) == [Fraction(1), Fraction(1)]
    assert cone_membership(gens, [0, 1]) is None


def test_g2_slice_weight(db):
    rrs, lattice, cones = _setup(db.get("thm1.x"))
    omega, cert = slice_highest_weight(rrs, cones[0], lattice)
    assert weight_coordinates(rrs, omega) == [-2, 1]
    assert not cert["dominant"]


def test_a2_slice_weights(db):
    rrs, lattice, cones = _setup(db.get("thm1.iii.b-sl3"))
    first, _ = slice_highest_weight(rrs, cones[0], lattice)
    second, _ = slice_highest_weight(rrs, cones[1], lattice)
    assert weight_coordinates(rrs, first) == [1, -1]
    assert weight_coordinates(rrs, second) == [-1, 1]
    verdict, cert = homogeneity_verdict(rrs, ColoredFan(cones), lattice, True, False)
    assert verdict == Verdict.NON_TRANSITIVE
    assert cert["method"] == "slice_weight"


def test_slice_weight_needs_one_color(db):
    rrs, lattice, cones = _setup(db.get("thm1.x"))
    with pytest.raises(ConeError):
        slice_highest_weight(rrs, ColoredCone(cones[0].generators, [1, 2]), lattice)


def test_model_verdict_when_slice_not_applicable(db):
    rrs, lattice, cones = _setup(db.get("thm1.i"))
    verdict, cert = homogeneity_verdict(rrs, ColoredFan(cones), lattice, False, True)
    assert verdict == Verdict.TRANSITIVE and cert == {"method": "model"}


def test_cones_and_completeness(db):
    for case_id in ("thm1.i", "thm1.x", "thm1.iii.b-sl3"):
        rrs, _, cones = _setup(db.get(case_id))
        for cone in cones:
            ok, _ = validate_cone(cone, rrs)
            assert ok, case_id
        ok, cert = is_complete(ColoredFan(cones), rrs)
        assert ok, (case_id, cert)


def test_incomplete_fan(db):
    rrs, _, cones = _setup(db.get("thm1.i"))
    ok, _ = is_complete(ColoredFan(cones[:1]), rrs)
    assert not ok
    ok, cert = is_complete(ColoredFan([]), rrs)
    assert not ok and cert["method"] == "empty"


def test_verdict_is_a_closed_enum():
    assert [v.value for v in Verdict] == ["transitive", "non-transitive"]
    assert Verdict("non-transitive") is Verdict.NON_TRANSITIVE
    assert Verdict.TRANSITIVE == "transitive"
    with pytest.raises(ValueError):
        Verdict("homogeneous")
