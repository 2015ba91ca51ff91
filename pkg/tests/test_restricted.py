"""
限制根系、估值锥与格
"""

from fractions import Fraction

import pytest

from src.core.exceptions import ConeError
from src.lie.involutions import InvolutionData
from src.lie.restricted import is_unimodular, lattice_basis, restrict, valuation_cone


def _rrs(group, theta):
    return restrict(InvolutionData.from_spec(group, theta))


@pytest.mark.parametrize(
    "group, theta, label, dim",
    [
        ("G2", {"kind": "negation"}, "G2", 8),
        ("A2", {"kind": "negation"}, "A2", 5),
        ("A2xA2", {"kind": "swap_negate"}, "A2", 8),
        ("G2xG2", {"kind": "swap_negate"}, "G2", 14),
    ],
)
def test_type_and_dimension(group, theta, label, dim):
    rrs = _rrs(group, theta)
    assert rrs.type_label == label
    assert rrs.rank == 2
    assert rrs.dimension_of_quotient() == dim


def test_database_types(db):
    for entry in db.entries:
        rrs = restrict(InvolutionData.from_spec(entry.group, entry.theta.to_spec()))
        assert rrs.type_label == entry.restricted_type, entry.id
        assert rrs.is_reflection_closed(), entry.id


def test_valuation_cone_representations_agree():
    for group in ("A2", "G2"):
        rrs = _rrs(group, {"kind": "negation"})
        cone = valuation_cone(rrs)
        assert cone.cross_validate()
        for g in cone.generators:
            assert cone.contains(g)
        assert not cone.contains(rrs.coweights()[0])


def test_coweights_dual_to_basis():
    rrs = _rrs("G2", {"kind": "negation"})
    for i, w in enumerate(rrs.coweights()):
        assert rrs.pair_roots(w) == [Fraction(int(i == j)) for j in range(rrs.rank)]


def test_parse_vector():
    rrs = _rrs("A2", {"kind": "negation"})
    assert rrs.parse_vector("-w1-w2") == tuple(-x - y for x, y in zip(*rrs.coweights()))
    assert rrs.parse_vector("2a1") == tuple(2 * x for x in rrs.coroots()[0])
    for bad in ("w3", "x1", "", "w1w2"):
        with pytest.raises(ConeError):
            rrs.parse_vector(bad)


def test_lattices_and_regularity():
    rrs = _rrs("A2", {"kind": "negation"})
    coroots = lattice_basis(rrs, "coroot")
    coweights = lattice_basis(rrs, "coweight")
    assert is_unimodular(coroots, coroots)
    assert not is_unimodular(coroots, coweights)
    assert not is_unimodular(coweights, coroots)
    assert is_unimodular(coweights, coweights[:1])
    with pytest.raises(ConeError):
        lattice_basis(rrs, "nonsense")
