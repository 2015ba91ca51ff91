"""
复化合成代数：Cayley–Dickson 倍化、合成恒等式与导子
"""

import pytest

from src.algebra.composition import (
    associator,
    cayley_dickson,
    composition_defect,
    derivations,
    inner_derivation,
    is_alternative,
    is_associative,
    is_derivation,
    is_quaternion_subalgebra,
    polar,
    standard_algebra,
    subalgebra_closure,
)
from src.core.exceptions import DimensionMismatchError

DERIVATION_DIMS = {1: 0, 2: 0, 4: 3, 8: 14}


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_composition_identity(algebras, sampler, dim):
    algebra = algebras[dim]
    for _ in range(30):
        assert composition_defect(sampler.element(algebra), sampler.element(algebra)) == 0


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_unit_and_conjugation(algebras, sampler, dim):
    algebra = algebras[dim]
    x = sampler.element(algebra)
    assert algebra.one() * x == x == x * algebra.one()
    assert (x * x.conj()).is_scalar()
    assert polar(x, x) == x.norm()


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_alternative_and_associative(algebras, dim):
    algebra = algebras[dim]
    assert is_alternative(algebra)
    assert is_associative(algebra) == (dim <= 4)


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_derivation_dimension(algebras, dim):
    ders = derivations(algebras[dim])
    assert len(ders) == DERIVATION_DIMS[dim]
    for d in ders:
        assert is_derivation(algebras[dim], d)


def test_inner_derivations_of_octonions(octonions, sampler):
    a, b = sampler.element(octonions), sampler.element(octonions)
    assert is_derivation(octonions, inner_derivation(a, b))


def test_octonions_not_associative(octonions):
    e = octonions.basis()
    assert any(not associator(e[1], e[2], e[k]).is_zero() for k in range(3, 8))


def test_doubling_stops_at_eight():
    with pytest.raises(DimensionMismatchError):
        cayley_dickson(standard_algebra(8))
    with pytest.raises(DimensionMismatchError):
        standard_algebra(16)


def test_quaternion_subalgebra_inside_octonions(octonions):
    e = octonions.basis()
    closure = subalgebra_closure([e[1], e[2]])
    assert len(closure) == 4
    assert is_quaternion_subalgebra(closure)
    assert len(subalgebra_closure([e[1]])) == 2
