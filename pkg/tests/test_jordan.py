"""
J3(A) 上的余子式恒等式、三次恒等式与 Freudenthal 截面
"""

from fractions import Fraction

import pytest

from src.algebra.jordan import (
    Herm3,
    comatrix,
    comatrix_product_residual,
    cubic_identity_residual,
    det3,
    freudenthal_phi,
    herm3_dim,
    in_section,
    jordan_inverse,
    jordan_product,
    octonion_residual,
    zorn_dim,
)


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_comatrix_jordan_identity(algebras, sampler, dim):
    algebra = algebras[dim]
    identity = Herm3.identity(algebra)
    for _ in range(10):
        p = sampler.herm3(algebra)
        assert jordan_product(comatrix(p), p) == identity.scale(det3(p))
        assert cubic_identity_residual(p).is_zero()


@pytest.mark.parametrize("dim", [1, 2, 4])
def test_ordinary_product_identity_for_associative_algebras(algebras, sampler, dim):
    algebra = algebras[dim]
    for _ in range(10):
        p = sampler.herm3(algebra)
        assert all(x.is_zero() for row in comatrix_product_residual(p) for x in row)


def test_ordinary_product_identity_fails_over_octonions(octonions, sampler):
    residuals = [comatrix_product_residual(sampler.herm3(octonions)) for _ in range(10)]
    assert any(not x.is_zero() for m in residuals for row in m for x in row)


def test_octonion_residual_is_the_associator(octonions):
    e = octonions.basis()
    p = Herm3(octonions, (Fraction(1), Fraction(2), Fraction(3)), (e[1], e[2], e[4]))
    assert octonion_residual(p) == (e[1] * e[2]) * e[4] - e[1] * (e[2] * e[4])
    assert not octonion_residual(p).is_zero()


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_identity_and_inverse(algebras, sampler, dim):
    algebra = algebras[dim]
    identity = Herm3.identity(algebra)
    assert det3(identity) == 1
    assert comatrix(identity) == identity
    p = sampler.herm3(algebra)
    if det3(p):
        assert jordan_product(jordan_inverse(p), p) == identity


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_freudenthal_section(algebras, sampler, dim):
    algebra = algebras[dim]
    identity = Herm3.identity(algebra)
    assert in_section(freudenthal_phi(Fraction(1), identity))
    assert not in_section(freudenthal_phi(Fraction(2), identity))
    p = Herm3.diagonal(algebra, (Fraction(2), Fraction(3), Fraction(36)))
    assert in_section(freudenthal_phi(Fraction(6), p))
    phi = freudenthal_phi(Fraction(1), identity)
    assert len(phi.coordinates()) == phi.dim == zorn_dim(dim)


def test_dimensions():
    assert [herm3_dim(a) for a in (1, 2, 4, 8)] == [6, 9, 15, 27]
    assert [zorn_dim(a) for a in (1, 2, 4, 8)] == [14, 20, 32, 56]


@pytest.mark.parametrize("dim", [4, 8])
def test_precomputed_comatrix_gives_same_results(algebras, sampler, dim):
    algebra = algebras[dim]
    for _ in range(5):
        p = sampler.herm3(algebra)
        com = comatrix(p)
        d = det3(p, com)
        assert d == det3(p)
        assert comatrix_product_residual(p, com, d) == comatrix_product_residual(p)
        assert cubic_identity_residual(p, d).is_zero()
        if d:
            assert jordan_inverse(p, com) == jordan_inverse(p)
