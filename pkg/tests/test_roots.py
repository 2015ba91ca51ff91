"""
根系：类型解析、根个数、基本权与抛物商的维数
"""

import pytest

from src.core.exceptions import RootSystemError
from src.lie.involutions import InvolutionData
from src.lie.roots import RootSystem, parse_type


@pytest.mark.parametrize(
    "label, count",
    [("A2", 6), ("A3", 12), ("B3", 18), ("C3", 18), ("D4", 24), ("G2", 12), ("F4", 48), ("E6", 72), ("B2xA1", 10)],
)
def test_root_counts(label, count):
    rs = RootSystem(label)
    assert len(rs.roots()) == count == rs.expected_root_count()
    assert len(rs.positive_roots()) == count // 2


def test_parse_type():
    assert parse_type("B2xA1") == [("B", 2), ("A", 1)]
    for bad in ("G3", "Z2", "E9", "D2", "A0"):
        with pytest.raises(RootSystemError):
            parse_type(bad)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "F4"])
def test_fundamental_weights_are_dual_to_coroots(label):
    rs = RootSystem(label)
    for i, w in enumerate(rs.fundamental_weights()):
        assert rs.pairings(w) == [int(i == j) for j in range(rs.rank)]
        assert rs.is_dominant(w)


def test_weyl_orbit():
    rs = RootSystem("A2")
    assert len(rs.weyl_orbit(rs.fundamental_weights()[0])) == 3
    assert len(rs.weyl_orbit(rs.simple_roots[0])) == 6
    with pytest.raises(RootSystemError):
        RootSystem("E6").weyl_orbit(RootSystem("E6").simple_roots[0])


@pytest.mark.parametrize(
    "label, marked, dim",
    [("A5", [3], 9), ("C3", [3], 6), ("E6", [1], 16), ("E7", [7], 27), ("D6", [6], 15)],
)
def test_flag_dimensions(label, marked, dim):
    assert RootSystem(label).dim_flag(marked) == dim


def test_group_dimension():
    assert RootSystem("G2").dim_group() == 14
    assert RootSystem("E6").dim_group() == 78


def test_involutions():
    g2 = InvolutionData.from_spec("G2", {"kind": "negation"})
    assert not g2.fixed_roots()
    assert len(g2.moved_roots()) == 12

    swap = InvolutionData.from_spec("A2xA2", {"kind": "swap_negate"})
    assert len(swap.moved_roots()) == 12

    rotation = {"kind": "matrix", "rows": [["0", "-1"], ["1", "0"]]}
    with pytest.raises(RootSystemError):
        InvolutionData.from_spec("B2", rotation)
    with pytest.raises(RootSystemError):
        InvolutionData.from_spec("A2", {"kind": "unknown"})
    with pytest.raises(RootSystemError):
        InvolutionData.from_spec("A2", {"kind": "swap_negate"})


@pytest.mark.parametrize("label", ["A3", "B3", "G2"])
def test_fundamental_coweights(label):
    rs = RootSystem(label)
    for i, cw in enumerate(rs.fundamental_coweights()):
        assert [sum(a * c for a, c in zip(alpha, cw)) for alpha in rs.simple_roots] == [int(i == j) for j in range(rs.rank)]


def test_root_coefficients():
    rs = RootSystem("G2")
    for i, alpha in enumerate(rs.simple_roots):
        assert rs.root_coefficients(alpha) == tuple(int(k == i) for k in range(2))
    heights = [sum(rs.root_coefficients(r)) for r in rs.positive_roots()]
    assert max(heights) == 5
    with pytest.raises(RootSystemError):
        rs.root_coefficients([0] * rs.ambient_dim)
