"""
齐性模型簇的维数
"""

import pytest

from src.classification.models import ambient_dimension, model_dimension
from src.classification.schema import ModelSpec
from src.core.exceptions import DatabaseError


@pytest.mark.parametrize(
    "family, params, dim",
    [
        ("grassmannian", {"m": 3, "n": 6}, 9),
        ("isotropic_symplectic", {"m": 3, "n": 6}, 6),
        ("isotropic_orthogonal", {"m": 1, "n": 8}, 6),
        ("isotropic_orthogonal", {"m": 7, "n": 14}, 21),
        ("spinor", {"n": 6}, 15),
        ("quadric", {"n": 7}, 5),
        ("projective", {"space": "sym2", "n": 3}, 5),
        ("projective", {"space": "jordan", "a": 8}, 26),
        ("product_projective", {"n": 3}, 4),
        ("flag", {"group": "E7", "marked": [7]}, 27),
    ],
)
def test_ambient_dimensions(family, params, dim):
    assert ambient_dimension(ModelSpec(name="m", family=family, params=params)) == dim


def test_codimension():
    model = ModelSpec(name="section", family="grassmannian", params={"m": 3, "n": 7}, codim=4)
    assert ambient_dimension(model) == 12
    assert model_dimension(model) == 8


def test_identifications():
    # dim SL4/N(S(L2 x L2)) = dim G_2(6) = 8; dim E6/N(F4) = dim P(J3(O)) = 26; Sp_2l against IG_2(4l)
    assert ambient_dimension(ModelSpec(name="G_2(6)", family="grassmannian", params={"m": 2, "n": 6})) == 8
    assert ambient_dimension(ModelSpec(name="P(J3)", family="projective", params={"space": "jordan", "a": 8})) == 26
    for l in (1, 2, 3):
        ig = ModelSpec(name="IG", family="isotropic_symplectic", params={"m": 2 * l, "n": 4 * l})
        assert ambient_dimension(ig) == l * (2 * l + 1)


def test_bad_parameters():
    with pytest.raises(DatabaseError):
        ambient_dimension(ModelSpec(name="g", family="grassmannian", params={"m": 3}))
    with pytest.raises(DatabaseError):
        ambient_dimension(ModelSpec(name="p", family="projective", params={"space": "cubes", "n": 3}))
    with pytest.raises(DatabaseError):
        ambient_dimension(ModelSpec(name="f", family="flag", params={"group": "E6"}))
