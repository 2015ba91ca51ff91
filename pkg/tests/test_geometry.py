"""
G₂ 模型与 Pfaffian 坐标的单项计算
"""

from fractions import Fraction

import pytest

from src.algebra.composition import composition_defect
from src.algebra.linalg import Mat, SpanBuilder
from src.core.exceptions import CompositionIdentityError, DegenerateSampleError, DimensionMismatchError, NotSkewSymmetricError
from src.geometry import g2, spinor
from src.utils.sampling import RationalSampler
from src.verification.spinor_checks import xprime_point


# ============ G₂ ============


def test_printed_forms_do_not_compose():
    with pytest.raises(CompositionIdentityError):
        g2.octonion_from_q_phi(g2.SevenSpace.printed())


def test_corrected_forms_compose(g2_algebra, sampler):
    assert g2_algebra.dim == 8
    for _ in range(5):
        assert not composition_defect(sampler.element(g2_algebra), sampler.element(g2_algebra))


def test_associator_map(g2_algebra):
    amap = g2.associator_map(g2_algebra)
    assert amap.rank() == 7
    assert len(amap.kernel()) == 28
    assert g2.associator_is_alternating(g2_algebra)
    assert g2.unit_associator_vanishes(g2_algebra)


def test_invariant_trivector_in_kernel(g2_algebra, seven_space):
    trivector = g2.invariant_trivector(seven_space)
    assert any(trivector)
    assert not any(g2.associator_map(g2_algebra).apply(trivector))


def test_automorphisms(g2_algebra):
    assert g2.is_automorphism(g2_algebra, g2.sigma_matrix())
    assert g2.is_automorphism(g2_algebra, g2.torus_matrix(Fraction(2), Fraction(-3, 5)))
    assert not g2.is_automorphism(g2_algebra, Mat.identity(7).scale(Fraction(2)))


def test_exponentials_are_automorphisms(g2_algebra):
    for d in g2.nilpotent_derivations(g2_algebra).values():
        assert g2.is_nilpotent(d)
        assert g2.is_automorphism(g2_algebra, g2.exponential(d, Fraction(3, 2)))


def test_seventh_weight_vector():
    printed = g2.printed_weight_vectors()
    assert set(printed) == {f"X{k}" for k in range(1, 8)}
    assert len(g2.weights_of(printed["X7"])) > 1
    assert len(g2.weights_of(g2.corrected_seventh_vector())) == 1


def test_chart_point_shape():
    chart = g2.chart_point([Fraction(k) for k in range(8)])
    assert [len(row) for row in chart] == [4, 4, 4]
    with pytest.raises(DimensionMismatchError):
        g2.chart_point([Fraction(1)] * 7)


def test_base_point_satisfies_everything():
    chart = g2.chart_point([Fraction(0)] * 8)
    assert not any(g2.graph_equations(chart))
    assert not any(g2.chart_residuals(chart).values())
    assert not g2.corrected_third_residual(chart)


def test_third_residual_at_unit_b():
    chart = g2.chart_point([Fraction(0), Fraction(1)] + [Fraction(0)] * 6)
    assert g2.chart_residuals(chart)["R3"] == -1
    assert g2.corrected_third_residual(chart) == 0
    assert not any(g2.graph_equations(chart))


def test_random_chart_point(sampler):
    chart = g2.chart_point([sampler.rational() for _ in range(8)])
    residuals = g2.chart_residuals(chart)
    assert not residuals["R1"]
    assert not residuals["R2"]
    assert not g2.corrected_third_residual(chart)


# ============ Pfaffian 坐标 ============


def test_pfaffian_chart_base_point():
    coords = spinor.pfaffian_chart(spinor.skew_from_entries({})).coords
    assert len(coords) == 64
    assert coords[0] == 1
    assert not any(coords[1:])


def test_pfaffian_chart_quartic(sampler):
    p = spinor.skew_from_entries({pair: sampler.rational() for pair in spinor.ALL_PAIRS})
    chart = spinor.pfaffian_chart(p)

    def x(i, j):
        return p[i - 1, j - 1]

    assert chart.get(2, 5) == x(2, 5)
    assert chart.get(1, 2, 3, 4) == x(1, 2) * x(3, 4) - x(1, 3) * x(2, 4) + x(1, 4) * x(2, 3)


def test_pfaffian_chart_rejects_bad_input():
    rows = [[Fraction(int(i == j)) for j in range(7)] for i in range(7)]
    with pytest.raises(NotSkewSymmetricError):
        spinor.pfaffian_chart(Mat(rows))
    with pytest.raises(DimensionMismatchError):
        spinor.pfaffian_chart(Mat([[Fraction(0)] * 6 for _ in range(6)]))


def _graph_point(seed):
    sampler = RationalSampler(seed)
    for _ in range(10):
        try:
            return spinor.solve_graph([sampler.rational() for _ in spinor.FREE_PAIRS])
        except DegenerateSampleError:
            continue
    pytest.fail("no non-degenerate graph sample")


def test_printed_graph_rank():
    p = _graph_point(5)
    assert spinor.jacobian_rank(spinor.v1_equations, p) == 4


def test_solve_graph_argument_count():
    with pytest.raises(DimensionMismatchError):
        spinor.solve_graph([Fraction(0)] * 3)


def test_relation_is_not_linear_in_x47():
    values = [spinor.relation_second_difference(_graph_point(seed)) for seed in (5, 6, 7)]
    assert any(values)


# ============ X′ 与模型方程 ============


@pytest.fixture(scope="module")
def spinor_model():
    return spinor.SpinorModel()


@pytest.fixture(scope="module")
def xprime_points(spinor_model):
    return [xprime_point(spinor_model, RationalSampler(seed))[0] for seed in (3, 4)]


def test_root_derivations_are_automorphisms(spinor_model):
    derivations = spinor_model.root_derivations
    assert len(derivations) == 8
    for d in derivations:
        assert g2.is_nilpotent(d)
        assert g2.is_automorphism(spinor_model.algebra, g2.exponential(d, Fraction(-2, 3)))


def test_xprime_points_are_generic(xprime_points):
    for p in xprime_points:
        assert all(spinor.entries_of(p).values())


def test_model_equations_on_xprime(spinor_model, xprime_points):
    for p in xprime_points:
        assert not any(spinor_model.functional_values(p))
        assert not any(spinor_model.model_equations(p))
        assert spinor.jacobian_rank(spinor_model.model_equations, p) == 4


def test_printed_equations_fail_on_xprime(xprime_points):
    for p in xprime_points:
        assert any(spinor.v1_equations(p))


def test_model_equation_coefficients(spinor_model):
    coefficients = spinor_model.equation_coefficients
    assert set(coefficients) == set(spinor.MODEL_EQUATION_PARTNERS)
    assert all(coefficients.values())
    # [1,2,3,4] 与 x₄₇ 的权不同，泛函中没有二者之间的关系
    functionals = spinor_model.decomposition.functionals
    assert spinor.line_ratio(functionals, spinor.subset_index(1, 2, 3, 4), spinor.subset_index(4, 7)) is None


def test_explicit_vectors_use_model_coefficient(spinor_model):
    dec = spinor_model.decomposition
    coef = spinor.line_ratio(dec.first, spinor.subset_index(1, 2), spinor.subset_index(1, 2, 4, 5, 6, 7))
    assert coef is not None
    first = SpanBuilder(64)
    first.extend(dec.first)
    assert all(first.contains(vec) for vec in spinor.explicit_first_vectors(coef).values())
    assert not any(first.contains(vec) for vec in spinor.explicit_first_vectors().values())

    invariant = SpanBuilder(64)
    invariant.extend(dec.invariant_second)
    trivial = spinor.line_ratio(dec.invariant_second, spinor.subset_index(), spinor.subset_index(1, 2, 3, 4))
    assert trivial is not None
    assert invariant.contains(spinor.explicit_trivial_vector(trivial))
    assert not invariant.contains(spinor.explicit_trivial_vector())
