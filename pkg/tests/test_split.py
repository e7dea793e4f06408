import itertools

import pytest

from schubcalc.nilcox import double_schubert
from schubcalc.polyring import Q_poly, elementary, theta_poly
from schubcalc.shapes import Shape, shape_to_grassmannian
from schubcalc.split import (
    SplitProblem,
    UnsupportedCase,
    is_compatible,
    minimal_sequence,
    split_coeff,
    split_coefficients,
    split_formula,
    split_terms,
    uniqueness_check,
)
from schubcalc.transition import stanley_coeffs
from schubcalc.mpoly import MPoly
from schubcalc.weyl import BOX, ValidationError, descents, elements, parse_perm


def Y(i):
    return MPoly.var(f"y{i}")


def Z(i):
    return MPoly.var(f"z{i}")


def test_worked_example_a():
    w = parse_perm("3,-1,-2")
    prob = SplitProblem(w, (1, 2), (0, 1), "C")
    th = lambda parts: theta_poly(Shape(parts, 1), None)  # noqa: E731
    assert split_formula(prob) == th((4, 2)) + th((3, 2)) * Y(2) - Z(1) * th((3, 2))
    assert split_coeff(prob, [(), (4, 2), ()]) == 1
    assert split_coeff(prob, [(), (3, 2), (1,)]) == 1
    assert split_coeff(prob, [(1,), (3, 2), ()]) == 1
    assert split_coeff(prob, [(), (5, 1), ()]) == 0
    assert len(split_coefficients(prob)) == 3


def test_worked_example_b():
    prob = SplitProblem(parse_perm("1,2,-3"), (2,), (0, 2), "C")
    th = lambda parts: theta_poly(Shape(parts, 2), None)  # noqa: E731
    ez = lambda i: elementary(i, ["z1", "z2"])  # noqa: E731
    assert split_formula(prob) == th((5,)) - ez(1) * th((4,)) + ez(2) * th((3,))
    assert split_formula(prob) == double_schubert(prob.w, "C")


def test_single_slot_is_the_mixed_stanley_coefficient():
    checked = 0
    for w in elements("C", 3):
        d = descents(w)
        if len(d) != 1 or not descents(w.inverse()) <= {0}:
            continue
        prob = SplitProblem(w, tuple(d), (0,), "C")
        for lam, e in stanley_coeffs(w, "C", prob.k).items():
            assert split_coeff(prob, [lam]) == e
        checked += 1
    assert checked


def test_grassmannian_reduces_to_one_theta():
    checked = 0
    for k in (0, 1, 2):
        for lam in [Shape((3, 1), k), Shape((4, 2, 1), k), Shape((2,), k), Shape((1,), k), Shape((5,), k)]:
            w = shape_to_grassmannian(lam, "C")
            if not is_compatible(w.inverse(), (0,)):
                continue
            prob = SplitProblem(w, (k,), (0,), "C")
            assert [(c, sh) for c, sh, _ in split_terms(prob)] == [(1, (lam,))]
            assert split_formula(prob) == theta_poly(lam, None)
            checked += 1
    assert checked


def test_zero_first_index_gives_q_factors():
    w = parse_perm("2,-1,3")
    prob = SplitProblem(w, minimal_sequence(w, 0), minimal_sequence(w.inverse(), 0), "C")
    assert prob.k == 0
    q = prob.q
    for _, shapes, _ in split_terms(prob):
        assert shapes[q - 1].kk == 0
        assert theta_poly(shapes[q - 1], None, []) == Q_poly(shapes[q - 1].parts, None)
    assert split_formula(prob) == double_schubert(w, "C")


def test_hypotheses_are_enforced():
    w = parse_perm("2,1,3")
    with pytest.raises(UnsupportedCase):
        SplitProblem(w, (1,), (1,), "C")
    with pytest.raises(UnsupportedCase):
        SplitProblem(parse_perm("2,1,3", "D"), (1,), (1,), "D")
    with pytest.raises(ValidationError):
        SplitProblem(parse_perm("3,-1,-2"), (1,), (0, 1), "C")
    with pytest.raises(ValidationError):
        SplitProblem(w, (2, 1), (0, 1), "C")
    assert not is_compatible(parse_perm("3,-1,-2"), (1,))


def test_type_d_normalizes_a_leading_zero():
    w = parse_perm("-2,-1,3", "D")
    prob = SplitProblem(w, (0, 2), (0, 2), "D")
    assert prob.a_seq[0] == BOX and prob.b_seq[0] == BOX


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_refinement_does_not_change_the_formula(w):
    b = minimal_sequence(w.inverse(), 0)
    a = minimal_sequence(w, 0)
    base = split_formula(SplitProblem(w, a, b, "C"))
    assert base == double_schubert(w, "C")
    for extra in range(0, 4):
        if extra in a:
            continue
        finer = tuple(sorted(set(a) | {extra}))
        if is_compatible(w, finer):
            assert split_formula(SplitProblem(w, finer, b, "C")) == base


@pytest.mark.parametrize("w", elements("D", 3), ids=str)
def test_type_d_splitting(w):
    prob = SplitProblem(w, minimal_sequence(w, BOX), minimal_sequence(w.inverse(), BOX), "D")
    assert split_formula(prob) == double_schubert(w, "D")


@pytest.mark.parametrize("w", elements("A", 4), ids=str)
def test_type_a_splitting(w):
    a = tuple(sorted(descents(w))) or (1,)
    b = tuple(sorted(descents(w.inverse()))) or (0,)
    assert split_formula(SplitProblem(w, a, b, "A")) == double_schubert(w, "A")


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_expansion_is_unique(w):
    prob = SplitProblem(w, minimal_sequence(w, 0), minimal_sequence(w.inverse(), 0), "C")
    assert uniqueness_check(prob)


def test_type_b_carries_the_sign_scaling():
    w = parse_perm("-1,2")
    prob = SplitProblem(w, (0,), (0,), "B")
    assert split_formula(prob) == double_schubert(w, "B")
