import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubcalc.mpoly import MPoly
from schubcalc.nilcox import double_schubert
from schubcalc.polyring import complete, elementary, gen_q, P_poly
from schubcalc.schubops import GX, GY, divided_difference, geometrize, ideal_equal, ideal_generators, omega, xi
from schubcalc.weyl import BOX, ValidationError, elements, length
from strategies import polys

GAMMA_VARS = ["p1", "p3", "y1", "y2", "y3", "z1", "z2"]


def X(i):
    return MPoly.var(GX(i))


def Yg(i):
    return MPoly.var(GY(i))


def test_divided_difference_examples():
    assert divided_difference(MPoly.const(5), "y", 1) == 0
    assert divided_difference(MPoly.const(5), "y", 0) == 0
    # s_0 q_1 = q_1 + 2 y_1, so (q_1 - s_0 q_1) / (-2 y_1) = +1
    assert divided_difference(gen_q(1, None), "y", 0) == 1
    assert divided_difference(MPoly.var("y1"), "y", 1) == 1
    # ∂^z = ω ∂^y ω and ω(z_1) = -y_1
    assert divided_difference(MPoly.var("z1"), "z", 1) == -1


def test_explicit_alphabet_is_refused():
    with pytest.raises(ValidationError):
        divided_difference(gen_q(1, 2), "y", 0)


@given(polys(GAMMA_VARS, max_terms=4, max_exp=2), st.sampled_from([0, 1, 2, BOX]), st.sampled_from(["y", "z"]))
def test_operators_square_to_zero(f, i, axis):
    once = divided_difference(f, axis, i)
    assert divided_difference(once, axis, i) == 0


@given(polys(GAMMA_VARS, max_terms=5, max_exp=3))
def test_omega_is_an_involution(f):
    assert omega(omega(f)) == f


def test_omega_on_generators():
    assert omega(MPoly.var("y2")) == -MPoly.var("z2")
    assert omega(MPoly.var("z1")) == -MPoly.var("y1")
    assert omega(gen_q(3, None)) == gen_q(3, None)


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_divided_differences_on_schubert_polynomials(w):
    f = double_schubert(w, "C", None)
    assert (f.constant_term() == 1) == w.is_identity()
    for i in range(0, 3):
        right = w.right_simple(i)
        want = double_schubert(right, "C", None, rank=3) if length(right) < length(w) else MPoly()
        assert divided_difference(f, "y", i) == want
        left = w.left_simple(i)
        want = double_schubert(left, "C", None, rank=3) if length(left) < length(w) else MPoly()
        assert divided_difference(f, "z", i) == want


def test_geometrize_examples():
    for n in (1, 2, 3):
        xs = [GX(i) for i in range(1, n + 1)]
        ys = [GY(i) for i in range(1, n + 1)]
        for r in range(0, 5):
            want = sum((elementary(i, xs) * complete(r - i, ys) for i in range(r + 1)), MPoly())
            assert geometrize(gen_q(r, None), "C", n) == want
            assert xi(r, n) == want
            if r:
                assert geometrize(P_poly((r,), None), "D", n) * 2 == want
    assert geometrize(MPoly.var("y1"), "C", 2) == -X(1)
    assert geometrize(MPoly.var("z2"), "C", 2) == Yg(2)
    assert geometrize(MPoly.var("y3"), "C", 2) == 0
    assert geometrize(MPoly.var("y1"), "A", 2) == X(1)
    with pytest.raises(ValidationError):
        geometrize(MPoly.var("p2"), "C", 2)


def test_ideal_equal_examples():
    f = X(1) ** 2 + X(1) * Yg(1)
    assert ideal_equal(f, f, "C", 1)
    assert ideal_equal(X(1) ** 2, Yg(1) ** 2, "C", 1)
    assert not ideal_equal(X(1), Yg(1), "C", 1)
    assert ideal_equal(X(1) + X(2), Yg(1) + Yg(2), "A", 2)
    assert not ideal_equal(X(1) * X(2), Yg(1) * Yg(2), "C", 2)
    assert ideal_equal(X(1) * X(2), Yg(1) * Yg(2), "D", 2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_relations_hold_after_geometrization(n, r):
    rel = xi(r, n) ** 2 + 2 * sum(((-1) ** i * xi(r + i, n) * xi(r - i, n) for i in range(1, r + 1)), MPoly())
    assert ideal_equal(rel, MPoly(), "C", n)


@pytest.mark.parametrize("lie_type", ["A", "C", "D"])
@pytest.mark.parametrize("n", [1, 2])
def test_members_of_the_ideal_are_zero(lie_type, n):
    if lie_type == "D" and n < 2:
        return
    variables = [GX(i) for i in range(1, n + 1)] + [GY(i) for i in range(1, n + 1)]
    monos = [MPoly.const(1)] + [MPoly.var(v) for v in variables]
    monos += [MPoly.var(a) * MPoly.var(b) for a, b in itertools.combinations_with_replacement(variables, 2)]
    for g in ideal_generators(lie_type, n):
        for m in monos:
            assert ideal_equal(g * m, MPoly(), lie_type, n)
            assert not ideal_equal(g * m + 1, MPoly(), lie_type, n)
