import pytest

from schubcalc.mpoly import MPoly
from schubcalc.nilcox import (
    FidelityError,
    NCElement,
    as_mapping,
    double_schubert,
    factor_C,
    factor_D,
    nc_generator,
    nc_multiply,
    stanley_function,
)
from schubcalc.polyring import gen_q, is_symmetric_in, names
from schubcalc.weyl import BOX, ValidationError, elements, identity, left_factors, longest_element, parse_perm, simple


def Y(i):
    return MPoly.var(f"y{i}")


def Z(i):
    return MPoly.var(f"z{i}")


def word(type_, n, *letters, coef=1):
    out = NCElement.one(type_, n)
    for r in letters:
        out = nc_multiply(out, nc_generator(type_, n, r, coef))
    return out


def test_nilpotent_generators():
    assert not as_mapping(word("C", 3, 1, 1))
    assert not as_mapping(word("D", 3, BOX, BOX))


def test_braid_relations():
    assert as_mapping(word("C", 2, 0, 1, 0, 1)) == as_mapping(word("C", 2, 1, 0, 1, 0))
    assert as_mapping(word("D", 3, BOX, 2, BOX)) == as_mapping(word("D", 3, 2, BOX, 2))


def test_repeated_linear_factor():
    t = MPoly.var("t")
    f = NCElement.one("C", 2).times_linear(0, t).times_linear(0, t)
    assert as_mapping(f) == {identity("C", 2): 1, simple("C", 0, 2): 2 * t}


def test_algebra_mismatch():
    with pytest.raises(ValidationError):
        nc_multiply(NCElement.one("C", 2), NCElement.one("D", 2))


def test_double_schubert_examples():
    w = parse_perm("3,2,1", "A")
    assert double_schubert(w, "A") == (Y(1) - Z(1)) * (Y(1) - Z(2)) * (Y(2) - Z(1))
    assert double_schubert(identity("C", 3), "C", None) == 1
    s0 = simple("C", 0, 2)
    assert double_schubert(s0, "C", None) == gen_q(1, None)
    assert double_schubert(s0, "C", 3, False, False) == gen_q(1, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_longest_type_a(n):
    want = MPoly.const(1)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            want = want * (Y(i) - Z(j))
    assert double_schubert(longest_element("A", n), "A") == want


def test_stanley_functions_of_simples():
    assert stanley_function(identity("C", 2), 0) == 1
    for r in (0, 1, 2):
        assert stanley_function(simple("C", r, 3), 2) == gen_q(1, 2)


def test_fidelity_guard():
    with pytest.raises(FidelityError):
        double_schubert(parse_perm("3,-1,-2"), "C", 2)
    with pytest.raises(ValidationError):
        double_schubert(parse_perm("1,3,2"), "C", None, rank=2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c_factors_commute(n):
    s, t = MPoly.var("s"), MPoly.var("t")
    st_ = nc_multiply(factor_C(n, s), factor_C(n, t))
    ts_ = nc_multiply(factor_C(n, t), factor_C(n, s))
    assert as_mapping(st_) == as_mapping(ts_)
    if n >= 2:
        assert as_mapping(nc_multiply(factor_D(n, s), factor_D(n, t))) == as_mapping(
            nc_multiply(factor_D(n, t), factor_D(n, s))
        )


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_symmetric_in_x_and_stable(w):
    f = double_schubert(w, "C", max(1, w.length()), True, False)
    assert is_symmetric_in(f, names("x", max(1, w.length())))
    assert double_schubert(w, "C", None, rank=3) == double_schubert(w, "C", None, rank=4)


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_factorization_through_type_a(w):
    zs = [f"y{i}" for i in range(1, 5)]
    total = MPoly()
    for u in left_factors(w):
        if not u.in_symmetric():
            continue
        v = u.inverse() * w
        if u.length() + v.length() != w.length():
            continue
        a = double_schubert(u.inverse().as_type("A"), "A", None, True, False)
        a = a.rename({y: "z" + y[1:] for y in zs}, signs={y: -1 for y in zs})
        total = total + a * double_schubert(v, "C", None, True, False)
    assert double_schubert(w, "C", None) == total


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_type_b_scaling(w):
    assert double_schubert(w, "B", None) * 2 ** w.negatives() == double_schubert(w, "C", None)


@pytest.mark.parametrize("t", ["C", "D"])
def test_segment_restriction_does_not_change_coefficients(t):
    for w in elements(t, 3):
        assert double_schubert(w, t, None, restrict=True) == double_schubert(w, t, None, restrict=False)
