import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubcalc.shapes import (
    Shape,
    conjugate,
    grassmannian_elements,
    grassmannian_to_shape,
    ideal_of_grassmannian,
    index_set,
    is_grassmannian,
    k_strict_shapes,
    order_ideal,
    parse_shape,
    shape_to_grassmannian,
)
from schubcalc.weyl import BOX, ValidationError, descents, identity, length, parse_perm
from strategies import partitions


def test_k_strictness_enforced():
    Shape((3, 3, 1), 3)
    with pytest.raises(ValidationError):
        Shape((3, 3), 2)
    with pytest.raises(ValidationError):
        Shape((1, 2), 0)
    with pytest.raises(ValidationError):
        Shape((3, 1), 1, 0, typed=True)  # a part equals k, so a type is required
    assert Shape((3, 1), 1, 2, typed=True).type_tag == 2


def test_order_ideal_examples():
    assert order_ideal(Shape((3, 1, 1), 1), "C") == {(1, 2)}
    assert order_ideal(Shape((), 2), "C") == frozenset()


@given(partitions(max_len=5, max_part=7, strict=True), st.integers(0, 3))
def test_order_ideals_are_downward_closed(parts, k):
    lam = Shape(parts, k)
    for variant in ("C", "Cprime"):
        ideal = order_ideal(lam, variant)
        for i, j in ideal:
            for i2 in range(1, i + 1):
                for j2 in range(i2 + 1, j + 1):
                    assert (i2, j2) in ideal


def test_index_set_examples():
    n, k = 4, 1
    assert index_set(Shape((), k), n, "C") == list(range(n + k + 1, 2 * n + 1))
    # m = n - k members; the listed prefix 4, 6, 8 continues with p_4 = 10
    assert index_set(Shape((3, 1, 1), 1), 5, "C") == [4, 6, 8, 10]
    with pytest.raises(ValidationError):
        index_set(Shape((9,), 1), 3, "C")


@pytest.mark.parametrize("lie_type", ["C", "D"])
def test_index_sets_avoid_opposite_pairs(lie_type):
    n = 4
    ks = range(0, n) if lie_type == "C" else [BOX, 1, 2, 3]
    for k in ks:
        for lam in k_strict_shapes(n, k, lie_type):
            p = index_set(lam, n, lie_type)
            assert p == sorted(set(p))
            assert all(a + b != 2 * n + 1 for a in p for b in p)


def test_worked_bijection_examples():
    lam = Shape((7, 4, 3, 1, 1), 3)
    w = parse_perm("3,5,8,-4,-1,2,6,7")
    assert shape_to_grassmannian(lam, "C") == w
    assert grassmannian_to_shape(w, 3) == lam
    lam = Shape((7, 5, 3, 2), 3, 2, typed=True)
    w = parse_perm("-2,6,7,-5,-3,-1,4,8", "D")
    assert shape_to_grassmannian(lam, "D") == w
    assert grassmannian_to_shape(w, 3) == lam
    assert shape_to_grassmannian(Shape((), 2), "C") == identity("C", 1)
    assert grassmannian_to_shape(parse_perm("-2,-1,3"), 0) == Shape((2, 1), 0)


@pytest.mark.parametrize("lie_type", ["C", "D"])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_roundtrip_in_rectangles(lie_type, n):
    ks = list(range(0, n)) if lie_type == "C" else [BOX] + list(range(1, n))
    for k in ks:
        for lam in k_strict_shapes(n, k, lie_type):
            w = shape_to_grassmannian(lam, lie_type, n)
            assert grassmannian_to_shape(w, k) == lam
            assert length(w) == lam.weight
            assert is_grassmannian(w, k)
            variant = "Cprime" if lie_type == "D" else "C"
            assert ideal_of_grassmannian(w, k) == order_ideal(lam, variant)


@pytest.mark.parametrize("lie_type", ["C", "D"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_counts_agree(lie_type, n):
    ks = list(range(0, n)) if lie_type == "C" else [BOX] + list(range(1, n))
    for k in ks:
        assert len(grassmannian_elements(lie_type, n, k)) == len(k_strict_shapes(n, k, lie_type))


def test_type_a_grassmannian():
    w = shape_to_grassmannian(Shape((2, 1), 0, plain=True), "A")
    assert is_grassmannian(w, max(descents(w)))
    assert grassmannian_to_shape(w, max(descents(w))).parts == (2, 1)


@given(partitions(max_len=5, max_part=6))
def test_conjugate_is_an_involution(parts):
    assert conjugate(conjugate(parts)) == parts
    assert sum(conjugate(parts)) == sum(parts)


def test_text_and_json_forms():
    lam = Shape((7, 4, 3, 1, 1), 3)
    assert str(lam) == "7 4 3 1 1 | k=3 | t=0"
    assert lam.to_json() == {"parts": [7, 4, 3, 1, 1], "k": 3, "type": 0}
    assert Shape.from_json(lam.to_json()) == lam
    assert parse_shape("3,1,1", 1) == Shape((3, 1, 1), 1)
    assert parse_shape("", 0) == Shape((), 0)
