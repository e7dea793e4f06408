import json
from collections import Counter

import pytest

from schubcalc.nilcox import stanley_function
from schubcalc.polyring import p_basis_expand, q_basis_expand
from schubcalc.shapes import Shape, is_grassmannian, is_increasing_up_to, shape_to_grassmannian, strict_partitions
from schubcalc.transition import (
    TransitionTree,
    fg_tableau_count,
    kraskiewicz_count,
    longest_unimodal,
    shift_up,
    stanley_coeffs,
    transition_tree,
)
from schubcalc.weyl import BOX, ValidationError, elements, identity, length, parse_perm, simple


def parts_counts(w, kind, k=0):
    return {s.parts: m for s, m in stanley_coeffs(w, kind, k).items()}


def test_identity_is_a_single_node():
    t = transition_tree(identity("C", 3), "C", 0)
    assert t.root.is_leaf() and len(t.leaves) == 1


def test_type_a_figure_leaves():
    w = parse_perm("143265", "A")
    counts = parts_counts(w, "A")
    # leaf shapes are regression values, the total of three is the documented one
    assert counts == {(2, 1, 1): 1, (2, 2): 1, (3, 1): 1}
    assert sum(counts.values()) == 3
    assert sum(fg_tableau_count(w, lam) for lam in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]) == 3


def test_mixed_coefficients_example():
    w = parse_perm("3,-1,2,6,4,5")
    counts = parts_counts(w, "C", 1)
    assert counts == {(2, 1, 1, 1): 1, (5,): 1, (3, 1, 1): 2, (4, 1): 1, (3, 2): 1}


def test_grassmannian_root_is_its_own_leaf():
    lam = Shape((4, 2, 1), 1)
    w = shape_to_grassmannian(lam, "C")
    assert stanley_coeffs(w, "C", 1) == {lam: 1}


def test_precondition():
    with pytest.raises(ValidationError):
        transition_tree(parse_perm("2,1,3"), "C", 2)


@pytest.mark.parametrize("kind,k", [("C", 0), ("C", 1), ("C", 2), ("D", BOX), ("D", 2), ("A", 0)])
def test_tree_invariants(kind, k):
    group = {"C": "C", "D": "D", "A": "A"}[kind]
    n = 4 if kind == "A" else 3
    for w in elements(group, n):
        if kind != "A" and not is_increasing_up_to(w, k):
            continue
        tree = transition_tree(w, kind, k)
        ell = length(w)
        assert all(length(node.element) == ell for node in tree.nodes())
        for leaf, shape in tree.leaves:
            if kind != "A":
                assert is_grassmannian(leaf, k)
            assert shape.weight == ell
        counts = stanley_coeffs(w, kind, k)
        assert sum(counts.values()) == len(tree.leaves)


@pytest.mark.parametrize("w", elements("A", 4), ids=str)
def test_fomin_greene_oracle(w):
    counts = parts_counts(w, "A")
    ell = length(w)
    from schubcalc.split import _partitions

    for lam in _partitions(ell):
        assert fg_tableau_count(w, lam) == counts.get(lam, 0)


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_kraskiewicz_and_q_expansion(w):
    counts = parts_counts(w, "C", 0)
    for lam in strict_partitions(length(w)):
        assert kraskiewicz_count(w, lam) == counts.get(tuple(lam), 0)
    assert q_basis_expand(stanley_function(w)) == counts


@pytest.mark.parametrize("w", elements("D", 3), ids=str)
def test_type_d_p_expansion(w):
    assert p_basis_expand(stanley_function(w)) == parts_counts(w, "D", BOX)


def test_tableau_oracles_small_cases():
    assert fg_tableau_count(simple("A", 2, 3), (1,)) == 1
    assert fg_tableau_count(simple("A", 2, 3), (2,)) == 0
    assert kraskiewicz_count(simple("C", 0, 1), (1,)) == 1
    assert kraskiewicz_count(parse_perm("2,1"), (1, 1)) == 0
    assert longest_unimodal([3, 1, 2, 4, 0]) == 4


def test_shift_invariance_of_leaf_shapes():
    for w in elements("A", 4):
        a = Counter(parts_counts(w, "A"))
        b = Counter(parts_counts(shift_up(w), "A"))
        assert a == b


def test_serialization():
    tree = transition_tree(parse_perm("3,-1,2,6,4,5"), "C", 1)
    data = json.loads(tree.dumps())
    assert data["tree"]["node"] == "3,-1,2,6,4,5"
    again = TransitionTree.from_json(data)
    assert again.to_json() == tree.to_json()
    assert sorted(map(str, (s for _, s in again.leaves))) == sorted(map(str, (s for _, s in tree.leaves)))
    dot = tree.to_dot()
    assert dot.startswith("digraph") and "3,-1,2,6,4,5" in dot
