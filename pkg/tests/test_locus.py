import json
from pathlib import Path

import pytest

from schubcalc.locus import (
    SCHEMA,
    BundleExpr,
    LocusFormula,
    dumps,
    emit_locus,
    evaluate_locus,
    locus_from_json,
    locus_to_json,
    rank_conditions,
    render_locus,
    standard_roots,
)
from schubcalc.mpoly import MPoly
from schubcalc.nilcox import double_schubert
from schubcalc.schubops import GX, GY, geometrize, ideal_equal, xi
from schubcalc.shapes import Shape, grassmannian_to_shape, k_strict_shapes, shape_to_grassmannian
from schubcalc.split import minimal_sequence
from schubcalc.weyl import BOX, ValidationError, descents, elements, identity, parse_perm

GOLDEN = Path(__file__).parent / "golden"


def example_a():
    return emit_locus(parse_perm("3,-1,-2"), "C", 3, (1, 2), (0, 1))


def test_example_a_structure():
    f = example_a()
    assert len(f.terms) == 3
    middles = sorted(factors[1].shape.parts for _, factors in f.terms)
    assert middles == [(3, 2), (3, 2), (4, 2)]
    assert all(len(factors) == 4 - 1 for _, factors in f.terms)
    assert [c for c, _ in f.terms] == [1, 1, 1]


def test_example_a_sign_lives_in_the_flag_factor():
    f = example_a()
    roots = standard_roots("C", 3, (1, 2), (0, 1))
    signs = []
    for c, factors in f.terms:
        single = LocusFormula(f.lie_type, f.w, f.n, f.a_seq, f.b_seq, [(c, factors)])
        value = evaluate_locus(single, roots)
        mid = LocusFormula(f.lie_type, f.w, f.n, f.a_seq, f.b_seq, [(1, [factors[1]])])
        ratio = value.exact_div(evaluate_locus(mid, roots))
        signs.append(ratio)
    assert sorted(map(str, signs)) == sorted(["1", "-X2", "-Y1"])


def test_example_a_goldens():
    f = example_a()
    tex = (GOLDEN / "locus_example_a.tex").read_text().splitlines()
    assert render_locus(f) == tex[0]
    assert render_locus(f, "quotient") == tex[1]
    assert dumps(f) == (GOLDEN / "locus_example_a.json").read_text().rstrip("\n")


def test_json_roundtrip():
    f = example_a()
    data = json.loads(dumps(f))
    assert data["schema"] == SCHEMA
    back = locus_from_json(data)
    assert locus_to_json(back) == locus_to_json(f)
    assert render_locus(back) == render_locus(f)


def test_bundle_rendering():
    e = BundleExpr.of((1, "E"), (-1, "E_1"), (-1, "F_3"))
    assert e.render() == "E-E_1-F_{3}"
    assert BundleExpr.of((1, "Qhat_2")).render() == r"\widehat{Q}_2"


@pytest.mark.parametrize("k", [0, 1, 2])
def test_giambelli_specialization(k):
    n = 3
    checked = 0
    for lam in k_strict_shapes(n, k, "C"):
        w = shape_to_grassmannian(lam, "C", n)
        if minimal_sequence(w.inverse(), 0) != (0,):
            continue
        checked += 1
        f = emit_locus(w, "C", n, (k,), (0,))
        assert len(f.terms) == 1
        c, factors = f.terms[0]
        assert c == 1 and len(factors) == 1
        assert factors[0].kind == "Theta" and factors[0].shape == lam
        assert factors[0].bundle == BundleExpr.of((1, "E"), (-1, "E_1"), (-1, f"F_{n}"))
    assert checked


def test_type_a_grassmannian_is_one_schur_class():
    w = parse_perm("1,3,2,4", "A")
    f = emit_locus(w, "A", 4, (2,), (2,))
    assert len(f.terms) == 1
    assert f.terms[0][1][0].kind == "s"


def test_rank_conditions():
    assert rank_conditions(parse_perm("-1"), "C", 1, (0,))[(1, 1)] == 1
    n = 3
    table = rank_conditions(identity("C", n), "C", n, (0,))
    # identity: E_1 = E_0 meets F_s only in the forced dimension max(0, s - n)
    for s in range(1, 2 * n + 1):
        assert table[(1, s)] == max(0, s - n)
    with pytest.raises(ValidationError):
        rank_conditions(parse_perm("2,1,3"), "C", 3, (0,))


def test_type_a_rank_conditions_match_grassmannian_thresholds():
    n, d = 4, 2
    for w in elements("A", n):
        if descents(w) != {d}:
            continue
        lam = grassmannian_to_shape(w, d).parts + (0,) * d
        table = rank_conditions(w, "A", n, (d,))
        for j in range(1, d + 1):
            s = n - d + j - lam[j - 1]
            assert table[(1, s)] >= j
            if s > 1:
                assert table[(1, s - 1)] < j


def test_evaluation_of_simple_factors():
    f = LocusFormula("C", identity("C", 2), 2, (0,), (0,))
    assert evaluate_locus(f) == 0
    w = parse_perm("-1,2")
    f = emit_locus(w, "C", 2, (0,), (0,))
    assert ideal_equal(evaluate_locus(f), xi(1, 2), "C", 2)


@pytest.mark.parametrize("w", elements("C", 3), ids=str)
def test_round_trip_type_c(w):
    a, b = minimal_sequence(w, 0), minimal_sequence(w.inverse(), 0)
    f = emit_locus(w, "C", 3, a, b)
    want = geometrize(double_schubert(w, "C"), "C", 3)
    assert ideal_equal(evaluate_locus(f), want, "C", 3)
    assert ideal_equal(evaluate_locus(f, form="quotient"), want, "C", 3)


@pytest.mark.parametrize("w", elements("D", 3), ids=str)
def test_round_trip_type_d(w):
    a, b = minimal_sequence(w, BOX), minimal_sequence(w.inverse(), BOX)
    f = emit_locus(w, "D", 3, a, b)
    assert ideal_equal(evaluate_locus(f), geometrize(double_schubert(w, "D"), "D", 3), "D", 3)


@pytest.mark.parametrize("w", elements("C", 2), ids=str)
def test_type_b_scaling(w):
    a, b = minimal_sequence(w, 0), minimal_sequence(w.inverse(), 0)
    fb = emit_locus(w, "B", 2, a, b)
    fc = emit_locus(w, "C", 2, a, b)
    for (cb, facs_b), (cc, facs_c) in zip(fb.terms, fc.terms):
        assert cb == cc
        scales = [fac.scale for fac in facs_b if fac.kind.startswith("Theta")]
        assert len(scales) == 1 and scales[0] * 2 ** w.negatives() == 1
    assert ideal_equal(evaluate_locus(fb), geometrize(double_schubert(w, "B"), "B", 2), "C", 2)


def test_hypotheses():
    with pytest.raises(ValidationError):
        emit_locus(parse_perm("3,-1,-2"), "C", 3, (1, 2), (1,))
    with pytest.raises(ValidationError):
        emit_locus(parse_perm("3,-1,-2"), "C", 2, (1, 2), (0, 1))
