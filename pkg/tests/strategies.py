"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from schubcalc.mpoly import MPoly
from schubcalc.weyl import SignedPermutation


@st.composite
def signed_perms(draw, group: str = "C", min_rank: int = 1, max_rank: int = 4):
    n = draw(st.integers(max(min_rank, 2 if group == "D" else 1), max_rank))
    perm = draw(st.permutations(list(range(1, n + 1))))
    if group == "A":
        return SignedPermutation("A", tuple(perm))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    vals = [-v if s else v for v, s in zip(perm, signs)]
    if group == "D" and sum(signs) % 2:
        vals[0] = -vals[0]
    return SignedPermutation(group, tuple(vals))


VARS = ["x1", "x2", "y1", "y2", "z1"]


@st.composite
def polys(draw, variables=VARS, max_terms: int = 4, max_exp: int = 2):
    out = MPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {v: draw(st.integers(0, max_exp)) for v in variables}
        coeff = draw(st.integers(-3, 3))
        out = out + MPoly.monomial({v: e for v, e in exps.items() if e}, coeff)
    return out


@st.composite
def partitions(draw, max_len: int = 4, max_part: int = 5, strict: bool = False):
    ell = draw(st.integers(0, max_len))
    parts = sorted(draw(st.lists(st.integers(1, max_part), min_size=ell, max_size=ell)), reverse=True)
    if strict:
        parts = sorted(set(parts), reverse=True)
    return tuple(parts)
