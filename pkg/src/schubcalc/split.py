"""Splitting coefficients and splitting formulas for double Schubert polynomials.

A problem fixes w, an increasing sequence a : a_1 < ... < a_p (descents of w
must lie in it) and b : b_1 < ... < b_q (descents of w^{-1} must lie in it).
Variables are grouped as Y_i = {y_{a_{i-1}+1}, ..., y_{a_i}} and
Z_j = {z_{b_{j-1}+1}, ..., z_{b_j}} (a_0 = b_0 = 0, box counts as 0).

The coefficient of a shape sequence (λ^1, ..., λ^{p+q-1}) sums, over reduced
factorizations u_1 ... u_{p+q-1} = w, the product of Stanley coefficients of
the factors, the middle factor u_q contributing e (type C), d (type D) or c
(type A) for k = a_1.  Factors u_j (j != q) lie in S_∞ and fix 1..b_{q-j}
(j < q) or 1..a_{j-q} (j > q).

>>> from .weyl import parse_perm
>>> prob = SplitProblem(parse_perm("3,-1,-2"), (1, 2), (0, 1), "C")
>>> sorted((tuple(s.parts for s in lam), c) for lam, c in split_coefficients(prob).items())
[(((), (3, 2), (1,)), 1), (((), (4, 2), ()), 1), (((1,), (3, 2), ()), 1)]
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .mpoly import MPoly
from .nilcox import double_schubert
from .polyring import eta_poly, schur_super, theta_poly
from .shapes import Shape, _kint, is_grassmannian
from .transition import stanley_coeffs
from .weyl import (
    BOX,
    AllOf,
    Anything,
    FixesUpTo,
    InSymmetric,
    SignedPermutation,
    ValidationError,
    descents,
    reduced_factorizations,
)

__all__ = [
    "SplitProblem",
    "UnsupportedCase",
    "split_coeff",
    "split_coefficients",
    "split_terms",
    "split_formula",
    "uniqueness_check",
    "is_compatible",
    "minimal_sequence",
]


class UnsupportedCase(ValidationError):
    """Outside the hypotheses of the splitting theorem."""


def is_compatible(w: SignedPermutation, seq: Sequence[int]) -> bool:
    """All descents of w lie in seq (type D with a_1 = 1 also allows box)."""
    allowed = set(seq)
    if w.type == "D" and seq and seq[0] == 1:
        allowed.add(BOX)
    return descents(w) <= allowed


def minimal_sequence(w: SignedPermutation, first: int | None = None) -> tuple[int, ...]:
    """The smallest compatible sequence, optionally forced to start with ``first``."""
    d = set(descents(w))
    if first is not None:
        d.add(first)
    if not d:
        return (1,) if w.type == "A" else (0,)
    return tuple(sorted(d))


@dataclass(frozen=True)
class SplitProblem:
    w: SignedPermutation
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    lie_type: str = "C"

    def __post_init__(self) -> None:
        t = self.lie_type.upper()
        object.__setattr__(self, "lie_type", t)
        object.__setattr__(self, "a_seq", tuple(self.a_seq))
        object.__setattr__(self, "b_seq", tuple(self.b_seq))
        if t not in ("A", "B", "C", "D"):
            raise ValidationError(f"unknown Lie type {self.lie_type!r}")
        want = {"A": "A", "B": "BC", "C": "BC", "D": "D"}[t]
        w = self.w
        if w.type != want:
            if w.type == "A":
                object.__setattr__(self, "w", w.as_type(want))
            else:
                raise ValidationError(f"{w} is not in the type {t} group")
        if t == "D":
            for name in ("a_seq", "b_seq"):
                seq = getattr(self, name)
                if seq and seq[0] == 0:
                    object.__setattr__(self, name, (BOX,) + seq[1:])
        for name, seq in (("a", self.a_seq), ("b", self.b_seq)):
            if not seq:
                raise ValidationError(f"{name} sequence is empty")
            ints = [_kint(v) for v in seq]
            if any(x >= y for x, y in zip(ints, ints[1:])) or ints[0] < 0:
                raise ValidationError(f"{name} sequence must be increasing and nonnegative")
            if BOX in seq[1:]:
                raise ValidationError("box may only appear first")
        if t == "A" and _kint(self.a_seq[0]) <= 0:
            raise UnsupportedCase("type A splitting needs a_1 > 0")
        if t in ("B", "C") and self.b_seq[0] != 0:
            raise UnsupportedCase("types B/C need b_1 = 0; the case b_1 > 0 is not covered by the splitting theorem")
        if t == "D" and self.b_seq[0] != BOX:
            raise UnsupportedCase("type D needs b_1 = box; the other cases are not covered by the splitting theorem")
        if not is_compatible(self.w, self.a_seq):
            raise ValidationError(f"{self.w} is not compatible with a = {self.a_seq}")
        if not is_compatible(self.w.inverse(), self.b_seq):
            raise ValidationError(f"{self.w.inverse()} is not compatible with b = {self.b_seq}")

    @property
    def p(self) -> int:
        return len(self.a_seq)

    @property
    def q(self) -> int:
        return len(self.b_seq)

    @property
    def k(self) -> int:
        return self.a_seq[0]

    def y_block(self, i: int) -> list[str]:
        a = [0] + [_kint(v) for v in self.a_seq]
        return [f"y{j}" for j in range(a[i - 1] + 1, a[i] + 1)]

    def z_block(self, j: int) -> list[str]:
        b = [0] + [_kint(v) for v in self.b_seq]
        return [f"z{i}" for i in range(b[j - 1] + 1, b[j] + 1)]

    def slot_predicates(self) -> tuple:
        p, q = self.p, self.q
        a = [_kint(v) for v in self.a_seq]
        b = [_kint(v) for v in self.b_seq]
        preds = []
        for j in range(1, p + q):
            if j < q:
                preds.append(AllOf((InSymmetric(), FixesUpTo(b[q - j - 1]))))
            elif j == q:
                preds.append(InSymmetric() if self.lie_type == "A" else Anything())
            else:
                preds.append(AllOf((InSymmetric(), FixesUpTo(a[j - q - 1]))))
        return tuple(preds)


def _type_a(u: SignedPermutation) -> SignedPermutation:
    return u if u.type == "A" else SignedPermutation("A", u.values)


@lru_cache(maxsize=None)
def _outer_coeffs(u: SignedPermutation) -> tuple:
    return tuple(stanley_coeffs(_type_a(u), "A").items())


@lru_cache(maxsize=None)
def _middle_coeffs(u: SignedPermutation, lie_type: str, k: int) -> tuple:
    if lie_type == "A":
        return _outer_coeffs(u)
    kind = "D" if lie_type == "D" else "C"
    return tuple(stanley_coeffs(u, kind, k).items())


@lru_cache(maxsize=None)
def split_coefficients(prob: SplitProblem) -> dict[tuple[Shape, ...], int]:
    """All nonzero c/f/g coefficients keyed by shape sequences."""
    out: dict[tuple[Shape, ...], int] = {}
    q = prob.q
    for fac in reduced_factorizations(prob.w, prob.p + q - 1, prob.slot_predicates()):
        options = []
        for j, u in enumerate(fac, start=1):
            options.append(_middle_coeffs(u, prob.lie_type, prob.k) if j == q else _outer_coeffs(u))
        for combo in itertools.product(*options):
            key = tuple(s for s, _ in combo)
            val = 1
            for _, c in combo:
                val *= c
            out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def split_coeff(prob: SplitProblem, shapes: Sequence[Shape | Sequence[int]]) -> int:
    """The coefficient of one shape sequence (zero if absent)."""
    if len(shapes) != prob.p + prob.q - 1:
        raise ValidationError(f"expected {prob.p + prob.q - 1} shapes")
    want = tuple(tuple(s.parts) if isinstance(s, Shape) else tuple(s) for s in shapes)
    total = 0
    for key, c in split_coefficients(prob).items():
        if tuple(s.parts for s in key) == want:
            total += c
    return total


def _middle_factor(prob: SplitProblem, lam: Shape) -> MPoly:
    ys = prob.y_block(1)
    if prob.lie_type == "A":
        return schur_super(lam.parts, ys, prob.z_block(1))
    if prob.lie_type == "D":
        return eta_poly(lam, None, ys)
    return theta_poly(lam, None, ys)


def split_terms(prob: SplitProblem) -> list[tuple[int, tuple[Shape, ...], MPoly]]:
    """(coefficient, shapes, product of factors) for every summand."""
    p, q = prob.p, prob.q
    out = []
    for shapes, c in sorted(split_coefficients(prob).items(), key=lambda kv: [s.parts for s in kv[0]]):
        term = MPoly.const(1)
        for j, lam in enumerate(shapes, start=1):
            if j < q:
                f = schur_super(lam.parts, [], prob.z_block(q + 1 - j))
            elif j == q:
                f = _middle_factor(prob, lam)
            else:
                f = schur_super(lam.parts, prob.y_block(j - q + 1), [])
            term = term * f
            if not term:
                break
        out.append((c, shapes, term))
    return out


def split_formula(prob: SplitProblem) -> MPoly:
    """The right-hand side of the splitting formula as a polynomial."""
    total = MPoly()
    for c, _, term in split_terms(prob):
        total = total + term * c
    if prob.lie_type == "B":
        total = total * mpq(1, 2 ** prob.w.negatives())
    return total


def target(prob: SplitProblem) -> MPoly:
    """The double Schubert polynomial the formula should reproduce."""
    return double_schubert(prob.w, prob.lie_type)


# -- uniqueness -----------------------------------------------------------------------


def _partitions(d: int, max_part: int | None = None, max_len: int | None = None):
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    top = d if max_part is None else min(d, max_part)
    for first in range(top, 0, -1):
        for rest in _partitions(d - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def _middle_candidates(prob: SplitProblem, d: int) -> list[Shape]:
    from .shapes import k_strict_shapes

    if prob.lie_type == "A":
        return [Shape(lam, 0, plain=True) for lam in _partitions(d)]
    k = prob.k
    out = []
    for lam in _partitions(d):
        try:
            if prob.lie_type == "D":
                kk = _kint(k)
                if kk > 0 and kk in lam:
                    out.extend(Shape(lam, k, t, typed=True) for t in (1, 2))
                else:
                    out.append(Shape(lam, k, 0, typed=True))
            else:
                out.append(Shape(lam, k))
        except ValidationError:
            continue
    return out


def uniqueness_check(prob: SplitProblem) -> bool:
    """Whether the splitting expansion is the unique one in the product basis.

    Builds every product of factors of total degree l(w) that is nonzero,
    checks linear independence by exact rank and that the unique solution
    of the linear system is the computed coefficient family.
    """
    ell = prob.w.length()
    p, q = prob.p, prob.q
    nslots = p + q - 1
    basis: list[tuple[tuple[Shape, ...], MPoly]] = []
    for degs in _compositions(ell, nslots):
        choices = []
        for j, d in enumerate(degs, start=1):
            if j == q:
                choices.append(_middle_candidates(prob, d))
            elif j < q:
                nz = len(prob.z_block(q + 1 - j))
                choices.append([Shape(l, 0, plain=True) for l in _partitions(d, max_part=nz)])
            else:
                ny = len(prob.y_block(j - q + 1))
                choices.append([Shape(l, 0, plain=True) for l in _partitions(d, max_len=ny)])
        for shapes in itertools.product(*choices):
            term = MPoly.const(1)
            for j, lam in enumerate(shapes, start=1):
                if j < q:
                    f = schur_super(lam.parts, [], prob.z_block(q + 1 - j))
                elif j == q:
                    f = _middle_factor(prob, lam)
                else:
                    f = schur_super(lam.parts, prob.y_block(j - q + 1), [])
                term = term * f
            if term:
                basis.append((shapes, term))
    target_poly = split_formula(prob)
    if prob.lie_type == "B":
        target_poly = target_poly * 2 ** prob.w.negatives()
    coords = _solve_unique(basis, target_poly)
    if coords is None:
        return False
    # shape sequences whose factor product vanishes carry no information
    expected = {tuple(s.parts for s in sh): c for c, sh, term in split_terms(prob) if term}
    got: dict = {}
    for (shapes, _), c in zip(basis, coords):
        if c:
            key = tuple(s.parts for s in shapes)
            got[key] = got.get(key, 0) + c
    return {k: v for k, v in got.items() if v} == expected


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _solve_unique(basis, target_poly: MPoly):
    """Exact solve; None if the basis is dependent or the target is outside its span."""
    monos = sorted({m for _, f in basis for m in f.terms} | set(target_poly.terms))
    idx = {m: i for i, m in enumerate(monos)}
    ncols = len(basis)
    rows = [[mpq(0)] * (ncols + 1) for _ in monos]
    for j, (_, f) in enumerate(basis):
        for m, c in f.terms.items():
            rows[idx[m]][j] = mpq(c)
    for m, c in target_poly.terms.items():
        rows[idx[m]][ncols] = mpq(c)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            return None  # dependent columns
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                fct = rows[i][col]
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][ncols] != 0 for i in range(r, len(rows))):
        return None
    return [rows[i][ncols] for i in range(ncols)]
