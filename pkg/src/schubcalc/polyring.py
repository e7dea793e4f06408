"""Concrete symmetric-function families.

The X alphabet is passed as ``m``:

* ``m`` an integer: the explicit variables x1..xm;
* ``m=None``: the full infinite alphabet, represented exactly through the odd
  power sums ``p1, p3, p5, ...``.  Over the rationals Γ = Q[p1, p3, p5, ...],
  so this is a faithful model of Γ in every degree.

Y and Z alphabets are given as a count (``y1..yk``) or an explicit list of
variable names.

>>> str(gen_q(1, 2))
'2*x1 + 2*x2'
>>> str(gen_q(2, None))
'2*p1^2'
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping, Sequence

from gmpy2 import mpq

from .formal import eta_formal, schur_formal, theta_formal
from .mpoly import MPoly, _decode, _names
from .shapes import Shape, strict_partitions
from .weyl import ValidationError

__all__ = [
    "names",
    "gen_q",
    "q_series",
    "gen_theta_series",
    "eta_generators",
    "elementary",
    "complete",
    "power_sum",
    "supersym_h",
    "schur_super",
    "alternant_schur_oracle",
    "specialize",
    "theta_poly",
    "eta_poly",
    "Q_poly",
    "P_poly",
    "q_basis_expand",
    "p_basis_expand",
    "to_explicit",
    "NotInGamma",
    "is_symmetric_in",
]

Alphabet = int | Sequence[str] | None


class NotInGamma(ValueError):
    """The polynomial is not in the span of the Q-functions."""


def names(prefix: str, spec: int | Sequence[str]) -> list[str]:
    if isinstance(spec, int):
        return [f"{prefix}{i}" for i in range(1, spec + 1)]
    return list(spec)


def elementary(r: int, variables: Sequence[str]) -> MPoly:
    if r < 0 or r > len(variables):
        return MPoly()
    out = MPoly()
    for combo in itertools.combinations(variables, r):
        out = out + MPoly.monomial({v: 1 for v in combo})
    return out


def complete(r: int, variables: Sequence[str]) -> MPoly:
    if r < 0:
        return MPoly()
    out = MPoly()
    for combo in itertools.combinations_with_replacement(variables, r):
        exps: dict[str, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        out = out + MPoly.monomial(exps)
    return out if r else MPoly.const(1)


def power_sum(k: int, variables: Sequence[str]) -> MPoly:
    out = MPoly()
    for v in variables:
        out = out + MPoly.var(v, k)
    return out


@lru_cache(maxsize=None)
def _q_series(m: int | None, deg: int) -> tuple[MPoly, ...]:
    if m is None:
        # r q_r = sum over odd j <= r of 2 p_j q_{r-j}
        qs = [MPoly.const(1)]
        for r in range(1, deg + 1):
            s = MPoly()
            for j in range(1, r + 1, 2):
                s = s + MPoly.var(f"p{j}") * qs[r - j]
            qs.append(s * mpq(2, r))
        return tuple(qs)
    series = [MPoly.const(1)] + [MPoly() for _ in range(deg)]
    for i in range(1, m + 1):
        x = f"x{i}"
        new = []
        for r in range(deg + 1):
            s = series[r]
            for j in range(1, r + 1):
                s = s + 2 * MPoly.var(x, j) * series[r - j]
            new.append(s)
        series = new
    return tuple(series)


def q_series(m: int | None, deg: int) -> list[MPoly]:
    """[q_0, ..., q_deg] in the given X alphabet."""
    return list(_q_series(m, deg))


def gen_q(r: int, m: int | None) -> MPoly:
    """q_r(X) from prod (1 + x t)/(1 - x t)."""
    if r < 0:
        return MPoly()
    return _q_series(m, r)[r]


def gen_theta_series(r: int, m: int | None, k: int | Sequence[str]) -> MPoly:
    """ϑ_r(X; Y_(k)) = sum_i q_{r-i}(X) e_i(Y_(k))."""
    ys = names("y", k)
    if r < 0:
        return MPoly()
    qs = _q_series(m, r)
    return sum((qs[r - i] * elementary(i, ys) for i in range(0, min(r, len(ys)) + 1)), MPoly())


def eta_generators(k: int, m: int | None, ys: int | Sequence[str] | None = None) -> tuple[MPoly, MPoly]:
    """(η_k, η'_k) = (ϑ_k/2 + e_k(Y_(k))/2, ϑ_k/2 - e_k(Y_(k))/2)."""
    yv = names("y", k if ys is None else ys)
    th = gen_theta_series(k, m, yv)
    ek = elementary(k, yv)
    half = mpq(1, 2)
    return th * half + ek * half, th * half - ek * half


def supersym_h(r: int, y: int | Sequence[str], z: int | Sequence[str]) -> MPoly:
    """h_r(Y/Z) from prod (1 - y t)^{-1} prod (1 - z t)."""
    ys, zs = names("y", y), names("z", z)
    if r < 0:
        return MPoly()
    return sum(
        (complete(r - i, ys) * elementary(i, zs) * (-1) ** i for i in range(0, min(r, len(zs)) + 1)),
        MPoly(),
    )


def specialize(f: MPoly, assignment: Mapping[str, MPoly]) -> MPoly:
    """Substitute every symbol of a formal polynomial."""
    missing = [v for v in f.variables() if v not in assignment]
    if missing:
        raise ValidationError(f"no value for symbols {missing}")
    return f.subs(assignment)


def _symbol_index(name: str) -> int:
    i = len(name)
    while i and name[i - 1].isdigit():
        i -= 1
    return int(name[i:])


def schur_super(lam: Shape | Sequence[int], y: int | Sequence[str], z: int | Sequence[str] = 0) -> MPoly:
    """s_λ(Y/Z) = det(h_{λ_i + j - i}(Y/Z))."""
    parts = tuple(lam.parts if isinstance(lam, Shape) else lam)
    f = schur_formal(parts)
    return specialize(f, {v: supersym_h(_symbol_index(v), y, z) for v in f.variables()})


def alternant_schur_oracle(mu: Shape | Sequence[int], d: int, prefix: str = "y") -> MPoly:
    """s_μ(y_1..y_d) as a ratio of alternants, with exact division."""
    parts = list(mu.parts if isinstance(mu, Shape) else mu)
    if len(parts) > d:
        return MPoly()
    parts += [0] * (d - len(parts))
    ys = names(prefix, d)
    num = MPoly()
    for perm in itertools.permutations(range(d)):
        sign = 1
        for a in range(d):
            for b in range(a + 1, d):
                if perm[a] > perm[b]:
                    sign = -sign
        mono = {ys[i]: parts[perm[i]] + d - 1 - perm[i] for i in range(d)}
        num = num + MPoly.monomial({k: v for k, v in mono.items() if v}, sign)
    for i in range(d):
        for j in range(i + 1, d):
            num = num.div_linear(ys[i], MPoly.var(ys[j]))
    return num


def theta_poly(lam: Shape, m: int | None, ys: int | Sequence[str] | None = None) -> MPoly:
    """Θ_λ(X; Y_(k)): theta_formal with c_r -> ϑ_r(X; Y_(k))."""
    yv = names("y", lam.kk if ys is None else ys)
    f = theta_formal(lam)
    return specialize(f, {v: gen_theta_series(_symbol_index(v), m, yv) for v in f.variables()})


def eta_poly(lam: Shape, m: int | None, ys: int | Sequence[str] | None = None) -> MPoly:
    """H_λ(X; Y_(k)) with τ_r -> ϑ_r (r < k), ϑ_r/2 (r > k) and τ_k, τ'_k -> η_k, η'_k."""
    k = lam.kk
    yv = names("y", k if ys is None else ys)
    f = eta_formal(lam)
    assign = {}
    half = mpq(1, 2)
    for v in f.variables():
        r = _symbol_index(v)
        if v.startswith("taup"):
            assign[v] = eta_generators(k, m, yv)[1]
        elif r == k:
            assign[v] = eta_generators(k, m, yv)[0]
        elif r < k:
            assign[v] = gen_theta_series(r, m, yv)
        else:
            assign[v] = gen_theta_series(r, m, yv) * half
    return specialize(f, assign)


def Q_poly(lam: Shape | Sequence[int], m: int | None) -> MPoly:
    parts = tuple(lam.parts if isinstance(lam, Shape) else lam)
    return theta_poly(Shape(parts, 0), m, [])


def P_poly(lam: Shape | Sequence[int], m: int | None) -> MPoly:
    parts = tuple(lam.parts if isinstance(lam, Shape) else lam)
    return Q_poly(parts, m) * mpq(1, 2 ** len(parts))


def to_explicit(f: MPoly, m: int) -> MPoly:
    """Specialize power sums p_k to x1^k + ... + xm^k."""
    xs = names("x", m)
    mapping = {v: power_sum(_symbol_index(v), xs) for v in f.variables() if v.startswith("p")}
    return f.subs(mapping) if mapping else f


def _lex_vector(exps: dict[str, int], xs: list[str]) -> tuple[int, ...]:
    return tuple(exps.get(x, 0) for x in xs)


def q_basis_expand(f: MPoly, m: int | None = None) -> dict[tuple[int, ...], object]:
    """Coordinates of f in the Q_λ basis.

    Explicit alphabets use greedy elimination of the lex-leading monomial
    (Q_λ leads with 2^{ℓ(λ)} x^λ).  The power-sum model solves the square
    linear system on each graded piece.
    """
    if m is None:
        return _p_expand(f, Q_poly)
    xs = names("x", m)
    extra = [v for v in f.variables() if v not in xs]
    if extra:
        raise NotInGamma(f"unexpected variables {extra}")
    out: dict[tuple[int, ...], object] = {}
    rest = f
    while rest:
        lead_vec, lead_c = max(((_lex_vector(e, xs), c) for e, c in rest.items()), key=lambda t: (sum(t[0]), t[0]))
        lam = tuple(e for e in lead_vec if e)
        if list(lead_vec[: len(lam)]) != list(lam) or any(a <= b for a, b in zip(lam, lam[1:])):
            raise NotInGamma(f"leading exponent {lead_vec} is not a strict partition")
        coef = mpq(lead_c) / 2 ** len(lam)
        out[lam] = out.get(lam, 0) + coef
        rest = rest - Q_poly(lam, m) * coef
    return {k: _clean(v) for k, v in out.items() if v}


def p_basis_expand(f: MPoly) -> dict[tuple[int, ...], object]:
    """Coordinates of f in the P_λ basis (power-sum model)."""
    return _p_expand(f, P_poly)


def _clean(v):
    q = mpq(v)
    return int(q.numerator) if q.denominator == 1 else q


def _pweight(name: str) -> int:
    return _symbol_index(name)


@lru_cache(maxsize=None)
def _basis_inverse(d: int, which: str):
    """Rows: strict partitions of d; returns (monomial keys, inverse matrix)."""
    fn = Q_poly if which == "Q" else P_poly
    lams = strict_partitions(d)
    polys = [fn(lam, None) for lam in lams]
    keys = sorted({mm for p in polys for mm in p.terms})
    if len(keys) != len(lams):
        raise AssertionError("graded piece dimension mismatch")
    kpos = {k: i for i, k in enumerate(keys)}
    n = len(lams)
    # matrix A with A[row=monomial][col=lambda]
    A = [[mpq(0)] * n for _ in range(n)]
    for col, p in enumerate(polys):
        for mm, cval in p.terms.items():
            A[kpos[mm]][col] = mpq(cval)
    inv = _invert(A)
    return lams, keys, inv


def _invert(A):
    n = len(A)
    M = [row[:] + [mpq(1) if i == j else mpq(0) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [v / pv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def _p_expand(f: MPoly, fn) -> dict[tuple[int, ...], object]:
    which = "Q" if fn is Q_poly else "P"
    bad = [v for v in f.variables() if not v.startswith("p")]
    if bad:
        raise NotInGamma(f"unexpected variables {bad}")
    by_deg: dict[int, dict[int, object]] = {}
    for mm, cval in f.terms.items():
        d = sum(e * _pweight(_names[i]) for i, e in _decode(mm))
        by_deg.setdefault(d, {})[mm] = cval
    out = {}
    for d, terms in by_deg.items():
        if d == 0:
            out[()] = terms[0]
            continue
        lams, keys, inv = _basis_inverse(d, which)
        kpos = {k: i for i, k in enumerate(keys)}
        vec = [mpq(0)] * len(keys)
        for mm, cval in terms.items():
            if mm not in kpos:
                raise NotInGamma("monomial outside the graded piece")
            vec[kpos[mm]] = mpq(cval)
        for lam, row in zip(lams, inv):
            s = sum((a * b for a, b in zip(row, vec)), mpq(0))
            if s:
                out[lam] = _clean(s)
    return out


def is_symmetric_in(f: MPoly, variables: Sequence[str]) -> bool:
    """Invariance under every adjacent transposition of the listed variables."""
    for a, b in zip(variables, variables[1:]):
        if f.rename({a: b, b: a}) != f:
            return False
    return True
