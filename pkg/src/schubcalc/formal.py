"""Raising-operator expansions over abstract symbols.

Formal polynomials are :class:`~schubcalc.mpoly.MPoly` objects whose variables
are the symbols ``c{r}``, ``d{r}``, ``tau{r}`` and ``taup{k}`` (for τ_r, τ'_k).
``c_0 = 1`` and ``c_r = 0`` for r < 0 are applied when monomials are formed.

A raising expansion enumerates exponent vectors (m_ij) over pairs i < j.  Each
pair outside the ideal contributes the factor 1 - R_ij, each pair inside it
contributes (1 - R_ij)/(1 + R_ij) = 1 - 2R_ij + 2R_ij^2 - ...

>>> str(theta_formal(Shape((3, 1, 1), 1)))
'c1^2*c3 - c1*c4 - c2*c3'
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from gmpy2 import mpq

from .mpoly import MPoly
from .shapes import OrderIdeal, Shape, order_ideal
from .weyl import ValidationError

__all__ = [
    "FormalPoly",
    "RaisingSpec",
    "sym",
    "c",
    "expand_raising",
    "theta_formal",
    "eta_formal",
    "schur_formal",
    "jacobi_trudi",
    "q_pfaffian",
    "q_two_row",
    "c_to_tau",
    "difference_series",
    "formal_to_json",
    "formal_from_json",
    "symbol_degree",
]

FormalPoly = MPoly

_HALF = mpq(1, 2)


def sym(name: str, r: int) -> MPoly:
    """The symbol name_r with the conventions name_0 = 1, name_r = 0 (r < 0)."""
    if r < 0:
        return MPoly()
    if r == 0 and name in ("c", "d"):
        return MPoly.const(1)
    return MPoly.var(f"{name}{r}")


def c(r: int) -> MPoly:
    return sym("c", r)


@dataclass(frozen=True)
class RaisingSpec:
    """Which operator to expand: rows, pairs carrying (1-R)/(1+R), optional ⋆ row."""

    rows: int
    double_pairs: OrderIdeal = field(default_factory=frozenset)
    star_row: int | None = None
    type_tag: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        for i, j in self.double_pairs:
            if not (1 <= i < j <= self.rows):
                raise ValidationError(f"pair {(i, j)} outside {self.rows} rows")


def _assignments(alpha: tuple[int, ...], double: frozenset) -> Iterator[tuple[tuple[int, ...], int, frozenset]]:
    """Yield (target, coefficient, rows touched) for every admissible R.

    Columns j are processed from the last row upward; once every pair (i, j)
    with i < j is fixed, entry j can no longer change, so it must be >= 0.
    """
    n = len(alpha)
    cols = list(range(n, 1, -1))

    def column(vec: list[int], col_idx: int, coef: int, touched: frozenset):
        if col_idx == len(cols):
            yield tuple(vec), coef, touched
            return
        j = cols[col_idx]
        budget = vec[j - 1]
        if budget < 0:
            return

        def distribute(i: int, left: int, vec: list[int], coef: int, touched: frozenset):
            if i == j:
                yield from column(vec, col_idx + 1, coef, touched)
                return
            dbl = (i, j) in double
            top = left if dbl else min(1, left)
            for mm in range(0, top + 1):
                if mm == 0:
                    f = 1
                elif dbl:
                    f = 2 if mm % 2 == 0 else -2
                else:
                    f = -1
                if mm:
                    nv = list(vec)
                    nv[i - 1] += mm
                    nv[j - 1] -= mm
                    nt = touched | {i, j}
                else:
                    nv, nt = vec, touched
                yield from distribute(i + 1, left - mm, nv, coef * f, nt)

        yield from distribute(1, budget, vec, coef, touched)

    yield from column(list(alpha), 0, 1, frozenset())


def _c_monomial(entries, name: str = "c") -> MPoly | None:
    out = MPoly.const(1)
    for e in entries:
        if e < 0:
            return None
        if e:
            out = out * sym(name, e)
    return out


def expand_raising(spec: RaisingSpec, alpha: Sequence[int]) -> MPoly:
    """Expand the raising operator described by ``spec`` applied to c_alpha."""
    alpha = tuple(alpha)
    if len(alpha) != spec.rows:
        raise ValidationError("alpha must have spec.rows entries")
    if not alpha:
        return MPoly.const(1)
    acc: dict[int, object] = {}
    d = spec.star_row
    for target, coef, touched in _assignments(alpha, frozenset(spec.double_pairs)):
        if any(e < 0 for e in target):
            continue
        if d is None:
            mono = _c_monomial(target)
            factor = coef
        elif d in touched:
            mono = _c_monomial(target)
            factor = coef * _HALF
        else:
            rest = target[: d - 1] + target[d:]
            mono = _c_monomial(rest)
            tau = sym("tau" if spec.type_tag == 1 else "taup", spec.k)
            mono = mono * tau
            factor = coef
        for m, v in mono.terms.items():
            acc[m] = acc.get(m, 0) + factor * v
    return MPoly(acc)


@lru_cache(maxsize=None)
def _jt_cached(parts: tuple[int, ...]) -> MPoly:
    n = len(parts)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> MPoly:
        # Laplace expansion along ``row`` over the remaining columns
        if row == n:
            return MPoly.const(1)
        out = MPoly()
        for pos, j in enumerate(sorted(cols)):
            e = parts[row] + j - row
            if e < 0:
                continue
            entry = sym("c", e) if e else MPoly.const(1)
            term = entry * minor(row + 1, cols - {j})
            out = out - term if pos % 2 else out + term
        return out

    return minor(0, frozenset(range(n)))


def jacobi_trudi(parts: Sequence[int], name: str = "c") -> MPoly:
    """det(c_{λ_i + j - i}) by memoized Laplace expansion."""
    p = MPoly(_jt_cached(tuple(parts)).terms)
    if name != "c":
        p = p.rename({v: name + v[1:] for v in p.variables()})
    return p


def schur_formal(parts: Sequence[int], name: str = "c") -> MPoly:
    """R^0 c_λ = prod_{i<j} (1 - R_ij) c_λ, which equals det(c_{λ_i + j - i}).

    Computed as the determinant; ``expand_raising(RaisingSpec(len(λ)), λ)``
    gives the same polynomial through the operator expansion.
    """
    return jacobi_trudi(parts, name)


@lru_cache(maxsize=None)
def _theta_cached(lam: Shape) -> MPoly:
    ideal = frozenset(p for p in order_ideal(lam, "C") if p[1] <= len(lam))
    return expand_raising(RaisingSpec(len(lam), ideal), lam.parts)


def theta_formal(lam: Shape) -> MPoly:
    """Θ_λ(c) = R^λ c_λ with the ideal C(λ)."""
    return MPoly(_theta_cached(lam).terms)


def c_to_tau(f: MPoly, k: int) -> MPoly:
    """Rewrite c_r as τ_r (r < k), τ_k + τ'_k (r = k), 2τ_r (r > k)."""
    mapping = {}
    for v in f.variables():
        m = re.fullmatch(r"c(\d+)", v)
        if not m:
            continue
        r = int(m.group(1))
        if r < k:
            mapping[v] = MPoly.var(f"tau{r}")
        elif r == k:
            mapping[v] = MPoly.var(f"tau{r}") + MPoly.var(f"taup{r}")
        else:
            mapping[v] = 2 * MPoly.var(f"tau{r}")
    return f.subs(mapping) if mapping else f


@lru_cache(maxsize=None)
def _eta_cached(lam: Shape) -> MPoly:
    k = lam.kk
    ideal = frozenset(p for p in order_ideal(lam, "Cprime") if p[1] <= len(lam))
    spec = RaisingSpec(len(lam), ideal, lam.star_row(), lam.type_tag, k)
    raw = expand_raising(spec, lam.parts)
    return c_to_tau(raw, k) * mpq(1, 2 ** lam.ell_k())


def eta_formal(lam: Shape) -> MPoly:
    """H_λ(c) = 2^{-ℓ_k(λ)} R^λ ⋆ c_λ, written in τ_r and τ'_k."""
    if not lam.typed:
        raise ValidationError("eta polynomials need a typed shape")
    return MPoly(_eta_cached(lam).terms)


def q_two_row(a: int, b: int, name: str = "c") -> MPoly:
    """c_a c_b + 2 sum_{i>=1} (-1)^i c_{a+i} c_{b-i}."""
    out = sym(name, a) * sym(name, b)
    for i in range(1, b + 1):
        out = out + (2 if i % 2 == 0 else -2) * sym(name, a + i) * sym(name, b - i)
    return out


def _pfaffian(mat: list[list[MPoly]]) -> MPoly:
    n = len(mat)
    if n == 0:
        return MPoly.const(1)
    out = MPoly()
    for j in range(1, n):
        keep = [r for r in range(n) if r not in (0, j)]
        minor = [[mat[r][s] for s in keep] for r in keep]
        term = mat[0][j] * _pfaffian(minor)
        out = out + term if j % 2 == 1 else out - term
    return out


def q_pfaffian(lam: Shape | Sequence[int], name: str = "c") -> MPoly:
    """Pfaffian form of Q_λ(c) for strict λ, padded with a zero part if needed."""
    parts = list(lam.parts if isinstance(lam, Shape) else lam)
    if any(a <= b for a, b in zip(parts, parts[1:])):
        raise ValidationError("q_pfaffian needs a strict partition")
    if len(parts) % 2:
        parts.append(0)
    n = len(parts)
    mat = [[MPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            mat[i][j] = q_two_row(parts[i], parts[j], name)
            mat[j][i] = -mat[i][j]
    return _pfaffian(mat)


def difference_series(which: str, degree: int) -> list[MPoly]:
    """g_r (or h_r), 0 <= r <= degree, in the symbols c_i and d_i.

    g: (sum c_i t^i)(sum d_i t^i)^{-1};  h: (sum (-1)^i c_i t^i)^{-1}(sum (-1)^i d_i t^i).
    """
    if which == "g":
        num = [sym("c", i) for i in range(degree + 1)]
        den = [sym("d", i) for i in range(degree + 1)]
    elif which == "h":
        num = [sym("d", i) * (-1) ** i for i in range(degree + 1)]
        den = [sym("c", i) * (-1) ** i for i in range(degree + 1)]
    else:
        raise ValidationError("which must be 'g' or 'h'")
    inv = [MPoly.const(1)]
    for r in range(1, degree + 1):
        s = MPoly()
        for i in range(1, r + 1):
            s = s + den[i] * inv[r - i]
        inv.append(-s)
    return [sum((num[i] * inv[r - i] for i in range(r + 1)), MPoly()) for r in range(degree + 1)]


_sym_re = re.compile(r"^(c|d|tau|taup)(\d+)$")


def symbol_degree(name: str) -> int:
    m = _sym_re.match(name)
    return int(m.group(2)) if m else 1


def formal_to_json(f: MPoly) -> list[dict]:
    rows = []
    for exps, coef in f.items():
        mono = []
        for name in sorted(exps, key=lambda v: (_sym_re.match(v).group(1), -int(_sym_re.match(v).group(2)))):
            g = _sym_re.match(name)
            mono.extend([[g.group(1), int(g.group(2))]] * exps[name])
        deg = sum(s[1] for s in mono)
        q = mpq(coef)
        rows.append((deg, mono, {"coeff": [int(q.numerator), int(q.denominator)], "mono": mono}))
    rows.sort(key=lambda r: (r[0], r[1]))
    return [r[2] for r in rows]


def formal_from_json(data: list[dict]) -> MPoly:
    out = MPoly()
    for t in data:
        term = MPoly.const(mpq(*t["coeff"]))
        for name, r in t["mono"]:
            term = term * sym(name, r)
        out = out + term
    return out
