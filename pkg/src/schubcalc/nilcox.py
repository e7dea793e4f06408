"""NilCoxeter algebras and double Schubert polynomials.

An element of the nilCoxeter algebra of W_n (or W~_n) is a finite sum
sum_w f_w u_w with polynomial coefficients; u_v u_w = u_{vw} when lengths add
and vanishes otherwise.

The factor C(X) = C(x_1) C(x_2) ... is evaluated in one of two ways:

* ``x_count=m`` multiplies the m factors C(x_1)..C(x_m) directly;
* ``x_count=None`` uses the infinite alphabet.  The coefficients of C(t)
  commute and C(t) C(-t) = 1, so log C(t) = sum_{k odd} L_k t^k and
  C(X) = exp(sum_k L_k p_k(X)) with p_k the odd power sums.  The same holds
  for D(t).

Products are taken modulo the span of basis elements that cannot occur as a
segment u of a reduced factorization w = a u b; that span is a two-sided ideal,
so the coefficient of u_w is unaffected.

>>> from .weyl import parse_perm
>>> str(double_schubert(parse_perm("3,2,1", "A"), "A"))
'y1^2*y2 - y1^2*z1 - y1*y2*z1 - y1*y2*z2 + y1*z1^2 + y1*z1*z2 + y2*z1*z2 - z1^2*z2'
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from gmpy2 import mpq

from .mpoly import MPoly
from .weyl import (
    BOX,
    SignedPermutation,
    ValidationError,
    left_factors,
    letters,
)

__all__ = [
    "NCElement",
    "FidelityError",
    "nc_multiply",
    "nc_generator",
    "linear_factor",
    "factor_A",
    "factor_Atilde",
    "factor_C",
    "factor_D",
    "segments",
    "cx_coefficients",
    "double_schubert",
    "stanley_function",
    "schubert_table",
]

Key = tuple[int, ...]


class FidelityError(ValueError):
    """Too few X variables to represent the answer faithfully."""


_LIE = {"A": "A", "B": "BC", "C": "BC", "BC": "BC", "D": "D"}


def _group_type(lie_type: str) -> str:
    try:
        return _LIE[lie_type.upper()]
    except KeyError:
        raise ValidationError(f"unknown Lie type {lie_type!r}") from None


# -- fast tuple arithmetic -------------------------------------------------------


@lru_cache(maxsize=None)
def _length(t: str, v: Key) -> int:
    n = len(v)
    inv = 0
    neg = 0
    for i in range(n):
        a = v[i]
        for j in range(i + 1, n):
            b = v[j]
            if a > b:
                inv += 1
            if a + b < 0:
                neg += 1
        if t == "BC" and a < 0:
            neg += 1
    return inv + (neg if t != "A" else 0)


def _compose(a: Key, b: Key) -> Key:
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def _simple_key(r: int, n: int) -> Key:
    v = list(range(1, n + 1))
    if r == 0:
        v[0] = -1
    elif r == BOX:
        v[0], v[1] = -2, -1
    else:
        v[r - 1], v[r] = v[r], v[r - 1]
    return tuple(v)


def _check_letter(t: str, r: int, n: int) -> None:
    if r not in letters(t, n):
        raise ValidationError(f"no generator u_{r} in rank {n} type {t}")


# -- the algebra -------------------------------------------------------------------


@dataclass
class NCElement:
    """sum_w f_w u_w over a fixed group (type in {'A','BC','D'}) of rank n.

    ``universe`` (optional) is a factor-closed set of keys; terms outside it are
    discarded, which is the quotient by a two-sided ideal.  ``max_length``
    truncates by Coxeter length, also an ideal.
    """

    type: str
    n: int
    support: dict = field(default_factory=dict)
    universe: frozenset | None = None
    max_length: int | None = None

    @property
    def algebra(self) -> str:
        return "Wtilde" if self.type == "D" else "W"

    @classmethod
    def one(cls, type: str, n: int, universe=None, max_length=None) -> "NCElement":
        return cls(_group_type(type), n, {tuple(range(1, n + 1)): MPoly.const(1)}, universe, max_length)

    def _admit(self, key: Key, ell: int) -> bool:
        if self.max_length is not None and ell > self.max_length:
            return False
        return self.universe is None or key in self.universe

    def coefficient(self, w: SignedPermutation) -> MPoly:
        """<h, w>."""
        if w.support_rank > self.n:
            return MPoly()
        return self.support.get(w.padded(self.n).values, MPoly())

    def items(self) -> Iterable[tuple[SignedPermutation, MPoly]]:
        for k, f in self.support.items():
            yield SignedPermutation(self.type, k), f

    def copy(self) -> "NCElement":
        return NCElement(self.type, self.n, dict(self.support), self.universe, self.max_length)

    def __add__(self, other: "NCElement") -> "NCElement":
        _compatible(self, other)
        out = self.copy()
        for k, f in other.support.items():
            s = out.support.get(k, MPoly()) + f
            if s:
                out.support[k] = s
            else:
                out.support.pop(k, None)
        return out

    def scale(self, f) -> "NCElement":
        out = self.copy()
        out.support = {k: g * f for k, g in self.support.items() if g * f}
        return out

    def __mul__(self, other: "NCElement") -> "NCElement":
        return nc_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.type == other.type and self.n == other.n and self.support == other.support

    def times_linear(self, r: int, coef: MPoly, side: str = "right") -> "NCElement":
        """h (1 + coef u_r) or (1 + coef u_r) h."""
        _check_letter(self.type, r, self.n)
        s = _simple_key(r, self.n)
        out = dict(self.support)
        for k, f in self.support.items():
            nk = _compose(k, s) if side == "right" else _compose(s, k)
            ell = _length(self.type, nk)
            if ell != _length(self.type, k) + 1 or not self._admit(nk, ell):
                continue
            g = out.get(nk, MPoly()) + f * coef
            if g:
                out[nk] = g
            else:
                out.pop(nk, None)
        return NCElement(self.type, self.n, out, self.universe, self.max_length)


def _compatible(a: NCElement, b: NCElement) -> None:
    if a.type != b.type or a.n != b.n:
        raise ValidationError("nilCoxeter elements from different algebras")


def nc_multiply(a: NCElement, b: NCElement) -> NCElement:
    """Bilinear product with u_v u_w = u_{vw} when lengths add, else 0."""
    _compatible(a, b)
    universe = a.universe if b.universe is None else b.universe
    max_length = a.max_length if b.max_length is None else b.max_length
    out: dict = {}
    blen = {k: _length(a.type, k) for k in b.support}
    res = NCElement(a.type, a.n, out, universe, max_length)
    for ka, fa in a.support.items():
        la = _length(a.type, ka)
        for kb, fb in b.support.items():
            kc = _compose(ka, kb)
            ell = la + blen[kb]
            if _length(a.type, kc) != ell or not res._admit(kc, ell):
                continue
            g = out.get(kc, MPoly()) + fa * fb
            if g:
                out[kc] = g
            else:
                out.pop(kc, None)
    return res


def nc_generator(type: str, n: int, r: int, coef=1) -> NCElement:
    """coef * u_r."""
    t = _group_type(type) if len(type) == 1 else type
    _check_letter(t, r, n)
    return NCElement(t, n, {_simple_key(r, n): MPoly._coerce(coef)})


def linear_factor(type: str, n: int, r: int, coef) -> NCElement:
    """1 + coef u_r."""
    return NCElement.one(type, n) + nc_generator(type, n, r, coef)


def _product(type: str, n: int, factors: list[tuple[int, MPoly]], universe=None, max_length=None) -> NCElement:
    acc = NCElement.one(type, n, universe, max_length)
    for r, coef in factors:
        acc = acc.times_linear(r, coef)
    return acc


def _a_word(n: int, i: int) -> list[int]:
    return list(range(n - 1, i - 1, -1))


def factor_A(type: str, n: int, i: int, t) -> NCElement:
    """A_i(t) = (1 + t u_{n-1}) ... (1 + t u_i)."""
    t = MPoly._coerce(t)
    return _product(type, n, [(r, t) for r in _a_word(n, i)])


def factor_Atilde(type: str, n: int, i: int, t) -> NCElement:
    """Ã_i(t) = (1 - t u_i) ... (1 - t u_{n-1})."""
    t = -MPoly._coerce(t)
    return _product(type, n, [(r, t) for r in range(i, n)])


def _c_word(type: str, n: int) -> list[int]:
    if type == "BC":
        return list(range(n - 1, -1, -1)) + list(range(0, n))
    if type == "D":
        return list(range(n - 1, 0, -1)) + [BOX] + list(range(2, n))
    raise ValidationError("C(t)/D(t) need type B/C or D")


def factor_C(n: int, t) -> NCElement:
    """C(t) = (1 + t u_{n-1}) ... (1 + t u_0)(1 + t u_0) ... (1 + t u_{n-1})."""
    t = MPoly._coerce(t)
    return _product("BC", n, [(r, t) for r in _c_word("BC", n)])


def factor_D(n: int, t) -> NCElement:
    """D(t) = (1 + t u_{n-1}) ... (1 + t u_1)(1 + t u_box)(1 + t u_2) ... (1 + t u_{n-1})."""
    t = MPoly._coerce(t)
    return _product("D", n, [(r, t) for r in _c_word("D", n)])


# -- segments ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def segments(w: SignedPermutation, n: int) -> frozenset:
    """Keys (rank n) of all u with w = a u b reduced."""
    out = set()
    for y in left_factors(w):
        for x in left_factors(y):
            out.add((x.inverse() * y).padded(n).values)
    return frozenset(out)


# -- C(X) ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ct_coeffs(type: str, n: int, universe: frozenset | None, max_length: int) -> dict:
    """Integer coefficients c_v with C(t) = sum_v c_v t^{l(v)} u_v."""
    one = MPoly.const(1)
    acc = _product(type, n, [(r, one) for r in _c_word(type, n)], universe, max_length)
    return {k: f.constant_term() for k, f in acc.support.items()}


@lru_cache(maxsize=None)
def _log_coeffs(type: str, n: int, universe: frozenset | None, max_length: int) -> dict:
    """Rational a_v with log C(t) = sum_v a_v t^{l(v)} u_v (graded recurrence)."""
    c = _ct_coeffs(type, n, universe, max_length)
    by_len: dict[int, dict] = {}
    for k, v in c.items():
        by_len.setdefault(_length(type, k), {})[k] = mpq(v)
    logs: dict[int, dict] = {}
    for d in range(1, max_length + 1):
        # L_d = C_d - (1/d) sum_{k<d} k L_k C_{d-k}
        cur = dict(by_len.get(d, {}))
        for kdeg in range(1, d):
            for ka, va in logs.get(kdeg, {}).items():
                for kb, vb in by_len.get(d - kdeg, {}).items():
                    kc = _compose(ka, kb)
                    if _length(type, kc) != d:
                        continue
                    if universe is not None and kc not in universe:
                        continue
                    cur[kc] = cur.get(kc, 0) - mpq(kdeg, d) * va * vb
        cur = {k: v for k, v in cur.items() if v}
        if d % 2 == 0 and cur:
            raise AssertionError("log C(t) has an even-degree term")
        logs[d] = cur
    return {k: v for d in logs for k, v in logs[d].items()}


def cx_coefficients(type: str, n: int, x_count: int | None, universe: frozenset | None, max_length: int) -> NCElement:
    """C(X) (type B/C) or D(X) (type D) as an NCElement."""
    if x_count is not None:
        c = _ct_coeffs(type, n, universe, max_length)
        acc = NCElement.one(type, n, universe, max_length)
        for i in range(1, x_count + 1):
            x = f"x{i}"
            fac = NCElement(
                type, n, {k: MPoly.var(x, _length(type, k)) * v if _length(type, k) else MPoly.const(v) for k, v in c.items()}
            )
            acc = nc_multiply(acc, fac)
        return acc
    logs = _log_coeffs(type, n, universe, max_length)
    lterms: dict[int, list] = {}
    for k, a in logs.items():
        d = _length(type, k)
        lterms.setdefault(d, []).append((k, MPoly.var(f"p{d}") * (a * d)))
    ident = tuple(range(1, n + 1))
    E: dict[int, dict] = {0: {ident: MPoly.const(1)}}
    for d in range(1, max_length + 1):
        cur: dict = {}
        for kdeg, terms in lterms.items():
            if kdeg > d:
                continue
            for ka, fa in terms:
                for kb, fb in E.get(d - kdeg, {}).items():
                    kc = _compose(ka, kb)
                    if _length(type, kc) != d:
                        continue
                    if universe is not None and kc not in universe:
                        continue
                    cur[kc] = cur.get(kc, MPoly()) + fa * fb
        E[d] = {k: f * mpq(1, d) for k, f in cur.items() if f}
    support = {k: f for d in E for k, f in E[d].items()}
    return NCElement(type, n, support, universe, max_length)


# -- double Schubert polynomials ------------------------------------------------------


def _prepare(w: SignedPermutation, lie_type: str) -> tuple[str, SignedPermutation]:
    t = _group_type(lie_type)
    if w.type != t:
        if w.type == "A":
            w = w.as_type(t)
        else:
            raise ValidationError(f"{w} is not an element of the type {lie_type} group")
    return t, w


def _check_fidelity(w_len: int, x_count: int | None) -> None:
    if x_count is not None and 0 < x_count < w_len:
        raise FidelityError(f"{x_count} x-variables cannot represent a degree {w_len} answer; need at least {w_len}")


def _flag(flags, i: int) -> bool:
    if isinstance(flags, bool):
        return flags
    return i in set(flags)


def _fold(
    t: str,
    n: int,
    middle: NCElement,
    y_flags,
    z_flags,
) -> NCElement:
    acc = middle
    # Ã_{n-1}(z_{n-1}) ... Ã_1(z_1) on the left
    for i in range(1, n):
        if not _flag(z_flags, i):
            continue
        z = -MPoly.var(f"z{i}")
        for r in range(n - 1, i - 1, -1):
            acc = acc.times_linear(r, z, side="left")
    # A_1(y_1) ... A_{n-1}(y_{n-1}) on the right
    for i in range(1, n):
        if not _flag(y_flags, i):
            continue
        y = MPoly.var(f"y{i}")
        for r in _a_word(n, i):
            acc = acc.times_linear(r, y)
    return acc


def double_schubert(
    w: SignedPermutation,
    lie_type: str = "C",
    x_count: int | None = None,
    y_flags=True,
    z_flags=True,
    *,
    rank: int | None = None,
    restrict: bool = True,
) -> MPoly:
    """𝔄_w, 𝔅_w, ℭ_w or 𝔇_w as the coefficient of u_w in the defining product.

    ``x_count`` is None for the exact power-sum model, 0 to set X = 0, or a
    number of explicit variables (at least l(w), otherwise FidelityError).
    ``y_flags``/``z_flags`` are booleans or collections of indices to keep.
    Type A ignores X.  ``rank`` embeds w in a larger group (stability).
    """
    t, w = _prepare(w, lie_type)
    ell = w.length()
    n = w.support_rank if rank is None else rank
    if n < w.support_rank:
        raise ValidationError(f"{w} does not fit in rank {n}")
    if t != "A":
        _check_fidelity(ell, x_count)
    universe = segments(w, n) if restrict else None
    if t == "A" or x_count == 0:
        middle = NCElement.one(t, n, universe, ell)
    else:
        middle = cx_coefficients(t, n, x_count, universe, ell)
    res = _fold(t, n, middle, y_flags, z_flags).coefficient(w)
    if lie_type.upper() == "B":
        res = res * mpq(1, 2 ** w.negatives())
    return res


def stanley_function(w: SignedPermutation, m: int | None = None) -> MPoly:
    """F_w(X) = <C(X), w> (type B/C input) or <D(X), w> (type D input)."""
    if w.type == "A":
        w = w.as_type("C")
    ell = w.length()
    _check_fidelity(ell, m)
    n = w.support_rank
    if m == 0:
        return MPoly.const(1) if w.is_identity() else MPoly()
    return cx_coefficients(w.type, n, m, segments(w, n), ell).coefficient(w)


def schubert_table(
    lie_type: str, n: int, x_count: int | None = None, y_flags=True, z_flags=True
) -> dict[SignedPermutation, MPoly]:
    """All double Schubert polynomials of the rank-n group from one product."""
    t = _group_type(lie_type)
    top = max((_length(t, k) for k in _all_keys(t, n)), default=0)
    if t != "A":
        _check_fidelity(top, x_count)
    if t == "A" or x_count == 0:
        middle = NCElement.one(t, n, None, top)
    else:
        middle = cx_coefficients(t, n, x_count, None, top)
    acc = _fold(t, n, middle, y_flags, z_flags)
    out = {}
    for w, f in acc.items():
        if lie_type.upper() == "B":
            f = f * mpq(1, 2 ** w.negatives())
        out[w] = f
    return out


def _all_keys(t: str, n: int) -> list[Key]:
    from .weyl import elements

    return [u.padded(n).values for u in elements(t, n)]


def as_mapping(h: NCElement) -> Mapping[SignedPermutation, MPoly]:
    return dict(h.items())
