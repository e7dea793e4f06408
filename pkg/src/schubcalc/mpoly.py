"""Sparse multivariate polynomials with exact rational coefficients.

Variables are named strings (``x1``, ``y2``, ``p3``, ``c5``, ...) interned in a
process-wide registry.  A monomial is packed into a single Python integer with
eight bits per variable, so monomial multiplication is integer addition.
Exponents must therefore stay below 256, far above anything computed here.

>>> x, y = MPoly.var("x1"), MPoly.var("y1")
>>> str((x + y) ** 2)
'x1^2 + 2*x1*y1 + y1^2'
"""
from __future__ import annotations

import re
import threading
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import gmpy2
from gmpy2 import mpq

__all__ = ["MPoly", "Coeff", "to_coeff", "var_index", "sort_key_for_name", "DivisionError"]

Coeff = object  # int or gmpy2.mpq

_BITS = 8
_MASK = (1 << _BITS) - 1
_lock = threading.Lock()
_index: dict[str, int] = {}
_names: list[str] = []


class DivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def var_index(name: str) -> int:
    i = _index.get(name)
    if i is None:
        with _lock:
            i = _index.get(name)
            if i is None:
                i = len(_names)
                _names.append(name)
                _index[name] = i
    return i


_PREFIX_ORDER = {"p": 0, "x": 1, "y": 2, "z": 3, "X": 4, "Y": 5, "c": 6, "d": 7, "tau": 8, "taup": 9}
_name_re = re.compile(r"^([A-Za-z_]+?)(\d*)$")


def sort_key_for_name(name: str) -> tuple:
    m = _name_re.match(name)
    if not m:
        return (99, name, 0)
    pre, num = m.groups()
    return (_PREFIX_ORDER.get(pre, 50), pre, int(num) if num else 0)


def to_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if isinstance(c, type(mpq(1))):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def _norm(c):
    if type(c) is not int and c.denominator == 1:
        return int(c.numerator)
    return c


def _decode(m: int) -> list[tuple[int, int]]:
    out = []
    i = 0
    while m:
        e = m & _MASK
        if e:
            out.append((i, e))
        m >>= _BITS
        i += 1
    return out


def _encode(pairs: Iterable[tuple[int, int]]) -> int:
    m = 0
    for i, e in pairs:
        if e < 0 or e > _MASK:
            raise OverflowError("exponent out of range")
        m += e << (_BITS * i)
    return m


def _divides(a: int, b: int) -> bool:
    """Whether monomial a divides monomial b."""
    while a:
        if (a & _MASK) > (b & _MASK):
            return False
        a >>= _BITS
        b >>= _BITS
    return True


class MPoly:
    """Immutable-by-convention sparse polynomial: packed monomial -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        self.terms: dict[int, Coeff] = {m: _norm(c) for m, c in (terms or {}).items() if c}

    # -- construction ---------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({0: to_coeff(c)})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MPoly":
        return cls({exp << (_BITS * var_index(name)): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> "MPoly":
        return cls({_encode((var_index(v), e) for v, e in exps.items()): to_coeff(coeff)})

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    # -- arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(o) -> "MPoly":
        if isinstance(o, MPoly):
            return o
        return MPoly.const(o)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = res.get(m, 0) + c
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return MPoly._raw(res)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = to_coeff(other)
            if not c:
                return MPoly()
            return MPoly({m: v * c for m, v in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        res: dict[int, Coeff] = {}
        get = res.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = m1 + m2
                res[m] = get(m, 0) + c1 * c2
        return MPoly(res)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return self.exact_div(other)
        c = to_coeff(other)
        return MPoly({m: mpq(v) / c for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, type(mpq(1)))):
            return self.terms == MPoly.const(other).terms
        return NotImplemented

    def __hash__(self):  # pragma: no cover - polynomials are not dict keys
        raise TypeError("MPoly is unhashable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection -----------------------------------------------------------
    def variables(self) -> list[str]:
        seen = set()
        for m in self.terms:
            for i, _ in _decode(m):
                seen.add(i)
        return sorted((_names[i] for i in seen), key=sort_key_for_name)

    def items(self) -> Iterable[tuple[dict[str, int], Coeff]]:
        for m, c in self.terms.items():
            yield {_names[i]: e for i, e in _decode(m)}, c

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e for _, e in _decode(m)) for m in self.terms)
        i = var_index(name)
        return max((m >> (_BITS * i)) & _MASK for m in self.terms)

    def weighted_degree(self, weight: Callable[[str], int]) -> int:
        return max(sum(e * weight(_names[i]) for i, e in _decode(m)) for m in self.terms) if self.terms else -1

    def constant_term(self) -> Coeff:
        return self.terms.get(0, 0)

    def coefficient(self, exps: Mapping[str, int]) -> Coeff:
        return self.terms.get(_encode((var_index(v), e) for v, e in exps.items()), 0)

    def coefficients_in(self, name: str) -> dict[int, "MPoly"]:
        """Split as sum_k name^k * f_k with f_k free of ``name``."""
        i = var_index(name)
        sh = _BITS * i
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = (m >> sh) & _MASK
            out.setdefault(e, {})[m - (e << sh)] = c
        return {e: MPoly._raw(t) for e, t in out.items()}

    def homogeneous_part(self, d: int, weight: Callable[[str], int] | None = None) -> "MPoly":
        def deg(m):
            return sum(e * (weight(_names[i]) if weight else 1) for i, e in _decode(m))

        return MPoly._raw({m: c for m, c in self.terms.items() if deg(m) == d})

    # -- substitution -----------------------------------------------------------
    def subs(self, mapping: Mapping[str, "MPoly | int"]) -> "MPoly":
        """Simultaneous substitution of variables by polynomials."""
        idx = {var_index(k): MPoly._coerce(v) for k, v in mapping.items()}
        cache: dict[tuple[int, int], MPoly] = {}
        res = MPoly()
        acc: dict[int, Coeff] = {}
        for m, c in self.terms.items():
            keep = 0
            factor: MPoly | None = None
            for i, e in _decode(m):
                if i in idx:
                    key = (i, e)
                    p = cache.get(key)
                    if p is None:
                        p = idx[i] ** e
                        cache[key] = p
                    factor = p if factor is None else factor * p
                else:
                    keep += e << (_BITS * i)
            if factor is None:
                acc[keep] = acc.get(keep, 0) + c
            else:
                for fm, fc in factor.terms.items():
                    k = keep + fm
                    acc[k] = acc.get(k, 0) + c * fc
        res = MPoly(acc)
        return res

    def rename(self, mapping: Mapping[str, str], signs: Mapping[str, int] | None = None) -> "MPoly":
        """Variable renaming (a permutation or injection of names), optionally
        with sign flips ``signs[old] = -1``."""
        ren = {var_index(k): var_index(v) for k, v in mapping.items()}
        sg = {var_index(k): s for k, s in (signs or {}).items()}
        acc: dict[int, Coeff] = {}
        for m, c in self.terms.items():
            nm = 0
            sign = 1
            for i, e in _decode(m):
                j = ren.get(i, i)
                nm += e << (_BITS * j)
                if sg.get(i, 1) == -1 and e % 2:
                    sign = -sign
            acc[nm] = acc.get(nm, 0) + sign * c
        return MPoly(acc)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at rational values for every variable present."""
        vals = {var_index(k): to_coeff(v) for k, v in values.items()}
        total = mpq(0)
        for m, c in self.terms.items():
            t = mpq(c)
            for i, e in _decode(m):
                t *= vals[i] ** e
            total += t
        return _norm(total)

    # -- exact division ---------------------------------------------------------
    def div_monomial(self, exps: Mapping[str, int]) -> "MPoly":
        d = _encode((var_index(v), e) for v, e in exps.items())
        out = {}
        for m, c in self.terms.items():
            if not _divides(d, m):
                raise DivisionError("monomial division is not exact")
            out[m - d] = c
        return MPoly._raw(out)

    def div_linear(self, name: str, a: "MPoly") -> "MPoly":
        """Exact quotient by (name - a), where ``a`` does not involve ``name``."""
        parts = self.coefficients_in(name)
        if not parts:
            return MPoly()
        top = max(parts)
        q: dict[int, MPoly] = {}
        carry = MPoly()
        for k in range(top, 0, -1):
            carry = parts.get(k, MPoly()) + carry
            q[k - 1] = carry
            carry = carry * a
        rem = parts.get(0, MPoly()) + carry
        if rem:
            raise DivisionError(f"division by ({name} - ...) is not exact")
        x = MPoly.var(name)
        out = MPoly()
        for k, f in q.items():
            if f:
                out = out + f * (x ** k)
        return out

    def exact_div(self, g: "MPoly") -> "MPoly":
        """General exact division via lex leading terms (packed-int order)."""
        if not g:
            raise ZeroDivisionError
        lg = max(g.terms)
        cg = mpq(g.terms[lg])
        rest = dict(self.terms)
        quot: dict[int, Coeff] = {}
        while rest:
            lf = max(rest)
            if not _divides(lg, lf):
                raise DivisionError("polynomial division is not exact")
            qm = lf - lg
            qc = _norm(mpq(rest[lf]) / cg)
            quot[qm] = qc
            for m, c in g.terms.items():
                k = m + qm
                v = rest.get(k, 0) - qc * c
                if v:
                    rest[k] = v
                else:
                    rest.pop(k, None)
        return MPoly(quot)

    # -- rendering ---------------------------------------------------------------
    def _sorted_terms(self, names: list[str] | None = None):
        """Terms in graded-lex order with respect to the canonical variable order."""
        if names is None:
            names = self.variables()
        pos = {var_index(n): k for k, n in enumerate(names)}
        rows = []
        for m, c in self.terms.items():
            vec = [0] * len(names)
            for i, e in _decode(m):
                vec[pos[i]] = e
            rows.append((vec, c))
        rows.sort(key=lambda r: (-sum(r[0]), [-e for e in r[0]]))
        return names, rows

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MPoly({self.render()!r})"

    def render(self, latex: bool = False) -> str:
        """Expanded form in graded-lex order; ``latex`` gives compact TeX."""
        if not self.terms:
            return "0"
        names, rows = self._sorted_terms()
        pieces = []
        for vec, c in rows:
            mono = []
            for n, e in zip(names, vec):
                if not e:
                    continue
                nm = _latex_name(n) if latex else n
                if e > 1:
                    nm = f"{nm}^{{{e}}}" if latex else f"{nm}^{e}"
                mono.append(nm)
            cabs = abs(c)
            cs = _coeff_str(cabs, latex)
            if not mono:
                body = cs
            elif latex:
                body = ("" if cabs == 1 else cs) + "".join(mono)
            else:
                body = "*".join(([] if cabs == 1 else [cs]) + mono)
            pieces.append(("-" if c < 0 else "+", body))
        sep = "{}" if latex else " {} "
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += sep.format(sign) + body
        return s

    def to_json(self) -> dict:
        names, rows = self._sorted_terms()
        terms = []
        for vec, c in rows:
            q = mpq(c)
            terms.append({"e": vec, "c": [int(q.numerator), int(q.denominator)]})
        return {"vars": names, "terms": terms}

    @classmethod
    def from_json(cls, d: dict) -> "MPoly":
        idx = [var_index(n) for n in d["vars"]]
        out = {}
        for t in d["terms"]:
            m = _encode(zip(idx, t["e"]))
            num, den = t["c"]
            out[m] = mpq(num, den)
        return cls(out)


def _coeff_str(c, latex: bool) -> str:
    q = mpq(c)
    if q.denominator == 1:
        return str(int(q.numerator))
    if latex:
        return f"\\frac{{{int(q.numerator)}}}{{{int(q.denominator)}}}"
    return f"({int(q.numerator)}/{int(q.denominator)})"


def _latex_name(name: str) -> str:
    m = _name_re.match(name)
    if not m:
        return name
    pre, num = m.groups()
    base = {"tau": "\\tau", "taup": "\\tau'", "X": "\\mathbb{x}", "Y": "\\mathbb{y}"}.get(pre, pre)
    if not num:
        return base
    return f"{base}_{num}" if len(num) == 1 else f"{base}_{{{num}}}"


def poly_sum(polys: Iterable[MPoly]) -> MPoly:
    acc: dict[int, Coeff] = {}
    for p in polys:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return MPoly(acc)


__all__.append("poly_sum")
del gmpy2
