"""Divided differences on Γ[Y,Z], the involution ω, geometrization maps and
equality modulo the presentation ideals.

Elements of Γ are written in the odd power sums ``p1, p3, ...``.  Adding y_1
to the X alphabet sends p_k to p_k + y_1^k, so

    s_0:   p_k -> p_k + y_1^k,   y_1 -> -y_1,
    s_box: p_k -> p_k + y_1^k + y_2^k,   (y_1, y_2) -> (-y_2, -y_1).

>>> from .polyring import gen_q
>>> str(divided_difference(gen_q(1, None), "y", 0))
'1'
"""
from __future__ import annotations

import itertools
import random
import re
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .mpoly import MPoly
from .formal import theta_formal
from .polyring import complete, elementary, q_basis_expand
from .shapes import Shape
from .weyl import BOX, ValidationError

__all__ = [
    "divided_difference",
    "reflect_action",
    "omega",
    "geometrize",
    "xi",
    "ideal_equal",
    "ideal_generators",
    "GX",
    "GY",
]

_VAR = re.compile(r"^([a-zA-Z]+)(\d+)$")


def GX(i: int) -> str:
    """Name of the geometric variable 𝕩_i."""
    return f"X{i}"


def GY(i: int) -> str:
    """Name of the geometric variable 𝕪_i."""
    return f"Y{i}"


def _split(name: str) -> tuple[str, int]:
    m = _VAR.match(name)
    if not m:
        raise ValidationError(f"unsupported symbol {name!r}")
    return m.group(1), int(m.group(2))


def _check_power_sum_model(f: MPoly) -> None:
    if any(v.startswith("x") for v in f.variables()):
        raise ValidationError("divided differences need the power-sum model of Γ (x_count=None)")


def reflect_action(f: MPoly, axis: str, i: int) -> MPoly:
    """s_i acting on the y (or, via ω, z) variables of f."""
    if axis == "z":
        return omega(reflect_action(omega(f), "y", i))
    if axis != "y":
        raise ValidationError("axis must be 'y' or 'z'")
    y1, y2 = MPoly.var("y1"), MPoly.var("y2")
    if i == 0 or i == BOX:
        _check_power_sum_model(f)
        mapping: dict[str, MPoly] = {}
        for v in f.variables():
            kind, k = _split(v)
            if kind == "p":
                extra = y1**k if i == 0 else y1**k + y2**k
                mapping[v] = MPoly.var(v) + extra
        if i == 0:
            mapping["y1"] = -y1
        else:
            mapping["y1"], mapping["y2"] = -y2, -y1
        return f.subs(mapping)
    if i < 0:
        raise ValidationError(f"no simple reflection s_{i}")
    a, b = f"y{i}", f"y{i + 1}"
    return f.rename({a: b, b: a})


def divided_difference(f: MPoly, axis: str = "y", i: int = 1) -> MPoly:
    """∂_i^y f (or ∂_i^z f = ω ∂_i^y ω f).

    ∂_0 f = (f - s_0 f)/(-2 y_1), ∂_box f = (f - s_box f)/(-(y_1 + y_2)),
    ∂_i f = (f - s_i f)/(y_i - y_{i+1}).  Division is exact; a remainder
    raises ``DivisionError``.
    """
    if axis == "z":
        return omega(divided_difference(omega(f), "y", i))
    num = f - reflect_action(f, "y", i)
    if not num:
        return MPoly()
    if i == 0:
        return num.div_monomial({"y1": 1}) * mpq(-1, 2)
    if i == BOX:
        return -num.div_linear("y1", -MPoly.var("y2"))
    return num.div_linear(f"y{i}", MPoly.var(f"y{i + 1}"))


def omega(f: MPoly) -> MPoly:
    """ω: y_j -> -z_j, z_j -> -y_j, fixing Γ."""
    ren: dict[str, str] = {}
    signs: dict[str, int] = {}
    for v in f.variables():
        kind, j = _split(v) if _VAR.match(v) else ("", 0)
        if kind == "y":
            ren[v] = f"z{j}"
            signs[v] = -1
        elif kind == "z":
            ren[v] = f"y{j}"
            signs[v] = -1
    return f.rename(ren, signs) if ren else f


@lru_cache(maxsize=None)
def xi(r: int, n: int) -> MPoly:
    """ξ_r = sum_i e_i(𝕩_1..𝕩_n) h_{r-i}(𝕪_1..𝕪_n)."""
    if r < 0:
        return MPoly()
    xs = [GX(i) for i in range(1, n + 1)]
    ys = [GY(i) for i in range(1, n + 1)]
    return sum((elementary(i, xs) * complete(r - i, ys) for i in range(0, min(r, n) + 1)), MPoly())


@lru_cache(maxsize=None)
def _q_tilde(lam: tuple[int, ...], n: int) -> MPoly:
    """Q̃_λ(𝕏_n/𝕐_n): the raising-operator Q_λ(c) with c_r -> ξ_r."""
    f = theta_formal(Shape(lam, 0))
    return f.subs({v: xi(int(v[1:]), n) for v in f.variables()})


def _split_gamma(f: MPoly) -> dict[tuple, MPoly]:
    """Group f as sum over (y, z)-monomials m of m * (element of Γ)."""
    out: dict[tuple, MPoly] = {}
    for exps, c in f.items():
        rest = tuple(sorted((v, e) for v, e in exps.items() if not v.startswith("p")))
        gam = {v: e for v, e in exps.items() if v.startswith("p")}
        out[rest] = out.get(rest, MPoly()) + MPoly.monomial(gam, c)
    return out


def geometrize(f: MPoly, lie_type: str = "C", n: int = 1) -> MPoly:
    """ρ_n (type A), π_n (types B/C) or π'_n (type D).

    Types C/D: the Γ part is expanded in the Q_λ basis and Q_λ -> Q̃_λ(𝕏_n/𝕐_n),
    so q_r -> ξ_r and P_r -> ξ_r/2 exactly; y_i -> -𝕩_i, z_j -> 𝕪_j;
    type A: y_i -> 𝕩_i, z_i -> 𝕪_i.  Indices above n go to 0.
    """
    t = lie_type.upper()
    if t not in ("A", "B", "C", "D"):
        raise ValidationError(f"unknown Lie type {lie_type!r}")
    mapping: dict[str, MPoly] = {}
    has_gamma = False
    for v in f.variables():
        kind, j = _split(v)
        if kind == "p":
            if t == "A":
                raise ValidationError("type A polynomials have no X part")
            if j % 2 == 0:
                raise ValidationError(f"even power sum {v} is not in Γ")
            has_gamma = True
        elif kind == "y":
            sign = 1 if t == "A" else -1
            mapping[v] = MPoly.var(GX(j)) * sign if j <= n else MPoly()
        elif kind == "z":
            mapping[v] = MPoly.var(GY(j)) if j <= n else MPoly()
        else:
            raise ValidationError(f"unsupported symbol {v!r}")
    if not has_gamma:
        return f.subs(mapping)
    out = MPoly()
    for mono, gam in _split_gamma(f).items():
        img = MPoly()
        for lam, c in q_basis_expand(gam).items():
            img = img + _q_tilde(lam, n) * c
        out = out + MPoly.monomial(dict(mono)).subs(mapping) * img
    return out


def ideal_generators(lie_type: str, n: int) -> list[MPoly]:
    """Generators of I_n (A), J_n (C) or J'_n (D)."""
    xs = [GX(i) for i in range(1, n + 1)]
    ys = [GY(i) for i in range(1, n + 1)]
    t = lie_type.upper()
    if t == "A":
        return [elementary(i, xs) - elementary(i, ys) for i in range(1, n + 1)]
    sq = lambda vs: [MPoly.var(v) ** 2 for v in vs]  # noqa: E731
    out = []
    top = n if t in ("B", "C") else n - 1
    for i in range(1, top + 1):
        ex = sum((_prod(c) for c in itertools.combinations(sq(xs), i)), MPoly())
        ey = sum((_prod(c) for c in itertools.combinations(sq(ys), i)), MPoly())
        out.append(ex - ey)
    if t == "D":
        out.append(elementary(n, xs) - elementary(n, ys))
    return out


def _prod(fs) -> MPoly:
    out = MPoly.const(1)
    for f in fs:
        out = out * f
    return out


def _substitutions(lie_type: str, n: int, seed: int, samples: int):
    t = lie_type.upper()
    perms = itertools.permutations(range(1, n + 1))
    if t == "A":
        signs_list: Sequence = [(1,) * n]
    else:
        signs_list = [s for s in itertools.product((1, -1), repeat=n) if t != "D" or s.count(-1) % 2 == 0]
    if n <= 3:
        for p in perms:
            for s in signs_list:
                yield p, s
        return
    rng = random.Random(seed)
    signs_list = list(signs_list)
    for _ in range(samples):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        yield tuple(p), rng.choice(signs_list)


def ideal_equal(
    f: MPoly, g: MPoly, lie_type: str = "C", n: int = 1, *, seed: int = 0, samples: int = 64
) -> bool:
    """Whether f - g vanishes on the zero set of the presentation ideal.

    Substitutes 𝕪_i = ε_i 𝕩_σ(i) over S_n (A), all signed permutations (C)
    or even-signed ones (D): exhaustively for n <= 3, otherwise ``samples``
    seeded draws.
    """
    d = f - g
    if not d:
        return True
    for v in d.variables():
        kind, j = _split(v)
        if kind not in ("X", "Y") or j > n:
            raise ValidationError(f"ideal_equal expects 𝕩/𝕪 variables of rank {n}, got {v}")
    for perm, signs in _substitutions(lie_type, n, seed, samples):
        sub = {GY(i + 1): MPoly.var(GX(perm[i])) * signs[i] for i in range(n)}
        if d.subs(sub):
            return False
    return True
