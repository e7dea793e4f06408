"""Chern class formulas for degeneracy loci.

A formula is a sum over shape sequences of the splitting coefficient times a
product of factors s_μ, Θ_λ, Θ'_λ or H_λ applied to formal differences of
bundles such as E - E_1 - F_n.  ``evaluate_locus`` substitutes Chern roots
in the geometric variables 𝕩 (``X1``, ...) and 𝕪 (``Y1``, ...):

* types B/C/D: E_r has roots -𝕩_{a_r+1}, ..., -𝕩_n, E has roots ±𝕩_i,
  F_s (s <= n) has roots -𝕪_{n+1-s}, ..., -𝕪_n and F_{n+b} adds 𝕪_1..𝕪_b;
* type A: E_r has roots -𝕩_1, ..., -𝕩_{a_r}, E has roots -𝕩_1..-𝕩_n and
  F_s has roots -𝕪_{n+1-s}, ..., -𝕪_n.

>>> from .weyl import parse_perm
>>> f = emit_locus(parse_perm("3,-1,-2"), "C", 3, (1, 2), (0, 1))
>>> print(render_locus(f))
\\Theta_{(3,2)}(E-E_1-F_{3})\\,s_{(1)}(E_1-E_2) + \\Theta_{(4,2)}(E-E_1-F_{3}) + s_{(1)}(F_{3}-F_{4})\\,\\Theta_{(3,2)}(E-E_1-F_{3})
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from gmpy2 import mpq

from .formal import eta_formal, schur_formal, theta_formal
from .mpoly import MPoly
from .schubops import GX, GY
from .shapes import Shape, _kint, conjugate
from .split import SplitProblem, split_coefficients
from .weyl import BOX, SignedPermutation, ValidationError, embed_symmetric, longest_element

__all__ = [
    "BundleExpr",
    "Factor",
    "LocusFormula",
    "rank_conditions",
    "emit_locus",
    "render_locus",
    "locus_to_json",
    "locus_from_json",
    "standard_roots",
    "evaluate_locus",
    "SCHEMA",
]

SCHEMA = "locus-v1"


@dataclass(frozen=True)
class BundleExpr:
    """A formal Z-linear combination of bundle symbols, e.g. E - E_1 - F_3."""

    terms: tuple[tuple[int, str], ...]

    @classmethod
    def of(cls, *pairs: tuple[int, str]) -> "BundleExpr":
        return cls(tuple(pairs))

    def render(self, latex: bool = True) -> str:
        out = ""
        for i, (c, name) in enumerate(self.terms):
            sym = _latex_bundle(name) if latex else name
            if i == 0:
                out += ("-" if c < 0 else "") + sym
            else:
                out += ("-" if c < 0 else "+") + sym
            if abs(c) != 1:
                raise ValidationError("bundle coefficients are +-1")
        return out

    def __str__(self) -> str:
        return self.render(latex=False).replace("-", " - ").replace("+", " + ")

    def to_json(self) -> list:
        return [[c, n] for c, n in self.terms]


def _latex_bundle(name: str) -> str:
    if "_" not in name:
        return name
    base, idx = name.split("_", 1)
    if base == "Qhat":
        base = "\\widehat{Q}"
    return f"{base}_{{{idx}}}" if len(idx) > 1 or base == "F" else f"{base}_{idx}"


@dataclass(frozen=True)
class Factor:
    """One factor kind_shape(bundle).  ``kind`` is 's', 'Theta', "Theta'" or 'H'."""

    kind: str
    shape: Shape
    bundle: BundleExpr
    scale: Fraction = Fraction(1)
    aux: BundleExpr | None = None  # E_0 - E_1 for the eta generators

    def is_trivial(self) -> bool:
        return not self.shape.parts and self.kind == "s"

    def render(self) -> str:
        parts = ",".join(map(str, self.shape.parts))
        name = {"s": "s", "Theta": "\\Theta", "Theta'": "\\Theta'", "H": "H"}[self.kind]
        sub = f"({parts})"
        if self.kind == "H" and self.shape.type_tag:
            sub += f"^{{{self.shape.type_tag}}}"
        return f"{name}_{{{sub}}}({self.bundle.render()})"

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "shape": list(self.shape.parts),
            "k": "B" if self.shape.k == BOX else self.shape.k,
            "type": self.shape.type_tag,
            "bundle": self.bundle.to_json(),
        }
        if self.scale != 1:
            out["scale"] = [self.scale.numerator, self.scale.denominator]
        if self.aux is not None:
            out["aux"] = self.aux.to_json()
        return out


@dataclass
class LocusFormula:
    lie_type: str
    w: SignedPermutation
    n: int
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    terms: list[tuple[int, list[Factor]]] = field(default_factory=list)
    quotient_terms: list[tuple[int, list[Factor]]] = field(default_factory=list)


# -- rank conditions ----------------------------------------------------------------


def rank_conditions(w: SignedPermutation, lie_type: str, n: int, a_seq: Sequence[int]) -> dict[tuple[int, int], int]:
    """The table d_w(r, s) of lower bounds for dim(E_r ∩ F_s)."""
    t = lie_type.upper()
    from .split import is_compatible

    if not is_compatible(w, a_seq):
        raise ValidationError(f"{w} is not compatible with a = {tuple(a_seq)}")
    a = [_kint(v) for v in a_seq]
    out: dict[tuple[int, int], int] = {}
    if t == "A":
        vals = w.padded(n).values
        for r, ar in enumerate(a, start=1):
            for s in range(1, n + 1):
                out[(r, s)] = sum(1 for i in range(ar) if vals[i] > n - s)
        return out
    if t in ("B", "C"):
        variant, top = ("phi_prime", 2 * n + 1) if t == "B" else ("phi", 2 * n)
        phi = embed_symmetric(w.as_type("C") if w.type == "A" else w, variant, n).values
    elif t == "D":
        w0 = longest_element("D", n)
        conj = w0 * w.padded(n) * w0
        phi = embed_symmetric(conj.as_type("C"), "phi", n).values
        top = 2 * n
    else:
        raise ValidationError(f"unknown Lie type {lie_type!r}")
    for r, ar in enumerate(a, start=1):
        for s in range(1, top + 1):
            out[(r, s)] = sum(1 for i in range(n - ar) if phi[i] > top - s)
    return out


# -- emission -------------------------------------------------------------------------


def _check(lie_type: str, n: int, a_seq, b_seq) -> None:
    a = [_kint(v) for v in a_seq]
    b = [_kint(v) for v in b_seq]
    if a[-1] >= n or b[-1] >= n:
        raise ValidationError(f"need a_p < n and b_q < n (n = {n})")


def _f(s: int) -> str:
    return f"F_{s}"


def emit_locus(
    w: SignedPermutation,
    lie_type: str,
    n: int,
    a_seq: Sequence[int],
    b_seq: Sequence[int],
) -> LocusFormula:
    """The degeneracy locus formula with splitting coefficients."""
    t = lie_type.upper()
    prob = SplitProblem(w, tuple(a_seq), tuple(b_seq), t)
    _check(t, n, prob.a_seq, prob.b_seq)
    if prob.w.support_rank > n:
        raise ValidationError(f"{w} does not lie in rank {n}")
    a = [_kint(v) for v in prob.a_seq]
    b = [_kint(v) for v in prob.b_seq]
    p, q = prob.p, prob.q
    shift = 1 if t == "B" else 0
    form = LocusFormula(t, prob.w, n, prob.a_seq, prob.b_seq)
    coeffs = sorted(split_coefficients(prob).items(), key=lambda kv: [s.parts for s in kv[0]])
    for shapes, c in coeffs:
        diff: list[Factor] = []
        quot: list[Factor] = []
        for j, lam in enumerate(shapes, start=1):
            if j < q:
                lo, hi = b[q - j - 1], b[q - j]
                if t == "A":
                    bun = BundleExpr.of((1, _f(n - lo)), (-1, _f(n - hi)))
                    diff.append(Factor("s", _transpose(lam), bun))
                    quot.append(Factor("s", _transpose(lam), bun))
                else:
                    bun = BundleExpr.of((1, _f(n + shift + lo)), (-1, _f(n + shift + hi)))
                    diff.append(Factor("s", _plain(lam), bun))
                    quot.append(Factor("s", _transpose(lam), BundleExpr.of((1, f"Qhat_{q + 1 - j}"))))
            elif j == q:
                if t == "A":
                    bun = BundleExpr.of((1, "E"), (-1, "E_1"), (-1, _f(n - b[0])))
                    diff.append(Factor("s", _transpose(lam), bun))
                    quot.append(Factor("s", _transpose(lam), bun))
                    continue
                fn = _f(n + shift)
                bun = BundleExpr.of((1, "E"), (-1, "E_1"), (-1, fn))
                qb = BundleExpr.of((1, "Q_1"), (-1, fn))
                if t == "D":
                    aux = BundleExpr.of((1, "E_0"), (-1, "E_1"))
                    diff.append(Factor("H", lam, bun, aux=aux))
                    quot.append(Factor("H", lam, qb, aux=aux))
                elif t == "B":
                    sc = Fraction(1, 2 ** prob.w.negatives())
                    diff.append(Factor("Theta'", lam, bun, scale=sc))
                    quot.append(Factor("Theta'", lam, qb, scale=sc))
                else:
                    diff.append(Factor("Theta", lam, bun))
                    quot.append(Factor("Theta", lam, qb))
            else:
                r = j - q + 1
                bun = BundleExpr.of((1, f"E_{r - 1}"), (-1, f"E_{r}"))
                if t == "A":
                    diff.append(Factor("s", _transpose(lam), bun))
                    quot.append(Factor("s", _transpose(lam), bun))
                else:
                    diff.append(Factor("s", _plain(lam), bun))
                    quot.append(Factor("s", _plain(lam), BundleExpr.of((1, f"Q_{r}"))))
        form.terms.append((c, diff))
        form.quotient_terms.append((c, quot))
    return form


def _plain(lam: Shape) -> Shape:
    return Shape(lam.parts, 0, plain=True)


def _transpose(lam: Shape) -> Shape:
    return Shape(conjugate(lam.parts), 0, plain=True)


# -- rendering ------------------------------------------------------------------------


def _render_terms(terms) -> str:
    pieces = []
    for c, factors in terms:
        body = "\\,".join(f.render() for f in factors if not f.is_trivial()) or "1"
        scale = next((f.scale for f in factors if f.scale != 1), Fraction(1))
        coef = Fraction(c) * scale
        if coef == 1:
            pieces.append(body)
        elif coef.denominator == 1:
            pieces.append(f"{coef.numerator}\\,{body}")
        else:
            pieces.append(f"\\tfrac{{{coef.numerator}}}{{{coef.denominator}}}\\,{body}")
    if not pieces:
        return "0"
    return " + ".join(sorted(pieces))


def render_locus(f: LocusFormula, form: str = "difference") -> str:
    """LaTeX for the formula in difference or quotient-bundle form."""
    if form not in ("difference", "quotient"):
        raise ValidationError("form must be 'difference' or 'quotient'")
    return _render_terms(f.terms if form == "difference" else f.quotient_terms)


def locus_to_json(f: LocusFormula) -> dict:
    def side(terms):
        return [{"coeff": c, "factors": [x.to_json() for x in factors]} for c, factors in terms]

    return {
        "schema": SCHEMA,
        "type": f.lie_type,
        "w": list(f.w.values),
        "n": f.n,
        "a": ["B" if v == BOX else v for v in f.a_seq],
        "b": ["B" if v == BOX else v for v in f.b_seq],
        "terms": side(f.terms),
        "quotient_terms": side(f.quotient_terms),
    }


def locus_from_json(d: Mapping) -> LocusFormula:
    if d.get("schema") != SCHEMA:
        raise ValidationError(f"unknown schema {d.get('schema')!r}")
    t = d["type"]
    group = {"A": "A", "B": "BC", "C": "BC", "D": "D"}[t]

    def seq(xs):
        return tuple(BOX if v == "B" else int(v) for v in xs)

    def factor(x) -> Factor:
        k = BOX if x["k"] == "B" else int(x["k"])
        if x["kind"] == "s":
            shape = Shape(tuple(x["shape"]), 0, plain=True)
        else:
            shape = Shape(tuple(x["shape"]), k, int(x["type"]), typed=x["kind"] == "H")
        scale = Fraction(*x["scale"]) if "scale" in x else Fraction(1)
        aux = BundleExpr(tuple((int(c), n) for c, n in x["aux"])) if "aux" in x else None
        return Factor(x["kind"], shape, BundleExpr(tuple((int(c), n) for c, n in x["bundle"])), scale, aux)

    def side(rows):
        return [(int(r["coeff"]), [factor(x) for x in r["factors"]]) for r in rows]

    return LocusFormula(
        t,
        SignedPermutation(group, tuple(d["w"])),
        int(d["n"]),
        seq(d["a"]),
        seq(d["b"]),
        side(d["terms"]),
        side(d.get("quotient_terms", [])),
    )


def dumps(f: LocusFormula) -> str:
    return json.dumps(locus_to_json(f), indent=2, sort_keys=True)


# -- evaluation ------------------------------------------------------------------------


def standard_roots(lie_type: str, n: int, a_seq: Sequence[int], b_seq: Sequence[int] = ()) -> dict[str, list[MPoly]]:
    """Chern roots, in 𝕩/𝕪 variables, of every bundle symbol used by a formula."""
    t = lie_type.upper()
    X = [MPoly.var(GX(i)) for i in range(1, n + 1)]
    Y = [MPoly.var(GY(i)) for i in range(1, n + 1)]
    a = [_kint(v) for v in a_seq]
    roots: dict[str, list[MPoly]] = {}
    if t == "A":
        roots["E"] = [-x for x in X]
        for r, ar in enumerate([0] + a):
            roots[f"E_{r}"] = [-x for x in X[:ar]]
        for s in range(0, n + 1):
            roots[f"F_{s}"] = [-y for y in Y[n - s :]]
        return roots
    roots["E"] = X + [-x for x in X]
    roots["E_0"] = [-x for x in X]
    for r, ar in enumerate(a, start=1):
        roots[f"E_{r}"] = [-x for x in X[ar:]]
    roots["Q_1"] = X + [-x for x in X[: a[0]]] if a else list(X)
    for r in range(2, len(a) + 1):
        roots[f"Q_{r}"] = [-x for x in X[a[r - 2] : a[r - 1]]]
    shift = 1 if t == "B" else 0
    for s in range(0, n + 1):
        roots[f"F_{s}"] = [-y for y in Y[n - s :]]
    for bb in range(0, n + 1):
        roots[f"F_{n + shift + bb}"] = [-y for y in Y] + Y[:bb]
    b = [_kint(v) for v in b_seq]
    for j in range(2, len(b) + 1):
        roots[f"Qhat_{j}"] = [-y for y in Y[b[j - 2] : b[j - 1]]]
    return roots


def _chern_series(roots: list[MPoly], deg: int, sign: int = 1) -> list[MPoly]:
    """Coefficients of prod (1 + sign * root * t) up to t^deg."""
    out = [MPoly.const(1)] + [MPoly() for _ in range(deg)]
    for r in roots:
        for i in range(deg, 0, -1):
            out[i] = out[i] + out[i - 1] * r * sign
    return out


def _series_mul(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    deg = len(a) - 1
    return [sum((a[i] * b[r - i] for i in range(r + 1)), MPoly()) for r in range(deg + 1)]


def _series_inv(a: list[MPoly]) -> list[MPoly]:
    inv = [MPoly.const(1)]
    for r in range(1, len(a)):
        inv.append(-sum((a[i] * inv[r - i] for i in range(1, r + 1)), MPoly()))
    return inv


def _bundle_roots(expr: BundleExpr, roots: Mapping[str, list[MPoly]]) -> tuple[list[MPoly], list[MPoly]]:
    pos: list[MPoly] = []
    neg: list[MPoly] = []
    for c, name in expr.terms:
        if name not in roots:
            raise ValidationError(f"no Chern roots for bundle {name}")
        (pos if c > 0 else neg).extend(roots[name])
    return pos, neg


def _g_series(expr: BundleExpr, roots, deg: int) -> list[MPoly]:
    pos, neg = _bundle_roots(expr, roots)
    return _series_mul(_chern_series(pos, deg), _series_inv(_chern_series(neg, deg)))


def _h_series(expr: BundleExpr, roots, deg: int) -> list[MPoly]:
    pos, neg = _bundle_roots(expr, roots)
    return _series_mul(_series_inv(_chern_series(pos, deg, -1)), _chern_series(neg, deg, -1))


def _index(v: str) -> int:
    i = len(v)
    while v[i - 1].isdigit():
        i -= 1
    return int(v[i:])


def _evaluate_factor(fac: Factor, roots) -> MPoly:
    lam = fac.shape
    deg = max(lam.weight + len(lam.parts), 1) + 1
    if fac.kind == "s":
        h = _h_series(fac.bundle, roots, deg)
        f = schur_formal(lam.parts)
        return f.subs({v: h[_index(v)] for v in f.variables()}) if f.variables() else f
    g = _g_series(fac.bundle, roots, deg)
    if fac.kind in ("Theta", "Theta'"):
        f = theta_formal(lam)
        val = f.subs({v: g[_index(v)] for v in f.variables()}) if f.variables() else f
        return val * mpq(fac.scale.numerator, fac.scale.denominator)
    if fac.kind == "H":
        k = lam.kk
        f = eta_formal(lam)
        e = _g_series(fac.aux, roots, deg) if fac.aux is not None else None
        assign = {}
        half = mpq(1, 2)
        for v in f.variables():
            r = _index(v)
            if v.startswith("taup"):
                assign[v] = (g[k] - e[k]) * half
            elif r == k:
                assign[v] = (g[k] + e[k]) * half
            elif r < k:
                assign[v] = g[r]
            else:
                assign[v] = g[r] * half
        return f.subs(assign) if assign else f
    raise ValidationError(f"unknown factor kind {fac.kind!r}")


def evaluate_locus(
    f: LocusFormula, roots: Mapping[str, list[MPoly]] | None = None, form: str = "difference"
) -> MPoly:
    """Substitute Chern roots into every factor and sum the terms."""
    if roots is None:
        roots = standard_roots(f.lie_type, f.n, f.a_seq, f.b_seq)
    total = MPoly()
    for c, factors in f.terms if form == "difference" else f.quotient_terms:
        term = MPoly.const(c)
        for fac in factors:
            if fac.is_trivial():
                continue
            term = term * _evaluate_factor(fac, roots)
            if not term:
                break
        total = total + term
    return total
