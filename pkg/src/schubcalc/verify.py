"""Self-check suites bundling the acceptance checks.

Each suite returns a :class:`SuiteResult`; ``run_suite`` looks suites up by
name.  ``n`` scales the size of the sweep where that makes sense and every
suite has a default chosen to finish in a few minutes.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from gmpy2 import mpq

from .formal import RaisingSpec, eta_formal, expand_raising, jacobi_trudi, q_pfaffian, schur_formal, sym, theta_formal
from .locus import emit_locus, evaluate_locus
from .mpoly import MPoly
from .nilcox import double_schubert, stanley_function
from .polyring import (
    Q_poly,
    elementary,
    eta_poly,
    gen_q,
    is_symmetric_in,
    names,
    p_basis_expand,
    q_basis_expand,
    theta_poly,
    to_explicit,
)
from .schubops import divided_difference, geometrize, ideal_equal
from .shapes import (
    Shape,
    grassmannian_elements,
    grassmannian_to_shape,
    k_strict_shapes,
    shape_to_grassmannian,
    strict_partitions,
)
from .split import SplitProblem, is_compatible, minimal_sequence, split_formula, split_terms
from .transition import fg_tableau_count, kraskiewicz_count, stanley_coeffs
from .weyl import BOX, ValidationError, descents, elements, length, parse_perm

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"
        if self.failures:
            out += " (first: " + "; ".join(self.failures[:3]) + ")"
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        }


def _prod(fs) -> MPoly:
    out = MPoly.const(1)
    for f in fs:
        out = out * f
    return out


def _v(name: str) -> MPoly:
    return MPoly.var(name)


# -- goldens ----------------------------------------------------------------------------


def suite_goldens(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Worked examples with hand-known expansions."""
    res = SuiteResult("goldens")
    c = lambda r: sym("c", r)  # noqa: E731
    t = lambda r: sym("tau", r)  # noqa: E731
    tp = sym("taup", 1)

    want = c(5) * c(4) * c(2) - c(6) * c(3) * c(2) - c(5) ** 2 * c(1) + c(7) * c(3) * c(1) + c(6) * c(5) - c(7) * c(4)
    res.check(schur_formal((5, 4, 2)) == want, "determinant for (5,4,2)")

    want = c(3) * c(1) ** 2 - c(4) * c(1) - c(3) * c(2)
    res.check(theta_formal(Shape((3, 1, 1), 1)) == want, "theta (3,1,1), k=1")

    want = t(3) * tp * (t(1) + tp) - 2 * t(4) * tp - t(3) * t(2) + t(5)
    res.check(eta_formal(Shape((3, 1, 1), 1, 2, typed=True)) == want, "eta (3,1,1) type 2, k=1")

    y, z = (lambda i: _v(f"y{i}")), (lambda j: _v(f"z{j}"))
    want = (y(1) - z(1)) * (y(1) - z(2)) * (y(2) - z(1))
    res.check(double_schubert(parse_perm("3,2,1", "A"), "A") == want, "A_321")
    for m in range(1, (n or 5) + 1):
        w0 = parse_perm(",".join(str(v) for v in range(m, 0, -1)), "A")
        want = _prod(y(i) - z(j) for i in range(1, m + 1) for j in range(1, m + 1) if i + j <= m)
        res.check(double_schubert(w0, "A") == want, f"A_w0 for n={m}")

    # splitting example (a)
    w = parse_perm("3,-1,-2")
    prob = SplitProblem(w, (1, 2), (0, 1), "C")
    th = lambda parts: theta_poly(Shape(parts, 1), None)  # noqa: E731
    want = th((4, 2)) + th((3, 2)) * y(2) - z(1) * th((3, 2))
    shapes = sorted(tuple(s.parts for s in sh) for cf, sh, _ in split_terms(prob) if cf)
    res.check(shapes == [((), (3, 2), (1,)), ((), (4, 2), ()), ((1,), (3, 2), ())], "example (a) shapes")
    res.check(split_formula(prob) == want, "example (a) expansion")
    res.check(double_schubert(w, "C") == want, "example (a) against the product")

    # splitting example (b)
    w = parse_perm("1,2,-3")
    prob = SplitProblem(w, (2,), (0, 2), "C")
    th = lambda parts: theta_poly(Shape(parts, 2), None)  # noqa: E731
    zs = ["z1", "z2"]
    want = th((5,)) - elementary(1, zs) * th((4,)) + elementary(2, zs) * th((3,))
    res.check(split_formula(prob) == want, "example (b) expansion")
    res.check(double_schubert(w, "C") == want, "example (b) against the product")

    # mixed Stanley coefficients of 3,-1,2,6,4,5 for k = 1
    w = parse_perm("3,-1,2,6,4,5")
    coeffs = {s.parts: m for s, m in stanley_coeffs(w, "C", 1).items()}
    want_c = {(2, 1, 1, 1): 1, (5,): 1, (3, 1, 1): 2, (4, 1): 1, (3, 2): 1}
    res.check(coeffs == want_c, "tree coefficients of 3,-1,2,6,4,5")
    lhs = double_schubert(w, "C", y_flags=[1], z_flags=False)
    rhs = sum((theta_poly(Shape(p, 1), None) * m for p, m in want_c.items()), MPoly())
    res.check(lhs == rhs, "C_{3,-1,2,6,4,5}(X;Y_(1)) as a theta sum")
    return res


# -- bijection --------------------------------------------------------------------------


def suite_bijection(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Shape <-> k-Grassmannian element, both directions, with |λ| = l(w_λ)."""
    n = n or 5
    res = SuiteResult("bijection")
    for t, ks in (("C", list(range(0, n))), ("D", [BOX] + list(range(1, n)))):
        for k in ks:
            for lam in k_strict_shapes(n, k, t):
                w = shape_to_grassmannian(lam, t, n)
                back = grassmannian_to_shape(w, k)
                res.check(back == lam and length(w) == lam.weight, f"{t} k={k} {lam}")
            if n <= 4:
                got = {grassmannian_to_shape(w, k) for w in grassmannian_elements(t, n, k)}
                res.check(got == set(k_strict_shapes(n, k, t)), f"{t} k={k} surjective at n={n}")
    w = shape_to_grassmannian(Shape((7, 4, 3, 1, 1), 3), "C")
    res.check(w == parse_perm("3,5,8,-4,-1,2,6,7"), "example in type C")
    res.check(grassmannian_to_shape(parse_perm("3,5,8,-4,-1,2,6,7"), 3) == Shape((7, 4, 3, 1, 1), 3), "type C inverse")
    lam = Shape((7, 5, 3, 2), 3, 2, typed=True)
    w = shape_to_grassmannian(lam, "D")
    res.check(w == parse_perm("-2,6,7,-5,-3,-1,4,8", "D"), "example in type D")
    res.check(grassmannian_to_shape(parse_perm("-2,6,7,-5,-3,-1,4,8", "D"), 3) == lam, "type D inverse")
    return res


# -- Grassmannian double Schubert polynomials ----------------------------------------


def suite_xtoy(n: int | None = None, seed: int = 0, explicit_up_to: int = 6) -> SuiteResult:
    """ℭ_{w_λ} = Θ_λ(X;Y_(k)) and 𝔇_{w_λ} = H_λ(X;Y_(k)) for Grassmannian w_λ.

    Equality is checked in the power-sum model of Γ, which specializes to
    every truncation; for |λ| <= ``explicit_up_to`` it is also checked with
    m = |λ| explicit x-variables.
    """
    n = n or 4
    res = SuiteResult("xtoy")
    for t, ks, poly in (("C", range(0, n), theta_poly), ("D", [BOX] + list(range(1, n)), eta_poly)):
        for k in ks:
            kk = 0 if k == BOX else k
            yk = list(range(1, kk + 1))
            for w in grassmannian_elements(t, n, k):
                lam = grassmannian_to_shape(w, k)
                lhs = double_schubert(w, t, y_flags=yk, z_flags=False)
                res.check(lhs == poly(lam, None), f"{t} {w} k={k}")
                m = lam.weight
                if 0 < m <= explicit_up_to:
                    lhs = double_schubert(w, t, x_count=m, y_flags=yk, z_flags=False)
                    res.check(lhs == poly(lam, m), f"{t} {w} k={k} m={m}")
    return res


# -- divided differences -------------------------------------------------------------


def suite_uniq(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Both divided-difference systems and the constant term, over whole groups."""
    n = n or 3
    res = SuiteResult("uniq")
    for t, rank, letters in (
        ("C", n, [0] + list(range(1, n))),
        ("A", n + 1, list(range(1, n + 1))),
        ("D", n, [BOX] + list(range(1, n))),
    ):
        table = {w: double_schubert(w, t, rank=rank) for w in elements(t, rank)}
        for w, f in table.items():
            for i in letters:
                ws, sw = w.right_simple(i), w.left_simple(i)
                want_y = table[ws] if length(ws) < length(w) else MPoly()
                want_z = table[sw] if length(sw) < length(w) else MPoly()
                res.check(divided_difference(f, "y", i) == want_y, f"{t} d^y_{i} {w}")
                res.check(divided_difference(f, "z", i) == want_z, f"{t} d^z_{i} {w}")
            ct = f.constant_term()
            res.check(ct == (1 if w.is_identity() else 0), f"{t} constant term {w}")
    return res


# -- splitting -------------------------------------------------------------------------


def suite_split(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Split formula equals the product formula."""
    n = n or 3
    res = SuiteResult("split")
    for t, first, pool in (("C", 0, [0] + list(range(1, n + 1))), ("D", BOX, [BOX] + list(range(1, n + 1)))):
        for w in elements(t, n):
            b = minimal_sequence(w.inverse(), first)
            want = double_schubert(w, t)
            for r in range(1, len(pool) + 1):
                for a in itertools.combinations(pool, r):
                    if not is_compatible(w, a):
                        continue
                    prob = SplitProblem(w, a, b, t)
                    res.check(split_formula(prob) == want, f"{t} {w} a={a} b={b}")
    for w in elements("A", n + 1):
        a = tuple(sorted(descents(w))) or (1,)
        b = tuple(sorted(descents(w.inverse()))) or (0,)
        res.check(split_formula(SplitProblem(w, a, b, "A")) == double_schubert(w, "A"), f"A {w}")
    return res


# -- Stanley coefficients ------------------------------------------------------------------


def _partitions(d: int, mx: int):
    if d == 0:
        yield ()
        return
    for p in range(min(d, mx), 0, -1):
        for rest in _partitions(d - p, p):
            yield (p,) + rest


def suite_stanley(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Tree counts against Q/P expansions of F_w and tableau counts."""
    n = n or 3
    res = SuiteResult("stanley")
    for w in elements("C", n):
        tree = {s.parts: m for s, m in stanley_coeffs(w, "C", 0).items()}
        res.check(q_basis_expand(stanley_function(w)) == tree, f"F_w Q-expansion {w}")
        for lam in strict_partitions(length(w)):
            res.check(kraskiewicz_count(w, lam) == tree.get(lam, 0), f"Kraskiewicz {w} {lam}")
    for w in elements("D", n):
        tree = {s.parts: m for s, m in stanley_coeffs(w, "D", BOX).items()}
        res.check(p_basis_expand(stanley_function(w)) == tree, f"F_w P-expansion {w}")
    for w in elements("A", n + 2):
        tree = {s.parts: m for s, m in stanley_coeffs(w, "A").items()}
        for lam in _partitions(length(w), length(w)):
            res.check(fg_tableau_count(w, lam) == tree.get(lam, 0), f"Fomin-Greene {w} {lam}")
    return res


# -- relations ------------------------------------------------------------------------


def suite_relations(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Quadratic relations, Pfaffians and the two extreme raising regimes."""
    res = SuiteResult("relations")
    m = 8
    for r in range(1, 7):
        rel = gen_q(r, m) ** 2 + sum((gen_q(r + i, m) * gen_q(r - i, m) * (2 * (-1) ** i) for i in range(1, r + 1)), MPoly())
        res.check(not rel, f"quadratic relation r={r} in {m} variables")
    for d in range(1, 11):
        for lam in strict_partitions(d):
            if len(lam) > 4:
                continue
            res.check(q_pfaffian(lam) == theta_formal(Shape(lam, 0)), f"Pfaffian {lam}")
    for d in range(1, 8):
        for lam in _partitions(d, d):
            if len(lam) <= 5:
                raising = expand_raising(RaisingSpec(len(lam)), lam)
                res.check(raising == jacobi_trudi(lam), f"{lam} raising = determinant")
    for k in range(1, 4):
        for d in range(1, 9):
            for lam in _partitions(d, d):
                if len(lam) > 5:
                    continue
                if all(p <= k for p in lam):
                    res.check(theta_formal(Shape(lam, k)) == schur_formal(lam), f"k={k} {lam} determinant")
                elif all(p > k for p in lam) and all(a > b for a, b in zip(lam, lam[1:])):
                    res.check(theta_formal(Shape(lam, k)) == q_pfaffian(lam), f"k={k} {lam} Pfaffian")
    return res


# -- geometrization -----------------------------------------------------------------------


def _locus_sequences(w, t: str):
    if t == "A":
        return tuple(sorted(descents(w))) or (1,), tuple(sorted(descents(w.inverse()))) or (0,)
    first = 0 if t in ("B", "C") else BOX
    return minimal_sequence(w, first), minimal_sequence(w.inverse(), first)


def suite_geometrize(n: int | None = None, seed: int = 0) -> SuiteResult:
    """Locus formula evaluated on Chern roots = geometrized double Schubert polynomial."""
    n = n or 3
    res = SuiteResult("geometrize")
    for t, group, rank in (("C", "C", n), ("D", "D", n), ("A", "A", n + 1), ("B", "C", n)):
        for w in elements(group, rank):
            a, b = _locus_sequences(w, t)
            lhs = evaluate_locus(emit_locus(w, t, rank, a, b))
            rhs = geometrize(double_schubert(w, t), t, rank)
            res.check(ideal_equal(lhs, rhs, t, rank, seed=seed), f"{t} {w}")
    return res


# -- stability and symmetry ---------------------------------------------------------------


def suite_stability(n: int | None = None, seed: int = 0, explicit_up_to: int = 4) -> SuiteResult:
    """Independence of the ambient rank and symmetry in the x-variables."""
    n = n or 3
    res = SuiteResult("stability")
    for t in ("A", "C", "D"):
        for w in elements(t, n):
            res.check(double_schubert(w, t, rank=n) == double_schubert(w, t, rank=n + 1), f"{t} {w} rank {n}->{n + 1}")
            ell = length(w)
            if t == "A" or not 0 < ell <= explicit_up_to:
                continue
            f = double_schubert(w, t, x_count=ell)
            xs = names("x", ell)
            ok = is_symmetric_in(f, xs)
            ok = ok and f == to_explicit(double_schubert(w, t), ell)
            res.check(ok, f"{t} {w} symmetric in {ell} x-variables")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "goldens": suite_goldens,
    "bijection": suite_bijection,
    "xtoy": suite_xtoy,
    "uniq": suite_uniq,
    "split": suite_split,
    "stanley": suite_stanley,
    "relations": suite_relations,
    "geometrize": suite_geometrize,
    "stability": suite_stability,
}


def run_suite(name: str, n: int | None = None, seed: int = 0) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    start = time.perf_counter()
    res = fn(n, seed)
    res.seconds = time.perf_counter() - start
    return res


def run_all(n: int | None = None, seed: int = 0) -> list[SuiteResult]:
    return [run_suite(name, n, seed) for name in SUITES]
