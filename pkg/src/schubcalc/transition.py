"""Transition trees and (mixed) Stanley coefficients.

Three kinds of tree share one recursion:

* ``"A"``: the Lascoux-Schützenberger tree T(ω) of a permutation, with the
  fallback ω -> 1×ω when no branch exists;
* ``"C"``: the k-transition tree T^k(w) in W_∞;
* ``"D"``: the k-transition tree in W~_∞, whose barred branch skips i = r.

At a branching node r is the largest descent and s = max(i > r : w_i < w_r);
children are the length-preserving w t_rs t_ir (i < r) and, in types C/D,
w t_rs tbar_ir.  Leaf shapes count the Stanley coefficients.

>>> from .weyl import parse_perm
>>> coeffs = stanley_coeffs(parse_perm("3,-1,2,6,4,5"), "C", 1)
>>> sorted((tuple(l.parts), c) for l, c in coeffs.items())
[((2, 1, 1, 1), 1), ((3, 1, 1), 2), ((3, 2), 1), ((4, 1), 1), ((5,), 1)]
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .shapes import Shape, grassmannian_to_shape, is_increasing_up_to, _kint
from .weyl import BOX, SignedPermutation, ValidationError, descents, length, parse_perm, reflect

__all__ = [
    "TreeNode",
    "TransitionTree",
    "TreeDepthError",
    "transition_tree",
    "stanley_coeffs",
    "reduced_words",
    "fg_tableau_count",
    "kraskiewicz_count",
    "longest_unimodal",
    "shift_up",
]

_KINDS = {"A": "A", "C": "BC", "B": "BC", "D": "D"}


class TreeDepthError(RuntimeError):
    """The safety depth was exceeded; indicates a bug, never valid input."""


@dataclass
class TreeNode:
    element: SignedPermutation
    children: list["TreeNode"] = field(default_factory=list)
    r: int | None = None
    s: int | None = None

    def is_leaf(self) -> bool:
        return not self.children

    def to_json(self) -> dict:
        out: dict = {"node": str(self.element), "children": [c.to_json() for c in self.children]}
        if self.r is not None:
            out["r"], out["s"] = self.r, self.s
        return out


@dataclass
class TransitionTree:
    root: TreeNode
    kind: str
    k: int = 0

    def nodes(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    @property
    def leaves(self) -> list[tuple[SignedPermutation, Shape]]:
        return [(nd.element, leaf_shape(nd.element, self.kind, self.k)) for nd in self.nodes() if nd.is_leaf()]

    @property
    def edges(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for nd in self.nodes():
            if nd.children:
                out.setdefault(str(nd.element), []).extend(str(c.element) for c in nd.children)
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": "box" if self.k == BOX else self.k, "tree": self.root.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, d: dict) -> "TransitionTree":
        kind = d["kind"]
        group = _kind(kind)

        def node(x: dict) -> TreeNode:
            nd = TreeNode(parse_perm(x["node"], group), [node(c) for c in x["children"]])
            if "r" in x:
                nd.r, nd.s = x["r"], x["s"]
            return nd

        k = BOX if d["k"] == "box" else int(d["k"])
        return cls(node(d["tree"]), kind, k)

    def to_dot(self) -> str:
        lines = ["digraph transition {", "  node [shape=box, fontname=monospace];"]
        ids: dict[int, str] = {}
        for i, nd in enumerate(self.nodes()):
            ids[id(nd)] = f"n{i}"
            label = str(nd.element)
            if nd.r is not None:
                label += f"\\nr={'box' if nd.r == BOX else nd.r} s={nd.s}"
            elif nd.is_leaf():
                shape = leaf_shape(nd.element, self.kind, self.k)
                label += f"\\n({' '.join(map(str, shape.parts))})"
            lines.append(f'  n{i} [label="{label}"];')
        for nd in self.nodes():
            for c in nd.children:
                lines.append(f"  {ids[id(nd)]} -> {ids[id(c)]};")
        lines.append("}")
        return "\n".join(lines)


def _kind(kind: str) -> str:
    try:
        return _KINDS[kind.upper()]
    except KeyError:
        raise ValidationError(f"unknown tree kind {kind!r}") from None


def shift_up(w: SignedPermutation) -> SignedPermutation:
    """1×ω: prepend a fixed point and shift the other values up."""
    return SignedPermutation("A", (1,) + tuple(v + 1 for v in w.values))


def _largest_descent(w: SignedPermutation) -> int | None:
    d = descents(w)
    return max(d) if d else None


def _is_leaf(w: SignedPermutation, kind: str, k: int) -> bool:
    r = _largest_descent(w)
    if r is None:
        return True
    if kind == "A":
        return len(descents(w)) == 1
    if kind == "D":
        if k == 1:
            return r in (BOX, 1)
        return r == (BOX if _kint(k) == 0 else k)
    return r == k


def _branch(w: SignedPermutation, kind: str) -> tuple[int, int, list[SignedPermutation]]:
    r = _largest_descent(w)
    assert r is not None and r >= 1
    s = max(i for i in range(r + 1, len(w) + 1) if w[i] < w[r])
    ell = length(w)
    v = reflect(w, "t", r, s)
    out = set()
    for i in range(1, r):
        u = reflect(v, "t", i, r)
        if length(u) == ell:
            out.add(u)
    if kind != "A":
        for i in range(1, len(w) + 2):
            if kind == "D" and i == r:
                continue
            u = reflect(v, "tbar", i, r)
            if length(u) == ell:
                out.add(u)
    return r, s, sorted(out, key=lambda u: u.values)


def transition_tree(w: SignedPermutation, kind: str = "C", k: int = 0) -> TransitionTree:
    """Build T(ω) (kind "A"), T^k(w) (kind "C") or the type D tree (kind "D")."""
    t = _kind(kind)
    kind = "A" if t == "A" else ("D" if t == "D" else "C")
    if w.type != t:
        if w.type == "A" and t != "A":
            w = w.as_type(t)
        else:
            raise ValidationError(f"{w} is not in the group for a type {kind} tree")
    if kind != "A" and not is_increasing_up_to(w, k):
        raise ValidationError(f"{w} is not increasing up to {k}")
    cap = max(1, length(w)) * (len(w) + 2) ** 2

    def build(u: SignedPermutation, depth: int) -> TreeNode:
        if depth > cap:
            raise TreeDepthError(f"transition tree deeper than {cap} at {u}")
        node = TreeNode(u)
        if _is_leaf(u, kind, k):
            return node
        cur = u
        while True:
            r, s, kids = _branch(cur, kind)
            if kids or kind != "A":
                break
            cur = shift_up(cur)
        node.r, node.s = r, s
        node.children = [build(c, depth + 1) for c in kids]
        return node

    return TransitionTree(build(w, 0), kind, k)


def leaf_shape(w: SignedPermutation, kind: str, k: int) -> Shape:
    if kind == "A":
        d = descents(w)
        parts = grassmannian_to_shape(w, max(d) if d else 0).parts
        return Shape(parts, 0, plain=True)
    if kind == "D" and k == 1 and w.is_identity():
        return Shape((), 1, 0, typed=True)
    return grassmannian_to_shape(w, k)


def stanley_coeffs(w: SignedPermutation, kind: str = "C", k: int = 0) -> dict[Shape, int]:
    """Leaf counts by shape: c^ω_λ, e^w_λ or d^w_λ."""
    tree = transition_tree(w, kind, k)
    return dict(Counter(shape for _, shape in tree.leaves))


# -- tableau oracles -----------------------------------------------------------------


@lru_cache(maxsize=None)
def reduced_words(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """All reduced words of w, lexicographically sorted."""
    if w.is_identity():
        return ((),)
    out = []
    for r in sorted(descents(w)):
        for word in reduced_words(w.right_simple(r)):
            out.append(word + (r,))
    return tuple(sorted(out))


def _chunks(word: tuple[int, ...], sizes) -> list[tuple[int, ...]]:
    out, pos = [], 0
    for sz in sizes:
        out.append(word[pos : pos + sz])
        pos += sz
    return out


def fg_tableau_count(w: SignedPermutation, lam: Shape | tuple[int, ...]) -> int:
    """Semistandard tableaux of the conjugate shape whose column word is reduced for w.

    Columns of the conjugate shape have lengths λ_1, λ_2, ...; each column
    read bottom to top is strictly decreasing and rows weakly increase.
    """
    parts = tuple(lam.parts if isinstance(lam, Shape) else lam)
    if sum(parts) != length(w):
        return 0
    count = 0
    for word in reduced_words(w):
        cols = [tuple(reversed(c)) for c in _chunks(word, parts)]
        if any(any(a >= b for a, b in zip(c, c[1:])) for c in cols):
            continue
        if all(cols[j][i] <= cols[j + 1][i] for j in range(len(cols) - 1) for i in range(len(cols[j + 1]))):
            count += 1
    return count


def longest_unimodal(seq) -> int:
    """Length of the longest subsequence b_1 > ... > b_j < ... < b_m."""
    n = len(seq)
    dec = [1] * n
    uni = [1] * n
    for i in range(n):
        for j in range(i):
            if seq[j] > seq[i]:
                dec[i] = max(dec[i], dec[j] + 1)
        uni[i] = dec[i]
        for j in range(i):
            if seq[j] < seq[i]:
                uni[i] = max(uni[i], uni[j] + 1)
    return max(uni, default=0)


def _is_unimodal(seq) -> bool:
    j = 0
    while j + 1 < len(seq) and seq[j] > seq[j + 1]:
        j += 1
    return all(seq[i] < seq[i + 1] for i in range(j, len(seq) - 1))


def kraskiewicz_count(w: SignedPermutation, lam: Shape | tuple[int, ...]) -> int:
    """Kraśkiewicz (standard decomposition) tableaux for w of shape λ."""
    parts = tuple(lam.parts if isinstance(lam, Shape) else lam)
    if any(a <= b for a, b in zip(parts, parts[1:])):
        return 0
    if sum(parts) != length(w):
        return 0
    if w.type == "A":
        w = w.as_type("C")
    count = 0
    for word in reduced_words(w):
        rows = _chunks(word, tuple(reversed(parts)))  # t_r, ..., t_1
        ok = True
        for idx, row in enumerate(rows):
            prefix = tuple(x for rr in rows[: idx + 1] for x in rr)
            if not _is_unimodal(row) or longest_unimodal(prefix) != len(row):
                ok = False
                break
        count += ok
    return count
