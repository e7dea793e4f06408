"""Signed-permutation Weyl groups of types A, B/C and D.

Elements are stored in one-line notation ``(w_1, ..., w_n)``; a negative
entry stands for a barred value.  Simple reflections act on the right on
positions:

* ``s_i`` (i >= 1) swaps positions i and i+1,
* ``s_0`` (type B/C) negates the first entry,
* ``s_box`` (type D) maps ``(w_1, w_2, ...)`` to ``(-w_2, -w_1, ...)``.

The type D letter is represented by the integer ``BOX = -1`` so that letters
sort as ``box < 1 < 2 < ...``.

>>> w = parse_perm("3,-1,-2")
>>> w.length()
6
>>> reduced_word(w)
(1, 0, 1, 2, 0, 1)
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "BOX",
    "SignedPermutation",
    "ValidationError",
    "parse_perm",
    "identity",
    "simple",
    "length",
    "length_oracle",
    "reduced_word",
    "descents",
    "reflect",
    "reduced_factorizations",
    "left_factors",
    "embed_symmetric",
    "elements",
    "longest_element",
    "letters",
    "word_to_perm",
    "format_word",
    "InSymmetric",
    "FixesUpTo",
    "AllOf",
    "Anything",
]

BOX = -1


class ValidationError(ValueError):
    """Malformed input (bad one-line notation, bad shape, violated precondition)."""


_TYPES = {"A": "A", "B": "BC", "C": "BC", "BC": "BC", "D": "D"}


def _norm_type(t: str) -> str:
    try:
        return _TYPES[t.upper()]
    except KeyError:
        raise ValidationError(f"unknown Lie type {t!r}") from None


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    """An element of S_n, W_n or W~_n (``type`` in {'A', 'BC', 'D'})."""

    type: str
    values: tuple[int, ...]
    _key: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        t = _norm_type(self.type)
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "type", t)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        if 0 in vals or sorted(abs(v) for v in vals) != list(range(1, n + 1)):
            raise ValidationError(f"not a signed permutation: {vals}")
        negs = sum(v < 0 for v in vals)
        if t == "A" and negs:
            raise ValidationError(f"type A permutation with barred entries: {vals}")
        if t == "D" and negs % 2:
            raise ValidationError(f"type D element needs an even number of bars: {vals}")
        key = list(vals)
        while key and key[-1] == len(key):
            key.pop()
        object.__setattr__(self, "_key", tuple(key))

    # equality ignores trailing fixed points (stable embedding W_n -> W_{n+1})
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.type == other.type and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.type, self._key))

    def __lt__(self, other: "SignedPermutation") -> bool:
        return (self.type, self._key) < (other.type, other._key)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based entry ``w_i``; positions beyond the rank are fixed, w_0 = 0."""
        if i == 0:
            return 0
        if i > len(self.values):
            return i
        return self.values[i - 1]

    def __call__(self, i: int) -> int:
        """The signed map i -> w(i), extended by w(-i) = -w(i)."""
        return -self[-i] if i < 0 else self[i]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"SignedPermutation({self.type!r}, {self.values})"

    def padded(self, n: int) -> "SignedPermutation":
        if n < len(self._key):
            raise ValidationError(f"{self} does not fit in rank {n}")
        vals = list(self.values[:n]) + list(range(len(self.values) + 1, n + 1))
        return SignedPermutation(self.type, tuple(vals))

    def as_type(self, t: str) -> "SignedPermutation":
        return SignedPermutation(t, self.values)

    @property
    def support_rank(self) -> int:
        """Smallest rank containing the element."""
        return max(len(self._key), 2 if self.type == "D" else 1)

    def is_identity(self) -> bool:
        return not self._key

    # group structure: (uv)(i) = u(v(i))
    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.type != other.type:
            raise ValidationError("type mismatch in product")
        n = max(len(self), len(other))
        return SignedPermutation(self.type, tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * len(self)
        for i, v in enumerate(self.values, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(self.type, tuple(inv))

    def negatives(self) -> int:
        """s(w): the number of barred entries."""
        return sum(v < 0 for v in self.values)

    def in_symmetric(self) -> bool:
        return all(v > 0 for v in self.values)

    def right_simple(self, r: int) -> "SignedPermutation":
        """w s_r."""
        v = list(self.values)
        if r == 0:
            if self.type != "BC":
                raise ValidationError("s_0 only exists in type B/C")
            v[0] = -v[0]
        elif r == BOX:
            if self.type != "D":
                raise ValidationError("s_box only exists in type D")
            if len(v) < 2:
                v += list(range(len(v) + 1, 3))
            v[0], v[1] = -v[1], -v[0]
        else:
            if r + 1 > len(v):
                v += list(range(len(v) + 1, r + 2))
            v[r - 1], v[r] = v[r], v[r - 1]
        return SignedPermutation(self.type, tuple(v))

    def left_simple(self, r: int) -> "SignedPermutation":
        """s_r w."""
        return simple(self.type, r, max(len(self), 2 if r == BOX else r + 1)) * self

    def length(self) -> int:
        return length(self)

    def to_json(self) -> dict:
        return {"type": "C" if self.type == "BC" else self.type, "values": list(self.values)}

    @classmethod
    def from_json(cls, d: dict) -> "SignedPermutation":
        return cls(d["type"], tuple(d["values"]))


def parse_perm(text: str, type: str = "C") -> SignedPermutation:
    """Parse comma-separated one-line notation; ``-3`` denotes a barred 3.

    A string of single digits without commas (``"143265"``) is also accepted.
    """
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
    elif text.isdigit():
        parts = list(text)
    else:
        parts = [text] if text else []
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise ValidationError(f"cannot parse one-line notation {text!r}") from None
    return SignedPermutation(type, vals)


def identity(type: str, n: int = 1) -> SignedPermutation:
    return SignedPermutation(type, tuple(range(1, n + 1)))


def simple(type: str, r: int, n: int | None = None) -> SignedPermutation:
    """The simple reflection s_r as an element of rank n."""
    if n is None:
        n = 2 if r == BOX else max(r + 1, 1)
    return identity(type, n).right_simple(r)


def letters(type: str, n: int) -> list[int]:
    """Simple-reflection letters of the rank-n group, in increasing order."""
    t = _norm_type(type)
    if t == "A":
        return list(range(1, n))
    if t == "BC":
        return list(range(0, n))
    return ([BOX] if n >= 2 else []) + list(range(1, n))


def length(w: SignedPermutation) -> int:
    """Closed-form Coxeter length.

    inv(w) counts i<j with w_i > w_j; type B/C adds #{i <= j : w_i + w_j < 0},
    type D adds #{i < j : w_i + w_j < 0}.
    """
    v = w.values
    n = len(v)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    if w.type == "A":
        return inv
    strict = w.type == "D"
    neg = sum(
        1 for i in range(n) for j in range(i + (1 if strict else 0), n) if v[i] + v[j] < 0
    )
    return inv + neg


def length_oracle(w: SignedPermutation) -> int:
    """Length as breadth-first distance from the identity in the Cayley graph."""
    n = w.support_rank
    target = w
    start = identity(w.type, n)
    seen = {start: 0}
    queue = deque([start])
    gens = letters(w.type, n)
    while queue:
        u = queue.popleft()
        if u == target:
            return seen[u]
        for r in gens:
            v = u.right_simple(r)
            if v not in seen:
                seen[v] = seen[u] + 1
                queue.append(v)
    raise AssertionError("unreachable element")  # pragma: no cover


def descents(w: SignedPermutation) -> set[int]:
    """Right descents r, i.e. l(w s_r) < l(w).

    For r >= 0 this is w_r > w_{r+1} with w_0 = 0; for type D the box letter
    is a descent when w_1 + w_2 < 0.
    """
    n = len(w)
    out = {r for r in range(1, n) if w[r] > w[r + 1]}
    if w.type == "BC" and w[1] < 0:
        out.add(0)
    if w.type == "D" and w[1] + w[2] < 0:
        out.add(BOX)
    return out


def left_descents(w: SignedPermutation) -> set[int]:
    return descents(w.inverse())


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Canonical reduced word: strip the smallest right descent repeatedly."""
    word: list[int] = []
    while True:
        d = descents(w)
        if not d:
            break
        r = min(d)
        word.append(r)
        w = w.right_simple(r)
    return tuple(reversed(word))


def word_to_perm(type: str, word: Iterable[int], n: int | None = None) -> SignedPermutation:
    word = list(word)
    if n is None:
        n = max([2 if a == BOX else a + 1 for a in word] + [1 if type != "D" else 2])
    w = identity(type, n)
    for a in word:
        w = w.right_simple(a)
    return w


def format_word(word: Sequence[int]) -> str:
    return " ".join("B" if a == BOX else str(a) for a in word)


def reflect(w: SignedPermutation, kind: str, i: int, j: int) -> SignedPermutation:
    """Right action of t_ij (swap positions) or tbar_ij.

    ``tbar_ij`` puts -w_j in position i and -w_i in position j; ``tbar_ii``
    negates position i.  Positions past the rank are fixed points and extend it.
    """
    if i > j:
        i, j = j, i
    if i < 1:
        raise ValidationError("reflection indices start at 1")
    n = max(len(w), j)
    v = list(w.padded(n).values)
    if kind == "t":
        if i == j:
            raise ValidationError("t_ij needs i < j")
        v[i - 1], v[j - 1] = v[j - 1], v[i - 1]
    elif kind in ("tbar", "t̄"):
        if i == j:
            v[i - 1] = -v[i - 1]
        else:
            v[i - 1], v[j - 1] = -v[j - 1], -v[i - 1]
    else:
        raise ValidationError(f"unknown reflection kind {kind!r}")
    if w.type == "A" and kind != "t":
        raise ValidationError("tbar is not in S_n")
    return SignedPermutation(w.type, tuple(v))


@lru_cache(maxsize=None)
def elements(type: str, n: int) -> tuple[SignedPermutation, ...]:
    """All elements of S_n, W_n or W~_n, sorted by (length, one-line)."""
    t = _norm_type(type)
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        if t == "A":
            out.append(SignedPermutation(t, p))
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if t == "D" and signs.count(-1) % 2:
                continue
            out.append(SignedPermutation(t, tuple(s * x for s, x in zip(signs, p))))
    out.sort(key=lambda u: (length(u), u.values))
    return tuple(out)


def longest_element(type: str, n: int) -> SignedPermutation:
    t = _norm_type(type)
    if t == "A":
        return SignedPermutation(t, tuple(range(n, 0, -1)))
    vals = [-i for i in range(1, n + 1)]
    if t == "D" and n % 2:
        vals[0] = 1
    return SignedPermutation(t, tuple(vals))


# -- factorizations -------------------------------------------------------


@dataclass(frozen=True)
class Anything:
    def __call__(self, u: SignedPermutation) -> bool:
        return True


@dataclass(frozen=True)
class InSymmetric:
    """Slot predicate: the factor lies in S_infinity (no barred entries)."""

    def __call__(self, u: SignedPermutation) -> bool:
        return u.in_symmetric()


@dataclass(frozen=True)
class FixesUpTo:
    """Slot predicate: u(i) = i for 1 <= i <= m (u(0) = 0 is automatic)."""

    m: int

    def __call__(self, u: SignedPermutation) -> bool:
        return all(u[i] == i for i in range(1, self.m + 1))


@dataclass(frozen=True)
class AllOf:
    preds: tuple

    def __call__(self, u: SignedPermutation) -> bool:
        return all(p(u) for p in self.preds)


@lru_cache(maxsize=None)
def left_factors(w: SignedPermutation) -> tuple[SignedPermutation, ...]:
    """All u with w = u v and l(u) + l(v) = l(w), ordered by length."""
    lw = length(w)
    n = w.support_rank
    gens = letters(w.type, n)
    start = identity(w.type, n)
    layer = {start}
    out = [start]
    for ell in range(lw):
        nxt = set()
        for u in layer:
            for r in gens:
                v = u.right_simple(r)
                if length(v) == ell + 1 and length(v.inverse() * w) == lw - ell - 1:
                    nxt.add(v)
        layer = nxt
        out.extend(sorted(nxt, key=lambda u: u.values))
    return tuple(out)


def reduced_factorizations(
    w: SignedPermutation,
    slots: int,
    constraints: Sequence[Callable[[SignedPermutation], bool]] | None = None,
) -> list[tuple[SignedPermutation, ...]]:
    """All reduced factorizations w = u_1 ... u_slots with per-slot predicates.

    Predicates must be hashable (the frozen dataclasses above are) since
    results are memoized on (w, remaining predicates).
    """
    if constraints is None:
        constraints = [Anything()] * slots
    if len(constraints) != slots:
        raise ValidationError("one constraint per slot required")
    return list(_factorizations(w, tuple(constraints)))


@lru_cache(maxsize=None)
def _factorizations(w: SignedPermutation, preds: tuple) -> tuple[tuple[SignedPermutation, ...], ...]:
    if len(preds) == 1:
        return ((w,),) if preds[0](w) else ()
    out = []
    lw = length(w)
    for u in left_factors(w):
        if not preds[0](u):
            continue
        v = u.inverse() * w
        # length additivity holds by construction of left_factors
        assert length(u) + length(v) == lw
        for rest in _factorizations(v, preds[1:]):
            out.append((u,) + rest)
    return tuple(out)


# -- embeddings into symmetric groups -----------------------------------------


def embed_symmetric(w: SignedPermutation, variant: str = "phi", n: int | None = None) -> SignedPermutation:
    """phi: W_n -> S_{2n} or phi': W_n -> S_{2n+1}.

    phi(w)_i = n+1-w_{n+1-i} for unbarred entries and n+|w_{n+1-i}| for barred
    ones (i <= n), completed by phi(w)_i + phi(w)_{2n+1-i} = 2n+1.  phi' uses
    n+1+|w| for barred entries, fixes n+1 and mirrors in 2n+2.
    """
    if w.type == "A":
        raise ValidationError("embed_symmetric needs a signed permutation")
    if n is None:
        n = len(w)
    w = w.padded(n)
    if variant == "phi":
        top = []
        for i in range(1, n + 1):
            x = w[n + 1 - i]
            top.append(n + 1 - x if x > 0 else n - x)
        full = top + [2 * n + 1 - top[n - 1 - j] for j in range(n)]
    elif variant == "phi_prime":
        top = []
        for i in range(1, n + 1):
            x = w[n + 1 - i]
            top.append(n + 1 - x if x > 0 else n + 1 - x)
        full = top + [n + 1] + [2 * n + 2 - top[n - 1 - j] for j in range(n)]
    else:
        raise ValidationError(f"unknown embedding {variant!r}")
    return SignedPermutation("A", tuple(full))
