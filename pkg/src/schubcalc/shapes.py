"""Partitions, k-strict and typed k-strict partitions, order ideals, index sets,
and the bijection with k-Grassmannian Weyl group elements.

The bijection is computed arithmetically.  For type B/C and a k-strict λ, let
``mu`` be the parts of λ in columns > k (``mu_r = λ_r - k``) and put

    f(R) = R - #{r : mu_r + r > R}.

Then ``w_i = f(i + λ'_{k+1-i})`` for ``1 <= i <= k`` and the remaining entries
are ``-mu_1 < -mu_2 < ...`` followed by the unused positive values.  Each value
``f(R)`` counts the boxes of the south-west/north-east diagonal in columns > k
whose lowest box sits in row R of column k+1, outside mu.  Type D shifts every
absolute value by one: ``|w_i| = 1 + f(i + λ'_{k+1-i} - 1)`` and the negative
entries are ``-(mu_r + 1)``.

>>> lam = Shape((7, 4, 3, 1, 1), 3)
>>> str(shape_to_grassmannian(lam, "C"))
'3,5,8,-4,-1,2,6,7'
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .weyl import BOX, SignedPermutation, ValidationError, descents, identity, length

__all__ = [
    "Shape",
    "OrderIdeal",
    "parse_shape",
    "conjugate",
    "order_ideal",
    "index_set",
    "shape_to_grassmannian",
    "grassmannian_to_shape",
    "ideal_of_grassmannian",
    "is_grassmannian",
    "is_increasing_up_to",
    "k_strict_shapes",
    "typed_shapes",
    "partitions_in_box",
    "strict_partitions",
]

OrderIdeal = frozenset  # of (i, j) pairs, 1 <= i < j


def _kint(k: int) -> int:
    return 0 if k == BOX else k


@dataclass(frozen=True)
class Shape:
    """A partition with its strictness parameter k and, for type D, a type.

    ``k`` may be ``BOX`` for the type D maximal orthogonal case, which behaves
    like k = 0.  ``typed`` marks shapes that carry a meaningful type tag.
    """

    parts: tuple[int, ...]
    k: int = 0
    type_tag: int = 0
    typed: bool = False
    plain: bool = False

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts if p != 0)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"not a partition: {self.parts}")
        k = _kint(self.k)
        if self.k != BOX and self.k < 0:
            raise ValidationError("k must be nonnegative")
        for a, b in zip(parts, parts[1:]):
            if a == b and a > k and not self.plain:
                raise ValidationError(f"{parts} is not {k}-strict")
        if self.typed:
            has_k = k > 0 and k in parts
            if self.type_tag not in (0, 1, 2) or (self.type_tag > 0) != has_k:
                raise ValidationError(f"bad type {self.type_tag} for {parts} with k={self.k}")
        elif self.type_tag:
            raise ValidationError("type tag given for an untyped shape")

    @property
    def kk(self) -> int:
        """k as an integer (BOX counts as 0)."""
        return _kint(self.k)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def ell_k(self) -> int:
        """Number of parts strictly greater than k."""
        return sum(1 for p in self.parts if p > self.kk)

    def conjugate(self) -> tuple[int, ...]:
        return conjugate(self.parts)

    def star_row(self) -> int | None:
        """Least index d with λ_d = k, for typed shapes of positive type."""
        if not self.type_tag:
            return None
        return self.parts.index(self.kk) + 1

    def __str__(self) -> str:
        body = " ".join(map(str, self.parts)) or "0"
        kk = "B" if self.k == BOX else str(self.k)
        return f"{body} | k={kk} | t={self.type_tag}"

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "k": "B" if self.k == BOX else self.k, "type": self.type_tag}

    @classmethod
    def from_json(cls, d: dict) -> "Shape":
        k = BOX if d.get("k") == "B" else int(d.get("k", 0))
        t = int(d.get("type", 0))
        return cls(tuple(d["parts"]), k, t, typed=bool(d.get("typed", t > 0)))


def parse_shape(text: str, k: int = 0, type_tag: int = 0, typed: bool = False) -> Shape:
    """Parse "3,1,1" or "3 1 1"; the empty string is the empty partition."""
    parts = [int(p) for p in text.replace(",", " ").split()] if text.strip() else []
    return Shape(tuple(parts), k, type_tag, typed)


def conjugate(parts: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def order_ideal(lam: Shape, variant: str = "C") -> OrderIdeal:
    """C(λ) (strict inequality) or C'(λ) (weak inequality)."""
    k = lam.kk
    weak = variant.lower() in ("cprime", "c'", "d")
    pairs = set()
    for i in range(1, len(lam) + 1):
        for j in range(i + 1, i + 2 * lam[i] + 2):
            s, bound = lam[i] + lam[j], 2 * k + j - i
            if s > bound or (weak and s == bound):
                pairs.add((i, j))
    return frozenset(pairs)


def _fits(lam: Shape, n: int, lie_type: str) -> bool:
    k = lam.kk
    cols = n + k - (1 if lie_type.upper() == "D" else 0)
    rows = n - k
    return len(lam) <= rows and (not lam.parts or lam.parts[0] <= cols)


def index_set(lam: Shape, n: int, lie_type: str = "C") -> list[int]:
    """The index set P(λ) = {p_1 < ... < p_{n-k}}.

    Type B relabels the type C values through [1, 2n] -> [1, 2n+1] minus the
    middle index n+1.
    """
    t = lie_type.upper()
    if not _fits(lam, n, t):
        raise ValidationError(f"{lam} does not fit the rank-{n} rectangle")
    k = lam.kk
    m = n - k
    ideal = order_ideal(lam, "Cprime" if t == "D" else "C")
    out = []
    for j in range(1, m + 1):
        p = n + k + j - lam[j] - sum(1 for (i, jj) in ideal if jj == j)
        if t == "D":
            prev = lam[j - 1] if j > 1 else float("inf")
            if lam[j] > k or (lam[j] == k and k < prev and (n + j + lam.type_tag) % 2 == 1):
                p -= 1
        if t == "B" and p > n:
            p += 1
        out.append(p)
    return out


def _f(mu: list[int], R: int) -> int:
    return R - sum(1 for r, m in enumerate(mu, start=1) if m + r > R)


def _f_inverse(mu: list[int], value: int) -> int:
    R = 0
    while _f(mu, R) < value:
        R += 1
    if _f(mu, R) != value:
        raise ValidationError("element is not Grassmannian for this k")
    return R


def shape_to_grassmannian(lam: Shape, lie_type: str = "C", n: int | None = None) -> SignedPermutation:
    """The Grassmannian element w_λ (for type A, k is the descent position m)."""
    t = lie_type.upper()
    k = lam.kk
    if t == "A":
        m = k if k else len(lam)
        if len(lam) > m:
            raise ValidationError(f"{lam} has more than {m} rows")
        head = [lam[m + 1 - j] + j for j in range(1, m + 1)]
        top = max(head + [m, n or 0])
        tail = [v for v in range(1, top + 1) if v not in head]
        return SignedPermutation("A", tuple(head + tail))
    lamc = lam.conjugate()
    mu = [p - k for p in lam.parts if p > k]
    if t in ("B", "C", "BC"):
        head = [_f(mu, i + (lamc[k - i] if k - i < len(lamc) else 0)) for i in range(1, k + 1)]
        negs = [-m for m in mu]
    elif t == "D":
        head = [1 + _f(mu, i + (lamc[k - i] if k - i < len(lamc) else 0) - 1) for i in range(1, k + 1)]
        negs = [-(m + 1) for m in mu]
    else:
        raise ValidationError(f"unknown type {lie_type}")
    used = set(head) | {-v for v in negs}
    if len(used) != len(head) + len(negs) or any(v <= 0 for v in head):
        raise ValidationError(f"{lam} is not a valid shape for type {t}")
    top = max(list(used) + [k, n or 0, 2 if t == "D" else 1])
    free = [v for v in range(1, top + 1) if v not in used]
    if t == "D":
        odd = (len(negs) + (1 if lam.type_tag == 2 else 0)) % 2 == 1
        if head and head[0] == 1:
            # type 0: the sign of w_1 fixes the parity
            if lam.type_tag:
                raise ValidationError("type must be 0 when |w_1| = 1")
            if odd:
                head[0] = -1
        else:
            if k > 0 and not lam.typed and k in lam.parts:
                raise ValidationError("type D shape with a part equal to k needs a type")
            if lam.type_tag == 2:
                head[0] = -head[0]
            if odd:
                free.remove(1)
                negs.append(-1)
    tail = sorted(negs) + free
    w = SignedPermutation("D" if t == "D" else "BC", tuple(head + tail))
    if n is not None:
        w = w.padded(n)
    return w


def is_increasing_up_to(w: SignedPermutation, k: int) -> bool:
    """Whether w has no descents at positions other than ... below k.

    Types A/BC: 0 < w_1 < ... < w_k (w_0 = 0).  Type D with k >= 2:
    |w_1| < w_2 < ... < w_k.  Every element qualifies for k in {box, 1}.
    """
    if w.type == "D":
        if k == BOX or k <= 1:
            return True
        return abs(w[1]) < w[2] and all(w[i] < w[i + 1] for i in range(2, k))
    return all(w[i] < w[i + 1] for i in range(0, k))


def is_grassmannian(w: SignedPermutation, k: int) -> bool:
    """Only descent (if any) at k; for type D and k = 1 descents lie in {box, 1}."""
    d = descents(w)
    if w.type == "D" and k == 1:
        return d <= {BOX, 1}
    return d <= {k}


def grassmannian_to_shape(w: SignedPermutation, k: int) -> Shape:
    """Inverse of :func:`shape_to_grassmannian`."""
    if not is_grassmannian(w, k):
        raise ValidationError(f"{w} is not {k}-Grassmannian")
    if w.type == "A":
        parts = sorted((w[j] - j for j in range(1, k + 1)), reverse=True)
        return Shape(tuple(parts), k, plain=True)
    kk = _kint(k)
    tail = [w[i] for i in range(kk + 1, len(w) + 1)]
    if w.type == "BC":
        mu = sorted((-v for v in tail if v < 0), reverse=True)
        colk = [_f_inverse(mu, w[i]) - i for i in range(1, kk + 1)]
    else:
        mu = sorted((-v - 1 for v in tail if v < -1), reverse=True)
        colk = [_f_inverse(mu, abs(w[i]) - 1) + 1 - i for i in range(1, kk + 1)]
    # colk[i-1] is the length of column k+1-i
    cols = list(reversed(colk))
    if any(c < len(mu) for c in cols):
        raise ValidationError("inconsistent column data")
    rows = max(cols + [len(mu)]) if cols or mu else 0
    parts = []
    for r in range(1, rows + 1):
        if r <= len(mu):
            parts.append(kk + mu[r - 1])
        else:
            parts.append(sum(1 for c in cols if c >= r))
    if w.type == "D":
        if kk == 0:
            return Shape(tuple(parts), k, 0, typed=True)
        t = 0 if abs(w[1]) == 1 else (1 if w[1] > 0 else 2)
        return Shape(tuple(parts), k, t, typed=True)
    return Shape(tuple(parts), k)


def ideal_of_grassmannian(w: SignedPermutation, k: int) -> OrderIdeal:
    """C(w) = {(i, j) : i < j, w_{k+i} + w_{k+j} < 0}."""
    if not is_grassmannian(w, k):
        raise ValidationError(f"{w} is not {k}-Grassmannian")
    kk = _kint(k)
    m = len(w) - kk
    return frozenset(
        (i, j)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
        if w[kk + i] + w[kk + j] < 0
    )


# -- enumeration ---------------------------------------------------------------


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """All partitions inside a rows x cols rectangle."""

    def rec(prefix: list[int], maxpart: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) == rows:
            return
        for p in range(min(maxpart, cols), 0, -1):
            yield from rec(prefix + [p], p)

    yield from rec([], cols)


def k_strict_shapes(n: int, k: int, lie_type: str = "C") -> list[Shape]:
    """k-strict partitions in the (n-k) x (n+k) rectangle (n+k-1 for type D).

    For type D each shape with a part equal to k appears with types 1 and 2.
    """
    t = lie_type.upper()
    kk = _kint(k)
    rows, cols = n - kk, n + kk - (1 if t == "D" else 0)
    out = []
    for parts in partitions_in_box(rows, cols):
        if any(a == b and a > kk for a, b in zip(parts, parts[1:])):
            continue
        if t == "D":
            if kk > 0 and kk in parts:
                out.extend(Shape(parts, k, tt, typed=True) for tt in (1, 2))
            else:
                out.append(Shape(parts, k, 0, typed=True))
        else:
            out.append(Shape(parts, k))
    return out


typed_shapes = k_strict_shapes


@lru_cache(maxsize=None)
def strict_partitions(d: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Strict partitions of d in decreasing lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for p in range(min(d, max_part), 0, -1):
        for rest in strict_partitions(d - p, p - 1):
            out.append((p,) + rest)
    return tuple(out)


def grassmannian_elements(type: str, n: int, k: int) -> list[SignedPermutation]:
    from .weyl import elements

    return [w for w in elements(type, n) if is_grassmannian(w, k)]


__all__.append("grassmannian_elements")
del identity, length
