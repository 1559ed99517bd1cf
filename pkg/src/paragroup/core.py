"""Finite semigroups as Cayley tables.

Elements are dense 0-based indices and ``table[i, j]`` is the index of the
product ``s_i * s_j`` (row = left operand).  Names are display metadata only.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (AssociativityFailure, ClosureBudgetExceeded,
                     DegreeMismatch, EntryOutOfRange, NotVerified,
                     OwnerMismatch, SemigroupError)

DEFAULT_MAX_ORDER = 10_000


class FiniteSemigroup:
    """A finite magma given by its Cayley table.

    Construction only checks the shape.  Range and associativity are checked
    by :func:`validate_table`, which returns a copy carrying ``verified=True``;
    the structure algorithms refuse unverified values.
    """

    __slots__ = ("table", "names", "verified")

    def __init__(self, table, names: Sequence[str] | None = None, *,
                 verified: bool = False):
        arr = np.array(table, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise SemigroupError(
                f"Cayley table must be a non-empty square matrix, got shape {arr.shape}")
        arr.flags.writeable = False
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != arr.shape[0]:
                raise SemigroupError(
                    f"expected {arr.shape[0]} names, got {len(names)}")
        self.table = arr
        self.names = names
        self.verified = verified

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, index: int) -> "Element":
        index = int(index)
        if not 0 <= index < self.order:
            raise IndexError(f"element index {index} out of range for order {self.order}")
        return Element(self, index)

    def __iter__(self):
        return (Element(self, i) for i in range(self.order))

    def elements(self) -> list["Element"]:
        return list(self)

    def name(self, index: int) -> str:
        return self.names[index] if self.names is not None else str(index)

    def same_table(self, other: "FiniteSemigroup") -> bool:
        return self.table.shape == other.table.shape and bool(
            np.array_equal(self.table, other.table))

    def require_verified(self) -> None:
        if not self.verified:
            raise NotVerified()

    def __repr__(self) -> str:
        mark = "verified" if self.verified else "unverified"
        return f"<FiniteSemigroup order={self.order} {mark}>"


class Element:
    """An element of a particular FiniteSemigroup.

    Equality requires the *same* owner object, not an equal table.
    ``a * b`` is the semigroup product and ``a ** k`` the k-th power.
    """

    __slots__ = ("owner", "index")

    def __init__(self, owner: FiniteSemigroup, index: int):
        self.owner = owner
        self.index = int(index)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.owner is other.owner and self.index == other.index

    def __hash__(self):
        return hash((id(self.owner), self.index))

    def __index__(self) -> int:
        return self.index

    def __mul__(self, other: "Element") -> "Element":
        return product(self, other)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __repr__(self) -> str:
        return f"Element({self.owner.name(self.index)})"


@dataclass(frozen=True)
class Transformation:
    """A self-map of {0, ..., degree-1}; ``t.compose(u)`` is t∘u: i -> t(u(i))."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        k = len(images)
        if k < 1:
            raise SemigroupError("transformation degree must be positive")
        for i, v in enumerate(images):
            if not 0 <= v < k:
                raise SemigroupError(
                    f"image {v} of point {i} is out of range [0, {k})")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Transformation") -> "Transformation":
        if other.degree != self.degree:
            raise DegreeMismatch(
                f"cannot compose degree {self.degree} with degree {other.degree}")
        return Transformation(tuple(self.images[j] for j in other.images))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def validate_table(S: FiniteSemigroup) -> FiniteSemigroup:
    """Check ranges and all n**3 associativity triples; return S marked verified.

    Raises EntryOutOfRange for the first bad entry in row-major order, and
    AssociativityFailure for the lexicographically first bad triple.
    """
    table = S.table
    n = S.order
    bad = (table < 0) | (table >= n)
    if bad.any():
        r, c = divmod(int(np.argmax(bad)), n)
        raise EntryOutOfRange(r, c, int(table[r, c]), n)
    i, j, k = _kernels.associativity_failure(table)
    if i >= 0:
        raise AssociativityFailure(i, j, k)
    if S.verified:
        return S
    return FiniteSemigroup(table, S.names, verified=True)


def product(a: Element, b: Element) -> Element:
    if a.owner is not b.owner:
        raise OwnerMismatch()
    return Element(a.owner, a.owner.table[a.index, b.index])


def _power_index(table: np.ndarray, a: int, k: int) -> int:
    result = -1
    base = a
    while True:
        if k & 1:
            result = base if result < 0 else int(table[result, base])
        k >>= 1
        if not k:
            return result
        base = int(table[base, base])


def power(a: Element, k: int) -> Element:
    """a**k for k >= 1 by repeated squaring."""
    if int(k) != k or k < 1:
        raise SemigroupError(f"power exponent must be a positive integer, got {k!r}")
    return Element(a.owner, _power_index(a.owner.table, a.index, int(k)))


def _idempotent_power_index(table: np.ndarray, a: int) -> int:
    # Floyd on y_0 = a, y_{t+1} = y_t * a, then scan the cycle for e*e = e
    def step(x: int) -> int:
        return int(table[x, a])

    tortoise, hare = step(a), step(step(a))
    while tortoise != hare:
        tortoise, hare = step(tortoise), step(step(hare))
    tortoise = a
    while tortoise != hare:
        tortoise, hare = step(tortoise), step(hare)
    x = tortoise
    while int(table[x, x]) != x:
        x = step(x)
    return x


def idempotent_power(a: Element) -> Element:
    """The idempotent a**k with k minimal; exists for every element of a finite semigroup."""
    return Element(a.owner, _idempotent_power_index(a.owner.table, a.index))


def idempotent_indices(S: FiniteSemigroup) -> np.ndarray:
    S.require_verified()
    n = S.order
    return np.flatnonzero(S.table[np.arange(n), np.arange(n)] == np.arange(n))


def idempotents(S: FiniteSemigroup) -> list[Element]:
    return [Element(S, i) for i in idempotent_indices(S)]


def _as_transformation(g) -> Transformation:
    return g if isinstance(g, Transformation) else Transformation(tuple(g))


def _encode_rows(rows: np.ndarray, degree: int):
    """Integer codes for transformation rows, or None when they would overflow int64."""
    if degree ** degree >= 2 ** 62:
        return None
    weights = degree ** np.arange(degree, dtype=np.int64)
    return rows @ weights


def closure_from_generators(gens: Iterable, max_order: int = DEFAULT_MAX_ORDER
                            ) -> tuple[FiniteSemigroup, list[Transformation]]:
    """Semigroup generated by transformations under composition.

    Elements are numbered in breadth-first discovery order, generators first
    (duplicates collapse onto their first occurrence).  ``table[i, j]`` is the
    index of ``t_i.compose(t_j)``.  The result is associative by construction
    and is returned verified.
    """
    gens = [_as_transformation(g) for g in gens]
    if not gens:
        raise SemigroupError("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator {g} has degree {g.degree}, expected {degree}")

    index: dict[tuple[int, ...], int] = {}
    elements: list[tuple[int, ...]] = []

    def add(images: tuple[int, ...]) -> None:
        if images not in index:
            if len(elements) >= max_order:
                raise ClosureBudgetExceeded(len(elements) + 1, max_order)
            index[images] = len(elements)
            elements.append(images)
            queue.append(images)

    queue: deque = deque()
    for g in gens:
        add(g.images)
    while queue:
        s = queue.popleft()
        for g in gens:
            add(tuple(s[j] for j in g.images))

    T = np.array(elements, dtype=np.int64)
    m = len(elements)
    table = np.empty((m, m), dtype=np.int64)
    codes = _encode_rows(T, degree)
    if codes is not None:
        order = np.argsort(codes)
        sorted_codes = codes[order]
        for i in range(m):
            row_codes = _encode_rows(T[i][T], degree)
            table[i] = order[np.searchsorted(sorted_codes, row_codes)]
    else:
        for i in range(m):
            composed = T[i][T]
            table[i] = [index[tuple(r)] for r in composed.tolist()]
    labels = [Transformation(e) for e in elements]
    names = [str(t) for t in labels]
    return FiniteSemigroup(table, names, verified=True), labels


def verify_isomorphism(src: FiniteSemigroup, dst: FiniteSemigroup, phi) -> bool:
    """True iff ``phi`` (src index -> dst index) is a bijective homomorphism."""
    phi = np.asarray(phi, dtype=np.int64)
    n = src.order
    if dst.order != n or phi.shape != (n,):
        return False
    if phi.min() < 0 or phi.max() >= n or len(np.unique(phi)) != n:
        return False
    return _kernels.homomorphism_failure(src.table, dst.table, phi)[0] < 0
