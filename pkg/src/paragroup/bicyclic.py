"""The bicyclic monoid C(p, q) = <p, q | qp = 1> in normal form p^a q^b.

Exponents are bounded by a signed 64-bit word; exceeding it raises
ExponentOverflow instead of wrapping.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ExponentOverflow, NotIdempotent, SemigroupError

MAX_EXPONENT = 2 ** 63 - 1


@dataclass(frozen=True, order=True)
class BicyclicElement:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise SemigroupError(f"exponents must be non-negative, got ({self.a}, {self.b})")
        if self.a > MAX_EXPONENT or self.b > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")

    def __mul__(self, other: "BicyclicElement") -> "BicyclicElement":
        return bmul(self, other)

    def __str__(self) -> str:
        return f"p^{self.a} q^{self.b}"


ONE = BicyclicElement(0, 0)
P = BicyclicElement(1, 0)
Q = BicyclicElement(0, 1)


def _checked_add(x: int, y: int) -> int:
    if x > MAX_EXPONENT - y:
        raise ExponentOverflow(f"{x} + {y} exceeds {MAX_EXPONENT}")
    return x + y


def bmul(u: BicyclicElement, v: BicyclicElement) -> BicyclicElement:
    """p^a q^b · p^c q^d = p^(a+c-m) q^(b+d-m) with m = min(b, c)."""
    m = min(u.b, v.a)
    return BicyclicElement(_checked_add(u.a, v.a - m), _checked_add(u.b - m, v.b))


def bmul_arrays(a1, b1, a2, b2) -> tuple[np.ndarray, np.ndarray]:
    """Elementwise bmul on exponent arrays, with the same overflow contract."""
    a1, b1, a2, b2 = (np.asarray(v, dtype=np.int64) for v in (a1, b1, a2, b2))
    if min(v.min(initial=0) for v in (a1, b1, a2, b2)) < 0:
        raise SemigroupError("exponents must be non-negative")
    m = np.minimum(b1, a2)
    da, db = a2 - m, b1 - m
    if (a1 > MAX_EXPONENT - da).any() or (db > MAX_EXPONENT - b2).any():
        raise ExponentOverflow(f"an exponent sum exceeds {MAX_EXPONENT}")
    return a1 + da, db + b2


def b_is_idempotent(u: BicyclicElement) -> bool:
    return u.a == u.b


def b_idempotent_leq(e: BicyclicElement, f: BicyclicElement) -> bool:
    for x in (e, f):
        if not b_is_idempotent(x):
            raise NotIdempotent(x)
    return bmul(e, f) == e and bmul(f, e) == e


class IdempotentChain(Sequence):
    """Pairs (e_{n+1}, e_n) for n < N with e_n = p^n q^n.

    ``strict[n]`` records the checked fact e_{n+1} <= e_n and e_{n+1} != e_n.
    Indexing yields BicyclicElement pairs; the exponents are kept as arrays so
    that million-element chains stay cheap.
    """

    def __init__(self, lower: np.ndarray, strict: np.ndarray):
        self.lower = lower
        self.strict = strict

    def __len__(self) -> int:
        return len(self.lower)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        n = int(self.lower[i])
        return BicyclicElement(n + 1, n + 1), BicyclicElement(n, n)

    @property
    def all_strict(self) -> bool:
        return bool(self.strict.all())


def no_primitive_witness(N: int) -> IdempotentChain:
    """Certify e_{n+1} < e_n for every n < N: no sampled idempotent is minimal."""
    if int(N) != N or N < 1:
        raise SemigroupError(f"N must be a positive integer, got {N!r}")
    if N > MAX_EXPONENT - 1:
        raise ExponentOverflow(f"chain length {N} exceeds the exponent bound")
    lower = np.arange(int(N), dtype=np.int64)
    return IdempotentChain(lower, _kernels.bicyclic_chain(lower))
