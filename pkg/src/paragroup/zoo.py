"""Standard semigroups and seeded random Rees matrix semigroups.

Random draws use SplitMix64, so a seed reproduces the same corpus in any
language::

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

An integer uniform on [lo, hi] is ``lo + (output * (hi - lo + 1)) >> 64``.
:func:`random_rees` draws, in order: the group order in [1, max_group], |X| in
[1, max_x], |Y| in [1, max_y], then sigma[y][x] in [0, |H|) row by row.
"""
from __future__ import annotations

import numpy as np

from .core import (DEFAULT_MAX_ORDER, FiniteSemigroup, closure_from_generators,
                   validate_table)
from .errors import ParamOutOfRange, SizeBudgetExceeded
from .rees import ReesMatrixSemigroup
from .structure import CertifiedGroup, certify_group

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        return lo + ((self.next() * (hi - lo + 1)) >> 64)


def _table(n: int, op) -> np.ndarray:
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return op(i, j)


def left_zero(n: int) -> FiniteSemigroup:
    return validate_table(FiniteSemigroup(_table(n, lambda i, j: i)))


def right_zero(n: int) -> FiniteSemigroup:
    return validate_table(FiniteSemigroup(_table(n, lambda i, j: j)))


def rectangular_band(k: int, m: int) -> FiniteSemigroup:
    """Pairs (i, j) at index i*m + j with (i, j)(i', j') = (i, j')."""
    n = k * m
    table = _table(n, lambda a, b: (a // m) * m + b % m)
    names = [f"({i},{j})" for i in range(k) for j in range(m)]
    return validate_table(FiniteSemigroup(table, names))


def cyclic_group(n: int) -> FiniteSemigroup:
    return validate_table(FiniteSemigroup(_table(n, lambda i, j: (i + j) % n)))


def zero_semigroup(n: int) -> FiniteSemigroup:
    return validate_table(FiniteSemigroup(_table(n, lambda i, j: 0 * i)))


def min_semilattice(n: int) -> FiniteSemigroup:
    return validate_table(FiniteSemigroup(_table(n, np.minimum)))


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    """S_n from a transposition and an n-cycle, numbered by discovery."""
    gens = [tuple(range(n))] if n == 1 else []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        gens.append(tuple(range(1, n)) + (0,))
    return closure_from_generators(gens, max_order)[0]


def full_transformation_monoid(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    """T_n from the identity, S_n's generators and one map of rank n-1."""
    gens = [tuple(range(n))]
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        gens.append(tuple(range(1, n)) + (0,))
    if n >= 2:
        gens.append((0, 0) + tuple(range(2, n)))
    return closure_from_generators(gens, max_order)[0]


_STANDARD = {
    "left_zero": (left_zero, 1, None),
    "right_zero": (right_zero, 1, None),
    "rectangular_band": (rectangular_band, 2, None),
    "cyclic_group": (cyclic_group, 1, None),
    "zero_semigroup": (zero_semigroup, 1, None),
    "min_semilattice": (min_semilattice, 1, None),
    "symmetric_group": (symmetric_group, 1, 5),
    "full_transformation_monoid": (full_transformation_monoid, 1, 3),
}

STANDARD_KINDS = tuple(_STANDARD)


def make_standard(kind: str, *params: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    """Build a standard semigroup, e.g. ``make_standard("rectangular_band", 2, 3)``.

    Raises SizeBudgetExceeded when the result would have more than
    ``max_order`` elements.
    """
    key = kind.replace("-", "_")
    if key not in _STANDARD:
        raise ParamOutOfRange(f"unknown kind {kind!r}; expected one of {', '.join(STANDARD_KINDS)}")
    build, arity, cap = _STANDARD[key]
    if len(params) != arity:
        raise ParamOutOfRange(f"{key} takes {arity} parameter(s), got {len(params)}")
    for p in params:
        if int(p) != p or p < 1:
            raise ParamOutOfRange(f"{key} parameters must be integers >= 1, got {p!r}")
        if cap is not None and p > cap:
            raise ParamOutOfRange(f"{key} parameter must be <= {cap}, got {p}")
    params = tuple(int(p) for p in params)
    if build in (symmetric_group, full_transformation_monoid):
        return build(*params, max_order=max_order)
    size = params[0] * params[1] if len(params) == 2 else params[0]
    if size > max_order:
        raise SizeBudgetExceeded(size, max_order)
    return build(*params)


def cyclic_certified_group(n: int) -> CertifiedGroup:
    return certify_group(cyclic_group(n))


def random_rees(seed: int, max_group: int, max_x: int, max_y: int) -> ReesMatrixSemigroup:
    """Paragroup over a cyclic group with a uniformly random sandwich; see module docs."""
    for name, v in (("max_group", max_group), ("max_x", max_x), ("max_y", max_y)):
        if v < 1:
            raise ParamOutOfRange(f"{name} must be >= 1, got {v}")
    rng = SplitMix64(seed)
    g = rng.uniform(1, max_group)
    nx = rng.uniform(1, max_x)
    ny = rng.uniform(1, max_y)
    sigma = [[rng.uniform(0, g - 1) for _ in range(nx)] for _ in range(ny)]
    return ReesMatrixSemigroup(cyclic_certified_group(g), nx, ny, np.array(sigma, dtype=np.int64))
