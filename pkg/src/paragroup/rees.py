"""Rees matrix semigroups [X, H, Y]_σ and the Rees–Suschkewitsch decomposition.

Triples are enumerated x-major, then by group element, then y, so the
triple (x, h, y) has index ``(x * |H| + h) * |Y| + y``.  The sandwich is
stored as ``sigma[y][x]`` (rows indexed by Y).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .core import (DEFAULT_MAX_ORDER, Element, FiniteSemigroup,
                   idempotent_indices, validate_table, verify_isomorphism)
from .errors import (ComponentOutOfRange, InverseNotFound, SemigroupError,
                     SizeBudgetExceeded)
from .structure import (CertifiedGroup, MaximalSubgroup, maximal_subgroup,
                        primitive_idempotent_indices, require_completely_simple)


class ReesTriple(NamedTuple):
    x: int
    h: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.h},{self.y})"


@dataclass(frozen=True, eq=False)
class ReesMatrixSemigroup:
    group: CertifiedGroup
    x_size: int
    y_size: int
    sigma: np.ndarray

    def __post_init__(self):
        sigma = np.array(self.sigma, dtype=np.int64)
        if self.x_size < 1 or self.y_size < 1:
            raise ComponentOutOfRange("index sets X and Y must be non-empty")
        if sigma.shape != (self.y_size, self.x_size):
            raise ComponentOutOfRange(
                f"sigma must have shape ({self.y_size}, {self.x_size}), got {sigma.shape}")
        if sigma.size and (sigma.min() < 0 or sigma.max() >= self.group.order):
            raise ComponentOutOfRange(
                f"sigma entries must index the group [0, {self.group.order})")
        sigma.flags.writeable = False
        object.__setattr__(self, "sigma", sigma)

    @property
    def shape(self) -> tuple[int, int, int]:
        """(|X|, |H|, |Y|)"""
        return self.x_size, self.group.order, self.y_size

    @property
    def order(self) -> int:
        return self.x_size * self.group.order * self.y_size

    def triple_index(self, t: ReesTriple) -> int:
        self._check(t)
        return (t.x * self.group.order + t.h) * self.y_size + t.y

    def triple(self, index: int) -> ReesTriple:
        rest, y = divmod(int(index), self.y_size)
        x, h = divmod(rest, self.group.order)
        return ReesTriple(x, h, y)

    def triples(self) -> list[ReesTriple]:
        return [self.triple(i) for i in range(self.order)]

    def _check(self, t: ReesTriple) -> None:
        if not (0 <= t.x < self.x_size and 0 <= t.h < self.group.order
                and 0 <= t.y < self.y_size):
            raise ComponentOutOfRange(f"triple {tuple(t)} outside shape {self.shape}")


def rees_product(R: ReesMatrixSemigroup, t: ReesTriple, u: ReesTriple) -> ReesTriple:
    """(x, h, y)(x', h', y') = (x, h σ(y, x') h', y')."""
    R._check(t)
    R._check(u)
    G = R.group
    return ReesTriple(t.x, G.mul(G.mul(t.h, int(R.sigma[t.y, u.x])), u.h), u.y)


def rees_table(R: ReesMatrixSemigroup) -> np.ndarray:
    """Cayley table of R in triple enumeration order, without validation."""
    g = R.group.order
    ny = R.y_size
    idx = np.arange(R.order)
    rest, Y = np.divmod(idx, ny)
    X, H = np.divmod(rest, g)
    G = R.group.table.table
    glue = R.sigma[Y[:, None], X[None, :]]                 # σ(y_i, x_j)
    h = G[G[H[:, None], glue], H[None, :]]
    return (X[:, None] * g + h) * ny + Y[None, :]


def to_cayley(R: ReesMatrixSemigroup, max_order: int = DEFAULT_MAX_ORDER
              ) -> tuple[FiniteSemigroup, list[ReesTriple]]:
    """Verified Cayley table of R plus the triple labelling each index."""
    if R.order > max_order:
        raise SizeBudgetExceeded(R.order, max_order)
    labels = R.triples()
    S = FiniteSemigroup(rees_table(R), [str(t) for t in labels])
    return validate_table(S), labels


@dataclass(frozen=True, eq=False)
class ReesDecomposition:
    """S ≅ [X_e, H_e, Y_e]_σ at the idempotent e.

    ``x_e``/``y_e`` list source idempotents; ``sigma[y][x]`` is the carrier
    position of ``y_e[y] * x_e[x]`` in ``subgroup``.  ``forward[i]`` is the
    source element of triple index i; ``backward[s]`` the triple index of s
    (``-1`` when s has no preimage, only possible in corrupted values).
    """

    source: FiniteSemigroup
    e: Element
    x_e: tuple[int, ...]
    y_e: tuple[int, ...]
    subgroup: MaximalSubgroup
    sigma: np.ndarray
    forward: np.ndarray
    backward: np.ndarray

    @property
    def shape(self) -> tuple[int, int, int]:
        return len(self.x_e), self.subgroup.order, len(self.y_e)

    @property
    def paragroup(self) -> ReesMatrixSemigroup:
        return ReesMatrixSemigroup(self.subgroup.group, len(self.x_e),
                                   len(self.y_e), self.sigma)


def rees_map(D: ReesDecomposition, t: ReesTriple) -> Element:
    """R(x, h, y) = x h y in the source; components are positions in X_e, H_e, Y_e."""
    nx, nh, ny = D.shape
    if not (0 <= t.x < nx and 0 <= t.h < nh and 0 <= t.y < ny):
        raise ComponentOutOfRange(f"triple {tuple(t)} outside shape {D.shape}")
    T = D.source.table
    return Element(D.source, T[T[D.x_e[t.x], D.subgroup.carrier[t.h]], D.y_e[t.y]])


def _inverse_triple(source: FiniteSemigroup, e: int, x_pos: dict, y_pos: dict,
                    subgroup: MaximalSubgroup, s: int) -> ReesTriple:
    T = source.table
    m = int(T[T[e, s], e])
    try:
        h = subgroup.position(m)
    except ValueError:
        raise InverseNotFound(f"e s e = {m} is not in H_e (s = {s})") from None
    m_inv = subgroup.inverse[h]
    left = int(T[s, m_inv])
    right = int(T[m_inv, s])
    if left not in x_pos:
        raise InverseNotFound(f"s (ese)^-1 = {left} is not in X_e (s = {s})")
    if right not in y_pos:
        raise InverseNotFound(f"(ese)^-1 s = {right} is not in Y_e (s = {s})")
    return ReesTriple(x_pos[left], h, y_pos[right])


def rees_inverse_map(D: ReesDecomposition, s: Element) -> ReesTriple:
    """R⁻¹(s) = (s (ese)⁻¹, ese, (ese)⁻¹ s), as positions."""
    if s.owner is not D.source:
        raise SemigroupError("element does not belong to the decomposed semigroup")
    x_pos = {v: i for i, v in enumerate(D.x_e)}
    y_pos = {v: i for i, v in enumerate(D.y_e)}
    return _inverse_triple(D.source, D.e.index, x_pos, y_pos, D.subgroup, s.index)


@dataclass(frozen=True)
class DecompositionReport:
    bijective: bool
    homomorphic: bool
    size_consistent: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.homomorphic and self.size_consistent

    def as_dict(self) -> dict:
        return {"bijective": self.bijective, "homomorphic": self.homomorphic,
                "size_consistent": self.size_consistent, "passed": self.passed}


def verify_decomposition(D: ReesDecomposition) -> DecompositionReport:
    """Exhaustive check that ``forward`` is an isomorphism onto the source."""
    n = D.source.order
    nx, nh, ny = D.shape
    forward = np.asarray(D.forward, dtype=np.int64)
    backward = np.asarray(D.backward, dtype=np.int64)
    size_consistent = nx * nh * ny == n and forward.shape == (n,)

    in_range = forward.size > 0 and forward.min() >= 0 and forward.max() < n
    bijective = bool(
        size_consistent and backward.shape == (n,) and in_range
        and backward.min() >= 0 and backward.max() < n
        and np.array_equal(forward[backward], np.arange(n))
        and np.array_equal(backward[forward], np.arange(n)))

    homomorphic = False
    if forward.shape == (nx * nh * ny,) and in_range:
        P = rees_table(D.paragroup)
        homomorphic = _kernels.homomorphism_failure(P, D.source.table, forward)[0] < 0
    return DecompositionReport(bijective, bool(homomorphic), bool(size_consistent))


def decompose(S: FiniteSemigroup) -> ReesDecomposition:
    """Rees–Suschkewitsch decomposition at the lowest-index primitive idempotent.

    Raises NotCompletelySimple with a witness; every invariant of the result
    is certified before it is returned.
    """
    S.require_verified()
    require_completely_simple(S)
    T = S.table
    e = int(primitive_idempotent_indices(S)[0])
    E = idempotent_indices(S)
    x_e = tuple(int(v) for v in np.intersect1d(np.unique(T[:, e]), E))
    y_e = tuple(int(v) for v in np.intersect1d(np.unique(T[e]), E))
    H = maximal_subgroup(Element(S, e))

    sigma = np.empty((len(y_e), len(x_e)), dtype=np.int64)
    for j, y in enumerate(y_e):
        for i, x in enumerate(x_e):
            try:
                sigma[j, i] = H.position(T[y, x])
            except ValueError:
                raise SemigroupError(
                    f"sandwich entry y*x = {int(T[y, x])} is not in H_e") from None

    nh, ny = H.order, len(y_e)
    order = len(x_e) * nh * ny
    if order != S.order:
        raise SemigroupError(
            f"|X_e||H_e||Y_e| = {order} differs from the order {S.order}")
    carrier = np.array(H.carrier, dtype=np.int64)
    idx = np.arange(order)
    rest, Yp = np.divmod(idx, ny)
    Xp, Hp = np.divmod(rest, nh)
    forward = T[T[np.array(x_e)[Xp], carrier[Hp]], np.array(y_e)[Yp]]

    x_pos = {v: i for i, v in enumerate(x_e)}
    y_pos = {v: i for i, v in enumerate(y_e)}
    backward = np.empty(S.order, dtype=np.int64)
    for s in range(S.order):
        t = _inverse_triple(S, e, x_pos, y_pos, H, s)
        backward[s] = (t.x * nh + t.h) * ny + t.y

    forward.flags.writeable = False
    backward.flags.writeable = False
    sigma.flags.writeable = False
    D = ReesDecomposition(S, Element(S, e), x_e, y_e, H, sigma, forward, backward)
    report = verify_decomposition(D)
    if not report.passed:
        raise SemigroupError(f"decomposition failed certification: {report.as_dict()}")
    return D


@dataclass(frozen=True, eq=False)
class NormalizedSandwich:
    """R' with σ'(0, x) = σ'(y, 0) = 1 and the triple bijection ``witness`` R -> R'."""

    rees: ReesMatrixSemigroup
    witness: np.ndarray

    def verify(self, original: ReesMatrixSemigroup) -> bool:
        A = FiniteSemigroup(rees_table(original))
        B = FiniteSemigroup(rees_table(self.rees))
        return verify_isomorphism(A, B, self.witness)


def normalize_sandwich(R: ReesMatrixSemigroup) -> NormalizedSandwich:
    """Normalize σ at the basepoints x₀ = y₀ = 0.

    Uses (x, h, y) -> (x, a_x h b_y, y) with a_x = σ(0,0)⁻¹σ(0,x) and
    b_y = σ(y,0), which turns σ into σ'(y,x) = b_y⁻¹ σ(y,x) a_x⁻¹.
    """
    G = R.group
    s = R.sigma
    inv00 = G.inv(int(s[0, 0]))
    a = [G.mul(inv00, int(s[0, x])) for x in range(R.x_size)]
    b = [int(s[y, 0]) for y in range(R.y_size)]
    new_sigma = np.array(
        [[G.mul(G.mul(G.inv(b[y]), int(s[y, x])), G.inv(a[x]))
          for x in range(R.x_size)] for y in range(R.y_size)], dtype=np.int64)
    R2 = ReesMatrixSemigroup(G, R.x_size, R.y_size, new_sigma)
    witness = np.empty(R.order, dtype=np.int64)
    for i, t in enumerate(R.triples()):
        h = G.mul(G.mul(a[t.x], t.h), b[t.y])
        witness[i] = R2.triple_index(ReesTriple(t.x, h, t.y))
    witness.flags.writeable = False
    return NormalizedSandwich(R2, witness)
