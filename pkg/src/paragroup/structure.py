"""Ideals, simplicity, the idempotent order, and maximal subgroups eSe."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import Element, FiniteSemigroup, idempotent_indices, validate_table
from .errors import NotAGroup, NotCompletelySimple, NotIdempotent, OwnerMismatch


def _ideal_mask(table: np.ndarray, a: int) -> np.ndarray:
    n = table.shape[0]
    mark = np.zeros(n, dtype=bool)
    mark[a] = True
    mark[table[a]] = True
    col = table[:, a]
    mark[col] = True
    mark[table[col].ravel()] = True
    return mark


def principal_ideal(a: Element) -> list[Element]:
    """{a} ∪ aS ∪ Sa ∪ SaS, ascending."""
    S = a.owner
    S.require_verified()
    return [Element(S, i) for i in np.flatnonzero(_ideal_mask(S.table, a.index))]


def proper_ideal_witness(S: FiniteSemigroup) -> int | None:
    """Lowest element whose principal ideal is proper, or None if S is simple."""
    S.require_verified()
    a = _kernels.first_proper_ideal(S.table)
    return None if a < 0 else a


def is_simple(S: FiniteSemigroup) -> bool:
    return proper_ideal_witness(S) is None


def _require_idempotent(e: Element) -> None:
    if int(e.owner.table[e.index, e.index]) != e.index:
        raise NotIdempotent(e.index)


def idempotent_leq(e: Element, f: Element) -> bool:
    """Natural order on idempotents: e <= f iff ef = fe = e."""
    if e.owner is not f.owner:
        raise OwnerMismatch()
    e.owner.require_verified()
    _require_idempotent(e)
    _require_idempotent(f)
    t = e.owner.table
    return int(t[e.index, f.index]) == e.index and int(t[f.index, e.index]) == e.index


def primitive_idempotent_indices(S: FiniteSemigroup) -> np.ndarray:
    E = idempotent_indices(S)
    t = S.table
    fe = t[np.ix_(E, E)]           # fe[f, e] = f*e
    below = (fe == E[:, None]) & (fe.T == E[:, None])   # below[f, e]: f <= e
    np.fill_diagonal(below, False)
    return E[~below.any(axis=0)]


def primitive_idempotents(S: FiniteSemigroup) -> list[Element]:
    return [Element(S, i) for i in primitive_idempotent_indices(S)]


def is_completely_simple(S: FiniteSemigroup) -> bool:
    return is_simple(S) and len(primitive_idempotent_indices(S)) > 0


def require_completely_simple(S: FiniteSemigroup) -> None:
    """Raise NotCompletelySimple carrying a witness unless S is completely simple."""
    a = proper_ideal_witness(S)
    if a is not None:
        ideal = tuple(int(i) for i in np.flatnonzero(_ideal_mask(S.table, a)))
        raise NotCompletelySimple(proper_ideal_element=a, ideal=ideal)
    if len(primitive_idempotent_indices(S)) == 0:
        raise NotCompletelySimple(no_primitive_idempotent=True)


@dataclass(frozen=True, eq=False)
class CertifiedGroup:
    """A verified Cayley table known to be a group.

    ``identity`` is the index of the unit and ``inverse[h]`` the index of h⁻¹.
    """

    table: FiniteSemigroup
    identity: int
    inverse: np.ndarray

    @property
    def order(self) -> int:
        return self.table.order

    def mul(self, g: int, h: int) -> int:
        return int(self.table.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])


def certify_group(S: FiniteSemigroup) -> CertifiedGroup:
    """Validate S and check it has exactly one idempotent and two-sided inverses."""
    S = validate_table(S)
    E = idempotent_indices(S)
    if len(E) != 1:
        raise NotAGroup(int(E[1]) if len(E) > 1 else 0,
                        f"is one of {len(E)} idempotents (a group has exactly one)")
    e = int(E[0])
    t = S.table
    n = S.order
    ar = np.arange(n)
    if not (np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)):
        bad = int(np.argmax((t[e] != ar) | (t[:, e] != ar)))
        raise NotAGroup(bad, "is not fixed by the idempotent")
    two_sided = (t == e) & (t.T == e)
    has_inv = two_sided.any(axis=1)
    if not has_inv.all():
        raise NotAGroup(int(np.argmin(has_inv)))
    inverse = np.argmax(two_sided, axis=1).astype(np.int64)
    inverse.flags.writeable = False
    return CertifiedGroup(S, e, inverse)


@dataclass(frozen=True, eq=False)
class MaximalSubgroup:
    """The group H_e = eSe of a completely simple semigroup.

    ``carrier`` holds parent indices in ascending order; ``inverse[i]`` is the
    parent index of the inverse of ``carrier[i]``; ``local_table`` is the
    group's Cayley table re-indexed by carrier position.
    """

    parent: FiniteSemigroup
    identity: Element
    carrier: tuple[int, ...]
    inverse: tuple[int, ...]
    local_table: FiniteSemigroup

    @property
    def order(self) -> int:
        return len(self.carrier)

    def position(self, parent_index: int) -> int:
        """Carrier position of a parent element; ValueError if it is not in H_e."""
        return self.carrier.index(int(parent_index))

    def inverse_of(self, parent_index: int) -> int:
        return self.inverse[self.position(parent_index)]

    @property
    def group(self) -> CertifiedGroup:
        pos = {c: i for i, c in enumerate(self.carrier)}
        inverse = np.array([pos[v] for v in self.inverse], dtype=np.int64)
        return CertifiedGroup(self.local_table, pos[self.identity.index], inverse)


def maximal_subgroup(e: Element) -> MaximalSubgroup:
    """eSe at an idempotent e, with every group axiom certified."""
    S = e.owner
    S.require_verified()
    _require_idempotent(e)
    t = S.table
    x = e.index
    carrier = np.unique(t[t[x], x])
    pos = {int(c): i for i, c in enumerate(carrier)}

    sub = t[np.ix_(carrier, carrier)]
    closed = np.isin(sub, carrier)
    if not closed.all():
        r, _ = divmod(int(np.argmin(closed)), len(carrier))
        raise NotAGroup(int(carrier[r]), "has a product leaving eSe")
    for h in carrier:
        if t[x, h] != h or t[h, x] != h:
            raise NotAGroup(int(h), "is not fixed by e")

    inverse = []
    for h in carrier:
        for g in carrier:
            if t[h, g] == x and t[g, h] == x:
                inverse.append(int(g))
                break
        else:
            raise NotAGroup(int(h))

    local = FiniteSemigroup(np.vectorize(pos.__getitem__, otypes=[np.int64])(sub))
    local = validate_table(local)
    if len(idempotent_indices(local)) != 1:
        raise NotAGroup(x, "eSe has more than one idempotent")
    return MaximalSubgroup(S, e, tuple(int(c) for c in carrier), tuple(inverse), local)


def maximal_subgroup_order(e: Element) -> int:
    """Order of the group of units of the monoid eSe (the H-class of e).

    Agrees with ``maximal_subgroup(e).order`` on completely simple semigroups
    and is defined for every idempotent of every finite semigroup.
    """
    S = e.owner
    S.require_verified()
    _require_idempotent(e)
    t = S.table
    x = e.index
    carrier = np.unique(t[t[x], x])
    sub = t[np.ix_(carrier, carrier)]
    units = ((sub == x) & (sub.T == x)).any(axis=1)
    return int(units.sum())
