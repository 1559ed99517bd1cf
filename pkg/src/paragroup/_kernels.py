"""Hot loops over Cayley tables.

Every kernel exists twice: an explicit-loop version compiled with numba's
``@njit`` and a vectorized pure-numpy version.  The loop versions are used
when numba imports cleanly and ``PARAGROUP_DISABLE_JIT`` is unset (or "0");
otherwise the numpy versions are bound to the public names.

All kernels take C-contiguous ``int64`` tables and return plain integers or
tuples of integers, with ``-1`` meaning "no failure found".
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _jit_requested() -> bool:
    flag = os.environ.get("PARAGROUP_DISABLE_JIT", "").strip().lower()
    return flag in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and _jit_requested()

NO_TRIPLE = (-1, -1, -1)
NO_PAIR = (-1, -1)


# --------------------------------------------------------------------------
# loop versions (numba)

@njit(cache=True)
def _associativity_failure_loops(table):
    n = table.shape[0]
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return i, j, k
    return -1, -1, -1


@njit(cache=True)
def _first_proper_ideal_loops(table):
    n = table.shape[0]
    mark = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        mark[:] = False
        count = 0
        mark[a] = True
        count += 1
        for s in range(n):
            r = table[a, s]
            if not mark[r]:
                mark[r] = True
                count += 1
            c = table[s, a]
            if not mark[c]:
                mark[c] = True
                count += 1
        if count < n:
            for s in range(n):
                sa = table[s, a]
                for u in range(n):
                    v = table[sa, u]
                    if not mark[v]:
                        mark[v] = True
                        count += 1
                if count == n:
                    break
        if count < n:
            return a
    return -1


@njit(cache=True)
def _homomorphism_failure_loops(src, dst, phi):
    n = src.shape[0]
    for i in range(n):
        pi = phi[i]
        for j in range(n):
            if phi[src[i, j]] != dst[pi, phi[j]]:
                return i, j
    return -1, -1


@njit(cache=True)
def _bmul_loops(a1, b1, a2, b2):
    m = min(b1, a2)
    return a1 + a2 - m, b1 + b2 - m


@njit(cache=True)
def _bicyclic_chain_loops(lower):
    # e_n = p^n q^n as (n, n); strict[t]: e_{n+1} e_n = e_n e_{n+1} = e_{n+1} != e_n
    m = lower.shape[0]
    strict = np.empty(m, dtype=np.bool_)
    for t in range(m):
        lo = lower[t]
        up = lo + 1
        a1, b1 = _bmul_loops(up, up, lo, lo)
        a2, b2 = _bmul_loops(lo, lo, up, up)
        strict[t] = a1 == up and b1 == up and a2 == up and b2 == up and up != lo
    return strict


# --------------------------------------------------------------------------
# numpy versions

def _associativity_failure_numpy(table):
    n = table.shape[0]
    for i in range(n):
        left = table[table[i]]        # [j, k] -> (i j) k
        right = table[i][table]       # [j, k] -> i (j k)
        bad = left != right
        if bad.any():
            j, k = divmod(int(np.argmax(bad)), n)
            return i, j, k
    return NO_TRIPLE


def _first_proper_ideal_numpy(table):
    n = table.shape[0]
    for a in range(n):
        mark = np.zeros(n, dtype=bool)
        mark[a] = True
        mark[table[a]] = True
        col = table[:, a]
        mark[col] = True
        mark[table[col].ravel()] = True
        if not mark.all():
            return a
    return -1


def _homomorphism_failure_numpy(src, dst, phi):
    bad = phi[src] != dst[np.ix_(phi, phi)]
    if bad.any():
        i, j = divmod(int(np.argmax(bad)), src.shape[0])
        return i, j
    return NO_PAIR


def _bmul_numpy(a1, b1, a2, b2):
    m = np.minimum(b1, a2)
    return a1 + a2 - m, b1 + b2 - m


def _bicyclic_chain_numpy(lower):
    upper = lower + 1
    a1, b1 = _bmul_numpy(upper, upper, lower, lower)
    a2, b2 = _bmul_numpy(lower, lower, upper, upper)
    return (a1 == upper) & (b1 == upper) & (a2 == upper) & (b2 == upper) & (upper != lower)


def _py(f):
    return getattr(f, "py_func", f)


class _Impl:
    def __init__(self, **kernels):
        self.__dict__.update(kernels)


numba_impl = _Impl(
    associativity_failure=_associativity_failure_loops,
    first_proper_ideal=_first_proper_ideal_loops,
    homomorphism_failure=_homomorphism_failure_loops,
    bicyclic_chain=_bicyclic_chain_loops,
)

numpy_impl = _Impl(
    associativity_failure=_associativity_failure_numpy,
    first_proper_ideal=_first_proper_ideal_numpy,
    homomorphism_failure=_homomorphism_failure_numpy,
    bicyclic_chain=_bicyclic_chain_numpy,
)

# uncompiled loop bodies, handy for debugging and for cross-checks
python_loops_impl = _Impl(
    associativity_failure=_py(_associativity_failure_loops),
    first_proper_ideal=_py(_first_proper_ideal_loops),
    homomorphism_failure=_py(_homomorphism_failure_loops),
    bicyclic_chain=_py(_bicyclic_chain_loops),
)

active = numba_impl if USE_NUMBA else numpy_impl


def as_table(table) -> np.ndarray:
    return np.ascontiguousarray(table, dtype=np.int64)


def associativity_failure(table) -> tuple[int, int, int]:
    """First (i, j, k) in lexicographic order with (ij)k != i(jk)."""
    i, j, k = active.associativity_failure(as_table(table))
    return int(i), int(j), int(k)


def first_proper_ideal(table) -> int:
    """Lowest a whose principal two-sided ideal is proper, else -1."""
    return int(active.first_proper_ideal(as_table(table)))


def homomorphism_failure(src, dst, phi) -> tuple[int, int]:
    i, j = active.homomorphism_failure(as_table(src), as_table(dst), as_table(phi))
    return int(i), int(j)


def bicyclic_chain(lower) -> np.ndarray:
    return np.asarray(active.bicyclic_chain(as_table(lower)), dtype=bool)
