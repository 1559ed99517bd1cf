"""Brute-force reference computations.

Deliberately naive: plain Python lists, explicit loops, no shared code with
the package beyond reading ``.table``.
"""
from itertools import product as cartesian


def rows(table):
    return [list(map(int, r)) for r in table]


def associativity_failure(table):
    t = rows(table)
    n = len(t)
    for i, j, k in cartesian(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            return (i, j, k)
    return None


def ideal(table, a):
    """{x a y : x, y in S^1} with an explicitly adjoined identity."""
    t = rows(table)
    n = len(t)
    one = n

    def mul(x, y):
        if x == one:
            return y
        if y == one:
            return x
        return t[x][y]

    return sorted({mul(mul(x, a), y) for x in range(n + 1) for y in range(n + 1)})


def is_simple(table):
    n = len(table)
    return all(len(ideal(table, a)) == n for a in range(n))


def powers(table, a, count):
    t = rows(table)
    out = [a]
    while len(out) < count:
        out.append(t[out[-1]][a])
    return out


def iterative_power(table, a, k):
    return powers(table, a, k)[-1]


def idempotent_power(table, a):
    t = rows(table)
    for p in powers(table, a, len(t) + 1):
        if t[p][p] == p:
            return p
    raise AssertionError("finite semigroup element without idempotent power")


def idempotents(table):
    t = rows(table)
    return [e for e in range(len(t)) if t[e][e] == e]


def leq(table, e, f):
    t = rows(table)
    return t[e][f] == e and t[f][e] == e


def primitive_idempotents(table):
    E = idempotents(table)
    return [e for e in E if not any(f != e and leq(table, f, e) for f in E)]


def closure(gens):
    """All compositions of generators, by naive fixed point."""
    elems = {tuple(g) for g in gens}
    while True:
        new = {tuple(s[j] for j in t) for s in elems for t in elems} | elems
        if new == elems:
            return elems
        elems = new


def ese(table, e):
    t = rows(table)
    return sorted({t[t[e][s]][e] for s in range(len(t))})


def rees_product(group, sigma, t, u):
    """Direct formula on triples (x, h, y) with group given as a table."""
    g = rows(group)
    x, h, y = t
    x2, h2, y2 = u
    return (x, g[g[h][int(sigma[y][x2])]][h2], y2)
