"""Independent oracles and the shared library of test groups.

Everything here is deliberately written from scratch (brute force,
enumeration, minors) so that it can cross-check the production code without
sharing its machinery.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import gcd

from circorder.groups import (FiniteGroup, cyclic_group, dihedral_group,
                              direct_product, symmetric_group, trivial_group)


def library_groups() -> list[FiniteGroup]:
    groups = [trivial_group()]
    groups += [cyclic_group(k) for k in range(2, 13)]
    c2, c3, c4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    groups.append(direct_product(c2, c2).group)          # Klein
    groups.append(direct_product(c2, c4).group)
    groups.append(direct_product(c2, direct_product(c2, c2).group).group)
    groups.append(direct_product(c3, c3).group)
    groups.append(symmetric_group(3))
    groups.append(dihedral_group(4))
    return groups


def euler_phi(n: int) -> int:
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def primes_dividing(n: int) -> list[int]:
    out = []
    d = 2
    while d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    return out


# -- brute-force circular-order enumeration ----------------------------------

def _cyclic_value(pos, g1, g2, g3, n):
    if g1 == g2 or g2 == g3 or g1 == g3:
        return 0
    d2 = (pos[g2] - pos[g1]) % n
    d3 = (pos[g3] - pos[g1]) % n
    return 1 if d2 < d3 else -1


def brute_force_arrangements(G: FiniteGroup) -> list[tuple]:
    """All identity-anchored permutations whose induced triple function is
    left-invariant, checked directly on every (h, triple)."""
    n = G.order
    if n == 1:
        return [(0,)]
    out = []
    for tail in permutations(range(1, n)):
        seq = (0,) + tail
        pos = {g: p for p, g in enumerate(seq)}
        ok = True
        for h in range(n):
            for g1 in range(n):
                for g2 in range(n):
                    for g3 in range(n):
                        if _cyclic_value(pos, g1, g2, g3, n) != _cyclic_value(
                                pos, G.table[h][g1], G.table[h][g2], G.table[h][g3], n):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(seq)
    return out


def group_is_circularly_orderable_brute(G: FiniteGroup) -> bool:
    return bool(brute_force_arrangements(G))


# -- independent Smith-normal-form oracles ------------------------------------

def naive_diagonalize(M) -> list[int]:
    """Diagonal of *some* diagonalization by row/column reduction, without
    transforms and with a different reduction strategy (always reduces by the
    first nonzero entry found, no minimal-pivot rule)."""
    a = [list(row) for row in M]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # find any nonzero entry
        pivot = next(((i, j) for i in range(t, m) for j in range(t, n) if a[i][j]), None)
        if pivot is None:
            break
        i0, j0 = pivot
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            done = True
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if done:
                break
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag


def invariant_factors_from_diagonal(diag: list[int]) -> list[int]:
    """Normalize a diagonal multiset into the invariant-factor chain by
    prime-exponent sorting (gcd/lcm closure done arithmetically)."""
    nonzero = [d for d in diag if d]
    zeros = len(diag) - len(nonzero)
    primes = sorted({p for d in nonzero for p in primes_dividing(d)})
    factors = [1] * len(nonzero)
    for p in primes:
        exps = sorted(_p_exponent(d, p) for d in nonzero)
        for i, e in enumerate(exps):
            factors[i] *= p ** e
    return factors + [0] * zeros


def _p_exponent(d: int, p: int) -> int:
    e = 0
    while d % p == 0:
        d //= p
        e += 1
    return e


def minors_gcd_invariant_factors(M) -> list[int]:
    """Invariant factors via gcds of k x k minors (tiny matrices only)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    prev = 1
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = [[M[i][j] for j in csel] for i in rsel]
                g = gcd(g, _det(sub))
        if g == 0:
            out.extend([0] * (min(rows, cols) - len(out)))
            break
        out.append(g // prev)
        prev = g
    return out


def _det(a) -> int:
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * _det(minor)
    return total


def seeded_random_matrices(seed: int, count: int = 100, max_dim: int = 50) -> list:
    """Seeded random SNF inputs: dense full-range matrices up to 24x24, and
    rank-bounded (<= 12) products at the larger shapes up to max_dim.

    Keeping the dense cores small is deliberate: exact euclidean-style SNF
    with transforms (here and in every mainstream pure-Python implementation)
    suffers entry explosion once an effectively dense core of size ~30+
    appears, so unbounded dense 50x50 instances are not a regime any such
    engine can promise to verify quickly.
    """
    import random as _random
    rng = _random.Random(seed)
    out = []
    for _ in range(count):
        rows = rng.randrange(1, max_dim + 1)
        cols = rng.randrange(1, max_dim + 1)
        if max(rows, cols) <= 24:
            M = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        else:
            k = rng.randrange(1, 13)
            R = [[rng.randrange(-3, 4) for _ in range(k)] for _ in range(rows)]
            C = [[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(k)]
            M = [[sum(R[i][x] * C[x][j] for x in range(k)) for j in range(cols)]
                 for i in range(rows)]
        out.append(M)
    return out


# -- brute-force cohomology over Z/n ------------------------------------------

def brute_h2_order_modn(G: FiniteGroup, n: int, limit: int = 20000) -> int:
    """|H^2(G; Z/n)| counted by enumerating all normalized 2-cochains mod n.

    Only feasible for n^((|G|-1)^2) <= limit.
    """
    m = G.order
    pairs = [(g, h) for g in range(1, m) for h in range(1, m)]
    total = n ** len(pairs)
    if total > limit:
        raise ValueError(f"brute force infeasible: {total} cochains")

    def unrank(r):
        f = [[0] * m for _ in range(m)]
        for (g, h) in pairs:
            f[g][h] = r % n
            r //= n
        return f

    def is_cocycle(f):
        for g in range(m):
            for h in range(m):
                gh = G.table[g][h]
                for k in range(m):
                    if (f[h][k] - f[gh][k] + f[g][G.table[h][k]] - f[g][h]) % n:
                        return False
        return True

    cocycles = sum(1 for r in range(total) if is_cocycle(unrank(r)))
    coboundaries = set()
    for r in range(n ** (m - 1)):
        u = [0] * m
        rr = r
        for g in range(1, m):
            u[g] = rr % n
            rr //= n
        key = tuple((u[g] + u[h] - u[G.table[g][h]]) % n for (g, h) in pairs)
        coboundaries.add(key)
    assert cocycles % len(coboundaries) == 0
    return cocycles // len(coboundaries)
