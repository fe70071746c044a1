"""Finite groups as exact multiplication tables, identity at index 0.

Every finite computation in the package runs over these tables.  Constructors
re-index so that the identity is always element 0; all values are immutable
tuples and safe to share.
"""

from __future__ import annotations

import json
from itertools import permutations
from math import lcm
from typing import Iterable, NamedTuple, Optional

from .errors import BoundExceeded, InvalidGroupError

# Full associativity validation is O(order^3); above this cutoff it is only
# run when explicitly requested (construction sites must guarantee it by
# other means, e.g. a verified cocycle law).
ASSOCIATIVITY_CHECK_LIMIT = 128

# Guard against accidental materialization of huge product tables.
MAX_TABLE_ORDER = 4096

ISOMORPHISM_ORDER_LIMIT = 24


class FiniteGroup:
    """A finite group given by its multiplication table on {0..order-1}.

    table[g][h] is the index of g*h, index 0 is the identity, and `inverse`
    is derived at construction.
    """

    __slots__ = ("name", "order", "table", "names", "inverse")

    def __init__(self, table, names=None, name: str = "G", validate: bool = True):
        table = tuple(tuple(row) for row in table)
        order = len(table)
        if order == 0:
            raise InvalidGroupError("table: empty table (a group has at least the identity)")
        for g, row in enumerate(table):
            if len(row) != order:
                raise InvalidGroupError(f"table[{g}]: row length {len(row)} != order {order}")
            for h, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < order:
                    raise InvalidGroupError(f"table[{g}][{h}] = {v!r} out of range 0..{order - 1}")
        self.order = order
        self.table = table
        if names is None:
            names = tuple(str(i) for i in range(order))
        else:
            names = tuple(str(s) for s in names)
            if len(names) != order:
                raise InvalidGroupError(f"names: {len(names)} names for order {order}")
        self.names = names
        self.name = name
        self.inverse = self._derive_inverse()
        if validate:
            self.validate(
                check_associativity=order <= ASSOCIATIVITY_CHECK_LIMIT)

    def _derive_inverse(self) -> tuple:
        inverse = []
        for g in range(self.order):
            hs = [h for h in range(self.order) if self.table[g][h] == 0]
            if len(hs) != 1:
                raise InvalidGroupError(
                    f"table[{g}]: element has {len(hs)} right inverses (want exactly 1)")
            inverse.append(hs[0])
        return tuple(inverse)

    def validate(self, check_associativity: bool = True) -> None:
        """Check all group axioms; raise InvalidGroupError naming the bad cell."""
        n, table = self.order, self.table
        for g in range(n):
            if table[0][g] != g:
                raise InvalidGroupError(f"table[0][{g}] = {table[0][g]}: index 0 is not a left identity")
            if table[g][0] != g:
                raise InvalidGroupError(f"table[{g}][0] = {table[g][0]}: index 0 is not a right identity")
        full = frozenset(range(n))
        for g in range(n):
            if frozenset(table[g]) != full:
                raise InvalidGroupError(f"table[{g}]: row is not a permutation of 0..{n - 1}")
        for h in range(n):
            if frozenset(table[g][h] for g in range(n)) != full:
                raise InvalidGroupError(f"table[.][{h}]: column is not a permutation of 0..{n - 1}")
        for g in range(n):
            if table[g][self.inverse[g]] != 0 or table[self.inverse[g]][g] != 0:
                raise InvalidGroupError(f"inverse[{g}] = {self.inverse[g]} is not two-sided")
        if check_associativity:
            for g in range(n):
                rowg = table[g]
                for h in range(n):
                    gh = rowg[h]
                    rowh = table[h]
                    rowgh = table[gh]
                    for k in range(n):
                        if rowgh[k] != rowg[rowh[k]]:
                            raise InvalidGroupError(
                                f"associativity fails at ({g},{h},{k}): "
                                f"({g}*{h})*{k} = {rowgh[k]} but {g}*({h}*{k}) = {rowg[rowh[k]]}")

    # -- element arithmetic ------------------------------------------------

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        acc = 0
        for _ in range(k):
            acc = self.table[acc][g]
        return acc

    def conjugate(self, g: int, by: int) -> int:
        """Return by * g * by^-1."""
        return self.table[self.table[by][g]][self.inverse[by]]

    def element_order(self, g: int) -> int:
        t, x = 1, g
        while x != 0:
            x = self.table[x][g]
            t += 1
        return t

    def exponent(self) -> int:
        return lcm(*(self.element_order(g) for g in range(self.order)))

    def is_abelian(self) -> bool:
        return all(self.table[g][h] == self.table[h][g]
                   for g in range(self.order) for h in range(g))

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in range(self.order))

    def is_central(self, g: int) -> bool:
        return all(self.table[g][h] == self.table[h][g] for h in range(self.order))

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)


class GroupHom:
    """A homomorphism between table groups, stored as an image array."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, map, validate: bool = True):
        self.source = source
        self.target = target
        self.map = tuple(map)
        if len(self.map) != source.order:
            raise InvalidGroupError(f"hom map has length {len(self.map)} != |source| {source.order}")
        for g, v in enumerate(self.map):
            if not 0 <= v < target.order:
                raise InvalidGroupError(f"hom map[{g}] = {v} out of target range")
        if validate:
            if self.map[0] != 0:
                raise InvalidGroupError("hom map[0] != 0: identity not preserved")
            for g in range(source.order):
                for h in range(source.order):
                    if self.map[source.table[g][h]] != target.table[self.map[g]][self.map[h]]:
                        raise InvalidGroupError(
                            f"hom fails at ({g},{h}): map[g*h] != map[g]*map[h]")

    def __call__(self, g: int) -> int:
        return self.map[g]

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()

    def __repr__(self):
        return f"GroupHom({self.source.name} -> {self.target.name})"


class DirectProductResult(NamedTuple):
    group: FiniteGroup
    proj_left: GroupHom
    proj_right: GroupHom
    incl_left: GroupHom
    incl_right: GroupHom


class QuotientResult(NamedTuple):
    group: FiniteGroup
    projection: GroupHom


class SubgroupResult(NamedTuple):
    group: FiniteGroup
    embedding: GroupHom


# -- constructors ----------------------------------------------------------

def cyclic_group(k: int) -> FiniteGroup:
    """Z/kZ with element i at index i (additive)."""
    if k < 1:
        raise InvalidGroupError(f"cyclic_group: order {k} < 1")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    return FiniteGroup(table, name=f"Z/{k}")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> DirectProductResult:
    """G x H with (g,h) at index g*|H| + h, plus projections and inclusions."""
    n, m = G.order, H.order
    if n * m > MAX_TABLE_ORDER:
        raise BoundExceeded(f"direct_product: order {n}*{m} exceeds table limit {MAX_TABLE_ORDER}")
    table = [[0] * (n * m) for _ in range(n * m)]
    for g1 in range(n):
        for h1 in range(m):
            i = g1 * m + h1
            row = table[i]
            for g2 in range(n):
                grow = G.table[g1][g2]
                for h2 in range(m):
                    row[g2 * m + h2] = grow * m + H.table[h1][h2]
    names = [f"({G.names[g]},{H.names[h]})" for g in range(n) for h in range(m)]
    P = FiniteGroup(table, names=names, name=f"{G.name}x{H.name}",
                    validate=n * m <= ASSOCIATIVITY_CHECK_LIMIT)
    proj_left = GroupHom(P, G, [i // m for i in range(n * m)])
    proj_right = GroupHom(P, H, [i % m for i in range(n * m)])
    incl_left = GroupHom(G, P, [g * m for g in range(n)])
    incl_right = GroupHom(H, P, list(range(m)))
    return DirectProductResult(P, proj_left, proj_right, incl_left, incl_right)


def closure(G: FiniteGroup, gens: Iterable[int]) -> frozenset:
    """Smallest subgroup of G containing gens."""
    step = sorted({*gens, *(G.inverse[g] for g in gens)})
    elems = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in step:
                y = G.table[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def is_subgroup(G: FiniteGroup, subset: Iterable[int]) -> bool:
    s = frozenset(subset)
    if 0 not in s:
        return False
    return all(G.table[a][b] in s for a in s for b in s) and all(G.inverse[a] in s for a in s)


def is_normal(G: FiniteGroup, subset: Iterable[int]) -> bool:
    s = frozenset(subset)
    return all(G.conjugate(a, g) in s for a in s for g in range(G.order))


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> SubgroupResult:
    """Closure of gens as its own FiniteGroup plus the embedding into G."""
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise InvalidGroupError(f"generator {g} out of range for {G.name}")
    elems = sorted(closure(G, gens))
    index = {g: i for i, g in enumerate(elems)}
    table = [[index[G.table[a][b]] for b in elems] for a in elems]
    S = FiniteGroup(table, names=[G.names[g] for g in elems],
                    name=f"<{','.join(G.names[g] for g in gens)}> in {G.name}" if gens else "trivial")
    return SubgroupResult(S, GroupHom(S, G, elems))


def quotient(G: FiniteGroup, normal_subset: Iterable[int]) -> QuotientResult:
    """G/N with minimal-index coset representatives; identity coset first.

    Raises InvalidGroupError distinctly for "not a subgroup" and "not normal".
    """
    N = frozenset(normal_subset)
    for a in N:
        if not 0 <= a < G.order:
            raise InvalidGroupError(f"quotient: element {a} out of range for {G.name}")
    if 0 not in N:
        raise InvalidGroupError("quotient: not a subgroup (identity 0 missing)")
    for a in N:
        if G.inverse[a] not in N:
            raise InvalidGroupError(f"quotient: not a subgroup (inverse of {a} missing)")
        for b in N:
            if G.table[a][b] not in N:
                raise InvalidGroupError(f"quotient: not a subgroup ({a}*{b} escapes)")
    for a in N:
        for g in range(G.order):
            if G.conjugate(a, g) not in N:
                raise InvalidGroupError(f"quotient: not normal ({g}*{a}*{g}^-1 escapes)")
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] == -1:
            idx = len(reps)
            reps.append(g)  # first unseen element is the minimal one in its coset
            for a in N:
                coset_of[G.table[g][a]] = idx
    table = [[coset_of[G.table[reps[i]][reps[j]]] for j in range(len(reps))]
             for i in range(len(reps))]
    Q = FiniteGroup(table, names=[f"[{G.names[r]}]" for r in reps], name=f"{G.name}/N")
    return QuotientResult(Q, GroupHom(G, Q, coset_of))


def symmetric_group(k: int) -> FiniteGroup:
    """S_k via composition of permutation tuples, identity first (k <= 4)."""
    if not 1 <= k <= 4:
        raise BoundExceeded(f"symmetric_group: k = {k} outside 1..4")
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # p*q acts as "apply q first, then p"
    table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    names = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, names=names, name=f"S{k}")


def dihedral_group(k: int) -> FiniteGroup:
    """Dihedral group of order 2k: elements r^i s^j, with s r = r^-1 s."""
    if k < 1:
        raise InvalidGroupError(f"dihedral_group: k = {k} < 1")
    n = 2 * k

    def mul(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        # (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
        i = (i1 + (i2 if j1 == 0 else -i2)) % k
        return (i, (j1 + j2) % 2)

    elems = [(i, j) for j in range(2) for i in range(k)]
    index = {e: x for x, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]

    def elem_name(i, j):
        rot = f"r{i}" if i else ""
        ref = "s" if j else ""
        return (rot + ref) or "e"

    names = [elem_name(i, j) for (i, j) in elems]
    return FiniteGroup(table, names=names, name=f"D{k}")


def all_subgroups(G: FiniteGroup) -> list[frozenset]:
    """Every subgroup of G, found by closing generator sets breadth-first."""
    trivial = frozenset({0})
    found = {trivial}
    queue = [trivial]
    while queue:
        S = queue.pop()
        for g in range(G.order):
            if g not in S:
                T = closure(G, set(S) | {g})
                if T not in found:
                    found.add(T)
                    queue.append(T)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# -- isomorphism search ----------------------------------------------------

def _generating_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = frozenset({0})
    while len(have) < G.order:
        g = min(set(range(G.order)) - have)
        gens.append(g)
        have = closure(G, gens)
    return gens


def find_isomorphism(G: FiniteGroup, H: FiniteGroup,
                     max_order: int = ISOMORPHISM_ORDER_LIMIT) -> Optional[GroupHom]:
    """First isomorphism G -> H in lexicographic generator-image order, or None.

    Plain backtracking on generator images, pruned by element order.
    """
    if G.order > max_order or H.order > max_order:
        raise BoundExceeded(f"find_isomorphism: order exceeds limit {max_order}")
    if G.order != H.order:
        return None
    if sorted(G.element_order(g) for g in range(G.order)) != \
       sorted(H.element_order(h) for h in range(H.order)):
        return None
    gens = _generating_sequence(G)

    def grow(pmap: dict, g: int, h: int) -> Optional[dict]:
        # extend pmap (a partial hom on a subgroup) by g -> h; None on conflict
        pmap = dict(pmap)
        if g in pmap:
            return pmap if pmap[g] == h else None
        pmap[g] = h
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for a in list(pmap):
                    for p, q in ((G.table[x][a], H.table[pmap[x]][pmap[a]]),
                                 (G.table[a][x], H.table[pmap[a]][pmap[x]])):
                        if p in pmap:
                            if pmap[p] != q:
                                return None
                        else:
                            pmap[p] = q
                            nxt.append(p)
            frontier = nxt
        return pmap

    def backtrack(pos: int, pmap: dict) -> Optional[dict]:
        if pos == len(gens):
            if len(set(pmap.values())) != G.order or len(pmap) != G.order:
                return None
            return pmap
        g = gens[pos]
        if g in pmap:
            return backtrack(pos + 1, pmap)
        want = G.element_order(g)
        for h in range(H.order):
            if h in pmap.values() or H.element_order(h) != want:
                continue
            grown = grow(pmap, g, h)
            if grown is None:
                continue
            if len(set(grown.values())) != len(grown):
                continue
            result = backtrack(pos + 1, grown)
            if result is not None:
                return result
        return None

    full = backtrack(0, {0: 0})
    if full is None:
        return None
    return GroupHom(G, H, [full[g] for g in range(G.order)])


# -- JSON interface --------------------------------------------------------

def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, "order": G.order,
            "table": [list(row) for row in G.table], "names": list(G.names)}


def group_from_json(data) -> FiniteGroup:
    """Build a validated group from the JSON dict format; diagnostics name the field."""
    if not isinstance(data, dict):
        raise InvalidGroupError(f"group JSON: expected object, got {type(data).__name__}")
    if "table" not in data:
        raise InvalidGroupError("group JSON: missing required field 'table'")
    table = data["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise InvalidGroupError("group JSON: field 'table' must be a list of rows")
    if "order" in data and data["order"] != len(table):
        raise InvalidGroupError(
            f"group JSON: field 'order' = {data['order']} but table has {len(table)} rows")
    names = data.get("names")
    if names is not None and (not isinstance(names, list)
                              or not all(isinstance(s, str) for s in names)):
        raise InvalidGroupError("group JSON: field 'names' must be a list of strings")
    name = data.get("name", "G")
    if not isinstance(name, str):
        raise InvalidGroupError("group JSON: field 'name' must be a string")
    return FiniteGroup(table, names=names, name=name, validate=True)


def load_group(path) -> FiniteGroup:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidGroupError(f"group JSON: {path}: {exc}") from exc
    return group_from_json(data)


def dump_group(G: FiniteGroup, path) -> None:
    with open(path, "w") as fh:
        json.dump(group_to_json(G), fh, indent=1)
        fh.write("\n")
