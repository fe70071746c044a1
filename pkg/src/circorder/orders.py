"""Circular orderings on groups: representations, validation, conversion,
enumeration.

Three interconvertible encodings are used for a circular ordering on a finite
group:

* ``InhomCircularOrder`` -- a normalized 2-cocycle f: G x G -> {0,1} with
  f(g, g^-1) = 1 off the identity.  Think of f(g,h) = 1 as "right
  multiplication by h drags g counterclockwise past the identity".
* ``HomCircularOrder`` -- a left-invariant alternating function
  c: G^3 -> {0,+1,-1} vanishing exactly on degenerate triples, +1 on
  counterclockwise triples.
* ``Arrangement`` -- the elements listed counterclockwise around the circle,
  starting at the identity.  This is the canonical finite form: O(n) storage
  and trivially deduplicated.

Orderings on infinite carriers (see the promislow module) are exposed as
evaluation oracles on triples and never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import AxiomError, BoundExceeded, InvalidGroupError
from .groups import (FiniteGroup, GroupHom, cyclic_group, group_from_json,
                     group_to_json)

ENUMERATION_ORDER_LIMIT = 12


@dataclass(frozen=True)
class InhomCircularOrder:
    """Validated inhomogeneous form; construct via validate_inhom."""
    group: FiniteGroup
    values: tuple  # order x order over {0,1}

    def __call__(self, g: int, h: int) -> int:
        return self.values[g][h]


@dataclass(frozen=True)
class HomCircularOrder:
    """Validated homogeneous form; construct via validate_hom."""
    group: FiniteGroup
    values: tuple  # order x order x order over {-1,0,1}

    def __call__(self, g1: int, g2: int, g3: int) -> int:
        return self.values[g1][g2][g3]


@dataclass(frozen=True)
class Arrangement:
    """All elements in counterclockwise order, identity first."""
    group: FiniteGroup
    sequence: tuple

    def position(self, g: int) -> int:
        return self.sequence.index(g)


@dataclass(frozen=True)
class LeftOrderOracle:
    """A positive cone P on a (possibly infinite) group given by callables.

    Semantics: P * P is inside P and every element is exactly one of
    positive, inverse-positive, or the identity.
    """
    is_positive: Callable[[Any], bool]
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    identity: Any

    def less(self, x, y) -> bool:
        return self.is_positive(self.mul(self.inv(x), y))

    def circular_value(self, x, y, z) -> int:
        """The circular ordering induced by the left order (0 on repeats)."""
        if x == y or y == z or x == z:
            return 0
        parity = int(self.less(x, y)) + int(self.less(y, z)) + int(self.less(x, z))
        return 1 if parity % 2 == 1 else -1


def left_order_from_cone(G: FiniteGroup, positive: Iterable[int]) -> LeftOrderOracle:
    """Exhaustively checked cone on a finite carrier (only the trivial group,
    among finite groups, admits one)."""
    P = frozenset(positive)
    for g in range(G.order):
        flags = (g in P, G.inverse[g] in P, g == 0)
        if sum(flags) != 1:
            raise AxiomError("trichotomy", (g,))
    for a in P:
        for b in P:
            if G.table[a][b] not in P:
                raise AxiomError("closure", (a, b))
    return LeftOrderOracle(P.__contains__, G.mul, G.inv, 0)


# -- validation ------------------------------------------------------------

def validate_inhom(G: FiniteGroup, values) -> InhomCircularOrder:
    """Check the inhomogeneous axioms; raise AxiomError with a witness tuple.

    Distinct kinds: "shape", "value-range", "normalization", "inverse-pair",
    "cocycle".
    """
    n = G.order
    values = tuple(tuple(row) for row in values)
    if len(values) != n or any(len(row) != n for row in values):
        raise AxiomError("shape", (len(values),), f"want {n} x {n}")
    for g in range(n):
        for h in range(n):
            if values[g][h] not in (0, 1):
                raise AxiomError("value-range", (g, h), f"value {values[g][h]}")
    for g in range(n):
        if values[0][g] != 0 or values[g][0] != 0:
            raise AxiomError("normalization", (g,))
    for g in range(1, n):
        if values[g][G.inverse[g]] != 1:
            raise AxiomError("inverse-pair", (g,))
    table = G.table
    for g in range(n):
        for h in range(n):
            gh = table[g][h]
            for k in range(n):
                if values[h][k] - values[gh][k] + values[g][table[h][k]] - values[g][h] != 0:
                    raise AxiomError("cocycle", (g, h, k))
    return InhomCircularOrder(G, values)


def validate_hom(G: FiniteGroup, values) -> HomCircularOrder:
    """Check the homogeneous axioms; kinds "shape", "vanishing", "cocycle",
    "invariance"."""
    n = G.order
    values = tuple(tuple(tuple(plane) for plane in row) for row in values)
    if len(values) != n or any(len(r) != n for r in values) \
            or any(len(p) != n for r in values for p in r):
        raise AxiomError("shape", (len(values),), f"want {n} x {n} x {n}")
    for g1 in range(n):
        for g2 in range(n):
            for g3 in range(n):
                v = values[g1][g2][g3]
                degenerate = g1 == g2 or g2 == g3 or g1 == g3
                if degenerate and v != 0:
                    raise AxiomError("vanishing", (g1, g2, g3), f"value {v} on repeat")
                if not degenerate and v not in (1, -1):
                    raise AxiomError("vanishing", (g1, g2, g3), f"value {v} on distinct triple")
    for g1 in range(n):
        for g2 in range(n):
            for g3 in range(n):
                row = values[g1][g2]
                for g4 in range(n):
                    if values[g2][g3][g4] - values[g1][g3][g4] + row[g4] - row[g3] != 0:
                        raise AxiomError("cocycle", (g1, g2, g3, g4))
    table = G.table
    for h in range(1, n):
        th = table[h]
        for g1 in range(n):
            for g2 in range(n):
                for g3 in range(n):
                    if values[th[g1]][th[g2]][th[g3]] != values[g1][g2][g3]:
                        raise AxiomError("invariance", (h, g1, g2, g3))
    return HomCircularOrder(G, values)


# -- conversions (the mutually inverse maps between the two cocycle forms) --

def hom_to_inhom(c: HomCircularOrder) -> InhomCircularOrder:
    """f(g,h) = 0 if g or h is the identity, 1 if gh = id with g != id,
    else (1 - c(id, g, gh)) / 2."""
    G = c.group
    n = G.order
    values = [[0] * n for _ in range(n)]
    for g in range(n):
        for h in range(n):
            if g == 0 or h == 0:
                continue
            gh = G.table[g][h]
            if gh == 0:
                values[g][h] = 1
            else:
                values[g][h] = (1 - c.values[0][g][gh]) // 2
    return validate_inhom(G, values)


def inhom_to_hom(f: InhomCircularOrder) -> HomCircularOrder:
    """c(g1,g2,g3) = 1 - 2 f(g1^-1 g2, g2^-1 g3) on distinct triples, else 0."""
    G = f.group
    n = G.order
    values = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g1 in range(n):
        i1 = G.inverse[g1]
        for g2 in range(n):
            if g2 == g1:
                continue
            i2 = G.inverse[g2]
            a = G.table[i1][g2]
            for g3 in range(n):
                if g3 == g1 or g3 == g2:
                    continue
                values[g1][g2][g3] = 1 - 2 * f.values[a][G.table[i2][g3]]
    return validate_hom(G, values)


# -- arrangements ----------------------------------------------------------

def arrangement_from_sequence(G: FiniteGroup, sequence: Sequence[int],
                              validate: bool = True) -> Arrangement:
    seq = tuple(sequence)
    if sorted(seq) != list(range(G.order)):
        raise AxiomError("shape", seq, "not a permutation of the elements")
    if seq[0] != 0:
        raise AxiomError("normalization", seq, "arrangement must start at the identity")
    arr = Arrangement(G, seq)
    if validate and not _positions_form_hom(arr):
        raise AxiomError("invariance", seq, "induced triple function is not left-invariant")
    return arr


def _positions_form_hom(a: Arrangement) -> bool:
    # The circle order induced by positions is left-invariant exactly when
    # g -> position(g) is an isomorphism onto Z/n: pos(h*g) = pos(h) + pos(g).
    G = a.group
    n = G.order
    pos = [0] * n
    for p, g in enumerate(a.sequence):
        pos[g] = p
    return all(pos[G.table[h][g]] == (pos[h] + pos[g]) % n
               for h in range(n) for g in range(n))


def arrangement_to_hom(a: Arrangement) -> HomCircularOrder:
    """c = +1 exactly on triples whose positions run counterclockwise."""
    G = a.group
    n = G.order
    pos = [0] * n
    for p, g in enumerate(a.sequence):
        pos[g] = p
    values = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g1 in range(n):
        p1 = pos[g1]
        for g2 in range(n):
            if g2 == g1:
                continue
            d2 = (pos[g2] - p1) % n
            for g3 in range(n):
                if g3 == g1 or g3 == g2:
                    continue
                values[g1][g2][g3] = 1 if d2 < (pos[g3] - p1) % n else -1
    return validate_hom(G, values)


def hom_to_arrangement(c: HomCircularOrder) -> Arrangement:
    """Read off the counterclockwise order that c dictates after the identity."""
    G = c.group
    n = G.order
    rest = list(range(1, n))
    # x precedes y on the circle after the identity iff c(id, x, y) = +1
    ordered: list[int] = []
    for x in rest:
        lo = 0
        while lo < len(ordered) and c.values[0][ordered[lo]][x] == 1:
            lo += 1
        ordered.insert(lo, x)
    arr = Arrangement(G, (0, *ordered))
    if not _positions_form_hom(arr) or arrangement_to_hom(arr).values != c.values:
        raise AxiomError("invariance", (0, *ordered),
                         "triple function does not come from a left-invariant arrangement")
    return arr


def arrangement_to_inhom(a: Arrangement) -> InhomCircularOrder:
    return hom_to_inhom(arrangement_to_hom(a))


# -- enumeration -----------------------------------------------------------

def enumerate_circular_orders(G: FiniteGroup,
                              max_order: int = ENUMERATION_ORDER_LIMIT) -> list[Arrangement]:
    """All left-invariant arrangements of G, lexicographically by sequence.

    Strategy: anchor the identity, pick the element z following it; requiring
    invariance under z alone already forces the candidate permutation
    (id, z, z*z, ...), which is then verified in full.  Empty exactly when G
    admits no circular ordering.
    """
    if G.order > max_order:
        raise BoundExceeded(f"enumerate_circular_orders: order {G.order} > limit {max_order}")
    if G.order == 1:
        return [Arrangement(G, (0,))]
    found = []
    for z in range(1, G.order):
        seq = [0]
        x = z
        while x != 0 and len(seq) <= G.order:
            seq.append(x)
            x = G.table[z][x]
        if x != 0 or len(seq) != G.order:
            continue  # z does not generate: invariance under z is unsatisfiable
        arr = Arrangement(G, tuple(seq))
        if _positions_form_hom(arr):
            found.append(arr)
    found.sort(key=lambda a: a.sequence)
    return found


# -- standard and lexicographic constructions ------------------------------

def standard_order_zn(n: int) -> InhomCircularOrder:
    """The ordering of Z/n from the embedding into the circle: f is the carry
    bit of addition, f(a,b) = 1 iff a + b >= n on representatives 0 <= a < n."""
    if n < 1:
        raise InvalidGroupError(f"standard_order_zn: n = {n} < 1")
    G = cyclic_group(n)
    values = [[1 if a + b >= n else 0 for b in range(n)] for a in range(n)]
    return validate_inhom(G, values)


def lexicographic_circular_order(phi: Callable[[Any], Any],
                                 kernel_order: LeftOrderOracle,
                                 quotient_order: Callable[[Any, Any, Any], int],
                                 mul: Callable[[Any, Any], Any],
                                 inv: Callable[[Any], Any]) -> Callable[[Any, Any, Any], int]:
    """Circular-order oracle on an extension of a circularly-ordered quotient
    by a left-ordered kernel.

    Three cases on the images under phi: all distinct -> quotient order;
    exactly two equal -> kernel comparison of the equal pair; all equal ->
    kernel circular order of the differences.  Triples whose equal pair is
    not in the first two slots are rotated there first (cyclic rotations are
    even permutations, so the value is unchanged).
    """

    def value(g1, g2, g3) -> int:
        if g1 == g2 or g2 == g3 or g1 == g3:
            return 0
        p1, p2, p3 = phi(g1), phi(g2), phi(g3)
        if p1 != p2 and p2 != p3 and p1 != p3:
            return quotient_order(p1, p2, p3)
        if p1 == p2 == p3:
            d = inv(g1)
            return kernel_order.circular_value(
                mul(d, g3), kernel_order.identity, mul(d, g2))
        if p2 == p3:
            g1, g2, g3 = g2, g3, g1
        elif p1 == p3:
            g1, g2, g3 = g3, g1, g2
        # now phi(g1) == phi(g2) != phi(g3)
        return kernel_order.circular_value(
            mul(inv(g2), g1), kernel_order.identity, mul(inv(g1), g2))

    return value


def lexicographic_order_finite(phi: GroupHom,
                               kernel_order: LeftOrderOracle,
                               quotient_order: HomCircularOrder) -> HomCircularOrder:
    """Materialized lexicographic ordering for a finite total group."""
    G, H = phi.source, phi.target
    if not phi.is_surjective():
        raise InvalidGroupError("lexicographic order: phi is not onto the quotient carrier")
    if quotient_order.group != H:
        raise InvalidGroupError("lexicographic order: quotient ordering lives on the wrong group")
    oracle = lexicographic_circular_order(
        phi, kernel_order,
        lambda a, b, c: quotient_order.values[a][b][c],
        G.mul, G.inv)
    n = G.order
    values = [[[oracle(g1, g2, g3) for g3 in range(n)] for g2 in range(n)] for g1 in range(n)]
    return validate_hom(G, values)


# -- JSON interface --------------------------------------------------------

def ordering_to_json(obj) -> dict:
    if isinstance(obj, Arrangement):
        kind, data = "arrangement", list(obj.sequence)
    elif isinstance(obj, InhomCircularOrder):
        kind, data = "inhom", [list(r) for r in obj.values]
    elif isinstance(obj, HomCircularOrder):
        kind, data = "hom", [[list(p) for p in r] for r in obj.values]
    else:
        raise TypeError(f"not an ordering object: {type(obj).__name__}")
    return {"group": group_to_json(obj.group), "kind": kind, "data": data}


def ordering_from_json(data, resolve_group: Optional[Callable[[str], FiniteGroup]] = None):
    if not isinstance(data, dict) or "kind" not in data or "data" not in data:
        raise InvalidGroupError("ordering JSON: need fields 'group', 'kind', 'data'")
    gspec = data.get("group")
    if isinstance(gspec, str):
        if resolve_group is None:
            raise InvalidGroupError(f"ordering JSON: no resolver for group name {gspec!r}")
        G = resolve_group(gspec)
    else:
        G = group_from_json(gspec)
    kind = data["kind"]
    if kind == "arrangement":
        return arrangement_from_sequence(G, data["data"])
    if kind == "inhom":
        return validate_inhom(G, data["data"])
    if kind == "hom":
        return validate_hom(G, data["data"])
    raise InvalidGroupError(f"ordering JSON: unknown kind {kind!r}")
