"""The Promislow group as exact integer affine isometries.

The group <a, b | a b^2 a^-1 b^2, b a^2 b^-1 a^2> (the Hantzsche-Wendt
Bieberbach group) is realized with point-group parts among the diagonal sign
matrices I, A = diag(1,-1,-1), B = diag(-1,1,-1), AB = diag(-1,-1,1) and
*doubled* integer translations, so that a = (A, (1,1,0)) and b = (B, (0,1,1))
stand for translations by (1/2, 1/2, 0) and (0, 1/2, 1/2).  Doubling keeps
every computation in Z; the lattice condition becomes the parity constraint
w mod 2 = coset(M) with cosets I -> (0,0,0), A -> (1,1,0), B -> (0,1,1),
AB -> (1,0,1).

It is circularly orderable but not left-orderable: the homomorphism to Z/2
killing b has left-orderable kernel (translations along y survive), and the
lexicographic construction glues a left order on that kernel to the unique
circular ordering of Z/2.  This module provides that circular ordering as an
evaluation oracle, plus word evaluation, balls, the abelianization onto
Z/4 x Z/4, and a seeded self-check suite.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .errors import BoundExceeded, InvalidGroupError
from .obstruction import ObstructionSpectrum
from .orders import LeftOrderOracle, lexicographic_circular_order

BALL_RADIUS_LIMIT = 8
DEFAULT_SEED = 1729

M_NAMES = ("I", "A", "B", "AB")
# diagonal signs of the point-group matrices, indexed I, A, B, AB
SIGNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
# required parity of the (doubled) translation for each point-group part
PARITY = ((0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1))


class PromElement(NamedTuple):
    m: int        # point-group index into M_NAMES
    w: tuple      # doubled translation (x, y, z)


IDENTITY = PromElement(0, (0, 0, 0))
GEN_A = PromElement(1, (1, 1, 0))
GEN_B = PromElement(2, (0, 1, 1))


def make_element(m: int, w) -> PromElement:
    """Validated constructor; rejects parity-violating (corrupt) data."""
    w = tuple(w)
    if m not in (0, 1, 2, 3) or len(w) != 3 or not all(isinstance(v, int) for v in w):
        raise InvalidGroupError(f"bad element data ({m!r}, {w!r})")
    if tuple(v % 2 for v in w) != PARITY[m]:
        raise InvalidGroupError(
            f"parity violation: w = {w} is not congruent to {PARITY[m]} mod 2 for {M_NAMES[m]}")
    return PromElement(m, w)


def prom_mul(p: PromElement, q: PromElement) -> PromElement:
    sx, sy, sz = SIGNS[p.m]
    px, py, pz = p.w
    qx, qy, qz = q.w
    return PromElement(p.m ^ q.m, (px + sx * qx, py + sy * qy, pz + sz * qz))


def prom_inv(p: PromElement) -> PromElement:
    sx, sy, sz = SIGNS[p.m]
    x, y, z = p.w
    return PromElement(p.m, (-sx * x, -sy * y, -sz * z))


_LETTERS = {"a": GEN_A, "A": prom_inv(GEN_A), "b": GEN_B, "B": prom_inv(GEN_B)}


def evaluate_word(word: str) -> PromElement:
    """Product of generator letters; capitals are inverses ("aBa" = a b^-1 a)."""
    acc = IDENTITY
    for ch in word:
        if ch not in _LETTERS:
            raise InvalidGroupError(f"bad generator letter {ch!r} (use a, A, b, B)")
        acc = prom_mul(acc, _LETTERS[ch])
    return acc


def phi(p: PromElement) -> int:
    """The quotient map to Z/2 with phi(a) = 1, phi(b) = 0."""
    return p.m & 1


def kernel_is_positive(p: PromElement) -> bool:
    """Positive cone on ker(phi): positive y-translation first, then the
    lexicographic order on (x, z) within the pure translations.

    Well-defined because both I and B fix the y-axis, so y is additive on the
    kernel, and its vanishing forces a pure translation.
    """
    if phi(p) != 0:
        raise InvalidGroupError(f"element {p} is outside the kernel of phi")
    x, y, z = p.w
    if y:
        return y > 0
    return x > 0 or (x == 0 and z > 0)


KERNEL_ORDER = LeftOrderOracle(kernel_is_positive, prom_mul, prom_inv, IDENTITY)


def _z2_order(a, b, c):  # pragma: no cover
    # Z/2 has no triples of distinct elements, so the lexicographic
    # construction never consults the quotient ordering here.
    raise RuntimeError("unreachable: distinct triple in Z/2")


promislow_circular_order = lexicographic_circular_order(
    phi, KERNEL_ORDER, _z2_order, prom_mul, prom_inv)
"""Circular-ordering oracle on the whole group; values in {0, +1, -1}."""


# Known obstruction spectrum of the group: exactly the multiples of 4.
# The product with Z/2 is still circularly orderable; the product with Z/4
# is not.  Shipped as data.
PROMISLOW_SPECTRUM = ObstructionSpectrum.from_elements([4])


def ball(radius: int, max_radius: int = BALL_RADIUS_LIMIT) -> list[PromElement]:
    """All elements expressible as words of length <= radius, sorted by
    (point-group index, translation) for deterministic output."""
    if radius < 0 or radius > max_radius:
        raise BoundExceeded(f"ball: radius {radius} outside 0..{max_radius}")
    seen = {IDENTITY}
    frontier = [IDENTITY]
    steps = [GEN_A, prom_inv(GEN_A), GEN_B, prom_inv(GEN_B)]
    for _ in range(radius):
        nxt = []
        for p in frontier:
            for s in steps:
                q = prom_mul(p, s)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def abelianization_image(p: PromElement) -> tuple[int, int]:
    """(a-exponent, b-exponent) mod 4 in the abelianization Z/4 x Z/4.

    Strips one a and one b according to the point-group part, then reads the
    remaining pure translation (2p, 2q, 2r) as (a^2)^p (b^2)^q ((ab)^2)^-r.
    """
    a_exp = b_exp = 0
    if p.m & 1:
        p = prom_mul(_LETTERS["A"], p)
        a_exp = 1
    if p.m == 2:
        p = prom_mul(_LETTERS["B"], p)
        b_exp = 1
    if p.m != 0:
        raise AssertionError(f"stripping failed on {p}")
    x, y, z = p.w
    return ((a_exp + x - z) % 4, (b_exp + y - z) % 4)


def element_to_json(p: PromElement) -> dict:
    return {"M": M_NAMES[p.m], "w": list(p.w)}


def element_from_json(data) -> PromElement:
    if not isinstance(data, dict) or "M" not in data or "w" not in data:
        raise InvalidGroupError("element JSON: need fields 'M' and 'w'")
    if data["M"] not in M_NAMES:
        raise InvalidGroupError(f"element JSON: bad point-group name {data['M']!r}")
    return make_element(M_NAMES.index(data["M"]), data["w"])


# -- self-checks -------------------------------------------------------------

RELATORS = ("abbAbb", "baaBaa")


def _axiom_counts(triples_and_h) -> dict:
    """Run all four circular-ordering axioms over (g1, g2, g3, h) quadruples."""
    c = promislow_circular_order
    checked = 0
    failures = {"vanishing": 0, "antisymmetry": 0, "invariance": 0, "cocycle": 0}
    for g1, g2, g3, h in triples_and_h:
        checked += 1
        v = c(g1, g2, g3)
        degenerate = g1 == g2 or g2 == g3 or g1 == g3
        if (v == 0) != degenerate:
            failures["vanishing"] += 1
        if not degenerate:
            if c(g2, g1, g3) != -v or c(g1, g3, g2) != -v or c(g3, g2, g1) != -v \
                    or c(g2, g3, g1) != v or c(g3, g1, g2) != v:
                failures["antisymmetry"] += 1
        if c(prom_mul(h, g1), prom_mul(h, g2), prom_mul(h, g3)) != v:
            failures["invariance"] += 1
        if c(g2, g3, h) - c(g1, g3, h) + c(g1, g2, h) - v != 0:
            failures["cocycle"] += 1
    return {"checked": checked, "failures": failures,
            "ok": not any(failures.values())}


def demo(seed: int = DEFAULT_SEED, radius: int = 5, samples: int = 100_000) -> dict:
    """Relator, cone, ordering-axiom, and abelianization checks; JSON-able.

    Deterministic given (seed, radius, samples); the seed is recorded in the
    report.  `radius` controls the sampling ball (cone checks stay on their
    own radii).
    """
    report: dict = {"seed": seed, "radius": radius, "samples": samples}
    report["relators"] = {
        word: evaluate_word(word) == IDENTITY for word in RELATORS}

    sphere5 = ball(min(radius, 5))
    kernel5 = [p for p in sphere5 if phi(p) == 0]
    trichotomy_bad = [p for p in kernel5
                      if (kernel_is_positive(p), kernel_is_positive(prom_inv(p)),
                          p == IDENTITY).count(True) != 1]
    positive4 = [p for p in ball(4) if phi(p) == 0 and p != IDENTITY
                 and kernel_is_positive(p)]
    closure_bad = [(p, q) for p in positive4 for q in positive4
                   if not kernel_is_positive(prom_mul(p, q))]
    report["kernel_cone"] = {
        "kernel_ball5_size": len(kernel5),
        "trichotomy_failures": len(trichotomy_bad),
        "closure_pairs_checked": len(positive4) ** 2,
        "closure_failures": len(closure_bad),
        "ok": not trichotomy_bad and not closure_bad,
    }

    small = ball(2)
    exhaustive = ((g1, g2, g3, h)
                  for g1 in small for g2 in small for g3 in small for h in small)
    report["axioms_exhaustive_ball2"] = _axiom_counts(exhaustive)

    rng = random.Random(seed)
    big = ball(radius)
    report["ball_sizes"] = {str(r): len(ball(r)) for r in range(min(radius, 5) + 1)}
    sampled = ((big[rng.randrange(len(big))], big[rng.randrange(len(big))],
                big[rng.randrange(len(big))], big[rng.randrange(len(big))])
               for _ in range(samples))
    report["axioms_sampled"] = _axiom_counts(sampled)

    images = {abelianization_image(p) for p in ball(4)}
    hom_bad = 0
    for _ in range(2000):
        p = big[rng.randrange(len(big))]
        q = big[rng.randrange(len(big))]
        ip, iq = abelianization_image(p), abelianization_image(q)
        want = ((ip[0] + iq[0]) % 4, (ip[1] + iq[1]) % 4)
        if abelianization_image(prom_mul(p, q)) != want:
            hom_bad += 1
    report["abelianization"] = {
        "image_size": len(images),
        "relators_die": all(abelianization_image(evaluate_word(w)) == (0, 0)
                            for w in RELATORS),
        "hom_failures": hom_bad,
        "ok": len(images) == 16 and hom_bad == 0,
    }

    report["ok"] = (all(report["relators"].values())
                    and report["kernel_cone"]["ok"]
                    and report["axioms_exhaustive_ball2"]["ok"]
                    and report["axioms_sampled"]["ok"]
                    and report["abelianization"]["ok"])
    return report
