"""Obstruction spectra: which cyclic factors kill circular orderability.

The obstruction spectrum of a group G is the set of n >= 2 for which
G x Z/n is not circularly orderable.  It is empty exactly for left-orderable
G and is upward closed under divisibility (Z/n embeds in Z/tn, and subgroups
inherit circular orderings), so every spectrum in scope is represented by its
finite antichain of divisibility-minimal elements, plus a flag for the full
set N>=2, which is not the upward closure of any finite set.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable

from .errors import AxiomError, InvalidGroupError
from .groups import FiniteGroup, all_subgroups, quotient
from .orders import arrangement_to_inhom, enumerate_circular_orders
from .cohomology import is_n_divisible

SPECTRUM_VERIFY_LIMIT = 8

VERDICT_NOT_IN = "not-in-spectrum"
VERDICT_IN = "in-spectrum"
VERDICT_ALL_MULTIPLES = "spectrum-equals-eN"
VERDICT_UNKNOWN = "undetermined"

CO = "circularly_orderable"
NOT_CO = "not_circularly_orderable"


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


@dataclass(frozen=True)
class ObstructionSpectrum:
    """Upward-divisibility-closed subset of N>=2.

    `minimal` is the antichain of divisibility-minimal elements; `is_all`
    flags the full set.  Emptiness (no minimal elements, not all) means the
    represented group is left-orderable.
    """
    minimal: tuple = ()
    is_all: bool = False

    def __post_init__(self):
        if self.is_all and self.minimal:
            raise ValueError("the full spectrum carries no minimal-element data")
        for m in self.minimal:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"minimal element {m!r} is not an integer >= 2")
        for m in self.minimal:
            for d in self.minimal:
                if d != m and m % d == 0:
                    raise ValueError(f"minimal elements not an antichain: {d} divides {m}")

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "ObstructionSpectrum":
        """Spectrum generated upward by `elements` (reduced to the antichain)."""
        elems = sorted(set(elements))
        kept: list[int] = []
        for m in elems:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"spectrum element {m!r} is not an integer >= 2")
            if not any(m % d == 0 for d in kept):
                kept.append(m)
        return cls(tuple(kept))

    @classmethod
    def all_naturals(cls) -> "ObstructionSpectrum":
        return cls(is_all=True)

    @classmethod
    def empty(cls) -> "ObstructionSpectrum":
        return cls()

    @property
    def is_empty(self) -> bool:
        return not self.is_all and not self.minimal

    def membership(self, n: int) -> bool:
        if n < 2:
            raise ValueError(f"spectrum membership is defined for n >= 2, got {n}")
        if self.is_all:
            return True
        return any(n % m == 0 for m in self.minimal)

    def __contains__(self, n: int) -> bool:
        return self.membership(n)

    def describe(self) -> str:
        if self.is_all:
            return "N>=2"
        if not self.minimal:
            return "empty"
        return " u ".join(f"{m}N" for m in self.minimal)


def spectrum_membership(spectrum: ObstructionSpectrum, n: int) -> bool:
    return spectrum.membership(n)


# The spectrum of the mapping class group of a once-punctured genus >= 2
# surface is everything: by the Mann-Wolff rigidity theorem every circular
# ordering of it represents the (primitive) Euler class, which is never
# divisible.  Shipped as data, not computed.
MAPPING_CLASS_GROUP_SPECTRUM = ObstructionSpectrum.all_naturals()


@dataclass(frozen=True)
class TorsionProfile:
    """Multiset of torsion-element orders of a group (all >= 2)."""
    orders: tuple

    def __post_init__(self):
        for k in self.orders:
            if not isinstance(k, int) or k < 2:
                raise ValueError(f"torsion order {k!r} is not an integer >= 2")

    @classmethod
    def of_group(cls, G: FiniteGroup) -> "TorsionProfile":
        return cls(tuple(sorted(G.element_order(g) for g in range(1, G.order))))


def spectrum_torsion_part(profile) -> ObstructionSpectrum:
    """Torsion part of a spectrum: n belongs iff it shares a prime with the
    order of some torsion element, so the minimal elements are those primes."""
    if isinstance(profile, TorsionProfile):
        orders = profile.orders
    else:
        orders = tuple(profile)
        TorsionProfile(orders)  # reuse the validation
    primes = sorted({p for k in orders for p in prime_factors(k)})
    return ObstructionSpectrum.from_elements(primes)


def spectrum_finite(G: FiniteGroup,
                    verify_limit: int = SPECTRUM_VERIFY_LIMIT) -> ObstructionSpectrum:
    """Exact obstruction spectrum of a finite group.

    Trivial group: empty (it is left-orderable).  Non-cyclic: the full set,
    since the group itself is not circularly orderable and subgroup products
    only get worse.  Cyclic of order k: minimal elements are the primes
    dividing k; for k within `verify_limit` that answer is re-derived from
    the divisibility pipeline (no enumerated ordering has an n-divisible
    class) and any disagreement raises.
    """
    if G.order == 1:
        return ObstructionSpectrum.empty()
    if not G.is_cyclic():
        return ObstructionSpectrum.all_naturals()
    k = G.order
    primes = prime_factors(k)
    spectrum = ObstructionSpectrum.from_elements(primes)
    if k <= verify_limit:
        orderings = [arrangement_to_inhom(a) for a in enumerate_circular_orders(G)]
        for n in range(2, max(k, 8) + 1):
            divisible = any(is_n_divisible(G, f, n).divisible for f in orderings)
            if divisible == spectrum.membership(n):
                raise AxiomError("spectrum", (k, n),
                                 "divisibility pipeline disagrees with the gcd rule")
    return spectrum


def exponent_facts(e: int, n: int, left_orderable: bool) -> str:
    """Verdict on membership of n in the spectrum of a circularly-orderable
    group whose integral second cohomology has exponent e.

    Returns "spectrum-equals-eN" (e prime, group not left-orderable),
    "not-in-spectrum" (n coprime to e), "in-spectrum" (n = e, not
    left-orderable), or "undetermined".
    """
    if e < 2 or n < 2:
        raise ValueError(f"exponent_facts needs e, n >= 2, got ({e}, {n})")
    if not left_orderable and is_prime(e):
        return VERDICT_ALL_MULTIPLES
    if gcd(n, e) == 1:
        return VERDICT_NOT_IN
    if not left_orderable and n == e:
        return VERDICT_IN
    return VERDICT_UNKNOWN


def bico_product_decision(min_g: Iterable[int], min_a: Iterable[int]) -> str:
    """Circular orderability of G x A where A carries a bi-invariant circular
    ordering: decided by disjointness of the minimal obstruction elements.

    Hypothesis (checked): the minimal elements on the G side are all prime.
    """
    min_g = sorted(set(min_g))
    min_a = sorted(set(min_a))
    for m in min_g:
        if not is_prime(m):
            raise InvalidGroupError(
                f"bico_product_decision: minimal element {m} is composite; the "
                f"criterion requires min(Ob(G)) to consist of primes")
    for m in min_a:
        if not isinstance(m, int) or m < 2:
            raise ValueError(f"minimal element {m!r} is not an integer >= 2")
    return NOT_CO if set(min_g) & set(min_a) else CO


def cyclic_quotient_stats(A: FiniteGroup) -> tuple[int, int]:
    """(m, e): number of subgroups of the finite abelian group A with cyclic
    quotient (counted by kernel), and the lcm of those quotient orders."""
    if not A.is_abelian():
        raise InvalidGroupError("cyclic_quotient_stats expects an abelianization (abelian group)")
    m = 0
    e = 1
    for N in all_subgroups(A):
        Q = quotient(A, N).group
        if Q.is_cyclic():
            m += 1
            e = lcm(e, Q.order)
    return m, e


def iterated_nonco_bound(abelianization: FiniteGroup) -> int:
    """Upper bound m*e on a power of G that fails to be circularly orderable,
    for finitely generated amenable circularly-orderable G that is not
    left-orderable and has the given finite abelianization.

    m counts the cyclic quotients of the abelianization (one per kernel) and
    e is the exponent of their direct sum.  The bound is existential, so the
    kernel-level overcount stays valid.
    """
    m, e = cyclic_quotient_stats(abelianization)
    return m * e
