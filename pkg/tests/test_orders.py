import random
from itertools import permutations

import pytest

from circorder.errors import AxiomError, BoundExceeded
from circorder.groups import (cyclic_group, direct_product, GroupHom,
                              symmetric_group, trivial_group)
from circorder.orders import (arrangement_from_sequence,
                              arrangement_to_hom, arrangement_to_inhom,
                              enumerate_circular_orders, hom_to_arrangement,
                              hom_to_inhom, inhom_to_hom,
                              left_order_from_cone, lexicographic_order_finite,
                              ordering_from_json, ordering_to_json,
                              standard_order_zn, validate_hom, validate_inhom)

from helpers import brute_force_arrangements, euler_phi, library_groups


def all_orderings(G):
    return [arrangement_to_inhom(a) for a in enumerate_circular_orders(G)]


# -- validation ---------------------------------------------------------------

def test_validate_inhom_accepts_z2_order():
    f = validate_inhom(cyclic_group(2), [[0, 0], [0, 1]])
    assert f(1, 1) == 1


def test_validate_inhom_error_kinds():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    with pytest.raises(AxiomError) as err:
        validate_inhom(c2, [[0, 0], [0, 0]])
    assert err.value.kind == "inverse-pair" and err.value.witness == (1,)
    with pytest.raises(AxiomError) as err:
        validate_inhom(c2, [[0, 1], [0, 1]])
    assert err.value.kind == "normalization"
    with pytest.raises(AxiomError) as err:
        validate_inhom(c2, [[0, 0], [0, 2]])
    assert err.value.kind == "value-range"
    with pytest.raises(AxiomError) as err:
        validate_inhom(c3, [[0, 0, 0], [0, 1, 1], [0, 1, 1]])
    assert err.value.kind == "cocycle" and len(err.value.witness) == 3
    with pytest.raises(AxiomError) as err:
        validate_inhom(c3, [[0, 0], [0, 1]])
    assert err.value.kind == "shape"


def test_validate_inhom_standard_orders():
    for n in range(1, 9):
        standard_order_zn(n)  # validation happens inside


def test_validate_hom_accepts_arrangement_order():
    c3 = cyclic_group(3)
    c = arrangement_to_hom(arrangement_from_sequence(c3, (0, 1, 2)))
    validate_hom(c3, c.values)


def test_validate_hom_error_kinds():
    c3 = cyclic_group(3)
    good = arrangement_to_hom(arrangement_from_sequence(c3, (0, 1, 2))).values
    broken = [[list(p) for p in r] for r in good]
    broken[0][1][2] = 0
    with pytest.raises(AxiomError) as err:
        validate_hom(c3, broken)
    assert err.value.kind == "vanishing"

    # a total non-invariant function on the Klein group: no circular ordering
    # exists there, so any arrangement-induced triple function must fail
    klein = direct_product(cyclic_group(2), cyclic_group(2)).group
    pos = {g: g for g in range(4)}
    values = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for g1 in range(4):
        for g2 in range(4):
            for g3 in range(4):
                if g1 != g2 and g2 != g3 and g1 != g3:
                    d2 = (pos[g2] - pos[g1]) % 4
                    d3 = (pos[g3] - pos[g1]) % 4
                    values[g1][g2][g3] = 1 if d2 < d3 else -1
    with pytest.raises(AxiomError) as err:
        validate_hom(klein, values)
    assert err.value.kind == "invariance"


# -- conversions ---------------------------------------------------------------

def test_hom_to_inhom_formula_cases():
    c3 = cyclic_group(3)
    c = arrangement_to_hom(arrangement_from_sequence(c3, (0, 1, 2)))
    f = hom_to_inhom(c)
    assert f(1, 0) == 0 and f(2, 0) == 0          # normalization case
    assert f(1, 1) == (1 - c(0, 1, 2)) // 2 == 0  # generic case
    assert f(2, 1) == 1                           # gh = id case


def test_inhom_to_hom_formula_cases():
    fs = standard_order_zn(3)
    c = inhom_to_hom(fs)
    assert c(0, 0, 1) == 0
    assert c(0, 1, 2) == 1 - 2 * fs(1, 1) == 1
    assert c(0, 2, 1) == 1 - 2 * fs(2, 2) == -1


def test_round_trips_all_orderings_up_to_order_8():
    for G in library_groups():
        if G.order > 8:
            continue
        for arr in enumerate_circular_orders(G):
            c = arrangement_to_hom(arr)
            f = hom_to_inhom(c)
            assert inhom_to_hom(f).values == c.values
            assert hom_to_inhom(inhom_to_hom(f)).values == f.values
            assert hom_to_arrangement(c).sequence == arr.sequence


def test_antisymmetry_property():
    c5 = cyclic_group(5)
    for arr in enumerate_circular_orders(c5):
        c = arrangement_to_hom(arr)
        for g1, g2, g3 in permutations(range(5), 3):
            base = c(g1, g2, g3)
            assert c(g2, g3, g1) == base and c(g3, g1, g2) == base
            assert c(g2, g1, g3) == -base and c(g1, g3, g2) == -base


# -- arrangements ---------------------------------------------------------------

def test_arrangement_examples():
    c3 = cyclic_group(3)
    assert arrangement_to_hom(arrangement_from_sequence(c3, (0, 1, 2)))(0, 1, 2) == 1
    assert arrangement_to_hom(arrangement_from_sequence(c3, (0, 2, 1)))(0, 1, 2) == -1
    with pytest.raises(AxiomError):
        arrangement_from_sequence(c3, (1, 0, 2))
    with pytest.raises(AxiomError):
        arrangement_from_sequence(c3, (0, 0, 2))


def test_round_trip_all_arrangements_z5():
    c5 = cyclic_group(5)
    for tail in permutations(range(1, 5)):
        seq = (0,) + tail
        try:
            arr = arrangement_from_sequence(c5, seq)
        except AxiomError:
            continue
        assert hom_to_arrangement(arrangement_to_hom(arr)).sequence == seq


def test_hom_to_arrangement_rejects_non_invariant():
    # build a hom-shaped value table from a *non*-invariant position chart on
    # Z/4 by transposing two entries of a valid arrangement's chart
    c4 = cyclic_group(4)
    values = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    pos = {0: 0, 1: 1, 3: 2, 2: 3}
    for g1 in range(4):
        for g2 in range(4):
            for g3 in range(4):
                if g1 != g2 and g2 != g3 and g1 != g3:
                    d2 = (pos[g2] - pos[g1]) % 4
                    d3 = (pos[g3] - pos[g1]) % 4
                    values[g1][g2][g3] = 1 if d2 < d3 else -1
    from circorder.orders import HomCircularOrder
    raw = HomCircularOrder(c4, tuple(tuple(tuple(p) for p in r) for r in values))
    with pytest.raises(AxiomError) as err:
        hom_to_arrangement(raw)
    assert err.value.kind == "invariance"


# -- enumeration -----------------------------------------------------------------

def test_enumeration_matches_brute_force():
    for G in library_groups():
        if G.order > 7:
            continue
        fast = [a.sequence for a in enumerate_circular_orders(G)]
        slow = brute_force_arrangements(G)
        assert fast == sorted(slow), G.name


def test_enumeration_counts_are_totients():
    for n in range(2, 13):
        assert len(enumerate_circular_orders(cyclic_group(n))) == euler_phi(n)


def test_enumeration_of_non_cyclic_groups_is_empty():
    klein = direct_product(cyclic_group(2), cyclic_group(2)).group
    assert enumerate_circular_orders(klein) == []
    assert enumerate_circular_orders(symmetric_group(3)) == []
    z3z3 = direct_product(cyclic_group(3), cyclic_group(3)).group
    assert enumerate_circular_orders(z3z3) == []


def test_enumeration_trivial_and_bounds():
    assert [a.sequence for a in enumerate_circular_orders(trivial_group())] == [(0,)]
    with pytest.raises(BoundExceeded):
        enumerate_circular_orders(cyclic_group(13))


def test_enumerated_arrangements_are_generator_power_sequences():
    for n in (4, 5, 6, 8, 12):
        G = cyclic_group(n)
        for arr in enumerate_circular_orders(G):
            z = arr.sequence[1]
            assert arr.sequence == tuple(G.power(z, k) for k in range(n))


# -- standard order -----------------------------------------------------------

def test_standard_order_values():
    fs = standard_order_zn(5)
    assert fs(3, 4) == 1
    assert fs(1, 2) == 0
    assert all(fs(0, b) == 0 for b in range(5))
    for n in (2, 3, 4, 6):
        want = arrangement_to_inhom(
            arrangement_from_sequence(cyclic_group(n), tuple(range(n))))
        assert standard_order_zn(n).values == want.values


# -- left orders and the lexicographic construction ----------------------------

def test_left_order_from_cone_only_trivial_finite():
    triv = trivial_group()
    oracle = left_order_from_cone(triv, set())
    assert oracle.circular_value(0, 0, 0) == 0
    with pytest.raises(AxiomError):
        left_order_from_cone(cyclic_group(2), set())
    with pytest.raises(AxiomError):
        left_order_from_cone(cyclic_group(3), {1})  # 1+1=2 escapes


def test_lexicographic_on_integers_reduces_to_linear_order():
    from circorder.orders import LeftOrderOracle, lexicographic_circular_order
    ints = LeftOrderOracle(lambda k: k > 0, lambda x, y: x + y, lambda x: -x, 0)
    c = lexicographic_circular_order(lambda g: 0, ints, lambda *_: 0,
                                     lambda x, y: x + y, lambda x: -x)
    assert c(-1, 0, 1) == 1
    assert c(1, 0, -1) == -1
    assert c(5, 5, 1) == 0
    # cyclic rotations agree, transpositions flip
    assert c(0, 1, -1) == 1 and c(1, -1, 0) == 1
    rng = random.Random(5)
    for _ in range(200):
        x, y, z, h = (rng.randrange(-30, 30) for _ in range(4))
        assert c(x + h, y + h, z + h) == c(x, y, z)


def test_lexicographic_finite_with_trivial_kernel():
    # 0 -> 1 -> Z/4 -> Z/4 -> 0 with the identity map: the construction must
    # reproduce the quotient ordering itself
    c4 = cyclic_group(4)
    ident = GroupHom(c4, c4, range(4))
    quotient_c = arrangement_to_hom(arrangement_from_sequence(c4, (0, 1, 2, 3)))
    # the kernel is trivial, so its cone (acting on the total group) is empty
    from circorder.orders import LeftOrderOracle
    cone = LeftOrderOracle(lambda g: False, c4.mul, c4.inv, 0)
    built = lexicographic_order_finite(ident, cone, quotient_c)
    assert built.values == quotient_c.values


# -- JSON -----------------------------------------------------------------------

def test_ordering_json_round_trip():
    c4 = cyclic_group(4)
    arr = arrangement_from_sequence(c4, (0, 1, 2, 3))
    for obj in (arr, arrangement_to_inhom(arr), arrangement_to_hom(arr)):
        data = ordering_to_json(obj)
        again = ordering_from_json(data)
        assert type(again) is type(obj)
        assert again.group == obj.group
    named = ordering_to_json(arr)
    named["group"] = "Z/4"
    resolved = ordering_from_json(named, resolve_group=lambda name: c4)
    assert resolved.sequence == arr.sequence
