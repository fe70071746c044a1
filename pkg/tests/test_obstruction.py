import pytest

from circorder.errors import InvalidGroupError
from circorder.groups import cyclic_group, direct_product, symmetric_group, trivial_group
from circorder.obstruction import (MAPPING_CLASS_GROUP_SPECTRUM,
                                   ObstructionSpectrum, TorsionProfile,
                                   bico_product_decision, cyclic_quotient_stats,
                                   exponent_facts, is_prime,
                                   iterated_nonco_bound, prime_factors,
                                   spectrum_finite, spectrum_membership,
                                   spectrum_torsion_part)

from helpers import primes_dividing


def test_spectrum_normalization_and_membership():
    s = ObstructionSpectrum.from_elements([4, 8, 6, 12])
    assert s.minimal == (4, 6)
    assert s.membership(8) and s.membership(12) and s.membership(18)
    assert not s.membership(2) and not s.membership(9)
    assert 24 in s
    with pytest.raises(ValueError):
        s.membership(1)
    with pytest.raises(ValueError):
        ObstructionSpectrum.from_elements([1])
    with pytest.raises(ValueError):
        ObstructionSpectrum(minimal=(2, 4))  # not an antichain


def test_spectrum_flags():
    assert ObstructionSpectrum.all_naturals().membership(17)
    assert ObstructionSpectrum.empty().is_empty
    assert not ObstructionSpectrum.empty().membership(5)
    assert ObstructionSpectrum.from_elements([2]).describe() == "2N"
    assert ObstructionSpectrum.all_naturals().describe() == "N>=2"


def test_upward_closure_property():
    s = ObstructionSpectrum.from_elements([4, 9])
    for n in range(2, 60):
        if s.membership(n):
            for t in range(2, 5):
                assert s.membership(t * n)


def test_spectrum_finite_cyclic_groups():
    for k in range(2, 13):
        s = spectrum_finite(cyclic_group(k))
        assert s.minimal == tuple(primes_dividing(k)), k
    assert spectrum_finite(cyclic_group(6)).minimal == (2, 3)


def test_spectrum_finite_special_cases():
    assert spectrum_finite(trivial_group()).is_empty
    klein = direct_product(cyclic_group(2), cyclic_group(2)).group
    assert spectrum_finite(klein).is_all
    assert spectrum_finite(symmetric_group(3)).is_all


def test_spectrum_finite_agrees_with_direct_product_search():
    # Ob(Z/6) membership vs direct cyclicity of Z/6 x Z/n for n <= 10
    s = spectrum_finite(cyclic_group(6))
    for n in range(2, 11):
        product = direct_product(cyclic_group(6), cyclic_group(n)).group
        assert s.membership(n) == (not product.is_cyclic())


def test_torsion_part():
    assert spectrum_torsion_part([4]).minimal == (2,)
    assert spectrum_torsion_part([6, 35]).minimal == (2, 3, 5, 7)
    assert spectrum_torsion_part([]).is_empty
    profile = TorsionProfile.of_group(cyclic_group(12))
    assert spectrum_torsion_part(profile).minimal == (2, 3)
    with pytest.raises(ValueError):
        TorsionProfile((1,))


def test_torsion_part_matches_full_spectrum_for_cyclic():
    # for finite cyclic groups every obstruction comes from torsion
    for k in range(2, 13):
        G = cyclic_group(k)
        assert spectrum_torsion_part(TorsionProfile.of_group(G)).minimal == \
            spectrum_finite(G).minimal


def test_exponent_facts_examples():
    assert exponent_facts(4, 3, False) == "not-in-spectrum"
    assert exponent_facts(4, 4, False) == "in-spectrum"
    assert exponent_facts(5, 2, False) == "spectrum-equals-eN"
    assert exponent_facts(6, 4, False) == "undetermined"
    assert exponent_facts(6, 6, True) == "undetermined"
    with pytest.raises(ValueError):
        exponent_facts(1, 3, False)


def test_exponent_facts_table():
    from math import gcd
    for e in range(2, 9):
        for n in range(2, 9):
            for lo in (False, True):
                got = exponent_facts(e, n, lo)
                if not lo and is_prime(e):
                    want = "spectrum-equals-eN"
                elif gcd(n, e) == 1:
                    want = "not-in-spectrum"
                elif not lo and n == e:
                    want = "in-spectrum"
                else:
                    want = "undetermined"
                assert got == want, (e, n, lo)


def test_bico_product_decision():
    assert bico_product_decision({2, 3}, {5}) == "circularly_orderable"
    assert bico_product_decision({2, 3}, {3}) == "not_circularly_orderable"
    assert bico_product_decision({2}, set()) == "circularly_orderable"
    with pytest.raises(InvalidGroupError):
        bico_product_decision({4}, {3})


def test_bico_decision_consistent_with_cyclic_products():
    # Z/6 x Z/5 is cyclic of order 30: the decision must say orderable
    s6 = spectrum_finite(cyclic_group(6))
    s5 = spectrum_finite(cyclic_group(5))
    assert bico_product_decision(set(s6.minimal), set(s5.minimal)) == \
        "circularly_orderable"
    assert direct_product(cyclic_group(6), cyclic_group(5)).group.is_cyclic()
    s4 = spectrum_finite(cyclic_group(4))
    assert bico_product_decision(set(s6.minimal), set(s4.minimal)) == \
        "not_circularly_orderable"
    assert not direct_product(cyclic_group(6), cyclic_group(4)).group.is_cyclic()


def test_iterated_bound_examples():
    assert iterated_nonco_bound(cyclic_group(2)) == 4
    assert iterated_nonco_bound(trivial_group()) == 1
    z44 = direct_product(cyclic_group(4), cyclic_group(4)).group
    m, e = cyclic_quotient_stats(z44)
    assert e == 4
    assert m == 10
    assert iterated_nonco_bound(z44) == 40
    with pytest.raises(InvalidGroupError):
        iterated_nonco_bound(symmetric_group(3))


def test_cyclic_quotient_stats_brute_force_cross_check():
    # independent count: subgroups of Z/4 x Z/4 as closures of element pairs
    from circorder.groups import closure, quotient
    z44 = direct_product(cyclic_group(4), cyclic_group(4)).group
    subgroups = set()
    for g in range(z44.order):
        for h in range(z44.order):
            subgroups.add(closure(z44, {g, h}))
    cyclic_quotients = [S for S in subgroups if quotient(z44, S).group.is_cyclic()]
    assert len(subgroups) == 15
    assert len(cyclic_quotients) == 10


def test_membership_helper_and_promislow_spectrum_shape():
    s = ObstructionSpectrum.from_elements([4])
    assert spectrum_membership(s, 4) and spectrum_membership(s, 12)
    assert not spectrum_membership(s, 2) and not spectrum_membership(s, 6)
    assert spectrum_membership(ObstructionSpectrum.from_elements([2, 3]), 9)
    assert MAPPING_CLASS_GROUP_SPECTRUM.is_all


def test_prime_helpers():
    assert prime_factors(360) == [2, 3, 5]
    assert is_prime(2) and is_prime(13) and not is_prime(1) and not is_prime(9)
