# test_permgroup.py
"""
Permutations, element enumeration, subgroup constructions, Sylow subgroups
and isomorphism testing. sympy.combinatorics is the independent oracle.
"""
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyGroup

from psigroup.arith.functions import factorize
from psigroup.exceptions import (
    CapExceeded,
    ForeignElementError,
    InvalidParameters,
    NotNormalError,
    OrderCapExceeded,
)
from psigroup.groups.catalog import build_entry, small_group_catalog
from psigroup.groups.families import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    heisenberg,
    semidirect_cyclic,
    symmetric,
)
from psigroup.groups.isomorphism import is_isomorphic
from psigroup.groups.perm_group import PermGroup, enumerate_elements, is_cyclic, order_profile
from psigroup.groups.permutation import Permutation, commutator, compose, element_order, inverse
from psigroup.groups.subgroups import (
    center,
    centralizer,
    cyclic_maximal_subgroups,
    cyclic_subgroup,
    derived_series,
    derived_subgroup,
    intersection,
    is_normal,
    is_q_nilpotent,
    is_solvable,
    normalizer,
    quotient_group,
    second_derived_is_central,
    subgroup_generated,
)
from psigroup.groups.sylow import has_cyclic_subgroup_of_index_p, sylow_subgroup

permutations = st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.permutations(list(range(n)))
)


def as_sympy(group):
    return SympyGroup([SympyPermutation(list(g.images)) for g in group.generators])


def maximal_indices(group):
    return sorted(index for _, index in cyclic_maximal_subgroups(group))


# ============================================================================
# Permutations
# ============================================================================

def test_composition_is_function_notation():
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    assert compose(a, b).images == (1, 2, 0)
    assert (a * b)(1) == a(b(1))


def test_rejects_non_bijection():
    with pytest.raises(InvalidParameters):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidParameters):
        Permutation.from_cycles(4, [(0, 1), (1, 2)])


def test_element_order_is_lcm_of_cycle_lengths():
    assert element_order(Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])) == 6
    assert Permutation.identity(4).order == 1


@given(permutations)
def test_inverse_and_order_match_sympy(images):
    x = Permutation(images)
    assert compose(x, inverse(x)).is_identity()
    assert ~x * x == Permutation.identity(x.degree)
    assert x.order == SympyPermutation(list(images)).order()
    assert (x ** x.order).is_identity()


@hypothesis_settings(max_examples=1000)
@given(permutations)
def test_element_order_is_minimal(images):
    x = Permutation(images)
    power = x
    for _ in range(1, x.order):
        assert not power.is_identity()
        power = compose(power, x)
    assert power.is_identity()
    assert x.order == element_order(x)


@given(permutations, st.data())
def test_commutator_definition(images, data):
    x = Permutation(images)
    y = Permutation(data.draw(st.permutations(list(range(x.degree)))))
    assert commutator(x, y) == inverse(x) * inverse(y) * x * y


# ============================================================================
# Enumeration
# ============================================================================

def test_single_cycle_generates_cyclic_group():
    generator = Permutation([(i + 1) % 12 for i in range(12)])
    group = PermGroup([generator])
    assert group.order == 12
    assert is_cyclic(group)


def test_elements_are_closed_and_sorted(s3):
    elements = enumerate_elements(s3)
    assert list(elements) == sorted(elements)
    for x in elements:
        assert inverse(x) in s3
        for y in elements:
            assert compose(x, y) in s3


def test_order_profiles(s3):
    assert order_profile(cyclic(4)).pairs == {1: 1, 2: 1, 4: 2}
    assert s3.order_profile.pairs == {1: 1, 2: 3, 3: 2}
    assert s3.element_of_order(3) is not None
    assert s3.element_of_order(6) is None


def test_enumeration_cap():
    group = PermGroup(symmetric(5).generators, cap=50)
    with pytest.raises(CapExceeded):
        group.order


@pytest.mark.parametrize(
    "group",
    [symmetric(4), alternating(5), dihedral(10), dicyclic(8), heisenberg(3), semidirect_cyclic(7, 3, 2)],
    ids=lambda group: group.name,
)
def test_order_and_solvability_match_sympy(group):
    oracle = as_sympy(group)
    assert group.order == oracle.order()
    assert is_solvable(group) == oracle.is_solvable
    assert group.is_abelian() == oracle.is_abelian


# ============================================================================
# Subgroups
# ============================================================================

def test_centers(s3, d8, q8):
    assert center(s3).order == 1
    assert center(d8).order == 2
    assert center(q8).order == 2
    assert center(abelian([4, 2])).order == 8


def test_derived_series(s3, s4, a5):
    assert [term.order for term in derived_series(s3)] == [6, 3, 1]
    assert [term.order for term in derived_series(s4)] == [24, 12, 4, 1]
    assert [term.order for term in derived_series(a5)] == [60, 60]
    assert [term.order for term in derived_series(cyclic(4))] == [4, 1]
    assert is_solvable(s4)
    assert not is_solvable(a5)


def test_second_derived_central(s3, s4, q8, a5):
    assert second_derived_is_central(s3)
    assert second_derived_is_central(q8)
    assert not second_derived_is_central(s4)
    assert not second_derived_is_central(a5)


def test_normality_and_quotients(s3, s4):
    assert is_normal(s4, derived_subgroup(s4))
    klein = derived_series(s4)[2]
    quotient = quotient_group(s4, klein)
    assert quotient.order == 6
    assert not quotient.is_cyclic()

    transposition = Permutation.from_cycles(3, [(0, 1)])
    reflection_group = subgroup_generated(s3, [transposition])
    assert not is_normal(s3, reflection_group)
    with pytest.raises(NotNormalError):
        quotient_group(s3, reflection_group)


def test_quotient_of_cyclic_group_is_cyclic():
    group = cyclic(12)
    generator = group.generators[0]
    subgroup = subgroup_generated(group, [generator**4])
    assert subgroup.order == 3
    quotient = quotient_group(group, subgroup)
    assert quotient.order == 4
    assert quotient.is_cyclic()


def test_foreign_element_rejected():
    with pytest.raises(ForeignElementError):
        subgroup_generated(cyclic(4), [Permutation.from_cycles(4, [(0, 1)])])


def test_centralizer_normalizer_intersection(s3, s4):
    rotation = Permutation.from_cycles(3, [(0, 1, 2)])
    rotations = cyclic_subgroup(s3, rotation)
    assert centralizer(s3, rotations).order == 3
    assert normalizer(s3, rotations).order == 6
    reflections = subgroup_generated(s3, [Permutation.from_cycles(3, [(0, 1)])])
    assert intersection(rotations, reflections).order == 1
    assert normalizer(s4, sylow_subgroup(s4, 3)).order == 6


def test_q_nilpotency(s3):
    a4 = alternating(4)
    assert is_q_nilpotent(s3, 2)
    assert not is_q_nilpotent(s3, 3)
    assert is_q_nilpotent(a4, 3)
    assert not is_q_nilpotent(a4, 2)
    with pytest.raises(InvalidParameters):
        is_q_nilpotent(s3, 5)


def test_cyclic_maximal_subgroups(s3, d8, q8):
    assert maximal_indices(s3) == [2, 3, 3, 3]
    assert maximal_indices(cyclic(6)) == [2, 3]
    assert maximal_indices(d8) == [2]
    assert maximal_indices(q8) == [2, 2, 2]
    assert maximal_indices(alternating(4)) == [4, 4, 4, 4]
    assert maximal_indices(cyclic(1)) == []
    with pytest.raises(CapExceeded):
        cyclic_maximal_subgroups(symmetric(5), limit=100)


# ============================================================================
# Sylow subgroups
# ============================================================================

def test_sylow_orders(s3, s4, a5):
    assert sylow_subgroup(s4, 2).order == 8
    assert sylow_subgroup(s4, 3).order == 3
    twelve = sylow_subgroup(cyclic(12), 2)
    assert twelve.order == 4 and twelve.is_cyclic()
    assert sylow_subgroup(a5, 2).order == 4
    assert not sylow_subgroup(a5, 2).is_cyclic()
    assert sylow_subgroup(a5, 5).order == 5
    with pytest.raises(InvalidParameters):
        sylow_subgroup(s3, 5)


@pytest.mark.parametrize(
    "group",
    [dihedral(20), dihedral(24), symmetric(4), dicyclic(24), semidirect_cyclic(7, 6, 3)],
    ids=lambda group: group.name,
)
def test_sylow_orders_match_sympy(group):
    oracle = as_sympy(group)
    for p in factorize(group.order).primes:
        assert sylow_subgroup(group, p).order == oracle.sylow_subgroup(p).order()


def test_cyclic_subgroup_of_index_p(s3, d8):
    assert has_cyclic_subgroup_of_index_p(d8, 2)
    assert not has_cyclic_subgroup_of_index_p(abelian([2, 2, 2]), 2)
    with pytest.raises(InvalidParameters):
        has_cyclic_subgroup_of_index_p(s3, 2)


# ============================================================================
# Catalog-wide subgroup properties
# ============================================================================

CATALOG = small_group_catalog()


def assert_subgroup(group, subgroup):
    elements = set(subgroup.elements)
    assert group.contains_all(elements)
    assert group.order % subgroup.order == 0
    for x in elements:
        assert inverse(x) in elements
        for y in elements:
            assert compose(x, y) in elements


@pytest.mark.parametrize("entry", CATALOG, ids=lambda entry: entry.name)
def test_derived_subgroup_is_normal_with_abelian_quotient(entry):
    group = build_entry(entry)
    derived = derived_subgroup(group)
    assert is_normal(group, derived)
    abelianization = quotient_group(group, derived)
    assert abelianization.order * derived.order == group.order
    assert abelianization.is_abelian()


@pytest.mark.parametrize("entry", CATALOG, ids=lambda entry: entry.name)
def test_sylow_subgroup_has_full_prime_part(entry):
    group = build_entry(entry)
    factorization = factorize(group.order)
    for p in factorization.primes:
        sylow = sylow_subgroup(group, p)
        assert sylow.order == factorization.part(p)
        assert_subgroup(group, sylow)


@pytest.mark.parametrize("entry", CATALOG, ids=lambda entry: entry.name)
def test_returned_subgroups_are_closed(entry):
    group = build_entry(entry)
    subgroups = [center(group), *derived_series(group)]
    for p in factorize(group.order).primes:
        sylow = sylow_subgroup(group, p)
        subgroups += [sylow, centralizer(group, sylow), normalizer(group, sylow)]
    subgroups += [cyclic_subgroup(group, x) for x in group.generators]
    for generator, index in cyclic_maximal_subgroups(group):
        maximal = cyclic_subgroup(group, generator)
        assert maximal.order * index == group.order
        subgroups.append(maximal)
    for subgroup in subgroups:
        assert_subgroup(group, subgroup)


# ============================================================================
# Isomorphism
# ============================================================================

def test_isomorphic_pairs(s3, d8, q8):
    assert is_isomorphic(dihedral(6), s3)
    assert is_isomorphic(dihedral(4), abelian([2, 2]))
    assert is_isomorphic(dicyclic(12), semidirect_cyclic(3, 4, 2))
    assert not is_isomorphic(d8, q8)
    assert not is_isomorphic(semidirect_cyclic(8, 2, 5), dihedral(16))
    assert not is_isomorphic(heisenberg(3), semidirect_cyclic(9, 3, 4))


def test_isomorphism_order_cap():
    with pytest.raises(OrderCapExceeded):
        is_isomorphic(symmetric(5), symmetric(5))
