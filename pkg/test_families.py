# test_families.py
"""
Family constructors and the small-group catalog.

Catalog completeness at orders up to 8 is checked against an exhaustive
search over Cayley tables; at orders 9 to 16 the per-order class counts are
fixed constants and the entries are shown pairwise non-isomorphic.
"""
from itertools import combinations, permutations

import pytest

from psigroup.analysis.psi import psi
from psigroup.exceptions import CapExceeded, InvalidParameters
from psigroup.groups.catalog import CLASS_COUNTS, build_entry, small_group_catalog
from psigroup.groups.families import (
    abelian,
    abelian_invariant_factor_lists,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    from_cycles,
    heisenberg,
    pauli,
    prop2_group,
    semidihedral,
    semidirect_cyclic,
    semidirect_cyclic_components,
    symmetric,
)
from psigroup.groups.isomorphism import is_isomorphic
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.permutation import Permutation
from psigroup.groups.subgroups import center, centralizer, intersection


# ============================================================================
# Cayley-table oracle
# ============================================================================

def _fully_associative(table, n):
    return all(
        table[table[x][y]][z] == table[x][table[y][z]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


def _element_order(table, x):
    power, order = x, 1
    while power != 0:
        power = table[power][x]
        order += 1
    return order


def cayley_tables(n):
    """
    Every group table on 0..n-1 with identity 0 in which element 1 has the
    largest order k and left multiplication by 1 is i -> i + 1 within
    consecutive blocks of k labels. Every group of order n has such a table.

    Column y of a table is right multiplication by y. Associativity makes
    each column commute with left multiplication by 1 and makes the column
    of u v equal to the column of v after the column of u, so columns are
    drawn from that centralizer and checked pairwise as they are placed.
    """
    if n == 1:
        yield [[0]]
        return
    for k in range(2, n + 1):
        if n % k:
            continue
        shift = [x // k * k + (x % k + 1) % k for x in range(n)]
        commuting = [
            images
            for images in permutations(range(n))
            if all(images[shift[x]] == shift[images[x]] for x in range(n))
        ]
        candidates = {y: [images for images in commuting if images[0] == y] for y in range(n)}
        columns = [tuple(range(n))] + [None] * (n - 1)
        row_used = [{x} for x in range(n)]

        def consistent(y):
            for u in range(y + 1):
                for v in range(y + 1):
                    if u != y and v != y:
                        continue
                    w = columns[v][columns[u][0]]
                    if w <= y and any(
                        columns[w][x] != columns[v][columns[u][x]] for x in range(n)
                    ):
                        return False
            return True

        def search(y):
            if y == n:
                table = [[columns[c][x] for c in range(n)] for x in range(n)]
                if _fully_associative(table, n) and max(
                    _element_order(table, x) for x in range(n)
                ) == k:
                    yield table
                return
            for column in candidates[y]:
                if any(column[x] in row_used[x] for x in range(n)):
                    continue
                columns[y] = column
                for x in range(n):
                    row_used[x].add(column[x])
                if consistent(y):
                    yield from search(y + 1)
                for x in range(n):
                    row_used[x].discard(column[x])
                columns[y] = None

        yield from search(1)


def group_from_table(table):
    n = len(table)
    rows = [Permutation(table[x]) for x in range(n)]
    return PermGroup.from_candidates(rows, n)


def isomorphism_classes(n):
    representatives = []
    for table in cayley_tables(n):
        group = group_from_table(table)
        assert group.order == n
        if not any(is_isomorphic(group, known) for known in representatives):
            representatives.append(group)
    return representatives


# ============================================================================
# Constructors
# ============================================================================

def test_cyclic_groups():
    assert cyclic(1).order == 1
    assert psi(cyclic(6)) == 21
    assert psi(cyclic(12)) == 77
    assert cyclic(12).is_cyclic()
    with pytest.raises(InvalidParameters):
        cyclic(0)


def test_abelian_groups():
    group = abelian([3, 3])
    assert group.order == 9
    assert not group.is_cyclic()
    assert psi(group) == 25
    assert abelian([]).order == 1
    assert abelian([4, 2]).name == "C4xC2"
    with pytest.raises(InvalidParameters):
        abelian([4, 1])


def test_abelian_invariant_factor_lists():
    assert abelian_invariant_factor_lists(8) == [[2, 2, 2], [4, 2], [8]]
    assert abelian_invariant_factor_lists(12) == [[6, 2], [12]]
    assert len(abelian_invariant_factor_lists(16)) == 5
    assert len(abelian_invariant_factor_lists(64)) == 11
    assert abelian_invariant_factor_lists(1) == [[]]
    for factors in abelian_invariant_factor_lists(72):
        assert all(earlier % later == 0 for earlier, later in zip(factors, factors[1:]))


def test_direct_product_orders():
    group = direct_product(symmetric(3), cyclic(2))
    assert group.order == 12
    assert group.name == "S3xC2"
    assert group.degree == 5


def test_dihedral_groups():
    assert dihedral(10).order_profile.count(2) == 5
    assert dihedral(4).order == 4
    assert not dihedral(4).is_cyclic()
    with pytest.raises(InvalidParameters):
        dihedral(7)


def test_dicyclic_groups():
    quaternion = dicyclic(8)
    assert quaternion.order_profile.pairs == {1: 1, 2: 1, 4: 6}
    assert psi(quaternion) == 27
    assert dicyclic(12).order_profile.pairs == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}
    assert dicyclic(16).order_profile.count(2) == 1
    with pytest.raises(InvalidParameters):
        dicyclic(10)


def test_semidihedral_group():
    group = semidihedral(16)
    assert group.order == 16
    assert group.max_element_order == 8
    assert center(group).order == 2
    with pytest.raises(InvalidParameters):
        semidihedral(24)


def test_symmetric_and_alternating():
    assert psi(symmetric(3)) == 13
    assert symmetric(1).order == 1
    assert symmetric(2).order == 2
    assert alternating(3).order == 3 and alternating(3).is_cyclic()
    assert psi(alternating(5)) == 211
    with pytest.raises(InvalidParameters):
        symmetric(7)


def test_semidirect_cyclic():
    group = semidirect_cyclic(7, 3, 2)
    assert group.order == 21
    assert not group.is_abelian()
    assert psi(group) == 85

    group, normal, complement = semidirect_cyclic_components(5, 4, 2)
    assert group.order == 20
    assert intersection(centralizer(group, normal), complement).order == 1

    trivial_action = semidirect_cyclic(4, 3, 1)
    assert trivial_action.is_abelian() and trivial_action.is_cyclic()

    with pytest.raises(InvalidParameters):
        semidirect_cyclic(7, 3, 3)


@pytest.mark.parametrize("k", [1, 3, 5, 7, 9])
def test_prop2_groups_are_not_cyclic(k):
    group = prop2_group(k)
    assert group.order == 4 * k
    assert group.exponent == 2 * k
    assert not group.is_cyclic()


def test_prop2_group_needs_odd_k():
    with pytest.raises(InvalidParameters):
        prop2_group(2)
    assert psi(prop2_group(3)) == 49


def test_heisenberg_groups():
    group = heisenberg(3)
    assert group.order == 27
    assert group.exponent == 3
    assert not group.is_abelian()
    assert center(group).order == 3
    with pytest.raises(InvalidParameters):
        heisenberg(4)


def test_pauli_group():
    group = pauli()
    assert group.order == 16
    assert center(group).order == 4
    assert group.exponent == 4


def test_from_cycles():
    group = from_cycles(4, [[[0, 1, 2, 3]], [[0, 2]]], label="D8 on a square")
    assert group.order == 8
    assert is_isomorphic(group, dihedral(8))


def test_family_order_cap(monkeypatch):
    from psigroup.config import settings

    monkeypatch.setattr(settings, "ENUMERATION_CAP", 10)
    with pytest.raises(CapExceeded):
        cyclic(12)


# ============================================================================
# Catalog
# ============================================================================

def test_catalog_counts():
    entries = small_group_catalog()
    assert len(entries) == 42
    for order, count in CLASS_COUNTS.items():
        assert sum(entry.expected_order == order for entry in entries) == count
    assert len({entry.name for entry in entries}) == 42
    assert len(small_group_catalog(8)) == 14
    with pytest.raises(InvalidParameters):
        small_group_catalog(17)


def test_catalog_recipes_build_advertised_orders():
    for entry in small_group_catalog():
        group = build_entry(entry)
        assert group.order == entry.expected_order
        assert group.name == entry.name


@pytest.mark.slow
@pytest.mark.parametrize("order", range(9, 17))
def test_catalog_entries_pairwise_non_isomorphic(order):
    groups = [build_entry(entry) for entry in small_group_catalog() if entry.expected_order == order]
    for first, second in combinations(groups, 2):
        assert not is_isomorphic(first, second), (first.name, second.name)


@pytest.mark.slow
@pytest.mark.parametrize("order", range(1, 9))
def test_catalog_complete_up_to_order_8(order):
    classes = isomorphism_classes(order)
    assert len(classes) == CLASS_COUNTS[order]
    catalog = [build_entry(entry) for entry in small_group_catalog(8) if entry.expected_order == order]
    for group in classes:
        assert sum(is_isomorphic(group, entry) for entry in catalog) == 1
