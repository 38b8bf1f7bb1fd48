# psigroup/groups/subgroups.py
"""
Subgroup constructions computed by exhaustive enumeration.

There is no stabilizer chain here: every subgroup is found by scanning the
enumerated elements of its parent.
"""
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from psigroup.arith.functions import factorize, is_prime
from psigroup.config import settings
from psigroup.exceptions import (
    CapExceeded,
    ForeignElementError,
    InvalidParameters,
    NotNormalError,
)
from psigroup.groups.perm_group import PermGroup, closure_images
from psigroup.groups.permutation import Permutation, compose, inverse

logger = logging.getLogger(__name__)


def _require_subgroup(group: PermGroup, subgroup: PermGroup) -> None:
    if subgroup.degree != group.degree or not group.contains_all(subgroup.generators):
        raise ForeignElementError(f"{subgroup.name} is not a subgroup of {group.name}")


def subgroup_generated(
    group: PermGroup, seed: Sequence[Permutation], label: Optional[str] = None
) -> PermGroup:
    """The subgroup of ``group`` generated by ``seed``."""
    for element in seed:
        if element not in group:
            raise ForeignElementError(f"{element!r} is not an element of {group.name}")
    return PermGroup.from_candidates(seed, group.degree, label=label, cap=group.cap)


def cyclic_subgroup(group: PermGroup, element: Permutation) -> PermGroup:
    return subgroup_generated(group, [element], label=f"<{element!r}>")


def intersection(first: PermGroup, second: PermGroup) -> PermGroup:
    if first.degree != second.degree:
        raise InvalidParameters("groups of different degree do not intersect")
    common = [element for element in first if element in second]
    return PermGroup.from_candidates(
        common, first.degree, label=f"{first.name} & {second.name}", cap=first.cap
    )


def centralizer(group: PermGroup, subgroup: PermGroup) -> PermGroup:
    """Elements of ``group`` commuting with every generator of ``subgroup``."""
    _require_subgroup(group, subgroup)
    generators = subgroup.generators
    members = [
        element
        for element in group
        if all(compose(element, h) == compose(h, element) for h in generators)
    ]
    return PermGroup.from_candidates(
        members, group.degree, label=f"C({subgroup.name})", cap=group.cap
    )


def normalizer(group: PermGroup, subgroup: PermGroup) -> PermGroup:
    """Elements g of ``group`` with g H g^-1 = H."""
    _require_subgroup(group, subgroup)
    generators = subgroup.generators
    members = []
    for element in group:
        element_inverse = inverse(element)
        if all(
            compose(compose(element, h), element_inverse) in subgroup for h in generators
        ):
            members.append(element)
    return PermGroup.from_candidates(
        members, group.degree, label=f"N({subgroup.name})", cap=group.cap
    )


def is_normal(group: PermGroup, subgroup: PermGroup) -> bool:
    """Normality tested on generators: g h g^-1 in H for generators g of G and h of H."""
    _require_subgroup(group, subgroup)
    for g in group.generators:
        g_inverse = inverse(g)
        for h in subgroup.generators:
            if compose(compose(g, h), g_inverse) not in subgroup:
                return False
    return True


def center(group: PermGroup) -> PermGroup:
    result = centralizer(group, group)
    result.label = f"Z({group.name})"
    return result


def derived_subgroup(group: PermGroup) -> PermGroup:
    """Subgroup generated by the commutators [x, y] of every pair of elements."""
    elements = group.elements
    inverses: Dict[Permutation, Permutation] = {x: inverse(x) for x in elements}
    commutators: Set[Permutation] = set()
    for x in elements:
        for y in elements:
            # [x, y] = (yx)^-1 (xy)
            commutators.add(compose(inverses[compose(y, x)], compose(x, y)))
    return PermGroup.from_candidates(
        sorted(commutators), group.degree, label=f"{group.name}'", cap=group.cap
    )


def derived_series(group: PermGroup) -> List[PermGroup]:
    """G, G', G'', ... stopping at the trivial group or at the first repeated term."""
    series = [group]
    current = group
    while current.order > 1:
        following = derived_subgroup(current)
        series.append(following)
        if following.order == current.order:
            break
        current = following
    return series


def is_solvable(group: PermGroup) -> bool:
    return derived_series(group)[-1].order == 1


def second_derived_is_central(
    group: PermGroup, series: Optional[List[PermGroup]] = None
) -> bool:
    """Whether G'' <= Z(G), reusing a precomputed derived series when given."""
    series = series if series is not None else derived_series(group)
    # A series shorter than three terms has already stabilized.
    second = series[2] if len(series) > 2 else series[-1]
    return all(
        compose(z, g) == compose(g, z) for z in second.generators for g in group.generators
    )


def quotient_group(group: PermGroup, normal_subgroup: PermGroup) -> PermGroup:
    """
    G/N as the permutation action of G's generators on the left cosets of N.

    Cosets are numbered by their smallest element in canonical order.
    """
    if not is_normal(group, normal_subgroup):
        raise NotNormalError(f"{normal_subgroup.name} is not normal in {group.name}")
    coset_of: Dict[Permutation, int] = {}
    representatives: List[Permutation] = []
    for element in group:
        if element in coset_of:
            continue
        index = len(representatives)
        representatives.append(element)
        for n in normal_subgroup:
            coset_of[compose(element, n)] = index
    degree = len(representatives)
    generators = [
        Permutation(
            [coset_of[compose(generator, rep)] for rep in representatives], validate=False
        )
        for generator in group.generators
    ]
    quotient = PermGroup(
        generators,
        degree=degree,
        label=f"{group.name}/{normal_subgroup.name}",
        cap=group.cap,
    )
    logger.debug(f"Quotient {quotient.name} acts on {degree} cosets")
    return quotient


def is_q_nilpotent(group: PermGroup, q: int) -> bool:
    """
    Whether the elements of order prime to q form a subgroup of order |G|/q^a.

    That subgroup, when it exists, is the normal q-complement.
    """
    order = group.order
    if not is_prime(q) or order % q:
        raise InvalidParameters(f"{q} is not a prime divisor of {order}")
    complement_order = order // factorize(order).part(q)
    prime_to_q = [element for element in group if element.order % q]
    if len(prime_to_q) != complement_order:
        return False
    generated = PermGroup.from_candidates(prime_to_q, group.degree, cap=group.cap)
    return generated.order == complement_order


def _generates_group(group: PermGroup, first: Permutation, second: Permutation) -> bool:
    # A subgroup larger than half of G is G itself.
    try:
        closure_images([first.images, second.images], group.degree, group.order // 2)
    except CapExceeded:
        return True
    return False


def powers(element: Permutation) -> frozenset:
    """Image arrays of every power of ``element``."""
    images = [element.images]
    current = element
    while not current.is_identity():
        current = compose(current, element)
        images.append(current.images)
    return frozenset(images)


def cyclic_maximal_subgroups(
    group: PermGroup, limit: Optional[int] = None
) -> List[Tuple[Permutation, int]]:
    """
    Every cyclic maximal subgroup of ``group`` as (generator, index).

    Candidates are the cyclic subgroups not contained in a larger cyclic
    subgroup. A candidate of prime index is maximal; otherwise it is maximal
    when every element outside it generates G together with its generator,
    tested once per left coset.
    """
    limit = limit if limit is not None else settings.SUBGROUP_SEARCH_LIMIT
    order = group.order
    if order > limit:
        raise CapExceeded(
            f"cyclic maximal subgroup search limited to order {limit}, got {order}", cap=limit
        )
    if order == 1:
        return []

    cyclics: Dict[frozenset, Permutation] = {}
    for element in group:
        cyclic_images = powers(element)
        if cyclic_images not in cyclics:
            cyclics[cyclic_images] = element
    by_size = sorted(cyclics.items(), key=lambda item: len(item[0]), reverse=True)

    result: List[Tuple[Permutation, int]] = []
    for position, (subgroup_images, generator) in enumerate(by_size):
        size = len(subgroup_images)
        if size == order:
            continue
        if any(
            size < len(larger) < order and subgroup_images < larger
            for larger, _ in by_size[:position]
        ):
            continue
        index = order // size
        if is_prime(index) or _is_maximal(group, generator, subgroup_images):
            result.append((generator, index))
    result.sort(key=lambda item: item[0])
    return result


def _is_maximal(group: PermGroup, generator: Permutation, subgroup_images: frozenset) -> bool:
    covered = set(subgroup_images)
    members = [Permutation(images, validate=False) for images in subgroup_images]
    for element in group:
        if element.images in covered:
            continue
        if not _generates_group(group, generator, element):
            return False
        for member in members:
            covered.add(compose(element, member).images)
    return True
