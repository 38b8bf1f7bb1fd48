# psigroup/groups/isomorphism.py
"""
Isomorphism testing for small permutation groups.

An invariant prefilter rejects most pairs; the rest go through a
backtracking search over images of a reduced generating set.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from psigroup.config import settings
from psigroup.exceptions import OrderCapExceeded
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.permutation import Permutation, compose
from psigroup.groups.subgroups import center, derived_series

logger = logging.getLogger(__name__)


def _invariants(group: PermGroup) -> Tuple:
    return (
        group.order,
        tuple(sorted(group.order_profile.pairs.items())),
        center(group).order,
        tuple(term.order for term in derived_series(group)),
        group.is_abelian(),
    )


def _extend(
    generators: Sequence[Permutation], images: Sequence[Permutation]
) -> Optional[Dict[Permutation, Permutation]]:
    """
    Extend generator images along right multiplication to the whole subgroup.

    Returns the map when it is well defined and injective, otherwise None.
    """
    identity = Permutation.identity(generators[0].degree)
    target_identity = Permutation.identity(images[0].degree)
    mapping = {identity: target_identity}
    used = {target_identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for element in frontier:
            image = mapping[element]
            for generator, generator_image in zip(generators, images):
                product = compose(element, generator)
                product_image = compose(image, generator_image)
                known = mapping.get(product)
                if known is None:
                    if product_image in used:
                        return None
                    mapping[product] = product_image
                    used.add(product_image)
                    next_frontier.append(product)
                elif known != product_image:
                    return None
        frontier = next_frontier
    return mapping


def is_isomorphic(first: PermGroup, second: PermGroup, cap: Optional[int] = None) -> bool:
    """
    Decide whether two groups of order at most ``cap`` are isomorphic.

    Abelian groups with equal order profiles are isomorphic outright; other
    pairs need an explicit isomorphism found by backtracking.
    """
    cap = cap if cap is not None else settings.ISOMORPHISM_ORDER_CAP
    for group in (first, second):
        if group.order > cap:
            raise OrderCapExceeded(
                f"isomorphism testing is limited to order {cap}, {group.name} has {group.order}",
                cap=cap,
            )
    if _invariants(first) != _invariants(second):
        return False
    if first.is_abelian():
        return True

    generators = list(
        PermGroup.from_candidates(first.generators, first.degree, cap=first.cap).generators
    )
    candidates: List[List[Permutation]] = [
        [y for y in second if y.order == x.order] for x in generators
    ]

    def search(images: List[Permutation]) -> bool:
        depth = len(images)
        if depth and _extend(generators[:depth], images) is None:
            return False
        if depth == len(generators):
            return True
        return any(search(images + [candidate]) for candidate in candidates[depth])

    found = search([])
    logger.debug(f"Isomorphism {first.name} ~ {second.name}: {found}")
    return found
