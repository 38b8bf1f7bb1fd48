# psigroup/groups/sylow.py
import logging

from psigroup.arith.functions import factorize, is_prime
from psigroup.exceptions import InvalidParameters
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.subgroups import normalizer

logger = logging.getLogger(__name__)


def is_power_of(p: int, n: int) -> bool:
    """Whether n = p^a for some a >= 0."""
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(group: PermGroup, p: int) -> PermGroup:
    """
    A Sylow p-subgroup of ``group``.

    Starts from the cyclic subgroup of a p-element of largest order, then
    keeps adjoining a p-element of N_G(P) lying outside P until P reaches
    the full p-part of |G|. A proper p-subgroup of a Sylow subgroup is
    always properly contained in its normalizer there, so each round grows P.
    """
    order = group.order
    if not is_prime(p) or order % p:
        raise InvalidParameters(f"{p} is not a prime divisor of |{group.name}| = {order}")
    target = factorize(order).part(p)

    p_elements = [x for x in group if x.order > 1 and is_power_of(p, x.order)]
    start = max(p_elements, key=lambda x: x.order)
    current = PermGroup.from_candidates([start], group.degree, cap=group.cap)

    while current.order < target:
        normalizing = normalizer(group, current)
        addition = next(
            x for x in normalizing if is_power_of(p, x.order) and x not in current
        )
        current = PermGroup.from_candidates(
            [*current.generators, addition], group.degree, cap=group.cap
        )
        logger.debug(f"Sylow {p}-search in {group.name}: reached order {current.order}")

    current.label = f"Syl_{p}({group.name})"
    return current


def has_cyclic_subgroup_of_index_p(subgroup: PermGroup, p: int) -> bool:
    """Whether a p-group has an element of order at least |P|/p."""
    if not is_prime(p) or not is_power_of(p, subgroup.order):
        raise InvalidParameters(f"{subgroup.name} of order {subgroup.order} is not a {p}-group")
    return subgroup.max_element_order * p >= subgroup.order
