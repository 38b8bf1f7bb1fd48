# psigroup/analysis/structure.py
"""
Structural facts about a group and the hypothesis/conclusion predicates of
the ψ-based solvability and Sylow results.

Every threshold comparison is done on integers after clearing denominators.
"""
import logging
from typing import Optional

from psigroup.analysis.psi import psi
from psigroup.arith.functions import euler_phi, factorize, psi_cyclic
from psigroup.config import settings
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.subgroups import (
    center,
    cyclic_maximal_subgroups,
    derived_series,
    is_normal,
    is_q_nilpotent,
    powers,
    second_derived_is_central,
)
from psigroup.groups.sylow import has_cyclic_subgroup_of_index_p, sylow_subgroup
from psigroup.models.schemas import StructureReport, Theorem6Case

logger = logging.getLogger(__name__)


# ============================================================================
# Hypotheses
# ============================================================================

def _smallest_prime(n: int) -> int:
    return factorize(n).smallest_prime


def meets_theorem6_hypothesis(psi_g: int, n: int) -> bool:
    """ψ(G) >= ψ(C_n) / (2(q - 1))."""
    if n < 2:
        return False
    return 2 * (_smallest_prime(n) - 1) * psi_g >= psi_cyclic(n)


def meets_corollary7_hypothesis(psi_g: int, n: int) -> bool:
    """ψ(G) >= ψ(C_n) / q."""
    if n < 2:
        return False
    return _smallest_prime(n) * psi_g >= psi_cyclic(n)


def meets_corollary8_hypothesis(psi_g: int, n: int) -> bool:
    """n odd and ψ(G) >= ψ(C_n) / (q + 1)."""
    if n < 2 or n % 2 == 0:
        return False
    return (_smallest_prime(n) + 1) * psi_g >= psi_cyclic(n)


def meets_theorem10_hypothesis(psi_g: int, n: int) -> bool:
    """ψ(G) >= (3/5) n φ(n)."""
    if n < 2:
        return False
    return 5 * psi_g >= 3 * n * euler_phi(n)


def meets_theorem11_hypothesis(psi_g: int, n: int) -> bool:
    """ψ(G) >= (1/q) n φ(n)."""
    if n < 2:
        return False
    return _smallest_prime(n) * psi_g >= n * euler_phi(n)


def below_corollary9_threshold(psi_g: int, n: int) -> bool:
    """ψ(G) < ψ(C_n) / (2(q - 1)) <= ψ(C_n) / q."""
    q = _smallest_prime(n)
    psi_cn = psi_cyclic(n)
    return 2 * (q - 1) * psi_g < psi_cn and psi_cn * q <= 2 * (q - 1) * psi_cn


# ============================================================================
# Structure report
# ============================================================================

def _classify_theorem6(
    hypothesis: bool,
    prime_power: bool,
    sylow_p_cyclic: bool,
    sylow_p_normal: bool,
    sylow_q_cyclic: bool,
    q_nilpotent: bool,
    p_nilpotent: bool,
    second_derived_central: bool,
) -> Theorem6Case:
    # Cases are tried in order; the first one that applies is reported.
    if not hypothesis:
        return Theorem6Case.HYPOTHESIS_NOT_MET
    if sylow_p_cyclic and sylow_p_normal:
        return Theorem6Case.CASE1
    if prime_power:
        return Theorem6Case.PRIME_POWER
    if sylow_q_cyclic and q_nilpotent and second_derived_central:
        return Theorem6Case.CASE2
    if sylow_p_cyclic and p_nilpotent and second_derived_central:
        return Theorem6Case.CASE3
    return Theorem6Case.NO_CASE


def structure_report(
    group: PermGroup, label: Optional[str] = None, search_limit: Optional[int] = None
) -> StructureReport:
    """
    Solvability, Sylow and nilpotency facts for one group.

    Cyclic maximal subgroups are searched only up to ``search_limit``
    (default SUBGROUP_SEARCH_LIMIT); above it the indices are left as None.
    """
    search_limit = search_limit if search_limit is not None else settings.SUBGROUP_SEARCH_LIMIT
    label = label or group.name
    n = group.order
    series = derived_series(group)
    derived_orders = [term.order for term in series]
    solvable = derived_orders[-1] == 1
    second_central = second_derived_is_central(group, series)
    center_order = center(group).order

    if n == 1:
        return StructureReport(
            label=label,
            order=1,
            solvable=solvable,
            derived_orders=derived_orders,
            center_order=center_order,
            second_derived_central=second_central,
            sylow_p_cyclic=False,
            sylow_p_normal=False,
            sylow_has_cyclic_index_p=False,
            sylow_q_cyclic=False,
            q_nilpotent=False,
            p_nilpotent=False,
            theorem6_hypothesis=False,
            theorem6_case=Theorem6Case.HYPOTHESIS_NOT_MET,
            cyclic_maximal_indices=[],
        )

    factorization = factorize(n)
    q, p = factorization.smallest_prime, factorization.largest_prime
    sylow_p = sylow_subgroup(group, p)
    sylow_q = sylow_subgroup(group, q) if q != p else sylow_p
    sylow_p_cyclic = sylow_p.is_cyclic()
    sylow_p_normal = is_normal(group, sylow_p)
    sylow_q_cyclic = sylow_q.is_cyclic()
    q_nilpotent = is_q_nilpotent(group, q)
    p_nilpotent = is_q_nilpotent(group, p)
    hypothesis = meets_theorem6_hypothesis(psi(group), n)

    indices = None
    if n <= search_limit:
        indices = sorted(index for _, index in cyclic_maximal_subgroups(group, search_limit))

    report = StructureReport(
        label=label,
        order=n,
        p=p,
        q=q,
        solvable=solvable,
        derived_orders=derived_orders,
        center_order=center_order,
        second_derived_central=second_central,
        sylow_p_cyclic=sylow_p_cyclic,
        sylow_p_normal=sylow_p_normal,
        sylow_has_cyclic_index_p=has_cyclic_subgroup_of_index_p(sylow_p, p),
        sylow_q_cyclic=sylow_q_cyclic,
        q_nilpotent=q_nilpotent,
        p_nilpotent=p_nilpotent,
        theorem6_hypothesis=hypothesis,
        theorem6_case=_classify_theorem6(
            hypothesis,
            q == p,
            sylow_p_cyclic,
            sylow_p_normal,
            sylow_q_cyclic,
            q_nilpotent,
            p_nilpotent,
            second_central,
        ),
        cyclic_maximal_indices=indices,
    )
    logger.debug(f"Structure of {label}: {report.theorem6_case.value}")
    return report


# ============================================================================
# Conclusions
# ============================================================================

def theorem6_conclusions_hold(report: StructureReport) -> bool:
    """
    Solvable, Sylow p-subgroup with a cyclic subgroup of index p, and one case
    applies. A non-cyclic p-group stands in for the cases with G'' <= Z(G).
    """
    if not (report.solvable and report.sylow_has_cyclic_index_p):
        return False
    if report.theorem6_case == Theorem6Case.PRIME_POWER:
        return report.second_derived_central
    return report.theorem6_case in (Theorem6Case.CASE1, Theorem6Case.CASE2, Theorem6Case.CASE3)


def theorem10_conclusion_holds(report: StructureReport) -> bool:
    return report.solvable and report.second_derived_central


def theorem11_conclusion_holds(report: StructureReport) -> Optional[bool]:
    """
    A normal cyclic Sylow p-subgroup, or solvable with a cyclic maximal
    subgroup of index p or p + 1. None when the maximal search was skipped.
    """
    if report.sylow_p_cyclic and report.sylow_p_normal:
        return True
    if report.cyclic_maximal_indices is None:
        return None
    return report.solvable and any(
        index in (report.p, report.p + 1) for index in report.cyclic_maximal_indices
    )


def prop24_check(report: StructureReport) -> Optional[bool]:
    """A cyclic maximal subgroup forces solvability and G'' <= Z(G); None if not applicable."""
    if not report.cyclic_maximal_indices:
        return None
    return report.solvable and report.second_derived_central


def prop25_check(
    group: PermGroup, report: StructureReport, search_limit: Optional[int] = None
) -> Optional[bool]:
    """
    If some <x> has index below 2p, then either the Sylow p-subgroup is
    normal and cyclic, or G is solvable and every such <x> is maximal of
    index p or p + 1. None when no such x exists or the search is skipped.
    """
    search_limit = search_limit if search_limit is not None else settings.SUBGROUP_SEARCH_LIMIT
    n = report.order
    if n < 2 or group.max_element_order * 2 * report.p <= n:
        return None
    if report.sylow_p_cyclic and report.sylow_p_normal:
        return True
    if n > search_limit:
        return None
    maximal = {
        powers(generator): index
        for generator, index in cyclic_maximal_subgroups(group, search_limit)
    }
    small_index = {
        powers(element) for element in group if element.order * 2 * report.p > n
    }
    return report.solvable and all(
        maximal.get(subgroup) in (report.p, report.p + 1) for subgroup in small_index
    )


def prop26_check(group: PermGroup, report: StructureReport) -> Optional[bool]:
    """
    G'' <= Z(G) for 2-groups with a cyclic subgroup of index 4 and for
    {2, 3}-groups with a cyclic subgroup of index below 6. None if neither applies.
    """
    n = report.order
    if n < 2:
        return None
    primes = set(factorize(n).primes)
    max_order = group.max_element_order
    two_group_case = primes == {2} and n >= 4 and max_order * 4 >= n
    two_three_case = primes <= {2, 3} and max_order * 6 > n
    if not (two_group_case or two_three_case):
        return None
    return report.second_derived_central
