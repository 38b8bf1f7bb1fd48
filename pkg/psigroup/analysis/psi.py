# psigroup/analysis/psi.py
"""
ψ(G) and the per-group bounds built on it.
"""
import logging
from fractions import Fraction
from typing import Optional, Tuple

from psigroup.arith.functions import factorize, psi_cyclic
from psigroup.exceptions import PreconditionFailed
from psigroup.groups.families import semidirect_cyclic_components
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.permutation import Permutation, compose
from psigroup.groups.subgroups import centralizer, intersection, is_normal, quotient_group
from psigroup.groups.sylow import sylow_subgroup
from psigroup.models.schemas import PsiReport, SemidirectLemmaReport

logger = logging.getLogger(__name__)


def psi(group: PermGroup) -> int:
    """Sum of the orders of all elements of the group."""
    return group.order_profile.psi


def psi_report(group: PermGroup, label: Optional[str] = None) -> PsiReport:
    n = group.order
    psi_g = psi(group)
    psi_cn = psi_cyclic(n)
    factorization = factorize(n)
    return PsiReport(
        label=label or group.name,
        n=n,
        psi=psi_g,
        psi_cn=psi_cn,
        ratio=Fraction(psi_g, psi_cn),
        q=factorization.smallest_prime,
        p=factorization.largest_prime,
        cyclic=group.is_cyclic(),
    )


def psi_semidirect_formula(psi_p: int, p_order: int, psi_f: int, psi_z: int) -> int:
    """ψ(P)ψ(Z) + |P|ψ(F \\ Z) with ψ(F \\ Z) = ψ(F) - ψ(Z)."""
    return psi_p * psi_z + p_order * (psi_f - psi_z)


def prop5_bound(group: PermGroup) -> Tuple[Fraction, bool]:
    """
    Check ψ(G) <= (n - 1) n / q + 1 and ψ(G) < n^2 / q for non-cyclic G.

    Returns:
        Tuple of (bound, holds) where holds covers both inequalities
    """
    n = group.order
    if group.is_cyclic():
        raise PreconditionFailed(f"{group.name} is cyclic")
    q = factorize(n).smallest_prime
    bound = Fraction((n - 1) * n, q) + 1
    value = psi(group)
    return bound, value <= bound and value * q < n * n


def _is_central(group: PermGroup, subgroup: PermGroup) -> bool:
    return all(
        compose(h, g) == compose(g, h) for h in subgroup.generators for g in group.generators
    )


def prop210_check(group: PermGroup, p: int) -> Tuple[bool, bool, bool]:
    """
    Compare ψ(G) with ψ(P)ψ(G/P) for a cyclic normal Sylow p-subgroup P.

    Returns:
        Tuple of (inequality_holds, equality, central)
    """
    sylow = sylow_subgroup(group, p)
    if not sylow.is_cyclic():
        raise PreconditionFailed(f"Sylow {p}-subgroup of {group.name} is not cyclic")
    if not is_normal(group, sylow):
        raise PreconditionFailed(f"Sylow {p}-subgroup of {group.name} is not normal")
    product = psi(sylow) * psi(quotient_group(group, sylow))
    value = psi(group)
    return value <= product, value == product, _is_central(group, sylow)


def _order_modulo(element: Permutation, normal: PermGroup) -> int:
    """Least j >= 1 with element^j in ``normal``."""
    power = element
    exponent = 1
    while power not in normal:
        power = compose(power, element)
        exponent += 1
    return exponent


def semidirect_lemma_check(m: int, k: int, e: int) -> SemidirectLemmaReport:
    """
    Evaluate the cyclic-by-cyclic semidirect lemma element by element.

    Needs m a prime power p^r > 1 and k > 1 prime to p. With P = C_m,
    F = C_k and Z = C_F(P):
      1. every x in F centralizes P or fixes no non-identity element of P
      2. o(x) is the least j with (ux)^j in P, for u in P and x in F
      3. o(ux) = o(u) o(x) for x in Z
      4. o(ux) = o(x) for x in F \\ Z
      5. ψ(G) = ψ(P)ψ(Z) + |P|ψ(F \\ Z) < ψ(P)ψ(Z) + |P|ψ(F)
    """
    factorization = factorize(m)
    if m < 2 or not factorization.is_prime_power:
        raise PreconditionFailed(f"m = {m} is not a prime power")
    p = factorization.smallest_prime
    if k < 2 or k % p == 0:
        raise PreconditionFailed(f"k = {k} must exceed 1 and be prime to {p}")

    group, normal, complement = semidirect_cyclic_components(m, k, e)
    fixed = intersection(centralizer(group, normal), complement)
    normal_elements = normal.elements

    part1 = True
    part2 = True
    part3 = True
    part4 = True
    for x in complement:
        central = x in fixed
        if not central:
            for u in normal_elements:
                if not u.is_identity() and compose(x, u) == compose(u, x):
                    part1 = False
        for u in normal_elements:
            ux = compose(u, x)
            if _order_modulo(ux, normal) != x.order:
                part2 = False
            if central and ux.order != u.order * x.order:
                part3 = False
            if not central and ux.order != x.order:
                part4 = False

    psi_p = psi(normal)
    psi_f = psi(complement)
    psi_z = psi(fixed)
    psi_g = psi(group)
    formula_value = psi_semidirect_formula(psi_p, normal.order, psi_f, psi_z)
    upper_bound = psi_p * psi_z + normal.order * psi_f
    report = SemidirectLemmaReport(
        m=m,
        k=k,
        e=e % m,
        p=p,
        order=group.order,
        centralizer_order=fixed.order,
        psi=psi_g,
        formula_value=formula_value,
        upper_bound=upper_bound,
        part1_trivial_or_fixed_point_free=part1,
        part2_power_lands_in_p=part2,
        part3_central_orders_multiply=part3,
        part4_orders_preserved=part4,
        part5_formula_matches=psi_g == formula_value,
        part5_strict_bound=psi_g < upper_bound,
    )
    logger.debug(f"Semidirect lemma on {group.name}: holds={report.holds}")
    return report
