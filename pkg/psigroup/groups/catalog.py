# psigroup/groups/catalog.py
"""
Hand-curated recipes for every isomorphism class of order at most 16.
"""
import logging
from typing import Any, Dict, List, Optional

from psigroup.config import settings
from psigroup.exceptions import InvalidParameters, PsiGroupError
from psigroup.groups.families import RECIPES, direct_product
from psigroup.groups.perm_group import PermGroup
from psigroup.models.schemas import CatalogEntry

logger = logging.getLogger(__name__)

CATALOG_LIMIT = 16

# Number of isomorphism classes for each order 1..16.
CLASS_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14,
}


def _entry(name: str, recipe: str, order: int, **params: Any) -> CatalogEntry:
    return CatalogEntry(name=name, recipe=recipe, params=params, expected_order=order)


def _product(name: str, order: int, *factors: Dict[str, Any]) -> CatalogEntry:
    return _entry(name, "direct_product", order, factors=list(factors))


def _factor(recipe: str, **params: Any) -> Dict[str, Any]:
    return {"recipe": recipe, "params": params}


_CATALOG: List[CatalogEntry] = [
    _entry("C1", "cyclic", 1, n=1),
    _entry("C2", "cyclic", 2, n=2),
    _entry("C3", "cyclic", 3, n=3),
    _entry("C4", "cyclic", 4, n=4),
    _entry("C2xC2", "abelian", 4, invariant_factors=[2, 2]),
    _entry("C5", "cyclic", 5, n=5),
    _entry("C6", "cyclic", 6, n=6),
    _entry("S3", "dihedral", 6, two_n=6),
    _entry("C7", "cyclic", 7, n=7),
    _entry("C8", "cyclic", 8, n=8),
    _entry("C4xC2", "abelian", 8, invariant_factors=[4, 2]),
    _entry("C2xC2xC2", "abelian", 8, invariant_factors=[2, 2, 2]),
    _entry("D8", "dihedral", 8, two_n=8),
    _entry("Q8", "dicyclic", 8, four_n=8),
    _entry("C9", "cyclic", 9, n=9),
    _entry("C3xC3", "abelian", 9, invariant_factors=[3, 3]),
    _entry("C10", "cyclic", 10, n=10),
    _entry("D10", "dihedral", 10, two_n=10),
    _entry("C11", "cyclic", 11, n=11),
    _entry("C12", "cyclic", 12, n=12),
    _entry("C6xC2", "abelian", 12, invariant_factors=[6, 2]),
    _entry("D12", "dihedral", 12, two_n=12),
    _entry("A4", "alternating", 12, n=4),
    _entry("Q12", "dicyclic", 12, four_n=12),
    _entry("C13", "cyclic", 13, n=13),
    _entry("C14", "cyclic", 14, n=14),
    _entry("D14", "dihedral", 14, two_n=14),
    _entry("C15", "cyclic", 15, n=15),
    _entry("C16", "cyclic", 16, n=16),
    _entry("C8xC2", "abelian", 16, invariant_factors=[8, 2]),
    _entry("C4xC4", "abelian", 16, invariant_factors=[4, 4]),
    _entry("C4xC2xC2", "abelian", 16, invariant_factors=[4, 2, 2]),
    _entry("C2xC2xC2xC2", "abelian", 16, invariant_factors=[2, 2, 2, 2]),
    _entry("D16", "dihedral", 16, two_n=16),
    _entry("SD16", "semidihedral", 16, two_k=16),
    _entry("Q16", "dicyclic", 16, four_n=16),
    _entry("M16", "semidirect_cyclic", 16, m=8, k=2, e=5),
    _entry("C4:C4", "semidirect_cyclic", 16, m=4, k=4, e=3),
    # (C2 x C2) x| C4 with the generator of C4 swapping two involutions.
    _entry(
        "C2^2:C4",
        "permutations",
        16,
        degree=8,
        generators=[[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[1, 2], [4, 5, 6, 7]]],
    ),
    _product("C2xD8", 16, _factor("cyclic", n=2), _factor("dihedral", two_n=8)),
    _product("C2xQ8", 16, _factor("cyclic", n=2), _factor("dicyclic", four_n=8)),
    _entry("Pauli", "pauli", 16),
]


def small_group_catalog(max_order: Optional[int] = None) -> List[CatalogEntry]:
    """One entry per isomorphism class of each order up to ``max_order`` (at most 16)."""
    max_order = max_order if max_order is not None else settings.CATALOG_MAX_ORDER
    if max_order > CATALOG_LIMIT:
        raise InvalidParameters(f"the catalog covers orders up to {CATALOG_LIMIT}, got {max_order}")
    return [entry for entry in _CATALOG if entry.expected_order <= max_order]


def _construct(recipe: str, params: Dict[str, Any]) -> PermGroup:
    if recipe == "direct_product":
        factors = [_construct(factor["recipe"], factor["params"]) for factor in params["factors"]]
        group = factors[0]
        for factor in factors[1:]:
            group = direct_product(group, factor)
        return group
    try:
        constructor = RECIPES[recipe]
    except KeyError:
        raise InvalidParameters(f"unknown recipe '{recipe}'") from None
    return constructor(**params)


def build_entry(entry: CatalogEntry) -> PermGroup:
    """Construct a catalog recipe and verify the advertised order."""
    group = _construct(entry.recipe, dict(entry.params)).with_label(entry.name)
    if group.order != entry.expected_order:
        raise PsiGroupError(
            f"{entry.name}: recipe built order {group.order}, expected {entry.expected_order}"
        )
    logger.debug(f"Built catalog entry {entry.name} of order {group.order}")
    return group
