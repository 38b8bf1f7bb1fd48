# psigroup/harness/corpus.py
"""
Corpora of groups for the theorem checks: the built-in catalog, the family
sweeps, and JSON Lines files.
"""
import logging
import threading
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from pydantic import ValidationError

from psigroup.analysis.psi import psi_report
from psigroup.analysis.structure import structure_report
from psigroup.config import settings
from psigroup.exceptions import CapExceeded, InvalidParameters, ParseError
from psigroup.groups.catalog import build_entry, small_group_catalog
from psigroup.groups.families import (
    abelian,
    abelian_invariant_factor_lists,
    alternating,
    dicyclic,
    dihedral,
    heisenberg,
    prop2_group,
    semidirect_cyclic,
    symmetric,
)
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.permutation import Permutation
from psigroup.models.schemas import CorpusRecord, PsiReport, StructureReport

logger = logging.getLogger(__name__)


class CorpusEntry:
    """A labelled group with its ψ and structure reports computed on first use."""

    def __init__(self, label: str, group: PermGroup):
        self.label = label
        self.group = group.with_label(label) if group.label != label else group
        self._lock = threading.Lock()
        self._psi: Optional[PsiReport] = None
        self._structure: Optional[StructureReport] = None

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def psi_report(self) -> PsiReport:
        if self._psi is None:
            with self._lock:
                if self._psi is None:
                    self._psi = psi_report(self.group, label=self.label)
        return self._psi

    @property
    def structure(self) -> StructureReport:
        if self._structure is None:
            with self._lock:
                if self._structure is None:
                    self._structure = structure_report(self.group, label=self.label)
        return self._structure

    def to_record(self) -> CorpusRecord:
        return CorpusRecord(
            label=self.label,
            degree=self.group.degree,
            generators=[list(generator.images) for generator in self.group.generators],
        )

    def __repr__(self) -> str:
        return f"CorpusEntry({self.label})"


class Corpus:
    """Ordered collection of uniquely labelled groups."""

    def __init__(self, entries: Iterable[CorpusEntry], source: str = "builtin"):
        self.entries: List[CorpusEntry] = list(entries)
        self.source = source
        seen = set()
        for entry in self.entries:
            if entry.label in seen:
                raise InvalidParameters(f"duplicate corpus label '{entry.label}'")
            seen.add(entry.label)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def labels(self) -> List[str]:
        return [entry.label for entry in self.entries]

    def merged(self, other: "Corpus") -> "Corpus":
        """This corpus followed by the entries of ``other`` whose labels are new."""
        known = set(self.labels)
        extra = [entry for entry in other if entry.label not in known]
        return Corpus(self.entries + extra, source=f"{self.source}+{other.source}")

    def up_to_order(self, max_order: int) -> "Corpus":
        return Corpus(
            [entry for entry in self.entries if entry.order <= max_order], source=self.source
        )


# ============================================================================
# Built-in corpora
# ============================================================================

def builtin_corpus(max_order: Optional[int] = None) -> Corpus:
    """Every catalog group of order at most ``max_order``."""
    entries = [CorpusEntry(entry.name, build_entry(entry)) for entry in small_group_catalog(max_order)]
    logger.info(f"Built-in corpus: {len(entries)} groups")
    return Corpus(entries, source="builtin")


def _canonical_exponent(e: int, m: int, k: int) -> bool:
    """Whether e is the smallest generator of <e> in (Z/m)^*, which fixes the group up to isomorphism."""
    order = next(d for d in range(1, k + 1) if pow(e, d, m) == 1 % m)
    return e == min(pow(e, j, m) for j in range(1, order + 1) if gcd(j, order) == 1)


def semidirect_parameters(max_order: int) -> List[Tuple[int, int, int]]:
    """(m, k, e) with a non-trivial action, m k <= max_order, one e per isomorphism type."""
    result = []
    for m in range(3, max_order // 2 + 1):
        for k in range(2, max_order // m + 1):
            for e in range(2, m):
                if gcd(e, m) == 1 and pow(e, k, m) == 1 and _canonical_exponent(e, m, k):
                    result.append((m, k, e))
    return result


def sweep_corpus(
    dihedral_max: Optional[int] = None,
    abelian_max: Optional[int] = None,
    semidirect_max: Optional[int] = None,
    prop2_max_k: Optional[int] = None,
) -> Corpus:
    """
    The family sweeps: dihedral and dicyclic groups, non-cyclic abelian groups,
    non-trivial cyclic-by-cyclic semidirect products, C_2k x C_2 for odd k,
    and a few symmetric, alternating and Heisenberg groups.
    """
    dihedral_max = dihedral_max if dihedral_max is not None else settings.SWEEP_DIHEDRAL_MAX
    abelian_max = abelian_max if abelian_max is not None else settings.SWEEP_ABELIAN_MAX
    semidirect_max = semidirect_max if semidirect_max is not None else settings.SWEEP_SEMIDIRECT_MAX
    prop2_max_k = prop2_max_k if prop2_max_k is not None else settings.PROP2_MAX_K

    groups: List[PermGroup] = []
    groups += [dihedral(order) for order in range(6, dihedral_max + 1, 2)]
    groups += [dicyclic(order) for order in range(8, dihedral_max + 1, 4)]
    for n in range(2, abelian_max + 1):
        groups += [
            abelian(factors)
            for factors in abelian_invariant_factor_lists(n)
            if len(factors) > 1
        ]
    groups += [semidirect_cyclic(m, k, e) for m, k, e in semidirect_parameters(semidirect_max)]
    groups += [prop2_group(k) for k in range(1, prop2_max_k + 1, 2)]
    groups += [symmetric(4), alternating(4), symmetric(5), alternating(5)]
    groups += [heisenberg(3), heisenberg(5)]

    entries: List[CorpusEntry] = []
    seen = set()
    for group in groups:
        if group.name not in seen:
            seen.add(group.name)
            entries.append(CorpusEntry(group.name, group))
    logger.info(f"Sweep corpus: {len(entries)} groups")
    return Corpus(entries, source="sweeps")


# ============================================================================
# JSON Lines files
# ============================================================================

def _first_field(error: ValidationError) -> Optional[str]:
    errors = error.errors()
    if not errors or not errors[0].get("loc"):
        return None
    return ".".join(str(part) for part in errors[0]["loc"])


def load_corpus(path: Union[str, Path], cap: Optional[int] = None) -> Corpus:
    """
    Read a JSON Lines corpus: one {"label", "degree", "generators"} object per line.

    Raises:
        ParseError: malformed line, with its line number and offending field
        CapExceeded: a group grows past the enumeration cap
    """
    path = Path(path)
    entries: List[CorpusEntry] = []
    seen = set()
    with path.open("r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = CorpusRecord.model_validate_json(line)
            except ValidationError as e:
                raise ParseError(
                    e.errors()[0].get("msg", str(e)), line=line_number, field=_first_field(e)
                ) from e
            if record.label in seen:
                raise ParseError(f"duplicate label '{record.label}'", line=line_number, field="label")
            seen.add(record.label)

            generators = [Permutation(images, validate=False) for images in record.generators]
            group = PermGroup(generators, degree=record.degree, label=record.label, cap=cap)
            try:
                group.order
            except CapExceeded as e:
                raise CapExceeded(f"{record.label} (line {line_number}): {e}", cap=e.cap) from e
            entries.append(CorpusEntry(record.label, group))

    logger.info(f"Loaded {len(entries)} groups from {path}")
    return Corpus(entries, source=str(path))


def dump_corpus(corpus: Corpus, path: Union[str, Path]) -> int:
    """Write a corpus as JSON Lines; returns the number of lines written."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for entry in corpus:
            handle.write(entry.to_record().model_dump_json() + "\n")
    logger.info(f"Wrote {len(corpus)} groups to {path}")
    return len(corpus)
