# psigroup/groups/perm_group.py
import logging
import threading
from collections import Counter
from typing import AbstractSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from psigroup.config import settings
from psigroup.exceptions import CapExceeded, InvalidParameters
from psigroup.groups.permutation import Permutation, compose
from psigroup.models.schemas import OrderProfile

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


def closure_images(
    generators: Sequence[Images],
    degree: int,
    cap: int,
    seed: Optional[AbstractSet[Images]] = None,
) -> Set[Images]:
    """
    Breadth-first closure of image arrays under right multiplication by generators.

    Args:
        generators: Image arrays of the generating permutations
        degree: Number of points acted on
        cap: Largest element count tolerated before giving up
        seed: Optional set already closed under the earlier generators

    Returns:
        Set of image arrays of every element of the generated group
    """
    seen: Set[Images] = set(seed) if seed else {tuple(range(degree))}
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for element in frontier:
            lookup = element.__getitem__
            for generator in generators:
                product = tuple(map(lookup, generator))
                if product not in seen:
                    seen.add(product)
                    next_frontier.append(product)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"closure exceeded {cap} elements at degree {degree}", cap=cap
                        )
        frontier = next_frontier
    return seen


class PermGroup:
    """
    A finite group given by permutation generators.

    The element set is materialized on first use, cached in canonical
    (lexicographic) order and never mutated afterwards.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: Optional[int] = None,
        label: Optional[str] = None,
        cap: Optional[int] = None,
        elements: Optional[Iterable[Images]] = None,
    ):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise InvalidParameters("need generators or an explicit degree")
            degree = generators[0].degree
        if degree < 1:
            raise InvalidParameters(f"degree must be positive, got {degree}")
        for generator in generators:
            if generator.degree != degree:
                raise InvalidParameters(
                    f"generator of degree {generator.degree} in a group of degree {degree}"
                )
        if not generators:
            generators = [Permutation.identity(degree)]

        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.label = label
        self.cap = cap if cap is not None else settings.ENUMERATION_CAP
        self._lock = threading.Lock()
        self._elements: Optional[Tuple[Permutation, ...]] = None
        self._element_set: frozenset = frozenset()
        self._profile: Optional[OrderProfile] = None
        if elements is not None:
            self._store(elements)

    @classmethod
    def from_candidates(
        cls,
        candidates: Iterable[Permutation],
        degree: int,
        label: Optional[str] = None,
        cap: Optional[int] = None,
    ) -> "PermGroup":
        """
        The subgroup generated by ``candidates``, keeping only the candidates
        that enlarge the group built so far as generators.
        """
        cap = cap if cap is not None else settings.ENUMERATION_CAP
        kept: List[Images] = []
        elements: Set[Images] = {tuple(range(degree))}
        for candidate in candidates:
            if candidate.images in elements:
                continue
            kept.append(candidate.images)
            elements = closure_images(kept, degree, cap, seed=elements)
        generators = [Permutation(images, validate=False) for images in kept]
        return cls(generators, degree=degree, label=label, cap=cap, elements=elements)

    def _store(self, images: Iterable[Images]) -> None:
        ordered = tuple(Permutation(item, validate=False) for item in sorted(images))
        self._element_set = frozenset(ordered)
        self._elements = ordered

    def _ensure_elements(self) -> Tuple[Permutation, ...]:
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    images = closure_images(
                        [generator.images for generator in self.generators],
                        self.degree,
                        self.cap,
                    )
                    self._store(images)
                    logger.debug(f"Enumerated {self.name}: {len(images)} elements")
        return self._elements

    @property
    def elements(self) -> Tuple[Permutation, ...]:
        return self._ensure_elements()

    @property
    def order(self) -> int:
        return len(self._ensure_elements())

    @property
    def name(self) -> str:
        return self.label or f"<group of degree {self.degree}>"

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, element: Permutation) -> bool:
        self._ensure_elements()
        return element in self._element_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._ensure_elements())

    def __len__(self) -> int:
        return self.order

    def contains_all(self, elements: Iterable[Permutation]) -> bool:
        return all(element in self for element in elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and other.contains_all(self.generators)

    def same_elements(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order == other.order
            and other.contains_all(self.generators)
        )

    def with_label(self, label: str) -> "PermGroup":
        """A relabelled view sharing the generators and any cached elements."""
        clone = PermGroup(self.generators, degree=self.degree, label=label, cap=self.cap)
        if self._elements is not None:
            clone._elements = self._elements
            clone._element_set = self._element_set
            clone._profile = self._profile
        return clone

    @property
    def order_profile(self) -> OrderProfile:
        if self._profile is None:
            counts = Counter(element.order for element in self._ensure_elements())
            self._profile = OrderProfile(
                group_order=self.order, pairs=dict(sorted(counts.items()))
            )
        return self._profile

    @property
    def max_element_order(self) -> int:
        return self.order_profile.max_order

    @property
    def exponent(self) -> int:
        return self.order_profile.exponent

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            compose(a, b) == compose(b, a)
            for index, a in enumerate(gens)
            for b in gens[index + 1 :]
        )

    def is_cyclic(self) -> bool:
        return self.max_element_order == self.order

    def element_of_order(self, order: int) -> Optional[Permutation]:
        """The first element of the given order in canonical order, if any."""
        for element in self._ensure_elements():
            if element.order == order:
                return element
        return None

    def __repr__(self) -> str:
        size = len(self._elements) if self._elements is not None else "?"
        return f"PermGroup({self.name}, degree={self.degree}, order={size})"


def enumerate_elements(group: PermGroup) -> Tuple[Permutation, ...]:
    """All elements of the group in canonical order; raises CapExceeded past the cap."""
    return group.elements


def order_profile(group: PermGroup) -> OrderProfile:
    return group.order_profile


def is_cyclic(group: PermGroup) -> bool:
    return group.is_cyclic()
