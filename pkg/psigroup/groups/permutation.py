# psigroup/groups/permutation.py
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from psigroup.exceptions import InvalidParameters


class Permutation:
    """
    A bijection of the points 0..degree-1, stored as its image array.

    Composition follows function notation: ``(a * b)(i) == a(b(i))``.
    Instances are immutable and ordered lexicographically by image array.
    """

    __slots__ = ("images", "_hash", "_order")

    def __init__(self, images: Sequence[int], validate: bool = True):
        images = tuple(images)
        if validate and sorted(images) != list(range(len(images))):
            raise InvalidParameters(f"{list(images)} is not a bijection on 0..{len(images) - 1}")
        if not images:
            raise InvalidParameters("a permutation needs at least one point")
        self.images: Tuple[int, ...] = images
        self._hash = hash(images)
        self._order = 0

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), validate=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles on 0..degree-1."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise InvalidParameters(f"point {point} outside 0..{degree - 1}")
                if point in seen:
                    raise InvalidParameters("cycles must be disjoint")
                seen.add(point)
            for index, point in enumerate(cycle):
                images[point] = cycle[(index + 1) % len(cycle)]
        return cls(images, validate=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, exponent: int) -> "Permutation":
        if exponent < 0:
            return inverse(self) ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = compose(result, base)
            base = compose(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return all(point == image for point, image in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its smallest point."""
        seen = [False] * len(self.images)
        result = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    @property
    def order(self) -> int:
        if not self._order:
            self._order = element_order(self)
        return self._order

    def __repr__(self) -> str:
        moved = [cycle for cycle in self.cycles() if len(cycle) > 1]
        if not moved:
            return f"Permutation(id, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in moved)
        return f"Permutation({body}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation i -> a(b(i))."""
    if len(a.images) != len(b.images):
        raise InvalidParameters(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation(tuple(map(a.images.__getitem__, b.images)), validate=False)


def inverse(a: Permutation) -> Permutation:
    images = [0] * len(a.images)
    for point, image in enumerate(a.images):
        images[image] = point
    return Permutation(images, validate=False)


def element_order(a: Permutation) -> int:
    """Least m >= 1 with a^m the identity, computed as the lcm of cycle lengths."""
    images = a.images
    seen = [False] * len(images)
    result = 1
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = images[point]
            length += 1
        result = lcm(result, length)
    return result


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """[x, y] = x^-1 y^-1 x y."""
    return compose(compose(inverse(x), inverse(y)), compose(x, y))
