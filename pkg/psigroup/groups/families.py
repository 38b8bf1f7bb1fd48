# psigroup/groups/families.py
"""
Constructors for the group families used by the verification harness.

Groups with a faithful small natural action are built on it directly;
presented groups (dicyclic, semidihedral, the Pauli group) go through the
left regular representation of a normal-form multiplication.
"""
import logging
from itertools import product
from math import gcd, prod
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions

from psigroup.arith.functions import factorize, is_prime
from psigroup.config import settings
from psigroup.exceptions import CapExceeded, InvalidParameters, PsiGroupError
from psigroup.groups.perm_group import PermGroup
from psigroup.groups.permutation import Permutation, compose, inverse

logger = logging.getLogger(__name__)

MAX_SYMMETRIC_DEGREE = 6


def _require_int(value: int, name: str, minimum: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidParameters(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidParameters(f"{name} must be at least {minimum}, got {value}")


def _check_order_cap(order: int, cap: Optional[int] = None) -> None:
    cap = cap if cap is not None else settings.ENUMERATION_CAP
    if order > cap:
        raise CapExceeded(f"group of order {order} exceeds the enumeration cap {cap}", cap=cap)


def regular_representation(
    elements: Sequence[Hashable],
    multiply: Callable[[Hashable, Hashable], Hashable],
    generators: Sequence[Hashable],
    label: str,
) -> PermGroup:
    """
    Left regular representation g -> (x_i -> g x_i) of an abstract group.

    ``elements`` must list the whole group, closed under ``multiply``.
    """
    index = {element: position for position, element in enumerate(elements)}
    if len(index) != len(elements):
        raise InvalidParameters("regular representation needs distinct elements")
    permutations = []
    for generator in generators:
        images = [index[multiply(generator, element)] for element in elements]
        permutations.append(Permutation(images))
    return PermGroup(permutations, degree=len(elements), label=label)


def _check_relation(holds: bool, relation: str, label: str) -> None:
    if not holds:
        raise PsiGroupError(f"{label}: defining relation {relation} fails")


# ============================================================================
# Cyclic, abelian and direct products
# ============================================================================

def cyclic(n: int) -> PermGroup:
    """C_n as the group generated by one n-cycle."""
    _require_int(n, "n", 1)
    _check_order_cap(n)
    generator = Permutation([(i + 1) % n for i in range(n)], validate=False)
    return PermGroup([generator], degree=n, label=f"C{n}")


def direct_product(first: PermGroup, second: PermGroup, label: Optional[str] = None) -> PermGroup:
    """G x H acting on the disjoint union of the two domains."""
    _check_order_cap(first.order * second.order)
    shift = first.degree
    generators = [
        Permutation(g.images + tuple(range(shift, shift + second.degree)), validate=False)
        for g in first.generators
    ]
    generators += [
        Permutation(tuple(range(shift)) + tuple(i + shift for i in h.images), validate=False)
        for h in second.generators
    ]
    return PermGroup(
        generators,
        degree=shift + second.degree,
        label=label or f"{first.name}x{second.name}",
    )


def abelian(invariant_factors: Sequence[int]) -> PermGroup:
    """Direct product of cyclic groups of the given orders."""
    factors = list(invariant_factors)
    if not factors:
        return cyclic(1)
    for factor in factors:
        _require_int(factor, "invariant factor", 2)
    _check_order_cap(prod(factors))
    label = "x".join(f"C{factor}" for factor in factors)
    group = cyclic(factors[0])
    for factor in factors[1:]:
        group = direct_product(group, cyclic(factor))
    return group.with_label(label)


def abelian_invariant_factor_lists(n: int) -> List[List[int]]:
    """
    Every abelian group of order n as a descending list of invariant factors.

    Each prime power p^r of n contributes a partition of r; the i-th
    invariant factor multiplies the i-th largest part over all primes.
    """
    _require_int(n, "n", 1)
    per_prime: List[List[List[int]]] = []
    for prime, exponent in factorize(n).factors:
        shapes = []
        for partition in partitions(exponent):
            parts = sorted(
                (part for part, count in partition.items() for _ in range(count)),
                reverse=True,
            )
            shapes.append([prime**part for part in parts])
        per_prime.append(shapes)

    result = []
    for choice in product(*per_prime):
        width = max((len(shape) for shape in choice), default=0)
        result.append(
            [prod(shape[i] for shape in choice if i < len(shape)) for i in range(width)]
        )
    return sorted(result)


def prop2_group(k: int) -> PermGroup:
    """C_2k x C_2 for odd k, the family attaining ratio exactly 7/11."""
    _require_int(k, "k", 1)
    if k % 2 == 0:
        raise InvalidParameters(f"k must be odd, got {k}")
    return direct_product(cyclic(2 * k), cyclic(2), label=f"C{2 * k}xC2")


# ============================================================================
# Dihedral, dicyclic and semidihedral groups
# ============================================================================

def dihedral(two_n: int) -> PermGroup:
    """
    The dihedral group of order two_n acting on the vertices of an n-gon.

    dihedral(4) is C2 x C2 since a 2-gon has no faithful action of it.
    """
    _require_int(two_n, "two_n", 4)
    if two_n % 2:
        raise InvalidParameters(f"dihedral order must be even, got {two_n}")
    _check_order_cap(two_n)
    if two_n == 4:
        return direct_product(cyclic(2), cyclic(2), label="D4")
    n = two_n // 2
    rotation = Permutation([(i + 1) % n for i in range(n)], validate=False)
    reflection = Permutation([(-i) % n for i in range(n)], validate=False)
    return PermGroup([rotation, reflection], degree=n, label=f"D{two_n}")


def _metacyclic(m: int, t: int, c: int, s: int, label: str) -> PermGroup:
    """
    <a, x | a^m = 1, x^t = a^c, x a x^-1 = a^s> via normal forms a^i x^j.

    Requires s^t = 1 and s c = c modulo m for the normal form to be a group.
    """
    if pow(s, t, m) != 1 % m or (s * c - c) % m:
        raise InvalidParameters(f"{label}: inconsistent metacyclic parameters")
    powers = [pow(s, j, m) for j in range(t)]

    def multiply(left: Tuple[int, int], right: Tuple[int, int]) -> Tuple[int, int]:
        i1, j1 = left
        i2, j2 = right
        exponent = i1 + i2 * powers[j1]
        j = j1 + j2
        if j >= t:
            j -= t
            exponent += c
        return exponent % m, j

    elements = [(i, j) for j in range(t) for i in range(m)]
    group = regular_representation(elements, multiply, [(1, 0), (0, 1)], label)
    a, x = group.generators
    _check_relation(a.order == m, f"a^{m} = 1", label)
    _check_relation(x**t == a**c, f"x^{t} = a^{c}", label)
    _check_relation(compose(compose(x, a), inverse(x)) == a**s, f"a^x = a^{s}", label)
    _check_relation(group.order == m * t, f"|G| = {m * t}", label)
    return group


def dicyclic(four_n: int) -> PermGroup:
    """The dicyclic group of order four_n; generalized quaternion for 2-powers."""
    _require_int(four_n, "four_n", 8)
    if four_n % 4:
        raise InvalidParameters(f"dicyclic order must be a multiple of 4, got {four_n}")
    _check_order_cap(four_n)
    n = four_n // 4
    return _metacyclic(2 * n, 2, n, -1 % (2 * n), f"Q{four_n}")


def semidihedral(two_k: int) -> PermGroup:
    """SD_2^k = <a, x | a^(2^(k-1)) = x^2 = 1, a^x = a^(2^(k-2) - 1)> for k >= 4."""
    _require_int(two_k, "two_k", 16)
    if two_k & (two_k - 1):
        raise InvalidParameters(f"semidihedral order must be a power of 2, got {two_k}")
    _check_order_cap(two_k)
    half = two_k // 2
    return _metacyclic(half, 2, 0, half // 2 - 1, f"SD{two_k}")


# ============================================================================
# Symmetric and alternating groups
# ============================================================================

def symmetric(n: int) -> PermGroup:
    _require_int(n, "n", 1)
    if n > MAX_SYMMETRIC_DEGREE:
        raise InvalidParameters(f"symmetric groups are built up to degree {MAX_SYMMETRIC_DEGREE}")
    if n == 1:
        return PermGroup([], degree=1, label="S1")
    transposition = Permutation.from_cycles(n, [(0, 1)])
    if n == 2:
        return PermGroup([transposition], label="S2")
    rotation = Permutation([(i + 1) % n for i in range(n)], validate=False)
    return PermGroup([rotation, transposition], label=f"S{n}")


def alternating(n: int) -> PermGroup:
    """A_n generated by the 3-cycles (0 1 i)."""
    _require_int(n, "n", 3)
    if n > MAX_SYMMETRIC_DEGREE:
        raise InvalidParameters(f"alternating groups are built up to degree {MAX_SYMMETRIC_DEGREE}")
    generators = [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return PermGroup(generators, label=f"A{n}")


# ============================================================================
# Cyclic-by-cyclic semidirect products
# ============================================================================

def semidirect_cyclic_components(m: int, k: int, e: int) -> Tuple[PermGroup, PermGroup, PermGroup]:
    """
    C_m x| C_k where the generator y of C_k acts by a -> a^e.

    Realized on m + k points: a is i -> i + 1 on Z_m, y is i -> e i on Z_m
    together with a k-cycle on the extra points, which keeps the action
    faithful for every valid e.

    Returns:
        Tuple of (G, P, F) with P = <a> normal and F = <y> a complement
    """
    _require_int(m, "m", 1)
    _require_int(k, "k", 1)
    if not isinstance(e, int) or isinstance(e, bool):
        raise InvalidParameters(f"e must be an integer, got {e!r}")
    e %= m
    if gcd(e, m) != 1 or pow(e, k, m) != 1 % m:
        raise InvalidParameters(f"x -> x^{e} is not an automorphism of order dividing {k} on C{m}")
    _check_order_cap(m * k)

    degree = m + k
    tail = tuple(range(m, degree))
    a = Permutation(tuple((i + 1) % m for i in range(m)) + tail, validate=False)
    y = Permutation(
        tuple(e * i % m for i in range(m)) + tuple(m + (j + 1) % k for j in range(k)),
        validate=False,
    )
    group = PermGroup([a, y], degree=degree, label=f"C{m}:C{k}(e={e})")
    normal = PermGroup([a], degree=degree, label=f"C{m}")
    complement = PermGroup([y], degree=degree, label=f"C{k}")
    return group, normal, complement


def semidirect_cyclic(m: int, k: int, e: int) -> PermGroup:
    return semidirect_cyclic_components(m, k, e)[0]


# ============================================================================
# Explicit groups
# ============================================================================

def from_cycles(
    degree: int, generators: Sequence[Sequence[Sequence[int]]], label: Optional[str] = None
) -> PermGroup:
    """A group from generators written as lists of disjoint cycles."""
    _require_int(degree, "degree", 1)
    permutations = [Permutation.from_cycles(degree, cycles) for cycles in generators]
    return PermGroup(permutations, degree=degree, label=label)


def pauli() -> PermGroup:
    """
    The Pauli group C4 o D8 of order 16, elements i^k X^x Z^z.

    Z X = -X Z, so (k, x, z)(k', x', z') = (k + k' + 2 z x', x + x', z + z').
    """

    def multiply(left: Tuple[int, int, int], right: Tuple[int, int, int]) -> Tuple[int, int, int]:
        k1, x1, z1 = left
        k2, x2, z2 = right
        return (k1 + k2 + 2 * z1 * x2) % 4, x1 ^ x2, z1 ^ z2

    elements = list(product(range(4), range(2), range(2)))
    group = regular_representation(
        elements, multiply, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], "Pauli"
    )
    _check_relation(group.order == 16, "|G| = 16", "Pauli")
    return group


def heisenberg(p: int) -> PermGroup:
    """
    Unitriangular 3x3 matrices over F_p acting on column vectors of F_p^3.

    The vector (v0, v1, v2) is point v0 + p v1 + p^2 v2.
    """
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    _check_order_cap(p**3)

    def point(v0: int, v1: int, v2: int) -> int:
        return v0 % p + p * (v1 % p) + p * p * (v2 % p)

    vectors = [(v0, v1, v2) for v2 in range(p) for v1 in range(p) for v0 in range(p)]
    upper = Permutation([point(v0 + v1, v1, v2) for v0, v1, v2 in vectors])
    lower = Permutation([point(v0, v1 + v2, v2) for v0, v1, v2 in vectors])
    return PermGroup([upper, lower], degree=p**3, label=f"Heis({p})")


RECIPES: Dict[str, Callable[..., PermGroup]] = {
    "cyclic": cyclic,
    "abelian": abelian,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "semidihedral": semidihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "semidirect_cyclic": semidirect_cyclic,
    "prop2_group": prop2_group,
    "permutations": from_cycles,
    "pauli": pauli,
    "heisenberg": heisenberg,
}
