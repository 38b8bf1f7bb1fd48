# psigroup/arith/functions.py
"""
Exact integer and rational arithmetic behind ψ(C_n).

Every ratio is a ``fractions.Fraction``; nothing here touches floating point.
"""
import functools
import logging
from fractions import Fraction
from math import prod
from typing import Iterable, List, Sequence, Tuple

from sympy import isprime, sieve

from psigroup.exceptions import InvalidParameters
from psigroup.models.schemas import Factorization

logger = logging.getLogger(__name__)

MAX_INPUT = 2**63 - 1
LEMMA28_THRESHOLD = Fraction(5, 6)
RAMANUJAN_LIMIT = Fraction(5, 2)


def _require_positive(n: int, minimum: int = 1) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidParameters(f"expected an integer, got {n!r}")
    if n < minimum:
        raise InvalidParameters(f"expected n >= {minimum}, got {n}")
    if n > MAX_INPUT:
        raise InvalidParameters(f"{n} exceeds the supported range 2^63 - 1")


def is_prime(n: int) -> bool:
    """Deterministic primality for the supported input range; False below 2."""
    return bool(isprime(n))


@functools.lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """
    Factor n by trial division.

    Args:
        n: Positive integer no larger than 2^63 - 1

    Returns:
        Factorization with primes strictly ascending
    """
    _require_positive(n)
    factors: List[Tuple[int, int]] = []
    remaining = n
    for prime in (2, 3):
        exponent = 0
        while remaining % prime == 0:
            remaining //= prime
            exponent += 1
        if exponent:
            factors.append((prime, exponent))
    divisor = 5
    step = 2
    while divisor * divisor <= remaining:
        exponent = 0
        while remaining % divisor == 0:
            remaining //= divisor
            exponent += 1
        if exponent:
            factors.append((divisor, exponent))
        divisor += step
        step = 6 - step
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n=n, factors=tuple(factors))


def euler_phi(n: int) -> int:
    """Euler's totient as n * prod(1 - 1/p) over the prime divisors of n."""
    _require_positive(n)
    result = n
    for prime in factorize(n).primes:
        result = result // prime * (prime - 1)
    return result


def _extreme_primes(n: int) -> Tuple[int, int]:
    _require_positive(n, minimum=2)
    factorization = factorize(n)
    return factorization.smallest_prime, factorization.largest_prime


def phi_lower_bound(n: int) -> Tuple[Fraction, bool]:
    """
    Check φ(n) >= (q - 1) n / p with q, p the smallest and largest prime divisors.

    Returns:
        Tuple of (bound, holds)
    """
    q, p = _extreme_primes(n)
    bound = Fraction((q - 1) * n, p)
    return bound, euler_phi(n) >= bound


def prime_power_psi(p: int, r: int) -> int:
    """ψ of the cyclic group of order p^r, written as (p|P|^2 + 1)/(p + 1)."""
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    if r < 0:
        raise InvalidParameters(f"exponent must be non-negative, got {r}")
    size = p**r
    numerator = p * size * size + 1
    if numerator % (p + 1):
        raise ArithmeticError(f"p + 1 does not divide p|P|^2 + 1 for p={p}, r={r}")
    return numerator // (p + 1)


def psi_cyclic(n: int) -> int:
    """
    Sum of element orders of the cyclic group of order n.

    Multiplicative over the factorization, with factor (p^(2r+1) + 1)/(p + 1)
    for each prime power p^r exactly dividing n.
    """
    _require_positive(n)
    result = 1
    for prime, exponent in factorize(n).factors:
        numerator = prime ** (2 * exponent + 1) + 1
        if numerator % (prime + 1):
            raise ArithmeticError(f"p + 1 does not divide p^(2r+1) + 1 for p={prime}")
        result *= numerator // (prime + 1)
    return result


def divisors(n: int) -> List[int]:
    """All positive divisors of n in ascending order."""
    _require_positive(n)
    result = [1]
    for prime, exponent in factorize(n).factors:
        powers = [prime**i for i in range(exponent + 1)]
        result = [d * power for d in result for power in powers]
    return sorted(result)


def psi_cyclic_by_divisors(n: int) -> int:
    """ψ(C_n) as the sum of d·φ(d) over the divisors d of n."""
    return sum(d * euler_phi(d) for d in divisors(n))


def psi_cyclic_floor(n: int) -> Tuple[Fraction, bool]:
    """
    Check ψ(C_n) >= 2n^2 / (p + 1) with p the largest prime divisor.

    Returns:
        Tuple of (lower, holds)
    """
    _, p = _extreme_primes(n)
    lower = Fraction(2 * n * n, p + 1)
    return lower, psi_cyclic(n) >= lower


def psi_cyclic_exceeds_n_phi(n: int) -> bool:
    _require_positive(n, minimum=2)
    return psi_cyclic(n) > n * euler_phi(n)


def first_primes(count: int) -> List[int]:
    """The first ``count`` primes from the sympy sieve."""
    if count < 1:
        return []
    sieve.extend_to_no(count)
    return [int(prime) for prime in sieve[1 : count + 1]]


def ramanujan_factor(prime: int) -> Fraction:
    square = prime * prime
    return Fraction(square + 1, square - 1)


def ramanujan_partial(s: int) -> Fraction:
    """Product of (q^2 + 1)/(q^2 - 1) over the first s primes."""
    if not isinstance(s, int) or s < 1:
        raise InvalidParameters(f"need at least one prime, got s={s!r}")
    result = Fraction(1)
    for prime in first_primes(s):
        result *= ramanujan_factor(prime)
    return result


def ramanujan_partials(count: int) -> List[Fraction]:
    """Successive partial products for s = 1..count."""
    partials: List[Fraction] = []
    current = Fraction(1)
    for prime in first_primes(count):
        current *= ramanujan_factor(prime)
        partials.append(current)
    return partials


def _product_tree(values: Sequence[int]) -> int:
    if not values:
        return 1
    layer = list(values)
    while len(layer) > 1:
        paired = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            paired.append(layer[-1])
        layer = paired
    return layer[0]


def _ramanujan_terms(prime_limit: int) -> Tuple[int, int]:
    """Unreduced numerator and denominator of the product over primes below the limit."""
    primes = [int(prime) for prime in sieve.primerange(2, prime_limit)]
    logger.info(f"Ramanujan product over {len(primes)} primes below {prime_limit}")
    numerator = _product_tree([prime * prime + 1 for prime in primes])
    denominator = _product_tree([prime * prime - 1 for prime in primes])
    return numerator, denominator


def ramanujan_product_lower_bound_holds(prime_limit: int, bound: Fraction) -> bool:
    """
    Decide whether the product over all primes below ``prime_limit`` exceeds ``bound``.

    Numerator and denominator are multiplied out unreduced and compared by
    cross-multiplication, so no gcd of the huge terms is ever taken.
    """
    numerator, denominator = _ramanujan_terms(prime_limit)
    return numerator * bound.denominator > bound.numerator * denominator


def ramanujan_product_below_limit(prime_limit: int) -> bool:
    """The same product compared strictly against 5/2 from below."""
    numerator, denominator = _ramanujan_terms(prime_limit)
    return numerator * RAMANUJAN_LIMIT.denominator < RAMANUJAN_LIMIT.numerator * denominator


def _validate_prime_list(primes: Iterable[int]) -> List[int]:
    values = list(primes)
    if not values:
        raise InvalidParameters("prime list must be non-empty")
    for prime in values:
        if not is_prime(prime):
            raise InvalidParameters(f"{prime} is not prime")
    if any(later <= earlier for earlier, later in zip(values, values[1:])):
        raise InvalidParameters("primes must be strictly ascending")
    return values


def lemma28_product(primes: Sequence[int]) -> Tuple[Fraction, bool]:
    """
    Product of (p^2 - 1)/(p^2 + 1) over an ascending list of distinct primes.

    Returns:
        Tuple of (value, value > 5/6); the inequality is guaranteed only
        when the smallest prime exceeds 3.
    """
    values = _validate_prime_list(primes)
    value = prod(
        (Fraction(prime * prime - 1, prime * prime + 1) for prime in values),
        start=Fraction(1),
    )
    return value, value > LEMMA28_THRESHOLD
