# psigroup/models/schemas.py
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    computed_field,
    field_serializer,
    field_validator,
    model_validator,
)


class Theorem6Case(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"
    # Non-cyclic group of prime-power order: q = p and the three cases do not apply.
    PRIME_POWER = "prime_power"
    # Hypothesis met but none of the three cases applies.
    NO_CASE = "no_case"


class TheoremId(str, Enum):
    T1 = "T1"
    T3 = "T3"
    C4 = "C4"
    P2 = "P2"
    P5 = "P5"
    T6 = "T6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    T10 = "T10"
    T11 = "T11"
    P2_4 = "P2_4"
    P2_5 = "P2_5"
    P2_6 = "P2_6"
    P2_10 = "P2_10"
    L2_1 = "L2_1"
    L2_2 = "L2_2"
    L2_8 = "L2_8"
    L2_9 = "L2_9"
    P2_7 = "P2_7"


# Only sharp bounds report equality witnesses.
SHARP_THEOREMS = frozenset({TheoremId.T1, TheoremId.P5})


class TableFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class Factorization(BaseModel):
    """Prime-power decomposition of a positive integer, primes ascending."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    factors: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def check_factors(self) -> "Factorization":
        from psigroup.arith.functions import is_prime

        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly ascending")
            if exponent < 1:
                raise ValueError(f"exponent of {prime} must be positive")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            product *= prime**exponent
            previous = prime
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, expected {self.n}")
        return self

    @property
    def primes(self) -> List[int]:
        return [prime for prime, _ in self.factors]

    @property
    def smallest_prime(self) -> Optional[int]:
        return self.factors[0][0] if self.factors else None

    @property
    def largest_prime(self) -> Optional[int]:
        return self.factors[-1][0] if self.factors else None

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def part(self, prime: int) -> int:
        """The exact prime-power part of n for the given prime (1 if absent)."""
        for candidate, exponent in self.factors:
            if candidate == prime:
                return prime**exponent
        return 1


class OrderProfile(BaseModel):
    """Multiset of element orders of a group: order -> number of elements."""

    model_config = ConfigDict(frozen=True)

    group_order: int = Field(..., ge=1)
    pairs: Dict[int, int]

    @model_validator(mode="after")
    def check_profile(self) -> "OrderProfile":
        if sum(self.pairs.values()) != self.group_order:
            raise ValueError("element counts must sum to the group order")
        if self.pairs.get(1) != 1:
            raise ValueError("exactly one element has order 1")
        for order, count in self.pairs.items():
            if count < 1:
                raise ValueError(f"count at order {order} must be positive")
            if self.group_order % order:
                raise ValueError(f"order {order} does not divide {self.group_order}")
        return self

    @property
    def psi(self) -> int:
        return sum(order * count for order, count in self.pairs.items())

    @property
    def max_order(self) -> int:
        return max(self.pairs)

    @property
    def exponent(self) -> int:
        return lcm(*self.pairs)

    def count(self, order: int) -> int:
        return self.pairs.get(order, 0)


class PsiReport(BaseModel):
    """Both sides of the ψ(G) versus ψ(C_n) comparison for one group."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    n: int = Field(..., ge=1)
    psi: int = Field(..., ge=1)
    psi_cn: int = Field(..., ge=1)
    ratio: Fraction
    q: Optional[int] = None
    p: Optional[int] = None
    cyclic: bool

    @model_validator(mode="after")
    def check_report(self) -> "PsiReport":
        if self.ratio != Fraction(self.psi, self.psi_cn):
            raise ValueError("ratio must equal psi / psi_cn")
        if self.cyclic and self.ratio != 1:
            raise ValueError("a cyclic group has ratio 1")
        if self.n == 1:
            if self.q is not None or self.p is not None:
                raise ValueError("q and p are undefined for n = 1")
        elif self.q is None or self.p is None or self.q > self.p:
            raise ValueError("q and p must satisfy q <= p")
        return self

    @field_serializer("ratio")
    def serialize_ratio(self, ratio: Fraction) -> str:
        return format_fraction(ratio)

    @property
    def ratio_num(self) -> int:
        return self.ratio.numerator

    @property
    def ratio_den(self) -> int:
        return self.ratio.denominator


class StructureReport(BaseModel):
    """Solvability, Sylow and nilpotency facts used by Theorems 6, 10 and 11."""

    label: str
    order: int = Field(..., ge=1)
    p: Optional[int] = None
    q: Optional[int] = None
    solvable: bool
    derived_orders: List[int]
    center_order: int
    second_derived_central: bool
    sylow_p_cyclic: bool
    sylow_p_normal: bool
    sylow_has_cyclic_index_p: bool
    sylow_q_cyclic: bool
    q_nilpotent: bool
    p_nilpotent: bool
    theorem6_hypothesis: bool
    theorem6_case: Theorem6Case
    cyclic_maximal_indices: Optional[List[int]] = Field(
        default=None, description="Indices of cyclic maximal subgroups; None when not searched"
    )

    @field_validator("derived_orders")
    @classmethod
    def check_weakly_decreasing(cls, orders: List[int]) -> List[int]:
        if not orders:
            raise ValueError("derived series is never empty")
        if any(later > earlier for earlier, later in zip(orders, orders[1:])):
            raise ValueError("derived orders must be weakly decreasing")
        return orders

    @model_validator(mode="after")
    def check_solvability(self) -> "StructureReport":
        if self.solvable != (self.derived_orders[-1] == 1):
            raise ValueError("solvable iff the derived series reaches 1")
        if self.second_derived_central and not self.solvable:
            raise ValueError("G'' <= Z(G) forces solvability")
        return self


class SemidirectLemmaReport(BaseModel):
    """Element-wise evaluation of the cyclic-by-cyclic semidirect lemma."""

    m: int
    k: int
    e: int
    p: int
    order: int
    centralizer_order: int
    psi: int
    formula_value: int
    upper_bound: int
    part1_trivial_or_fixed_point_free: bool
    part2_power_lands_in_p: bool
    part3_central_orders_multiply: bool
    part4_orders_preserved: bool
    part5_formula_matches: bool
    part5_strict_bound: bool

    @computed_field
    @property
    def holds(self) -> bool:
        return all(
            (
                self.part1_trivial_or_fixed_point_free,
                self.part2_power_lands_in_p,
                self.part3_central_orders_multiply,
                self.part4_orders_preserved,
                self.part5_formula_matches,
                self.part5_strict_bound,
            )
        )


class CatalogEntry(BaseModel):
    """A named recipe for one isomorphism class of small groups."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    recipe: str = Field(..., description="Constructor identifier in psigroup.groups.families")
    params: Dict[str, Any] = Field(default_factory=dict)
    expected_order: int = Field(..., ge=1)


class CorpusRecord(BaseModel):
    """One line of a JSON Lines corpus file."""

    label: str = Field(..., min_length=1)
    degree: int = Field(..., ge=1)
    generators: List[List[int]] = Field(..., min_length=1)

    @field_validator("generators")
    @classmethod
    def check_generators(cls, generators: List[List[int]], info: ValidationInfo) -> List[List[int]]:
        degree = info.data.get("degree")
        if degree is None:
            return generators
        points = list(range(degree))
        for index, images in enumerate(generators):
            if len(images) != degree:
                raise ValueError(f"generator {index} has {len(images)} images, expected {degree}")
            if sorted(images) != points:
                raise ValueError(f"generator {index} is not a bijection on 0..{degree - 1}")
        return generators


class Counterexample(BaseModel):
    label: str
    detail: str


class SkippedEntry(BaseModel):
    label: str
    reason: str


class TheoremCheckResult(BaseModel):
    """Outcome of running one claim over a universe of groups or integers."""

    theorem_id: TheoremId
    description: str
    universe: str
    universe_size: int = 0
    applicable: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    equality_witnesses: List[str] = Field(default_factory=list)
    skipped: List[SkippedEntry] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    elapsed_seconds: float = Field(default=0.0, exclude=True)

    @model_validator(mode="after")
    def check_witnesses(self) -> "TheoremCheckResult":
        if self.equality_witnesses and self.theorem_id not in SHARP_THEOREMS:
            raise ValueError(f"{self.theorem_id.value} does not record equality witnesses")
        return self

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.counterexamples and self.error is None


class TableSummary(BaseModel):
    path: str
    format: TableFormat
    rows: int
