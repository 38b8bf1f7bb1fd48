# psigroup/harness/theorems.py
"""
Theorem runners: one registered check per TheoremId.

Group checks evaluate a predicate on every corpus entry (fanned out with
joblib, merged in corpus order); arithmetic checks sweep integers or family
parameters and ignore the corpus.
"""
import logging
import random
import time
from fractions import Fraction
from itertools import repeat
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Union

from joblib import Parallel, delayed
from pydantic import BaseModel

from psigroup.analysis.psi import prop5_bound, prop210_check, psi, semidirect_lemma_check
from psigroup.analysis.structure import (
    below_corollary9_threshold,
    meets_corollary7_hypothesis,
    meets_corollary8_hypothesis,
    meets_theorem6_hypothesis,
    meets_theorem10_hypothesis,
    meets_theorem11_hypothesis,
    prop24_check,
    prop25_check,
    prop26_check,
    theorem6_conclusions_hold,
    theorem10_conclusion_holds,
    theorem11_conclusion_holds,
)
from psigroup.arith.functions import (
    euler_phi,
    factorize,
    first_primes,
    lemma28_product,
    phi_lower_bound,
    prime_power_psi,
    psi_cyclic,
    psi_cyclic_by_divisors,
    psi_cyclic_exceeds_n_phi,
    psi_cyclic_floor,
    ramanujan_partials,
    ramanujan_product_below_limit,
    ramanujan_product_lower_bound_holds,
    RAMANUJAN_LIMIT,
)
from psigroup.config import settings
from psigroup.exceptions import CapExceeded, PreconditionFailed, UnknownTheorem
from psigroup.groups.families import abelian, alternating, cyclic, prop2_group
from psigroup.harness.corpus import Corpus, CorpusEntry
from psigroup.models.schemas import (
    SHARP_THEOREMS,
    Counterexample,
    SkippedEntry,
    TheoremCheckResult,
    TheoremId,
)

logger = logging.getLogger(__name__)

SEVEN_ELEVENTHS = Fraction(7, 11)


class EntryVerdict(BaseModel):
    """Outcome of one claim on one corpus entry."""

    label: str
    applicable: bool = True
    counterexample: Optional[str] = None
    witness: bool = False
    skip_reason: Optional[str] = None

    @classmethod
    def skip(cls, label: str, reason: str) -> "EntryVerdict":
        return cls(label=label, applicable=False, skip_reason=reason)


class SweepOutcome(BaseModel):
    """What an arithmetic check found over its own universe."""

    universe: str
    size: int
    counterexamples: List[Counterexample] = []


# ============================================================================
# Runners
# ============================================================================

class TheoremRunner:
    """A registered claim with its description; subclasses decide the universe."""

    def __init__(self, theorem_id: TheoremId, description: str):
        self.theorem_id = theorem_id
        self.description = description

    def run(self, corpus: Corpus, workers: Optional[int] = None) -> TheoremCheckResult:
        started = time.perf_counter()
        result = TheoremCheckResult(
            theorem_id=self.theorem_id, description=self.description, universe=""
        )
        logger.info(f"Checking {self.theorem_id.value}: {self.description}")
        try:
            self._fill(result, corpus, workers)
        except Exception as e:
            result.error = f"{type(e).__name__}: {e}"
            logger.error(f"{self.theorem_id.value} failed: {result.error}")
        if result.error is None and result.applicable == 0:
            warning = f"{self.theorem_id.value}: no applicable entries in {result.universe}, passed vacuously"
            result.warnings.append(warning)
            logger.warning(warning)
        for counterexample in result.counterexamples:
            logger.error(f"{self.theorem_id.value} counterexample {counterexample.label}: {counterexample.detail}")
        result.elapsed_seconds = time.perf_counter() - started
        logger.info(
            f"{self.theorem_id.value}: {result.applicable}/{result.universe_size} applicable, "
            f"{len(result.counterexamples)} counterexamples in {result.elapsed_seconds:.2f}s"
        )
        return result

    def _fill(self, result: TheoremCheckResult, corpus: Corpus, workers: Optional[int]) -> None:
        raise NotImplementedError


class GroupCheck(TheoremRunner):
    """A predicate evaluated on every corpus entry."""

    def __init__(
        self,
        theorem_id: TheoremId,
        description: str,
        evaluate: Callable[[CorpusEntry], EntryVerdict],
        extra: Optional[Callable[[], List[Counterexample]]] = None,
    ):
        super().__init__(theorem_id, description)
        self.evaluate = evaluate
        self.extra = extra

    def _evaluate_safely(self, entry: CorpusEntry) -> EntryVerdict:
        try:
            return self.evaluate(entry)
        except CapExceeded as e:
            return EntryVerdict.skip(entry.label, f"cap exceeded: {e}")

    def _fill(self, result: TheoremCheckResult, corpus: Corpus, workers: Optional[int]) -> None:
        workers = workers if workers is not None else settings.WORKERS
        result.universe = f"{corpus.source} corpus"
        result.universe_size = len(corpus)
        verdicts = Parallel(n_jobs=workers, prefer="threads")(
            delayed(self._evaluate_safely)(entry) for entry in corpus
        )
        for verdict in verdicts:
            if not verdict.applicable:
                result.skipped.append(SkippedEntry(label=verdict.label, reason=verdict.skip_reason))
                logger.debug(f"{self.theorem_id.value} skipped {verdict.label}: {verdict.skip_reason}")
                continue
            result.applicable += 1
            if verdict.counterexample is not None:
                result.counterexamples.append(
                    Counterexample(label=verdict.label, detail=verdict.counterexample)
                )
            if verdict.witness and self.theorem_id in SHARP_THEOREMS:
                result.equality_witnesses.append(verdict.label)
        if self.extra is not None:
            result.counterexamples.extend(self.extra())


class SweepCheck(TheoremRunner):
    """A claim over integers or family parameters, independent of the corpus."""

    def __init__(self, theorem_id: TheoremId, description: str, sweep: Callable[[], SweepOutcome]):
        super().__init__(theorem_id, description)
        self.sweep = sweep

    def _fill(self, result: TheoremCheckResult, corpus: Corpus, workers: Optional[int]) -> None:
        outcome = self.sweep()
        result.universe = outcome.universe
        result.universe_size = outcome.size
        result.applicable = outcome.size
        result.counterexamples.extend(outcome.counterexamples)


# ============================================================================
# Per-entry predicates
# ============================================================================

def _non_cyclic(entry: CorpusEntry) -> Optional[EntryVerdict]:
    report = entry.psi_report
    if report.n == 1:
        return EntryVerdict.skip(entry.label, "trivial group")
    if report.cyclic:
        return EntryVerdict.skip(entry.label, "cyclic")
    return None


def _check_theorem1(entry: CorpusEntry) -> EntryVerdict:
    skipped = _non_cyclic(entry)
    if skipped:
        return skipped
    ratio = entry.psi_report.ratio
    if ratio > SEVEN_ELEVENTHS:
        return EntryVerdict(label=entry.label, counterexample=f"ratio {ratio} > 7/11")
    return EntryVerdict(label=entry.label, witness=ratio == SEVEN_ELEVENTHS)


def _check_theorem3(entry: CorpusEntry) -> EntryVerdict:
    skipped = _non_cyclic(entry)
    if skipped:
        return skipped
    report = entry.psi_report
    if report.psi >= report.psi_cn:
        return EntryVerdict(label=entry.label, counterexample=f"psi {report.psi} >= psi(C_n) {report.psi_cn}")
    if report.psi * (report.q - 1) >= report.psi_cn:
        return EntryVerdict(
            label=entry.label, counterexample=f"ratio {report.ratio} >= 1/{report.q - 1}"
        )
    return EntryVerdict(label=entry.label)


def _check_corollary4(entry: CorpusEntry) -> EntryVerdict:
    skipped = _non_cyclic(entry)
    if skipped:
        return skipped
    report = entry.psi_report
    if report.n % 2 == 0:
        return EntryVerdict.skip(entry.label, "even order")
    if 2 * report.psi >= report.psi_cn:
        return EntryVerdict(label=entry.label, counterexample=f"ratio {report.ratio} >= 1/2")
    return EntryVerdict(label=entry.label)


def _check_prop5(entry: CorpusEntry) -> EntryVerdict:
    skipped = _non_cyclic(entry)
    if skipped:
        return skipped
    bound, holds = prop5_bound(entry.group)
    value = entry.psi_report.psi
    if not holds:
        return EntryVerdict(label=entry.label, counterexample=f"psi {value} vs bound {bound}")
    return EntryVerdict(label=entry.label, witness=value == bound)


def _theorem6_style(
    hypothesis: Callable[[int, int], bool], requirement: str
) -> Callable[[CorpusEntry], EntryVerdict]:
    def evaluate(entry: CorpusEntry) -> EntryVerdict:
        report = entry.psi_report
        if not hypothesis(report.psi, report.n):
            return EntryVerdict.skip(entry.label, f"{requirement} not met")
        structure = entry.structure
        if not theorem6_conclusions_hold(structure):
            return EntryVerdict(
                label=entry.label,
                counterexample=(
                    f"solvable={structure.solvable}, "
                    f"cyclic index p={structure.sylow_has_cyclic_index_p}, "
                    f"case={structure.theorem6_case.value}"
                ),
            )
        return EntryVerdict(label=entry.label)

    return evaluate


def _check_corollary9(entry: CorpusEntry) -> EntryVerdict:
    report = entry.psi_report
    if report.n == 1:
        return EntryVerdict.skip(entry.label, "trivial group")
    structure = entry.structure
    if structure.solvable and structure.sylow_has_cyclic_index_p:
        return EntryVerdict.skip(entry.label, "solvable with a cyclic subgroup of index p in its Sylow p-subgroup")
    if not below_corollary9_threshold(report.psi, report.n):
        return EntryVerdict(
            label=entry.label,
            counterexample=f"psi {report.psi} >= psi(C_n)/(2(q-1)) with psi(C_n) = {report.psi_cn}",
        )
    return EntryVerdict(label=entry.label)


def _check_theorem10(entry: CorpusEntry) -> EntryVerdict:
    report = entry.psi_report
    if not meets_theorem10_hypothesis(report.psi, report.n):
        return EntryVerdict.skip(entry.label, "psi < (3/5) n phi(n)")
    structure = entry.structure
    if not theorem10_conclusion_holds(structure):
        return EntryVerdict(
            label=entry.label,
            counterexample=f"solvable={structure.solvable}, G'' central={structure.second_derived_central}",
        )
    return EntryVerdict(label=entry.label)


def _theorem10_contrasts() -> List[Counterexample]:
    """ψ(C2^3) = 15 misses the hypothesis at n = 8; ψ(A5) = 211 exceeds (1/5) 60 φ(60) = 192."""
    found = []
    elementary = psi(abelian([2, 2, 2]))
    if elementary != 15 or meets_theorem10_hypothesis(elementary, 8):
        found.append(Counterexample(label="C2xC2xC2", detail=f"psi = {elementary}, expected 15 < 96/5"))
    a5 = psi(alternating(5))
    if a5 != 211 or 5 * a5 <= 60 * euler_phi(60):
        found.append(Counterexample(label="A5", detail=f"psi = {a5}, expected 211 > 192"))
    return found


def _check_theorem11(entry: CorpusEntry) -> EntryVerdict:
    report = entry.psi_report
    if not meets_theorem11_hypothesis(report.psi, report.n):
        return EntryVerdict.skip(entry.label, "psi < (1/q) n phi(n)")
    verdict = theorem11_conclusion_holds(entry.structure)
    if verdict is None:
        return EntryVerdict.skip(entry.label, "above the subgroup search limit")
    if not verdict:
        return EntryVerdict(
            label=entry.label,
            counterexample=f"no normal cyclic Sylow p-subgroup and cyclic maximal indices {entry.structure.cyclic_maximal_indices}",
        )
    return EntryVerdict(label=entry.label)


def _check_prop24(entry: CorpusEntry) -> EntryVerdict:
    structure = entry.structure
    if structure.cyclic_maximal_indices is None:
        return EntryVerdict.skip(entry.label, "above the subgroup search limit")
    verdict = prop24_check(structure)
    if verdict is None:
        return EntryVerdict.skip(entry.label, "no cyclic maximal subgroup")
    if not verdict:
        return EntryVerdict(
            label=entry.label,
            counterexample=f"solvable={structure.solvable}, G'' central={structure.second_derived_central}",
        )
    return EntryVerdict(label=entry.label)


def _check_prop25(entry: CorpusEntry) -> EntryVerdict:
    if entry.order == 1:
        return EntryVerdict.skip(entry.label, "trivial group")
    verdict = prop25_check(entry.group, entry.structure)
    if verdict is None:
        return EntryVerdict.skip(entry.label, "no <x> of index below 2p, or above the search limit")
    if not verdict:
        return EntryVerdict(label=entry.label, counterexample="a cyclic subgroup of index < 2p is not maximal of index p or p+1")
    return EntryVerdict(label=entry.label)


def _check_prop26(entry: CorpusEntry) -> EntryVerdict:
    if entry.order == 1:
        return EntryVerdict.skip(entry.label, "trivial group")
    verdict = prop26_check(entry.group, entry.structure)
    if verdict is None:
        return EntryVerdict.skip(entry.label, "no qualifying cyclic subgroup")
    if not verdict:
        return EntryVerdict(label=entry.label, counterexample="G'' is not central")
    return EntryVerdict(label=entry.label)


def _check_prop210(entry: CorpusEntry) -> EntryVerdict:
    n = entry.order
    if n == 1:
        return EntryVerdict.skip(entry.label, "trivial group")
    problems = []
    applicable = False
    for p in factorize(n).primes:
        try:
            inequality, equality, central = prop210_check(entry.group, p)
        except PreconditionFailed:
            continue
        applicable = True
        if not inequality:
            problems.append(f"p={p}: psi(G) > psi(P) psi(G/P)")
        if equality != central:
            problems.append(f"p={p}: equality={equality} but central={central}")
    if not applicable:
        return EntryVerdict.skip(entry.label, "no cyclic normal Sylow subgroup")
    if problems:
        return EntryVerdict(label=entry.label, counterexample="; ".join(problems))
    return EntryVerdict(label=entry.label)


# ============================================================================
# Sweeps
# ============================================================================

def _collect(failures: Iterable[Counterexample], universe: str, size: int) -> SweepOutcome:
    return SweepOutcome(universe=universe, size=size, counterexamples=list(failures))


def _sweep_prop2() -> SweepOutcome:
    failures = []
    values = list(range(1, settings.PROP2_MAX_K + 1, 2))
    for k in values:
        psi_k = psi_cyclic(k)
        psi_4k = psi_cyclic(4 * k)
        psi_g = psi(prop2_group(k))
        label = f"k={k}"
        if psi_4k != 11 * psi_k:
            failures.append(Counterexample(label=label, detail=f"psi(C_4k) = {psi_4k} != 11 * {psi_k}"))
        if psi_g != 7 * psi_k:
            failures.append(Counterexample(label=label, detail=f"psi(C_2k x C_2) = {psi_g} != 7 * {psi_k}"))
        if Fraction(psi_g, psi_4k) != SEVEN_ELEVENTHS:
            failures.append(Counterexample(label=label, detail=f"ratio {Fraction(psi_g, psi_4k)} != 7/11"))
    return _collect(failures, f"odd k = 1..{settings.PROP2_MAX_K}", len(values))


def _gcd_count(n: int) -> int:
    return list(map(gcd, range(1, n + 1), repeat(n))).count(1)


def _sweep_lemma21() -> SweepOutcome:
    failures = []
    for n in range(1, settings.PHI_ORACLE_MAX_N + 1):
        if euler_phi(n) != _gcd_count(n):
            failures.append(Counterexample(label=f"n={n}", detail="phi disagrees with the gcd count"))
    for n in range(2, settings.LEMMA21_MAX_N + 1):
        bound, holds = phi_lower_bound(n)
        if not holds:
            failures.append(Counterexample(label=f"n={n}", detail=f"phi = {euler_phi(n)} < {bound}"))
    return _collect(failures, f"n = 2..{settings.LEMMA21_MAX_N}", settings.LEMMA21_MAX_N - 1)


def _sweep_lemma22() -> SweepOutcome:
    failures = []
    size = 0
    for m in range(2, settings.LEMMA22_MAX_M + 1):
        factorization = factorize(m)
        if not factorization.is_prime_power:
            continue
        p = factorization.smallest_prime
        for k in range(2, settings.LEMMA22_MAX_K + 1):
            if k % p == 0:
                continue
            for e in range(1, m):
                if gcd(e, m) != 1 or pow(e, k, m) != 1:
                    continue
                size += 1
                report = semidirect_lemma_check(m, k, e)
                if not report.holds:
                    failures.append(
                        Counterexample(
                            label=f"C{m}:C{k}(e={e})",
                            detail=report.model_dump_json(include={
                                "part1_trivial_or_fixed_point_free",
                                "part2_power_lands_in_p",
                                "part3_central_orders_multiply",
                                "part4_orders_preserved",
                                "part5_formula_matches",
                                "part5_strict_bound",
                            }),
                        )
                    )
    universe = f"prime powers m <= {settings.LEMMA22_MAX_M}, 2 <= k <= {settings.LEMMA22_MAX_K}, all valid e"
    return _collect(failures, universe, size)


def _sweep_lemma28() -> SweepOutcome:
    failures = []
    rng = random.Random(settings.RANDOM_SEED)
    pool = [prime for prime in first_primes(200) if prime > 3]
    for sample in range(settings.LEMMA28_SAMPLES):
        primes = sorted(rng.sample(pool, rng.randint(1, 50)))
        value, holds = lemma28_product(primes)
        if not holds:
            failures.append(Counterexample(label=f"sample {sample}", detail=f"{primes}: {value} <= 5/6"))
    return _collect(failures, f"{settings.LEMMA28_SAMPLES} random prime lists above 3", settings.LEMMA28_SAMPLES)


def _sweep_lemma29() -> SweepOutcome:
    failures = []
    limit = settings.CLOSED_FORM_MAX_N
    for n in range(1, limit + 1):
        value = psi_cyclic(n)
        brute = sum(n // gcd(k, n) for k in range(1, n + 1))
        if value != brute or value != psi_cyclic_by_divisors(n):
            failures.append(Counterexample(label=f"n={n}", detail=f"closed form {value}, brute force {brute}"))
        for prime, exponent in factorize(n).factors:
            if prime_power_psi(prime, exponent) != psi_cyclic(prime**exponent):
                failures.append(Counterexample(label=f"n={n}", detail=f"closed forms disagree at {prime}^{exponent}"))
        if n >= 2:
            lower, holds = psi_cyclic_floor(n)
            if not holds:
                failures.append(Counterexample(label=f"n={n}", detail=f"psi {value} < {lower}"))
            if not psi_cyclic_exceeds_n_phi(n):
                failures.append(Counterexample(label=f"n={n}", detail="psi(C_n) <= n phi(n)"))
        if n <= settings.ENUMERATED_CYCLIC_MAX_N and psi(cyclic(n)) != value:
            failures.append(Counterexample(label=f"n={n}", detail="enumerated psi(C_n) disagrees"))
    return _collect(failures, f"n = 1..{limit}", limit)


def _sweep_prop27() -> SweepOutcome:
    failures = []
    partials = ramanujan_partials(settings.RAMANUJAN_TERMS)
    for s, (earlier, later) in enumerate(zip(partials, partials[1:]), start=1):
        if later <= earlier:
            failures.append(Counterexample(label=f"s={s + 1}", detail="partial products not increasing"))
    for s, value in enumerate(partials, start=1):
        if value >= RAMANUJAN_LIMIT:
            failures.append(Counterexample(label=f"s={s}", detail=f"partial product {value} >= 5/2"))
    limit = settings.RAMANUJAN_PRIME_LIMIT
    if not ramanujan_product_lower_bound_holds(limit, RAMANUJAN_LIMIT - Fraction(1, 2000)):
        failures.append(Counterexample(label=f"primes < {limit}", detail="product not within 1/2000 of 5/2"))
    if not ramanujan_product_below_limit(limit):
        failures.append(Counterexample(label=f"primes < {limit}", detail="product reaches 5/2"))
    return _collect(failures, f"first {settings.RAMANUJAN_TERMS} partial products and all primes below {limit}", len(partials) + 1)


# ============================================================================
# Registry
# ============================================================================

RUNNERS: Dict[TheoremId, TheoremRunner] = {
    runner.theorem_id: runner
    for runner in (
        GroupCheck(TheoremId.T1, "psi(G) <= (7/11) psi(C_n) for non-cyclic G", _check_theorem1),
        GroupCheck(TheoremId.T3, "psi(G) < psi(C_n)/(q-1) for non-cyclic G", _check_theorem3),
        GroupCheck(TheoremId.C4, "psi(G) < psi(C_n)/2 for non-cyclic G of odd order", _check_corollary4),
        SweepCheck(TheoremId.P2, "psi(C_4k) = 11 psi(C_k) and psi(C_2k x C_2) = 7 psi(C_k) for odd k", _sweep_prop2),
        GroupCheck(TheoremId.P5, "psi(G) <= (n-1)n/q + 1 < n^2/q for non-cyclic G", _check_prop5),
        GroupCheck(
            TheoremId.T6,
            "psi(G) >= psi(C_n)/(2(q-1)) implies solvable, cyclic index p in Sylow p, and one of three cases",
            _theorem6_style(meets_theorem6_hypothesis, "psi >= psi(C_n)/(2(q-1))"),
        ),
        GroupCheck(
            TheoremId.C7,
            "psi(G) >= psi(C_n)/q implies the conclusions of the psi(C_n)/(2(q-1)) theorem",
            _theorem6_style(meets_corollary7_hypothesis, "psi >= psi(C_n)/q"),
        ),
        GroupCheck(
            TheoremId.C8,
            "odd order and psi(G) >= psi(C_n)/(q+1) implies the same conclusions",
            _theorem6_style(meets_corollary8_hypothesis, "odd order with psi >= psi(C_n)/(q+1)"),
        ),
        GroupCheck(
            TheoremId.C9,
            "non-solvable or no cyclic index-p subgroup in Sylow p implies psi(G) < psi(C_n)/(2(q-1))",
            _check_corollary9,
        ),
        GroupCheck(
            TheoremId.T10,
            "psi(G) >= (3/5) n phi(n) implies solvable with G'' <= Z(G)",
            _check_theorem10,
            extra=_theorem10_contrasts,
        ),
        GroupCheck(
            TheoremId.T11,
            "psi(G) >= (1/q) n phi(n) implies a normal cyclic Sylow p or a cyclic maximal subgroup of index p or p+1",
            _check_theorem11,
        ),
        GroupCheck(TheoremId.P2_4, "a cyclic maximal subgroup implies solvable with G'' <= Z(G)", _check_prop24),
        GroupCheck(
            TheoremId.P2_5,
            "[G:<x>] < 2p implies a normal cyclic Sylow p or <x> maximal of index p or p+1",
            _check_prop25,
        ),
        GroupCheck(
            TheoremId.P2_6,
            "2-groups with cyclic index 4 and {2,3}-groups with cyclic index < 6 have G'' <= Z(G)",
            _check_prop26,
        ),
        GroupCheck(
            TheoremId.P2_10,
            "cyclic normal Sylow P: psi(G) <= psi(P) psi(G/P), equality iff P central",
            _check_prop210,
        ),
        SweepCheck(TheoremId.L2_1, "phi(n) >= (q-1) n / p", _sweep_lemma21),
        SweepCheck(TheoremId.L2_2, "psi of C_m x| C_k by the semidirect formula, parts 1-5", _sweep_lemma22),
        SweepCheck(TheoremId.L2_8, "prod (p^2-1)/(p^2+1) > 5/6 over primes above 3", _sweep_lemma28),
        SweepCheck(TheoremId.L2_9, "closed forms and lower bounds for psi(C_n)", _sweep_lemma29),
        SweepCheck(TheoremId.P2_7, "prod (q^2+1)/(q^2-1) increases to 5/2", _sweep_prop27),
    )
}


def _resolve(theorem_id: Union[TheoremId, str]) -> TheoremRunner:
    try:
        key = TheoremId(theorem_id)
    except ValueError:
        raise UnknownTheorem(f"unknown theorem '{theorem_id}'") from None
    if key not in RUNNERS:
        raise UnknownTheorem(f"no runner registered for '{key.value}'")
    return RUNNERS[key]


def check_theorem(
    theorem_id: Union[TheoremId, str], corpus: Corpus, workers: Optional[int] = None
) -> TheoremCheckResult:
    """Run one registered check over ``corpus`` (sweep checks ignore it)."""
    return _resolve(theorem_id).run(corpus, workers)


def run_all(
    corpus: Corpus,
    workers: Optional[int] = None,
    theorem_ids: Optional[Iterable[Union[TheoremId, str]]] = None,
) -> List[TheoremCheckResult]:
    """Every registered check in identifier order; failures do not stop later checks."""
    selected = list(theorem_ids) if theorem_ids is not None else list(TheoremId)
    results = [check_theorem(theorem_id, corpus, workers) for theorem_id in selected]
    failed = [result.theorem_id.value for result in results if not result.passed]
    if failed:
        logger.error(f"Checks with counterexamples or errors: {', '.join(failed)}")
    return results
