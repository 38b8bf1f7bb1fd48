# test_analysis.py
"""
ψ(G) reports, the per-group bounds, the semidirect lemma and the structure
predicates.
"""
from fractions import Fraction

import pytest

from psigroup.analysis.psi import (
    prop5_bound,
    prop210_check,
    psi,
    psi_report,
    psi_semidirect_formula,
    semidirect_lemma_check,
)
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
    structure_report,
    theorem6_conclusions_hold,
    theorem10_conclusion_holds,
    theorem11_conclusion_holds,
)
from psigroup.arith.functions import psi_cyclic
from psigroup.config import settings
from psigroup.exceptions import PreconditionFailed
from psigroup.groups.families import abelian, alternating, cyclic, prop2_group
from psigroup.models.schemas import PsiReport, Theorem6Case


# ============================================================================
# ψ reports
# ============================================================================

def test_psi_values(s3, a5):
    assert psi(s3) == 13
    assert psi(a5) == 211
    assert psi(abelian([2, 2, 2])) == 15
    assert psi(cyclic(4)) == 11


def test_psi_report(s3):
    report = psi_report(s3)
    assert report.psi == 13
    assert report.psi_cn == 21
    assert report.ratio == Fraction(13, 21)
    assert (report.q, report.p) == (2, 3)
    assert not report.cyclic
    assert report.model_dump()["ratio"] == "13/21"


def test_psi_report_for_trivial_and_cyclic_groups():
    trivial = psi_report(cyclic(1))
    assert trivial.q is None and trivial.p is None
    assert trivial.ratio == 1
    assert psi_report(cyclic(12)).ratio == 1


def test_enumerated_cyclic_groups_match_closed_form():
    assert settings.ENUMERATED_CYCLIC_MAX_N <= settings.CLOSED_FORM_MAX_N
    for n in range(1, settings.ENUMERATED_CYCLIC_MAX_N + 1):
        assert psi(cyclic(n)) == psi_cyclic(n), n


def test_psi_report_validation():
    with pytest.raises(ValueError):
        PsiReport(label="bad", n=6, psi=13, psi_cn=21, ratio=Fraction(1, 2), q=2, p=3, cyclic=False)
    with pytest.raises(ValueError):
        PsiReport(label="bad", n=6, psi=13, psi_cn=21, ratio=Fraction(13, 21), q=3, p=2, cyclic=False)


def test_sharp_ratio_at_klein_four():
    report = psi_report(prop2_group(1))
    assert report.ratio == Fraction(7, 11)
    assert psi_report(prop2_group(3)).ratio == Fraction(7, 11)


def test_semidirect_formula():
    # C7 x| C3: psi(P) = 43, |P| = 7, psi(F) = 7, Z trivial
    assert psi_semidirect_formula(43, 7, 7, 1) == 85


# ============================================================================
# Bounds
# ============================================================================

def test_prop5_bound(s3):
    assert prop5_bound(s3) == (Fraction(16), True)
    bound, holds = prop5_bound(abelian([2, 2]))
    assert bound == 7 and holds
    assert psi(abelian([2, 2])) == bound
    with pytest.raises(PreconditionFailed):
        prop5_bound(cyclic(6))


def test_prop210_check(s3, q8):
    assert prop210_check(s3, 3) == (True, False, False)
    assert prop210_check(cyclic(6), 3) == (True, True, True)
    with pytest.raises(PreconditionFailed):
        prop210_check(s3, 2)
    with pytest.raises(PreconditionFailed):
        prop210_check(q8, 2)


# ============================================================================
# Semidirect lemma
# ============================================================================

def test_semidirect_lemma_faithful_action():
    report = semidirect_lemma_check(7, 3, 2)
    assert report.holds
    assert report.centralizer_order == 1
    assert report.psi == report.formula_value == 85
    assert report.upper_bound == 92


def test_semidirect_lemma_frobenius_twenty():
    report = semidirect_lemma_check(5, 4, 2)
    assert report.holds
    assert report.order == 20
    assert report.psi == 71


def test_semidirect_lemma_trivial_action():
    report = semidirect_lemma_check(4, 3, 1)
    assert report.holds
    assert report.centralizer_order == 3
    assert report.psi == psi(cyclic(12))


@pytest.mark.parametrize("m,k,e", [(6, 5, 1), (9, 3, 4), (1, 3, 1), (7, 1, 1)])
def test_semidirect_lemma_preconditions(m, k, e):
    with pytest.raises(PreconditionFailed):
        semidirect_lemma_check(m, k, e)


# ============================================================================
# Hypotheses
# ============================================================================

def test_theorem6_hypotheses():
    assert meets_theorem6_hypothesis(13, 6)
    assert not meets_theorem6_hypothesis(1, 1)
    assert not meets_theorem6_hypothesis(211, 60)
    assert meets_corollary7_hypothesis(13, 6)
    assert meets_corollary7_hypothesis(7, 4)
    assert not meets_corollary7_hypothesis(15, 8)
    # C3 x C3: 4 * 25 >= psi(C9) = 61
    assert meets_corollary8_hypothesis(25, 9)
    assert not meets_corollary8_hypothesis(13, 6)


def test_theorem10_and_theorem11_hypotheses():
    assert meets_theorem10_hypothesis(13, 6)
    assert not meets_theorem10_hypothesis(15, 8)
    assert not meets_theorem10_hypothesis(211, 60)
    assert meets_theorem11_hypothesis(13, 6)
    assert not meets_theorem11_hypothesis(1, 1)


def test_corollary9_threshold():
    assert below_corollary9_threshold(211, 60)
    assert not below_corollary9_threshold(13, 6)


# ============================================================================
# Structure reports
# ============================================================================

def test_structure_of_s3(s3):
    report = structure_report(s3)
    assert report.solvable
    assert report.derived_orders == [6, 3, 1]
    assert report.theorem6_case == Theorem6Case.CASE1
    assert report.cyclic_maximal_indices == [2, 3, 3, 3]
    assert theorem6_conclusions_hold(report)
    assert theorem10_conclusion_holds(report)
    assert theorem11_conclusion_holds(report)


def test_structure_of_a5(a5):
    report = structure_report(a5)
    assert not report.solvable
    assert report.derived_orders == [60, 60]
    assert report.theorem6_case == Theorem6Case.HYPOTHESIS_NOT_MET
    assert not report.second_derived_central
    assert not theorem6_conclusions_hold(report)
    assert not meets_theorem10_hypothesis(psi(a5), 60)


def test_structure_of_trivial_group():
    report = structure_report(cyclic(1))
    assert report.order == 1
    assert report.p is None and report.q is None
    assert report.theorem6_case == Theorem6Case.HYPOTHESIS_NOT_MET


def test_non_cyclic_p_groups_are_prime_power_case(q8):
    for group in (abelian([4, 2]), q8):
        report = structure_report(group)
        assert report.theorem6_hypothesis
        assert report.theorem6_case == Theorem6Case.PRIME_POWER
        assert theorem6_conclusions_hold(report)


def test_structure_search_limit(s4):
    report = structure_report(s4, search_limit=10)
    assert report.cyclic_maximal_indices is None
    assert report.solvable


def test_theorem11_via_cyclic_maximal_subgroup():
    report = structure_report(alternating(4))
    assert not report.sylow_p_normal
    assert report.cyclic_maximal_indices == [4, 4, 4, 4]
    assert theorem11_conclusion_holds(report)
    assert meets_theorem11_hypothesis(psi(alternating(4)), 12)


def test_prop24_check(s3):
    assert prop24_check(structure_report(s3))
    assert prop24_check(structure_report(abelian([2, 2, 2]))) is None


def test_prop25_check(s3):
    assert prop25_check(s3, structure_report(s3))
    a4 = alternating(4)
    assert prop25_check(a4, structure_report(a4))
    elementary = abelian([2, 2, 2])
    assert prop25_check(elementary, structure_report(elementary)) is None


def test_prop26_check(d8, s4):
    assert prop26_check(d8, structure_report(d8))
    assert prop26_check(s4, structure_report(s4)) is None
    elementary = abelian([2, 2, 2])
    assert prop26_check(elementary, structure_report(elementary))
