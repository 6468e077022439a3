import pytest

from orthomodular_py.catalog import boolean_algebra, chain, even_subsets, mo
from orthomodular_py.omp import (
    check_de_morgan,
    check_implication_properties,
    check_lemma1,
    check_orthomodular,
    implication,
    implication_table,
    is_orthomodular,
)
from orthomodular_py.order_core import interval, upper_cone


def test_catalog_posets_are_orthomodular(omp):
    report = check_orthomodular(omp)
    assert report.passed, report.to_text()
    assert report.orthogonal_joins_ok.passed
    assert report.orthomodular_law_ok.passed
    assert report.complementation_ok.passed
    assert report.orthomodular_law_ok.witnesses == ()


def test_example2_poset_is_orthomodular(ex2):
    assert is_orthomodular(ex2.poset)


def test_four_element_boolean_algebra():
    assert check_orthomodular(boolean_algebra(2)).passed


def test_even_subsets_six_is_orthomodular_but_not_a_lattice(es6):
    report = check_orthomodular(es6)
    assert report.passed
    assert es6.n == 32


def test_hexagon_breaks_the_orthomodular_law(hexagon_poset):
    P = hexagon_poset
    report = check_orthomodular(P)
    assert not report.passed
    verdict = report["orthomodular-law"]
    a, b_prime = P.element("a"), P.element("b'")
    assert verdict.witnesses[0] == (a, b_prime)
    # the hexagon is an ortholattice
    assert report.complementation_ok.passed
    assert report.orthogonal_joins_ok.passed
    assert "RESULT fail" in report.to_text()


def test_chain_three_fails_complementation():
    report = check_orthomodular(chain(3))
    assert not report.complementation_ok.passed
    assert report.complementation_ok.witnesses == ((1, 1),)


def test_implication_examples(ex2):
    P = ex2.poset
    a = P.element("a")
    assert implication(P, P.top, a) == P.subset_of_labels("0", "a")
    for x in range(P.n):
        assert implication(P, x, P.bot) == P.subset(P.inv[x])


def test_implication_in_even_subsets_four():
    P = even_subsets(4)
    result = implication(P, P.element("{1,2}"), P.element("{1,3}"))
    assert result == P.subset_of_labels("{3,4}")


def test_implication_contains_the_complement(omp):
    P = omp
    for a in range(P.n):
        for b in range(P.n):
            result = implication(P, a, b)
            assert P.inv[a] in result
            assert result.issubset(upper_cone(P, P.subset(P.inv[a])))
            if P.leq(a, b):
                assert result == interval(P, P.inv[a], P.top)


def test_implication_table_matches_example2(ex2, mo2):
    assert implication_table(mo2) == ex2.imp


def test_lemma1_holds_on_catalog(omp):
    report = check_lemma1(omp)
    assert report.passed, report.to_text()


def test_lemma1_fails_on_hexagon(hexagon_poset):
    P = hexagon_poset
    report = check_lemma1(P, witness_cap=36)
    verdict = report["lemma1-upper"]
    assert not verdict.passed
    assert (P.element("a"), P.element("b'")) in verdict.witnesses


def test_implication_properties_hold_on_catalog(omp):
    report = check_implication_properties(omp)
    assert report.passed, report.to_text()


def test_implication_properties_on_example2(ex2):
    P = ex2.poset
    a, a_prime = P.element("a"), P.element("a'")
    assert implication(P, a, a_prime) == P.subset(a_prime)
    assert implication(P, a, a) == P.subset(a_prime, P.top)
    assert implication(P, P.top, P.top) == P.full()


def test_implication_item_iii_fails_on_hexagon(hexagon_poset):
    P = hexagon_poset
    report = check_implication_properties(P, witness_cap=36)
    assert report["implication-defined"].passed
    verdict = report["implication-iii"]
    assert not verdict.passed
    assert any(w[0] == P.element("b'") for w in verdict.witnesses)


def test_de_morgan_on_catalog(omp):
    assert check_de_morgan(omp).passed


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_mo_family(k):
    P = mo(k)
    assert P.n == 2 * k + 2
    assert is_orthomodular(P)
