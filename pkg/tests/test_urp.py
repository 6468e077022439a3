import pytest

from orthomodular_py.catalog import boolean_algebra, chain, even_subsets
from orthomodular_py.functors import to_urp
from orthomodular_py.urp import (
    check_divisible,
    check_idempotent,
    check_lemma_lem2,
    check_partial_monoid,
    check_R2,
    check_R3,
    check_R3_dual,
    check_R4,
    check_zero_absorption,
    imp_table_df,
    odot_table_df,
    r3_dual_failing_triples,
    r3_failing_triples,
    validate_urp,
)
from orthomodular_py.utls import UNDEFINED, NotIdempotentError


def _labels(S, *names):
    return tuple(S.poset.element(x) for x in names)


@pytest.fixture
def r3_mutant(ex2):
    a, a_prime = _labels(ex2, "a", "a'")
    return ex2.with_imp(a, a, ex2.poset.subset(a_prime))


def test_example2_is_a_divisible_idempotent_structure(ex2):
    report = validate_urp(
        ex2, require_divisible=True, require_idempotent=True
    )
    assert report.passed, report.to_text()
    assert report.is_divisible
    assert report.is_idempotent
    for law in (
        "monoid-associativity-compatibility",
        "monoid-unit",
        "monoid-commutativity",
        "R2-definedness",
        "R2-monotonicity",
        "R3-forward",
        "R3-backward",
        "R3prime-equivalence",
        "R3-R3prime-agreement",
        "R4",
        "divisibility",
        "idempotence",
        "zero-absorption",
        "lem2-product-is-meet",
    ):
        assert report[law].passed, law
        assert report[law].witnesses == ()


def test_example2_report_text(ex2):
    text = validate_urp(ex2).to_text()
    assert "R3-forward: pass" in text
    assert "divisibility: pass" in text
    assert text.splitlines()[-1] == "RESULT pass 0"


def test_example2_has_no_failing_triples(ex2):
    assert r3_failing_triples(ex2) == set()
    assert r3_dual_failing_triples(ex2) == set()


def test_partial_monoid_with_one_sided_association(es6):
    S = to_urp(es6)
    report = check_partial_monoid(S)
    assert report.passed
    one_sided = report["monoid-one-sided-associativity"]
    assert one_sided.informational
    assert one_sided.n_violations > 0


def test_one_sided_instance_in_even_subsets(es6):
    P = es6
    S = to_urp(P)
    x, y, z = (P.element(s) for s in ("{1,2}", "{1,2,3,4}", "{2,3,4,5}"))
    assert S.odot(S.odot(x, y), z) == P.element("{}")
    assert S.odot(y, z) == UNDEFINED


def test_total_meet_of_boolean_algebra_is_a_monoid():
    S = to_urp(boolean_algebra(3))
    report = check_partial_monoid(S)
    assert report.passed
    assert report["monoid-one-sided-associativity"].n_violations == 0


def test_missing_entry_breaks_r2_definedness(ex2):
    a, a_prime = _labels(ex2, "a", "a'")
    mutant = ex2.with_odot(a_prime, a, UNDEFINED, symmetric=False)
    verdict = check_R2(mutant)["R2-definedness"]
    assert not verdict.passed
    assert verdict.witnesses == ((a_prime, a),)
    assert odot_table_df(mutant).loc["a'", "a"] == "-"


def test_r3_skips_pairs_with_missing_products(ex2):
    a, a_prime = _labels(ex2, "a", "a'")
    mutant = ex2.with_odot(a_prime, a, UNDEFINED)
    verdict = check_R3(mutant)["R3-forward"]
    assert "skipped" in verdict.detail


def test_r2_on_even_subsets(es6):
    assert check_R2(to_urp(es6)).passed


def test_r3_mutant_is_caught(ex2, r3_mutant):
    a = ex2.poset.element("a")
    report = check_R3(r3_mutant)
    assert not report.passed
    failing = r3_failing_triples(r3_mutant)
    assert (ex2.poset.bot, a, a) in failing
    witnesses = (
        report["R3-forward"].witnesses + report["R3-backward"].witnesses
    )
    assert witnesses
    assert all(len(w) == 3 for w in witnesses)


def test_r3_and_dual_agree_on_mutant(r3_mutant):
    assert r3_failing_triples(r3_mutant) == r3_dual_failing_triples(r3_mutant)
    report = check_R3_dual(r3_mutant)
    assert not report["R3prime-equivalence"].passed
    assert report["R3-R3prime-agreement"].passed


def test_r3_on_boolean_algebra():
    assert check_R3(to_urp(boolean_algebra(3))).passed


def test_r4_examples(ex2, es6):
    assert check_R4(ex2).passed
    assert check_R4(to_urp(es6)).passed


def test_divisibility_examples(ex2):
    P = ex2.poset
    a, b = _labels(ex2, "a", "b")
    assert ex2.imp(a, b) == P.subset_of_labels("a'")
    assert ex2.odot(a, P.element("a'")) == P.bot
    assert check_divisible(ex2).passed


def test_idempotence(ex2):
    assert check_idempotent(ex2).passed
    assert check_idempotent(to_urp(boolean_algebra(4))).passed
    a = ex2.poset.element("a")
    mutant = ex2.with_odot(a, a, ex2.poset.bot)
    verdict = check_idempotent(mutant)
    assert verdict.witnesses == ((a,),)


def test_idempotence_is_informational_unless_required(ex2):
    a = ex2.poset.element("a")
    mutant = ex2.with_odot(a, a, ex2.poset.bot)
    relaxed = validate_urp(mutant)
    assert not relaxed.is_idempotent
    assert relaxed["idempotence"].informational
    assert "lem2-product-is-meet" not in relaxed
    strict = validate_urp(mutant, require_idempotent=True)
    assert not strict.passed


def test_lem2_requires_idempotence(ex2):
    a = ex2.poset.element("a")
    mutant = ex2.with_odot(a, a, ex2.poset.bot)
    with pytest.raises(NotIdempotentError):
        check_lemma_lem2(mutant)


def test_lem2_mutant(ex2):
    a, b_prime = _labels(ex2, "a", "b'")
    mutant = ex2.with_odot(a, b_prime, a)
    verdict = check_lemma_lem2(mutant)
    assert not verdict.passed
    assert (a, b_prime) in verdict.witnesses


def test_lem2_on_even_subsets(es6):
    assert check_lemma_lem2(to_urp(es6)).passed


def test_commutativity_mutant(ex2):
    a, b = _labels(ex2, "a", "b")
    mutant = ex2.with_odot(a, b, a, symmetric=False)
    report = validate_urp(mutant)
    assert not report.passed
    assert report["monoid-commutativity"].witnesses == ((a, b),)


def test_symmetric_redefinition_breaks_monotonicity(ex2):
    a, b = _labels(ex2, "a", "b")
    mutant = ex2.with_odot(a, b, a)
    report = validate_urp(mutant)
    assert not report.passed
    assert report["monoid-commutativity"].passed
    assert (a, ex2.poset.top, b) in report["R2-monotonicity"].witnesses


def test_two_chain():
    S = to_urp(chain(2))
    assert validate_urp(
        S, require_divisible=True, require_idempotent=True
    ).passed


def test_zero_absorption(ex2):
    verdict = check_zero_absorption(ex2)
    assert verdict.passed
    assert verdict.informational


def test_tables_as_dataframes(ex2):
    odot = odot_table_df(ex2)
    imp = imp_table_df(ex2)
    assert odot.shape == (6, 6)
    assert odot.loc["a", "a'"] == "0"
    assert imp.loc["1", "a"] == "{0, a}"
    assert imp.loc["a", "a"] == "{a', 1}"


def test_tampering_keeps_the_original(ex2):
    a = ex2.poset.element("a")
    mutant = ex2.with_odot(a, a, ex2.poset.bot)
    assert ex2.odot(a, a) == a
    assert mutant != ex2


def _mutants(ex2):
    P = ex2.poset
    a, a_prime, b = _labels(ex2, "a", "a'", "b")
    return [
        ex2.with_imp(a, a, P.subset(a_prime)),
        ex2.with_imp(P.top, a, P.subset(a)),
        ex2.with_imp(b, P.bot, P.full()),
        ex2.with_odot(a, a, P.bot),
        ex2.with_odot(a, P.top, P.bot),
    ]


def test_r3_and_dual_agree_on_mutants(ex2):
    mutants = _mutants(ex2)
    broken = 0
    for mutant in mutants:
        failing = r3_failing_triples(mutant)
        assert failing == r3_dual_failing_triples(mutant)
        assert check_R3_dual(mutant)["R3-R3prime-agreement"].passed
        broken += bool(failing)
    assert broken >= 3


def test_unit_mutant_breaks_r3(ex2):
    a = ex2.poset.element("a")
    mutant = ex2.with_odot(a, ex2.poset.top, ex2.poset.bot)
    assert (a, ex2.poset.top, a) in check_R3(mutant)["R3-backward"].witnesses
