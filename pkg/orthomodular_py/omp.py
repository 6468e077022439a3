# File Name: `omp.py`
# Purpose: Houses the orthomodular poset axiom checks,
#     the subset-valued implication `x -> y := x' v L(x,y)`,
#     and the exhaustive checks of the cone decomposition lemma
#     and of the properties of the implication.
# Creation Date: 2026-10-19 11:05 AM EDT
# Update History:
# - 2026-10-19 11:05 AM EDT
# - 2026-10-19 05:30 PM EDT
# - 2026-10-19 09:20 PM EDT


from dataclasses import dataclass

from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    Subset,
    interval,
    lift_join,
    lift_meet,
    lower_cone,
    upper_cone,
)
from orthomodular_py.urp import SetValuedBinaryOp
from orthomodular_py.utls import (
    DEFAULT_WITNESS_CAP,
    UNDEFINED,
    LawVerdict,
    PartialityError,
    ValidationReport,
    _WitnessCollector,
)

ORTHOMODULAR_LAWS = (
    "orthomodular-meet-defined",
    "orthomodular-join-defined",
    "orthomodular-law",
)


@dataclass
class OmpReport(ValidationReport):
    """
    The report of `check_orthomodular()`.

    Clause (b) of the definition is split into three verdicts,
    so that a missing meet, a missing join, and a wrong join
    are reported separately. Every witness is a pair; for
    `complementation` it is `(x, x')`.
    """

    @property
    def orthogonal_joins_ok(self) -> LawVerdict:
        return self["orthogonal-joins"]

    @property
    def orthomodular_law_ok(self) -> LawVerdict:
        return _combine("orthomodular", [self[x] for x in ORTHOMODULAR_LAWS])

    @property
    def complementation_ok(self) -> LawVerdict:
        return self["complementation"]


def _combine(law: str, verdicts: list) -> LawVerdict:
    witnesses = []
    for v in verdicts:
        witnesses.extend(v.witnesses)
    return LawVerdict(
        law=law,
        passed=all(v.passed for v in verdicts),
        witnesses=tuple(witnesses),
        n_violations=sum(v.n_violations for v in verdicts),
        detail="; ".join(v.detail for v in verdicts if v.detail),
    )


def check_orthomodular(
    P: BoundedInvolutivePoset,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> OmpReport:
    """
    Checks whether a bounded poset with an antitone involution
    is an orthomodular poset.

    Parameters
    ----------
    `P` (BoundedInvolutivePoset, mandatory):
        Required argument.
        A validated bounded poset with an antitone involution.

    `witness_cap` (int, optional):
        Optional argument.
        How many witnesses are kept per law.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import even_subsets
    from orthomodular_py.omp import check_orthomodular

    report = check_orthomodular(even_subsets(6))
    print(report.to_text())
    ```

    Returns
    ----------
    An `OmpReport` with the verdicts
    `orthogonal-joins` (x <= y' implies x v y exists),
    `orthomodular-meet-defined`, `orthomodular-join-defined`,
    `orthomodular-law` (x <= y implies y = x v (y ^ x')),
    and `complementation` (x v x' = 1 and x ^ x' = 0).
    """
    n = P.n
    inv = P.inv
    meet = P.meet_table
    join = P.join_table

    orthogonal = _WitnessCollector("orthogonal-joins", witness_cap)
    meet_missing = _WitnessCollector("orthomodular-meet-defined", witness_cap)
    join_missing = _WitnessCollector("orthomodular-join-defined", witness_cap)
    law = _WitnessCollector("orthomodular-law", witness_cap)
    complementation = _WitnessCollector("complementation", witness_cap)

    for x in range(n):
        for y in range(n):
            if P.leq(x, inv[y]) and join(x, y) == UNDEFINED:
                orthogonal.add(x, y)
            if P.leq(x, y):
                m = meet(y, inv[x])
                if m == UNDEFINED:
                    meet_missing.add(x, y)
                    continue
                j = join(x, m)
                if j == UNDEFINED:
                    join_missing.add(x, y)
                elif j != y:
                    law.add(x, y)

    for x in range(n):
        if join(x, inv[x]) != P.top or meet(x, inv[x]) != P.bot:
            complementation.add(x, inv[x])

    report = OmpReport(
        title=f"orthomodular poset {P.name}".strip(), labels=P.labels
    )
    report.add(orthogonal.verdict())
    report.add(meet_missing.verdict())
    report.add(join_missing.verdict())
    report.add(law.verdict())
    report.add(complementation.verdict())
    return report


def is_orthomodular(P: BoundedInvolutivePoset) -> bool:
    return check_orthomodular(P, witness_cap=1).passed


def implication(P: BoundedInvolutivePoset, a: int, b: int) -> Subset:
    """
    Returns the subset-valued implication `a -> b := a' v L(a, b)`.

    In an orthomodular poset every `t` in `L(a, b)` satisfies
    `t <= a = (a')'`, so each `t v a'` exists and the result always
    contains `a'`.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import mo
    from orthomodular_py.omp import implication

    P = mo(2)
    result = implication(P, P.top, P.element("a"))
    print(result.render(P.labels))  # {0, a}
    ```

    Returns
    ----------
    A `Subset`. Raises a `PartialityError` if some required join
    is missing, which means `P` is not orthomodular.
    """
    return lift_join(P, lower_cone(P, P.subset(a, b)), P.inv[a])


def implication_table(P: BoundedInvolutivePoset) -> SetValuedBinaryOp:
    n = P.n
    return SetValuedBinaryOp(
        tuple(
            tuple(implication(P, a, b) for b in range(n)) for a in range(n)
        )
    )


def check_de_morgan(
    P: BoundedInvolutivePoset,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks `(x v y)' = x' ^ y'` for orthogonal `x, y`
    and `(x ^ y)' = x' v y'` whenever `x' <= y`,
    together with the existence of every term.
    """
    n = P.n
    inv = P.inv
    meet = P.meet_table
    join = P.join_table

    joins = _WitnessCollector("de-morgan-join", witness_cap)
    meets = _WitnessCollector("de-morgan-meet", witness_cap)

    for x in range(n):
        for y in range(n):
            if P.leq(x, inv[y]):
                j = join(x, y)
                m = meet(inv[x], inv[y])
                if j == UNDEFINED or m == UNDEFINED or inv[j] != m:
                    joins.add(x, y)
            if P.leq(inv[x], y):
                m = meet(x, y)
                j = join(inv[x], inv[y])
                if j == UNDEFINED or m == UNDEFINED or inv[m] != j:
                    meets.add(x, y)

    report = ValidationReport(title="De Morgan laws", labels=P.labels)
    report.add(joins.verdict())
    report.add(meets.verdict())
    return report


def check_lemma1(
    P: BoundedInvolutivePoset,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks the two cone decompositions
    `U(a,b) = a v (U(a,b) ^ a')` and `L(a,b) = b ^ (L(a,b) v b')`
    for every pair `(a, b)`, as set equalities where every
    partial operation involved must be defined.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import even_subsets
    from orthomodular_py.omp import check_lemma1

    print(check_lemma1(even_subsets(6)).to_text())
    ```

    Returns
    ----------
    A `ValidationReport` with the verdicts `lemma1-upper`
    and `lemma1-lower`, witnessed by pairs `(a, b)`.
    """
    n = P.n
    inv = P.inv
    upper = _WitnessCollector("lemma1-upper", witness_cap)
    lower = _WitnessCollector("lemma1-lower", witness_cap)
    upper_undefined = 0
    lower_undefined = 0

    for a in range(n):
        for b in range(n):
            pair = P.subset(a, b)

            U = upper_cone(P, pair)
            try:
                rhs = lift_join(P, lift_meet(P, U, inv[a]), a)
            except PartialityError:
                upper_undefined += 1
                upper.add(a, b)
            else:
                if rhs != U:
                    upper.add(a, b)

            L = lower_cone(P, pair)
            try:
                rhs = lift_meet(P, lift_join(P, L, inv[b]), b)
            except PartialityError:
                lower_undefined += 1
                lower.add(a, b)
            else:
                if rhs != L:
                    lower.add(a, b)

    report = ValidationReport(title="cone decomposition", labels=P.labels)
    report.add(
        upper.verdict(
            f"{upper_undefined} undefined term(s)" if upper_undefined else ""
        )
    )
    report.add(
        lower.verdict(
            f"{lower_undefined} undefined term(s)" if lower_undefined else ""
        )
    )
    return report


def check_implication_properties(
    P: BoundedInvolutivePoset,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks, for all `x, y`:

    - (i) `x -> 0 = {x'}`
    - (ii) `1 -> x = L(x)`
    - (iii) `x <= y` implies `x -> y = [x', 1]`
    - (iv) `x <= y` implies `U(x -> y) = {1}`
    - (v) `x -> x' = {x'}`

    Every item is treated as a set equality.
    Pairs where the implication itself is undefined are reported
    under `implication-defined` and skipped by the other items.

    Returns
    ----------
    A `ValidationReport` with the verdicts `implication-defined`
    and `implication-i` through `implication-v`.
    """
    n = P.n
    inv = P.inv
    bot, top = P.bot, P.top

    defined = _WitnessCollector("implication-defined", witness_cap)
    items = {
        key: _WitnessCollector(f"implication-{key}", witness_cap)
        for key in ("i", "ii", "iii", "iv", "v")
    }

    table = {}
    for x in range(n):
        for y in range(n):
            try:
                table[x, y] = implication(P, x, y)
            except PartialityError:
                defined.add(x, y)

    only_top = P.subset(top)
    for x in range(n):
        x_prime_only = P.subset(inv[x])
        if (x, bot) in table and table[x, bot] != x_prime_only:
            items["i"].add(x, bot)
        if (top, x) in table and table[top, x] != lower_cone(P, P.subset(x)):
            items["ii"].add(top, x)
        if (x, inv[x]) in table and table[x, inv[x]] != x_prime_only:
            items["v"].add(x, inv[x])
        for y in range(n):
            if not P.leq(x, y) or (x, y) not in table:
                continue
            if table[x, y] != interval(P, inv[x], top):
                items["iii"].add(x, y)
            if upper_cone(P, table[x, y]) != only_top:
                items["iv"].add(x, y)

    report = ValidationReport(
        title="properties of the implication", labels=P.labels
    )
    report.add(defined.verdict())
    for key in ("i", "ii", "iii", "iv", "v"):
        report.add(items[key].verdict())
    return report
