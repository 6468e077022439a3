# File Name: `urp.py`
# Purpose: Houses the representation of unsharp residuated posets
#     and the full validation of their axioms: the partial commutative
#     monoid laws, (R1)-(R4), dual adjointness (R3'), divisibility,
#     idempotence, and the coincidence of the product with meet.
# Creation Date: 2026-10-19 12:20 PM EDT
# Update History:
# - 2026-10-19 12:20 PM EDT
# - 2026-10-19 06:10 PM EDT


import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    PartialBinaryOp,
    Subset,
    lower_cone,
    upper_cone,
    validate_poset,
)
from orthomodular_py.utls import (
    DEFAULT_WITNESS_CAP,
    UNDEFINED,
    LawVerdict,
    NotIdempotentError,
    StructureError,
    ValidationReport,
    _WitnessCollector,
)


@dataclass(frozen=True)
class SetValuedBinaryOp:
    """
    An `n x n` table of subsets, such as the implication `R^2 -> 2^R`.
    """

    table: tuple

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        n = len(table)
        for row in table:
            if len(row) != n:
                raise StructureError(
                    "A set-valued operation needs a square table, "
                    + f"got a row of length {len(row)} in a table "
                    + f"with {n} rows."
                )
            for cell in row:
                if not isinstance(cell, Subset) or cell.width != n:
                    raise StructureError(
                        "Every cell of a set-valued operation must be "
                        + f"a subset of width {n}, got `{cell!r}`."
                    )
        object.__setattr__(self, "table", table)

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, a: int, b: int) -> Subset:
        return self.table[a][b]

    def with_entry(self, a: int, b: int, value: Subset) -> "SetValuedBinaryOp":
        rows = [list(row) for row in self.table]
        rows[a][b] = value
        return SetValuedBinaryOp(tuple(tuple(row) for row in rows))


@dataclass(frozen=True, eq=False)
class UnsharpResiduatedStructure:
    """
    A candidate unsharp residuated poset `(R, <=, (.), ->, ', 0, 1)`.

    Nothing beyond matching sizes is enforced on construction,
    so tampered tables (mutants) can be represented and then
    rejected by `validate_urp()`.
    `derived_imp` records that `imp` was computed from
    `x' v L(x, y)` rather than given as an abstract table.
    """

    poset: BoundedInvolutivePoset
    odot: PartialBinaryOp
    imp: SetValuedBinaryOp
    name: str = ""
    derived_imp: bool = False

    def __post_init__(self):
        n = self.poset.n
        if self.odot.n != n or self.imp.n != n:
            raise StructureError(
                f"The carrier has {n} elements, but the product table "
                + f"has size {self.odot.n} and the implication table "
                + f"has size {self.imp.n}."
            )

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self) -> tuple:
        return self.poset.labels

    def with_odot(
        self, a: int, b: int, value: int, symmetric: bool = True
    ) -> "UnsharpResiduatedStructure":
        odot = self.odot.with_entry(a, b, value)
        if symmetric:
            odot = odot.with_entry(b, a, value)
        return UnsharpResiduatedStructure(
            self.poset, odot, self.imp, self.name, derived_imp=False
        )

    def with_imp(
        self, a: int, b: int, value: Subset
    ) -> "UnsharpResiduatedStructure":
        return UnsharpResiduatedStructure(
            self.poset,
            self.odot,
            self.imp.with_entry(a, b, value),
            self.name,
            derived_imp=False,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnsharpResiduatedStructure):
            return NotImplemented
        return (
            self.poset == other.poset
            and self.odot == other.odot
            and self.imp == other.imp
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.odot))

    def __repr__(self) -> str:
        return (
            f"UnsharpResiduatedStructure(name={self.name!r}, n={self.n}, "
            + f"labels={self.labels!r})"
        )


@dataclass
class UrpReport(ValidationReport):
    """
    The report of `validate_urp()`.
    """

    @property
    def is_divisible(self) -> bool:
        return "divisibility" in self and self["divisibility"].passed

    @property
    def is_idempotent(self) -> bool:
        return "idempotence" in self and self["idempotence"].passed


def _report(S: UnsharpResiduatedStructure, title: str) -> ValidationReport:
    return ValidationReport(title=title, labels=S.labels)


def check_partial_monoid(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks that `(R, (.), 1)` is a partial commutative monoid.

    - associativity: when both `(x.y).z` and `x.(y.z)` are defined
      they coincide; a single defined bracketing is allowed and
      counted in the informational verdict
      `monoid-one-sided-associativity`;
    - unit: `x.1 = 1.x = x`;
    - commutativity: `x.y` is defined iff `y.x` is, with equal values.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.urp import check_partial_monoid

    print(check_partial_monoid(example2()).to_text())
    ```
    """
    n = S.n
    odot = S.odot
    top = S.poset.top

    associative = _WitnessCollector(
        "monoid-associativity-compatibility", witness_cap
    )
    one_sided = _WitnessCollector(
        "monoid-one-sided-associativity", witness_cap, informational=True
    )
    unit = _WitnessCollector("monoid-unit", witness_cap)
    commutative = _WitnessCollector("monoid-commutativity", witness_cap)

    for x in range(n):
        for y in range(n):
            xy = odot(x, y)
            for z in range(n):
                yz = odot(y, z)
                left = odot(xy, z) if xy != UNDEFINED else UNDEFINED
                right = odot(x, yz) if yz != UNDEFINED else UNDEFINED
                if left != UNDEFINED and right != UNDEFINED:
                    if left != right:
                        associative.add(x, y, z)
                elif left != right:
                    one_sided.add(x, y, z)

    for x in range(n):
        if odot(x, top) != x or odot(top, x) != x:
            unit.add(x)

    table = odot.table
    for x, y in zip(*np.nonzero(np.triu(table != table.T))):
        commutative.add(int(x), int(y))

    report = _report(S, "partial commutative monoid")
    report.add(associative.verdict())
    report.add(one_sided.verdict())
    report.add(unit.verdict())
    report.add(commutative.verdict())
    return report


def check_R2(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks the order conditions of (R2):

    - `x' <= y` implies `x.y` is defined (`R2-definedness`);
    - `x <= y` with `x.z` and `y.z` both defined implies
      `x.z <= y.z` (`R2-monotonicity`).

    Pairs `x <= y` where `y.z` is defined but `x.z` is not
    are counted in the informational verdict
    `R2-definedness-propagation`; the axiom does not require it.
    """
    n = S.n
    P = S.poset
    odot = S.odot
    inv = P.inv

    defined = _WitnessCollector("R2-definedness", witness_cap)
    monotone = _WitnessCollector("R2-monotonicity", witness_cap)
    propagation = _WitnessCollector(
        "R2-definedness-propagation", witness_cap, informational=True
    )

    for x in range(n):
        for y in range(n):
            if P.leq(inv[x], y) and odot(x, y) == UNDEFINED:
                defined.add(x, y)

    for x in range(n):
        for y in range(n):
            if not P.leq(x, y):
                continue
            for z in range(n):
                xz = odot(x, z)
                yz = odot(y, z)
                if xz != UNDEFINED and yz != UNDEFINED:
                    if not P.leq(xz, yz):
                        monotone.add(x, y, z)
                elif yz != UNDEFINED:
                    propagation.add(x, y, z)

    report = _report(S, "(R2)")
    report.add(defined.verdict())
    report.add(monotone.verdict())
    report.add(propagation.verdict())
    return report


@dataclass
class _AdjointnessScan:
    r3_forward: list
    r3_backward: list
    r3_failures: set
    r3_dual_failures: set
    skipped_pairs: list


def _scan_adjointness(S: UnsharpResiduatedStructure) -> _AdjointnessScan:
    """
    Evaluates both sides of (R3) and of (R3') on every triple.

    (R3) is evaluated through upper cones:
        `U(x,y').y ⊆ UL(y,z)`  iff  `U(x,y') ⊆ U(y -> z)`.
    (R3') is evaluated independently through lower cones, using
    `A >= B` iff `B ⊆ L(A)`:
        `L(y,z) ⊆ L(U(x,y').y)`  iff  `y -> z ⊆ L(U(x,y'))`.
    """
    n = S.n
    P = S.poset
    odot = S.odot
    inv = P.inv

    # per (x, y): U(x,y'), its image under (.)y, and their lower cones
    u_xy = {}
    image_xy = {}
    lower_u_xy = {}
    lower_image_xy = {}
    skipped = []
    for x in range(n):
        for y in range(n):
            U = upper_cone(P, P.subset(x, inv[y]))
            bits = 0
            missing = False
            for u in U:
                v = odot(u, y)
                if v == UNDEFINED:
                    missing = True
                    break
                bits |= 1 << v
            if missing:
                logging.debug(
                    f"Skipping (R3) for x={S.labels[x]}, y={S.labels[y]}: "
                    + "U(x,y').y hits an undefined product."
                )
                skipped.append((x, y))
                continue
            image = Subset(bits, n)
            u_xy[x, y] = U
            image_xy[x, y] = image
            lower_u_xy[x, y] = lower_cone(P, U)
            lower_image_xy[x, y] = lower_cone(P, image)

    # per (y, z): UL(y,z), U(y -> z), L(y,z), y -> z
    ul_yz = {}
    u_imp_yz = {}
    l_yz = {}
    for y in range(n):
        for z in range(n):
            L = lower_cone(P, P.subset(y, z))
            l_yz[y, z] = L
            ul_yz[y, z] = upper_cone(P, L)
            u_imp_yz[y, z] = upper_cone(P, S.imp(y, z))

    forward = []
    backward = []
    failures = set()
    dual_failures = set()
    for (x, y), U in u_xy.items():
        image = image_xy[x, y]
        for z in range(n):
            lhs = image.issubset(ul_yz[y, z])
            rhs = U.issubset(u_imp_yz[y, z])
            if lhs and not rhs:
                forward.append((x, y, z))
            if rhs and not lhs:
                backward.append((x, y, z))
            if lhs != rhs:
                failures.add((x, y, z))

            dual_lhs = l_yz[y, z].issubset(lower_image_xy[x, y])
            dual_rhs = S.imp(y, z).issubset(lower_u_xy[x, y])
            if dual_lhs != dual_rhs:
                dual_failures.add((x, y, z))

    return _AdjointnessScan(
        r3_forward=sorted(forward),
        r3_backward=sorted(backward),
        r3_failures=failures,
        r3_dual_failures=dual_failures,
        skipped_pairs=skipped,
    )


def _collect(law: str, triples, witness_cap: int) -> LawVerdict:
    collector = _WitnessCollector(law, witness_cap)
    for t in sorted(triples):
        collector.add(*t)
    return collector.verdict()


def check_R3(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks unsharp adjointness (R3) on every triple `(x, y, z)`:

    `U(x,y').y ⊆ UL(y,z)` if and only if `U(x,y') ⊆ U(y -> z)`.

    `R3-forward` collects triples where the left condition holds
    but the right one does not; `R3-backward` the converse.
    A missing product in `U(x,y').y` is an (R2) failure and
    the affected triples are skipped here.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.urp import check_R3

    S = example2()
    a = S.poset.element("a")
    mutant = S.with_imp(a, a, S.poset.subset_of_labels("a'"))
    print(check_R3(mutant).to_text())
    ```
    """
    scan = _scan_adjointness(S)
    report = _report(S, "(R3) unsharp adjointness")
    skipped = ""
    if scan.skipped_pairs:
        skipped = (
            f"{len(scan.skipped_pairs)} (x,y) pair(s) skipped, "
            + "see R2-definedness"
        )
    forward = _collect("R3-forward", scan.r3_forward, witness_cap)
    backward = _collect("R3-backward", scan.r3_backward, witness_cap)
    if skipped:
        forward = LawVerdict(
            forward.law,
            forward.passed,
            forward.witnesses,
            forward.n_violations,
            detail=skipped,
        )
    report.add(forward)
    report.add(backward)
    return report


def r3_failing_triples(S: UnsharpResiduatedStructure) -> set:
    """The complete set of triples violating (R3)."""
    return set(_scan_adjointness(S).r3_failures)


def r3_dual_failing_triples(S: UnsharpResiduatedStructure) -> set:
    """The complete set of triples violating (R3')."""
    return set(_scan_adjointness(S).r3_dual_failures)


def check_R3_dual(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks dual unsharp adjointness (R3') on every triple:

    `U(x,y').y >= L(y,z)` if and only if `U(x,y') >= y -> z`,

    where `A >= B` means `b <= a` for all `a` in `A` and `b` in `B`.
    Also checks that the failing triples of (R3) and (R3')
    are exactly the same (`R3-R3prime-agreement`).
    """
    scan = _scan_adjointness(S)
    report = _report(S, "(R3') dual unsharp adjointness")
    report.add(
        _collect("R3prime-equivalence", scan.r3_dual_failures, witness_cap)
    )
    disagreement = scan.r3_failures ^ scan.r3_dual_failures
    report.add(_collect("R3-R3prime-agreement", disagreement, witness_cap))
    return report


def check_R4(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks (R4): `x <= y` implies `U(x' -> y) = U(y)`.
    """
    n = S.n
    P = S.poset
    collector = _WitnessCollector("R4", witness_cap)
    for x in range(n):
        for y in range(n):
            if not P.leq(x, y):
                continue
            if upper_cone(P, S.imp(P.inv[x], y)).bits != P.up_masks[y]:
                collector.add(x, y)
    report = _report(S, "(R4)")
    report.add(collector.verdict())
    return report


def check_divisible(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    informational: bool = False,
) -> LawVerdict:
    """
    Checks divisibility: `x.(x -> y) = L(x, y)` as sets,
    with `x.t` defined for every `t` in `x -> y`.
    """
    n = S.n
    P = S.poset
    collector = _WitnessCollector(
        "divisibility", witness_cap, informational=informational
    )
    for x in range(n):
        for y in range(n):
            bits = 0
            defined = True
            for t in S.imp(x, y):
                v = S.odot(x, t)
                if v == UNDEFINED:
                    defined = False
                    break
                bits |= 1 << v
            if not defined or bits != lower_cone(P, P.subset(x, y)).bits:
                collector.add(x, y)
    return collector.verdict()


def check_idempotent(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    informational: bool = False,
) -> LawVerdict:
    """Checks that `x.x` is defined and equal to `x` for every `x`."""
    collector = _WitnessCollector(
        "idempotence", witness_cap, informational=informational
    )
    for x in range(S.n):
        if S.odot(x, x) != x:
            collector.add(x)
    return collector.verdict()


def check_zero_absorption(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> LawVerdict:
    """
    Reports (informationally) whether `x.0 = 0.x = 0` for all `x`.
    This is not an axiom, but every structure built from an
    orthomodular poset satisfies it.
    """
    bot = S.poset.bot
    collector = _WitnessCollector(
        "zero-absorption", witness_cap, informational=True
    )
    for x in range(S.n):
        if S.odot(x, bot) != bot or S.odot(bot, x) != bot:
            collector.add(x)
    return collector.verdict()


def check_lemma_lem2(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> LawVerdict:
    """
    Checks that `a.b = a ^ b` wherever both the product and the
    order meet are defined.

    Raises a `NotIdempotentError` if `S` is not idempotent, since
    the coincidence is only guaranteed for idempotent structures.
    """
    idempotent = check_idempotent(S, witness_cap=1)
    if not idempotent.passed:
        raise NotIdempotentError(
            "The product only coincides with meet in idempotent "
            + f"structures, but {S.name or 'this structure'} is not "
            + f"idempotent at {S.labels[idempotent.witnesses[0][0]]}.",
            witness=idempotent.witnesses[0],
        )
    n = S.n
    meet = S.poset.meet_table
    collector = _WitnessCollector("lem2-product-is-meet", witness_cap)
    for a in range(n):
        for b in range(n):
            product = S.odot(a, b)
            m = meet(a, b)
            if product != UNDEFINED and m != UNDEFINED and product != m:
                collector.add(a, b)
    return collector.verdict()


def validate_urp(
    S: UnsharpResiduatedStructure,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    require_divisible: bool = False,
    require_idempotent: bool = False,
) -> UrpReport:
    """
    Validates every axiom of an unsharp residuated poset.

    Parameters
    ----------
    `S` (UnsharpResiduatedStructure, mandatory):
        Required argument.
        The structure to validate.

    `witness_cap` (int, optional):
        Optional argument.
        How many witnesses are kept per law.

    `require_divisible`, `require_idempotent` (bool, optional):
        Optional arguments.
        By default, divisibility and idempotence are reported as
        informational flags. If set to `True`, a failure of the
        corresponding property makes the report fail.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.urp import validate_urp

    report = validate_urp(example2())
    print(report.to_text())
    print(report.to_dataframe())
    ```

    Returns
    ----------
    A `UrpReport` containing, in order:
    (R1) the bounded involutive poset laws;
    (R2) the partial commutative monoid laws and `R2-*` verdicts;
    (R3)/(R3') `R3-forward`, `R3-backward`, `R3prime-equivalence`,
    `R3-R3prime-agreement`;
    (R4) `R4`;
    and the flags `divisibility`, `idempotence`, `zero-absorption`,
    plus `lem2-product-is-meet` when the structure is idempotent.
    """
    P = S.poset
    report = UrpReport(
        title=f"unsharp residuated poset {S.name}".strip(), labels=S.labels
    )

    logging.info(f"Validating the unsharp residuated poset `{S.name}`.")
    r1 = validate_poset(
        P.le, P.inv, P.bot, P.top, labels=P.labels, witness_cap=witness_cap
    )
    for v in r1.verdicts:
        report.add(v)

    for part in (
        check_partial_monoid(S, witness_cap),
        check_R2(S, witness_cap),
        check_R3(S, witness_cap),
        check_R3_dual(S, witness_cap),
        check_R4(S, witness_cap),
    ):
        for v in part.verdicts:
            report.add(v)

    report.add(
        check_divisible(
            S, witness_cap, informational=not require_divisible
        )
    )
    idempotent = check_idempotent(
        S, witness_cap, informational=not require_idempotent
    )
    report.add(idempotent)
    report.add(check_zero_absorption(S, witness_cap))
    if idempotent.passed:
        report.add(check_lemma_lem2(S, witness_cap))
    return report


def _cell(labels: tuple, value: int) -> str:
    return "-" if value == UNDEFINED else labels[value]


def odot_table_df(S: UnsharpResiduatedStructure) -> pd.DataFrame:
    """
    Returns the product table as a `DataFrame`,
    with `-` marking undefined entries.
    """
    labels = S.labels
    rows = [
        [_cell(labels, S.odot(a, b)) for b in range(S.n)]
        for a in range(S.n)
    ]
    return pd.DataFrame(rows, index=list(labels), columns=list(labels))


def imp_table_df(S: UnsharpResiduatedStructure) -> pd.DataFrame:
    """Returns the implication table as a `DataFrame` of rendered sets."""
    labels = S.labels
    rows = [
        [S.imp(a, b).render(labels) for b in range(S.n)]
        for a in range(S.n)
    ]
    return pd.DataFrame(rows, index=list(labels), columns=list(labels))
