# File Name: `functors.py`
# Purpose: Houses the two constructions between orthomodular posets
#     and unsharp residuated posets, and the round-trip checks
#     `P(R(P)) = P` and `R(P(R))`.
# Creation Date: 2026-10-19 01:45 PM EDT
# Update History:
# - 2026-10-19 01:45 PM EDT


import logging
from dataclasses import dataclass, field

import numpy as np

from orthomodular_py.omp import check_orthomodular, implication_table
from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    lift_join,
    lower_cone,
)
from orthomodular_py.urp import (
    UnsharpResiduatedStructure,
    check_idempotent,
    validate_urp,
)
from orthomodular_py.utls import (
    UNDEFINED,
    HypothesisError,
    NotIdempotentError,
    NotOrthomodularError,
    NotUnsharpResiduatedError,
    PartialityError,
)


@dataclass
class RoundTripReport:
    """
    The outcome of a round trip.

    `equal` is `True` iff no discrepancy was recorded;
    `first_discrepancy` names the first differing component and
    a witness. `info` lists differences that do not count as failures.
    """

    title: str
    equal: bool = True
    first_discrepancy: str = ""
    info: list = field(default_factory=list)

    def record(self, discrepancy: str) -> None:
        if self.equal:
            self.first_discrepancy = discrepancy
        self.equal = False

    def to_text(self) -> str:
        lines = [f"{self.title}: {'equal' if self.equal else 'NOT equal'}"]
        if not self.equal:
            lines.append(f"first discrepancy: {self.first_discrepancy}")
        for i in self.info:
            lines.append(f"info: {i}")
        verdict = "pass" if self.equal else "fail"
        lines.append(f"RESULT {verdict} {0 if self.equal else 1}")
        return "\n".join(lines)


def to_urp(P: BoundedInvolutivePoset) -> UnsharpResiduatedStructure:
    """
    Builds the unsharp residuated poset `R(P)` of an orthomodular poset:
    `x.y := x ^ y` wherever the meet exists, and
    `x -> y := x' v L(x, y)`.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import mo
    from orthomodular_py.functors import to_urp
    from orthomodular_py.urp import imp_table_df

    S = to_urp(mo(2))
    print(imp_table_df(S))
    ```

    Returns
    ----------
    An `UnsharpResiduatedStructure` with `derived_imp=True`.
    Raises a `NotOrthomodularError` if `P` fails `check_orthomodular()`.
    """
    report = check_orthomodular(P)
    if not report.passed:
        raise NotOrthomodularError(
            f"{P.name or 'The given poset'} is not an orthomodular poset:\n"
            + report.to_text(),
            report=report,
        )
    return UnsharpResiduatedStructure(
        poset=P,
        odot=P.meet_table,
        imp=implication_table(P),
        name=f"R({P.name})" if P.name else "",
        derived_imp=True,
    )


def to_omp(S: UnsharpResiduatedStructure) -> BoundedInvolutivePoset:
    """
    Recovers the orthomodular poset `P(R) = (R, <=, ', 0, 1)`
    of an idempotent unsharp residuated poset satisfying

    - (i) `x' <= y` implies `x ^ y` is defined, and
    - (ii) `x -> y = x' v L(x, y)` for all `x, y`.

    The checks run in this order and raise distinct errors:
    `NotIdempotentError`, `HypothesisError` with `hypothesis="i"`,
    `HypothesisError` with `hypothesis="ii"`,
    then `NotUnsharpResiduatedError` if the full validation fails.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.functors import to_omp

    P = to_omp(example2())
    ```

    Returns
    ----------
    The reduct `BoundedInvolutivePoset` (the same object as `S.poset`),
    which passes `check_orthomodular()`.
    """
    P = S.poset
    n = S.n
    labels = S.labels
    name = S.name or "the given structure"

    idempotent = check_idempotent(S, witness_cap=1)
    if not idempotent.passed:
        x = idempotent.witnesses[0][0]
        raise NotIdempotentError(
            f"{name} is not idempotent: "
            + f"{labels[x]}.{labels[x]} is not {labels[x]}.",
            witness=(x,),
        )

    meet = P.meet_table
    for x in range(n):
        for y in range(n):
            if P.leq(P.inv[x], y) and meet(x, y) == UNDEFINED:
                raise HypothesisError(
                    f"In {name}, {labels[x]}' <= {labels[y]} holds, "
                    + f"but {labels[x]} ^ {labels[y]} does not exist.",
                    hypothesis="i",
                    witness=(x, y),
                )

    for x in range(n):
        for y in range(n):
            stored = S.imp(x, y)
            try:
                formula = lift_join(
                    P, lower_cone(P, P.subset(x, y)), P.inv[x]
                )
            except PartialityError:
                formula = None
            if formula != stored:
                shown = "undefined" if formula is None else (
                    formula.render(labels)
                )
                raise HypothesisError(
                    f"In {name}, {labels[x]} -> {labels[y]} is "
                    + f"{stored.render(labels)}, but "
                    + f"{labels[x]}' v L({labels[x]},{labels[y]}) "
                    + f"is {shown}.",
                    hypothesis="ii",
                    witness=(x, y),
                )

    report = validate_urp(S)
    if not report.passed:
        raise NotUnsharpResiduatedError(
            f"{name} is not an unsharp residuated poset:\n"
            + report.to_text(),
            report=report,
        )

    # product and meet agree on the orthogonal-complement domain
    for x in range(n):
        for y in range(n):
            if P.leq(P.inv[x], y) and S.odot(x, y) != meet(x, y):
                logging.warning(
                    f"In {name}, {labels[x]}.{labels[y]} differs from "
                    + f"{labels[x]} ^ {labels[y]} although "
                    + f"{labels[x]}' <= {labels[y]}."
                )

    omp_report = check_orthomodular(P)
    if not omp_report.passed:
        raise NotOrthomodularError(
            f"The reduct of {name} is not orthomodular:\n"
            + omp_report.to_text(),
            report=omp_report,
        )
    return P


def roundtrip_P(P: BoundedInvolutivePoset) -> RoundTripReport:
    """
    Checks `P(R(P)) = P` component by component
    (carrier, order matrix, involution, bounds), without relabeling.
    """
    report = RoundTripReport(title="P(R(P)) = P")
    Q = to_omp(to_urp(P))

    if Q.n != P.n:
        report.record(f"carrier: {Q.n} elements instead of {P.n}")
        return report
    if not np.array_equal(Q.le, P.le):
        a, b = (int(i) for i in np.argwhere(Q.le != P.le)[0])
        report.record(
            f"order: ({P.labels[a]}, {P.labels[b]}) differs"
        )
    for x in range(P.n):
        if Q.inv[x] != P.inv[x]:
            report.record(f"involution: differs at {P.labels[x]}")
            break
    if Q.bot != P.bot:
        report.record(f"bot: {Q.bot} instead of {P.bot}")
    if Q.top != P.top:
        report.record(f"top: {Q.top} instead of {P.top}")
    return report


def roundtrip_R(S: UnsharpResiduatedStructure) -> RoundTripReport:
    """
    Computes `T = R(P(S))`, whose product is written `(x)` here, and checks

    - (a) the implication tables of `S` and `T` are identical;
    - (b) `x (x) y = x.y` for all pairs with `x' <= y`.

    Pairs outside of that domain where the two products differ
    (in definedness or in value) are listed in `info` and logged;
    they are not failures.
    """
    report = RoundTripReport(title="R(P(R))")
    T = to_urp(to_omp(S))
    labels = S.labels
    n = S.n
    P = S.poset

    for x in range(n):
        for y in range(n):
            if T.imp(x, y) != S.imp(x, y):
                report.record(
                    f"implication: ({labels[x]}, {labels[y]}) gives "
                    + f"{T.imp(x, y).render(labels)} instead of "
                    + f"{S.imp(x, y).render(labels)}"
                )

    for x in range(n):
        for y in range(n):
            otimes = T.odot(x, y)
            odot = S.odot(x, y)
            if P.leq(P.inv[x], y):
                if otimes != odot:
                    report.record(
                        f"product: ({labels[x]}, {labels[y]}) with "
                        + f"{labels[x]}' <= {labels[y]}"
                    )
            elif (otimes == UNDEFINED) != (odot == UNDEFINED):
                side = "meet" if odot == UNDEFINED else "product"
                message = (
                    f"({labels[x]}, {labels[y]}) is only in the domain "
                    + f"of the {side}"
                )
                report.info.append(message)
                logging.info(f"R(P(R)) domain difference: {message}.")
            elif otimes != odot:
                message = (
                    f"({labels[x]}, {labels[y]}) has product "
                    + f"{labels[odot]} but meet {labels[otimes]}"
                )
                report.info.append(message)
                logging.info(f"R(P(R)) value difference: {message}.")
    return report
