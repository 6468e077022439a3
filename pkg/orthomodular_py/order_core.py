# File Name: `order_core.py`
# Purpose: Houses the core representation of finite bounded posets
#     with an antitone involution, the L/U cone operators,
#     and the partial meet/join derived from the order.
# Creation Date: 2026-10-19 09:40 AM EDT
# Update History:
# - 2026-10-19 09:40 AM EDT
# - 2026-10-19 04:15 PM EDT
# - 2026-10-19 09:20 PM EDT


import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from orthomodular_py.utls import (
    DEFAULT_WITNESS_CAP,
    MAX_CARRIER_SIZE,
    UNDEFINED,
    PartialityError,
    PreconditionError,
    StructureError,
    ValidationReport,
    _WitnessCollector,
)


@dataclass(frozen=True)
class Subset:
    """
    A subset of a carrier `{0, ..., width - 1}`, stored as a bitset
    in a single integer. Bits beyond `width` are always zero.
    """

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.width > MAX_CARRIER_SIZE:
            raise StructureError(
                "A subset must have a width between 0 and "
                + f"{MAX_CARRIER_SIZE}, got `{self.width}`."
            )
        if self.bits < 0 or self.bits >> self.width:
            raise StructureError(
                f"The bits `{self.bits:#x}` do not fit "
                + f"into a subset of width {self.width}."
            )

    @classmethod
    def empty(cls, width: int) -> "Subset":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "Subset":
        return cls((1 << width) - 1, width)

    @classmethod
    def of(cls, width: int, elements: Iterable[int]) -> "Subset":
        bits = 0
        for e in elements:
            if e < 0 or e >= width:
                raise StructureError(
                    f"Element `{e}` is not in a carrier of size {width}."
                )
            bits |= 1 << e
        return cls(bits, width)

    def __contains__(self, element: int) -> bool:
        return (self.bits >> element) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check_width(self, other: "Subset") -> None:
        if self.width != other.width:
            raise StructureError(
                f"Cannot combine subsets of widths {self.width} "
                + f"and {other.width}."
            )

    def __or__(self, other: "Subset") -> "Subset":
        self._check_width(other)
        return Subset(self.bits | other.bits, self.width)

    def __and__(self, other: "Subset") -> "Subset":
        self._check_width(other)
        return Subset(self.bits & other.bits, self.width)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check_width(other)
        return Subset(self.bits & ~other.bits, self.width)

    def issubset(self, other: "Subset") -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: "Subset") -> bool:
        return self.issubset(other)

    def elements(self) -> tuple:
        return tuple(self)

    def render(self, labels: tuple | None = None) -> str:
        if labels is None:
            return "{" + ", ".join(str(e) for e in self) + "}"
        return "{" + ", ".join(labels[e] for e in self) + "}"


@dataclass(frozen=True, eq=False)
class PartialBinaryOp:
    """
    An `n x n` table of elements, where a cell equal to `UNDEFINED`
    means the operation is undefined on that pair.
    """

    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int16)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise StructureError(
                "A partial binary operation needs a square table, "
                + f"got shape {table.shape}."
            )
        n = table.shape[0]
        if ((table < UNDEFINED) | (table >= n)).any():
            raise StructureError(
                "A partial binary operation table contains entries "
                + f"outside of [0, {n}) that are not UNDEFINED."
            )
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def undefined(cls, n: int) -> "PartialBinaryOp":
        return cls(np.full((n, n), UNDEFINED, dtype=np.int16))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __call__(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def defined(self, a: int, b: int) -> bool:
        return self.table[a, b] != UNDEFINED

    def with_entry(self, a: int, b: int, value: int) -> "PartialBinaryOp":
        table = self.table.copy()
        table[a, b] = value
        return PartialBinaryOp(table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialBinaryOp):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())


@dataclass(frozen=True, eq=False)
class BoundedInvolutivePoset:
    """
    A finite bounded poset `(P, <=, ', 0, 1)` with an antitone involution.

    Instances are immutable; build them through `validate_poset()`
    or `from_pairs()`, which check every definitional law.
    Elements are the indices `0, ..., n - 1`; `labels` holds their names.
    """

    le: np.ndarray
    inv: tuple
    bot: int
    top: int
    labels: tuple
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.inv)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.le[a, b])

    @cached_property
    def down_masks(self) -> tuple:
        # bit y of down_masks[x] is set iff y <= x
        return tuple(
            _row_to_bits(self.le[:, x]) for x in range(self.n)
        )

    @cached_property
    def up_masks(self) -> tuple:
        return tuple(
            _row_to_bits(self.le[x, :]) for x in range(self.n)
        )

    @cached_property
    def meet_table(self) -> PartialBinaryOp:
        return _build_bound_table(self, self.down_masks, greatest=True)

    @cached_property
    def join_table(self) -> PartialBinaryOp:
        return _build_bound_table(self, self.up_masks, greatest=False)

    def full(self) -> Subset:
        return Subset.full(self.n)

    def empty(self) -> Subset:
        return Subset.empty(self.n)

    def subset(self, *elements: int) -> Subset:
        return Subset.of(self.n, elements)

    def element(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LookupError(
                f"`{label}` is not an element of {self.name or 'this poset'}."
            )

    def subset_of_labels(self, *labels: str) -> Subset:
        return self.subset(*(self.element(x) for x in labels))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundedInvolutivePoset):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.le, other.le)
            and self.inv == other.inv
            and self.bot == other.bot
            and self.top == other.top
        )

    def __hash__(self) -> int:
        return hash((self.le.tobytes(), self.inv, self.bot, self.top))

    def __repr__(self) -> str:
        return (
            f"BoundedInvolutivePoset(name={self.name!r}, n={self.n}, "
            + f"labels={self.labels!r})"
        )


def _row_to_bits(row: np.ndarray) -> int:
    bits = 0
    for i in np.flatnonzero(row):
        bits |= 1 << int(i)
    return bits


def _extreme_of(P: BoundedInvolutivePoset, mask: int, greatest: bool) -> int:
    # greatest element of `mask` (mask within the down-set of g),
    # or least element (mask within the up-set of g)
    cones = P.down_masks if greatest else P.up_masks
    bits = mask
    while bits:
        low = bits & -bits
        g = low.bit_length() - 1
        if mask & ~cones[g] == 0:
            return g
        bits ^= low
    return UNDEFINED


def _build_bound_table(
    P: BoundedInvolutivePoset, cones: tuple, greatest: bool
) -> PartialBinaryOp:
    n = P.n
    table = np.full((n, n), UNDEFINED, dtype=np.int16)
    for a in range(n):
        for b in range(a, n):
            value = _extreme_of(P, cones[a] & cones[b], greatest)
            table[a, b] = value
            table[b, a] = value
    return PartialBinaryOp(table)


def _default_labels(n: int) -> tuple:
    return tuple(str(i) for i in range(n))


def validate_poset(
    order,
    inv,
    bot: int,
    top: int,
    labels: Iterable[str] | None = None,
    name: str = "",
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Checks every definitional law of a bounded poset
    with an antitone involution.

    Parameters
    ----------
    `order` (array-like, mandatory):
        Required argument.
        An `n x n` boolean matrix where `order[a][b]` means `a <= b`.
        The matrix is taken as-is (no closure is applied).

    `inv` (sequence of int, mandatory):
        Required argument.
        The involution `x -> x'` as a list of length `n`.

    `bot`, `top` (int, mandatory):
        Required arguments.
        The indices of the least and greatest element.

    `labels` (iterable of str, optional):
        Optional argument.
        Element names, used when rendering witnesses.

    `witness_cap` (int, optional):
        Optional argument.
        How many witnesses are kept per law.

    Usage
    ----------
    ```python
    from orthomodular_py.order_core import validate_poset

    report = validate_poset(
        [[True, True], [False, True]], [1, 0], bot=0, top=1
    )
    print(report.to_text())
    two_chain = report.structure
    ```

    Returns
    ----------
    A `ValidationReport` listing every law with its witnesses.
    If every law passes, `report.structure` holds the validated
    `BoundedInvolutivePoset`; otherwise it is `None`.
    """
    le = np.array(order, dtype=bool)
    if le.ndim != 2 or le.shape[0] != le.shape[1]:
        raise StructureError(
            f"The order matrix must be square, got shape {le.shape}."
        )
    n = le.shape[0]
    if n == 0:
        raise StructureError("A bounded poset needs at least one element.")
    if n > MAX_CARRIER_SIZE:
        raise StructureError(
            f"Carriers are limited to {MAX_CARRIER_SIZE} elements, "
            + f"got {n}."
        )
    inv = tuple(int(x) for x in inv)
    if len(inv) != n:
        raise StructureError(
            f"The involution has length {len(inv)}, "
            + f"but the carrier has {n} elements."
        )
    for x in inv:
        if x < 0 or x >= n:
            raise StructureError(
                f"The involution maps into `{x}`, "
                + f"which is not in a carrier of size {n}."
            )
    for b in (bot, top):
        if b < 0 or b >= n:
            raise StructureError(
                f"The bound `{b}` is not in a carrier of size {n}."
            )
    labels = tuple(labels) if labels is not None else _default_labels(n)
    if len(labels) != n:
        raise StructureError(
            f"Got {len(labels)} labels for a carrier of {n} elements."
        )

    if n == 1:
        logging.warning(
            "Validating a one-element carrier (bot = top). "
            + "This is accepted, but it is degenerate."
        )

    report = ValidationReport(
        title=f"bounded involutive poset {name}".strip(), labels=labels
    )

    reflexive = _WitnessCollector("reflexivity", witness_cap)
    for a in np.flatnonzero(~np.diag(le)):
        reflexive.add(int(a))
    report.add(reflexive.verdict())

    antisymmetric = _WitnessCollector("antisymmetry", witness_cap)
    both = le & le.T
    np.fill_diagonal(both, False)
    for a, b in zip(*np.nonzero(np.triu(both))):
        antisymmetric.add(int(a), int(b))
    report.add(antisymmetric.verdict())

    transitive = _WitnessCollector("transitivity", witness_cap)
    composed = (le.astype(np.int32) @ le.astype(np.int32)) > 0
    for a, c in zip(*np.nonzero(composed & ~le)):
        middle = np.flatnonzero(le[a, :] & le[:, c])
        transitive.add(int(a), int(middle[0]), int(c))
    report.add(transitive.verdict())

    bounds = _WitnessCollector("bounds", witness_cap)
    for x in range(n):
        if not (le[bot, x] and le[x, top]):
            bounds.add(x)
    report.add(bounds.verdict())

    antitone = _WitnessCollector("antitone", witness_cap)
    inv_arr = np.array(inv)
    # x <= y must imply y' <= x'
    mirrored = le[np.ix_(inv_arr, inv_arr)].T
    for x, y in zip(*np.nonzero(le & ~mirrored)):
        antitone.add(int(x), int(y))
    report.add(antitone.verdict())

    involutive = _WitnessCollector("involutive", witness_cap)
    for x in range(n):
        if inv[inv[x]] != x:
            involutive.add(x)
    report.add(involutive.verdict())

    complementation = _WitnessCollector("bound-complementation", witness_cap)
    detail = ""
    if inv[bot] != top:
        complementation.add(bot)
        detail = (
            f"{labels[bot]}′={labels[inv[bot]]}≠{labels[top]}"
        )
    if inv[top] != bot:
        complementation.add(top)
        detail = detail or (
            f"{labels[top]}′={labels[inv[top]]}≠{labels[bot]}"
        )
    report.add(complementation.verdict(detail))

    if report.passed:
        le = le.copy()
        le.setflags(write=False)
        report.structure = BoundedInvolutivePoset(
            le=le,
            inv=inv,
            bot=int(bot),
            top=int(top),
            labels=labels,
            name=name,
        )
    return report


def from_pairs(
    labels: Iterable[str],
    pairs: Iterable[tuple],
    inv_pairs: Iterable[tuple],
    bot: int,
    top: int,
    name: str = "",
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ValidationReport:
    """
    Builds a poset from any generating set of order pairs.

    The reflexive-transitive closure of `pairs` is taken
    before validation, so only antisymmetry (and the bound and
    involution laws) can fail. Each `(a, b)` in `inv_pairs` sets
    `a' = b` and `b' = a`.

    Usage
    ----------
    ```python
    from orthomodular_py.order_core import from_pairs

    labels = ["0", "a", "a'", "1"]
    report = from_pairs(
        labels,
        pairs=[(0, 1), (0, 2), (1, 3), (2, 3)],
        inv_pairs=[(0, 3), (1, 2)],
        bot=0,
        top=3,
    )
    diamond = report.structure
    ```

    Returns
    ----------
    A `ValidationReport`, see `validate_poset()`.
    """
    labels = tuple(labels)
    n = len(labels)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    if graph.number_of_nodes() != n:
        raise StructureError(
            "The order pairs mention elements outside of the carrier."
        )
    closure = nx.transitive_closure(graph, reflexive=True)
    le = nx.to_numpy_array(closure, nodelist=list(range(n)), dtype=bool)

    inv = [None] * n
    for a, b in inv_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise StructureError(
                f"The involution pair ({a}, {b}) mentions elements "
                + "outside of the carrier."
            )
        inv[a] = b
        inv[b] = a
    missing = [labels[x] for x in range(n) if inv[x] is None]
    if missing:
        raise StructureError(
            f"The involution is not defined for {', '.join(missing)}."
        )
    return validate_poset(
        le, inv, bot, top, labels=labels, name=name, witness_cap=witness_cap
    )


def _require_valid(report: ValidationReport) -> BoundedInvolutivePoset:
    if report.structure is None:
        raise StructureError(
            "The given data does not describe a bounded poset "
            + "with an antitone involution:\n"
            + report.to_text()
        )
    return report.structure


def lower_cone(P: BoundedInvolutivePoset, A: Subset) -> Subset:
    """
    Returns `L(A) = {x | x <= y for all y in A}`.
    `L` of the empty set is the full carrier.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import mo
    from orthomodular_py.order_core import lower_cone

    P = mo(2)
    print(lower_cone(P, P.subset_of_labels("a", "b")).render(P.labels))
    ```
    """
    bits = (1 << P.n) - 1
    for y in A:
        bits &= P.down_masks[y]
    return Subset(bits, P.n)


def upper_cone(P: BoundedInvolutivePoset, A: Subset) -> Subset:
    """
    Returns `U(A) = {x | y <= x for all y in A}`.
    `U` of the empty set is the full carrier.
    """
    bits = (1 << P.n) - 1
    for y in A:
        bits &= P.up_masks[y]
    return Subset(bits, P.n)


def upper_lower_cone(P: BoundedInvolutivePoset, A: Subset) -> Subset:
    """Returns `UL(A) = U(L(A))`."""
    return upper_cone(P, lower_cone(P, A))


def involute(P: BoundedInvolutivePoset, A: Subset) -> Subset:
    """Returns `A' = {x' | x in A}`."""
    return Subset.of(P.n, (P.inv[x] for x in A))


def meet(P: BoundedInvolutivePoset, a: int, b: int) -> int:
    """
    Returns the greatest element of `L(a, b)`,
    or `UNDEFINED` if there is none.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import even_subsets
    from orthomodular_py.order_core import meet
    from orthomodular_py.utls import UNDEFINED

    P = even_subsets(6)
    x = P.element("{1,2,3,4}")
    y = P.element("{2,3,4,5}")
    assert meet(P, x, y) == UNDEFINED
    ```
    """
    return P.meet_table(a, b)


def join(P: BoundedInvolutivePoset, a: int, b: int) -> int:
    """
    Returns the least element of `U(a, b)`,
    or `UNDEFINED` if there is none.
    """
    return P.join_table(a, b)


def meet_table(P: BoundedInvolutivePoset) -> PartialBinaryOp:
    return P.meet_table


def join_table(P: BoundedInvolutivePoset) -> PartialBinaryOp:
    return P.join_table


def is_orthogonal(P: BoundedInvolutivePoset, a: int, b: int) -> bool:
    """`a` and `b` are orthogonal if `a <= b'` (equivalently `b <= a'`)."""
    return P.leq(a, P.inv[b])


def is_lattice(P: BoundedInvolutivePoset) -> bool:
    return bool(
        (P.meet_table.table != UNDEFINED).all()
        and (P.join_table.table != UNDEFINED).all()
    )


def subset_le(P: BoundedInvolutivePoset, A: Subset, B: Subset) -> bool:
    """
    `A <= B` holds when `x <= y` for all `x` in `A` and `y` in `B`.
    If either side is empty, this is vacuously true.
    """
    for x in A:
        if B.bits & ~P.up_masks[x]:
            return False
    return True


def interval(P: BoundedInvolutivePoset, a: int, b: int) -> Subset:
    """
    Returns the interval `[a, b] = {x | a <= x <= b}`.

    Raises a `PreconditionError` if `a <= b` does not hold.
    """
    if not P.leq(a, b):
        raise PreconditionError(
            f"The interval [{P.labels[a]}, {P.labels[b]}] "
            + f"needs {P.labels[a]} <= {P.labels[b]}."
        )
    return Subset(P.up_masks[a] & P.down_masks[b], P.n)


def lift_join(P: BoundedInvolutivePoset, A: Subset, a: int) -> Subset:
    """
    Returns `A v a = {x v a | x in A}`.

    Every `x` in `A` with `x <= a'` is orthogonal to `a`; in an
    orthomodular poset those joins always exist. Any other `x` is
    allowed as long as its join with `a` exists.

    Raises a `PartialityError` (with the offending `x` as witness)
    if some `x v a` is UNDEFINED.
    """
    bits = 0
    a_prime = P.inv[a]
    for x in A:
        j = P.join_table(x, a)
        if j == UNDEFINED:
            kind = "orthogonal" if P.leq(x, a_prime) else "non-orthogonal"
            raise PartialityError(
                f"The join of {P.labels[x]} and {P.labels[a]} "
                + f"({kind} pair) does not exist.",
                witness=(x, a),
            )
        if not P.leq(x, a_prime):
            logging.debug(
                f"lift_join: {P.labels[x]} is not orthogonal to "
                + f"{P.labels[a]}, but their join exists."
            )
        bits |= 1 << j
    return Subset(bits, P.n)


def lift_meet(P: BoundedInvolutivePoset, A: Subset, a: int) -> Subset:
    """
    Returns `A ^ a = {x ^ a | x in A}`, the dual of `lift_join()`.
    Defined whenever `a' <= A`.
    """
    bits = 0
    for x in A:
        m = P.meet_table(x, a)
        if m == UNDEFINED:
            raise PartialityError(
                f"The meet of {P.labels[x]} and {P.labels[a]} "
                + "does not exist.",
                witness=(x, a),
            )
        bits |= 1 << m
    return Subset(bits, P.n)


def covering_pairs(P: BoundedInvolutivePoset) -> list:
    """
    Returns the covering relation (Hasse diagram edges) `a -< b`,
    meaning `a < b` with nothing strictly in between,
    sorted by index.
    """
    strict = P.le.copy()
    np.fill_diagonal(strict, False)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(P.n))
    graph.add_edges_from(
        (int(a), int(b)) for a, b in zip(*np.nonzero(strict))
    )
    reduced = nx.transitive_reduction(graph)
    return sorted(reduced.edges())
