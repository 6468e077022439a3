# File Name: `structure_file.py`
# Purpose: Houses the reader and writer of the line-oriented
#     structure file format used by the command line front end
#     and by the stress test failure dumps.
# Creation Date: 2026-10-19 06:05 PM EDT
# Update History:
# - 2026-10-19 06:05 PM EDT
# - 2026-10-19 09:20 PM EDT

"""
A structure file holds exactly one structure:

```
# six atoms-and-coatoms structure
structure urp example2
elements 0 a a' b b' 1
le 0 a
le a 1
...
bot 0
top 1
inv 0 1
inv a a'
odot a b 0
imp a b a' b'
end
```

- `structure (omp|urp) <name> [derived-imp]` comes first.
- `elements` lists the element names; the listing order fixes indices.
- `le <a> <b>` pairs generate the order (reflexive-transitive closure);
  `bot` and `top` also generate `bot <= x <= top`.
- `inv <a> <b>` sets `a' = b` and `b' = a`.
- `odot <a> <b> <c>` (urp only); an absent pair is undefined,
  and a pair given in one direction only is mirrored.
- `imp <a> <b> <c1> ... <ck>` (urp only); an absent pair is computed
  as `a' v L(a, b)`. With `derived-imp`, explicit entries must agree
  with that formula.
- `#` starts a comment.
"""

import logging

import networkx as nx
import numpy as np

from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    PartialBinaryOp,
    Subset,
    covering_pairs,
    lift_join,
    lower_cone,
    validate_poset,
)
from orthomodular_py.urp import SetValuedBinaryOp, UnsharpResiduatedStructure
from orthomodular_py.utls import (
    UNDEFINED,
    PartialityError,
    StructureError,
    StructureFileError,
)

KINDS = ("omp", "urp")
SINGLE_DIRECTIVES = ("structure", "elements", "bot", "top", "end")
URP_DIRECTIVES = ("odot", "imp")
DIRECTIVES = SINGLE_DIRECTIVES + ("le", "inv") + URP_DIRECTIVES


class _ParseState:
    """
    NOT INTENDED TO BE CALLED DIRECTLY BY A USER!

    See `orthomodular_py.helpers.structure_file.parse()`
    """

    def __init__(self):
        self.kind = ""
        self.name = ""
        self.derived_imp = False
        self.elements = []
        self.index = {}
        self.graph = nx.DiGraph()
        self.bot = None
        self.top = None
        self.inv = {}
        self.odot = {}
        self.imp = {}
        self.seen = {}
        self.last_line = 0

    def element(self, token: str, line_number: int) -> int:
        if not self.elements:
            raise StructureFileError(
                "`elements` must be declared before any element is used.",
                line_number,
            )
        try:
            return self.index[token]
        except KeyError:
            raise StructureFileError(
                f"Unknown element `{token}`.", line_number
            )

    def add_order(self, a: int, b: int, line_number: int) -> None:
        if a != b and nx.has_path(self.graph, b, a):
            raise StructureFileError(
                "Antisymmetry violated after closure: "
                + f"{self.elements[a]} <= {self.elements[b]} and "
                + f"{self.elements[b]} <= {self.elements[a]}, but "
                + f"{self.elements[a]} and {self.elements[b]} "
                + "are distinct.",
                line_number,
            )
        self.graph.add_edge(a, b)


def _expect_arity(
    tokens: list, minimum: int, maximum: int | None, line_number: int
) -> None:
    count = len(tokens) - 1
    if count < minimum or (maximum is not None and count > maximum):
        if maximum is None:
            expected = f"at least {minimum}"
        elif minimum == maximum:
            expected = f"{minimum}"
        else:
            expected = f"{minimum} to {maximum}"
        raise StructureFileError(
            f"`{tokens[0]}` takes {expected} argument(s), got {count}.",
            line_number,
        )


def _read_directive(state: _ParseState, tokens: list, line_number: int):
    directive = tokens[0]
    if directive not in DIRECTIVES:
        raise StructureFileError(
            f"Unknown directive `{directive}`.", line_number
        )
    if "end" in state.seen:
        raise StructureFileError(
            f"`{directive}` appears after `end`.", line_number
        )
    if directive != "structure" and "structure" not in state.seen:
        raise StructureFileError(
            "The file must start with a `structure` directive.", line_number
        )
    if directive in SINGLE_DIRECTIVES and directive in state.seen:
        raise StructureFileError(
            f"Duplicate `{directive}` directive "
            + f"(first given on line {state.seen[directive]}).",
            line_number,
        )
    if directive in URP_DIRECTIVES and state.kind != "urp":
        raise StructureFileError(
            f"`{directive}` is only allowed in `structure urp` files.",
            line_number,
        )
    state.seen.setdefault(directive, line_number)

    if directive == "structure":
        _expect_arity(tokens, 2, 3, line_number)
        if tokens[1] not in KINDS:
            raise StructureFileError(
                f"`{tokens[1]}` is not a structure kind. "
                + f"Known kinds: {', '.join(KINDS)}.",
                line_number,
            )
        state.kind = tokens[1]
        state.name = tokens[2]
        if len(tokens) == 4:
            if tokens[3] != "derived-imp" or state.kind != "urp":
                raise StructureFileError(
                    f"Unexpected flag `{tokens[3]}`; only `structure urp` "
                    + "accepts `derived-imp`.",
                    line_number,
                )
            state.derived_imp = True
    elif directive == "elements":
        _expect_arity(tokens, 1, None, line_number)
        for token in tokens[1:]:
            if token in state.index:
                raise StructureFileError(
                    f"Duplicate element name `{token}`.", line_number
                )
            state.index[token] = len(state.elements)
            state.elements.append(token)
        state.graph.add_nodes_from(range(len(state.elements)))
    elif directive == "le":
        _expect_arity(tokens, 2, 2, line_number)
        a = state.element(tokens[1], line_number)
        b = state.element(tokens[2], line_number)
        state.add_order(a, b, line_number)
    elif directive in ("bot", "top"):
        _expect_arity(tokens, 1, 1, line_number)
        x = state.element(tokens[1], line_number)
        for y in range(len(state.elements)):
            if directive == "bot":
                state.add_order(x, y, line_number)
            else:
                state.add_order(y, x, line_number)
        setattr(state, directive, x)
    elif directive == "inv":
        _expect_arity(tokens, 2, 2, line_number)
        a = state.element(tokens[1], line_number)
        b = state.element(tokens[2], line_number)
        for x, y in ((a, b), (b, a)):
            if state.inv.get(x, y) != y:
                raise StructureFileError(
                    "The involution is not involutive: "
                    + f"{state.elements[x]}' is already "
                    + f"{state.elements[state.inv[x]]}, "
                    + f"not {state.elements[y]}.",
                    line_number,
                )
        state.inv[a] = b
        state.inv[b] = a
    elif directive == "odot":
        _expect_arity(tokens, 3, 3, line_number)
        a, b, c = (state.element(t, line_number) for t in tokens[1:])
        if (a, b) in state.odot:
            raise StructureFileError(
                f"Duplicate `odot {tokens[1]} {tokens[2]}` directive.",
                line_number,
            )
        state.odot[a, b] = (c, line_number)
    elif directive == "imp":
        _expect_arity(tokens, 2, None, line_number)
        a, b = (state.element(t, line_number) for t in tokens[1:3])
        if (a, b) in state.imp:
            raise StructureFileError(
                f"Duplicate `imp {tokens[1]} {tokens[2]}` directive.",
                line_number,
            )
        values = [state.element(t, line_number) for t in tokens[3:]]
        state.imp[a, b] = (Subset.of(len(state.elements), values), line_number)


def _build_poset(state: _ParseState) -> BoundedInvolutivePoset:
    end_line = state.seen["end"]
    n = len(state.elements)
    for directive in ("elements", "bot", "top"):
        if directive not in state.seen:
            raise StructureFileError(
                f"Missing `{directive}` directive.", end_line
            )
    missing = [state.elements[x] for x in range(n) if x not in state.inv]
    if missing:
        raise StructureFileError(
            f"The involution is not given for {', '.join(missing)}.",
            end_line,
        )

    closure = nx.transitive_closure(state.graph, reflexive=True)
    le = nx.to_numpy_array(closure, nodelist=list(range(n)), dtype=bool)
    inv = [state.inv[x] for x in range(n)]
    try:
        report = validate_poset(
            le, inv, state.bot, state.top,
            labels=state.elements, name=state.name,
        )
    except StructureError as e:
        raise StructureFileError(str(e), end_line)
    if report.structure is None:
        raise StructureFileError(
            f"`{state.name}` is not a bounded poset with an "
            + "antitone involution.",
            end_line,
            report=report,
        )
    return report.structure


def _build_urp(
    state: _ParseState, P: BoundedInvolutivePoset
) -> UnsharpResiduatedStructure:
    n = P.n
    end_line = state.seen["end"]
    labels = P.labels

    table = np.full((n, n), UNDEFINED, dtype=np.int16)
    for (a, b), (c, _) in state.odot.items():
        table[a, b] = c
    for (a, b), (c, _) in state.odot.items():
        if (b, a) not in state.odot:
            table[b, a] = c

    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            try:
                formula = lift_join(P, lower_cone(P, P.subset(a, b)), P.inv[a])
            except PartialityError:
                formula = None
            if (a, b) in state.imp:
                given, line_number = state.imp[a, b]
                if state.derived_imp and given != formula:
                    raise StructureFileError(
                        f"`imp {labels[a]} {labels[b]}` gives "
                        + f"{given.render(labels)}, but "
                        + f"{labels[a]}' v L({labels[a]},{labels[b]}) "
                        + "is "
                        + ("undefined" if formula is None
                           else formula.render(labels))
                        + " and the structure declares `derived-imp`.",
                        line_number,
                    )
                row.append(given)
            elif formula is None:
                raise StructureFileError(
                    f"`imp {labels[a]} {labels[b]}` is not given and "
                    + f"{labels[a]}' v L({labels[a]},{labels[b]}) "
                    + "is undefined.",
                    end_line,
                )
            else:
                row.append(formula)
        rows.append(tuple(row))

    return UnsharpResiduatedStructure(
        poset=P,
        odot=PartialBinaryOp(table),
        imp=SetValuedBinaryOp(tuple(rows)),
        name=state.name,
        derived_imp=state.derived_imp,
    )


def parse(text: str) -> BoundedInvolutivePoset | UnsharpResiduatedStructure:
    """
    Parses a structure file.

    Parameters
    ----------
    `text` (str, mandatory):
        Required argument.
        The content of a structure file.

    Usage
    ----------
    ```python
    from orthomodular_py.helpers.structure_file import parse

    with open("example2.urp", "r", encoding="utf-8") as f:
        S = parse(f.read())
    ```

    Returns
    ----------
    A `BoundedInvolutivePoset` for `structure omp` files, or an
    `UnsharpResiduatedStructure` for `structure urp` files.
    Raises a `StructureFileError` with the offending line number for
    unknown elements or directives, duplicate directives, antisymmetry
    violations after closure, and a non-involutive `inv`.
    If the poset laws fail otherwise, the error carries the
    `ValidationReport` in `.report`.
    """
    state = _ParseState()
    for line_number, line in enumerate(text.splitlines(), start=1):
        state.last_line = line_number
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        _read_directive(state, tokens, line_number)

    if "structure" not in state.seen:
        raise StructureFileError(
            "No `structure` directive found.", state.last_line
        )
    if "end" not in state.seen:
        raise StructureFileError("Missing `end` directive.", state.last_line)

    P = _build_poset(state)
    if state.kind == "omp":
        logging.debug(f"Parsed the poset `{state.name}` ({P.n} elements).")
        return P
    S = _build_urp(state, P)
    logging.debug(
        f"Parsed the unsharp residuated poset `{state.name}` "
        + f"({P.n} elements, {len(state.odot)} product entries, "
        + f"{len(state.imp)} implication entries)."
    )
    return S


def _token(text: str, what: str) -> str:
    if not text or any(c.isspace() for c in text) or "#" in text:
        raise StructureError(
            f"The {what} `{text}` cannot be written to a structure file; "
            + "names must be non-empty and contain neither "
            + "whitespace nor `#`."
        )
    return text


def serialize(structure) -> str:
    """
    Writes a structure in the structure file format.

    The order is written as its covering pairs, each involution pair
    once, products for `a <= b` (by index) plus any entry whose mirror
    differs, and every implication entry unless the structure was
    built with `derived_imp=True`.
    `parse(serialize(x))` gives back an equal structure, and
    serializing it again yields the same text. A product defined in
    one direction only raises a `StructureError`.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.helpers.structure_file import serialize

    print(serialize(example2()))
    ```
    """
    if isinstance(structure, UnsharpResiduatedStructure):
        S = structure
        P = S.poset
        kind = "urp"
    elif isinstance(structure, BoundedInvolutivePoset):
        S = None
        P = structure
        kind = "omp"
    else:
        raise TypeError(
            f"Cannot serialize an object of type `{type(structure).__name__}`."
        )

    labels = [_token(x, "element name") for x in P.labels]
    name = _token(structure.name or "unnamed", "structure name")
    header = f"structure {kind} {name}"
    if S is not None and S.derived_imp:
        header += " derived-imp"

    lines = [header, "elements " + " ".join(labels)]
    for a, b in covering_pairs(P):
        lines.append(f"le {labels[a]} {labels[b]}")
    lines.append(f"bot {labels[P.bot]}")
    lines.append(f"top {labels[P.top]}")
    for x in range(P.n):
        if x <= P.inv[x]:
            lines.append(f"inv {labels[x]} {labels[P.inv[x]]}")

    if S is not None:
        for a in range(P.n):
            for b in range(P.n):
                value = S.odot(a, b)
                if value == UNDEFINED:
                    continue
                if S.odot(b, a) == UNDEFINED:
                    raise StructureError(
                        f"`{labels[a]} * {labels[b]}` is defined but "
                        + f"`{labels[b]} * {labels[a]}` is not; a structure "
                        + "file cannot express a product that is defined "
                        + "in one direction only."
                    )
                if a <= b or S.odot(b, a) != value:
                    lines.append(
                        f"odot {labels[a]} {labels[b]} {labels[value]}"
                    )
        if not S.derived_imp:
            for a in range(P.n):
                for b in range(P.n):
                    targets = " ".join(labels[t] for t in S.imp(a, b))
                    lines.append(f"imp {labels[a]} {labels[b]} {targets}".rstrip())

    lines.append("end")
    return "\n".join(lines) + "\n"
