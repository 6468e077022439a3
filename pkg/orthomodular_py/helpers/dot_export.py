# File Name: `dot_export.py`
# Purpose: Houses the export of order diagrams (Hasse diagrams)
#     to graphviz DOT text.
# Creation Date: 2026-10-19 07:10 PM EDT
# Update History:
# - 2026-10-19 07:10 PM EDT

"""
Export an order diagram to graphviz DOT text.

After saving the output to `poset.gv`, lay it out and plot it with

    dot -Tpng -O poset.gv
"""

from orthomodular_py.order_core import BoundedInvolutivePoset, covering_pairs
from orthomodular_py.urp import UnsharpResiduatedStructure


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(structure, show_involution: bool = False) -> str:
    """
    Returns the order diagram of `structure` as a directed DOT graph.

    Only the covering relation is drawn (`a -> b` when `a < b` with
    nothing strictly in between), derived from the order matrix,
    with edges sorted by index and the bottom drawn at the bottom.

    Parameters
    ----------
    `structure` (BoundedInvolutivePoset or UnsharpResiduatedStructure,
    mandatory):
        Required argument.
        The structure to draw; for an unsharp residuated poset,
        its underlying poset is drawn.

    `show_involution` (bool, optional):
        Optional argument.
        Adds a dashed undirected edge `x -- x'` for every pair of
        distinct complementary elements.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import mo
    from orthomodular_py.helpers.dot_export import export_dot

    with open("mo2.gv", "w", encoding="utf-8") as f:
        f.write(export_dot(mo(2), show_involution=True))
    ```
    """
    if isinstance(structure, UnsharpResiduatedStructure):
        P = structure.poset
    elif isinstance(structure, BoundedInvolutivePoset):
        P = structure
    else:
        raise TypeError(
            f"Cannot draw an object of type `{type(structure).__name__}`."
        )

    lines = [f"digraph {_quote(P.name or 'poset')} {{"]
    append = lines.append
    append("\trankdir=BT;")
    append("\tnode [shape=circle];")
    for x in range(P.n):
        append(f"\t{x} [label={_quote(P.labels[x])}];")
    for a, b in covering_pairs(P):
        append(f"\t{a} -> {b};")
    if show_involution:
        for x in range(P.n):
            y = P.inv[x]
            if x < y:
                append(f"\t{x} -> {y} [style=dashed, dir=none, constraint=false];")
    append("}")
    return "\n".join(lines) + "\n"
