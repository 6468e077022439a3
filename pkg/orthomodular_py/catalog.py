# File Name: `catalog.py`
# Purpose: Houses generators for the standard example structures
#     (even-cardinality subsets, Boolean algebras, MO_k, chains,
#     the hexagon) and the transcribed six-element unsharp
#     residuated poset, used as fixtures everywhere.
# Creation Date: 2026-10-19 02:30 PM EDT
# Update History:
# - 2026-10-19 02:30 PM EDT
# - 2026-10-19 07:00 PM EDT


from dataclasses import dataclass
from string import ascii_lowercase
from typing import Callable

import numpy as np
import pandas as pd

from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    PartialBinaryOp,
    Subset,
    _require_valid,
    from_pairs,
    validate_poset,
)
from orthomodular_py.urp import SetValuedBinaryOp, UnsharpResiduatedStructure
from orthomodular_py.utls import MAX_CARRIER_SIZE


def _brace_label(mask: int, width: int) -> str:
    members = [str(i + 1) for i in range(width) if (mask >> i) & 1]
    return "{" + ",".join(members) + "}"


def _subset_lattice(
    masks: list, width: int, name: str
) -> BoundedInvolutivePoset:
    """
    Inclusion order on the given bitmasks (sorted ascending),
    with set complement as the involution.
    """
    index = {m: i for i, m in enumerate(masks)}
    full = (1 << width) - 1
    arr = np.array(masks, dtype=np.int64)
    le = (arr[:, None] & ~arr[None, :]) == 0
    inv = [index[full ^ m] for m in masks]
    labels = [_brace_label(m, width) for m in masks]
    return _require_valid(
        validate_poset(
            le, inv, index[0], index[full], labels=labels, name=name
        )
    )


def even_subsets(m: int) -> BoundedInvolutivePoset:
    """
    Returns the orthomodular poset of all subsets of `{1, ..., m}`
    of even cardinality, ordered by inclusion, with set complement.

    Parameters
    ----------
    `m` (int, mandatory):
        Required argument.
        An even integer. The carrier has `2^(m-1)` elements, so only
        `m` in `{2, 4, 6}` fits into the 64-element carrier limit.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import even_subsets
    from orthomodular_py.order_core import meet

    P = even_subsets(6)
    print(P.n)  # 32
    x = P.element("{1,2,3,4}")
    y = P.element("{2,3,4,5}")
    print(meet(P, x, y))  # -1, the meet does not exist
    ```

    Returns
    ----------
    A `BoundedInvolutivePoset`, indexed by bitmask order
    (bit `i` stands for the number `i + 1`), with labels like `{1,2}`.
    """
    if not isinstance(m, int) or m % 2 != 0:
        raise ValueError(
            f"`m` must be an even integer, got `{m}`."
        )
    if m < 2 or m > 12:
        raise ValueError(f"`m` must be between 2 and 12, got `{m}`.")
    if 2 ** (m - 1) > MAX_CARRIER_SIZE:
        raise ValueError(
            f"even_subsets({m}) has {2 ** (m - 1)} elements, "
            + f"more than the carrier limit of {MAX_CARRIER_SIZE}."
        )
    masks = [x for x in range(1 << m) if bin(x).count("1") % 2 == 0]
    return _subset_lattice(masks, m, name=f"even_subsets({m})")


def boolean_algebra(k: int) -> BoundedInvolutivePoset:
    """
    Returns the Boolean algebra of all subsets of `{1, ..., k}`,
    for `1 <= k <= 6`.
    """
    if not isinstance(k, int) or k < 1 or k > 6:
        raise ValueError(f"`k` must be between 1 and 6, got `{k}`.")
    return _subset_lattice(
        list(range(1 << k)), k, name=f"boolean_algebra({k})"
    )


def _atom_names(k: int) -> list:
    if k <= len(ascii_lowercase):
        return list(ascii_lowercase[:k])
    return [f"a{i + 1}" for i in range(k)]


def mo(k: int) -> BoundedInvolutivePoset:
    """
    Returns the orthomodular lattice MO_k: `0`, `1`, and `k` pairs of
    complementary atoms `x, x'` which are pairwise incomparable.

    Elements are indexed `0, a, a', b, b', ..., 1`, so `mo(2)` lists
    its elements in the same order as `example2()`.
    """
    if not isinstance(k, int) or k < 1 or k > 31:
        raise ValueError(f"`k` must be between 1 and 31, got `{k}`.")
    n = 2 * k + 2
    labels = ["0"]
    for name in _atom_names(k):
        labels.extend([name, f"{name}'"])
    labels.append("1")

    le = np.eye(n, dtype=bool)
    le[0, :] = True
    le[:, n - 1] = True
    inv = [n - 1]
    for i in range(k):
        inv.extend([2 + 2 * i, 1 + 2 * i])
    inv.append(0)
    return _require_valid(
        validate_poset(le, inv, 0, n - 1, labels=labels, name=f"mo({k})")
    )


def chain(n: int) -> BoundedInvolutivePoset:
    """
    Returns the `n`-element chain with the order-reversing involution.
    It is orthomodular only for `n = 2`.
    """
    if not isinstance(n, int) or n < 2 or n > MAX_CARRIER_SIZE:
        raise ValueError(
            f"`n` must be between 2 and {MAX_CARRIER_SIZE}, got `{n}`."
        )
    labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    le = np.triu(np.ones((n, n), dtype=bool))
    inv = [n - 1 - i for i in range(n)]
    return _require_valid(
        validate_poset(le, inv, 0, n - 1, labels=labels, name=f"chain({n})")
    )


def hexagon() -> BoundedInvolutivePoset:
    """
    Returns the six-element ortholattice `0 < a < b' < 1`,
    `0 < b < a' < 1`. It is a bounded poset with an antitone
    involution, but it is NOT orthomodular: `a <= b'` while
    `a v (b' ^ a') = a`.
    """
    labels = ["0", "a", "a'", "b", "b'", "1"]
    pairs = [(0, 1), (1, 4), (4, 5), (0, 3), (3, 2), (2, 5)]
    inv_pairs = [(0, 5), (1, 2), (3, 4)]
    return _require_valid(
        from_pairs(labels, pairs, inv_pairs, 0, 5, name="hexagon")
    )


_EXAMPLE2_LABELS = ["0", "a", "a'", "b", "b'", "1"]

_EXAMPLE2_ODOT = [
    ["0", "0", "0", "0", "0", "0"],
    ["0", "a", "0", "0", "0", "a"],
    ["0", "0", "a'", "0", "0", "a'"],
    ["0", "0", "0", "b", "0", "b"],
    ["0", "0", "0", "0", "b'", "b'"],
    ["0", "a", "a'", "b", "b'", "1"],
]

# "P" stands for the whole carrier
_EXAMPLE2_IMP = [
    [["1"], ["1"], ["1"], ["1"], ["1"], ["1"]],
    [["a'"], ["a'", "1"], ["a'"], ["a'"], ["a'"], ["a'", "1"]],
    [["a"], ["a"], ["a", "1"], ["a"], ["a"], ["a", "1"]],
    [["b'"], ["b'"], ["b'"], ["b'", "1"], ["b'"], ["b'", "1"]],
    [["b"], ["b"], ["b"], ["b"], ["b", "1"], ["b", "1"]],
    [["0"], ["0", "a"], ["0", "a'"], ["0", "b"], ["0", "b'"], "P"],
]


def example2() -> UnsharpResiduatedStructure:
    """
    Returns the six-element divisible idempotent unsharp residuated
    poset on `{0, a, a', b, b', 1}`, where `a, a', b, b'` are atoms as
    well as coatoms, with its product, implication, and involution
    tables stored literally (not derived from any formula).

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import example2
    from orthomodular_py.urp import imp_table_df, odot_table_df

    S = example2()
    print(odot_table_df(S))
    print(imp_table_df(S))
    ```
    """
    labels = _EXAMPLE2_LABELS
    idx = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    atoms = ["a", "a'", "b", "b'"]
    pairs = [(idx["0"], idx[x]) for x in atoms]
    pairs += [(idx[x], idx["1"]) for x in atoms]
    inv_pairs = [("0", "1"), ("a", "a'"), ("b", "b'")]
    poset = _require_valid(
        from_pairs(
            labels,
            pairs,
            [(idx[x], idx[y]) for x, y in inv_pairs],
            idx["0"],
            idx["1"],
            name="example2",
        )
    )

    odot = PartialBinaryOp(
        [[idx[cell] for cell in row] for row in _EXAMPLE2_ODOT]
    )
    imp_rows = []
    for row in _EXAMPLE2_IMP:
        imp_row = []
        for cell in row:
            if cell == "P":
                imp_row.append(Subset.full(n))
            else:
                imp_row.append(Subset.of(n, (idx[x] for x in cell)))
        imp_rows.append(tuple(imp_row))
    imp = SetValuedBinaryOp(tuple(imp_rows))
    return UnsharpResiduatedStructure(poset, odot, imp, name="example2")


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named generator. `params` names its integer parameters and
    `param_ranges` gives their inclusive bounds.
    """

    name: str
    params: tuple
    param_ranges: tuple
    build: Callable
    kind: str
    description: str

    def element_labels(self, *params: int) -> tuple:
        structure = self.build(*params)
        return structure.labels


CATALOG = {
    e.name: e
    for e in (
        CatalogEntry(
            "even_subsets",
            ("m",),
            ((2, 6),),
            even_subsets,
            "orthomodular-poset",
            "even-cardinality subsets of {1..m}, m even",
        ),
        CatalogEntry(
            "example2",
            (),
            (),
            example2,
            "unsharp-residuated-poset",
            "six-element divisible idempotent structure, literal tables",
        ),
        CatalogEntry(
            "boolean_algebra",
            ("k",),
            ((1, 6),),
            boolean_algebra,
            "orthomodular-poset",
            "power set of {1..k}",
        ),
        CatalogEntry(
            "mo",
            ("k",),
            ((1, 31),),
            mo,
            "orthomodular-poset",
            "0, 1 and k complementary atom pairs",
        ),
        CatalogEntry(
            "chain",
            ("n",),
            ((2, MAX_CARRIER_SIZE),),
            chain,
            "involutive-poset",
            "n-element chain, orthomodular only for n = 2",
        ),
        CatalogEntry(
            "hexagon",
            (),
            (),
            hexagon,
            "involutive-poset",
            "six-element ortholattice that is not orthomodular",
        ),
    )
}


def build(name: str, params: tuple | list = ()):
    """
    Builds a catalog structure by name.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import build

    P = build("even_subsets", [6])
    S = build("example2")
    ```

    Returns
    ----------
    A `BoundedInvolutivePoset` or an `UnsharpResiduatedStructure`.
    Raises a `LookupError` for unknown names and a `ValueError`
    for a wrong number of parameters or out-of-range values.
    """
    try:
        entry = CATALOG[name]
    except KeyError:
        raise LookupError(
            f"`{name}` is not in the catalog. "
            + f"Known names: {', '.join(sorted(CATALOG))}."
        )
    params = tuple(int(p) for p in params)
    if len(params) != len(entry.params):
        raise ValueError(
            f"`{name}` takes {len(entry.params)} parameter(s) "
            + f"({', '.join(entry.params) or 'none'}), got {len(params)}."
        )
    return entry.build(*params)


def list_catalog() -> pd.DataFrame:
    """
    Returns a `DataFrame` describing every catalog entry.
    """
    rows = []
    for entry in CATALOG.values():
        rows.append(
            {
                "name": entry.name,
                "params": " ".join(entry.params),
                "ranges": " ".join(
                    f"{lo}..{hi}" for lo, hi in entry.param_ranges
                ),
                "kind": entry.kind,
                "description": entry.description,
            }
        )
    return pd.DataFrame(
        rows, columns=["name", "params", "ranges", "kind", "description"]
    )


def orthomodular_catalog() -> list:
    """
    Every orthomodular poset of the catalog that is used as a fixture:
    `even_subsets(m)` for m in {2, 4, 6}, `boolean_algebra(k)` for
    k <= 4, `mo(k)` for k <= 4, and `chain(2)`.
    """
    posets = [even_subsets(m) for m in (2, 4, 6)]
    posets += [boolean_algebra(k) for k in range(1, 5)]
    posets += [mo(k) for k in range(1, 5)]
    posets.append(chain(2))
    return posets
