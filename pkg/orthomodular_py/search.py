# File Name: `search.py`
# Purpose: Houses the exhaustive enumeration of small bounded posets
#     with an antitone involution and of small orthomodular posets,
#     canonical forms for isomorphism rejection, and the bulk stress
#     test of the two constructions on every enumerated structure.
# Creation Date: 2026-10-19 03:20 PM EDT
# Update History:
# - 2026-10-19 03:20 PM EDT
# - 2026-10-19 08:40 PM EDT


import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from os.path import exists
from typing import Iterator

import numpy as np
import pandas as pd
from tqdm import tqdm

from orthomodular_py.functors import roundtrip_P, to_urp
from orthomodular_py.helpers.structure_file import serialize
from orthomodular_py.omp import check_orthomodular
from orthomodular_py.order_core import (
    BoundedInvolutivePoset,
    _require_valid,
    validate_poset,
)
from orthomodular_py.urp import validate_urp
from orthomodular_py.utls import (
    PreconditionError,
    StructureError,
    TheoremViolationError,
    _get_cache_dir,
)

STRUCTURE_CLASSES = ("involutive-poset", "orthomodular-poset")
MIN_SEARCH_SIZE = 2
MAX_SEARCH_SIZE = 8
MAX_CANONICAL_SIZE = 10


@dataclass(frozen=True)
class SearchSpec:
    """
    What to enumerate.

    `structure_class` is either `"involutive-poset"` or
    `"orthomodular-poset"`; `canonical` turns isomorphism rejection on;
    `emit` is either `"count"` or `"stream"`; `jobs` is the number of
    worker processes.
    """

    size: int
    structure_class: str = "orthomodular-poset"
    canonical: bool = True
    emit: str = "stream"
    jobs: int = 1

    def __post_init__(self):
        if self.size < MIN_SEARCH_SIZE or self.size > MAX_SEARCH_SIZE:
            raise ValueError(
                f"Search sizes are limited to {MIN_SEARCH_SIZE}.."
                + f"{MAX_SEARCH_SIZE}, got `{self.size}`; larger sizes "
                + "blow up combinatorially."
            )
        if self.structure_class not in STRUCTURE_CLASSES:
            raise ValueError(
                f"`{self.structure_class}` is not a known structure class. "
                + f"Known classes: {', '.join(STRUCTURE_CLASSES)}."
            )
        if self.emit not in ("count", "stream"):
            raise ValueError(
                f"`emit` must be `count` or `stream`, got `{self.emit}`."
            )
        if self.jobs < 1:
            raise ValueError(f"`jobs` must be at least 1, got `{self.jobs}`.")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    A deterministic encoding of (order matrix, involution), minimized
    over every relabeling that sends the bounds to the first and last
    index. Two structures have equal forms iff they are isomorphic.
    """

    data: bytes

    def hex(self) -> str:
        return self.data.hex()


@dataclass
class SearchResult:
    spec: SearchSpec
    count: int
    structures: list = field(default_factory=list)

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "size": self.spec.size,
                    "class": self.spec.structure_class,
                    "canonical": self.spec.canonical,
                    "count": self.count,
                }
            ]
        )


@dataclass
class StressSummary:
    size: int
    tested: int = 0
    failures: int = 0

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "size": self.size,
                    "tested": self.tested,
                    "failures": self.failures,
                }
            ]
        )


def _encode(le: np.ndarray, inv) -> bytes:
    return np.packbits(le).tobytes() + bytes(int(x) for x in inv)


def _refined_colors(P: BoundedInvolutivePoset, middle: list) -> dict:
    """
    Iso-invariant colors of the middle elements, refined by the
    colors of their strict lower and upper neighbourhoods and of
    their complement until the number of classes is stable.
    """
    le = P.le
    inv = P.inv
    colors = {
        x: (int(le[:, x].sum()), int(le[x, :].sum()), int(inv[x] == x))
        for x in middle
    }
    n_classes = len(set(colors.values()))
    while True:
        raw = {}
        for x in middle:
            below = sorted(
                colors[y] for y in middle if y != x and le[y, x]
            )
            above = sorted(
                colors[y] for y in middle if y != x and le[x, y]
            )
            raw[x] = (colors[x], colors[inv[x]], tuple(below), tuple(above))
        ranking = {v: i for i, v in enumerate(sorted(set(raw.values())))}
        refined = {x: ranking[raw[x]] for x in middle}
        if len(ranking) == n_classes:
            return refined
        colors = refined
        n_classes = len(ranking)


def _canonical_order(P: BoundedInvolutivePoset) -> tuple:
    """
    Returns `(form_bytes, order)` where `order[new] = old` is the
    relabeling that produces the minimal encoding.
    """
    middle = [x for x in range(P.n) if x not in (P.bot, P.top)]
    if P.bot == P.top:
        return _encode(P.le, P.inv), [P.bot]
    colors = _refined_colors(P, middle)
    classes = {}
    for x in middle:
        classes.setdefault(colors[x], []).append(x)
    blocks = [classes[c] for c in sorted(classes)]

    best = None
    best_order = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [P.bot]
        for block in choice:
            order.extend(block)
        order.append(P.top)
        position = {old: new for new, old in enumerate(order)}
        le = P.le[np.ix_(order, order)]
        inv = [position[P.inv[old]] for old in order]
        encoded = _encode(le, inv)
        if best is None or encoded < best:
            best = encoded
            best_order = order
    return best, best_order


def canonical_form(P: BoundedInvolutivePoset) -> CanonicalForm:
    """
    Returns the canonical form of `P`: the minimum encoding of the
    order matrix and the involution over all relabelings that fix the
    bounds at the first and last index. Permutations act on the order
    and on the involution simultaneously.

    Usage
    ----------
    ```python
    from orthomodular_py.catalog import boolean_algebra, mo
    from orthomodular_py.search import canonical_form

    assert canonical_form(boolean_algebra(2)) == canonical_form(mo(1))
    ```
    """
    if P.n > MAX_CANONICAL_SIZE:
        raise StructureError(
            f"Canonical forms are limited to {MAX_CANONICAL_SIZE} "
            + f"elements, got {P.n}."
        )
    data, _ = _canonical_order(P)
    return CanonicalForm(bytes([P.n]) + data)


def canonical_relabel(P: BoundedInvolutivePoset) -> BoundedInvolutivePoset:
    """
    Returns the isomorphic copy of `P` whose indexing realizes
    its canonical form.
    """
    _, order = _canonical_order(P)
    position = {old: new for new, old in enumerate(order)}
    le = P.le[np.ix_(order, order)]
    inv = [position[P.inv[old]] for old in order]
    labels = [P.labels[old] for old in order]
    return _require_valid(
        validate_poset(
            le, inv, 0, P.n - 1, labels=labels, name=P.name
        )
    )


def _natural_posets(m: int) -> list:
    """
    All posets on `{0, ..., m-1}` for which `0, ..., m-1` is a linear
    extension, as tuples of strict down-set bitmasks. Element `j` is
    added by choosing a down-closed subset of `{0, ..., j-1}` as its
    strict down-set, so every prefix is already a poset.
    """
    posets = [()]
    for j in range(m):
        extended = []
        for downs in posets:
            for D in range(1 << j):
                closed = True
                bits = D
                while bits:
                    low = bits & -bits
                    i = low.bit_length() - 1
                    if downs[i] & ~D:
                        closed = False
                        break
                    bits ^= low
                if closed:
                    extended.append(downs + (D,))
        posets = extended
    return posets


def _bounded_matrix(downs: tuple) -> np.ndarray:
    m = len(downs)
    n = m + 2
    le = np.eye(n, dtype=bool)
    le[0, :] = True
    le[:, n - 1] = True
    for j, D in enumerate(downs):
        for i in range(m):
            if (D >> i) & 1:
                le[i + 1, j + 1] = True
    return le


def _antitone_involutions(le: np.ndarray, fixed_points: bool) -> list:
    """
    Every involution of the carrier that swaps the bounds and is an
    order anti-automorphism, found by backtracking with pruning.
    """
    n = le.shape[0]
    down = le.sum(axis=0)
    up = le.sum(axis=1)
    sigma = [-1] * n
    sigma[0] = n - 1
    sigma[n - 1] = 0
    found = []

    def consistent(x: int) -> bool:
        sx = sigma[x]
        for u in range(n):
            su = sigma[u]
            if su == -1:
                continue
            if le[x, u] != le[su, sx] or le[u, x] != le[sx, su]:
                return False
        return True

    def extend(x: int) -> None:
        while x < n and sigma[x] != -1:
            x += 1
        if x == n:
            found.append(tuple(sigma))
            return
        for y in range(x, n):
            if sigma[y] != -1:
                continue
            if y == x and not fixed_points:
                continue
            if down[x] != up[y] or up[x] != down[y]:
                continue
            sigma[x] = y
            sigma[y] = x
            if consistent(x) and consistent(y):
                extend(x + 1)
            sigma[x] = -1
            sigma[y] = -1

    extend(1)
    return found


def _labels(n: int) -> list:
    return ["0"] + [f"x{i}" for i in range(1, n - 1)] + ["1"]


def _accept(le: np.ndarray, inv, structure_class: str):
    report = validate_poset(le, inv, 0, le.shape[0] - 1,
                            labels=_labels(le.shape[0]), witness_cap=1)
    P = report.structure
    if P is None:
        return None
    if structure_class == "orthomodular-poset":
        if not check_orthomodular(P, witness_cap=1).passed:
            return None
    return P


def _search_chunk(args: tuple) -> list:
    """
    Worker: enumerates the structures grown from a chunk of
    naturally labeled posets. Returns `(key, le_bytes, inv)` triples,
    keyed by canonical form (canonical mode) or by the labeled
    encoding.
    """
    chunk, size, structure_class, canonical = args
    # an orthomodular involution never fixes an element (x v x' = 1)
    fixed_points = structure_class != "orthomodular-poset"
    m = size - 2
    found = {}
    for downs in chunk:
        base = _bounded_matrix(downs)
        if canonical:
            matrices = [base]
        else:
            seen = set()
            matrices = []
            for perm in permutations(range(1, m + 1)):
                order = [0, *perm, size - 1]
                le = base[np.ix_(order, order)]
                key = le.tobytes()
                if key not in seen:
                    seen.add(key)
                    matrices.append(le)
        for le in matrices:
            for inv in _antitone_involutions(le, fixed_points):
                P = _accept(le, inv, structure_class)
                if P is None:
                    continue
                if canonical:
                    key = canonical_form(P).data
                else:
                    key = _encode(P.le, P.inv)
                if key not in found:
                    found[key] = (np.packbits(P.le).tobytes(), P.inv)
    return [(k, v[0], v[1]) for k, v in found.items()]


def _decode(le_bytes: bytes, inv, size: int, name: str):
    bits = np.unpackbits(np.frombuffer(le_bytes, dtype=np.uint8))
    le = bits[: size * size].reshape(size, size).astype(bool)
    return _require_valid(
        validate_poset(
            le, list(inv), 0, size - 1, labels=_labels(size), name=name
        )
    )


def _cache_path(spec: SearchSpec) -> str:
    folder = _get_cache_dir("search")
    return f"{folder}{spec.structure_class}_{spec.size}.csv"


def _load_cache(spec: SearchSpec) -> list | None:
    path = _cache_path(spec)
    if not exists(path):
        return None
    try:
        df = pd.read_csv(path, dtype=str)
        rows = []
        for key, le_hex, inv_str in zip(
            df["canonical"], df["order"], df["involution"]
        ):
            inv = tuple(int(x) for x in inv_str.split(" "))
            rows.append((bytes.fromhex(key), bytes.fromhex(le_hex), inv))
        return rows
    except Exception as e:
        logging.warning(
            f"Could not load the search cache `{path}` (`{e}`), "
            + "re-running the enumeration."
        )
        return None


def _save_cache(spec: SearchSpec, rows: list) -> None:
    df = pd.DataFrame(
        {
            "canonical": [k.hex() for k, _, _ in rows],
            "order": [le.hex() for _, le, _ in rows],
            "involution": [" ".join(str(x) for x in inv) for _, _, inv in rows],
        }
    )
    df.to_csv(_cache_path(spec), index=False)


def _search_rows(
    spec: SearchSpec, progress: bool = False, use_cache: bool = False
) -> list:
    if use_cache and spec.canonical:
        cached = _load_cache(spec)
        if cached is not None:
            logging.info(
                f"Loaded {len(cached)} {spec.structure_class}(s) "
                + f"of size {spec.size} from the cache."
            )
            return cached

    if not spec.canonical and spec.size >= 7:
        logging.warning(
            f"Labeled enumeration at size {spec.size} visits every "
            + "relabeling of every poset. This may take a long time."
        )

    naturals = _natural_posets(spec.size - 2)
    logging.info(
        f"Growing {spec.structure_class}(s) of size {spec.size} "
        + f"from {len(naturals)} naturally labeled poset(s)."
    )
    n_chunks = max(1, spec.jobs * 4)
    chunks = [naturals[i::n_chunks] for i in range(n_chunks)]
    chunks = [c for c in chunks if c]
    tasks = [
        (c, spec.size, spec.structure_class, spec.canonical) for c in chunks
    ]

    merged = {}
    if spec.jobs == 1:
        results = map(_search_chunk, tasks)
    else:
        executor = ProcessPoolExecutor(max_workers=spec.jobs)
        results = executor.map(_search_chunk, tasks)
    try:
        for part in tqdm(
            results,
            total=len(tasks),
            disable=not progress,
            desc=f"size {spec.size}",
        ):
            for key, le_bytes, inv in part:
                merged.setdefault(key, (le_bytes, inv))
    finally:
        if spec.jobs != 1:
            executor.shutdown()

    rows = [(k, v[0], v[1]) for k, v in sorted(merged.items())]
    if use_cache and spec.canonical:
        _save_cache(spec, rows)
    return rows


def enumerate_structures(
    spec: SearchSpec, progress: bool = False, use_cache: bool = False
) -> Iterator[BoundedInvolutivePoset]:
    """
    Enumerates the structures described by `spec`.

    The bounds are fixed at index `0` and `size - 1`. Orders are grown
    by extending down-sets (no invalid order is ever produced), and
    involutions by backtracking over order anti-automorphisms.
    With `canonical=True`, exactly one structure per isomorphism class
    is emitted, in its canonical indexing; otherwise every labeled
    structure with the bounds at the ends is emitted. The order of
    emission is deterministic regardless of `jobs`.

    Parameters
    ----------
    `spec` (SearchSpec, mandatory):
        Required argument.
        What to enumerate.

    `progress` (bool, optional):
        Optional argument.
        Shows a `tqdm` progress bar.

    `use_cache` (bool, optional):
        Optional argument.
        Reads and writes canonical results under
        `~/.orthomodular_py/search/`.

    Usage
    ----------
    ```python
    from orthomodular_py.search import SearchSpec, enumerate_structures

    spec = SearchSpec(size=6, structure_class="orthomodular-poset")
    for P in enumerate_structures(spec):
        print(P.n, P.labels)
    ```
    """
    for i, (_, le_bytes, inv) in enumerate(
        _search_rows(spec, progress=progress, use_cache=use_cache)
    ):
        P = _decode(
            le_bytes, inv, spec.size,
            name=f"{spec.structure_class}-{spec.size}-{i}",
        )
        if spec.canonical:
            P = canonical_relabel(P)
        yield P


def run_search(
    spec: SearchSpec, progress: bool = False, use_cache: bool = False
) -> SearchResult:
    """
    Runs a search and returns the count, plus the structures
    themselves when `spec.emit == "stream"`.
    """
    if spec.emit == "count":
        rows = _search_rows(spec, progress=progress, use_cache=use_cache)
        return SearchResult(spec=spec, count=len(rows))
    structures = list(
        enumerate_structures(spec, progress=progress, use_cache=use_cache)
    )
    return SearchResult(spec=spec, count=len(structures), structures=structures)


def stress_theorems(
    spec: SearchSpec, progress: bool = False, use_cache: bool = False
) -> StressSummary:
    """
    For every enumerated orthomodular poset `P`, checks that `R(P)`
    passes `validate_urp()` with divisibility, idempotence, and
    `x.0 = 0`, and that `P(R(P)) = P`.

    Raises a `TheoremViolationError` carrying the offending structure
    in the structure-file format on the first failure.

    Usage
    ----------
    ```python
    from orthomodular_py.search import SearchSpec, stress_theorems

    summary = stress_theorems(SearchSpec(size=6))
    print(summary.to_dataframe())
    ```
    """
    if spec.structure_class != "orthomodular-poset":
        raise PreconditionError(
            "The constructions only apply to orthomodular posets, "
            + f"not to `{spec.structure_class}`."
        )
    summary = StressSummary(size=spec.size)
    for P in enumerate_structures(spec, progress=progress, use_cache=use_cache):
        summary.tested += 1
        report = validate_urp(
            to_urp(P), require_divisible=True, require_idempotent=True
        )
        problem = ""
        if not report.passed:
            problem = "R(P) is not a divisible idempotent structure"
        elif not report["zero-absorption"].passed:
            problem = "R(P) does not satisfy x.0 = 0"
        elif not roundtrip_P(P).equal:
            problem = "P(R(P)) differs from P"
        if problem:
            summary.failures += 1
            raise TheoremViolationError(
                f"{problem} for an enumerated structure of size {P.n}.",
                serialized=serialize(P),
            )
    logging.info(
        f"Stress test of size {spec.size}: {summary.tested} structure(s), "
        + f"{summary.failures} failure(s)."
    )
    return summary


def stress_up_to(
    max_size: int,
    canonical: bool = True,
    jobs: int = 1,
    progress: bool = False,
    use_cache: bool = False,
) -> pd.DataFrame:
    """
    Runs `stress_theorems()` for every size from 2 up to `max_size`
    and returns one summary row per size.
    """
    frames = []
    for size in range(MIN_SEARCH_SIZE, max_size + 1):
        spec = SearchSpec(
            size=size,
            structure_class="orthomodular-poset",
            canonical=canonical,
            jobs=jobs,
        )
        summary = stress_theorems(spec, progress=progress, use_cache=use_cache)
        frames.append(summary.to_dataframe())
    return pd.concat(frames, ignore_index=True)
