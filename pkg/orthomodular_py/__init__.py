"""
# Welcome!
This is the official docs page for the `orthomodular_py` python package.

`orthomodular_py` represents, validates, constructs and searches
finite orthomodular posets and finite unsharp residuated posets,
and checks the identities relating them by exhaustive computation.

# Basic Setup

## How to Install

This package can be installed from a checkout of its repository
through the [`pip` package manager](https://en.wikipedia.org/wiki/Pip_(package_manager))
with one of the following commands in your terminal/shell:
```
pip install .
```
OR
```
python -m pip install .
```

If you are using a Linux/Mac instance,
you may need to specify `python3` when installing, as shown below:
```
python3 -m pip install .
```

To also install the test tools (`pytest` and `hypothesis`):
```
python3 -m pip install ".[test]"
```

## How to Use
Every structure is finite, and elements are the indices
`0, ..., n - 1` of the carrier (with names in `labels`).
Structures are validated once, when they are built, and are immutable
afterwards. Every check returns a report listing each law with
(up to `witness_cap`) witnesses, and reports convert to `DataFrame`s.

```python
from orthomodular_py.catalog import even_subsets, example2
from orthomodular_py.functors import roundtrip_P, to_omp, to_urp
from orthomodular_py.omp import check_lemma1, check_orthomodular
from orthomodular_py.urp import imp_table_df, validate_urp

# The 32 even-cardinality subsets of {1, ..., 6}.
P = even_subsets(6)
print(check_orthomodular(P).to_text())
print(check_lemma1(P).to_dataframe())

# From an orthomodular poset to an unsharp residuated poset, and back.
S = to_urp(P)
print(validate_urp(S, require_divisible=True, require_idempotent=True).passed)
print(roundtrip_P(P).to_text())

# A structure given by its tables.
print(imp_table_df(example2()))
Q = to_omp(example2())
```

The same checks are available from the command line:
```
orthomodular-py validate tests/fixtures/example2.urp
orthomodular-py roundtrip catalog:even_subsets 6
orthomodular-py search --size 6 --class orthomodular-poset --emit stream
orthomodular-py search --size 8 --stress --jobs 4
orthomodular-py export-dot catalog:mo 2 --show-involution
```
Exit codes are `0` when every check passes, `1` when violations were
found, and `2` for usage and parse errors.

# Dependencies

`orthomodular_py` is dependent on the following python packages:
- [`click`](https://github.com/pallets/click):
    For the `orthomodular-py` command line front end.
- [`networkx`](https://github.com/networkx/networkx):
    For transitive closures and covering relations (Hasse diagrams).
- [`numpy`](https://github.com/numpy/numpy):
    For order matrices and partial operation tables.
- [`pandas`](https://github.com/pandas-dev/pandas):
    For `DataFrame` renderings of reports, tables, and search summaries,
    and for the search cache.
- [`tqdm`](https://github.com/tqdm/tqdm):
    Used to show progress bars for searches
    that are known to take minutes to run.

# License

This package is licensed under the MIT license.

"""

from orthomodular_py.order_core import *  # noqa: F403
from orthomodular_py.omp import *  # noqa: F403
from orthomodular_py.urp import *  # noqa: F403
from orthomodular_py.functors import *  # noqa: F403
from orthomodular_py.catalog import *  # noqa: F403
from orthomodular_py.search import *  # noqa: F403
