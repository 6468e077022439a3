import pytest

from orthomodular_py.catalog import (
    CATALOG,
    boolean_algebra,
    build,
    chain,
    even_subsets,
    example2,
    hexagon,
    list_catalog,
    mo,
    orthomodular_catalog,
)
from orthomodular_py.omp import is_orthomodular
from orthomodular_py.order_core import meet
from orthomodular_py.search import canonical_form
from orthomodular_py.urp import UnsharpResiduatedStructure
from orthomodular_py.utls import UNDEFINED


def test_even_subsets_six():
    P = even_subsets(6)
    assert P.n == 32
    assert P.labels[P.bot] == "{}"
    assert P.labels[P.top] == "{1,2,3,4,5,6}"
    x = P.element("{1,2,3,4}")
    y = P.element("{2,3,4,5}")
    assert meet(P, x, y) == UNDEFINED
    assert P.inv[P.element("{1,2}")] == P.element("{3,4,5,6}")


def test_even_subsets_four_is_mo3():
    P = even_subsets(4)
    assert P.n == 8
    assert canonical_form(P) == canonical_form(mo(3))
    assert canonical_form(P) != canonical_form(boolean_algebra(3))


@pytest.mark.parametrize("m", [3, 5, 0, 14])
def test_even_subsets_rejects_bad_parameters(m):
    with pytest.raises(ValueError):
        even_subsets(m)


def test_even_subsets_eight_exceeds_the_carrier():
    with pytest.raises(ValueError):
        even_subsets(8)


def test_boolean_algebra_sizes():
    for k in range(1, 5):
        assert boolean_algebra(k).n == 2**k
    with pytest.raises(ValueError):
        boolean_algebra(7)


def test_small_catalog_isomorphisms():
    assert canonical_form(boolean_algebra(1)) == canonical_form(chain(2))
    assert canonical_form(boolean_algebra(2)) == canonical_form(mo(1))
    assert canonical_form(even_subsets(2)) == canonical_form(chain(2))


def test_mo_labels():
    assert mo(2).labels == ("0", "a", "a'", "b", "b'", "1")
    assert mo(1).labels == ("0", "a", "a'", "1")


def test_chain_and_hexagon_are_not_orthomodular():
    assert not is_orthomodular(chain(3))
    assert not is_orthomodular(chain(4))
    assert not is_orthomodular(hexagon())
    assert is_orthomodular(chain(2))


def test_example2_tables():
    S = example2()
    assert isinstance(S, UnsharpResiduatedStructure)
    assert not S.derived_imp
    P = S.poset
    assert P == mo(2)
    a, a_prime, b = (P.element(x) for x in ("a", "a'", "b"))
    assert S.odot(a, a) == a
    assert S.odot(a, b) == P.bot
    assert S.odot(P.top, b) == b
    assert S.imp(P.top, P.top) == P.full()
    assert S.imp(a, P.top) == P.subset(a_prime, P.top)
    assert S.imp(P.bot, b) == P.subset(P.top)


def test_build_by_name():
    assert build("even_subsets", ["4"]) == even_subsets(4)
    assert build("example2") == example2()
    assert build("hexagon", ()) == hexagon()


def test_build_errors():
    with pytest.raises(LookupError):
        build("octagon")
    with pytest.raises(ValueError):
        build("mo", [])
    with pytest.raises(ValueError):
        build("example2", [1])


def test_list_catalog():
    df = list_catalog()
    assert list(df.columns) == [
        "name", "params", "ranges", "kind", "description"
    ]
    assert set(df["name"]) == set(CATALOG)
    row = df.loc[df["name"] == "even_subsets"].iloc[0]
    assert row["params"] == "m"
    assert row["ranges"] == "2..6"


def test_orthomodular_catalog_is_orthomodular():
    for P in orthomodular_catalog():
        assert is_orthomodular(P), P.name


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_element_labels_are_unique(name):
    entry = CATALOG[name]
    params = tuple(lo for lo, _ in entry.param_ranges)
    labels = entry.element_labels(*params)
    assert len(set(labels)) == len(labels)
