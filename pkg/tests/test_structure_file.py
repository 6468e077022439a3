import pytest

from orthomodular_py.catalog import (
    chain,
    even_subsets,
    example2,
    hexagon,
    mo,
    orthomodular_catalog,
)
from orthomodular_py.functors import to_urp
from orthomodular_py.helpers.structure_file import parse, serialize
from orthomodular_py.omp import check_orthomodular
from orthomodular_py.order_core import BoundedInvolutivePoset
from orthomodular_py.urp import UnsharpResiduatedStructure, validate_urp
from orthomodular_py.utls import UNDEFINED, StructureError, StructureFileError

TWO_CHAIN = """\
structure omp two
elements 0 1
bot 0
top 1
inv 0 1
end
"""


def _parse_error(text):
    with pytest.raises(StructureFileError) as info:
        parse(text)
    return info.value


def test_example2_fixture(fixtures_dir):
    S = parse((fixtures_dir / "example2.urp").read_text(encoding="utf-8"))
    assert isinstance(S, UnsharpResiduatedStructure)
    assert S == example2()
    assert S.name == "example2"
    assert validate_urp(
        S, require_divisible=True, require_idempotent=True
    ).passed


def test_mutant_fixture(fixtures_dir, ex2):
    S = parse((fixtures_dir / "mutant.urp").read_text(encoding="utf-8"))
    a = S.poset.element("a")
    assert S.imp(a, a) == S.poset.subset_of_labels("a'")
    assert S != ex2
    assert not validate_urp(S).passed


def test_hexagon_fixture(fixtures_dir):
    P = parse((fixtures_dir / "hexagon.omp").read_text(encoding="utf-8"))
    assert isinstance(P, BoundedInvolutivePoset)
    assert P == hexagon()
    assert not check_orthomodular(P).passed


def test_two_chain():
    P = parse(TWO_CHAIN)
    assert P == chain(2)
    assert P.name == "two"


def test_serialize_is_stable(ex2):
    text = serialize(ex2)
    assert text.endswith("end\n")
    assert text.splitlines()[0] == "structure urp example2"
    assert serialize(parse(text)) == text


def test_serialize_derived_structure(mo2, ex2):
    S = to_urp(mo2)
    text = serialize(S)
    assert text.splitlines()[0] == "structure urp R(mo(2)) derived-imp"
    assert "imp " not in text
    parsed = parse(text)
    assert parsed == ex2
    assert parsed.derived_imp


@pytest.mark.parametrize(
    "structure",
    orthomodular_catalog() + [hexagon(), chain(5)],
    ids=lambda P: P.name,
)
def test_parse_serialize_posets(structure):
    text = serialize(structure)
    parsed = parse(text)
    assert parsed == structure
    assert parsed.labels == structure.labels
    assert serialize(parsed) == text


def test_parse_serialize_partial_product():
    S = to_urp(even_subsets(6))
    parsed = parse(serialize(S))
    assert parsed == S
    x, y = S.poset.element("{1,2,3,4}"), S.poset.element("{2,3,4,5}")
    assert parsed.odot(x, y) == UNDEFINED


def test_one_sided_product_cannot_be_written(ex2):
    P = ex2.poset
    a, a_prime = P.element("a"), P.element("a'")
    mutant = ex2.with_odot(a_prime, a, UNDEFINED, symmetric=False)
    assert mutant.odot(a, a_prime) != UNDEFINED
    assert not validate_urp(mutant).passed
    with pytest.raises(StructureError) as info:
        serialize(mutant)
    assert "one direction" in str(info.value)


def test_unnamed_structure():
    P = parse(serialize(mo(1)))
    anonymous = BoundedInvolutivePoset(P.le, P.inv, P.bot, P.top, P.labels)
    assert serialize(anonymous).startswith("structure omp unnamed\n")


def test_odot_is_mirrored():
    text = """\
structure urp two
elements 0 1
bot 0
top 1
inv 0 1
odot 0 0 0
odot 0 1 0
odot 1 1 1
end
"""
    S = parse(text)
    assert S.odot(1, 0) == 0
    # imp is computed where it is not given
    assert S.imp(1, 1) == S.poset.full()
    assert validate_urp(S).passed


def test_comments_and_blank_lines():
    text = "# a comment\n\n" + TWO_CHAIN.replace("top 1", "top 1   # top")
    assert parse(text) == chain(2)


def test_antisymmetry_error():
    text = TWO_CHAIN.replace("inv 0 1", "le 1 0\ninv 0 1")
    error = _parse_error(text)
    assert error.line_number == 5
    assert "Antisymmetry violated after closure" in str(error)


def test_unknown_element():
    error = _parse_error(TWO_CHAIN.replace("top 1", "top 2"))
    assert error.line_number == 4
    assert "Unknown element `2`" in str(error)


def test_unknown_directive():
    error = _parse_error(TWO_CHAIN.replace("bot 0", "bottom 0"))
    assert error.line_number == 3


def test_duplicate_directive():
    error = _parse_error(TWO_CHAIN.replace("top 1", "top 1\ntop 1"))
    assert error.line_number == 5
    assert "line 4" in str(error)


def test_non_involutive_map():
    text = """\
structure omp three
elements 0 m 1
bot 0
top 1
inv 0 1
inv m m
inv m 1
end
"""
    error = _parse_error(text)
    assert error.line_number == 7
    assert "not involutive" in str(error)


def test_missing_structure_and_end():
    assert "structure" in str(_parse_error("elements 0 1\n"))
    error = _parse_error(TWO_CHAIN.replace("end\n", ""))
    assert "Missing `end`" in str(error)


def test_missing_involution():
    error = _parse_error(TWO_CHAIN.replace("inv 0 1\n", ""))
    assert error.line_number == 5


def test_product_only_in_urp_files():
    error = _parse_error(TWO_CHAIN.replace("inv 0 1", "inv 0 1\nodot 0 0 0"))
    assert error.line_number == 6


def test_poset_law_failures_carry_the_report():
    text = TWO_CHAIN.replace("inv 0 1", "inv 0 0\ninv 1 1")
    error = _parse_error(text)
    assert error.report is not None
    assert not error.report["bound-complementation"].passed


def test_derived_imp_mismatch(ex2):
    text = serialize(ex2).replace(
        "structure urp example2", "structure urp example2 derived-imp"
    )
    parse(text)
    tampered = text.replace("imp a a a' 1\n", "imp a a a'\n")
    error = _parse_error(tampered)
    assert "derived-imp" in str(error)


def test_names_must_be_tokens():
    P = mo(1)
    renamed = BoundedInvolutivePoset(
        P.le, P.inv, P.bot, P.top, ("0", "a b", "c", "1"), name="bad"
    )
    with pytest.raises(StructureError):
        serialize(renamed)
    with pytest.raises(TypeError):
        serialize("mo(1)")
