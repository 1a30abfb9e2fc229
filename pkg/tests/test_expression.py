import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bingbound.catalog import DEFAULT_CATALOG, KnotCatalog, canonical_name, load_catalog, parse_tau_table
from bingbound.errors import NoMatrixForAtomError, ParseError, UnknownAtomError
from bingbound.expression import (
    Atom,
    Mirror,
    Multiple,
    RawMatrix,
    Reverse,
    Sum,
    atoms,
    block_counts,
    evaluate,
    parse,
    to_text,
)
from bingbound.seifert import UNKNOT, block_sum, torus_knot, twist_knot

T23 = Atom("T(2,3)")


def test_parse_atoms():
    assert parse("T(2,3)") == T23
    assert parse(" T( 2 , 3 ) ") == T23
    assert parse("4_1") == Atom("4_1")
    assert parse("twist(-2)") == Atom("twist(-2)")
    assert parse("unknot") == Atom("unknot")


def test_parse_operators():
    e = parse("2*(T(2,3) # rev(T(2,3))) # mirror(4_1)")
    assert e == Sum(Multiple(2, Sum(T23, Reverse(T23))), Mirror(Atom("4_1")))


def test_sum_is_left_associative():
    assert parse("3_1 # 4_1 # 5_1") == Sum(Sum(Atom("3_1"), Atom("4_1")), Atom("5_1"))


def test_whitehead_double_atom():
    assert parse("D(T(2,3))") == Atom("D(T(2,3))")
    assert parse("D( T(2, 3) )") == Atom("D(T(2,3))")


def test_inline_matrix_literal():
    e = parse("[[-1,1],[0,-1]]")
    assert isinstance(e, RawMatrix)
    assert evaluate(e) == torus_knot(2, 3)


def test_matrix_file(tmp_path):
    (tmp_path / "k.txt").write_text("-1 1\n0 1\n")
    e = parse("<file:k.txt> # T(2,3)", base_dir=tmp_path)
    assert evaluate(e) == block_sum(twist_knot(1), torus_knot(2, 3))
    assert to_text(e) == "<file:k.txt> # T(2,3)"


def test_missing_matrix_file_is_io_error(tmp_path):
    with pytest.raises(OSError):
        parse("<file:nope.txt>", base_dir=tmp_path)


@pytest.mark.parametrize(
    "text,pos",
    [("T(2,3) #", 8), ("", 0), ("T(2,3))", 6), ("0*T(2,3)", 0), ("foo(1)", 0), ("T(2,3) $", 7)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_evaluate_reverse_mirror():
    v = torus_knot(2, 3)
    assert evaluate(parse("rev(T(2,3))")) == v.transpose()
    assert evaluate(parse("mirror(T(2,3))")) == v.mirror()
    assert evaluate(parse("rev(mirror(T(2,3)))")) == v.mirror().transpose()
    assert evaluate(parse("unknot")) == UNKNOT


def test_evaluate_sum_and_multiple():
    v = torus_knot(2, 3)
    assert evaluate(parse("3*T(2,3)")) == block_sum(v, v, v)
    assert evaluate(parse("rev(T(2,3) # 4_1)")) == block_sum(v.transpose(), evaluate(Atom("4_1")).transpose())


def test_block_counts():
    c = block_counts(parse("2*(T(2,3) # rev(T(2,3))) # unknot"))
    v = torus_knot(2, 3)
    assert c == {v: 2, v.transpose(): 2}


def test_atoms_and_missing_matrix():
    assert atoms(parse("T(2,3) # rev(D(T(2,3)))")) == ["T(2,3)", "D(T(2,3))"]
    with pytest.raises(NoMatrixForAtomError):
        evaluate(parse("D(T(2,3))"))
    with pytest.raises(UnknownAtomError):
        evaluate(parse("9_42"))


def test_catalog_families():
    assert DEFAULT_CATALOG.lookup("T(2,5)").g3 == 2
    assert DEFAULT_CATALOG.lookup("T(2,5)").tau == 2
    assert DEFAULT_CATALOG.lookup("5_1").matrix == torus_knot(2, 5)
    assert DEFAULT_CATALOG.lookup("4_1").tau is None
    assert "T(2,4)" not in DEFAULT_CATALOG


def test_tau_table_and_overrides(caplog):
    table = parse_tau_table("# name tau\nT(2, 3) 1\n4_1 0\n")
    assert table == {"T(2,3)": 1, "4_1": 0}
    cat = DEFAULT_CATALOG.with_tau_overrides({"4_1": 0, "T(2,3)": 5})
    assert cat.lookup("4_1").tau == 0
    assert cat.lookup("T(2,3)").tau == 5
    assert "overrides" in caplog.text
    assert canonical_name("T( 2,3 )") == "T(2,3)"


def test_load_catalog(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text('{"K": {"matrix": [[-1, 1], [0, 1]], "g3": 1, "tau": 0}}')
    cat = load_catalog(path)
    assert isinstance(cat, KnotCatalog)
    assert evaluate(Atom("K"), cat) == twist_knot(1)
    assert cat.lookup("T(2,3)").g3 == 1


# -- round trip ---------------------------------------------------------------

_ATOMS = ["unknot", "T(2,3)", "4_1", "5_2", "T(3,4)", "twist(3)", "D(T(2,3))"]


def _exprs():
    leaf = st.sampled_from(_ATOMS).map(Atom) | st.just(RawMatrix(twist_knot(2)))
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.builds(Sum, inner, inner),
            st.builds(Reverse, inner),
            st.builds(Mirror, inner),
            st.builds(Multiple, st.integers(1, 3), inner),
        ),
        max_leaves=6,
    )


@settings(max_examples=150, deadline=None)
@given(_exprs())
def test_print_parse_round_trip(e):
    again = parse(to_text(e))
    assert to_text(again) == to_text(e)
    if "D(T(2,3))" not in atoms(e):
        assert evaluate(again) == evaluate(e)
