import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcobordism.groups import (Atom, FiniteGroup, GroupError, OrderBoundError, Power,
                               SpecSyntaxError, build_group, commutator_subgroup, group,
                               load_cayley_file, parse_group_spec, pi0_count, save_cayley_file)

from conftest import SMALL_SPECS


def test_parse_atom():
    spec = parse_group_spec("Z4")
    assert spec.terms == (Power(Atom("Z", 4)),)


def test_parse_power_desugars():
    spec = parse_group_spec("Z2^3")
    assert list(spec.atoms()) == [Atom("Z", 2)] * 3


def test_parse_product():
    spec = parse_group_spec("D8 x Z3")
    assert list(spec.atoms()) == [Atom("D", 8), Atom("Z", 3)]
    assert str(spec) == "D8 x Z3"


def test_parse_file_atom():
    spec = parse_group_spec("file:/tmp/a b.txt x Z2")
    assert list(spec.atoms()) == [Atom("file", path="/tmp/a b.txt"), Atom("Z", 2)]


@pytest.mark.parametrize("text", ["", "   ", "Zx", "D7", "Z0", "Dic0", "S6", "Q9", "Z2^0",
                                  "Z2^", "Z2 x", "x Z2", "Z2 x x Z3", "Foo", "Z", "file:"])
def test_parse_rejects(text):
    with pytest.raises(SpecSyntaxError):
        parse_group_spec(text)


def test_syntax_error_has_position():
    with pytest.raises(SpecSyntaxError) as exc:
        parse_group_spec("Z2 x D7")
    assert exc.value.position == 6


@pytest.mark.parametrize("spec, order", [
    ("Z1", 1), ("Z4", 4), ("D8", 8), ("Dic3", 12), ("Q8", 8), ("S3", 6), ("S4", 24),
    ("A4", 12), ("A5", 60), ("Z2^3", 8), ("D8 x Z3", 24), ("Dic1", 4), ("D2", 2),
])
def test_orders(spec, order):
    assert group(spec).order == order


def test_trivial_group():
    G = group("Z1")
    assert G.table.tolist() == [[0]]


def test_dihedral_presentation():
    # r = 1, s = 4 in D8: r^4 = s^2 = 1, s r = r^-1 s
    G = group("D8")
    r, s = 1, 4
    assert G.element_order(r) == 4 and G.element_order(s) == 2
    assert G.mul(s, r) == G.mul(G.inv(r), s)


def test_dicyclic_presentation():
    # Dic3: r^6 = 1, r^3 = s^2, s r = r^-1 s; r = 1, s = 6
    G = group("Dic3")
    r, s = 1, 6
    assert G.element_order(r) == 6
    assert G.power(r, 3) == G.mul(s, s)
    assert G.mul(s, r) == G.mul(G.inv(r), s)
    assert not G.is_abelian


def test_order_bound():
    with pytest.raises(OrderBoundError):
        group("Z2^7")
    with pytest.raises(OrderBoundError):
        build_group(parse_group_spec("S5"), max_order=64)
    assert build_group("Z2^7", max_order=128).order == 128


def _axioms(G):
    T = G.table
    n = G.order
    assert T.min() >= 0 and T.max() < n
    assert (T[0] == np.arange(n)).all() and (T[:, 0] == np.arange(n)).all()
    for a, b, c in itertools.product(range(n), repeat=3):
        assert T[T[a, b], c] == T[a, T[b, c]]
    for a in range(n):
        assert T[a, G.inv(a)] == 0 and T[G.inv(a), a] == 0


@pytest.mark.parametrize("spec", SMALL_SPECS + ["A4", "Dic3", "Z3 x S3"])
def test_axioms_brute_force(spec):
    _axioms(group(spec))


def test_commutator_examples(groups):
    S3 = groups("S3")
    for a in range(6):
        assert S3.commutator(a, a) == 0
    Z = groups("Z2^2")
    assert (Z.commutator_table == 0).all()
    # transpositions in lexicographic S3: (0 2 1) -> index 1, (1 0 2) -> 2, (2 1 0) -> 5
    three_cycles = {3, 4}
    for a, b in [(1, 2), (1, 5), (2, 5)]:
        assert S3.commutator(a, b) in three_cycles


@pytest.mark.parametrize("spec", ["S3", "D8", "Q8", "A4", "Dic3"])
def test_commutator_convention_matches_relation_D(groups, spec):
    # [g^-1, g k g^-1] = [k, g] for all pairs; relation D relies on it
    G = groups(spec)
    for g in range(G.order):
        for k in range(G.order):
            assert G.commutator(G.inv(g), G.conjugate(k, g)) == G.commutator(k, g)


def test_commutator_subgroup_examples(groups):
    assert commutator_subgroup(groups("Z4")) == (0,)
    A = commutator_subgroup(groups("S3"))
    assert len(A) == 3 and all(groups("S3").element_order(x) in (1, 3) for x in A)
    Q = commutator_subgroup(groups("Q8"))
    assert len(Q) == 2
    centre = [z for z in range(8) if all(groups("Q8").mul(z, x) == groups("Q8").mul(x, z) for x in range(8))]
    assert sorted(Q) == sorted(centre)


@pytest.mark.parametrize("spec, count", [("Z5", 5), ("Z12", 12), ("S3", 2), ("Q8", 4),
                                         ("D8", 4), ("A4", 3), ("S4", 2), ("A5", 1)])
def test_pi0(spec, count):
    assert pi0_count(group(spec)) == count


specs = st.lists(st.sampled_from(["Z2", "Z3", "Z4", "S3", "Q8", "D8", "Dic3", "A4"]),
                 min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(specs)
def test_build_deterministic_and_lagrange(atoms):
    text = " x ".join(atoms)
    try:
        G = group(text)
    except OrderBoundError:
        return
    assert np.array_equal(G.table, group(text).table)
    comm = commutator_subgroup(G)
    assert G.order % len(comm) == 0
    assert pi0_count(G) * len(comm) == G.order


@settings(max_examples=30, deadline=None)
@given(specs, specs)
def test_pi0_multiplicative(a, b):
    try:
        G, H = group(" x ".join(a)), group(" x ".join(b))
        GH = group(" x ".join(a + b))
    except OrderBoundError:
        return
    assert pi0_count(GH) == pi0_count(G) * pi0_count(H)


def test_cayley_roundtrip(tmp_path, groups):
    p = tmp_path / "q8.txt"
    save_cayley_file(groups("Q8"), p)
    G = load_cayley_file(p)
    assert G == groups("Q8")
    H = group(f"file:{p} x Z2")
    assert H.order == 16


@pytest.mark.parametrize("content", [
    "2\n0 1\n1 1\n",            # not a Latin square
    "2\n1 0\n0 1\n",            # identity not at 0
    "3\n0 1 2\n1 2 0\n",        # missing row
    "2\n0 1\n1 x\n",            # junk
    "2\n0 1\n1 2\n",            # out of range
])
def test_cayley_rejects(tmp_path, content):
    p = tmp_path / "bad.txt"
    p.write_text(content)
    with pytest.raises(GroupError):
        load_cayley_file(p)


def test_cayley_rejects_nonassociative(tmp_path):
    # Latin square with identity 0 that is not associative (order 5 loop)
    rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    p = tmp_path / "loop.txt"
    p.write_text("5\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n")
    with pytest.raises(GroupError, match="associative"):
        load_cayley_file(p)


def test_missing_file():
    with pytest.raises(GroupError):
        group("file:/nonexistent/table.txt")


def test_finite_group_validates():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
