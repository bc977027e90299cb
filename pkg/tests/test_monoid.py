import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from gcobordism.census import all_subgroups, count_abelian_subgroups
from gcobordism.closed_forms import r_elementary_abelian, tau
from gcobordism.groups import cyclic, group
from gcobordism.monoid import (BudgetExceeded, ExperimentalGenusWarning, GenusPair, as_tuple,
                               boundary_product, canonical_cyclic_genus1, concat,
                               enumerate_valid, freeness_report, is_valid, move_A, move_B,
                               move_C_ccw, move_C_cw, move_D, orbit_classes, r1, r2, rank,
                               sl2_mat_orbits)

SOUNDNESS = ["Z4", "Z2^2", "S3", "Q8", "D8"]


def brute_valid(G, genus):
    out = []
    for coords in itertools.product(range(G.order), repeat=2 * genus):
        t = as_tuple(zip(coords[0::2], coords[1::2]))
        prod = 0
        for g, k in t:
            prod = G.mul(G.commutator(k, g), prod)
        if prod == 0:
            out.append(t)
    return out


def test_boundary_product_order():
    G = group("S3")
    t = as_tuple([(1, 2), (3, 5)])
    expected = G.mul(G.commutator(5, 3), G.commutator(2, 1))
    assert boundary_product(G, t) == expected
    assert is_valid(G, as_tuple([(1, 1)]))
    assert is_valid(G, ())


@pytest.mark.parametrize("spec, genus", [("Z1", 1), ("Z3", 1), ("S3", 1), ("S3", 2),
                                         ("Q8", 1), ("Q8", 2), ("Z2^2", 2), ("D8", 1)])
def test_enumeration_brute_force(spec, genus):
    G = group(spec)
    T = enumerate_valid(G, genus)
    assert list(T) == brute_valid(G, genus)


def test_genus1_count_is_commuting_pairs():
    # |{(g,k): gk = kg}| = |G| * number of conjugacy classes
    for spec, classes in [("S3", 3), ("Q8", 5), ("D8", 5), ("A4", 4), ("D10", 4)]:
        G = group(spec)
        assert len(enumerate_valid(G, 1)) == G.order * classes


def test_genus0():
    T = enumerate_valid(group("S3"), 0)
    assert len(T) == 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_valid(group("D8"), 2, budget=1000)
    with pytest.raises(BudgetExceeded):
        sl2_mat_orbits(3, 4, budget=100)


def test_concat():
    a = as_tuple([(1, 2)])
    b = as_tuple([(3, 4), (5, 6)])
    assert concat(a, b) == (GenusPair(1, 2), GenusPair(3, 4), GenusPair(5, 6))
    assert concat((), b) == b


def _instances(G, t):
    for i in range(len(t)):
        yield "A", move_A(G, t, i)
        yield "D", move_D(G, t, i)
    for i in range(len(t) - 1):
        yield "B", move_B(G, t, i)
        yield "C_cw", move_C_cw(G, t, i)
        yield "C_ccw", move_C_ccw(G, t, i)


@pytest.mark.parametrize("spec", SOUNDNESS + ["A4"])
def test_moves_preserve_validity_and_class(spec):
    G = group(spec)
    part = orbit_classes(G, 2)
    labels = part.labels()
    for idx, t in enumerate(part.tuples):
        for name, out in _instances(G, t):
            if out is None:
                assert name == "B"
                continue
            assert is_valid(G, out), (name, t, out)
            assert labels[part.tuples.index_of(out)] == labels[idx]


@pytest.mark.parametrize("spec", SOUNDNESS)
def test_handle_exchanges_are_inverse(spec):
    G = group(spec)
    for t in enumerate_valid(G, 2):
        assert move_C_ccw(G, move_C_cw(G, t, 0), 0) == t
        assert move_C_cw(G, move_C_ccw(G, t, 0), 0) == t


@pytest.mark.parametrize("spec", ["S3", "Q8", "D8"])
def test_move_D_permutes_tuples(spec):
    G = group(spec)
    T = list(enumerate_valid(G, 2))
    for i in (0, 1):
        assert sorted(move_D(G, t, i) for t in T) == T


def test_move_B_pattern():
    G = group("S3")
    t = as_tuple([(1, 2), (3, 4)])
    assert G.inv(2) != 4 and move_B(G, t, 0) is None
    # (g, k)(g', k^-1) with commuting handles in an abelian group
    Z = group("Z4")
    t = as_tuple([(1, 1), (2, 3)])
    out = move_B(Z, t, 0)
    assert out == as_tuple([(3, 3), (2, 1)])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7), st.integers(-5, 5), st.integers(-5, 5))
def test_general_A_stays_in_class(g, k, a, b):
    G = group("D8")
    if G.mul(g, k) != G.mul(k, g):
        return
    part = orbit_classes(G, 1)
    t = as_tuple([(g, k)])
    assert part.same_class(t, move_A(G, t, 0, a, b))


def test_position_errors():
    G = group("S3")
    t = as_tuple([(0, 0), (0, 0)])
    with pytest.raises(IndexError):
        move_D(G, t, 2)
    with pytest.raises(IndexError):
        move_C_cw(G, t, 1)


def test_z2_genus1_classes():
    part = orbit_classes(group("Z2"), 1)
    assert part.class_count == 2
    assert part.representatives() == [as_tuple([(0, 0)]), as_tuple([(0, 1)])]
    assert part.class_of(as_tuple([(1, 0)])) == part.class_of(as_tuple([(1, 1)])) == 1


@pytest.mark.parametrize("n", range(1, 21))
def test_cyclic_partition_matches_euclid(n):
    G = cyclic(n)
    part = orbit_classes(G, 1)
    labels = part.labels()
    canon = {}
    for lab, (p,) in zip(labels, part.tuples):
        canon.setdefault(int(lab), set()).add(canonical_cyclic_genus1(n, p.g, p.k))
    assert all(len(v) == 1 for v in canon.values())
    assert part.class_count == tau(n) == len({c for v in canon.values() for c in v})


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (2, 4)])
def test_sl2_oracle(p, n):
    assert sl2_mat_orbits(p, n) == r_elementary_abelian(p, n)


@pytest.mark.parametrize("spec", ["S3", "D8", "Q8", "Z2^3", "D10", "A4", "Dic3", "Z3^2"])
def test_r1_vs_abelian_subgroups(spec):
    # the two agree on these groups; they part ways on e.g. Z2^3 and Z3^2
    G = group(spec)
    ab = count_abelian_subgroups(G)
    diff = {"Z2^3": -1, "Z3^2": 1}.get(spec, 0)
    assert r1(G) == ab + diff


@pytest.mark.parametrize("spec, value", [("S3", 1), ("D8", 1), ("Q8", 1), ("Dic3", 1),
                                         ("A4", 1), ("Z4", 0), ("Z2^2", 0), ("Z6", 0)])
def test_r2_small(spec, value):
    assert r2(group(spec)) == value


@pytest.mark.parametrize("spec", SOUNDNESS)
def test_freeness(spec):
    rep = freeness_report(group(spec))
    assert rep.commutative and rep.injective and rep.free
    assert rep.c2 >= rep.unordered_pairs


def _commutator_class_key(G, c):
    cls = {G.conjugate(c, x) for x in range(G.order)}
    cls |= {G.inv(y) for y in cls}
    return min(cls)


@pytest.mark.parametrize("spec", ["S3", "D8", "D10", "Dic3", "D14"])
def test_handle_commutator_classes_are_invariant(spec):
    # the multiset of handle commutator classes (up to inversion) is constant on each orbit
    G = group(spec)
    part = orbit_classes(G, 2)
    seen = {}
    for lab, t in zip(part.labels(), part.tuples):
        key = tuple(sorted(_commutator_class_key(G, G.commutator(k, g)) for g, k in t))
        assert seen.setdefault(int(lab), key) == key
    nontrivial = {key for key in seen.values() if key[0] != 0}
    assert r2(G, part2=part) >= len(nontrivial)


def test_rank():
    res = rank(group("S3"))
    assert res.components == (5, 1) and res.truncated and res.lower_bound == 6
    res = rank(group("Z6"), max_genus=1)
    assert res.components == (4,) and not res.truncated
    assert not rank(group("Z2^2")).truncated


def test_rank_genus3_experimental():
    with pytest.warns(ExperimentalGenusWarning):
        res = rank(group("Z2"), max_genus=3)
    assert res.experimental and res.components[:2] == (2, 0)
    with pytest.raises(ValueError):
        rank(group("Z3^2"), max_genus=3)


def test_orbit_genus3_warns():
    with pytest.warns(ExperimentalGenusWarning):
        part = orbit_classes(group("Z2"), 3)
    # abelian Z2: genus-3 classes are the multisets of genus-1 classes
    assert part.class_count == 4


def test_diagnostics_only_count_B():
    part = orbit_classes(group("S3"), 2)
    assert set(part.diagnostics) == {"A", "D", "B", "C_cw", "C_ccw"}
    assert all(v == 0 for k, v in part.diagnostics.items() if k != "B")


def test_deterministic():
    a = orbit_classes(group("Q8"), 2).labels()
    b = orbit_classes(group("Q8"), 2).labels()
    assert (a == b).all()
