"""
The genus-graded tuple monoid and its orbit counts.

A genus-n element is a sequence of pairs (g_1, k_1) ... (g_n, k_n) with

    [k_n, g_n] [k_(n-1), g_(n-1)] ... [k_1, g_1] = e,   [a, b] = a b a^-1 b^-1.

Tuples are identified under the rewrite moves below; the number of classes
in each genus gives r_1(G), r_2(G), ... .  Positions ``i`` are 0-based.

Moves on a pair (g, k), with h = k g k^-1:

    A   (g, k)  ->  (g, h^a k g^b)
    D   (g, k)  ->  (g k g^-1, g^-1)

Moves on adjacent pairs P = (g, k), P' = (g', k'), with c = [k, g], c' = [k', g']:

    B      (g, k)(g', k^-1)  ->  (g^-1, k^-1)(k^-2 g'^-1 k^2, k)   kept only if still valid
    C_cw   P P'  ->  P' (c' P c'^-1)
    C_ccw  P P'  ->  (c^-1 P' c) P

where x P x^-1 conjugates both coordinates.  C_cw and C_ccw are inverse
handle exchanges; each preserves the local product c' c.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .groups import FiniteGroup
from .unionfind import UnionFind

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    pass


class FreenessViolation(RuntimeError):
    """Genus-2 classes are inconsistent with a free commutative monoid."""


class ExperimentalGenusWarning(UserWarning):
    pass


class GenusPair(NamedTuple):
    g: int
    k: int


def as_tuple(pairs):
    return tuple(GenusPair(int(g), int(k)) for g, k in pairs)


def concat(t1, t2):
    return as_tuple(tuple(t1) + tuple(t2))


def boundary_product(G: FiniteGroup, t):
    p = 0
    for g, k in t:
        p = int(G.mul(G.commutator(k, g), p))
    return p


def is_valid(G: FiniteGroup, t):
    return boundary_product(G, t) == 0


# Move formulas, written once for ints or integer arrays.


def _A(G, g, k, a=0, b=1):
    if a == 0 and b == 1:
        return g, G.mul(k, g)
    h = G.conjugate(g, k)
    return g, G.mul(G.mul(_pow(G, h, a), k), _pow(G, g, b))


def _pow(G, x, e):
    r = np.zeros_like(x)
    for _ in range(e):
        r = G.mul(r, x)
    return r


def _D(G, g, k):
    return G.conjugate(k, g), G.inv(g)


def _B(G, g1, k1, g2, k2):
    kk = G.mul(k1, k1)
    return G.inv(g1), G.inv(k1), G.mul(G.mul(G.inv(kk), G.inv(g2)), kk), k1


def _B_applies(G, g1, k1, g2, k2):
    return k2 == G.inv(k1)


def _C_cw(G, g1, k1, g2, k2):
    c2 = G.commutator(k2, g2)
    return g2, k2, G.conjugate(g1, c2), G.conjugate(k1, c2)


def _C_ccw(G, g1, k1, g2, k2):
    ci = G.inv(G.commutator(k1, g1))
    return G.conjugate(g2, ci), G.conjugate(k2, ci), g1, k1


def _genus1_shear(G, g, k):
    # (g, k) ~ (g, k g)
    return g, G.mul(k, g)


def _genus1_rotate(G, g, k):
    # (g, k) ~ (k, g^-1)
    return k, G.inv(g)


def _replace(t, i, *coords):
    t = list(t)
    for j in range(0, len(coords), 2):
        t[i + j // 2] = GenusPair(int(coords[j]), int(coords[j + 1]))
    return tuple(t)


def _check_pos(t, i, width=1):
    if not 0 <= i <= len(t) - width:
        raise IndexError(f"position {i} out of range for genus {len(t)}")


def move_A(G, t, i, a=0, b=1):
    """Replace k_i by h^a k_i g_i^b where h = k_i g_i k_i^-1."""
    _check_pos(t, i)
    g, k = t[i]
    a %= G.element_order(G.conjugate(g, k))
    b %= G.element_order(g)
    return _replace(t, i, *_A(G, g, k, a, b))


def move_D(G, t, i):
    _check_pos(t, i)
    return _replace(t, i, *_D(G, *t[i]))


def move_B(G, t, i):
    """Relation B on pairs i, i+1; None when the pattern does not match or the result is invalid."""
    _check_pos(t, i, 2)
    (g1, k1), (g2, k2) = t[i], t[i + 1]
    if not _B_applies(G, g1, k1, g2, k2):
        return None
    out = _replace(t, i, *_B(G, g1, k1, g2, k2))
    return out if is_valid(G, out) else None


def move_C_cw(G, t, i):
    _check_pos(t, i, 2)
    return _replace(t, i, *_C_cw(G, *t[i], *t[i + 1]))


def move_C_ccw(G, t, i):
    _check_pos(t, i, 2)
    return _replace(t, i, *_C_ccw(G, *t[i], *t[i + 1]))


# Enumeration ---------------------------------------------------------------


class TupleIndex:
    """
    Valid tuples of one genus in lexicographic order.

    ``coords[j]`` is the column (g_1, k_1, g_2, k_2, ...)[j] over all tuples and
    ``codes`` the sorted lexicographic ranks in the raw space G^(2 genus).
    """

    def __init__(self, G, genus, coords, codes):
        self.group = G
        self.genus = genus
        self.coords = coords
        self.codes = codes

    def __len__(self):
        return len(self.codes)

    def encode(self, coords):
        n = self.group.order
        code = np.zeros(len(coords[0]) if len(coords) else 1, dtype=np.int64)
        for col in coords:
            code = code * n + col
        return code

    def lookup(self, coords):
        """Dense index of each tuple, -1 where the tuple is not valid."""
        code = self.encode(coords)
        pos = np.searchsorted(self.codes, code)
        pos = np.minimum(pos, len(self.codes) - 1)
        return np.where(self.codes[pos] == code, pos, -1)

    def index_of(self, t):
        cols = [np.array([x]) for pair in t for x in pair]
        i = int(self.lookup(cols)[0]) if cols else 0
        if i < 0:
            raise KeyError(f"{t} is not a valid genus-{self.genus} tuple")
        return i

    def tuple(self, i):
        c = [int(col[i]) for col in self.coords]
        return as_tuple(zip(c[0::2], c[1::2]))

    def __iter__(self):
        for i in range(len(self)):
            yield self.tuple(i)


def enumerate_valid(G: FiniteGroup, genus, budget=DEFAULT_BUDGET):
    """All tuples of the given genus with trivial boundary product, lexicographically."""
    n = G.order
    raw = n ** (2 * genus)
    if raw > budget:
        raise BudgetExceeded(f"{G.name} genus {genus}: {raw} raw tuples > budget {budget}")
    if genus == 0:
        return TupleIndex(G, 0, [], np.zeros(1, dtype=np.int64))
    # pair code p = g*n + k; comm[p] = [k, g]
    comm = G.commutator_table.T.ravel()
    pairs = np.arange(n * n, dtype=np.int64)
    codes, prod = pairs, comm
    for _ in range(genus - 1):
        codes = (codes[:, None] * (n * n) + pairs[None, :]).ravel()
        prod = G.table[comm[None, :], prod[:, None]].ravel()
    codes = codes[prod == 0]
    coords = []
    rest = codes.copy()
    for _ in range(2 * genus):
        coords.append(rest % n)
        rest //= n
    coords.reverse()
    return TupleIndex(G, genus, coords, codes)


# Orbit closure -------------------------------------------------------------


@dataclass
class OrbitPartition:
    tuples: TupleIndex
    uf: UnionFind
    diagnostics: dict = field(default_factory=dict)

    @property
    def genus(self):
        return self.tuples.genus

    @property
    def class_count(self):
        return self.uf.count

    def labels(self):
        """Dense class id (0..class_count-1) of every tuple, numbered by least member."""
        roots = self.uf.labels()
        _, first, inverse = np.unique(roots, return_index=True, return_inverse=True)
        order = np.argsort(first)
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))
        return rank[inverse]

    def class_of(self, t):
        return int(self.labels()[self.tuples.index_of(t)])

    def same_class(self, t1, t2):
        uf = self.uf
        return uf.find(self.tuples.index_of(t1)) == uf.find(self.tuples.index_of(t2))

    def representatives(self):
        """Lexicographically least tuple of each class."""
        _, first = np.unique(self.uf.labels(), return_index=True)
        return [self.tuples.tuple(i) for i in sorted(first)]


def _move_edges(G, T, genus):
    """(name, source mask or None, image columns) for every positional move instance."""
    c = T.coords
    if genus == 1:
        yield "A", None, list(_genus1_shear(G, c[0], c[1]))
        yield "D", None, list(_genus1_rotate(G, c[0], c[1]))
        return
    for i in range(genus):
        g, k = c[2 * i], c[2 * i + 1]
        for name, f in (("A", _A), ("D", _D)):
            out = list(c)
            out[2 * i], out[2 * i + 1] = f(G, g, k)
            yield name, None, out
    for i in range(genus - 1):
        args = c[2 * i:2 * i + 4]
        for name, f in (("B", _B), ("C_cw", _C_cw), ("C_ccw", _C_ccw)):
            mask = _B_applies(G, *args) if name == "B" else None
            out = list(c)
            out[2 * i:2 * i + 4] = f(G, *args)
            yield name, mask, out


def orbit_classes(G: FiniteGroup, genus, budget=DEFAULT_BUDGET, tuples=None):
    """
    Close the valid genus-n tuples under all move instances.

    Genus 1 uses only (g,k) ~ (g,kg) and (g,k) ~ (k,g^-1).  Move outcomes that
    are not valid tuples (only B can produce them) are skipped and tallied in
    ``diagnostics``.
    """
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if genus >= 3:
        warnings.warn(f"genus-{genus} orbit classes are experimental",
                      ExperimentalGenusWarning, stacklevel=2)
    T = tuples if tuples is not None else enumerate_valid(G, genus, budget)
    uf = UnionFind(len(T))
    diagnostics = {}
    src = np.arange(len(T))
    for name, mask, out in _move_edges(G, T, genus):
        dst = T.lookup(out)
        ok = dst >= 0
        bad = ~ok if mask is None else mask & ~ok
        if mask is not None:
            ok &= mask
        diagnostics[name] = diagnostics.get(name, 0) + int(bad.sum())
        uf.union_many(src[ok], dst[ok])
    return OrbitPartition(T, uf, diagnostics)


def r1(G: FiniteGroup, budget=DEFAULT_BUDGET):
    return orbit_classes(G, 1, budget).class_count


def genus1_class_table(G: FiniteGroup, part=None):
    """n x n array: genus-1 class id of the commuting pair (g, k), -1 if they do not commute."""
    part = part or orbit_classes(G, 1)
    n = G.order
    table = -np.ones((n, n), dtype=np.int64)
    table[part.tuples.coords[0], part.tuples.coords[1]] = part.labels()
    return table


@dataclass
class FreenessReport:
    r1: int
    c2: int
    product_classes: int
    unordered_pairs: int
    # unordered genus-1 class pairs whose concatenations land in several genus-2 classes
    not_well_defined: list
    # genus-2 classes reached from several unordered pairs
    not_injective: list

    @property
    def commutative(self):
        return not self.not_well_defined

    @property
    def injective(self):
        return not self.not_injective

    @property
    def free(self):
        return self.commutative and self.injective and self.product_classes == self.unordered_pairs


def freeness_report(G: FiniteGroup, part1=None, part2=None, budget=DEFAULT_BUDGET):
    """Compare concatenations of genus-1 classes against the genus-2 partition."""
    part1 = part1 or orbit_classes(G, 1, budget)
    part2 = part2 or orbit_classes(G, 2, budget)
    cls1 = genus1_class_table(G, part1)
    g1, k1, g2, k2 = part2.tuples.coords
    x, y = cls1[g1, k1], cls1[g2, k2]
    decomposable = (x >= 0) & (y >= 0)
    lo = np.minimum(x, y)[decomposable]
    hi = np.maximum(x, y)[decomposable]
    lab = part2.labels()[decomposable]
    r = part1.class_count
    pair_ids = lo * r + hi
    edges = np.unique(np.stack([pair_ids, lab]), axis=1)
    pairs, n_cls = np.unique(edges[0], return_counts=True)
    classes, n_pairs = np.unique(edges[1], return_counts=True)
    not_wd = [divmod(int(p), r) for p in pairs[n_cls > 1]]
    not_inj = [int(c) for c in classes[n_pairs > 1]]
    return FreenessReport(r1=r, c2=part2.class_count, product_classes=len(classes),
                          unordered_pairs=r * (r + 1) // 2,
                          not_well_defined=not_wd, not_injective=not_inj)


def r2(G: FiniteGroup, budget=DEFAULT_BUDGET, part1=None, part2=None):
    """
    Genus-2 generators: C2 - r1 (r1 + 1) / 2.

    In a free commutative monoid every genus-2 element is a generator or an
    unordered sum of two genus-1 generators; the count is refused with
    FreenessViolation when the computed classes contradict that.
    """
    part1 = part1 or orbit_classes(G, 1, budget)
    part2 = part2 or orbit_classes(G, 2, budget)
    rep = freeness_report(G, part1, part2)
    if not rep.free:
        raise FreenessViolation(
            f"{G.name}: {rep.unordered_pairs} unordered genus-1 pairs map to "
            f"{rep.product_classes} genus-2 classes "
            f"(not well defined: {rep.not_well_defined[:5]}, "
            f"not injective: {rep.not_injective[:5]})")
    if rep.c2 < rep.unordered_pairs:
        raise FreenessViolation(f"{G.name}: C2={rep.c2} < {rep.unordered_pairs}")
    return rep.c2 - rep.unordered_pairs


def r3(G: FiniteGroup, r1_value, r2_value, budget=DEFAULT_BUDGET):
    """Best-effort genus-3 count: C3 - r1 r2 - C(r1 + 2, 3)."""
    c3 = orbit_classes(G, 3, budget).class_count
    return c3 - r1_value * r2_value - math.comb(r1_value + 2, 3)


@dataclass
class RankResult:
    components: tuple  # (r_1, r_2, ...)
    truncated: bool
    experimental: bool = False

    @property
    def lower_bound(self):
        return sum(self.components)


def rank(G: FiniteGroup, max_genus=2, budget=DEFAULT_BUDGET):
    """
    Generator counts r_1..r_max_genus.

    ``truncated`` is False only when the top computed component is zero, so
    no higher-genus generators are expected; for an abelian group at
    max_genus 1 the genus-2 count is computed to decide.
    """
    if max_genus not in (1, 2, 3):
        raise ValueError("max_genus must be 1, 2 or 3")
    if max_genus == 3 and G.order > 8:
        raise ValueError("genus 3 is limited to groups of order <= 8")
    part1 = orbit_classes(G, 1, budget)
    comps = [part1.class_count]
    if max_genus >= 2:
        comps.append(r2(G, budget, part1=part1))
    if max_genus >= 3:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ExperimentalGenusWarning)
            comps.append(r3(G, comps[0], comps[1], budget))
        warnings.warn("r3 is experimental", ExperimentalGenusWarning, stacklevel=2)
    if max_genus == 1 and G.is_abelian:
        try:
            truncated = r2(G, budget, part1=part1) != 0
        except BudgetExceeded:
            truncated = True
    else:
        truncated = comps[-1] != 0
    return RankResult(tuple(comps), truncated, experimental=max_genus >= 3)


# Independent oracles -------------------------------------------------------


def canonical_cyclic_genus1(n, g, k):
    """
    Canonical class of the commuting pair (g, k) in Z_n under
    (g,k) ~ (g,k+mg) and (g,k) ~ (k,-g): a Euclidean reduction to (d, 0),
    then d is replaced by the generator gcd(d, n) of the same subgroup.
    """
    a, b = g % n, k % n
    while True:
        if a == 0:
            a, b = b, 0
            break
        b %= a
        if b == 0:
            break
        a, b = b, (-a) % b
    return math.gcd(a, n) % n


def sl2_mat_orbits(p, n, budget=DEFAULT_BUDGET):
    """
    Orbits of n x 2 matrices over Z_p under right multiplication by
    [[0, 1], [-1, 0]] and [[1, 0], [m, 1]].  Brute force.
    """
    states = p ** (2 * n)
    if states > budget:
        raise BudgetExceeded(f"{states} matrices > budget {budget}")
    code = np.arange(states, dtype=np.int64)
    digits = []
    rest = code.copy()
    for _ in range(2 * n):
        digits.append(rest % p)
        rest //= p
    xs, ys = digits[0::2], digits[1::2]  # row i = (xs[i], ys[i])

    def encode(xs, ys):
        out = np.zeros(states, dtype=np.int64)
        for x, y in zip(reversed(xs), reversed(ys)):
            out = (out * p + y) * p + x
        return out

    uf = UnionFind(states)
    # (x, y) [[0,1],[-1,0]] = (-y, x)
    uf.union_many(code, encode([(-y) % p for y in ys], xs))
    for m in range(1, p):
        # (x, y) [[1,0],[m,1]] = (x + m y, y)
        uf.union_many(code, encode([(x + m * y) % p for x, y in zip(xs, ys)], ys))
    return uf.count
