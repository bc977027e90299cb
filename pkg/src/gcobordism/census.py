"""Subgroup enumeration and the closed-form subgroup counts."""

from dataclasses import dataclass

import numpy as np

from .closed_forms import sigma, tau
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, OrderBoundError, closure


@dataclass(frozen=True, order=True)
class SubgroupSet:
    elements: tuple
    is_abelian: bool

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def is_subgroup(G: FiniteGroup, elements):
    s = set(elements)
    if 0 not in s:
        return False
    idx = np.fromiter(s, dtype=np.int64)
    prods = G.table[idx[:, None], idx[None, :]]
    return set(prods.ravel().tolist()) <= s and set(G.inverses[idx].tolist()) <= s


def _abelian(G, elements):
    idx = np.array(elements)
    sub = G.table[idx[:, None], idx[None, :]]
    return bool(np.array_equal(sub, sub.T))


def all_subgroups(G: FiniteGroup, max_order=DEFAULT_MAX_ORDER):
    """
    Every subgroup of G, sorted by (size, elements).

    Starts from the cyclic subgroups and extends each known subgroup by one
    outside element until nothing new appears.
    """
    if G.order > max_order:
        raise OrderBoundError(f"subgroup enumeration limited to order {max_order}")
    found = {}  # element tuple -> generators
    work = []
    for x in range(G.order):
        H = closure(G, [x])
        if H not in found:
            found[H] = (x,)
            work.append(H)
    while work:
        H = work.pop()
        gens = found[H]
        members = set(H)
        for x in range(G.order):
            if x in members:
                continue
            K = closure(G, gens + (x,))
            if K not in found:
                found[K] = gens + (x,)
                work.append(K)
    subs = [SubgroupSet(H, _abelian(G, H)) for H in found]
    for S in subs:
        assert G.order % len(S) == 0, "Lagrange"
    subs.sort(key=lambda S: (len(S.elements), S.elements))
    return subs


def count_abelian_subgroups(G: FiniteGroup, subgroups=None):
    if subgroups is None:
        subgroups = all_subgroups(G)
    return sum(1 for S in subgroups if S.is_abelian)


def dihedral_subgroup_formula(n):
    """Subgroups of the dihedral group of order 2n: tau(n) + sigma(n)."""
    return tau(n) + sigma(n)


def dicyclic_subgroup_formula(n):
    """Subgroups of Dic_n (order 4n): tau(2n) + sigma(n)."""
    return tau(2 * n) + sigma(n)
