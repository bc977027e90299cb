"""
Elementary G-cobordisms: cylinder classes, thin pants, and connectivity of
G-circles.
"""

from dataclasses import dataclass

from .groups import FiniteGroup, commutator_subgroup


@dataclass(frozen=True)
class CylinderClass:
    source: int
    target: int
    representatives: tuple  # sorted conjugators k with target = k source k^-1

    @property
    def representative(self):
        return self.representatives[0]


def conjugators(G: FiniteGroup, g, h):
    return [k for k in range(G.order) if G.conjugate(g, k) == h]


def cylinder_classes(G: FiniteGroup, g, h):
    """
    Cylinders from g to h: conjugators k with h = k g k^-1, modulo
    k ~ h^n k g^m.  Empty when g and h are not conjugate.
    """
    ks = set(conjugators(G, g, h))
    h_pows = [G.power(h, n) for n in range(G.element_order(h))]
    g_pows = [G.power(g, m) for m in range(G.element_order(g))]
    classes = []
    while ks:
        k = min(ks)
        # (n, m) -> h^n k g^m is a group action, so one sweep is the whole orbit
        cls = {int(G.mul(G.mul(a, k), b)) for a in h_pows for b in g_pows}
        ks -= cls
        classes.append(CylinderClass(g, h, tuple(sorted(cls))))
    return classes


def pants_target(G: FiniteGroup, g, h):
    """Outgoing label of the thin pair of pants from g + h."""
    return int(G.mul(g, h))


def connected(G: FiniteGroup, g, h, _comm=None):
    """G-circles g and h lie in the same component iff g h^-1 is in [G, G]."""
    comm = _comm if _comm is not None else set(commutator_subgroup(G))
    return int(G.mul(g, G.inv(h))) in comm


def connected_components(G: FiniteGroup):
    """Partition of G under ``connected``, found by direct pairwise testing."""
    comm = set(commutator_subgroup(G))
    left = list(range(G.order))
    comps = []
    while left:
        x = left[0]
        comp = [y for y in left if connected(G, x, y, comm)]
        comps.append(comp)
        left = [y for y in left if y not in comp]
    return comps
