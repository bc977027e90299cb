"""
Small finite groups as explicit multiplication tables.

Every group is stored as an ``order x order`` integer table over element
indices with the identity at index 0.  Groups are built from a tiny
spec language::

    spec := term (" x " term)*
    term := atom ("^" int)?
    atom := "Z" int | "D" evenint | "Dic" int | "Q8" | "S" int | "A" int | "file:" path

``D8`` is the dihedral group of order 8, ``Dic3`` the dicyclic group of
order 12, and ``Z2^3`` the direct product of three copies of ``Z2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from pathlib import Path

import numpy as np

DEFAULT_MAX_ORDER = 64
ASSOCIATIVITY_CHECK_MAX = 64


class GroupError(ValueError):
    """Invalid group data or unsupported construction."""


class SpecSyntaxError(GroupError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class OrderBoundError(GroupError):
    pass


class FiniteGroup:
    """
    Immutable multiplication table.  ``table[i, j]`` is the index of ``i*j``.
    """

    def __init__(self, table, name="G", validate=True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("table must be a non-empty square matrix")
        self.order = int(table.shape[0])
        self.name = name
        if validate:
            _check_axioms(table)
        table.setflags(write=False)
        self.table = table
        inverses = np.argmin(table, axis=1)  # the 0 entry in each row
        inverses.setflags(write=False)
        self.inverses = inverses
        self.identity = 0

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    # Element operations accept ints or integer arrays (vectorised lookups).

    def mul(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverses[a]

    def conjugate(self, a, b):
        """b a b^-1"""
        return self.table[self.table[b, a], self.inverses[b]]

    def commutator(self, a, b):
        """[a, b] = a b a^-1 b^-1"""
        t = self.table
        return t[t[a, b], t[self.inverses[a], self.inverses[b]]]

    def power(self, a, n):
        n %= self.element_order(a)
        x = 0
        for _ in range(n):
            x = int(self.table[x, a])
        return x

    def element_order(self, a):
        return int(self._orders[a])

    @cached_property
    def _orders(self):
        orders = np.ones(self.order, dtype=np.int64)
        x = np.arange(self.order)
        cur = x.copy()
        done = cur == 0
        step = 1
        while not done.all():
            cur = self.table[cur, x]
            step += 1
            newly = (cur == 0) & ~done
            orders[newly] = step
            done |= newly
        orders[0] = 1
        return orders

    @cached_property
    def commutator_table(self):
        """comm[a, b] = [a, b] for all pairs."""
        a = np.arange(self.order)
        return self.commutator(a[:, None], a[None, :])

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def elements(self):
        return range(self.order)


def _check_axioms(table):
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries out of range")
    idx = np.arange(n)
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise GroupError("element 0 is not the identity")
    srt = np.sort(table, axis=1)
    if not (srt == idx).all() or not (np.sort(table, axis=0) == idx[:, None]).all():
        raise GroupError("table is not a Latin square (no unique inverses)")
    if n <= ASSOCIATIVITY_CHECK_MAX:
        if not np.array_equal(table[table], table[:, table]):
            raise GroupError("multiplication is not associative")


def closure(G, gens):
    """Subgroup generated by ``gens``, as a sorted tuple of indices."""
    gens = sorted({int(g) for g in gens} - {0})
    seen = {0}
    frontier = [0]
    table = G.table
    while frontier:
        new = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = int(row[g])
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(seen))


def commutator_subgroup(G):
    return closure(G, np.unique(G.commutator_table))


def pi0_count(G):
    """Number of connected components, |G / [G, G]|."""
    return G.order // len(commutator_subgroup(G))


# Constructors -------------------------------------------------------------


def cyclic(n):
    if n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n}")
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n, name=f"Z{n}", validate=False)


def dihedral(order):
    """Dihedral group of the given (even) order; element r^a s^b has index a + n*b."""
    if order < 2 or order % 2:
        raise GroupError(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2
    x = np.arange(order)
    a, b = x % n, x // n
    a1, b1 = a[:, None], b[:, None]
    a2, b2 = a[None, :], b[None, :]
    # r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
    rot = (a1 + np.where(b1 == 0, a2, -a2)) % n
    table = rot + n * ((b1 + b2) % 2)
    return FiniteGroup(table, name=f"D{order}", validate=False)


def dicyclic(n):
    """Dic_n of order 4n: <r, s | r^2n = 1, r^n = s^2, s r = r^-1 s>.  Index a + 2n*b for r^a s^b."""
    if n < 1:
        raise GroupError(f"dicyclic group needs n >= 1, got {n}")
    m = 2 * n
    x = np.arange(2 * m)
    a, b = x % m, x // m
    a1, b1 = a[:, None], b[:, None]
    a2, b2 = a[None, :], b[None, :]
    rot = (a1 + np.where(b1 == 0, a2, -a2)) % m
    both = (b1 == 1) & (b2 == 1)
    rot = np.where(both, (rot + n) % m, rot)
    table = rot + m * np.where(both, 0, (b1 + b2) % 2)
    name = "Q8" if n == 2 else f"Dic{n}"
    return FiniteGroup(table, name=name, validate=False)


def _from_permutations(perms, name):
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    return FiniteGroup(table, name=name, validate=False)


def _parity(p):
    seen = [False] * len(p)
    sign = 0
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            sign += length - 1
    return sign % 2


def symmetric(n):
    """S_n with permutations in lexicographic order; (p*q)(x) = p(q(x))."""
    if not 1 <= n <= 5:
        raise GroupError(f"symmetric group supported for 1 <= n <= 5, got {n}")
    return _from_permutations(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n):
    if not 1 <= n <= 5:
        raise GroupError(f"alternating group supported for 1 <= n <= 5, got {n}")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _from_permutations(perms, f"A{n}")


def direct_product(G, H, name=None):
    """(g, h) has index g*|H| + h."""
    m = H.order
    x = np.arange(G.order * m)
    g, h = x // m, x % m
    table = G.table[g[:, None], g[None, :]] * m + H.table[h[:, None], h[None, :]]
    return FiniteGroup(table, name=name or f"{G.name} x {H.name}", validate=False)


def load_cayley_file(path, name=None):
    """
    Read a Cayley table: first line the order n, then n rows of n integers.
    All group axioms are checked.
    """
    path = Path(path)
    try:
        lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip()]
    except OSError as e:
        raise GroupError(f"cannot read Cayley file {path}: {e}") from e
    if not lines:
        raise GroupError(f"empty Cayley file {path}")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as e:
        raise GroupError(f"non-integer entry in Cayley file {path}") from e
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise GroupError(f"Cayley file {path} does not contain an {n}x{n} table")
    # always validate imported tables, including associativity
    table = np.array(rows, dtype=np.int64)
    _check_axioms(table)
    if n > ASSOCIATIVITY_CHECK_MAX and not np.array_equal(table[table], table[:, table]):
        raise GroupError("multiplication is not associative")
    return FiniteGroup(table, name=name or path.stem, validate=False)


def save_cayley_file(G, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{G.order}\n")
        for row in G.table:
            f.write(" ".join(str(int(v)) for v in row) + "\n")


# Spec language ------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    kind: str  # one of Z, D, Dic, Q8, S, A, file
    param: int | None = None
    path: str | None = None

    def __str__(self):
        if self.kind == "file":
            return f"file:{self.path}"
        if self.kind == "Q8":
            return "Q8"
        return f"{self.kind}{self.param}"

    @property
    def order(self):
        k, p = self.kind, self.param
        if k == "Z":
            return p
        if k == "D":
            return p
        if k == "Dic":
            return 4 * p
        if k == "Q8":
            return 8
        if k == "S":
            return _factorial(p)
        if k == "A":
            return max(1, _factorial(p) // 2)
        return None  # unknown until the file is read


@dataclass(frozen=True)
class Power:
    atom: Atom
    exponent: int = 1

    def __str__(self):
        return str(self.atom) if self.exponent == 1 else f"{self.atom}^{self.exponent}"


@dataclass(frozen=True)
class GroupSpec:
    terms: tuple[Power, ...]
    source: str = ""

    def __str__(self):
        return " x ".join(str(t) for t in self.terms)

    def atoms(self):
        for t in self.terms:
            for _ in range(t.exponent):
                yield t.atom


def _factorial(n):
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


_ATOM_RE = re.compile(r"(Dic|Q8|Z|D|S|A)(\d*)")
_SEP_RE = re.compile(r"\s+x\s+")


def parse_group_spec(text):
    """Parse a group spec string into a :class:`GroupSpec`."""
    if not text or not text.strip():
        raise SpecSyntaxError("empty group spec", text, 0)
    terms = []
    pos = len(text) - len(text.lstrip())
    end = len(text.rstrip())
    while True:
        m = _SEP_RE.search(text, pos, end)
        chunk_end = m.start() if m else end
        terms.append(_parse_term(text, pos, chunk_end))
        if not m:
            break
        pos = m.end()
    return GroupSpec(tuple(terms), source=text)


def _parse_term(text, start, end):
    chunk = text[start:end]
    if not chunk:
        raise SpecSyntaxError("missing group term", text, start)
    if chunk.startswith("file:"):
        path = chunk[5:]
        if not path:
            raise SpecSyntaxError("missing path after 'file:'", text, start + 5)
        return Power(Atom("file", path=path))
    base, caret, exp = chunk.partition("^")
    exponent = 1
    if caret:
        if not exp.isdigit() or int(exp) < 1:
            raise SpecSyntaxError("exponent must be a positive integer",
                                  text, start + len(base) + 1)
        exponent = int(exp)
    m = _ATOM_RE.fullmatch(base)
    if not m:
        raise SpecSyntaxError(f"unknown group atom {base!r}", text, start)
    kind, digits = m.groups()
    if kind == "Q8":
        if digits:
            raise SpecSyntaxError(f"unknown group atom {base!r}", text, start)
        return Power(Atom("Q8"), exponent)
    if not digits:
        raise SpecSyntaxError(f"atom {kind!r} needs a numeric parameter",
                              text, start + len(kind))
    param = int(digits)
    where = start + len(kind)
    if kind in ("Z", "Dic") and param < 1:
        raise SpecSyntaxError(f"{kind} parameter must be >= 1", text, where)
    if kind == "D" and (param < 2 or param % 2):
        raise SpecSyntaxError(f"dihedral order must be even, got D{param}", text, where)
    if kind in ("S", "A") and not 1 <= param <= 5:
        raise SpecSyntaxError(f"{kind}n supported only for 1 <= n <= 5", text, where)
    return Power(Atom(kind, param), exponent)


def _build_atom(atom):
    k, p = atom.kind, atom.param
    if k == "Z":
        return cyclic(p)
    if k == "D":
        return dihedral(p)
    if k == "Dic":
        return dicyclic(p)
    if k == "Q8":
        return dicyclic(2)
    if k == "S":
        return symmetric(p)
    if k == "A":
        return alternating(p)
    return load_cayley_file(atom.path)


def build_group(spec, max_order=DEFAULT_MAX_ORDER):
    """Build and validate the group described by ``spec`` (a string or GroupSpec)."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    known = 1
    for atom in spec.atoms():
        if atom.order is not None:
            known *= atom.order
            if known > max_order:
                raise OrderBoundError(f"{spec} has order > {max_order}")
    factors = [_build_atom(a) for a in spec.atoms()]
    order = reduce(lambda a, b: a * b, (f.order for f in factors), 1)
    if order > max_order:
        raise OrderBoundError(f"{spec} has order {order} > {max_order}")
    G = reduce(direct_product, factors)
    return FiniteGroup(G.table, name=str(spec), validate=G.order <= ASSOCIATIVITY_CHECK_MAX)


def group(text, max_order=DEFAULT_MAX_ORDER):
    """Shorthand for ``build_group(parse_group_spec(text))``."""
    return build_group(parse_group_spec(text), max_order=max_order)
