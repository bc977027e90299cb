"""Finite-group invariants of the 1+1 G-cobordism category."""

from .groups import (FiniteGroup, GroupError, SpecSyntaxError, OrderBoundError,
                     parse_group_spec, build_group, group, commutator_subgroup, pi0_count)
from .census import all_subgroups, count_abelian_subgroups
from .monoid import orbit_classes, r1, r2, rank

__version__ = "0.1.0"
