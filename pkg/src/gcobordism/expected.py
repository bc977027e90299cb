"""
Reference values for groups of order <= 28: subgroup count, abelian
subgroup count and the generator decomposition r_1 + r_2 (+ ...).

Rows with ``spec=None`` are not reachable from the builtin constructors;
they can be supplied as Cayley files.  ``r2=None`` means the reference
gives no genus-2 value.  ``truncated`` marks a trailing "+ _" (higher-genus
generators not determined).  ``flags`` records the reference's own
highlighting: "r" where r(G) differs from the subgroup count, "abelian"
where r_1 differs from the abelian subgroup count.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ExpectedRow:
    name: str
    order: int
    subgroups: int
    abelian_subgroups: int
    r1: int
    r2: int | None
    spec: str | None = None
    truncated: bool = False
    flags: frozenset = frozenset()

    @property
    def builtin(self):
        return self.spec is not None


def _row(name, order, subgroups, abelian, r1, r2, spec="same", truncated=False, flags=()):
    return ExpectedRow(name, order, subgroups, abelian, r1, r2,
                       spec=name if spec == "same" else spec,
                       truncated=truncated, flags=frozenset(flags))


R, AB = "r", "abelian"

EXPECTED_ROWS = (
    _row("Z4", 4, 3, 3, 3, 0),
    _row("Z2^2", 4, 5, 5, 5, 0),
    _row("Z6", 6, 4, 4, 4, 0),
    _row("S3", 6, 6, 5, 5, 1),
    _row("Z8", 8, 4, 4, 4, 0),
    _row("D8", 8, 10, 9, 9, 1),
    _row("Q8", 8, 6, 5, 5, 1),
    _row("Z4 x Z2", 8, 8, 8, 8, 0),
    _row("Z2^3", 8, 16, 16, 15, 0, flags=[R]),
    _row("Z9", 9, 3, 3, 3, 0),
    _row("Z3^2", 9, 6, 6, 7, 0, flags=[R]),
    _row("Z10", 10, 4, 4, 4, 0),
    _row("D10", 10, 8, 7, 7, 1),
    _row("Z12", 12, 6, 6, 6, 0),
    _row("A4", 12, 10, 9, 9, 1),
    _row("D12", 12, 16, 13, 13, 14, truncated=True, flags=[R]),
    _row("Dic3", 12, 8, 7, 7, 1),
    _row("Z2^2 x Z3", 12, 10, 10, 10, 0),
    _row("Z14", 14, 4, 4, 4, 0),
    _row("D14", 14, 10, 9, 9, 1),
    _row("Z15", 15, 4, 4, 4, 0),
    _row("Z16", 16, 5, 5, 5, 0),
    _row("Dic4", 16, 11, 8, 8, 4, truncated=True, flags=[R]),
    _row("D16", 16, 19, 16, 16, 4, truncated=True, flags=[R]),
    _row("Q8 x Z2", 16, 19, 14, 14, 10, truncated=True, flags=[R]),
    _row("Z8 x Z2", 16, 11, 11, 11, 0),
    _row("Z4^2", 16, 15, 15, 16, 0, flags=[R]),
    _row("Z4 x Z2^2", 16, 27, 27, 25, 0, flags=[R]),
    _row("Z2^4", 16, 67, 67, 51, 0, flags=[R]),
    _row("M16", 16, 11, 10, 10, 1, spec=None),
    _row("QD16", 16, 15, 12, 12, 4, spec=None, truncated=True, flags=[R]),
    _row("D8:Z2", 16, 35, 30, 28, None, spec=None, truncated=True, flags=[AB]),
    _row("(Z4 x Z2):Z2", 16, 23, 22, 21, None, spec=None, truncated=True, flags=[AB]),
    _row("G4,4", 16, 15, 14, 10, 7, spec=None, truncated=True, flags=[R, AB]),
    _row("Q8:Z2", 16, 23, 18, 20, None, spec=None, truncated=True, flags=[AB]),
    _row("Z18", 18, 6, 6, 6, 0),
    _row("Z3 x Z6", 18, 12, 12, 14, 0, flags=[R]),
    _row("D18", 18, 16, 12, 12, None, truncated=True),
    _row("(Z3 x Z3):Z2", 18, 28, 15, 16, None, spec=None, truncated=True, flags=[AB]),
    _row("S3 x Z3", 18, 14, 12, 13, 13, flags=[R, AB]),
    _row("Z20", 20, 6, 6, 6, 0),
    _row("Z10 x Z2", 20, 10, 10, 10, 0),
    _row("D20", 20, 22, 19, 19, None, truncated=True),
    _row("Dic5", 20, 10, 9, 9, 1),
    _row("F20", 20, 14, 12, 12, 3, spec=None, truncated=True, flags=[R]),
    _row("Z21", 21, 4, 4, 4, 0),
    _row("Z7:Z3", 21, 10, 9, 9, 1, spec=None),
    _row("Z22", 22, 4, 4, 4, 0),
    _row("D22", 22, 14, 13, 13, 4, truncated=True, flags=[R]),
    _row("Z24", 24, 8, 8, 8, 0),
    _row("Z2 x Z12", 24, 16, 16, 16, 0),
    _row("Z2^2 x Z6", 24, 32, 32, 30, 0, flags=[R]),
    _row("D8 x Z3", 24, 20, 18, 18, None, truncated=True),
    _row("Q8 x Z3", 24, 12, 10, 10, None, truncated=True),
    _row("SL(2,3)", 24, 15, 13, 13, None, spec=None, truncated=True),
    _row("A4 x Z2", 24, 26, 24, 23, None, truncated=True, flags=[AB]),
    _row("S4", 24, 30, 21, 21, 3, truncated=True),
    _row("D24", 24, 34, 24, 24, None, truncated=True),
    _row("Dic6", 24, 18, 12, 12, None, truncated=True),
    _row("Z2^2 x S3", 24, 54, 43, 40, None, truncated=True, flags=[AB]),
    _row("Z2 x Dic3", 24, 22, 19, 19, None, truncated=True),
    _row("Z4 x S3", 24, 26, 21, 21, None, truncated=True),
    _row("Z3:Z8", 24, 10, 9, 9, None, spec=None, truncated=True),
    _row("(Z6 x Z2):Z2", 24, 30, 22, 22, None, spec=None, truncated=True),
    _row("Z25", 25, 3, 3, 3, 0),
    _row("Z5^2", 25, 8, 8, 11, 0, flags=[R]),
    _row("Z26", 26, 4, 4, 4, 0),
    _row("D26", 26, 16, 15, 15, None, truncated=True),
    _row("Z27", 27, 4, 4, 4, 0),
    _row("Z9 x Z3", 27, 10, 10, 12, 0, flags=[R]),
    _row("Z3^3", 27, 28, 28, 40, 0, flags=[R]),
    _row("(Z3 x Z3):Z3", 27, 19, 18, 22, None, spec=None, truncated=True, flags=[R, AB]),
    _row("Z9:Z3", 27, 10, 9, 10, None, spec=None, truncated=True, flags=[AB]),
    _row("Z28", 28, 6, 6, 6, 0),
    _row("Z14 x Z2", 28, 10, 10, 10, 0),
    _row("D28", 28, 28, 25, 25, None, truncated=True),
    _row("Dic7", 28, 12, 11, 11, None, truncated=True),
)

EXPECTED = {row.name: row for row in EXPECTED_ROWS}


def lookup(spec_text):
    """Row for a builtin spec string (matched on its normalised form), or None."""
    from .groups import parse_group_spec

    key = str(parse_group_spec(spec_text))
    for row in EXPECTED_ROWS:
        if row.spec is not None and str(parse_group_spec(row.spec)) == key:
            return row
    return None
