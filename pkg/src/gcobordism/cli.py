"""
Command line front end.

    gcob census D8 "Z2^3"
    gcob table --max-order 12
    gcob rank S3 --max-genus 2
    gcob verify cyclic --max-n 30
    gcob cylinders Z4 2 2
    gcob sequence z2 --max-n 6

Exit codes: 0 success, 1 a computed value disagrees with the reference or a
check failed, 2 usage, build or budget error.
"""

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import asdict, dataclass, field

from . import closed_forms
from .census import (all_subgroups, count_abelian_subgroups, dicyclic_subgroup_formula,
                     dihedral_subgroup_formula)
from .cobordism import cylinder_classes
from .expected import EXPECTED_ROWS, ExpectedRow, lookup
from .groups import GroupError, build_group, cyclic, dicyclic, dihedral, direct_product, load_cayley_file, parse_group_spec
from .monoid import (DEFAULT_BUDGET, BudgetExceeded, ExperimentalGenusWarning,
                     FreenessViolation, canonical_cyclic_genus1, orbit_classes, rank,
                     sl2_mat_orbits)

MATCH, MISMATCH, SKIPPED = "MATCH", "MISMATCH", "SKIPPED"


class UsageError(Exception):
    """Reported on stderr with exit code 2."""


@dataclass
class CensusRow:
    group: str
    order: int
    subgroups: int | None
    abelian_subgroups: int | None
    r1: int | None
    r2: int | None
    truncated: bool
    flags: list = field(default_factory=list)
    note: str = ""


CENSUS_FIELDS = ["group", "order", "subgroups", "abelian_subgroups", "r1", "r2",
                 "truncated", "flags", "note"]


def compute_row(G, name, max_genus=2, budget=DEFAULT_BUDGET):
    subs = all_subgroups(G)
    note = ""
    try:
        res = rank(G, max_genus=min(max_genus, 2), budget=budget)
        r1, r2 = res.components[0], (res.components[1] if max_genus >= 2 else None)
        truncated = res.truncated
    except FreenessViolation as e:
        r1 = orbit_classes(G, 1, budget).class_count
        r2, truncated, note = None, True, f"freeness violation: {e}"
    return CensusRow(name, G.order, len(subs), count_abelian_subgroups(G, subs),
                     r1, r2, truncated, [], note)


def judge(row: CensusRow, exp: ExpectedRow | None, max_genus=2):
    """Set MATCH / MISMATCH against the reference row."""
    if exp is None:
        row.flags = [SKIPPED]
        row.note = _join(row.note, "no reference row")
        return row
    diffs = []
    for key in ("order", "subgroups", "abelian_subgroups", "r1"):
        if getattr(row, key) != getattr(exp, key):
            diffs.append(f"{key} expected {getattr(exp, key)} got {getattr(row, key)}")
    if max_genus >= 2 and exp.r2 is not None and row.r2 != exp.r2:
        diffs.append(f"r2 expected {exp.r2} got {row.r2}")
    if diffs:
        row.flags = [MISMATCH]
        if exp.flags:
            diffs.append("paper-flagged")
        row.note = _join(row.note, "; ".join(diffs))
    else:
        row.flags = [MATCH]
    return row


def _join(a, b):
    return f"{a}; {b}" if a else b


# Output -------------------------------------------------------------------


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "|".join(str(x) for x in v)
    return str(v)


def format_records(records, fields, fmt):
    if fmt == "json":
        return json.dumps([{k: r[k] for k in fields} for r in records], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n",
                   quoting=csv.QUOTE_MINIMAL)
    w.writerow(fields)
    for r in records:
        w.writerow([_cell(r[k]) for k in fields])
    return buf.getvalue()


def rows_to_text(rows, fmt="tsv"):
    return format_records([asdict(r) for r in rows], CENSUS_FIELDS, fmt)


def rows_from_json(text):
    return [CensusRow(**d) for d in json.loads(text)]


def _sort_rows(rows):
    return sorted(rows, key=lambda r: (r.order, r.group))


# Commands -----------------------------------------------------------------


def _build(spec_text, max_order=64):
    try:
        return build_group(parse_group_spec(spec_text), max_order=max_order)
    except GroupError as e:
        raise UsageError(f"invalid group spec {spec_text!r}: {e}") from e


def cmd_census(args, out):
    groups = [(str(parse_group_spec_or_fail(s)), _build(s)) for s in args.specs]
    rows = []
    for name, G in groups:
        row = compute_row(G, name, args.max_genus, args.budget)
        exp = lookup(name) if not name.startswith("file:") else None
        judge(row, exp, args.max_genus)
        rows.append(row)
    out.write(rows_to_text(_sort_rows(rows), args.format))
    return 0


def parse_group_spec_or_fail(text):
    try:
        return parse_group_spec(text)
    except GroupError as e:
        raise UsageError(f"invalid group spec {text!r}: {e}") from e


def _imports(pairs):
    found = {}
    for item in pairs or []:
        name, sep, path = item.partition("=")
        if not sep:
            raise UsageError(f"--import expects NAME=PATH, got {item!r}")
        found[name] = path
    return found


def table_rows(max_order, max_genus=2, budget=DEFAULT_BUDGET, imports=None):
    imports = imports or {}
    rows = []
    for exp in EXPECTED_ROWS:
        if exp.order > max_order:
            continue
        if exp.builtin:
            G = _build(exp.spec)
        elif exp.name in imports:
            try:
                G = load_cayley_file(imports[exp.name], name=exp.name)
            except GroupError as e:
                raise UsageError(f"cannot import {exp.name}: {e}") from e
        else:
            rows.append(CensusRow(exp.name, exp.order, None, None, None, None,
                                  exp.truncated, [SKIPPED], "needs Cayley file import"))
            continue
        row = compute_row(G, exp.name, max_genus, budget)
        rows.append(judge(row, exp, max_genus))
    return _sort_rows(rows)


def cmd_table(args, out):
    if args.max_order > 28:
        raise UsageError("--max-order is limited to 28")
    rows = table_rows(args.max_order, args.max_genus, args.budget, _imports(args.imports))
    out.write(rows_to_text(rows, args.format))
    bad = [r for r in rows if MISMATCH in r.flags]
    for r in bad:
        print(f"MISMATCH {r.group}: {r.note}", file=sys.stderr)
    return 1 if bad else 0


def cmd_rank(args, out):
    G = _build(args.spec)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ExperimentalGenusWarning)
        try:
            res = rank(G, max_genus=args.max_genus, budget=args.budget)
        except ValueError as e:
            raise UsageError(str(e)) from e
    rec = {"group": str(parse_group_spec(args.spec)), "order": G.order}
    fields = ["group", "order"]
    for i, r in enumerate(res.components, 1):
        rec[f"r{i}"] = r
        fields.append(f"r{i}")
    rec.update(lower_bound=res.lower_bound, truncated=res.truncated,
               experimental=res.experimental)
    fields += ["lower_bound", "truncated", "experimental"]
    out.write(format_records([rec], fields, args.format))
    return 0


def _verify_cyclic(args):
    for n in range(max(1, args.min_n), args.max_n + 1):
        G = cyclic(n)
        r = orbit_classes(G, 1, args.budget).class_count
        subs = len(all_subgroups(G))
        canon = len({canonical_cyclic_genus1(n, g, k) for g in range(n) for k in range(n)})
        t = closed_forms.tau(n)
        yield f"n={n}", r == t == subs == canon, dict(r1=r, tau=t, subgroups=subs, canonical=canon)


def _verify_elementary(args):
    if not closed_forms.is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    Zp = cyclic(args.p)
    G = Zp
    for n in range(1, args.max_n + 1):
        if n > 1:
            G = direct_product(G, Zp)
        r = orbit_classes(G, 1, args.budget).class_count
        m = sl2_mat_orbits(args.p, n, args.budget)
        c = closed_forms.r_elementary_abelian(args.p, n)
        yield f"p={args.p} n={n}", r == m == c, dict(orbits=r, sl2=m, closed_form=c)


def _verify_family(args, build, formula, label):
    for n in range(max(1, args.min_n), args.max_n + 1):
        G = build(n)
        subs = all_subgroups(G)
        ab = count_abelian_subgroups(G, subs)
        r = orbit_classes(G, 1, args.budget).class_count
        f = formula(n)
        yield f"{label} n={n}", r == ab and len(subs) == f, dict(
            order=G.order, r1=r, abelian_subgroups=ab, subgroups=len(subs), formula=f)


def _verify_recurrence(args):
    if not closed_forms.is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    p = args.p
    for n in range(0, args.max_n + 1):
        closed = p ** (n - 1) * (p ** n + p - 1) if n else 1
        rec = closed_forms.f_recurrence(p, n)
        diff = closed_forms.r_elementary_abelian(p, n + 1) - closed_forms.r_elementary_abelian(p, n)
        tele = 2 + sum(closed_forms.f_recurrence(p, i) for i in range(1, n))
        ok = closed == rec == diff and (n == 0 or tele == closed_forms.r_elementary_abelian(p, n))
        yield f"p={p} n={n}", ok, dict(F=closed, recurrence=rec, difference=diff)


def cmd_verify(args, out):
    kinds = {
        "cyclic": _verify_cyclic,
        "elementary": _verify_elementary,
        "dihedral": lambda a: _verify_family(a, lambda n: dihedral(2 * n), dihedral_subgroup_formula, "D2n"),
        "dicyclic": lambda a: _verify_family(a, dicyclic, dicyclic_subgroup_formula, "Dic"),
        "recurrence": _verify_recurrence,
    }
    records = []
    for label, ok, values in kinds[args.kind](args):
        detail = " ".join(f"{k}={v}" for k, v in values.items())
        records.append({"status": "PASS" if ok else "FAIL", "kind": args.kind,
                        "instance": label, "values": detail})
    out.write(format_records(records, ["status", "kind", "instance", "values"], args.format))
    return 0 if all(r["status"] == "PASS" for r in records) else 1


def cmd_cylinders(args, out):
    G = _build(args.spec)
    for x in (args.g, args.h):
        if not 0 <= x < G.order:
            raise UsageError(f"element {x} out of range for group of order {G.order}")
    classes = cylinder_classes(G, args.g, args.h)
    records = [{"class": i, "source": c.source, "target": c.target,
                "representative": c.representative, "size": len(c.representatives),
                "members": " ".join(map(str, c.representatives))}
               for i, c in enumerate(classes)]
    out.write(format_records(records, ["class", "source", "target", "representative",
                                       "size", "members"], args.format))
    return 0


def cmd_sequence(args, out):
    fam = args.family
    if fam in ("zp",) and not closed_forms.is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    f = {
        "z2": closed_forms.z2_sequence,
        "zp": lambda n: closed_forms.r_elementary_abelian(args.p, n),
        "cyclic": closed_forms.tau,
        "dihedral": dihedral_subgroup_formula,
        "dicyclic": dicyclic_subgroup_formula,
    }[fam]
    records = [{"n": n, "value": f(n)} for n in range(1, args.max_n + 1)]
    out.write(format_records(records, ["n", "value"], args.format))
    return 0


# Parser -------------------------------------------------------------------


def _common():
    # a fresh parent per parser: parents share action objects, so set_defaults
    # on the top-level parser would otherwise leak into every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "tsv"], default=argparse.SUPPRESS)
    common.add_argument("--max-genus", type=int, choices=[1, 2, 3], default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="raw tuple cap for enumeration")
    return common


def build_parser():
    p = argparse.ArgumentParser(prog="gcob", parents=[_common()],
                                description="Orbit counts and subgroup censuses for the G-cobordism monoid.")
    p.set_defaults(format="tsv", max_genus=2, budget=DEFAULT_BUDGET)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("census", parents=[_common()], help="subgroup census and r1, r2 for groups")
    s.add_argument("specs", nargs="+")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("table", parents=[_common()], help="recompute the reference table")
    s.add_argument("--max-order", type=int, default=16)
    s.add_argument("--import", dest="imports", action="append", metavar="NAME=PATH",
                   help="Cayley file for a non-builtin row, e.g. M16=m16.txt")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("rank", parents=[_common()], help="generator counts per genus")
    s.add_argument("spec")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("verify", parents=[_common()], help="cross-check a theorem over a range")
    s.add_argument("kind", choices=["cyclic", "elementary", "dihedral", "dicyclic", "recurrence"])
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--min-n", type=int, default=1)
    s.add_argument("--p", type=int, default=2)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cylinders", parents=[_common()], help="G-cylinder classes from g to h")
    s.add_argument("spec")
    s.add_argument("g", type=int)
    s.add_argument("h", type=int)
    s.set_defaults(func=cmd_cylinders)

    s = sub.add_parser("sequence", parents=[_common()], help="closed-form sequences")
    s.add_argument("family", choices=["z2", "zp", "cyclic", "dihedral", "dicyclic"])
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--p", type=int, default=2)
    s.set_defaults(func=cmd_sequence)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, GroupError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
