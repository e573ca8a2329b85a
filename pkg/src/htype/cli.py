"""Command line front end for generating and checking the tables.

Subcommands:

  gen        print the structure table of one signature (json, csv, latex)
  verify     run the axiom checks on the embedded or generated tables
  match      compare a generated table against the embedded one
  dims       show the module type grid with minimal admissible dimensions
  relations  confirm the stored involutions and word relations

Exit codes: 0 success, 2 bad arguments or missing data, 3 failed check.
All output is deterministic for a given package version.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .basis_builder import (configured_signatures, find_initial_vector,
                            has_reference_config, reference_config)
from .clifford_rep import (GRID_NOTES, build_generators, clifford_type,
                           minimal_admissible_dimension)
from .exactlin import mat_apply
from .golden import build_n07, match_generated, split_blocks, verify_all_golden
from .lie_algebra import derive_table, generate_table, verify_htype
from .words import Signature, format_word, reduce_mod_system


def _signature(parser, r, s):
    if not (0 <= r <= 8 and 0 <= s <= 8 and 1 <= r + s <= 8):
        parser.error("need 0 <= r, s <= 8 and 1 <= r + s <= 8, got (%d, %d)"
                     % (r, s))
    return Signature(r, s)


def _build_table(sig):
    if (sig.r, sig.s) == (0, 7):
        return build_n07()
    if has_reference_config(sig):
        return generate_table(sig)
    return derive_table(sig)


def _json_text(table):
    payload = {
        "sig": [table.sig.r, table.sig.s],
        "dim": table.dim,
        "cells": table.sorted_cells(),
    }
    if table.missing:
        payload["missing"] = sorted(table.missing)
    if table.label:
        payload["label"] = table.label
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _csv_text(table):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "b", "k", "sign"])
    writer.writerows(table.sorted_cells())
    return buf.getvalue()


def _latex_cell(val):
    if val is None:
        return "$0$"
    k, sign = val
    return "$-z_{%d}$" % k if sign < 0 else "$z_{%d}$" % k


def _latex_text(table):
    n = table.dim
    lines = ["\\begin{tabular}{c|%s}" % ("c" * n)]
    header = ["$[r, c]$"] + ["$v_{%d}$" % b for b in range(1, n + 1)]
    lines.append(" & ".join(header) + " \\\\")
    lines.append("\\hline")
    for a in range(1, n + 1):
        row = ["$v_{%d}$" % a]
        for b in range(1, n + 1):
            if (a, b) in table.missing:
                row.append("")
            else:
                row.append(_latex_cell(table.entry(a, b)))
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


_RENDERERS = {"json": _json_text, "csv": _csv_text, "latex": _latex_text}


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as handle:
            handle.write(text)


def _cmd_gen(parser, args):
    sig = _signature(parser, args.r, args.s)
    table = _build_table(sig)
    _emit(_RENDERERS[args.format](table), args.out)
    return 0


def _suggestion_text(suggestion):
    if suggestion is None:
        return "no suggested value"
    if suggestion == 0:
        return "suggested value 0"
    k, sign = suggestion
    return "suggested value %sz%d" % ("-" if sign < 0 else "", k)


def _report_lines(report, name):
    lines = ["n%s %s: %s" % (report.sig, name, "ok" if report.ok else "FAIL")]
    for miss in report.missing:
        lines.append("  missing cell (v%d, v%d): %s"
                     % (miss.cell[0], miss.cell[1],
                        _suggestion_text(miss.suggestion)))
    for erratum in report.errata:
        lines.append("  erratum: %s" % erratum)
    return lines


def _report_json(report):
    missing = []
    for miss in report.missing:
        suggestion = miss.suggestion
        if isinstance(suggestion, tuple):
            suggestion = list(suggestion)
        missing.append({"cell": list(miss.cell), "suggestion": suggestion})
    return {"label": report.label, "ok": report.ok,
            "errata": list(report.errata), "missing": missing}


def _cmd_verify(parser, args):
    do_golden = args.scope in ("golden", "all")
    do_generated = args.scope in ("generated", "all")
    failed = False
    lines = []
    payload = {}

    if do_golden:
        reports = verify_all_golden()
        section = {}
        for key in sorted(reports):
            report = reports[key]
            failed = failed or not report.ok
            lines += _report_lines(report, report.label)
            section["%d,%d" % key] = _report_json(report)
        lines.append("%d embedded tables checked" % len(reports))
        payload["golden"] = section

    if do_generated:
        section = {}
        for key in configured_signatures(include_shared=True):
            report = verify_htype(generate_table(Signature(*key)))
            failed = failed or not report.ok
            lines += _report_lines(report, "generated")
            section["%d,%d" % key] = _report_json(report)
        doubled = build_n07()
        try:
            first, second = split_blocks(doubled, Signature(7, 0))
        except ValueError as exc:
            failed = True
            lines.append("n(0,7) %s: FAIL (%s)" % (doubled.label, exc))
            section["0,7"] = {"label": doubled.label, "ok": False,
                              "errata": [str(exc)], "missing": []}
        else:
            rep1 = verify_htype(first)
            rep2 = verify_htype(second)
            ok = rep1.ok and rep2.ok
            failed = failed or not ok
            lines.append("n(0,7) %s: %s (blocks checked as (7,0), "
                         "cross brackets zero)"
                         % (doubled.label, "ok" if ok else "FAIL"))
            section["0,7"] = {"label": doubled.label, "ok": ok,
                              "errata": list(rep1.errata) + list(rep2.errata),
                              "missing": []}
        payload["generated"] = section

    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        for line in lines:
            print(line)
    return 3 if failed else 0


def _cmd_match(parser, args):
    sig = _signature(parser, args.r, args.s)
    try:
        result = match_generated(sig.r, sig.s)
    except KeyError:
        print("no embedded table for n%s" % sig, file=sys.stderr)
        return 2
    if result.status == "exact":
        print("n%s: exact match" % sig)
        return 0
    if result.status == "sign-equivalent":
        print("n%s: matches after a diagonal sign change" % sig)
        print("signs: " + " ".join("%+d" % x for x in result.sigma))
        return 0
    print("n%s: unmatched" % sig)
    for diff in result.diffs:
        print("  " + diff)
    return 3


def _cmd_dims(parser, args):
    rows = [["r\\s"] + ["s=%d" % s for s in range(9)]]
    for r in range(9):
        row = ["r=%d" % r]
        for s in range(9):
            cell = "%s %d" % (clifford_type(r, s).label,
                              minimal_admissible_dimension(r, s))
            embedded = r + s >= 1 and (
                has_reference_config(Signature(r, s)) or (r, s) == (0, 7))
            if embedded:
                cell += " +"
            row.append(cell)
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(10)]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    print()
    print("cell: module type over the reals, minimal admissible dimension")
    print("*  doubled module (both inequivalent halves)")
    print("+  structure table embedded in the package")
    for key in sorted(GRID_NOTES):
        print("note (%d,%d): %s" % (key[0], key[1], GRID_NOTES[key]))
    return 0


def _cmd_relations(parser, args):
    sig = _signature(parser, args.r, args.s)
    if not has_reference_config(sig):
        print("no stored basis data for n%s" % sig, file=sys.stderr)
        return 2
    config = reference_config(sig)
    gens = build_generators(sig, system=config.involutions)
    v = find_initial_vector(gens, config)
    bad = False
    print("n%s involution system, acting on the initial vector:" % sig)
    for inv in config.involutions:
        acted = mat_apply(gens.apply_word(inv.word), v)
        wanted = v if inv.eigensign == 1 else [-x for x in v]
        ok = acted == wanted
        bad = bad or not ok
        print("  %s  eigensign %+d  matrix action %s"
              % (format_word(inv.word), inv.eigensign,
                 "confirmed" if ok else "FAILED"))
    if not config.relations:
        print("no stored relations beyond the involution system")
        return 3 if bad else 0
    print("stored relations, each expected to fix the initial vector:")
    for rel in config.relations:
        scalar = reduce_mod_system(sig, config.involutions, rel)
        fixes = mat_apply(gens.apply_word(rel), v) == v
        ok = scalar == 1 and fixes
        bad = bad or not ok
        print("  %s v = v  word reduction %+d  matrix action %s"
              % (format_word(rel), scalar,
                 "confirmed" if fixes else "FAILED"))
    return 3 if bad else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="htype",
        description="Exact structure constant tables for pseudo H-type "
                    "Lie algebras.")
    parser.add_argument("--version", action="version",
                        version="htype %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    gen = sub.add_parser("gen", help="print the table for one signature")
    gen.add_argument("r", type=int)
    gen.add_argument("s", type=int)
    gen.add_argument("--format", choices=sorted(_RENDERERS), default="json")
    gen.add_argument("--out", metavar="FILE", default=None)
    gen.set_defaults(func=_cmd_gen)

    verify = sub.add_parser("verify", help="run the axiom checks")
    scope = verify.add_mutually_exclusive_group()
    scope.add_argument("--golden", dest="scope", action="store_const",
                       const="golden", help="embedded tables only")
    scope.add_argument("--generated", dest="scope", action="store_const",
                       const="generated", help="generated tables only")
    scope.add_argument("--all", dest="scope", action="store_const",
                       const="all", help="both (default)")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify, scope="all")

    match = sub.add_parser("match",
                           help="compare generated against embedded")
    match.add_argument("r", type=int)
    match.add_argument("s", type=int)
    match.set_defaults(func=_cmd_match)

    dims = sub.add_parser("dims", help="module type and dimension grid")
    dims.set_defaults(func=_cmd_dims)

    relations = sub.add_parser("relations",
                               help="confirm involutions and relations")
    relations.add_argument("r", type=int)
    relations.add_argument("s", type=int)
    relations.set_defaults(func=_cmd_relations)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
