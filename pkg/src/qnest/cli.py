"""qecc: command-line front end.

Exit codes: 0 success / verified, 1 a verification failed, 2 usage or
parse errors (unknown ids, missing files, malformed input).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Dict, Optional

from . import catalog
from .constructions import RECIPES, ConstructionError, construct_named
from .fileio import CodeFileError, parse_code_text, read_code_file, render_code_text
from .nesting import strong_constraints
from .search import (
    RNG_ALGORITHM,
    SearchConstraints,
    SearchError,
    SearchStrategy,
    search_codes,
    verify_found,
)
from .stabilizer import (
    CodeFragment,
    DistanceReport,
    ValidationError,
    check_distance3,
    classify,
    collision_certificate,
    min_distance,
    unused_syndrome_summary,
    using_rate,
    validate,
)
from .symplectic import PauliFormatError, format_pauli_word


def _read_fragment(path: str):
    if path == "-":
        return parse_code_text(sys.stdin.read(), source="<stdin>")
    return read_code_file(path)


def _fmt_g(g: Fraction) -> str:
    return "%s (%.6f)" % (g, float(g))


def _emit_code(code_fragment: CodeFragment, meta: Dict[str, str], out: Optional[str], style: str) -> None:
    text = render_code_text(code_fragment, meta, style)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fp:
            fp.write(text)


def cmd_verify(args) -> int:
    fragment, meta = _read_fragment(args.file)
    name = meta.get("name", args.file)
    print("code: %s" % name)
    print("rows: %d on %d qubits" % (fragment.s, fragment.n))
    failed = False
    try:
        code = validate(fragment)
        print("commuting: yes")
        print("independent: yes (rank %d)" % code.s)
        print("parameters: [[%d,%d]]" % (code.n, code.k))
    except ValidationError as exc:
        print("INVALID: %s" % exc)
        return 1
    d3 = check_distance3(code)
    print("distance-3 syndromes: %s" % ("all distinct and nonzero" if d3 else "FAILED"))
    failed |= not d3
    hint = DistanceReport.at_least(3, 2) if d3 else None
    if args.distance is not None:
        rep = min_distance(code, args.distance)
        if rep.status == "exact":
            print("min distance (weight <= %d): exact %d, witness %s"
                  % (args.distance, rep.distance, format_pauli_word(rep.witness)))
            hint = rep
        elif rep.status == "at_least":
            print("min distance: at least %d (searched weight <= %d)"
                  % (rep.distance, rep.searched_weight))
            hint = rep
        else:
            print("min distance: not applicable (k = 0)")
    if args.collision is not None:
        try:
            cert = collision_certificate(code, args.collision)
        except ValueError as exc:
            print("collision certificate: %s" % exc)
            cert = None
        if cert is not None:
            if cert.ok:
                print("collision certificate (t=%d): distance >= %d over %d words"
                      % (cert.t, 2 * cert.t + 1, cert.words_checked))
                if cert.degeneracy_pair:
                    a, b = cert.degeneracy_pair
                    print("degenerate: %s and %s share a syndrome, product in the stabilizer"
                          % (format_pauli_word(a), format_pauli_word(b)))
            else:
                a, b = cert.failing_pair
                print("collision certificate (t=%d): FAILED (%s vs %s)"
                      % (cert.t, format_pauli_word(a), format_pauli_word(b)))
                failed = True
    if code.k > 0 and hint is not None:
        cls = classify(code, hint)
        flags = []
        if cls.perfect:
            flags.append("perfect")
        if cls.g_optimal:
            flags.append("g-optimal")
        print("using rate: g = %s at t=%d%s"
              % (_fmt_g(cls.g), cls.t, ("; " + ", ".join(flags)) if flags else ""))
    count, first = unused_syndrome_summary(code)
    shown = ", ".join(str(s) for s in first)
    more = " ..." if count > len(first) else ""
    print("unused syndromes: %d of %d%s" % (count, 2 ** code.s,
                                            (" (%s%s)" % (shown, more)) if count else ""))
    return 1 if failed else 0


def cmd_info(args) -> int:
    fragment, meta = _read_fragment(args.file)
    name = meta.get("name", args.file)
    print("code: %s" % name)
    print("rows: %d on %d qubits (k = %d if independent)"
          % (fragment.s, fragment.n, fragment.n - fragment.s))
    g = using_rate(fragment.n, fragment.s, 1)
    print("using rate at t=1: g = %s" % _fmt_g(g))
    con = strong_constraints(fragment)
    print("left-half row parities: %s" % "".join(str(p) for p in con.left_row_parities))
    print("right-half row parities: %s" % "".join(str(p) for p in con.right_row_parities))
    print("uniform elements in row space: all-X %s, all-Z %s, all-Y %s"
          % tuple("yes" if f else "no"
                  for f in (con.all_x_in_span, con.all_z_in_span, con.all_y_in_span)))
    return 0


def cmd_construct(args) -> int:
    params = {}
    for key in ("n", "k", "kprime"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    code = construct_named(args.recipe, **params)
    meta = {"name": args.recipe if not params else
            "%s(%s)" % (args.recipe, ",".join("%s=%d" % kv for kv in sorted(params.items()))),
            "n": str(code.n), "generators": str(code.s), "encodes": str(code.k)}
    _emit_code(code.fragment(), meta, args.output, args.style)
    return 0


def cmd_distance(args) -> int:
    fragment, _ = _read_fragment(args.file)
    code = validate(fragment)
    if args.max_weight is not None:
        rep = min_distance(code, args.max_weight)
        if rep.status == "exact":
            print("exact %d, witness %s" % (rep.distance, format_pauli_word(rep.witness)))
        elif rep.status == "at_least":
            print("at least %d (searched weight <= %d)" % (rep.distance, rep.searched_weight))
        else:
            print("not applicable (k = 0)")
        return 0
    cert = collision_certificate(code, args.collision)
    if cert.ok:
        print("distance >= %d (checked %d words)" % (2 * cert.t + 1, cert.words_checked))
        return 0
    a, b = cert.failing_pair
    print("FAILED: %s and %s share a syndrome with product outside the stabilizer"
          % (format_pauli_word(a), format_pauli_word(b)))
    return 1


def cmd_search(args) -> int:
    constraints = SearchConstraints(
        left_rows_even_parity=args.left_even,
        right_rows_even_parity=args.right_even,
        distinct_xyz_syndromes=args.distinct_xyz,
        full_distance3=args.full_d3,
        forbid_uniform_elements=args.forbid_uniform,
        require_commuting=args.commuting,
        require_independent=args.independent,
    )
    strategy = SearchStrategy(
        mode=args.mode, seed=args.seed,
        max_candidates=args.max_candidates, emit_limit=args.limit,
    )
    lines = [
        "# search: n=%d s=%d" % (args.n, args.s),
        "# constraints: %s" % ",".join(constraints.flags()),
        "# strategy: %s" % args.mode,
    ]
    if args.mode == "randomized":
        lines.append("# rng: %s" % RNG_ALGORITHM)
        lines.append("# seed: %d" % args.seed)
        lines.append("# max-candidates: %d" % args.max_candidates)
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", encoding="utf-8")
    try:
        out.write("\n".join(lines) + "\n\n")
        count = 0
        for i, fragment in enumerate(search_codes(args.n, args.s, constraints, strategy), 1):
            if not verify_found(fragment, constraints).ok:
                raise SearchError("emitted fragment failed re-verification")
            out.write(render_code_text(fragment, {"fragment": str(i)}, args.style))
            out.write("\n")
            count += 1
        out.write("# emitted: %d\n" % count)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog.entries():
            claim = "[%d,%d%s]" % (entry.claimed_n, entry.claimed_s,
                                   ",%d" % entry.claimed_d if entry.claimed_d else "")
            print("%-10s %-9s %-10s %s" % (entry.id, entry.kind, claim, entry.anchor))
        return 0
    if args.action == "show":
        if args.id is None:
            print("catalog show needs a fixture id", file=sys.stderr)
            return 2
        entry = catalog.get_entry(args.id)
        sys.stdout.write(entry.text())
        for err in entry.errata:
            print("# erratum[%s]: %s" % (err.check, err.detail))
            cells = ", ".join("row %d qubit %d -> %s" % c for c in err.cells)
            print("# corrected cells: %s" % cells)
        return 0
    # verify-all
    reports = catalog.verify_all()
    worst = 0
    for rep in reports:
        entry = catalog.get_entry(rep.entry_id)
        claim = "[%d,%d%s]" % (entry.claimed_n, entry.claimed_s,
                               ",%d" % entry.claimed_d if entry.claimed_d else "")
        g = ""
        if entry.kind == "code":
            t = max(1, (entry.claimed_d - 1) // 2) if entry.claimed_d else 1
            g = "g = " + _fmt_g(using_rate(entry.claimed_n, entry.claimed_s, t))
        print("%-10s %-8s %-11s %s" % (rep.entry_id, rep.status, claim, g))
        for check in rep.checks:
            if not check.ok:
                print("    failed %s: %s" % (check.name, check.detail))
        for err in rep.errata:
            print("    erratum[%s]: %s" % (err.check, err.detail))
            cells = ", ".join("row %d qubit %d -> %s" % c for c in err.cells)
            print("    corrected cells: %s (corrected matrix verifies)" % cells)
        if rep.status == "failed":
            worst = 1
    if args.report_dir:
        from .report import write_report_files

        for path in write_report_files(reports, args.report_dir):
            print("wrote %s" % path)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qecc", description="construct, verify and search nested stabilizer codes"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a code file and certify distance")
    p.add_argument("file", help="code file path, or - for stdin")
    p.add_argument("--distance", type=int, metavar="W", help="exhaustive search up to weight W")
    p.add_argument("--collision", type=int, metavar="T", help="certify d >= 2T+1 by collision")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="parameters, using rate, parities, uniform flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("construct", help="build a named recipe")
    p.add_argument("recipe", help="one of: %s" % ", ".join(sorted(RECIPES)))
    p.add_argument("--n", type=int, help="tower height for power5/power6x5")
    p.add_argument("--k", type=int, help="syndrome bits for gottesman2k / perfect_recursion")
    p.add_argument("--kprime", type=int, help="second bit count for perfect_recursion")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--style", choices=("letters", "binary"), default="letters")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("distance", help="distance of the code in a file")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-weight", type=int)
    group.add_argument("--collision", type=int, metavar="T")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("search", help="search fragments under nest constraints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--left-even", action="store_true", help="even left-half row parity")
    p.add_argument("--right-even", action="store_true", help="even right-half row parity")
    p.add_argument("--distinct-xyz", action="store_true", help="distinct X/Z/Y syndrome lists")
    p.add_argument("--full-d3", action="store_true", help="all 3n syndromes distinct, nonzero")
    p.add_argument("--forbid-uniform", action="store_true")
    p.add_argument("--commuting", action="store_true")
    p.add_argument("--independent", action="store_true")
    p.add_argument("--mode", choices=("exhaustive", "randomized"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-candidates", type=int, default=10000)
    p.add_argument("--limit", type=int, default=100, help="emit limit")
    p.add_argument("-o", "--output")
    p.add_argument("--style", choices=("letters", "binary"), default="letters")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list, show or verify the fixture catalog")
    p.add_argument("action", choices=("list", "show", "verify-all"))
    p.add_argument("id", nargs="?")
    p.add_argument("--report-dir", help="also write fixtures.csv and a using-rate figure")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CodeFileError, PauliFormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except KeyError as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return 2
    except (ConstructionError, SearchError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValidationError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
