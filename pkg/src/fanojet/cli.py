"""Command-line front end: human-readable or JSON reports for every module.

All integers in JSON payloads are serialized as decimal strings so that
arbitrary-precision values survive any JSON reader.  Exit code 0 on success,
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import catalog as catalog_mod
from .chern import sym_top_chern, sym_top_chern_paper
from .fano import analyze
from .lines import (
    CompleteIntersection,
    LineCount,
    count_lines,
    expected_family_dimension,
    line_family_through_point,
)

GENERICITY_NOTE = (
    "line counts are intersection-theoretic and count a generic member with "
    "multiplicity; special members may behave differently"
)

CITE_LINE_COUNT = "line locus class: product of top Chern classes of Sym^d F on G(2, N+1)"
CITE_LINE_CRITERION = "line existence criterion: sum(d_i) <= 2N - 2 - r"
CITE_THROUGH_POINT = "lines through a general point: N - sum(d_i) - 1"
CITE_JET_ORDER = "jet order of -K on a Fano complete intersection: k = N + 1 - sum(d_i)"
CITE_NOT_SPANNED = "a line with -K.line = k obstructs (k+1)-spannedness"
CITE_DEGREE_BOUND = "k-very ample degree bound: L^n >= 2^n + k - 2"
CITE_SECTION_BOUND = "k-very ample section bound: h0(L) >= 2n + k - 1"
CITE_BORDERLINE = "h0(L) = 2n + k - 1 forces L^n = 2^n + k - 2"
CITE_BOX_ORDER = "box product order: min(k1, k2)"
CITE_NEFVALUE = "nefvalue bound: tau <= (n + 1)/k"
CITE_CATALOG = "classification of pairs with k-very ample polarization, k >= 2"
CITE_SPLITTING = "splitting principle: Sym^d of roots {x, y} has roots t*x + (d-t)*y"


def _s(value: int) -> str:
    return str(int(value))


def _opt(value) -> str | None:
    return None if value is None else _s(value)


def _line_count_payload(lc: LineCount) -> dict:
    out: dict = {"kind": lc.kind}
    if lc.kind == "finite":
        out["count"] = _s(lc.count)
    elif lc.kind == "family":
        out["family_dim"] = _s(lc.family_dim)
        out["nonempty"] = bool(lc.nonempty)
    return out


def _chern_terms(poly) -> list[dict]:
    out = []
    for (i, j) in sorted(poly.terms, key=lambda key: (-key[0], -key[1])):
        out.append({"c1_exp": _s(i), "c2_exp": _s(j), "coeff": _s(poly.terms[(i, j)])})
    return out


def _parse_degrees(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("degrees must be comma-separated integers, got %r" % text)
    if any(v < 1 for v in values):
        raise ValueError("degrees must be positive integers")
    return values


def _emit(report: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_lines(args) -> int:
    degrees = _parse_degrees(args.degrees)
    if not degrees:
        raise ValueError("at least one hypersurface degree is required")
    ci = CompleteIntersection(args.ambient, degrees)
    result = count_lines(ci)
    through = line_family_through_point(ci)
    delta = expected_family_dimension(ci)
    report = {
        "command": "lines",
        "inputs": {"ambient": _s(ci.N), "degrees": [_s(d) for d in ci.degrees]},
        "result": {
            "expected_family_dim": _s(delta),
            "line_count": _line_count_payload(result),
            "family_through_point": _opt(through),
        },
        "citations": [CITE_LINE_COUNT, CITE_LINE_CRITERION, CITE_THROUGH_POINT],
        "notes": [GENERICITY_NOTE],
    }
    text = [
        "lines on a generic %s" % ci,
        "expected family dimension: %d" % delta,
        "result: %s" % result,
    ]
    if through is not None:
        text.append("lines through a general point: %d-dimensional" % through)
    text.append("note: %s" % GENERICITY_NOTE)
    _emit(report, args.json, text)
    return 0


def _cmd_fano_ci(args) -> int:
    ci = CompleteIntersection(args.ambient, _parse_degrees(args.degrees))
    rep = analyze(ci)
    report = {
        "command": "fano-ci",
        "inputs": {"ambient": _s(ci.N), "degrees": [_s(d) for d in ci.degrees]},
        "result": {
            "is_fano": rep.is_fano,
            "dim": _s(rep.dim),
            "jet_order": _opt(rep.jet_order),
            "not_spanned_order": _opt(rep.not_spanned_order),
            "contains_line": rep.contains_line,
            "line_family": _line_count_payload(rep.line_family),
            "family_through_point": _opt(rep.family_through_point),
            "anticanonical_degree": _s(rep.anticanonical_degree),
            "curve_exception": rep.curve_exception,
            "formula_extrapolated": rep.formula_extrapolated,
        },
        "citations": [CITE_JET_ORDER, CITE_NOT_SPANNED, CITE_LINE_CRITERION],
        "notes": [GENERICITY_NOTE],
    }
    text = ["X = %s, dim %d" % (ci, rep.dim)]
    if rep.is_fano:
        text.append("Fano: yes (sum of degrees %d <= %d)" % (ci.degree_sum, ci.N))
    else:
        text.append("Fano: no (sum of degrees %d > %d)" % (ci.degree_sum, ci.N))
    text.append("anticanonical degree (-K)^%d = %d" % (rep.dim, rep.anticanonical_degree))
    if rep.jet_order is not None:
        text.append(
            "-K is %d-jet ample, not %d-spanned"
            % (rep.jet_order, rep.not_spanned_order)
        )
        if rep.formula_extrapolated:
            text.append("(dimension 1: order formula-extrapolated, line data n/a)")
    elif rep.curve_exception:
        text.append("jet order: none reported (the plane conic is the excluded case)")
    else:
        text.append("jet order: none (-K is not ample)")
    if rep.contains_line is True:
        text.append("contains a line: yes")
    text.append("line family: %s" % rep.line_family)
    if rep.family_through_point is not None:
        text.append("lines through a general point: %d-dimensional" % rep.family_through_point)
    text.append("note: %s" % GENERICITY_NOTE)
    _emit(report, args.json, text)
    return 0


def _cmd_bounds(args) -> int:
    citations = [CITE_DEGREE_BOUND, CITE_SECTION_BOUND, CITE_BORDERLINE]
    deg_floor = bounds_mod.min_degree(args.dim, args.order)
    sec_floor = bounds_mod.min_sections(args.dim, args.order)
    if args.degree is None and args.h0 is not None:
        raise ValueError("--h0 requires --degree")
    if args.degree is None:
        verdict = None
        result = {
            "min_degree": _s(deg_floor),
            "min_sections": _s(sec_floor),
            "degree_ok": None,
            "sections_ok": None,
            "borderline_consistent": True,
            "ok": True,
            "failures": [],
        }
        text = [
            "n = %d, k = %d: require L^n >= %d and h0(L) >= %d"
            % (args.dim, args.order, deg_floor, sec_floor)
        ]
    else:
        inv = bounds_mod.PolarizedInvariants(args.dim, args.order, args.degree, args.h0)
        verdict = bounds_mod.check(inv)
        result = {
            "min_degree": _s(deg_floor),
            "min_sections": _s(sec_floor),
            "degree_ok": verdict.degree_ok,
            "sections_ok": verdict.sections_ok,
            "borderline_consistent": verdict.borderline_consistent,
            "ok": verdict.ok,
            "failures": list(verdict.failures),
        }
        text = [
            "n = %d, k = %d: require L^n >= %d and h0(L) >= %d"
            % (args.dim, args.order, deg_floor, sec_floor),
            "degree %d: %s" % (args.degree, "ok" if verdict.degree_ok else "FAIL"),
        ]
        if args.h0 is not None:
            text.append("h0 %d: %s" % (args.h0, "ok" if verdict.sections_ok else "FAIL"))
        if not verdict.borderline_consistent:
            text.append("borderline: FAIL (h0 sits at the floor but the degree does not)")
        text.append("verdict: %s" % ("pass" if verdict.ok else "fail"))
        for failure in verdict.failures:
            text.append("  violated: %s" % failure)
    report = {
        "command": "bounds",
        "inputs": {
            "dim": _s(args.dim),
            "order": _s(args.order),
            "degree": _opt(args.degree),
            "h0": _opt(args.h0),
        },
        "result": result,
        "citations": citations,
    }
    _emit(report, args.json, text)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "verify":
        outcome = catalog_mod.verify_all()
        report = {
            "command": "catalog-verify",
            "inputs": {},
            "result": {
                "checked": _s(outcome.checked),
                "ok": outcome.ok,
                "failures": list(outcome.failures),
            },
            "citations": [CITE_CATALOG, CITE_DEGREE_BOUND, CITE_SECTION_BOUND, CITE_BOX_ORDER],
        }
        text = ["verified %d catalog entries: %s" % (outcome.checked, "all consistent" if outcome.ok else "FAILURES")]
        for failure in outcome.failures:
            text.append("  %s" % failure)
        _emit(report, args.json, text)
        return 0 if outcome.ok else 1
    rows = catalog_mod.entries(n=args.dim, k=args.k)
    report = {
        "command": "catalog",
        "inputs": {"dim": _opt(args.dim), "k": _opt(args.k)},
        "result": {
            "count": _s(len(rows)),
            "entries": catalog_mod.catalog_as_dicts(rows),
        },
        "citations": [CITE_CATALOG],
    }
    text = ["%d entries" % len(rows)]
    for e in rows:
        line = "%-9s n=%d k=%d deg=%-3d h0=%-3d %s" % (
            e.id,
            e.n,
            e.k_very_ample,
            e.degree,
            e.h0,
            e.description,
        )
        if e.flag:
            line += " [%s]" % e.flag
        text.append(line)
    _emit(report, args.json, text)
    return 0


def _cmd_adjunction(args) -> int:
    cases = catalog_mod.adjunction_cases(args.dim, args.order)
    report = {
        "command": "adjunction",
        "inputs": {"dim": _s(args.dim), "order": _s(args.order)},
        "result": {
            "cases": [
                {
                    "case_id": c.case_id,
                    "constraints": c.constraints,
                    "description": c.description,
                }
                for c in cases
            ]
        },
        "citations": [CITE_NEFVALUE, CITE_CATALOG],
    }
    text = ["possible structures for n = %d, k = %d:" % (args.dim, args.order)]
    for c in cases:
        text.append("  case %s (%s): %s" % (c.case_id, c.constraints, c.description))
    _emit(report, args.json, text)
    return 0


def _cmd_chern(args) -> int:
    poly = sym_top_chern(args.sym)
    result: dict = {
        "sym": _s(args.sym),
        "top_chern": str(poly),
        "terms": _chern_terms(poly),
    }
    citations = [CITE_SPLITTING]
    text = ["top Chern class of Sym^%d F: %s" % (args.sym, poly)]
    if args.paper_formula:
        alt = sym_top_chern_paper(args.sym)
        ratio = Fraction((args.sym + 1) ** 2, args.sym ** 2)
        result["alternative"] = {
            "top_chern": str(alt),
            "terms": _chern_terms(alt),
            "ratio_to_canonical": str(ratio),
        }
        text.append("printed closed-form variant (boundary (d+1)^2): %s" % alt)
        text.append("variant = %s * canonical (exact scalar)" % ratio)
    report = {
        "command": "chern",
        "inputs": {"sym": _s(args.sym), "paper_formula": bool(args.paper_formula)},
        "result": result,
        "citations": citations,
    }
    _emit(report, args.json, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanojet",
        description="Exact line counts, anticanonical jet orders, numeric "
        "bounds, and the verified classification catalog.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("lines", help="count lines on a generic complete intersection")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--degrees", required=True, metavar="d1,d2,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lines)

    p = sub.add_parser("fano-ci", help="embedding order of -K on a complete intersection")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--degrees", default="", metavar="d1,d2,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fano_ci)

    p = sub.add_parser("bounds", help="degree/section floors for a k-very ample bundle")
    p.add_argument("--dim", type=int, required=True, metavar="n")
    p.add_argument("--order", type=int, required=True, metavar="k")
    p.add_argument("--degree", type=int, default=None, metavar="D")
    p.add_argument("--h0", type=int, default=None, metavar="H")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("catalog", help="list or verify the classification catalog")
    p.add_argument("action", nargs="?", choices=["list", "verify"], default="list")
    p.add_argument("--k", type=int, default=None, help="filter on k_very_ample")
    p.add_argument("--dim", type=int, default=None, help="filter on dimension")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("adjunction", help="adjunction outcomes admitting (n, k)")
    p.add_argument("--dim", type=int, required=True, metavar="n")
    p.add_argument("--order", type=int, required=True, metavar="k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_adjunction)

    p = sub.add_parser("chern", help="top Chern class of Sym^d of the rank-2 bundle")
    p.add_argument("--sym", type=int, required=True, metavar="d")
    p.add_argument(
        "--paper-formula",
        action="store_true",
        help="also print the printed closed-form variant with boundary "
        "coefficient (d+1)^2 and its exact ratio to the canonical class",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_chern)

    return parser


def run(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its diagnostic
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
