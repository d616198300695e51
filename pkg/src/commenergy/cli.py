"""Command-line front end.

    commenergy group dihedral:m=3 --format json
    commenergy energy s4 --tolerance 1e-12
    commenergy verify --formula F2 --family elementary:p=2 --z 2,4,6
    commenergy verify --all --format csv --threads 8
    commenergy table planar
    commenergy formulas eval F4 m=5 z=2

Exit codes: 0 ok, 1 internal inconsistency, 2 parse error, 3 order cap,
4 abelian input. Flags may also be set through COMMENERGY_<FLAG> variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import verify as V
from .commgraph import AbelianGroupError, clique_decomposition, commuting_graph, matrices
from .energies import DEFAULT_TOLERANCE, as_fraction, graph_energy_report
from .formulas import QUANTITIES, FormulaError, entry, evaluate, registry, render_value
from .groups import (
    DEFAULT_MAX_ORDER,
    GroupError,
    OrderCapExceeded,
    build,
    center,
    centralizer_count,
    commutativity_degree,
    parse_descriptor,
    recognize_quotient,
)
from .spectra import DEFAULT_WIDTH, KIND_NAMES, exact_spectrum, frac_str

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_CAP, EXIT_ABELIAN = 0, 1, 2, 3, 4

FORMATS = ("json", "csv", "dot", "pretty")

# formula -> family used when `verify --formula F --<param> ...` names no family
FORMULA_FAMILY = {
    "F1": "product",
    "F2": "elementary",
    "F3": "hanakiV",
    "F5": "metacyclic",
    "F6": "dihedral",
    "F7": "dicyclic",
    "F8": "frobenius",
    "F9": "quasidihedral",
    "F10": "psl2",
    "F11": "gl2",
    "F12a": "hanakiU",
    "F12b": "hanakiV",
}
RANGE_PARAMS = ("m", "n", "p", "q", "k", "z")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _env(name: str, default):
    return os.environ.get(f"COMMENERGY_{name.upper()}", default)


def _int_list(text: str) -> list[int]:
    """'2,4,6' or '3..10' or a mix: '2,5..7'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return out


def _fraction(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_group(args) -> str:
    spec = parse_descriptor(args.descriptor)
    G = build(spec, args.max_order)
    if args.format == "json":
        return _dumps(G.to_json_obj())
    Z = center(G)
    pr = commutativity_degree(G)
    rows = [
        ("group", spec.descriptor()),
        ("order", str(G.order)),
        ("center", str(len(Z))),
        ("centralizers", str(centralizer_count(G))),
        ("Pr(G)", frac_str(pr)),
        ("abelian", "yes" if G.is_abelian() else "no"),
    ]
    if not G.is_abelian():
        rows.append(("G/Z", str(recognize_quotient(G))))
    if args.format == "csv":
        return _csv([r[0] for r in rows], [[r[1] for r in rows]])
    return _pretty_pairs(rows)


def cmd_energy(args) -> str:
    spec = parse_descriptor(args.descriptor)
    G = build(spec, args.max_order)
    report = graph_energy_report(commuting_graph(G), args.tolerance, route=args.route)
    if args.format == "json":
        return _dumps(report.to_json_obj())
    if args.format == "csv":
        head = ["group", "E", "LE", "LEplus", "meanDegree", "vertices", "edges"]
        row = [spec.descriptor(), *(x.csv() for x in report.triple()), frac_str(report.mean_degree),
               report.vertices, report.edges]
        return _csv(head, [row])
    return _pretty_pairs([
        ("group", spec.descriptor()),
        ("E", str(report.energy)),
        ("LE", str(report.laplacian_energy)),
        ("LE+", str(report.signless_energy)),
        ("mean degree", frac_str(report.mean_degree)),
        ("vertices", str(report.vertices)),
        ("edges", str(report.edges)),
        ("route", report.route),
    ])


def cmd_graph(args) -> str:
    G = build(parse_descriptor(args.descriptor), args.max_order)
    graph = commuting_graph(G)
    if args.format == "dot":
        return graph.to_dot()
    if args.format == "json":
        return _dumps(graph.to_json_obj())
    if args.format == "csv":
        return _csv(["u", "v"], [[G.labels[graph.vertices[i]], G.labels[graph.vertices[j]]] for i, j in graph.edges()])
    return _pretty_pairs([
        ("vertices", str(graph.vertex_count)),
        ("edges", str(graph.edge_count)),
        ("decomposition", str(clique_decomposition(graph))),
    ])


def cmd_spectrum(args) -> str:
    G = build(parse_descriptor(args.descriptor), args.max_order)
    mats = dict(zip("ADLQ", matrices(commuting_graph(G))))
    kinds = "ALQ" if args.kind == "all" else args.kind
    spectra = {KIND_NAMES[k]: exact_spectrum(mats[k], args.width) for k in kinds}
    if args.format == "json":
        return _dumps({name: S.to_json_obj() for name, S in spectra.items()})
    if args.format == "csv":
        rows = []
        for name, S in spectra.items():
            for v, m in S.entries:
                if isinstance(v, int):
                    rows.append([name, str(v), "", "", "", m])
                else:
                    rows.append([name, "", " ".join(map(str, v.poly)), frac_str(v.lo), frac_str(v.hi), m])
        return _csv(["kind", "value", "poly", "lo", "hi", "mult"], rows)
    return "".join(f"{name}: {S}\n" for name, S in spectra.items())


def _verify_pairs(args) -> list[tuple[str, str]]:
    formulas = [entry(f).id for spec in args.formula for f in spec.split(",")]
    ranges = {p: getattr(args, p) for p in RANGE_PARAMS if getattr(args, p) is not None}
    if args.all:
        return V.plan_pairs(formulas or None)
    if not formulas:
        raise UsageError("verify needs --all or --formula")
    if args.group:
        return [(g, f) for f in formulas for g in args.group]
    if not ranges and not args.family:
        return V.plan_pairs(formulas)
    pairs = []
    for fid in formulas:
        family = args.family or FORMULA_FAMILY.get(fid)
        if family is None:
            raise UsageError(f"{fid} has no default family; pass --family or --group")
        pairs.extend((d, fid) for d in family_instances(family, ranges))
    return pairs


def family_instances(family: str, ranges: dict[str, list[int]]) -> list[str]:
    """Descriptors for every combination of the ranged parameters, in parameter order."""
    name, _, fixed = family.partition(":")
    if name == "product":
        inner = fixed.removeprefix("inner=") if fixed else "suzuki2"
        ks = ranges.get("k") or ranges.get("z") or [1]
        return [f"product:inner={inner},k={k}" for k in ks]
    combos: list[list[str]] = [[]]
    for key in sorted(ranges):
        combos = [c + [f"{key}={v}"] for c in combos for v in ranges[key]]
    out = []
    for c in combos:
        body = ",".join(([fixed] if fixed else []) + c)
        out.append(f"{name}:{body}" if body else name)
    return out


def cmd_verify(args) -> str:
    run = V.run_pairs(_verify_pairs(args), args.tolerance, args.max_order, args.threads)
    if args.format == "csv":
        return run.to_csv()
    if args.format == "json":
        return run.to_json()
    return _pretty_verify(run)


def _pretty_verify(run: V.VerificationRun) -> str:
    rows = []
    for r in run.records:
        for q in QUANTITIES:
            s = r.status_of(q)
            comp = dict(zip(QUANTITIES, r.computed.triple()))[q]
            rows.append([r.group, r.formula, q, _short(r.predicted_of(q)), str(comp), str(s)])
    out = _table(["group", "formula", "qty", "predicted", "computed", "status"], rows)
    for r in run.records:
        for n in r.notes:
            out += f"note {r.group} {r.formula}: {n}\n"
    for s in run.skipped:
        out += f"skipped {s.group} {s.formula}: {s.reason}\n"
    return out


def _short(v) -> str:
    r = render_value(v)
    if isinstance(r, dict):
        return r["expr"]
    if isinstance(r, list):
        return "{" + ", ".join(x["expr"] if isinstance(x, dict) else x for x in r) + "}"
    return r


TABLES = ("planar", "toroidal", "order16", "superintegral-census")


def cmd_table(args) -> str:
    if args.selector == "superintegral-census":
        rows = V.super_integral_census(V.census_groups(), args.max_order)
        if args.format == "json":
            return _dumps([r.to_json_obj() for r in rows])
        body = [[r.group, _yn(r.super_integral), *map(_yn, r.flags)] for r in rows]
        head = ["group", "super_integral", "adjacency", "laplacian", "signless"]
        return _csv(head, body) if args.format == "csv" else _table(head, body)
    if args.selector == "planar":
        names, fid = list(V.PLANAR_GROUPS), "F19"
    elif args.selector == "toroidal":
        names, fid = list(V.TOROIDAL_GROUPS), "F20"
    else:
        names, fid = list(V.ORDER16_GROUPS), "F19"
    lookup = V.PLANAR_GROUPS if fid == "F19" else V.TOROIDAL_GROUPS
    run = V.run_pairs([(lookup[n], fid) for n in names], args.tolerance, args.max_order, args.threads)
    if args.format == "json":
        return run.to_json()
    head = ["name", "group"] + [f"{q}_{w}" for q in QUANTITIES for w in ("computed", "printed", "status")]
    body = []
    for name, r in zip(names, run.records):
        row = [name, r.group]
        comp = dict(zip(QUANTITIES, r.computed.triple()))
        for q in QUANTITIES:
            printed = r.predicted_of(q)
            row += [comp[q].csv() if args.format == "csv" else str(comp[q]),
                    V._csv_value(printed) if args.format == "csv" else _short(printed),
                    r.status_of(q).kind]
        body.append(row)
    return _csv(head, body) if args.format == "csv" else _table(head, body)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_formulas(args) -> str:
    if args.action == "list":
        es = registry()
        if args.format == "json":
            return _dumps([{"id": e.id, "locus": e.locus, "hypothesis": e.hypothesis, "params": list(e.params),
                            "note": e.note} for e in es])
        body = [[e.id, e.locus, ",".join(e.params), e.hypothesis] for e in es]
        head = ["id", "locus", "params", "hypothesis"]
        return _csv(head, body) if args.format == "csv" else _table(head, body)
    if not args.fid:
        raise UsageError("formulas eval needs a formula id")
    params = {}
    for item in args.assignments:
        k, eq, v = item.partition("=")
        if not eq:
            raise UsageError(f"expected name=value, got {item!r}")
        try:
            params[k] = int(v)
        except ValueError:
            params[k] = v
    pred = evaluate(args.fid, params)
    if args.format == "json":
        return _dumps(pred.to_json_obj())
    rows = [[q, pred.cases[q], _short(pred.values[q])] for q in QUANTITIES]
    return _csv(["quantity", "case", "value"], rows) if args.format == "csv" else _table(["quantity", "case", "value"], rows)


# ---------------------------------------------------------------------------
# rendering helpers
# ---------------------------------------------------------------------------

def _csv(head: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(head)
    w.writerows(rows)
    return buf.getvalue()


def _table(head: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [list(map(str, head))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _pretty_pairs(rows: Sequence[tuple[str, str]]) -> str:
    w = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(w)}  {v}\n" for k, v in rows)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    fmt = _env("format", default)
    p.add_argument("--format", choices=formats, default=fmt if fmt in formats else default)
    p.add_argument("--tolerance", type=_fraction, default=_fraction(str(_env("tolerance", DEFAULT_TOLERANCE))),
                   help="width bound for interval energies (default 1e-9)")
    p.add_argument("--max-order", type=int, default=int(_env("max_order", DEFAULT_MAX_ORDER)))
    p.add_argument("--threads", type=int, default=int(_env("threads", 1)))
    p.add_argument("--out", default=_env("out", None), help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="commenergy", description="Energies of commuting graphs of finite groups.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="build a group and summarize it")
    p.add_argument("descriptor")
    _common(p, ("json", "csv", "pretty"), "pretty")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("energy", help="E, LE and LE+ of the commuting graph")
    p.add_argument("descriptor")
    p.add_argument("--route", choices=("auto", "clique", "exact"), default="auto")
    _common(p, ("json", "csv", "pretty"), "json")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("graph", help="export the commuting graph")
    p.add_argument("descriptor")
    _common(p, FORMATS, "pretty")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("spectrum", help="exact spectra of A, L and Q")
    p.add_argument("descriptor")
    p.add_argument("--kind", choices=("A", "L", "Q", "all"), default="all")
    p.add_argument("--width", type=_fraction, default=DEFAULT_WIDTH, help="isolating interval width")
    _common(p, ("json", "csv", "pretty"), "pretty")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check registry formulas against direct computation")
    p.add_argument("--all", action="store_true", help="run the full witness plan")
    p.add_argument("--formula", action="append", default=[], help="formula id(s), comma separated or repeated")
    p.add_argument("--family", help="family name or descriptor prefix, e.g. elementary:p=2")
    p.add_argument("--group", action="append", default=[], help="explicit group descriptor (repeatable)")
    for name in RANGE_PARAMS:
        p.add_argument(f"--{name}", type=_int_list, help=f"values of {name}, e.g. 2,4,6 or 3..10")
    _common(p, ("json", "csv", "pretty"), "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="side-by-side tables of computed and printed values")
    p.add_argument("selector", choices=TABLES)
    _common(p, ("json", "csv", "pretty"), "pretty")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("formulas", help="list or evaluate registry formulas")
    p.add_argument("action", choices=("list", "eval"))
    p.add_argument("fid", nargs="?")
    p.add_argument("assignments", nargs="*", metavar="name=value")
    _common(p, ("json", "csv", "pretty"), "pretty")
    p.set_defaults(func=cmd_formulas)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler: Callable = args.func
    try:
        text = handler(args)
    except V.InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OrderCapExceeded as exc:
        print(f"order cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AbelianGroupError as exc:
        print(f"abelian input: {exc}", file=sys.stderr)
        return EXIT_ABELIAN
    except (GroupError, FormulaError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
