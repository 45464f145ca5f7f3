"""Command-line front end.

Exit codes: 0 on success or match, 1 on error, 2 on mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .adjacency import Kind, SystemKind, build_pair
from .graph import BipartiteGraph, complete_bipartite, parse_graph
from .homology import HomologyScopeError, homology, predicted_homology
from .ktheory import NOT_STATED, VerificationReport, order_to_text, verify
from .skeleton import (DEFAULT_LENGTH, DEFAULT_MAX_SHIFT, PrefixError, Skeleton,
                       aperiodic_prefix, skeleton_report)

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2
DEFAULT_MAX_DIM = 5000
KIND_NAMES = [k.value for k in Kind]
CSV_COLUMNS = ["alpha", "beta", "kind", "t", "k0", "k0_predicted",
               "identity_order", "identity_order_predicted", "match"]


class CliError(Exception):
    pass


def load_graph(spec: str) -> BipartiteGraph:
    kind, _, rest = spec.partition(":")
    if kind == "complete":
        try:
            alpha, beta = (int(x) for x in rest.split(","))
        except ValueError:
            raise CliError(f"bad graph spec {spec!r}; expected complete:<alpha>,<beta>") from None
        return complete_bipartite(alpha, beta)
    if kind == "file":
        try:
            data = Path(rest).read_bytes()
        except OSError as e:
            raise CliError(f"cannot read {rest}: {e.strerror}") from None
        return parse_graph(data)
    raise CliError(f"bad graph spec {spec!r}; expected complete:<a>,<b> or file:<path>")


def parse_range(text: str) -> list[int]:
    """``3`` or ``2-6`` (inclusive)."""
    lo, sep, hi = text.partition("-")
    try:
        values = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise CliError(f"bad range {text!r}") from None
    if not values:
        raise CliError(f"empty range {text!r}")
    return values


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad integer list {text!r}") from None


def _csv_text(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _tri(x: Optional[bool]) -> str:
    return "n/a" if x is None else str(x).lower()


def csv_row(r: VerificationReport) -> dict:
    c, p = r.computed, r.prediction
    return {
        "alpha": r.graph.alpha, "beta": r.graph.beta, "kind": r.kind.kind.value, "t": r.kind.t,
        "k0": str(c.k0) if c else "",
        "k0_predicted": str(p.k_group) if p else NOT_STATED,
        "identity_order": order_to_text(c.identity_order) if c else "",
        "identity_order_predicted": order_to_text(p.identity_order if p else None),
        "match": _tri(r.match),
    }


def _report_exit(r: VerificationReport) -> int:
    if r.error:
        return EXIT_ERROR
    return EXIT_MISMATCH if r.match is False else EXIT_OK


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    report = verify(g, SystemKind(args.kind, args.t), args.max_dim)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    elif args.format == "csv":
        print(_csv_text([csv_row(report)]), end="")
    else:
        print(report.to_text(), end="")
    if report.error:
        print(f"error: {report.error}", file=sys.stderr)
    return _report_exit(report)


def cmd_homology(args) -> int:
    g = load_graph(args.graph)
    h = homology(g, args.t)
    predicted = predicted_homology(g)
    match = h.groups() == predicted
    if args.format == "json":
        out = h.to_json(g, args.t)
        out["predicted"] = {k: x.to_json() for k, x in zip(("h0_reduced", "h1", "h2"), predicted)}
        out["match"] = match
        print(json.dumps(out, indent=2))
    else:
        lines = [f"graph: {g}", f"t: {args.t}",
                 f"H0 (reduced) = {h.h0_reduced}", f"H0 (unreduced) = {h.h0_unreduced}",
                 f"H1 = {h.h1}", f"H2 = {h.h2}",
                 f"euler characteristic: {h.euler_characteristic}",
                 "predicted: " + ", ".join(f"H{n} = {x}" for n, x in enumerate(predicted)),
                 f"match: {_tri(match)}"]
        print("\n".join(lines))
    return EXIT_OK if match else EXIT_MISMATCH


@dataclass(frozen=True)
class SweepSpec:
    alpha_range: tuple[int, ...]
    beta_range: tuple[int, ...]
    kinds: tuple[Kind, ...]
    t_values: tuple[int, ...]
    output_format: str = "json"

    def __post_init__(self):
        if not self.alpha_range or not self.beta_range:
            raise CliError("alpha and beta ranges must be nonempty")
        if not self.kinds:
            raise CliError("at least one kind is required")
        if not self.t_values:
            raise CliError("at least one t value is required")
        for k in self.kinds:
            for t in self.t_values:
                try:
                    SystemKind(k, t)
                except ValueError as e:
                    raise CliError(str(e)) from None

    def cells(self) -> list[tuple[int, int, str, int]]:
        return [(a, b, k.value, t) for k in self.kinds for t in self.t_values
                for a in self.alpha_range for b in self.beta_range]


def _run_cell(cell, max_dim):
    a, b, kind, t = cell
    try:
        return verify(complete_bipartite(a, b), SystemKind(kind, t), max_dim), None
    except Exception as e:  # one bad cell must not sink the sweep
        return None, f"{type(e).__name__}: {e}"


def run_sweep(spec: SweepSpec, jobs: int = 1, max_dim: int = DEFAULT_MAX_DIM):
    cells = spec.cells()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, cells, [max_dim] * len(cells)))
    else:
        results = [_run_cell(c, max_dim) for c in cells]
    return cells, results


def _sweep_record(cell, report: Optional[VerificationReport], error: Optional[str]) -> dict:
    if report is None:
        a, b, kind, t = cell
        return {"graph": f"complete:{a},{b}", "kind": kind, "t": t, "match": None, "error": error}
    return report.to_json()


def cmd_sweep(args) -> int:
    spec = SweepSpec(tuple(parse_range(args.alpha)), tuple(parse_range(args.beta)),
                     tuple(Kind(k) for k in args.kinds.split(",") if k),
                     tuple(parse_int_list(args.t)), args.format)
    cells, results = run_sweep(spec, args.jobs, args.max_dim)
    matches = mismatches = errors = 0
    for report, error in results:
        if report is None or report.error or report.match is None:
            errors += 1
        elif report.match:
            matches += 1
        else:
            mismatches += 1

    if spec.output_format == "json":
        text = json.dumps([_sweep_record(c, r, e) for c, (r, e) in zip(cells, results)], indent=2) + "\n"
    elif spec.output_format == "csv":
        rows = []
        for (a, b, kind, t), (r, e) in zip(cells, results):
            rows.append(csv_row(r) if r else {"alpha": a, "beta": b, "kind": kind, "t": t,
                                              "k0": "", "k0_predicted": "", "identity_order": "",
                                              "identity_order_predicted": "", "match": "error"})
        text = _csv_text(rows)
    else:
        text = ""
        for (a, b, kind, t), (r, e) in zip(cells, results):
            if r is None:
                text += f"complete:{a},{b} {kind} t={t} error: {e}\n"
            else:
                comp = str(r.computed.k0) if r.computed else "-"
                text += (f"complete:{a},{b} {kind} t={t} K={comp} "
                         f"order={order_to_text(r.computed.identity_order) if r.computed else '-'} "
                         f"match={_tri(r.match)}\n")
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as e:
            raise CliError(f"cannot write {args.out}: {e.strerror}") from None
    else:
        sys.stdout.write(text)
    print(f"cells={len(cells)} matches={matches} mismatches={mismatches} errors={errors}")
    return EXIT_OK if mismatches == errors == 0 else (EXIT_ERROR if errors else EXIT_MISMATCH)


def cmd_skeleton(args) -> int:
    g = load_graph(args.graph)
    kind = SystemKind(args.kind, args.t)
    if kind.dimension(g) > args.max_dim:
        raise CliError(f"matrix dimension {kind.dimension(g)} exceeds --max-dim {args.max_dim}")
    m1, m2 = build_pair(g, kind)
    sk = Skeleton.from_pair(m1, m2)
    try:
        out = skeleton_report(sk, aperiodic=True, length=args.length, max_shift=args.max_shift)
        prefix = aperiodic_prefix(sk, 0, args.length)
        out["prefix"] = prefix.to_json(sk.vertices)
    except PrefixError as e:
        if args.aperiodic:
            raise CliError(f"aperiodic prefix precondition failed: {e}") from None
        out = skeleton_report(sk)
        out["no_period_up_to_bounds"] = None
        out["aperiodic_prefix"] = {"skipped": str(e)}
    out = {"graph": str(g), "kind": kind.kind.value, "t": kind.t, **out}
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for key in ("graph", "kind", "t", "vertices", "components", "strongly_connected",
                    "cycle_with_entrance", "no_period_up_to_bounds"):
            val = out[key]
            print(f"{key}: {_tri(val) if isinstance(val, bool) or val is None else val}")
        print(f"cofinality proxy: {out['cofinality_proxy']}")
    return EXIT_MISMATCH if out["no_period_up_to_bounds"] is False else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tilek", description=(
        "Tile and 2t-gon systems of bipartite graphs: adjacency axioms, "
        "K-groups and homology, computed exactly and compared with closed forms."))
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kind=True, formats=("text", "json")):
        sp.add_argument("--graph", required=True, help="complete:<alpha>,<beta> or file:<path>")
        if kind:
            sp.add_argument("--kind", choices=KIND_NAMES, default="pointed-tile")
        sp.add_argument("--t", type=int, default=2, help="half the number of polygon sides")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                        help="refuse matrices larger than this (default %(default)s)")

    common(sub.add_parser("compute", help="K-groups and identity order of one system"),
           formats=("text", "json", "csv"))
    common(sub.add_parser("homology", help="homology of the 2t-polyhedron"), kind=False)

    sw = sub.add_parser("sweep", help="verify a grid of complete graphs")
    sw.add_argument("--alpha", default="2-6", help="inclusive range, e.g. 2-6")
    sw.add_argument("--beta", default="2-6")
    sw.add_argument("--kinds", default="pointed-tile", help="comma-separated kind names")
    sw.add_argument("--t", default="2", help="comma-separated t values")
    sw.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sw.add_argument("--out", help="write records here instead of standard output")
    sw.add_argument("--jobs", type=int, default=int(os.environ.get("TILEK_JOBS", "1")),
                    help="worker processes (default: $TILEK_JOBS or 1)")
    sw.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)

    sk = sub.add_parser("skeleton", help="connectivity and aperiodicity proxies of the 1-skeleton")
    common(sk)
    sk.add_argument("--aperiodic", action="store_true",
                    help="require the aperiodic-prefix check (error if its precondition fails)")
    sk.add_argument("--length", type=int, default=DEFAULT_LENGTH)
    sk.add_argument("--max-shift", type=int, default=DEFAULT_MAX_SHIFT)
    return p


COMMANDS = {"compute": cmd_compute, "homology": cmd_homology,
            "sweep": cmd_sweep, "skeleton": cmd_skeleton}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (CliError, ValueError, HomologyScopeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
