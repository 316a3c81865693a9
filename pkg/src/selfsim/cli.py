"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage or I/O error. Output is built
in full before anything is written, so a failing run prints nothing on stdout.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import distributions as dist
from . import formats
from . import graph_realization as gr
from . import pingpong
from . import scaling_solvers as solvers
from . import similarity
from .block_models import WITHIN_BLOCK_MODES, BlockEqualMassModel
from .errors import SelfSimError

FORMATS = ("csv", "json", "table")


class UsageError(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _mode_pair(text):
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"modes must be integers like 2,3: {text!r}") from None
    if len(parts) != 2 or min(parts) < 2:
        raise argparse.ArgumentTypeError(f"expected two factors >= 2, got {text!r}")
    return parts


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="selfsim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a ranked degree sequence / network")
    g.add_argument("--model", choices=("geometric", "p3"), default="geometric")
    g.add_argument("--top", type=float, default=10.0, help="degree of the rank-1 node")
    g.add_argument("--ratio", type=float, default=1.4, help="geometric decay ratio a")
    g.add_argument("--nodes", type=_positive_int, default=11, help="geometric node count N")
    g.add_argument("--branching", type=int, default=2, help="p3 branching factor")
    g.add_argument("--blocks", type=_positive_int, default=3, help="p3 number of blocks")
    g.add_argument("--within", choices=WITHIN_BLOCK_MODES, default="uniform")
    g.add_argument("--quantize", action="store_true",
                   help="round to integer degrees (implied by --edges and by p3)")
    g.add_argument("--edges", metavar="PATH", help="repair, realize and write an edge list")
    g.add_argument("--format", choices=FORMATS, default="csv")

    s = sub.add_parser("solve", help="solve a scaling-factor equation")
    ssub = s.add_subparsers(dest="equation", required=True)
    br = ssub.add_parser("block-ratio")
    br.add_argument("--size", type=int, required=True)
    bp = ssub.add_parser("block-pair")
    bp.add_argument("--index", type=int, required=True)
    bp.add_argument("--branching", type=int, default=2)
    pa = ssub.add_parser("pareto-a")
    pa.add_argument("--nodes", type=int, required=True)
    pa.add_argument("--top-frac", type=float, default=0.2)
    pa.add_argument("--mass-frac", type=float, default=0.8)
    pa.add_argument("--infinite-tail", action="store_true")
    for q in (br, bp, pa):
        q.add_argument("--format", choices=FORMATS, default="table")

    e = sub.add_parser("evolve", help="two-mode stage evolution")
    e.add_argument("--modes", type=_mode_pair, default=[2, 3])
    e.add_argument("--stages", type=_positive_int, default=5)
    e.add_argument("--depth", type=_positive_int, default=2)
    e.add_argument("--layers", action="store_true", help="emit the per-layer table")
    e.add_argument("--realize", metavar="DIR", help="write per-stage edge lists and notes")
    e.add_argument("--format", choices=FORMATS, default="csv")

    a = sub.add_parser("analyze", help="fit degree or edge-list data")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--degrees", metavar="CSV")
    src.add_argument("--edges", metavar="TSV")
    a.add_argument("--exclude-floor", action="store_true",
                   help="drop degrees stuck at the minimum before the geometric fit")
    a.add_argument("--path-length", action="store_true",
                   help="also report the characteristic path length (edge input)")
    a.add_argument("--format", choices=FORMATS, default="json")

    t = sub.add_parser("tables", help="data behind the tables and figures")
    t.add_argument("which", choices=("table1", "fig1", "fig3", "fig4"))
    t.add_argument("--count", type=_positive_int, default=None)
    t.add_argument("--format", choices=FORMATS, default="csv")
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_gen(args):
    if args.model == "geometric":
        model = dist.GeometricRankModel(args.top, args.ratio, args.nodes)
        if args.quantize or args.edges:
            degrees = list(gr.quantize_degrees(model))
        else:
            degrees = [dist.nominal_degree(k, model) for k in range(1, args.nodes + 1)]
    else:
        model = BlockEqualMassModel(args.branching, args.blocks, args.within)
        pmf = model.pmf()
        n = len(pmf)
        if args.top > n - 1:
            raise gr.TopDegreeExceedsN(f"top degree {args.top} exceeds N-1 = {n - 1}")
        degrees = [min(max(gr.round_half_up(args.top * p / pmf[0]), 1), n - 1) for p in pmf]
        degrees = list(gr.DegreeSequence(tuple(sorted(degrees, reverse=True))))
    files = {}
    if args.edges:
        actual, graph = gr.graph_from_degrees(degrees)
        degrees = list(actual)
        files[args.edges] = formats.write_edge_list(graph)
    out = formats.render(("rank", "degree"), enumerate(degrees, start=1), args.format)
    return out, files


def cmd_solve(args):
    if args.equation == "block-ratio":
        res = solvers.solve_block_ratio(args.size)
    elif args.equation == "block-pair":
        res = solvers.solve_block_pair(args.index, args.branching)
    else:
        res = solvers.solve_pareto_a(args.nodes, args.top_frac, args.mass_frac,
                                     args.infinite_tail)
    if args.format == "table":
        return f"{res.value:.10f}\n", {}
    row = (res.value, res.residual, res.iterations)
    return formats.render(("value", "residual", "iterations"), [row], args.format), {}


def cmd_evolve(args):
    stages = pingpong.evolve(args.modes, args.stages, args.depth)
    files = {}
    realized = {}
    if args.realize:
        notes = []
        for st in stages:
            rs = pingpong.realize_stage(st)
            realized[st.index] = rs
            base = os.path.join(args.realize, f"stage_{st.index}")
            files[base + ".tsv"] = formats.write_edge_list(rs.graph)
            files[base + "_degrees.csv"] = formats.write_degree_csv(list(rs.actual))
            notes.extend(rs.notes)
        files[os.path.join(args.realize, "notes.txt")] = "".join(n + "\n" for n in notes)
    if args.layers:
        header, rows = formats.STAGE_LAYER_HEADER, formats.stage_layer_rows(stages)
    else:
        header, rows = formats.STAGE_SUMMARY_HEADER, formats.stage_summary_rows(stages)
        if realized:
            header = header + ("actual_total",)
            rows = [r + (realized[r[0]].actual.total,) for r in rows]
    out = formats.render(header, rows, args.format)
    if realized and args.format == "json":
        out += "".join(formats.json_line({"note": n}) + "\n"
                       for rs in realized.values() for n in rs.notes)
    return out, files


def cmd_analyze(args):
    graph = None
    try:
        if args.degrees:
            degrees = formats.read_degree_csv(_read(args.degrees))
        else:
            graph = formats.read_edge_list(_read(args.edges))
            degrees = sorted(graph.degrees(), reverse=True)
    except formats.FormatError as exc:
        raise UsageError(str(exc)) from None
    degrees = sorted(degrees, reverse=True)
    records = [
        similarity.fit_geometric(degrees, exclude_floor=args.exclude_floor).to_record(),
        similarity.fit_power_law(degrees).to_record(),
    ]
    geo_dev, har_dev = similarity.midterm_deviation(degrees)
    records.append({
        "model": "diagnostics",
        "parameters": {
            "geometric_midterm_deviation": geo_dev,
            "harmonic_midterm_deviation": har_dev,
            "pareto_share_top20": similarity.pareto_share(degrees, 0.2),
        },
        "goodness": None,
        "n": len(degrees),
    })
    if args.path_length:
        if graph is None:
            raise UsageError("--path-length needs --edges input")
        records.append({
            "model": "path_length",
            "parameters": {"delta": similarity.characteristic_path_length(graph)},
            "goodness": None,
            "n": graph.n,
        })
    if args.format == "json":
        return "".join(formats.json_line(r) + "\n" for r in records), {}
    rows = [(r["model"], k, v, r["goodness"] if r["goodness"] is not None else "", r["n"])
            for r in records for k, v in r["parameters"].items()]
    return formats.render(("model", "parameter", "value", "goodness", "n"), rows, args.format), {}


def cmd_tables(args):
    which = args.which
    if which == "table1":
        count = args.count or 9
        benford = dist.table_frequencies(dist.BenfordModel(10), count)
        zipf = dist.table_frequencies(dist.ZipfModel(count, "top-match", 0.301), count)
        rows = [(d, b, z) for (d, b), (_, z) in zip(benford, zipf)]
        header = ("digit", "benford", "zipf")
    elif which == "fig1":
        count = args.count or 20
        base = count + 1
        zipf = dist.ZipfModel(count, "top-match", dist.benford_pmf(1, base))
        rows = [(d, dist.benford_pmf(d, base), dist.zipf_pmf(d, zipf))
                for d in range(1, count + 1)]
        header = ("digit", "benford", "zipf")
    elif which == "fig3":
        count = args.count or 20
        g15 = dist.GeometricRankModel(1.0, 1.5, count)
        g14 = dist.GeometricRankModel(1.0, 1.4, count)
        zipf = dist.ZipfModel(count, "top-match", 1.0)
        rows = [(k, dist.geometric_rank_pmf(k, g15, normalized=False),
                 dist.geometric_rank_pmf(k, g14, normalized=False), dist.zipf_pmf(k, zipf))
                for k in range(1, count + 1)]
        header = ("rank", "geometric_a1.5", "geometric_a1.4", "zipf")
    else:
        ns = range(10, 56, 5) if args.count is None else range(10, 10 + 5 * args.count, 5)
        rows = [(n, solvers.solve_pareto_a(n).value) for n in ns]
        header = ("N", "a")
    return formats.render(header, rows, args.format), {}


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "evolve": cmd_evolve,
    "analyze": cmd_analyze,
    "tables": cmd_tables,
}


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, files = COMMANDS[args.command](args)
        for path, text in files.items():
            parent = os.path.dirname(path)
            if parent:
                os.makedirs(parent, exist_ok=True)
            _write(path, text)
    except SelfSimError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
