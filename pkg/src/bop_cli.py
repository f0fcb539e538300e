#!/usr/bin/env python3
"""
Command-line front end for the BOP toolkit.

Input files hold either a dissection (`polygon <n>` + `chord <i> <j>` lines) or a graph
(`graph <n>` + `e <u> <v>` lines, optionally `l <x> <y>` layout pairs and `c <v> <color>` colors).

Exit codes: 0 success, 1 property violation (not BOP, failed check, lost strategy), 2 usage or
input error.

Usage:
  bopdepth check graph.txt
  bopdepth facing hexagon.txt
  bopdepth game a.txt b.txt --max-k 5 [--root 0 0]
  bopdepth bound Theorem1 r=2 delta=4
  bopdepth params tree.txt --r 2
  bopdepth enumerate 6 [--count-only]
  bopdepth sample 20 --seed 7 --count 3
  bopdepth experiment experiment.json
  bopdepth verify [--quick] [--only game-values params]
  bopdepth play a.txt b.txt --max-k 3
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO, Tuple, Union

# Ensure sibling modules import when run as python src/bop_cli.py or via the console script
_src = Path(__file__).resolve().parent
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))

from bop import Dissection, InvalidDissectionError, build_graph, facial_circumference, format_dissection, parse_dissection, recognize_bop
from depth_bounds import BoundFormula, evaluate_bound, parameters_of
from dissections import count_dissections, enumerate_dissections, sample_stream
from ef_game import LEFT, RIGHT, EFSolver, MemoOverflowError, depth_row, ef_depth, ef_depth_rooted, is_partial_iso
from env_manager import VERIFY_QUICK, get_logger
from facing import GraphWithLayout, facing, facing_of_dissection, format_graph_with_layout, parse_graph_with_layout
from graph_core import INF, Graph, GraphFormatError, diameter, is_tree
from pseudo_facial import NotPseudoBOPError, is_pseudo_bop
from tree_params import fineness, yuppie_set

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

log = get_logger("cli")

Loaded = Union[Dissection, Graph, GraphWithLayout]


class InputError(ValueError):
    """A file that cannot be read or parsed."""


def load_input(path: str) -> Loaded:
    """Dissection for `polygon` files; Graph, or GraphWithLayout when layout/color records are present."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from None
    first = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")), None)
    try:
        if first == "polygon":
            return parse_dissection(text)
        gwl = parse_graph_with_layout(text)
    except (GraphFormatError, InvalidDissectionError) as e:
        raise InputError(f"{path}: {e}") from None
    if gwl.layout or any(gwl.colors):
        return gwl
    return gwl.h


def as_graph(obj: Loaded) -> Graph:
    if isinstance(obj, Dissection):
        return build_graph(obj)
    if isinstance(obj, GraphWithLayout):
        return obj.h
    return obj


def _fmt(x) -> str:
    return "inf" if x == INF else str(x)


# ── Subcommands ─────────────────────────────────────────────────────────


def cmd_check(args, out: TextIO) -> int:
    g = as_graph(load_input(args.file))
    found = recognize_bop(g)
    report = is_pseudo_bop(g)
    print(f"vertices: {g.vertex_count}", file=out)
    print(f"edges: {len(g.edges)}", file=out)
    print(f"bop: {'yes' if found else 'no'}", file=out)
    if found:
        d, order = found
        print(f"polygon order: {' '.join(map(str, order))}", file=out)
        print(f"facial circumference: {facial_circumference(d)}", file=out)
    print(f"pseudo-bop: {'yes' if report.ok else 'no'}", file=out)
    print(f"pseudo-facial cycles: {len(report.cycles)}", file=out)
    for c in sorted(report.cycles):
        print(f"  cycle {' '.join(map(str, c.vertices))}", file=out)
    for v in report.violations:
        print(f"  violation {v}", file=out)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_facing(args, out: TextIO) -> int:
    obj = load_input(args.file)
    try:
        fs = facing_of_dissection(obj) if isinstance(obj, Dissection) else facing(as_graph(obj))
    except NotPseudoBOPError as e:
        print(str(e), file=sys.stderr)
        return EXIT_VIOLATION
    out.write(format_graph_with_layout(fs.gwl))
    return EXIT_OK


def _game_arena(obj: Loaded) -> Union[Graph, GraphWithLayout]:
    return obj if isinstance(obj, GraphWithLayout) else as_graph(obj)


def cmd_game(args, out: TextIO) -> int:
    a, b = _game_arena(load_input(args.left)), _game_arena(load_input(args.right))
    try:
        if args.root:
            depth = ef_depth_rooted(a, args.root[0], b, args.root[1], args.max_k)
        else:
            depth = ef_depth(a, b, args.max_k)
    except IndexError as e:
        print(f"Bad root: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MemoOverflowError as e:
        print(str(e), file=sys.stderr)
        return EXIT_VIOLATION
    row = depth_row(Path(args.left).name, Path(args.right).name, args.max_k, depth)
    print("left,right,maxK,depth", file=out)
    print(",".join(row[k] for k in ("left", "right", "maxK", "depth")), file=out)
    return EXIT_OK


def _parse_params(items: List[str]) -> Dict[str, float]:
    params = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"expected name=value, got {item!r}")
        try:
            params[name] = int(value)
        except ValueError:
            try:
                params[name] = float(value)
            except ValueError:
                raise InputError(f"{name}: not a number: {value!r}") from None
    return params


def cmd_bound(args, out: TextIO) -> int:
    try:
        formula = BoundFormula(args.formula)
    except ValueError:
        print(f"Unknown formula {args.formula!r}; choose from {', '.join(f.value for f in BoundFormula)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        value = evaluate_bound(formula, **_parse_params(args.params))
    except ValueError as e:
        print(f"{e} (parameters: {', '.join(parameters_of(formula))})", file=sys.stderr)
        return EXIT_USAGE
    print(f"{formula.value} {value.relation} {value.value:.6f}", file=out)
    return EXIT_OK


def cmd_params(args, out: TextIO) -> int:
    if args.r < 1:
        print("--r must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    obj = load_input(args.file)
    g = as_graph(obj)
    print(f"vertices: {g.vertex_count}", file=out)
    print(f"max degree: {g.max_degree()}", file=out)
    print(f"diameter: {_fmt(diameter(g)) if g.vertex_count else '-'}", file=out)
    if is_tree(g):
        tree = g
    else:
        try:
            fs = facing_of_dissection(obj) if isinstance(obj, Dissection) else facing(g)
        except NotPseudoBOPError:
            print("dual: - (not pseudo-BOP)", file=out)
            return EXIT_OK
        tree = fs.gwl.h
        print(f"dual vertices: {tree.vertex_count}", file=out)
        print(f"dual max degree: {tree.max_degree()}", file=out)
        if not is_tree(tree):
            print("dual fineness: - (dual is not a tree)", file=out)
            return EXIT_OK
    label = "fineness" if tree is g else "dual fineness"
    print(f"{label}: {fineness(tree)}", file=out)
    ys = yuppie_set(tree, args.r)
    print(f"{args.r}-yuppies: {' '.join(map(str, sorted(ys))) or '-'}", file=out)
    return EXIT_OK


def _write_dissections(ds, out: TextIO) -> None:
    for i, d in enumerate(ds):
        if i:
            out.write("\n")
        out.write(format_dissection(d))


def cmd_enumerate(args, out: TextIO) -> int:
    if args.n < 3:
        print("n must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    if args.count_only:
        print(count_dissections(args.n), file=out)
    else:
        _write_dissections(enumerate_dissections(args.n), out)
    return EXIT_OK


def cmd_sample(args, out: TextIO) -> int:
    if args.n < 3 or args.count < 1 or args.seed < 0:
        print("need n >= 3, count >= 1 and a non-negative seed", file=sys.stderr)
        return EXIT_USAGE
    _write_dissections(sample_stream(args.n, args.seed, args.count), out)
    return EXIT_OK


def cmd_experiment(args, out: TextIO) -> int:
    from run_experiment import load_experiment_config, run_experiment

    try:
        cfg = load_experiment_config(Path(args.config))
    except (OSError, ValueError, TypeError) as e:
        print(f"Invalid config: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        path = run_experiment(cfg)
    except OSError as e:
        print(f"Cannot write results: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    print(f"Wrote {path}", file=out)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    from acceptance import run_acceptance

    try:
        results = run_acceptance(quick=args.quick, only=args.only)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<22} cases={r.cases:<7} {r.seconds:.1f}s", file=out)
        for f in r.failures:
            print(f"      {f}", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def play_game(
    left: Union[Graph, GraphWithLayout],
    right: Union[Graph, GraphWithLayout],
    max_k: int,
    input_fn: Callable[[str], str] = input,
    out: Optional[TextIO] = None,
) -> int:
    """Text game: the solver plays Spoiler, the user answers as Duplicator."""
    out = out or sys.stdout
    solver = EFSolver(left, right)
    sizes = {LEFT: solver.s.size, RIGHT: solver.s2.size}
    config: List[Tuple[int, int]] = []
    for k in range(max_k, 0, -1):
        move = solver.winning_move(k, config)
        if move is None:
            print(f"Spoiler has no winning strategy in the remaining {k} round(s); Duplicator wins.", file=out)
            return EXIT_OK
        side, v = move
        other = RIGHT if side == LEFT else LEFT
        print(f"Round {max_k - k + 1}: Spoiler selects vertex {v} on the {side}.", file=out)
        while True:
            raw = input_fn(f"Your reply (vertex 0..{sizes[other] - 1} on the {other}): ").strip()
            if raw in ("q", "quit"):
                print("Game abandoned.", file=out)
                return EXIT_OK
            try:
                w = int(raw)
            except ValueError:
                print("Please enter a vertex number.", file=out)
                continue
            if 0 <= w < sizes[other]:
                break
            print(f"Vertex {w} is out of range.", file=out)
        config.append((v, w) if side == LEFT else (w, v))
        if not is_partial_iso(solver.s, solver.s2, config):
            print(f"Selected pairs {config} are not a partial isomorphism; Spoiler wins.", file=out)
            return EXIT_OK
    print("Duplicator survived every round.", file=out)
    return EXIT_OK


def cmd_play(args, out: TextIO) -> int:
    a, b = _game_arena(load_input(args.left)), _game_arena(load_input(args.right))
    return play_game(a, b, args.max_k, out=out)


# ── Entry point ─────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bopdepth", description="Biconnected outerplanar graphs and logical depth")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="BOP and pseudo-BOP report for a graph or dissection")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("facing", help="Emit the facing structure (graph with layout)")
    p.add_argument("file")
    p.set_defaults(func=cmd_facing)

    p = sub.add_parser("game", help="Least k for which Spoiler wins the k-round game")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--root", type=int, nargs=2, metavar=("V", "V2"), help="Pre-selected pair")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("bound", help="Evaluate a depth bound, e.g. Theorem1 r=2 delta=4")
    p.add_argument("formula")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("params", help="Max degree, diameter, fineness and yuppies")
    p.add_argument("file")
    p.add_argument("--r", type=int, default=1, help="Radius for the yuppie set (default 1)")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("enumerate", help="All dissections of the n-gon")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="Uniformly random dissections")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("experiment", help="Run a random-dissection experiment from a JSON config")
    p.add_argument("config")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="Run the acceptance sweeps")
    p.add_argument("--quick", action="store_true", default=VERIFY_QUICK)
    p.add_argument("--only", nargs="+", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="Play Duplicator against the solver")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(func=cmd_play)
    return ap


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    if getattr(args, "max_k", 0) < 0:
        print("--max-k must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    log.info("command %s", args.command)
    try:
        return args.func(args, out)
    except InputError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
