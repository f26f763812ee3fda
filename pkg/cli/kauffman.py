#!/usr/bin/env python3
"""
Singular Knot Calculator

Kauffman states, Alexander polynomials and planar Floer ranks from the
command line.

Usage:
    python kauffman.py parse corpus:torus33sing
    python kauffman.py states corpus:trefoil --tsv
    python kauffman.py alexander corpus:torus33sing --method both
    python kauffman.py euler corpus:torus33sing
    python kauffman.py homology corpus:trefoil-sing3 --json
    python kauffman.py verify --seed 7 --count 100 --max-crossings 8
    python kauffman.py corpus

Inputs are `corpus:<name>` or a path to a .skd file. Results go to stdout;
status lines go to stderr.
"""
import argparse
import json
import sys
from pathlib import Path

# Add project root to path
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

import pandas as pd

from singular_knots import (
    alexander_report,
    compute_faces,
    count_states_oracle,
    diagram_to_json,
    enumerate_states,
    is_planar_singular,
    load_diagram,
    num_components,
    render,
    run_verification,
    serialize,
    states_frame,
)
from singular_knots.alexander import euler_hfa_table
from singular_knots.constants import (
    DEFAULT_COUNT,
    DEFAULT_MAX_CROSSINGS,
    DEFAULT_SEED,
    EXIT_DEGENERATE,
    EXIT_DISAGREEMENT,
    EXIT_IO,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_VERIFY_FAILED,
    MAX_ORACLE_VERTICES,
)
from singular_knots.corpus import corpus_frame, get_entry
from singular_knots.exceptions import DegenerateMarkingError, KauffmanError
from singular_knots.homology import HomologyTable, homology_or_chain
from singular_knots.laurent import HalfLaurent, one_minus_T_power, to_json
from singular_knots.states import BigradedTable


def _status(tag: str, message: str) -> None:
    print(f"[{tag}] {message}", file=sys.stderr)


def _emit(args, text: str, frame: pd.DataFrame, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.tsv:
        print(frame.to_csv(sep='\t', index=False), end='')
    else:
        print(text)


def _load(args):
    return load_diagram(args.input, q=args.q)


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def cmd_parse(args) -> int:
    d = _load(args)
    faces = compute_faces(d)
    summary = {
        'name': d.name,
        'vertices': d.num_vertices,
        'edges': d.num_edges,
        'faces': faces.num_faces,
        'singular': d.num_singular,
        'components': num_components(d),
        'planar': is_planar_singular(d),
        'q': d.marked_edge,
    }
    text = '\n'.join(f"{key:<11} {str(value).lower() if isinstance(value, bool) else value}"
                     for key, value in summary.items())
    payload = {**diagram_to_json(d), **summary, 'x': faces.region_x, 'y': faces.region_y}
    _emit(args, text, pd.DataFrame([summary]), payload)
    return EXIT_OK


def cmd_states(args) -> int:
    d = _load(args)
    states = enumerate_states(d, workers=args.workers)
    frame = states_frame(d, states)
    table = BigradedTable.from_states(states)

    lines = [f"{len(states)} states"]
    if len(frame):
        lines.append(frame.to_string(index=False))
    payload = {
        'name': d.name,
        'count': len(states),
        'table': table.to_json(),
        'states': [
            {'corners': [c.value for c in s.assignment], 'two_s': s.two_s,
             'm': s.maslov, 'n': s.n_grading}
            for s in states
        ],
    }
    if args.oracle:
        if d.num_vertices > MAX_ORACLE_VERTICES:
            _status('SKIP', f"Oracle limited to {MAX_ORACLE_VERTICES} vertices")
        else:
            oracle = count_states_oracle(d)
            payload['oracle'] = oracle
            lines.append(f"oracle      {oracle}")
            if oracle != len(states):
                _status('FAIL', f"Oracle counts {oracle}, enumeration {len(states)}")
                _emit(args, '\n'.join(lines), frame, payload)
                return EXIT_DISAGREEMENT
    _emit(args, '\n'.join(lines), frame, payload)
    return EXIT_OK


def cmd_alexander(args) -> int:
    d = _load(args)
    report = alexander_report(d, methods=args.method, workers=args.workers)
    methods = report['methods']

    lines = [next(iter(methods.values()))]
    if len(methods) > 1:
        lines += [f"{name:<12} {value}" for name, value in methods.items()]
        lines.append('methods agree' if report['methods_agree'] else 'methods DISAGREE')
    frame = pd.DataFrame(
        [{'method': name, 'delta': value} for name, value in methods.items()],
        columns=['method', 'delta'],
    )
    _emit(args, '\n'.join(lines), frame, report)

    if not report['methods_agree']:
        _status('FAIL', f"Methods disagree on '{d.name}'")
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_euler(args) -> int:
    d = _load(args)
    report = alexander_report(d, methods='state-sum', workers=args.workers)
    delta = HalfLaurent((k, c) for k, c in report['delta'])

    lines = [f"chi(HF^-)   {render(delta)}"]
    payload = {'name': d.name, 'delta': to_json(delta), 'ell': None, 'chi_hfa': None}
    rows = []
    if d.num_singular:
        ell = d.num_singular - 1
        chi = one_minus_T_power(ell) * delta
        payload.update(ell=ell, chi_hfa=to_json(chi))
        rows = euler_hfa_table(chi)
        lines += [f"ell         {ell}", f"chi(HFa)    {render(chi)}", ""]
        lines.append(pd.DataFrame(rows).to_string(index=False))
    else:
        _status('INFO', "chi(HFa) omitted: the diagram has no singular vertex")
    frame = pd.DataFrame(rows, columns=['alexander', 'coefficient'])
    _emit(args, '\n'.join(lines), frame, payload)
    return EXIT_OK


def cmd_homology(args) -> int:
    d = _load(args)
    result = homology_or_chain(d, workers=args.workers)
    if isinstance(result, HomologyTable):
        table, heading = result.ranks, "HF^- ranks (rows M, columns Alexander grading)"
    else:
        table, heading = result.generators, f"# {result.disclaimer}"
        _status('INFO', "Diagram is not planar singular; showing chain-level generators")

    lines = [heading, result.to_matrix().to_string()]
    _emit(args, '\n'.join(lines), table.to_frame(), result.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(
        seed=args.seed,
        count=args.count,
        max_crossings=args.max_crossings,
        include_corpus=not args.no_corpus,
        workers=args.workers,
        verbose=args.verbose,
    )
    summary = report.summary()
    lines = [summary.to_string(index=False), '', 'PASS' if report.passed else 'FAIL']
    failures = report.failures()
    if len(failures):
        lines += ['', failures.to_string(index=False)]
    _emit(args, '\n'.join(lines), report.frame, report.to_json())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_corpus(args) -> int:
    if args.name:
        entry = get_entry(args.name)
        d = entry.diagram()
        frame = pd.DataFrame([{'name': entry.name, 'delta': entry.delta,
                               'chi_hfa': entry.chi_hfa, 'states': entry.states}])
        payload = {**diagram_to_json(d), 'delta': entry.delta,
                   'chi_hfa': entry.chi_hfa, 'states': entry.states}
        _emit(args, serialize(d).rstrip('\n'), frame, payload)
        return EXIT_OK

    frame = corpus_frame()
    _emit(args, frame.to_string(index=False), frame, frame.to_dict(orient='records'))
    return EXIT_OK


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON output")
    output.add_argument("--tsv", action="store_true", help="Tab-separated output")
    common.add_argument("--q", type=int, metavar="EDGE", help="Override the marked edge")
    common.add_argument("--workers", type=int, default=1,
                        help="Worker processes (capped by KAUFFMAN_THREADS)")

    parser = argparse.ArgumentParser(
        description="Singular knot Kauffman states and Alexander polynomials",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python kauffman.py parse corpus:torus33sing
  python kauffman.py alexander knot.skd --method both
  python kauffman.py euler corpus:torus33sing --json
  python kauffman.py verify --seed 7 --count 100

Exit codes: 0 ok, 1 I/O, 2 invalid diagram, 3 degenerate marking,
            4 method disagreement, 5 verification failed
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="Validate and summarize a diagram")
    p.add_argument("input", help="corpus:<name> or .skd path")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("states", parents=[common], help="List Kauffman states")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true",
                   help="Cross-check the count by brute force")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial")
    p.add_argument("input")
    p.add_argument("--method", choices=["state-sum", "skein", "both"], default="state-sum")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristics of HF^- and HFa")
    p.add_argument("input")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("homology", parents=[common], help="Planar HF^- ranks or chain table")
    p.add_argument("input")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", parents=[common], help="Run the invariant suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=DEFAULT_COUNT)
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.add_argument("--no-corpus", action="store_true", help="Random diagrams only")
    p.add_argument("-v", "--verbose", action="store_true", help="Progress on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="List built-in diagrams")
    p.add_argument("name", nargs="?", help="Print one entry as .skd")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as e:
        _status('ERROR', str(e))
        return EXIT_IO
    except DegenerateMarkingError as e:
        _status('ERROR', str(e))
        return EXIT_DEGENERATE
    except KauffmanError as e:
        _status('ERROR', str(e))
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
