"""Command line surface: construct, verify, and export decompositions.

Exit codes distinguish the nature of a failure:
  0  everything verified
  1  usage or input parsing problem
  2  a mathematical check failed; a witness is printed

Payloads go to stdout and are byte-identical across runs with the same
arguments; human-oriented summaries and errors go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decompose import (
    NotOddPrime,
    build_orbit_decomposition,
    diagonal_fixture_n4,
    haggkvist_split,
    is_path_subgraph,
    k9_fixture,
    partition_witnesses,
    staircase_decomposition,
    verify_decomposition,
)
from .grid import DimensionError, make_grid
from .groups import (
    automorphism_violation,
    diagonal_shift,
    edge_orbits,
    fixed_edge_witness,
    generate_group,
    orbit_census,
    row_shift,
)
from .serialize import (
    SchemaError,
    blocks_to_text,
    decomposition_to_json,
    dot_for_blocks,
    dumps,
    export_dot,
    orbit_id_str,
    parse_decomposition,
    report_to_json_dict,
)
from .staircase import ConstructionInvalid

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2


def _emit_decomposition(fmt: str, graph, dec, report) -> None:
    if fmt == "json":
        print(decomposition_to_json(graph, dec, report))
    elif fmt == "dot":
        sys.stdout.write(export_dot(dec))
    else:
        sys.stdout.write(blocks_to_text(dec.blocks))


def _build_staircase(n: int, force: bool):
    """Shared generate/split front end; returns (dec, report) or an exit code."""
    try:
        return staircase_decomposition(n, force=force)
    except NotOddPrime:
        if n >= 3 and n % 2 == 1:
            print(
                f"error: {n} is not an odd prime; --force runs the construction checks anyway",
                file=sys.stderr,
            )
        else:
            print(f"error: width must be an odd prime >= 3, got {n}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionInvalid as err:
        print(f"construction failed [{err.check}]: {err}", file=sys.stderr)
        return EXIT_MATH


def cmd_generate(args) -> int:
    result = _build_staircase(args.n, args.force)
    if isinstance(result, int):
        return result
    dec, report = result
    graph = make_grid(args.n, args.n)
    _emit_decomposition(args.format, graph, dec, report)
    if not report.all_ok:
        print("verification failed: " + ", ".join(report.failed()), file=sys.stderr)
        return EXIT_MATH
    print(f"n={args.n}: {len(dec.blocks)} blocks verified", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as err:
        print(f"error: cannot read {args.input}: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        graph, group, dec = parse_decomposition(text)
    except SchemaError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    for i, gen in enumerate(group.generators):
        bad = automorphism_violation(graph, gen)
        if bad is not None:
            print(
                f"generator {i} is not an automorphism: image of {bad} is not an edge",
                file=sys.stderr,
            )
            return EXIT_MATH
    report = verify_decomposition(graph, group, dec)
    print(dumps(report_to_json_dict(report)))
    if not report.all_ok:
        print("verification failed: " + ", ".join(report.failed()), file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def cmd_orbits(args) -> int:
    n = args.n
    m = args.m if args.m is not None else n
    try:
        graph = make_grid(n, m)
    except DimensionError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if args.group == "diagonal_shift":
        if n != m:
            print(f"error: diagonal_shift needs a square grid, got {n} x {m}", file=sys.stderr)
            return EXIT_USAGE
        perm = diagonal_shift(n)
    else:
        perm = row_shift(n, m)
    group = generate_group([perm])
    orbits = edge_orbits(graph, group)
    sizes = sorted({o.size for o in orbits})
    print(f"graph: {graph}")
    print(f"group: {args.group}, order {group.order}")
    print(f"orbits: {len(orbits)}")
    print("sizes: " + ",".join(map(str, sizes)))
    for orbit in orbits:
        print(f"{orbit_id_str(orbit.id)} size={orbit.size}")
        if args.edges:
            for e in orbit.edges:
                print(f"  {e}")
    status = EXIT_OK
    if args.group == "row_shift" and n % 2 == 1:
        census = orbit_census(n, m)
        horizontal = sum(1 for o in orbits if o.id[0] == "H")
        vertical = sum(1 for o in orbits if o.id[0] == "V")
        uniform = all(o.size == census.orbit_size for o in orbits)
        if (horizontal, vertical) == census[:2] and uniform:
            print(
                f"census: horizontal={census.horizontal_orbits}"
                f" vertical={census.vertical_orbits} size={census.orbit_size} OK"
            )
        else:
            print(
                f"census: MISMATCH expected horizontal={census.horizontal_orbits}"
                f" vertical={census.vertical_orbits} size={census.orbit_size},"
                f" enumerated horizontal={horizontal} vertical={vertical}"
                f" sizes={','.join(map(str, sizes))}"
            )
            status = EXIT_MATH
    fixed = fixed_edge_witness(graph, group)
    if fixed is not None:
        print(
            f"warning: not semiregular on edges: a non-identity element fixes {fixed[1]}",
            file=sys.stderr,
        )
        status = EXIT_MATH
    return status


def cmd_examples(args) -> int:
    if args.name == "fig3":
        dec, report = staircase_decomposition(3)
        graph = make_grid(3, 3)
    else:
        fixture = k9_fixture() if args.name == "k9" else diagonal_fixture_n4()
        graph, group, base = fixture
        dec = build_orbit_decomposition(graph, group, base)
        report = verify_decomposition(graph, group, dec)
    _emit_decomposition(args.format, graph, dec, report)
    covered = sum(b.edge_count for b in dec.blocks)
    print(
        f"{args.name}: blocks={len(dec.blocks)} edges={covered} verified={report.all_ok}",
        file=sys.stderr,
    )
    return EXIT_OK if report.all_ok else EXIT_MATH


def cmd_split(args) -> int:
    result = _build_staircase(args.n, args.force)
    if isinstance(result, int):
        return result
    dec, report = result
    if not report.all_ok:
        print("verification failed: " + ", ".join(report.failed()), file=sys.stderr)
        return EXIT_MATH
    b = args.b if args.b is not None else args.n - 1
    try:
        segments = []
        for block in dec.blocks:
            segments.extend(haggkvist_split(block.walk, b))
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    graph = make_grid(args.n, args.n)
    partition = partition_witnesses(graph, segments)
    paths_ok = all(is_path_subgraph(s) and s.edge_count == b for s in segments)
    if args.format == "json":
        payload = {
            "graph": {"kind": "grid", "n": args.n, "m": args.n},
            "edges_per_segment": b,
            "segment_count": len(segments),
            "is_partition": partition.ok,
            "segments_are_paths": paths_ok,
            "segments": [
                {"edges": [[[e.u.row, e.u.col], [e.v.row, e.v.col]] for e in s.edges]}
                for s in segments
            ],
        }
        print(dumps(payload))
    elif args.format == "dot":
        sys.stdout.write(dot_for_blocks(segments))
    else:
        sys.stdout.write(blocks_to_text(segments))
    if not (partition.ok and paths_ok):
        print("refinement failed verification", file=sys.stderr)
        return EXIT_MATH
    print(
        f"n={args.n}: {len(segments)} segments of {b} edges verified",
        file=sys.stderr,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rookpaths",
        description="Group-transitive path decompositions of K_n box K_m, verified.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build and verify a staircase decomposition")
    g.add_argument("--n", type=int, required=True, help="grid width; odd prime unless --force")
    g.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    g.add_argument("--force", action="store_true", help="run odd non-prime widths through the checks")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="re-verify a serialized decomposition from scratch")
    v.add_argument("--input", required=True, help="path to a decomposition JSON file")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbits", help="list edge orbits of a cyclic shift action")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--m", type=int, default=None, help="defaults to n")
    o.add_argument("--group", choices=["row_shift", "diagonal_shift"], default="row_shift")
    o.add_argument("--edges", action="store_true", help="also list the member edges")
    o.set_defaults(func=cmd_orbits)

    e = sub.add_parser("examples", help="build and verify a named example")
    e.add_argument("name", choices=["k9", "fig3", "diag4"])
    e.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    e.set_defaults(func=cmd_examples)

    s = sub.add_parser("split", help="refine staircase blocks into short path segments")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--b", type=int, default=None, help="edges per segment; defaults to n-1")
    s.add_argument("--force", action="store_true", help="run odd non-prime widths through the checks")
    s.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    s.set_defaults(func=cmd_split)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
