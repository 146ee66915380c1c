"""Command-line interface: ``cabox {gen,solve,verify,oracle,info}``.

Exit codes: 0 success, 1 invalid input (or an invalid representation under
``verify``), 2 a precondition of the requested algorithm does not hold.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import generators, io
from .approx import approx_box_rep, approx_box_rep_nca, approx_dimension, approx_dimension_nca, approx_with_point
from .arcs import ArcModel, derive_graph, find_normal_point, find_two_point_cover, is_normal
from .cobip import boxicity_cobip, cobip_boxicity_value
from .errors import InvalidInputError, PreconditionError
from .graph import Graph
from .intervals import BoxRepresentation, is_interval
from .oracle import exact_boxicity_bruteforce, validate_box_rep

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION = 0, 1, 2


def _point(text: str) -> int | Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a point: {text!r}") from None
    return int(value) if value.denominator == 1 else value


def _default_seed() -> int:
    raw = os.environ.get("CABOX_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"CABOX_SEED must be an integer, got {raw!r}") from None


def _write(text: str, dest: str | None) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _read_model(path: str) -> ArcModel:
    obj = io.read_file(path)
    if not isinstance(obj, ArcModel):
        raise InvalidInputError(f"{path}: expected an arcs file")
    return obj


def _read_graph(path: str) -> Graph:
    obj = io.read_file(path)
    if isinstance(obj, ArcModel):
        return derive_graph(obj)
    if isinstance(obj, Graph):
        return obj
    raise InvalidInputError(f"{path}: expected a graph or arcs file")


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.family == "roberts":
        model = generators.gen_roberts(args.n)[2]
    elif args.family == "cycle":
        model = generators.gen_cycle(args.n)
    elif args.family == "random-ca":
        model = generators.gen_random_ca(args.n, seed)
    elif args.family == "random-nca":
        model = generators.gen_random_nca(args.n, seed)
    else:
        model = generators.gen_random_cobip(args.n, seed)
    _write(io.emit(model), args.output)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    m = _read_model(args.input)
    if args.point is not None and not 0 <= args.point < m.circumference:
        raise InvalidInputError(f"point {args.point} outside [0, {m.circumference})")
    p = 0 if args.point is None else args.point

    if args.algorithm == "cobip":
        g = derive_graph(m)
        if args.dim_only:
            print(f"boxicity {cobip_boxicity_value(g, model=m)}")
            return EXIT_OK
        k, rep = boxicity_cobip(g, model=m)
        summary = f"boxicity {k}"
    elif args.algorithm == "approx":
        if args.dim_only:
            print(f"dimension {approx_dimension(m, p)}")
            return EXIT_OK
        rep = approx_box_rep(m, p)
        summary = f"dimension {rep.dimension}"
    else:
        if args.dim_only:
            if args.point is None and not is_normal(m):
                raise PreconditionError("model has a circle-cover pair; pass --point")
            print(f"dimension {approx_dimension_nca(m, p)}")
            return EXIT_OK
        rep = approx_with_point(m, args.point) if args.point is not None else approx_box_rep_nca(m)
        summary = f"dimension {rep.dimension}"

    text = io.emit_geometry(rep) if args.geometry else io.emit(rep)
    if args.boxes_out is None:
        # keep stdout parseable: the summary rides along as a comment
        sys.stdout.write(f"# {summary}\n{text}")
    else:
        print(summary)
        _write(text, args.boxes_out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    rep = io.read_file(args.boxes)
    if not isinstance(rep, BoxRepresentation):
        raise InvalidInputError(f"{args.boxes}: expected a boxes file")
    ok, why = validate_box_rep(g, rep)
    print(why if ok else f"invalid: {why}")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    print(f"boxicity {exact_boxicity_bruteforce(g)}")
    return EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    obj = io.read_file(args.input)
    if isinstance(obj, BoxRepresentation):
        print(f"boxes n={obj.n} dimension={obj.dimension}")
        return EXIT_OK
    g = derive_graph(obj) if isinstance(obj, ArcModel) else obj
    print(f"vertices {g.n}")
    print(f"edges {g.m}")
    print(f"interval {'yes' if is_interval(g) else 'no'}")
    if isinstance(obj, ArcModel):
        print(f"circumference {obj.circumference}")
        print(f"normal {'yes' if is_normal(obj) else 'no'}")
        cover = find_two_point_cover(obj)
        print(f"co-bipartite-model {'yes at ' + ' '.join(map(str, cover)) if cover else 'no'}")
        pt = find_normal_point(obj)
        print(f"normal-point {pt if pt is not None else 'none'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cabox", description="Boxicity of circular-arc graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an arc model")
    gen.add_argument("family", choices=["roberts", "cycle", "random-ca", "random-nca", "random-cobip"])
    gen.add_argument("--n", type=int, required=True, help="vertex count (q for roberts)")
    gen.add_argument("--seed", type=int, default=None, help="RNG seed (default: $CABOX_SEED or 0)")
    gen.add_argument("-o", "--output", default=None)
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="compute a box representation of an arc model")
    solve.add_argument("algorithm", choices=["approx", "nca", "cobip"])
    solve.add_argument("-i", "--input", required=True)
    solve.add_argument("--point", type=_point, default=None, help="cut point, integer or fraction like 7/2")
    solve.add_argument("--boxes-out", default=None)
    solve.add_argument("--dim-only", action="store_true")
    solve.add_argument("--geometry", action="store_true", help="emit per-vertex boxes instead of factors")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a box representation")
    verify.add_argument("-g", "--graph", required=True, help="graph or arcs file")
    verify.add_argument("-b", "--boxes", required=True)
    verify.set_defaults(func=cmd_verify)

    oracle = sub.add_parser("oracle", help="exact boxicity by exhaustive search (n <= 7)")
    oracle.add_argument("-g", "--graph", required=True)
    oracle.set_defaults(func=cmd_oracle)

    info = sub.add_parser("info", help="summarise an instance file")
    info.add_argument("-i", "--input", required=True)
    info.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
