"""Batch command-line front end.

Every command reads DIMACS graphs, writes one JSON envelope
{"status": ..., "data": ...} to stdout, and exits 0 on success, 1 on a
truthful negative (not a ring, not in class, invalid certificate), 2 on
an input error, and 3 on a capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance
from .chi_structure import chi_ring_class, max_hyperhole, omega_ring
from .errors import CapacityError, InputError, ParseError
from .generators import (
    BranchSets,
    consecutive_parts,
    gen_extremal_hyperantihole,
    gen_extremal_hyperhole,
    gen_hyperantihole,
    gen_hyperhole,
    gen_random_ring,
    verify_minor,
)
from .graph import Graph, is_proper, load_dimacs, save_dimacs
from .gt_solver import chi_gt, color_gt
from .oracle import brute_alpha, brute_chi, brute_omega, enumerate_holes
from .recognition import recognize_ring, simplicial_elimination_sequence
from .ring_coloring import color_ring_or_simplicial

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["status", "data"],
    "properties": {"status": {"type": "string"}, "data": {"type": "object"}},
}

DATA_SCHEMAS = {
    "recognize": {
        "type": "object",
        "required": ["is_ring"],
        "properties": {
            "is_ring": {"type": "boolean"},
            "k": {"type": "integer"},
            "partition": {
                "type": "object",
                "required": ["k", "parts"],
                "properties": {
                    "k": {"type": "integer"},
                    "parts": {"type": "array", "items": {"type": "array"}},
                },
            },
        },
    },
    "color": {
        "type": "object",
        "required": ["colors_used", "coloring"],
        "properties": {
            "colors_used": {"type": "integer"},
            "coloring": {
                "type": "array",
                "items": {"type": ["integer", "null"]},
            },
        },
    },
    "chi": {"type": "object", "required": ["chi"]},
    "omega": {"type": "object", "required": ["omega"]},
    "generate": {"type": "object", "required": ["n", "edges", "files"]},
    "verify-minor": {"type": "object", "required": ["valid"]},
    "oracle": {"type": "object"},
    "acceptance": {"type": "object", "required": ["passed", "failed"]},
}


def _emit(status: str, data: dict, code: int) -> int:
    print(json.dumps({"status": status, "data": data}, sort_keys=True))
    return code


def _load_graph(path: str) -> Graph:
    return load_dimacs(Path(path).read_text())


def _coloring_array(G: Graph, coloring: dict[int, int]) -> list[int | None]:
    return [coloring.get(v) for v in G.vertices]


def _cmd_recognize(args) -> int:
    G = _load_graph(args.file)
    P = recognize_ring(G)
    if P is None:
        return _emit("not_a_ring", {"is_ring": False}, EXIT_NEGATIVE)
    return _emit("ok", {"is_ring": True, "k": P.k, "partition": P.to_json()}, EXIT_OK)


def _cmd_color(args) -> int:
    G = _load_graph(args.file)
    coloring = (
        color_ring_or_simplicial(G) if args.klass == "ring" else color_gt(G)
    )
    if coloring is None:
        return _emit("not_in_class", {"class": args.klass}, EXIT_NEGATIVE)
    data = {
        "colors_used": len(set(coloring.values())),
        "coloring": _coloring_array(G, coloring),
    }
    if args.verify:
        data["proper"] = is_proper(G, coloring)
        try:
            data["optimal"] = data["colors_used"] == brute_chi(G, cap=args.cap)
        except CapacityError:
            data["optimal"] = None
        if data["proper"] is False or data["optimal"] is False:
            return _emit("verification_failed", data, EXIT_NEGATIVE)
    return _emit("ok", data, EXIT_OK)


def _cmd_chi(args) -> int:
    G = _load_graph(args.file)
    value = chi_ring_class(G) if args.klass == "ring" else chi_gt(G)
    if value is None:
        return _emit("not_in_class", {"class": args.klass}, EXIT_NEGATIVE)
    return _emit("ok", {"chi": value}, EXIT_OK)


def _cmd_omega(args) -> int:
    G = _load_graph(args.file)
    P = recognize_ring(G)
    if P is not None:
        return _emit("ok", {"omega": omega_ring(G, P)}, EXIT_OK)
    seq = simplicial_elimination_sequence(G)
    if not seq.residual:
        removed: set[int] = set()
        best = 0
        for v in seq.order:
            best = max(best, 1 + sum(1 for w in G.neighbors(v) if w not in removed))
            removed.add(v)
        return _emit("ok", {"omega": best}, EXIT_OK)
    return _emit("not_in_class", {"reason": "neither a ring nor chordal"}, EXIT_NEGATIVE)


def _cmd_generate(args) -> int:
    params = [int(p) for p in args.params]
    partition_json = None
    if args.family == "hyperhole":
        G, P = gen_hyperhole(params[0], params[1:])
        partition_json = P.to_json()
    elif args.family == "extremal-hyperhole":
        G, P = gen_extremal_hyperhole(*params)
        partition_json = P.to_json()
    elif args.family == "hyperantihole":
        G = gen_hyperantihole(params[0], params[1:])
        partition_json = {
            "k": params[0],
            "parts": consecutive_parts(params[1:]),
        }
    elif args.family == "extremal-hyperantihole":
        G = gen_extremal_hyperantihole(*params)
    elif args.family == "random-ring":
        G, P = gen_random_ring(params[0], params[1], seed=args.seed)
        partition_json = P.to_json()
    else:
        raise InputError(f"unknown family {args.family!r}")
    base = Path(args.out)
    col_path = base.with_suffix(".col")
    col_path.write_text(save_dimacs(G))
    sidecar = {
        "family": args.family,
        "params": params,
        "seed": args.seed,
        "partition": partition_json,
    }
    json_path = base.with_suffix(".json")
    json_path.write_text(json.dumps(sidecar, sort_keys=True) + "\n")
    data = {
        "n": G.n,
        "edges": len(G.edges),
        "files": [str(col_path), str(json_path)],
    }
    return _emit("ok", data, EXIT_OK)


def _cmd_verify_minor(args) -> int:
    G = _load_graph(args.file)
    payload = json.loads(Path(args.branchsets).read_text())
    sets = BranchSets(tuple(frozenset(s) for s in payload["sets"]))
    valid = verify_minor(G, sets, int(payload["target"]))
    return _emit(
        "ok" if valid else "invalid",
        {"valid": valid, "target": int(payload["target"])},
        EXIT_OK if valid else EXIT_NEGATIVE,
    )


def _cmd_oracle(args) -> int:
    G = _load_graph(args.file)
    if args.what == "chi":
        data = {"chi": brute_chi(G, cap=args.cap)}
    elif args.what == "omega":
        data = {"omega": brute_omega(G, cap=args.cap)}
    elif args.what == "alpha":
        data = {"alpha": brute_alpha(G, cap=args.cap)}
    else:
        holes = enumerate_holes(G, cap=args.cap)
        data = {"holes": [list(h) for h in holes], "count": len(holes)}
    return _emit("ok", data, EXIT_OK)


def _cmd_acceptance(args) -> int:
    results = acceptance.run_all(
        quick=args.quick, report=lambda line: print(line, file=sys.stderr)
    )
    passed = [name for name, ok, _ in results if ok]
    failed = [name for name, ok, _ in results if not ok]
    status = "ok" if not failed else "failed"
    code = EXIT_OK if not failed else EXIT_NEGATIVE
    return _emit(status, {"passed": passed, "failed": failed}, code)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringchroma",
        description="Recognize, color, and analyze rings and their clique-cutset closure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="ring recognition with partition output")
    p.add_argument("file")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("color", help="optimal coloring")
    p.add_argument("file")
    p.add_argument("--class", dest="klass", choices=["ring", "gt"], default="gt")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("chi", help="chromatic number only")
    p.add_argument("file")
    p.add_argument("--class", dest="klass", choices=["ring", "gt"], default="gt")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("omega", help="clique number for rings and chordal graphs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("generate", help="write a generated instance plus sidecar")
    p.add_argument(
        "family",
        choices=[
            "hyperhole",
            "extremal-hyperhole",
            "hyperantihole",
            "extremal-hyperantihole",
            "random-ring",
        ],
    )
    p.add_argument("params", nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify-minor", help="check a branch-set certificate")
    p.add_argument("file")
    p.add_argument("branchsets")
    p.set_defaults(func=_cmd_verify_minor)

    p = sub.add_parser("oracle", help="brute-force reference values")
    p.add_argument("file")
    p.add_argument("--what", choices=["chi", "omega", "alpha", "holes"], default="chi")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("acceptance", help="run the acceptance suite")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=_cmd_acceptance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _emit("parse_error", {"message": str(exc), "line": exc.line}, EXIT_INPUT)
    except InputError as exc:
        return _emit("input_error", {"message": str(exc)}, EXIT_INPUT)
    except CapacityError as exc:
        return _emit("capacity_error", {"message": str(exc)}, EXIT_CAPACITY)
    except FileNotFoundError as exc:
        return _emit("input_error", {"message": str(exc)}, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
