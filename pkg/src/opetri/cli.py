"""Command-line interface.

Exit codes: 0 success (or isomorphic), 1 not isomorphic, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import shlex
import subprocess
import sys
from pathlib import Path

from . import algebra, decompose, invariants, io
from .errors import OpetriError
from .iso import is_isomorphic

EXIT_OK, EXIT_NOT_ISO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InternalError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_json(path: str):
    return io.loads(Path(path).read_text())


def cmd_compose(args) -> int:
    p = algebra.compose(io.load_net(args.a), io.load_net(args.b))
    _emit(io.serialize_net(p), args.output)
    return EXIT_OK


def cmd_tensor(args) -> int:
    p = algebra.tensor(io.load_net(args.a), io.load_net(args.b))
    _emit(io.serialize_net(p), args.output)
    return EXIT_OK


def _parse_mn(text: str) -> tuple[int, int]:
    try:
        m, n = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,N but got {text!r}") from None
    if m < 0 or n < 0:
        raise argparse.ArgumentTypeError("M and N must be natural numbers")
    return m, n


def cmd_invariant(args) -> int:
    p = io.load_net(args.net)
    if args.mn is not None:
        value = invariants.f_mn(p, *args.mn)
    elif args.body_type is not None:
        value = invariants.f_bt(p, io.body_type_from_json(_read_json(args.body_type)))
    elif args.az is not None:
        value = invariants.f_az(p, io.boundary_from_json(_read_json(args.az)))
    else:
        spec = io.spec_from_dict(_read_json(args.spec))
        value = spec(p)
    print(value)
    return EXIT_OK


_DECOMPOSERS = {
    "extract": decompose.extract,
    "atomic": decompose.decompose_atomic,
    "pmn": decompose.decompose_pmn,
}


def _factor_files(mode: str, factors) -> list[tuple[str, object]]:
    if mode == "extract":
        return [("q", factors.q), ("r", factors.r), ("q_prime", factors.q_prime)]
    named = [("q", factors.q)]
    if mode == "pmn":
        named.append(("g0", factors.g0))
    named += [(f"g{k + 1}", g) for k, g in enumerate(factors.gs)]
    named.append(("q_prime", factors.q_prime))
    return named


def cmd_decompose(args) -> int:
    p = io.load_net(args.net)
    factors = _DECOMPOSERS[args.mode](p)
    if not decompose.verify_roundtrip(p, factors):
        raise InternalError(f"{args.mode} factors do not recompose to the input net")
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, net in _factor_files(args.mode, factors):
        io.save_net(net, out / f"{name}.json")
        manifest.append(
            {"file": f"{name}.json", "species": net.n_species, "transitions": net.n_transitions}
        )
    if args.mode == "pmn":
        layout = {"mode": "pmn", "recompose": "q ; (g0 + g1 + ... + gN) ; q_prime"}
        layout["h"] = list(factors.h.table)
    elif args.mode == "atomic":
        layout = {"mode": "atomic", "recompose": "q ; g1 ; ... ; gN ; q_prime"}
    else:
        layout = {"mode": "extract", "recompose": "q ; r ; q_prime"}
    layout["factors"] = manifest
    (out / "factors.json").write_text(json.dumps(layout, indent=2) + "\n")
    for entry in manifest:
        print(f"{entry['file']}\t{entry['species']}\t{entry['transitions']}")
    return EXIT_OK


def cmd_iso(args) -> int:
    witness = is_isomorphic(io.load_net(args.a), io.load_net(args.b))
    if witness is None:
        print("not isomorphic")
        return EXIT_NOT_ISO
    print(
        json.dumps(
            {"species": list(witness.species.table), "transitions": list(witness.transitions.table)}
        )
    )
    return EXIT_OK


def command_oracle(command: str):
    """Wrap an external command as an invariant: net JSON on stdin, a natural on stdout."""
    argv = shlex.split(command)

    def oracle(p):
        proc = subprocess.run(
            argv, input=io.serialize_net(p), capture_output=True, text=True, check=False
        )
        if proc.returncode != 0:
            raise OpetriError(f"oracle exited with {proc.returncode}: {proc.stderr.strip()}")
        text = proc.stdout.strip()
        if not text.isdigit():
            raise OpetriError(f"oracle printed {text!r}, expected a natural number")
        return int(text)

    return oracle


def cmd_classify(args) -> int:
    oracle = command_oracle(args.oracle)
    if args.mode == "opetri":
        spec = invariants.classify_opetri(oracle, args.arc_bound)
    else:
        spec = invariants.classify_mope(oracle, args.arc_bound, args.horizon)
    _emit(json.dumps(io.spec_to_dict(spec), indent=2), args.output)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _emit(io.export_dot(io.load_net(args.net)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opetri", description="Algebra of open Petri nets.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("compose", cmd_compose, "glue A then B along the shared foot"),
        ("tensor", cmd_tensor, "monoidal product of A and B"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("invariant", help="evaluate an invariant on a net")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mn", type=_parse_mn, metavar="M,N")
    group.add_argument("--body-type", metavar="BT.json")
    group.add_argument("--az", metavar="SEQ.json")
    group.add_argument("--spec", metavar="SPEC.json")
    p.add_argument("net")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("decompose", help="factor a net and write the factors to a directory")
    p.add_argument("--mode", choices=sorted(_DECOMPOSERS), required=True)
    p.add_argument("net")
    p.add_argument("-o", "--output", required=True, metavar="DIR")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("iso", help="decide isomorphism (exit 0 iff isomorphic)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classify", help="recover coefficients of a black-box invariant")
    p.add_argument("--mode", choices=["opetri", "mope"], required=True)
    p.add_argument("--oracle", required=True, metavar="CMD")
    p.add_argument("--arc-bound", type=int, required=True, metavar="K")
    p.add_argument("--horizon", type=int, default=8)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export-dot", help="render a net as Graphviz DOT")
    p.add_argument("net")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OpetriError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
