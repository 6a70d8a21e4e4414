"""Command-line entry point: ``cliffgrass <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .clifford import RANK_OF_KIND, EvenCliffordElement, TangentModel, model_operator, phi_apply
from .cohomology import SPACES, compute_space
from .errors import CliffgrassError
from .spin import clifford_system, compose_system, spin7delta_basis, spin8_basis
from .verify import SUITES, default_seed, run_suite

GROUPS = ("spin8", "spin7delta", "spin6", "spin5")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliffgrass", description="Exact octonionic spin generators, Clifford morphisms and Grassmannian Poincare series.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("emit-basis", help="print a generator basis or Clifford system")
    e.add_argument("--group", choices=GROUPS, required=True)
    e.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--seed", type=int, default=None, help="random seed (default: $CLIFFGRASS_SEED or 0)")
    v.add_argument("--timing", action="store_true", help="include elapsed seconds (makes output non-reproducible)")
    v.add_argument("--format", choices=("json", "text"), default="json")

    c = sub.add_parser("poincare", help="Poincare series of a built-in space")
    c.add_argument("--space", choices=SPACES, required=True)
    c.add_argument("--max-degree", type=int, default=None)
    c.add_argument("--format", choices=("json", "text"), default="json")

    f = sub.add_parser("phi", help="apply the even Clifford morphism")
    f.add_argument("--kind", choices=tuple(RANK_OF_KIND), required=True)
    f.add_argument("--n", type=int, default=None, help="number of blocks (taken from --input when given)")
    f.add_argument("--element", required=True, metavar="FILE", help="even Clifford element JSON")
    f.add_argument("--input", metavar="FILE", help="tangent model JSON; without it the operator matrix is printed")
    f.add_argument("--format", choices=("json", "text"), default="json")
    return p


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliffgrassError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliffgrassError(f"{path} is not valid JSON: {exc}") from exc


def _emit(obj, fmt: str, text: str):
    print(json.dumps(obj, indent=1) if fmt == "json" else text)


def _cmd_emit(args) -> int:
    if args.group == "spin7delta":
        gens = spin7delta_basis()
        obj = {"group": "spin7delta", "generators": [g.to_json() for g in gens]}
        lines = [g.name for g in gens]
    elif args.group == "spin8":
        cs = clifford_system("spin8")
        gens = spin8_basis()
        obj = {
            "group": "spin8",
            "composition_sign": cs.composition_sign,
            "involutions": [g.to_json() for g in cs.members()],
            "generators": [g.to_json() for g in gens],
        }
        lines = [g.name for g in cs.members()] + [g.name for g in gens]
    else:
        cs = clifford_system(args.group)
        gens = compose_system(cs)
        obj = {
            "group": args.group,
            "composition_sign": cs.composition_sign,
            "involutions": [g.to_json() for g in cs.members()],
            "generators": [g.to_json() for g in gens],
        }
        lines = [g.name for g in cs.members()] + [g.name for g in gens]
    text = [f"{args.group}: {len(obj.get('involutions', []))} involutions, {len(obj['generators'])} generators"]
    for g in (obj.get("involutions", []) + obj["generators"]):
        text.append(f"{g['label']}  {g['rows']}x{g['cols']}")
    _emit(obj, args.format, "\n".join(text))
    return 0


def _cmd_verify(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    report = run_suite(args.suite, seed)
    if args.format == "json":
        print(json.dumps(report.to_json(include_elapsed=args.timing), indent=1))
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.id}")
        counts = report.to_json()["counts"]
        print(f"{report.suite} (seed {seed}): {counts['pass']} passed, {counts['fail']} failed")
    return 0 if report.passed else 1


def _cmd_poincare(args) -> int:
    res = compute_space(args.space, args.max_degree)
    text = f"{res.space}: {res.series}\nchi = {res.euler_characteristic}  presentation: {res.presentation_used}"
    _emit(res.to_json(), args.format, text)
    return 0


def _cmd_phi(args) -> int:
    rank = RANK_OF_KIND[args.kind]
    elem = EvenCliffordElement.from_json(rank, _load(args.element))
    if args.input is None:
        n = 1 if args.n is None else args.n
        m = model_operator(args.kind, elem, n)
        _emit({"kind": args.kind, "n": n, "operator": m.to_json()}, args.format, m.pretty())
        return 0
    model = TangentModel.from_json(_load(args.input))
    if args.n is not None and args.n != model.n:
        raise CliffgrassError(f"--n {args.n} disagrees with the input model's n = {model.n}")
    out = phi_apply(args.kind, elem, model)
    obj = out.to_json()
    _emit(obj, args.format, "\n".join(" ".join(b) for b in obj["blocks"]))
    return 0


_COMMANDS = {"emit-basis": _cmd_emit, "verify": _cmd_verify, "poincare": _cmd_poincare, "phi": _cmd_phi}


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except CliffgrassError as exc:
        print(f"cliffgrass: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())
