"""Batch command-line front end.

Every invocation prints one flat ``key = value`` document on stdout.  Exit
codes: 0 ok, 1 validation error, 2 usage error.

    python -m symsquare pair --g 4 --a1 5 --b1 -1 --a2 3 --b2 -1
"""
from __future__ import annotations

import argparse
import re
import sys
import warnings
from dataclasses import dataclass, field

from . import ns_lattice as ns
from . import obstruction as ob
from . import sym_cohomology as sc
from .curve_model import CurveProfile, PencilData, riemann_roch_complete
from .textdoc import dumps

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Response:
    command: str
    status: str = "ok"
    result: list = field(default_factory=list)
    evidence: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    message: str = ""

    def pairs(self) -> list:
        out = [("command", self.command), ("status", self.status)]
        if self.status != "ok":
            out.append(("message", self.message))
        out += [(f"result.{k}" if k else "result", v) for k, v in self.result]
        for i, (name, value) in enumerate(self.evidence):
            out += [(f"evidence.{i}.name", name), (f"evidence.{i}.value", value)]
        out += [(f"note.{i}", text) for i, text in enumerate(self.notes)]
        return out

    def document(self) -> str:
        return dumps(self.pairs())


_INT = re.compile(r"^[+-]?[0-9]+$")


def _exact_int(text: str) -> int:
    if not _INT.match(text):
        raise argparse.ArgumentTypeError(f"expected an exact integer, got {text!r}")
    return int(text)


def _bool(text: str) -> bool:
    if text not in ("true", "false"):
        raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")
    return text == "true"


class _Parser(argparse.ArgumentParser):
    def _usage(self):
        # argparse wraps long usage lines; documents are one line per key
        return " ".join(self.format_usage().split())

    def error(self, message):
        raise UsageError(f"{message}; {self._usage()}")

    def exit(self, status=0, message=None):
        raise UsageError(" ".join((message or self._usage()).split()))


def _vector(v: sc.CohVector) -> list:
    return [("n", v.n)] + [(str(i), x) for i, x in enumerate(v.dims)] + [("chi", v.chi)]


def _divisor(args):
    return riemann_roch_complete(args.g, args.degree, args.h0)


def _pencil(args):
    return PencilData(
        args.d,
        h0_L=args.h0 if args.h0 is not None else max(2, args.d - args.g + 1),
        base_degree=args.base_degree,
        unique_trigonal=args.unique_trigonal,
        triple_ramification_5t=args.triple_ramification,
        base_point_free=args.base_point_free,
        double_cover_genus2_pullback=args.double_cover_genus2,
    )


def cmd_pair(args, resp):
    resp.result.append(("", ns.pair(ns.NSClass(args.a1, args.b1, args.g), ns.NSClass(args.a2, args.b2, args.g))))


def cmd_class_x(args, resp):
    L = _pencil(args)
    cls = ns.class_of_X(CurveProfile(args.g, pencils=(L,)), L)
    resp.result += [("a", cls.a), ("b", cls.b), ("g", cls.g)]


def cmd_genus_x(args, resp):
    closed = ns.arithmetic_genus_X(args.g, args.d)
    resp.result.append(("", closed))
    resp.evidence.append(("adjunction_genus", ns.adjunction_genus(ns.NSClass(args.d, -1, args.g))))


def cmd_cohom(args, resp):
    resp.result += _vector(sc.cohomology_invariant(args.n, _divisor(args)))


def cmd_cohom_skew(args, resp):
    resp.result += _vector(sc.cohomology_skew(args.n, _divisor(args)))


def cmd_oracle(args, resp):
    resp.result += _vector(sc.supersym_oracle(args.n, args.h0, args.h1, args.isotype))


def cmd_tower(args, resp):
    report = sc.theta_tower_step(args.g, args.n)
    resp.result.append(("exact", report.exact_at_dimension_level))
    for name in ("sub", "mid", "quot"):
        v = getattr(report, name)
        resp.result += [(f"{name}.{k}", x) for k, x in _vector(v)]
    resp.result += [(f"connecting.{i}", r) for i, r in enumerate(report.connecting_ranks)]


def cmd_i2(args, resp):
    resp.result.append(("", sc.i2_dimension(args.g)))


def cmd_seq_2delta(args, resp):
    E = _divisor(args)
    E2 = E.doubled(args.h0_2e)
    v = sc.sequence_2delta(args.g, E, E2, args.rank_mu0, args.rank_mu1)
    resp.result += _vector(v)


def cmd_verdict(args, resp):
    L = _pencil(args)
    profile = CurveProfile(args.g, hyperelliptic=args.hyperelliptic, pencils=(L,))
    v = ob.verdict(profile, L)
    resp.result.append(("label", str(v.label)))
    resp.evidence += list(v.evidence)
    resp.notes += list(v.notes)


def cmd_dims(args, resp):
    f = ob.dimension_facts(args.g)
    resp.result += [
        ("dim_Z_g1", f.dim_Z_g1),
        ("dim_Ztilde_lower", f.dim_Ztilde_lower),
        ("dim_Z_lower", f.dim_Z_lower),
        ("dim_Z_lower_clamped", f.z_lower_clamped),
        ("clifford_d_bound", ob.clifford_d_bound(args.g)),
    ]


def _req(*names):
    return [(name, _exact_int, True, None) for name in names]


_PENCIL_FLAGS = [
    ("h0", _exact_int, False, None),
    ("base-degree", _exact_int, False, 0),
    ("unique-trigonal", _bool, False, None),
    ("triple-ramification", _bool, False, None),
    ("base-point-free", _bool, False, None),
    ("double-cover-genus2", _bool, False, None),
]

COMMANDS = {
    "pair": (cmd_pair, _req("g", "a1", "b1", "a2", "b2")),
    "class-x": (cmd_class_x, _req("g", "d") + _PENCIL_FLAGS),
    "genus-x": (cmd_genus_x, _req("g", "d")),
    "cohom": (cmd_cohom, _req("n", "g", "degree", "h0")),
    "cohom-skew": (cmd_cohom_skew, _req("n", "g", "degree", "h0")),
    "oracle": (cmd_oracle, _req("n", "h0", "h1") + [("isotype", str, False, "invariant")]),
    "tower": (cmd_tower, _req("g", "n")),
    "i2": (cmd_i2, _req("g")),
    "seq-2delta": (
        cmd_seq_2delta,
        _req("g", "degree", "h0")
        + [(name, _exact_int, False, None) for name in ("h0-2e", "rank-mu0", "rank-mu1")],
    ),
    "verdict": (cmd_verdict, _req("g", "d") + _PENCIL_FLAGS + [("hyperelliptic", _bool, False, False)]),
    "dims": (cmd_dims, _req("g")),
}


def _build_parser(command):
    _, params = COMMANDS[command]
    parser = _Parser(prog=f"symsquare {command}", add_help=False, allow_abbrev=False)
    for name, kind, required, default in params:
        kwargs = dict(type=kind, required=required, default=default, metavar=name.upper().replace("-", "_"))
        if name == "isotype":
            kwargs["choices"] = ("invariant", "sign")
        parser.add_argument(f"--{name}", **kwargs)
    return parser


def run(argv) -> tuple:
    """Dispatch ``argv``; returns ``(Response, exit_code)``."""
    argv = list(argv)
    if not argv or argv[0] not in COMMANDS:
        got = argv[0] if argv else "nothing"
        resp = Response("", status="error",
                        message=f"unknown command {got!r}; expected one of {', '.join(COMMANDS)}")
        return resp, EXIT_USAGE
    command = argv[0]
    resp = Response(command)
    try:
        args = _build_parser(command).parse_args(argv[1:])
    except UsageError as exc:
        resp.status, resp.message = "error", str(exc)
        return resp, EXIT_USAGE
    handler, _ = COMMANDS[command]
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            handler(args, resp)
        for text in dict.fromkeys(f"warning: {w.message}" for w in caught):
            resp.notes.append(text)
    except (ValueError, ArithmeticError) as exc:
        failed = Response(command, status="error", message=str(exc))
        return failed, EXIT_VALIDATION
    return resp, EXIT_OK


def main(argv=None) -> int:
    resp, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(resp.document())
    return code


if __name__ == "__main__":
    sys.exit(main())
