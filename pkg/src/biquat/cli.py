"""Command-line front end.

    biquat gen su3-lie --alpha 0.5 --a 1,0,0
    biquat verify --suite all --samples 100 --seed 42
    biquat table1 --pi 0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8
    biquat bench --reps 10000

Exit codes: 0 success, 1 verification or domain failure, 2 usage error.
Angles are radians. Random draws use numpy's PCG64 (see ``sampling.make_rng``).
"""
from __future__ import annotations

import argparse
import cmath
import contextlib
import math
import sys
import time

import numpy as np

from .conway import ConwayOperator, to_matrix
from .core import UnitVector3
from .document import MatrixDocument, format_csv, format_document, format_number
from .gellmann import OctetVector, OutOfDomain, pi_to_quat, quat_to_pi
from .groups import (
    EulerSu3Params,
    EulerSu4Params,
    FieldMode,
    ModeMismatch,
    Su3LieParams,
    so3,
    so4,
    su2_left,
    su3_euler,
    su3_lie,
    su4_euler,
)
from .sampling import make_rng, random_su3_euler, random_su3_lie, random_su4_euler, random_angle
from .verify import SUITES, run_all, run_suite

GROUPS = ("su2", "so3", "so4", "su3-lie", "su3-euler", "su4-euler", "sl3r", "sl3c")
SCALARS = ("alpha", "beta", "gamma", "delta", "epsilon", "psi", "eta", "delta1", "delta2")
VECTORS = ("a", "b", "c", "d")

# which flags each group reads, in document order
GROUP_FLAGS = {
    "su2": ("alpha", "a"),
    "so3": ("alpha", "a"),
    "so4": ("alpha", "a", "beta", "b"),
    "su3-lie": ("alpha", "a", "beta", "b", "delta1", "delta2"),
    "su3-euler": ("alpha", "a", "beta", "gamma", "delta", "b"),
    "su4-euler": ("alpha", "beta", "gamma", "delta", "epsilon", "psi", "eta", "a", "b", "c", "d"),
    "sl3r": ("alpha", "a", "beta", "b", "delta1", "delta2"),
    "sl3c": ("alpha", "a", "beta", "b", "delta1", "delta2"),
}

NORM_WARN = 1e-6


class DomainError(Exception):
    pass


def _scalar(text: str) -> complex:
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not cmath.isfinite(z):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return z


def _float_list(n: int):
    def parse(text: str) -> tuple[float, ...]:
        try:
            values = tuple(float(x) for x in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated reals, got {text!r}")
        if len(values) != n or not all(math.isfinite(v) for v in values):
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated finite reals, got {text!r}")
        return values

    return parse


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def _unit(name: str, v, stderr) -> UnitVector3:
    norm = math.sqrt(sum(x * x for x in v))
    if norm < 1e-9:
        raise DomainError(f"--{name}: axis has zero length")
    if abs(norm - 1) > NORM_WARN:
        print(f"warning: --{name} has norm {norm:.6g}; normalized", file=stderr)
    return UnitVector3(v)


def _real_or_fail(name: str, z: complex) -> float:
    if z.imag != 0:
        raise DomainError(f"--{name}: complex values are only accepted for sl3c")
    return z.real


def _random_values(group: str, seed: int) -> dict:
    rng = make_rng(seed, 0)
    if group in ("su3-lie", "sl3r", "sl3c"):
        p = random_su3_lie(rng)
        return dict(alpha=p.alpha, a=p.a, beta=p.beta, b=p.b, delta1=p.delta.d1, delta2=p.delta.d2)
    if group == "su3-euler":
        p = random_su3_euler(rng)
        return dict(alpha=p.alpha, a=p.a, beta=p.beta, gamma=p.gamma, delta=p.delta, b=p.b)
    if group == "su4-euler":
        p = random_su4_euler(rng)
        return {k: getattr(p, k) for k in GROUP_FLAGS[group]}
    values = {}
    for k in GROUP_FLAGS[group]:
        values[k] = UnitVector3.random(rng) if k in VECTORS else random_angle(rng)
    return values


def build(group: str, v: dict) -> ConwayOperator:
    """Operator for ``group`` from a dict of scalars and :class:`UnitVector3` axes."""
    if group == "su2":
        return su2_left(v["alpha"], v["a"])
    if group == "so3":
        return so3(v["alpha"], v["a"])
    if group == "so4":
        return so4(v["alpha"], v["a"], v["beta"], v["b"])
    if group == "su3-euler":
        return su3_euler(EulerSu3Params(v["alpha"], v["a"], v["beta"], v["gamma"], v["delta"], v["b"]))
    if group == "su4-euler":
        return su4_euler(EulerSu4Params(*(v[k] for k in GROUP_FLAGS[group])))
    mode = {"su3-lie": FieldMode.UNITARY, "sl3r": FieldMode.SL_REAL, "sl3c": FieldMode.SL_COMPLEX}[group]
    p = Su3LieParams.make(v["alpha"], v["a"], v["beta"], v["b"], v["delta1"], v["delta2"])
    return su3_lie(p, mode)


def _doc_params(group: str, v: dict) -> dict[str, float]:
    out: dict[str, float] = {}
    for k in GROUP_FLAGS[group]:
        x = v[k]
        if isinstance(x, UnitVector3):
            for i, c in enumerate(x.vec, 1):
                out[f"{k}{i}"] = float(c)
        elif group == "sl3c":
            out[f"{k}.re"] = float(complex(x).real)
            out[f"{k}.im"] = float(complex(x).imag)
        else:
            out[k] = float(x)
    return out


def cmd_gen(args, stdout, stderr) -> int:
    group = args.group
    if args.random:
        values = _random_values(group, args.seed)
    else:
        values = {}
        for k in GROUP_FLAGS[group]:
            raw = getattr(args, k)
            if k in VECTORS:
                values[k] = _unit(k, raw if raw is not None else (0.0, 0.0, 1.0), stderr)
            else:
                z = raw if raw is not None else 0j
                values[k] = z if group == "sl3c" else _real_or_fail(k, z)
    try:
        op = build(group, values)
    except ModeMismatch as exc:
        raise DomainError(str(exc))
    doc = MatrixDocument(group, _doc_params(group, values), to_matrix(op))
    stdout.write(format_csv(doc) if args.format == "csv" else format_document(doc))
    return 0


def cmd_verify(args, stdout, stderr) -> int:
    if args.suite == "all":
        report = run_all(args.samples, args.seed)
    else:
        report = run_suite(args.suite, args.samples, args.seed)
    stdout.write(report.format())
    return 0 if report.passed else 1


def _write_pi(stdout, pi: OctetVector) -> None:
    for i, x in enumerate(pi.as_array(), 1):
        stdout.write(f"  pi{i}: {format_number(x)}\n")


def _write_quat(stdout, p: Su3LieParams) -> None:
    stdout.write(f"  alpha: {format_number(p.alpha)}\n")
    stdout.write("  a: " + ",".join(format_number(x) for x in p.a.vec) + "\n")
    stdout.write(f"  beta: {format_number(p.beta)}\n")
    stdout.write("  b: " + ",".join(format_number(x) for x in p.b.vec) + "\n")
    stdout.write(f"  delta1: {format_number(p.delta.d1)}\n")
    stdout.write(f"  delta2: {format_number(p.delta.d2)}\n")


def cmd_table1(args, stdout, stderr) -> int:
    if args.pi is not None:
        pi = OctetVector.from_array(args.pi)
        try:
            q = pi_to_quat(pi)
        except OutOfDomain as exc:
            raise DomainError(str(exc))
        stdout.write("pi:\n")
        _write_pi(stdout, pi)
        stdout.write("quaternion:\n")
        _write_quat(stdout, q)
        stdout.write("pi_roundtrip:\n")
        _write_pi(stdout, quat_to_pi(q))
        return 0
    a = _unit("a", args.a or (0.0, 0.0, 1.0), stderr)
    b = _unit("b", args.b or (0.0, 0.0, 1.0), stderr)
    scalars = {k: _real_or_fail(k, getattr(args, k) or 0j) for k in ("alpha", "beta", "delta1", "delta2")}
    q = Su3LieParams.make(scalars["alpha"], a, scalars["beta"], b, scalars["delta1"], scalars["delta2"])
    pi = quat_to_pi(q)
    stdout.write("quaternion:\n")
    _write_quat(stdout, q)
    stdout.write("pi:\n")
    _write_pi(stdout, pi)
    try:
        back = pi_to_quat(pi)
    except OutOfDomain as exc:
        stdout.write(f"quaternion_roundtrip: unavailable ({exc})\n")
        return 0
    stdout.write("quaternion_roundtrip:\n")
    _write_quat(stdout, back)
    return 0


BENCH_POOL = 64


def bench_operands(seed: int, n: int = BENCH_POOL):
    """The operand pool cycled by ``bench``: operator pairs, matrix pairs and SU(3) parameters."""
    rng = make_rng(seed, 0)
    ops = [
        ConwayOperator(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        for _ in range(2 * n)
    ]
    mats = [to_matrix(f) for f in ops]
    params = [random_su3_lie(rng) for _ in range(n)]
    return ops, mats, params


def _time_per_op(fn, reps: int) -> float:
    start = time.perf_counter_ns()
    fn(reps)
    return max(time.perf_counter_ns() - start, 1) / reps


def cmd_bench(args, stdout, stderr) -> int:
    reps = args.reps
    ops, mats, params = bench_operands(args.seed)
    n = len(params)

    def compose_loop(r):
        for k in range(r):
            j = k % n
            ops[2 * j] @ ops[2 * j + 1]

    def matmul_loop(r):
        for k in range(r):
            j = k % n
            mats[2 * j] @ mats[2 * j + 1]

    def su3_loop(r):
        for k in range(r):
            su3_lie(params[k % n])

    stdout.write(f"reps: {reps}\nseed: {args.seed}\n")
    stdout.write(f"compose_ns_per_op: {_time_per_op(compose_loop, reps):.1f}\n")
    stdout.write(f"matmul4_ns_per_op: {_time_per_op(matmul_loop, reps):.1f}\n")
    stdout.write(f"su3_lie_ns_per_op: {_time_per_op(su3_loop, reps):.1f}\n")
    return 0


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    for name in SCALARS:
        p.add_argument(f"--{name}", type=_scalar, metavar="X")
    for name in VECTORS:
        p.add_argument(f"--{name}", type=_float_list(3), metavar="x,y,z")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biquat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print the 4x4 matrix of a group element")
    g.add_argument("group", choices=GROUPS)
    _add_param_flags(g)
    g.add_argument("--random", action="store_true", help="draw parameters from --seed instead")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=("doc", "csv"), default="doc")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run randomized property checks")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    v.add_argument("--samples", type=_positive_int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table1", help="convert between octet and quaternion SU(3) parameters")
    t.add_argument("--pi", type=_float_list(8), metavar="p1,...,p8")
    for name in ("alpha", "beta", "delta1", "delta2"):
        t.add_argument(f"--{name}", type=_scalar, metavar="X")
    for name in ("a", "b"):
        t.add_argument(f"--{name}", type=_float_list(3), metavar="x,y,z")
    t.set_defaults(func=cmd_table1)

    b = sub.add_parser("bench", help="time operator composition against matrix multiplication")
    b.add_argument("--reps", type=_positive_int, default=100_000)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse prints usage and help to the process streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout, stderr)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
