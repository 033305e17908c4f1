"""Command-line front end.

Subcommands: basis, volume, check, scan, rho.  Every command is
deterministic given its flags; the seed defaults to 0, never to the clock.
Angles accept pi-literal arithmetic such as pi/4 or acos(1/sqrt(3)) so the
tabulated interval endpoints can be entered exactly.

Exit statuses: 0 success, 2 usage error, 3 input-validation failure,
4 internal consistency error.
"""

import argparse
import ast
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__
from .algebra import gell_mann, structure_constants
from .density import bloch_coefficients, rho_diagonal, rho_full, spectrum_diagonal
from .errors import ConsistencyError, ValidationError
from .euler import compose_su4
from .haar import analytic_volume, group_volume
from .separability import corner_scan, is_entangled, scan

WORKERS_ENV = "SU4EULER_WORKERS"

_ALLOWED_NAMES = {"pi": math.pi, "e": math.e, "tau": math.tau}
_ALLOWED_FUNCS = {
    "sqrt": math.sqrt, "sin": math.sin, "cos": math.cos, "tan": math.tan,
    "asin": math.asin, "acos": math.acos, "atan": math.atan,
}
_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _eval_expr(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id in _ALLOWED_NAMES:
        return _ALLOWED_NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_expr(node.operand, text)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        lhs = _eval_expr(node.left, text)
        rhs = _eval_expr(node.right, text)
        if isinstance(node.op, ast.Add):
            return lhs + rhs
        if isinstance(node.op, ast.Sub):
            return lhs - rhs
        if isinstance(node.op, ast.Mult):
            return lhs * rhs
        if isinstance(node.op, ast.Div):
            return lhs / rhs
        return lhs**rhs
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id in _ALLOWED_FUNCS and not node.keywords
            and len(node.args) == 1):
        return _ALLOWED_FUNCS[node.func.id](_eval_expr(node.args[0], text))
    raise ValueError(f"unsupported angle expression: {text!r}")


def parse_angle(text: str) -> float:
    """Evaluate a pi-literal arithmetic expression to a float."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse angle expression {text!r}") from exc
    return _eval_expr(tree.body, text)


def parse_angle_list(text: str, allowed_counts) -> list:
    values = [parse_angle(part) for part in text.split(",") if part.strip()]
    if len(values) not in allowed_counts:
        raise ValueError(
            f"expected {' or '.join(map(str, allowed_counts))} angles, got {len(values)}"
        )
    return values


def load_matrix_file(path: str) -> np.ndarray:
    """Read a 4x4 complex matrix: 4 rows of 8 reals, re/im interleaved."""
    data = np.loadtxt(path)
    if data.shape != (4, 8):
        raise ValidationError(
            f"matrix file shape invariant violated: expected 4 rows x 8 values, got {data.shape}"
        )
    return data[:, 0::2] + 1j * data[:, 1::2]


def _fmt(x: float) -> str:
    return repr(float(x))


def _jsonable(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit_envelope(command, config, payload, timing_started=None):
    envelope = {
        "command": command,
        "config": _jsonable(config),
        "payload": _jsonable(payload),
        "version": __version__,
    }
    if timing_started is not None:
        envelope["elapsed_seconds"] = time.perf_counter() - timing_started
    print(json.dumps(envelope, sort_keys=True, indent=2))


def _default_workers() -> int:
    return int(os.environ.get(WORKERS_ENV, "1"))


def _rho_from_args(args) -> tuple:
    """Build (rho, theta, alphas) from --alpha/--theta flags."""
    alphas = parse_angle_list(args.alpha, (12, 15))
    thetas = parse_angle_list(args.theta, (3,))
    if len(alphas) == 15:
        u = compose_su4(alphas)
        rho = u @ rho_diagonal(thetas) @ u.conj().T
    else:
        rho = rho_full(alphas, thetas)
    return rho, thetas, alphas


def cmd_basis(args) -> int:
    if args.structure:
        f = structure_constants()
        for i in range(1, 16):
            for j in range(1, 16):
                for k in range(1, 16):
                    val = f[i - 1, j - 1, k - 1]
                    if abs(val) > 1e-13:
                        print(f"f({i},{j},{k}) = {val:.17g}")
        return 0
    indices = [args.index] if args.index is not None else list(range(1, 16))
    for idx in indices:
        lam = gell_mann(idx)
        print(f"lambda_{idx}:")
        for row in lam:
            print("  " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))
    return 0


def cmd_volume(args) -> int:
    started = time.perf_counter() if args.timing else None
    method = {"quad": "quadrature", "mc": "monte_carlo"}[args.method]
    resolution = args.nodes if method == "quadrature" else int(float(args.samples))
    workers = args.workers if args.workers is not None else _default_workers()
    result = group_volume(args.group, method, resolution, seed=args.seed,
                          workers=workers)
    target = analytic_volume(args.group)
    payload = {
        "estimate": result.estimate,
        "analytic": target,
        "relative_error": abs(result.estimate - target) / target,
        "standard_error": result.standard_error,
        "normalization": result.normalization,
        "samples_or_nodes": result.samples_or_nodes,
        "method": result.method,
    }
    config = {"group": args.group, "method": args.method,
              "resolution": resolution, "seed": args.seed, "workers": workers}
    _emit_envelope("volume", config, payload, started)
    return 0


def cmd_check(args) -> int:
    started = time.perf_counter() if args.timing else None
    if args.matrix:
        rho = load_matrix_file(args.matrix)
        config = {"matrix": args.matrix, "tolerance": args.tolerance,
                  "subsystem": args.subsystem}
    else:
        if not (args.alpha and args.theta):
            print("check: provide --matrix FILE or both --alpha and --theta",
                  file=sys.stderr)
            return 2
        rho, _, _ = _rho_from_args(args)
        config = {"alpha": args.alpha, "theta": args.theta,
                  "tolerance": args.tolerance, "subsystem": args.subsystem}
    verdict = is_entangled(rho, args.tolerance, args.subsystem)
    payload = {
        "d": verdict.d_value,
        "min_eigenvalue": verdict.min_eigenvalue,
        "negative_count": verdict.negative_count,
        "verdict": "entangled" if verdict.entangled else "separable",
        "boundary": verdict.boundary,
    }
    _emit_envelope("check", config, payload, started)
    return 0


_SCAN_HEADER = (
    ["sample_index"]
    + [f"alpha{i}" for i in range(1, 13)]
    + ["theta1", "theta2", "theta3", "d", "min_eig", "neg_count", "verdict",
       "boundary"]
)


def _record_fields(rec) -> list:
    return ([str(rec.sample_index)]
            + [_fmt(a) for a in rec.alphas]
            + [_fmt(t) for t in rec.thetas]
            + [_fmt(rec.d), _fmt(rec.min_eig), str(rec.neg_count),
               "entangled" if rec.entangled else "separable",
               str(int(rec.boundary))])


def _summary(records) -> dict:
    entangled = sum(r.entangled for r in records)
    boundary = sum(r.boundary for r in records)
    return {
        "total": len(records),
        "entangled": entangled,
        "boundary": boundary,
        "separable": len(records) - entangled - boundary,
    }


def cmd_scan(args) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    if args.corners:
        records = corner_scan(args.tolerance)
        config = {"mode": "corners", "tolerance": args.tolerance}
    else:
        records = scan(args.samples, seed=args.seed, angle_profile=args.profile,
                       tolerance=args.tolerance, workers=workers)
        config = {"mode": "random", "samples": args.samples, "seed": args.seed,
                  "profile": args.profile, "tolerance": args.tolerance,
                  "workers": workers}
    summary = _summary(records)
    if args.format == "csv":
        lines = [",".join(_SCAN_HEADER)]
        lines.extend(",".join(_record_fields(r)) for r in records)
        lines.append("# summary separable={separable} entangled={entangled} "
                     "boundary={boundary} total={total}".format(**summary))
        text = "\n".join(lines) + "\n"
    else:
        body = {
            "command": "scan",
            "config": _jsonable(config),
            "records": [dict(zip(_SCAN_HEADER, _record_fields(r)))
                        for r in records],
            "summary": summary,
            "version": __version__,
        }
        text = json.dumps(body, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_rho(args) -> int:
    started = time.perf_counter() if args.timing else None
    rho, thetas, alphas = _rho_from_args(args)
    coeffs = bloch_coefficients(thetas)
    payload = {
        "rho": [[_jsonable(complex(z)) for z in row] for row in rho],
        "eigenvalues": np.linalg.eigvalsh(rho),
        "spectrum": spectrum_diagonal(thetas),
        "bloch": {"w0": coeffs.w0, "w3": coeffs.w3, "w8": coeffs.w8,
                  "w15": coeffs.w15},
    }
    config = {"alpha": args.alpha, "theta": args.theta}
    _emit_envelope("rho", config, payload, started)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su4euler",
        description="SU(4) Euler angles: basis inspection, group volumes, "
                    "density matrices, and partial-transpose checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="print generators or structure constants")
    p_basis.add_argument("--index", type=int, default=None,
                         help="generator index 1..15 (default: all)")
    p_basis.add_argument("--structure", action="store_true",
                         help="print the nonzero structure constants instead")
    p_basis.set_defaults(func=cmd_basis)

    p_vol = sub.add_parser("volume", help="group volume by quadrature or Monte Carlo")
    p_vol.add_argument("--group", choices=["su2", "su3", "su4"], required=True)
    p_vol.add_argument("--method", choices=["quad", "mc"], default="quad")
    p_vol.add_argument("--nodes", type=int, default=64,
                       help="quadrature nodes per nontrivial axis")
    p_vol.add_argument("--samples", default="100000",
                       help="Monte Carlo sample count (accepts 1e6 style)")
    p_vol.add_argument("--seed", type=int, default=0)
    p_vol.add_argument("--workers", type=int, default=None,
                       help=f"Monte Carlo sub-streams (default ${WORKERS_ENV} or 1)")
    p_vol.add_argument("--timing", action="store_true",
                       help="include elapsed time (breaks byte-identical output)")
    p_vol.set_defaults(func=cmd_volume)

    p_check = sub.add_parser("check", help="separability verdict for one state")
    p_check.add_argument("--alpha", help="12 or 15 comma-separated angles")
    p_check.add_argument("--theta", help="3 comma-separated spectrum angles")
    p_check.add_argument("--matrix", help="path to a 4x8 re/im matrix file")
    p_check.add_argument("--tolerance", type=float, default=1e-10)
    p_check.add_argument("--subsystem", choices=["A", "B"], default="B")
    p_check.add_argument("--timing", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_scan = sub.add_parser("scan", help="bulk classification scan")
    p_scan.add_argument("--samples", type=int, default=1000)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--tolerance", type=float, default=1e-10)
    p_scan.add_argument("--profile", choices=["volume", "covering"],
                        default="volume")
    p_scan.add_argument("--corners", action="store_true",
                        help="exhaustive 2^15 min/max corner scan")
    p_scan.add_argument("--format", choices=["csv", "json"], default="csv")
    p_scan.add_argument("--output", default=None,
                        help="output path (default: stdout)")
    p_scan.add_argument("--workers", type=int, default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_rho = sub.add_parser("rho", help="print a density matrix and its spectrum")
    p_rho.add_argument("--alpha", required=True)
    p_rho.add_argument("--theta", required=True)
    p_rho.add_argument("--timing", action="store_true")
    p_rho.set_defaults(func=cmd_rho)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"su4euler: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"su4euler: internal consistency error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"su4euler: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"su4euler: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
