"""Command-line front end.

Subcommands:

    state to-bloch   JSON {"matrix": ...} -> full state document
    state from-bloch JSON {"bloch": ...}  -> full state document
    check            state JSON -> physicality / purity / rank report
    scan             section rasterization -> CSV
    mub              MUB family -> JSON
    unital           check | choi | vertices -> JSON
    sample           random states -> CSV
    density          closed-form ensemble densities -> JSON

JSON floats use the shortest round-trip form; CSV floats carry 17
significant digits.  Identical argv (including --seed) gives
byte-identical output.  Exit codes: 0 success, 2 invalid input,
1 internal error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import ensembles, gellmann, matcore, mub, positivity, sections, unital
from .bloch import (
    BlochParams,
    parse_state_document,
    purity,
    state_document,
)
from .errors import QutritBlochError

DEFAULT_SEED = 0xB10C

_SAMPLE_HEADER = (
    "seed,index,eig1,eig2,eig3,n1,n2,n3,n4,theta1,theta2,theta3,theta4,r,det,purity"
)


def _f(x: float) -> str:
    return format(float(x), ".17g")


def _read_json(path: str | None) -> dict:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise QutritBlochError("expected a JSON object")
    return doc


def _write_text(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit_json(doc: dict, path: str | None) -> None:
    _write_text(json.dumps(doc, indent=2) + "\n", path)


def _floats(text: str, expect: int | None = None, flag: str = "") -> tuple[float, ...]:
    try:
        vals = tuple(float(tok) for tok in text.split(","))
    except ValueError as exc:
        raise QutritBlochError(f"{flag}: expected comma-separated numbers: {exc}") from exc
    if expect is not None and len(vals) != expect:
        raise QutritBlochError(f"{flag}: expected {expect} numbers, got {len(vals)}")
    return vals


# --- subcommand bodies ----------------------------------------------------


def _cmd_state(args) -> int:
    doc = _read_json(args.input)
    if args.direction == "to-bloch" and "matrix" not in doc:
        raise QutritBlochError("state to-bloch needs a \"matrix\" entry")
    if args.direction == "from-bloch" and "bloch" not in doc:
        raise QutritBlochError("state from-bloch needs a \"bloch\" entry")
    p = parse_state_document(doc, tol=args.tol)
    _emit_json(state_document(p), args.output)
    return 0


def _cmd_check(args) -> int:
    p = parse_state_document(_read_json(args.input), tol=args.tol)
    report = {
        "physical": positivity.is_physical(p, tol=args.tol),
        "purity": purity(p),
        "r": p.radius,
        "char_coeffs": {
            "a2": (1.0 - purity(p)) / 2.0,
            "a3": positivity.a3_closed_form(p),
        },
        "rank": None,
        "region": None,
        "rank_consistent": None,
    }
    if report["physical"]:
        rr = positivity.rank_classify(p, tol=args.tol)
        report.update(rank=rr.rank, region=rr.region, rank_consistent=rr.consistent)
    _emit_json(report, args.output)
    return 0


def _cmd_scan(args) -> int:
    axes = tuple(int(a) for a in args.axes.split(","))
    theta_values = _floats(args.theta, flag="--theta") if args.theta else ()
    spec = sections.SectionSpec(
        kind=args.kind,
        axes=axes,
        resolution=args.resolution,
        theta_policy=args.theta_policy,
        theta_values=theta_values,
        grid_steps=args.grid_steps,
        refine=not args.no_refine,
    )
    header, rows = sections.scan(spec)
    buf = io.StringIO()
    sections.write_csv(header, rows, buf)
    _write_text(buf.getvalue(), args.output)
    return 0


def _cmd_mub(args) -> int:
    fam = mub.four_mubs(args.delta, args.gamma)
    _emit_json(mub.family_document(fam), args.output)
    return 0


def _cmd_unital(args) -> int:
    if args.action == "vertices":
        _emit_json(
            {
                "vertices": [list(v) for v in unital.polytope_vertices()],
                "edge_lengths": list(unital.edge_lengths()),
            },
            args.output,
        )
        return 0
    lam = _floats(args.lam, 4, "--lam")
    phi = _floats(args.phi, 4, "--phi") if args.phi else (0.0, 0.0, 0.0, 0.0)
    m = unital.UnitalMap(lam, phi)
    if args.action == "choi":
        c = unital.choi_matrix(m)
        _emit_json(
            {
                "lambda": list(lam),
                "phi": list(phi),
                "choi": [[[v.real, v.imag] for v in row] for row in c],
                "eigenvalues": [float(x) for x in matcore.herm_eigvals(c, tol=1e-8)],
            },
            args.output,
        )
        return 0
    eigs = matcore.herm_eigvals(unital.choi_matrix(m), tol=1e-8)
    report = {
        "lambda": list(lam),
        "phi": list(phi),
        "cp": unital.is_cp(m, tol=args.tol),
        "min_choi_eigenvalue": float(eigs[0]),
        "polytope": None,
        "slacks": None,
    }
    if all(v == 0.0 for v in phi):
        ok, slacks = unital.polytope_check(lam)
        report.update(polytope=ok, slacks=list(slacks))
    _emit_json(report, args.output)
    return 0


def _cmd_sample(args) -> int:
    if args.count < 1:
        raise QutritBlochError("--count must be at least 1")
    samples = ensembles.sample_batch(args.ensemble, args.count, args.seed)
    lines = [_SAMPLE_HEADER]
    for idx, s in enumerate(samples):
        cells = (
            [str(args.seed), str(idx)]
            + [_f(v) for v in s.eigs]
            + [_f(v) for v in s.bloch.n]
            + [_f(v) for v in s.bloch.theta]
            + [_f(s.r), _f(s.det), _f(s.purity)]
        )
        lines.append(",".join(cells))
    _write_text("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_density(args) -> int:
    which = args.which
    need = 1 if which.startswith("qubit") else 8
    at = _floats(args.at, need, "--at")
    if which == "hs":
        value = ensembles.hs_density_bloch(at[0], at[1:4], at[4:8])
    elif which == "bures":
        value = ensembles.bures_density_bloch(at[0], at[1:4], at[4:8], signed=args.signed)
    elif which == "hs-gm":
        value = gellmann.hs_density_gm(at)
    elif which == "bures-gm":
        value = gellmann.bures_density_gm(at, signed=args.signed)
    elif which == "qubit-hs":
        value = ensembles.qubit_hs_density(at[0])
    else:  # qubit-bures
        value = ensembles.qubit_bures_density(at[0])
    _emit_json({"which": which, "at": list(at), "value": value}, args.output)
    return 0


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qutrit-bloch",
        description="Four-dimensional Bloch-sphere toolkit for qutrits",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("--in", dest="input", default=None, help="input JSON path (default stdin)")
        p.add_argument("--out", dest="output", default=None, help="output path (default stdout)")

    p_state = sub.add_parser("state", help="convert between matrix and chart forms")
    p_state.add_argument("direction", choices=("to-bloch", "from-bloch"))
    p_state.add_argument("--tol", type=float, default=1e-10)
    io_flags(p_state)
    p_state.set_defaults(func=_cmd_state)

    p_check = sub.add_parser("check", help="physicality, purity, and rank report")
    p_check.add_argument("--tol", type=float, default=1e-10)
    io_flags(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_scan = sub.add_parser("scan", help="rasterize a section to CSV")
    p_scan.add_argument("--kind", choices=("one", "two", "three"), required=True)
    p_scan.add_argument("--axes", required=True, help="comma-separated axes from 1..4")
    p_scan.add_argument("--resolution", type=int, default=101)
    p_scan.add_argument("--theta-policy", choices=("grid", "fixed", "maximize"),
                        default="maximize")
    p_scan.add_argument("--theta", default=None, help="angles for --theta-policy fixed")
    p_scan.add_argument("--grid-steps", type=int, default=48)
    p_scan.add_argument("--no-refine", action="store_true")
    p_scan.add_argument("--threads", type=int, default=1,
                        help="worker hint; output is order-stable regardless")
    io_flags(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_mub = sub.add_parser("mub", help="build the four MUBs at (delta, gamma)")
    p_mub.add_argument("--delta", type=float, required=True)
    p_mub.add_argument("--gamma", type=float, required=True)
    io_flags(p_mub)
    p_mub.set_defaults(func=_cmd_mub)

    p_unital = sub.add_parser("unital", help="unital channel tests")
    p_unital.add_argument("action", choices=("check", "choi", "vertices"))
    p_unital.add_argument("--lam", default=None, help="four comma-separated moduli")
    p_unital.add_argument("--phi", default=None, help="four comma-separated phases")
    p_unital.add_argument("--tol", type=float, default=1e-9)
    io_flags(p_unital)
    p_unital.set_defaults(func=_cmd_unital)

    p_sample = sub.add_parser("sample", help="draw random states to CSV")
    p_sample.add_argument("--ensemble", choices=ensembles.MEASURES, required=True)
    p_sample.add_argument("--count", type=int, default=1)
    p_sample.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_sample.add_argument("--threads", type=int, default=1,
                          help="worker hint; output is order-stable regardless")
    io_flags(p_sample)
    p_sample.set_defaults(func=_cmd_sample)

    p_density = sub.add_parser("density", help="evaluate a closed-form density")
    p_density.add_argument(
        "--which",
        choices=("hs", "bures", "hs-gm", "bures-gm", "qubit-hs", "qubit-bures"),
        required=True,
    )
    p_density.add_argument(
        "--at",
        required=True,
        help="r,zeta1..3,theta1..4 | g1..g8 | r, per --which",
    )
    p_density.add_argument("--signed", action="store_true",
                           help="signed diagnostic outside the Bures domain")
    io_flags(p_density)
    p_density.set_defaults(func=_cmd_density)
    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors itself
        return int(exc.code or 0)
    try:
        if args.command == "unital" and args.action != "vertices" and not args.lam:
            raise QutritBlochError("unital check/choi needs --lam")
        return args.func(args)
    except (QutritBlochError, json.JSONDecodeError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
