"""Command-line interface.

Every command prints ``key: value`` lines (or one JSON object with
``--json``).  Exit codes: 0 success, 1 bad input, 2 the requested
structure does not apply, 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import oracle
from .altcentro import alternating_exchange_matrix
from .errors import (
    FieldError,
    GraphError,
    NotSumOfTwoSquaresError,
    ParseError,
    PseudoCentroError,
    StructureError,
)
from .fields import Fp
from .lattice import (
    build_kasteleyn,
    check_two_even_symmetric,
    count_matchings,
    matching_certificate,
    parse_graph,
    symmetric_labeling,
)
from .matrix import Matrix, block_matrix, parse_matrix, zeros
from .regions import (
    aztec_diamond,
    aztec_pillow,
    count_tilings,
    dual_graph,
    format_region,
    generalized_pillow,
    is_rotationally_symmetric,
    parse_region,
    tiling_certificate,
)
from .structure import (
    AntiInvolution,
    CommutationKind,
    classify_commutation,
    integral_certificate,
    sos_certificate_general,
)
from .twosquares import all_two_squares

EXIT_OK, EXIT_INPUT, EXIT_NOT_APPLICABLE, EXIT_MISMATCH = 0, 1, 2, 3


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _plain(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, Fp):
        return value.value
    return value


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps({k: _plain(v) for k, v in report.items()}) + "\n")
        return
    for key, value in report.items():
        value = _plain(value)
        if isinstance(value, bool):
            value = "true" if value else "false"
        out.write(f"{key}: {value}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CommandFailed(EXIT_INPUT, f"cannot read {path}: {e.strerror}") from None


def load_k(spec: str, field) -> AntiInvolution:
    """``alt:<2k>``, ``simple:<K2 matrix file>`` or ``full:<K matrix file>``."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise CommandFailed(EXIT_INPUT, f"bad K spec {spec!r}; use alt:<2k>, simple:<file> or full:<file>")
    try:
        if kind == "alt":
            order = int(arg)
            if order <= 0 or order % 2:
                raise CommandFailed(EXIT_INPUT, f"alt:{arg}: order must be even and positive")
            K = alternating_exchange_matrix(order, field)
        elif kind == "simple":
            K2 = parse_matrix(_read(arg)).to_field(field)
            z = zeros(K2.rows, field=field)
            K = block_matrix([[z, K2], [-K2.inverse(), z]])
        elif kind == "full":
            K = parse_matrix(_read(arg)).to_field(field)
        else:
            raise CommandFailed(EXIT_INPUT, f"unknown K spec kind {kind!r}")
        return AntiInvolution(K)
    except ValueError as e:
        raise CommandFailed(EXIT_INPUT, f"K spec {spec}: {e}") from None


def _certificate_line(cert, A: Matrix) -> str:
    if A.is_integral() and cert.x.denominator == 1 and cert.y.denominator == 1:
        x, y = sorted((abs(cert.x.numerator), abs(cert.y.numerator)), reverse=True)
        return f"{abs(cert.determinant.numerator)} = {x}^2 + {y}^2"
    sign = "" if cert.sign == 1 else "-"
    return f"{A.field.format(cert.determinant)} = {sign}(({cert.x})^2 + ({cert.y})^2)"


def cmd_analyze(args) -> tuple[dict, int]:
    A = parse_matrix(_read(args.matrix))
    if not A.is_square:
        raise CommandFailed(EXIT_INPUT, f"matrix is {A.rows}x{A.cols}, not square")
    K = load_k(args.k_spec, A.field)
    if K.order != A.rows:
        raise CommandFailed(EXIT_INPUT, f"K has order {K.order} but the matrix has order {A.rows}")
    kind = classify_commutation(A, K)
    det = A.det()
    report = {
        "field": A.field.name,
        "order": A.rows,
        "k_spec": args.k_spec,
        "classification": str(kind),
        "determinant": A.field.format(det),
    }
    code = EXIT_OK
    if args.verify_oracle:
        expected = oracle.det_cofactor(A.tolist())
        report["oracle_determinant"] = A.field.format(expected)
        report["oracle"] = "AGREE" if expected == det else "DISAGREE"
        if expected != det:
            code = EXIT_MISMATCH
    if kind is CommutationKind.NEITHER:
        report["certificate"] = "not applicable"
        return report, max(code, EXIT_NOT_APPLICABLE)
    if A.field.minus_one_is_square():
        report["certificate"] = f"not applicable: -1 is a square in {A.field.name}"
        return report, max(code, EXIT_NOT_APPLICABLE)
    cert = sos_certificate_general(A, K, kind)
    report.update({
        "x": cert.x,
        "y": cert.y,
        "sign": f"{cert.sign:+d}",
        "certificate": _certificate_line(cert, A),
    })
    return report, code


def cmd_certify(args) -> tuple[dict, int]:
    A = parse_matrix(_read(args.matrix))
    if not A.is_integral():
        raise CommandFailed(EXIT_INPUT, "certify needs an integer matrix over Q")
    K = load_k(args.k_spec, A.field)
    if K.order != A.rows:
        raise CommandFailed(EXIT_INPUT, f"K has order {K.order} but the matrix has order {A.rows}")
    kind = classify_commutation(A, K)
    if kind is CommutationKind.NEITHER:
        raise CommandFailed(EXIT_NOT_APPLICABLE, "matrix neither commutes nor anticommutes with K")
    ts = integral_certificate(A, K, kind)
    return {
        "classification": str(kind),
        "determinant": A.det(),
        "x": ts.x,
        "y": ts.y,
        "certificate": f"{ts.n} = {ts.x}^2 + {ts.y}^2",
    }, EXIT_OK


def cmd_sos(args) -> tuple[dict, int]:
    n = args.n
    if n < 0:
        raise CommandFailed(EXIT_INPUT, f"n must be nonnegative, got {n}")
    try:
        reps = all_two_squares(n)
    except NotSumOfTwoSquaresError as e:
        return {"n": n, "representable": False, "prime": e.prime, "exponent": e.exponent,
                "reason": str(e)}, EXIT_NOT_APPLICABLE
    report = {"n": n, "representable": True, "x": reps[0].x, "y": reps[0].y,
              "certificate": f"{n} = {reps[0].x}^2 + {reps[0].y}^2"}
    if args.all:
        report["all"] = "; ".join(f"{r.x}^2 + {r.y}^2" for r in reps)
    return report, EXIT_OK


def _steps(text: str | None):
    if text is None:
        return None
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise CommandFailed(EXIT_INPUT, f"bad step list {text!r}") from None


def _band(text: str | None):
    if text is None:
        return None
    rows = []
    for part in text.split(";"):
        y, sep, extent = part.partition(":")
        lo, dots, hi = extent.partition("..")
        try:
            if not sep or not dots:
                raise ValueError
            rows.append((int(y), int(lo), int(hi)))
        except ValueError:
            raise CommandFailed(EXIT_INPUT, f"bad band row {part!r}; use <y>:<xmin>..<xmax>[;...]") from None
    return rows


def cmd_region_gen(args, out) -> int:
    if args.shape == "aztec-diamond":
        R = aztec_diamond(args.n)
    elif args.shape == "aztec-pillow":
        R = aztec_pillow(args.n)
    else:
        left = _steps(args.steps) or []
        R = generalized_pillow(
            left,
            band=_band(args.band),
            right=_steps(args.right_steps),
            lower_left=_steps(args.lower_left_steps),
            lower_right=_steps(args.lower_right_steps),
        )
    out.write(format_region(R))
    return EXIT_OK


def cmd_region_check(args) -> tuple[dict, int]:
    R = parse_region(_read(args.region))
    sym = is_rotationally_symmetric(R)
    return {"cells": len(R), "rotationally_symmetric": sym}, EXIT_OK if sym else EXIT_NOT_APPLICABLE


def cmd_tile_count(args) -> tuple[dict, int]:
    R = parse_region(_read(args.region))
    count = count_tilings(R)
    report = {"cells": len(R), "count": count}
    code = EXIT_OK
    if args.certificate:
        if not is_rotationally_symmetric(R):
            raise CommandFailed(
                EXIT_NOT_APPLICABLE,
                "certificate needs a region symmetric under 180 degree rotation about the origin",
            )
        ts = tiling_certificate(R)
        report.update({"x": ts.x, "y": ts.y, "certificate": f"{ts.n} = {ts.x}^2 + {ts.y}^2"})
    if args.verify_oracle:
        G = dual_graph(R)
        expected = oracle.enumerate_matchings(G.vertices, G.edges)
        report["oracle_count"] = expected
        report["oracle"] = "AGREE" if expected == count else "DISAGREE"
        if expected != count:
            code = EXIT_MISMATCH
    return report, code


def cmd_match_count(args) -> tuple[dict, int]:
    G = parse_graph(_read(args.graph))
    count = count_matchings(G)
    report = {"vertices": len(G.vertices), "edges": len(G.edges), "count": count}
    code = EXIT_OK
    if args.verify_oracle:
        expected = oracle.enumerate_matchings(G.vertices, G.edges)
        report["oracle_count"] = expected
        report["oracle"] = "AGREE" if expected == count else "DISAGREE"
        if expected != count:
            code = EXIT_MISMATCH
    return report, code


def _fmt_labels(labels: dict) -> str:
    return " ".join(f"{lab}@({v[0]},{v[1]})" for v, lab in sorted(labels.items(), key=lambda t: t[1]))


def cmd_match_certify(args) -> tuple[dict, int]:
    G = parse_graph(_read(args.graph))
    if not _symmetric(G):
        raise CommandFailed(EXIT_NOT_APPLICABLE, "graph is not 2-even symmetric about the origin")
    ts = matching_certificate(G)
    L = symmetric_labeling(G)
    A = build_kasteleyn(G, L)
    report = {"count": ts.n, "x": ts.x, "y": ts.y, "certificate": f"{ts.n} = {ts.x}^2 + {ts.y}^2",
              "white_labels": _fmt_labels(L.white), "black_labels": _fmt_labels(L.black)}
    for i in range(A.rows):
        report[f"row_{i + 1}"] = " ".join(str(int(v)) for v in A.row(i))
    return report, EXIT_OK


def _symmetric(G) -> bool:
    try:
        return check_two_even_symmetric(G)
    except GraphError:
        return False


def cmd_match_check(args) -> tuple[dict, int]:
    G = parse_graph(_read(args.graph))
    connected = G.is_connected()
    sym = connected and check_two_even_symmetric(G)
    report = {"connected": connected, "two_even_symmetric": sym}
    return report, EXIT_OK if sym else EXIT_NOT_APPLICABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudocentro",
        description="Half-size determinants, sum-of-two-squares certificates and tiling counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        return p

    p = with_json(sub.add_parser("analyze", help="classify a matrix against K and certify its determinant"))
    p.add_argument("matrix")
    p.add_argument("k_spec", metavar="K-spec", help="alt:<2k> | simple:<K2 file> | full:<K file>")
    p.add_argument("--verify-oracle", action="store_true")
    p.set_defaults(handler=cmd_analyze)

    p = with_json(sub.add_parser("certify", help="integral x^2 + y^2 = |det A| certificate"))
    p.add_argument("matrix")
    p.add_argument("k_spec", metavar="K-spec")
    p.set_defaults(handler=cmd_certify)

    p = with_json(sub.add_parser("sos", help="write n as x^2 + y^2"))
    p.add_argument("n", type=int)
    p.add_argument("--all", action="store_true", help="list every representation")
    p.set_defaults(handler=cmd_sos)

    region = sub.add_parser("region", help="generate or inspect regions").add_subparsers(dest="action", required=True)
    gen = region.add_parser("gen", help="print a region in the row format")
    gen_sub = gen.add_subparsers(dest="shape", required=True)
    for shape in ("aztec-diamond", "aztec-pillow"):
        g = gen_sub.add_parser(shape)
        g.add_argument("n", type=int)
        g.set_defaults(region_gen=True)
    g = gen_sub.add_parser("pillow", help="generalized Aztec pillow")
    g.add_argument("--steps", required=True, help="NW step lengths outward from the band, e.g. 3,1,3")
    g.add_argument("--right-steps", help="NE step lengths (default all 1)")
    g.add_argument("--lower-left-steps", help="SW step lengths (default: NE steps)")
    g.add_argument("--lower-right-steps", help="SE step lengths (default: NW steps)")
    g.add_argument("--band", help="central band rows <y>:<xmin>..<xmax>[;...]")
    g.set_defaults(region_gen=True)
    p = with_json(region.add_parser("check-sym", help="test 180 degree rotational symmetry"))
    p.add_argument("region")
    p.set_defaults(handler=cmd_region_check)

    tile = sub.add_parser("tile", help="domino tilings of a region").add_subparsers(dest="action", required=True)
    p = with_json(tile.add_parser("count"))
    p.add_argument("region")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--verify-oracle", action="store_true")
    p.set_defaults(handler=cmd_tile_count)

    match = sub.add_parser("match", help="perfect matchings of lattice graphs").add_subparsers(dest="action", required=True)
    p = with_json(match.add_parser("count"))
    p.add_argument("graph")
    p.add_argument("--verify-oracle", action="store_true")
    p.set_defaults(handler=cmd_match_count)
    p = with_json(match.add_parser("certify"))
    p.add_argument("graph")
    p.set_defaults(handler=cmd_match_certify)
    p = with_json(match.add_parser("check-sym"))
    p.add_argument("graph")
    p.set_defaults(handler=cmd_match_check)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "region_gen", False):
            return cmd_region_gen(args, out)
        report, code = args.handler(args)
    except CommandFailed as e:
        err.write(f"error: {e}\n")
        return e.code
    except (ParseError, FieldError, StructureError, GraphError, ZeroDivisionError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except PseudoCentroError as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    _emit(report, getattr(args, "json", False), out)
    return code


if __name__ == "__main__":
    sys.exit(main())
