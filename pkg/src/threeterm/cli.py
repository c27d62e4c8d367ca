"""Command-line front end.

Subcommands: measure, rescale, plucker minors, plucker reconstruct, render,
crossratio.  Input documents are JSON; complex numbers are written as
[re, im] pairs.  Exit codes: 0 success, 1 relation failure beyond tolerance,
2 unparseable document, 3 invalid configuration or degenerate values,
4 quadric/orbit failure (off-quadric input, cross-ratio mismatch).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import GeometryError, NotSameOrbitError, OffQuadricError
from .grassmann import Matrix2x4, minors, reconstruct
from .horocycles import Horocycle, horocycle_to_circle
from .measurements import (
    ConcyclicConfig,
    bitangent_direct,
    lambda_minkowski,
    measure_all,
)
from .models import LightConePoint, MinkowskiVec, lightcone_to_boundary
from .relations import (
    PAIRS,
    SixTuple,
    cross_ratio_points,
    relative_residual,
    rescaling_solve,
    residual,
)
from .svg import render_svg

DEFAULT_TOL = 1e-10

EXIT_OK = 0
EXIT_RELATION_FAILURE = 1
EXIT_PARSE = 2
EXIT_INVALID_CONFIG = 3
EXIT_ORBIT = 4


class DocumentError(ValueError):
    """Unparseable or schema-violating input document (exit code 2)."""


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from exc


def _scalar(obj, what: str):
    """A JSON scalar: a number, or [re, im] for a complex value."""
    if isinstance(obj, bool):
        raise DocumentError(f"{what}: expected a number, got {obj!r}")
    if isinstance(obj, (int, float)):
        return float(obj)
    if (
        isinstance(obj, list)
        and len(obj) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj)
    ):
        return complex(float(obj[0]), float(obj[1]))
    raise DocumentError(f"{what}: expected a number or [re, im], got {obj!r}")


def _real(obj, what: str) -> float:
    value = _scalar(obj, what)
    if isinstance(value, complex):
        raise DocumentError(f"{what}: expected a real number, got {obj!r}")
    return value


def _json_scalar(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _parse_sixtuple(doc, path: str) -> SixTuple:
    if not isinstance(doc, list) or len(doc) != 6:
        raise DocumentError(
            f"{path}: expected a JSON array of 6 scalars in index order 12,13,14,23,24,34"
        )
    return SixTuple.from_values(_scalar(v, f"{path} entry {k}") for k, v in enumerate(doc))


def _parse_matrix(payload, path: str) -> Matrix2x4:
    if not isinstance(payload, dict) or "rows" not in payload:
        raise DocumentError(f"{path}: matrix payload needs a 'rows' field")
    rows = payload["rows"]
    if not (isinstance(rows, list) and len(rows) == 2
            and all(isinstance(r, list) and len(r) == 4 for r in rows)):
        raise DocumentError(f"{path}: 'rows' must be two lists of four entries")
    field = payload.get("field", "real")
    if field not in ("real", "complex"):
        raise DocumentError(f"{path}: field must be 'real' or 'complex', got {field!r}")
    entries = [[_scalar(v, f"{path} matrix entry") for v in row] for row in rows]
    if field == "real":
        for row in entries:
            for v in row:
                if isinstance(v, complex):
                    raise DocumentError(f"{path}: complex entry in a real matrix")
    return Matrix2x4(entries)


def _parse_config(doc, path: str, kinds=("concyclic", "lightcone", "matrix")):
    if not isinstance(doc, dict):
        raise DocumentError(f"{path}: expected a JSON object with one payload")
    present = [k for k in ("concyclic", "lightcone", "matrix") if k in doc]
    if len(present) != 1:
        raise DocumentError(
            f"{path}: exactly one of concyclic/lightcone/matrix required, got {present}"
        )
    kind = present[0]
    if kind not in kinds:
        raise DocumentError(f"{path}: payload {kind!r} not accepted by this command")
    payload = doc[kind]
    if kind == "matrix":
        return _parse_matrix(payload, path)
    if kind == "concyclic":
        if not isinstance(payload, dict) or set(payload) != {"alpha", "radii"}:
            raise DocumentError(f"{path}: concyclic payload needs 'alpha' and 'radii'")
        alpha = payload["alpha"]
        radii = payload["radii"]
        if not (isinstance(alpha, list) and len(alpha) == 4
                and isinstance(radii, list) and len(radii) == 4):
            raise DocumentError(f"{path}: alpha and radii must be arrays of 4 numbers")
        return ConcyclicConfig(
            tuple(_real(v, f"{path} alpha") for v in alpha),
            tuple(_real(v, f"{path} radius") for v in radii),
        )
    # lightcone: four (x, y, z) vectors; tangency angle and Euclidean radius
    # are read off each light-cone point.
    if not isinstance(payload, dict) or "u" not in payload:
        raise DocumentError(f"{path}: lightcone payload needs a 'u' field")
    vectors = payload["u"]
    if not (isinstance(vectors, list) and len(vectors) == 4
            and all(isinstance(v, list) and len(v) == 3 for v in vectors)):
        raise DocumentError(f"{path}: 'u' must be four [x, y, z] vectors")
    alphas, radii = [], []
    for vec in vectors:
        point = LightConePoint(MinkowskiVec(*(_real(v, f"{path} u component") for v in vec)))
        alphas.append(lightcone_to_boundary(point).theta / 2.0)
        radii.append(horocycle_to_circle(Horocycle(point)).radius)
    # A tangency at boundary angle 0 in last position is the wrap of 2*pi.
    if alphas[3] == 0.0:
        alphas[3] = math.pi
    return ConcyclicConfig(tuple(alphas), tuple(radii))


def build_report(cfg: ConcyclicConfig, tol: float) -> dict:
    """Measurements, relation residuals, and rescaling-identity deviations.

    Residuals are relative to the largest quadric monomial; identity
    deviations are entrywise relative, each family checked against an
    independent computation path (direct bitangent oracle, light-cone
    lambda, determinant vs chord).
    """
    table = measure_all(cfg)
    families = {"d": table.d, "t": table.t, "lambda": table.lam, "P": table.p}
    residuals = {name: relative_residual(t) for name, t in families.items()}

    def rel_dev(lhs: float, rhs: float) -> float:
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)

    dev_chord_bitangent = 0.0
    dev_bitangent_lambda = 0.0
    dev_chord_plucker = 0.0
    for idx, (i, j) in enumerate(PAIRS):
        t_ij = table.t.values()[idx]
        dev_chord_bitangent = max(
            dev_chord_bitangent, rel_dev(t_ij, bitangent_direct(cfg, i, j))
        )
        lam_pairing = lambda_minkowski(cfg, i, j)
        scale = math.sqrt(2.0 * cfg.r[i - 1]) * math.sqrt(2.0 * cfg.r[j - 1])
        dev_bitangent_lambda = max(
            dev_bitangent_lambda, rel_dev(t_ij, lam_pairing * scale)
        )
        dev_chord_plucker = max(
            dev_chord_plucker,
            rel_dev(table.d.values()[idx], 2.0 * table.p.values()[idx]),
        )
    identities = {
        "chord_bitangent": dev_chord_bitangent,
        "bitangent_lambda": dev_bitangent_lambda,
        "chord_plucker": dev_chord_plucker,
    }
    passed = {name: value <= tol for name, value in residuals.items()}
    passed.update({name: value <= tol for name, value in identities.items()})
    return {
        "config": {"alpha": list(cfg.alpha), "radii": list(cfg.r)},
        "tolerance": tol,
        "measurements": {name: list(t.values()) for name, t in families.items()},
        "residuals": residuals,
        "identities": identities,
        "pass": passed,
    }


def _print_measure_table(report: dict) -> None:
    print(f"tolerance: {report['tolerance']:g}")
    print("pair:      " + "  ".join(f"{i}{j}".rjust(12) for i, j in PAIRS))
    for name in ("d", "t", "lambda", "P"):
        row = "  ".join(f"{v:12.9f}" for v in report["measurements"][name])
        print(f"{name:>7}:   {row}")
    print("relation residuals (relative):")
    for name in ("d", "t", "lambda", "P"):
        flag = "pass" if report["pass"][name] else "FAIL"
        print(f"  {name:>7}: {report['residuals'][name]:.3e}  [{flag}]")
    print("rescaling identities (max entrywise deviation):")
    for name in ("chord_bitangent", "bitangent_lambda", "chord_plucker"):
        flag = "pass" if report["pass"][name] else "FAIL"
        print(f"  {name}: {report['identities'][name]:.3e}  [{flag}]")


def cmd_measure(args) -> int:
    cfg = _parse_config(_load_json(args.config), args.config, kinds=("concyclic", "lightcone"))
    report = build_report(cfg, args.tol)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_measure_table(report)
    return EXIT_OK if all(report["pass"].values()) else EXIT_RELATION_FAILURE


def cmd_rescale(args) -> int:
    a = _parse_sixtuple(_load_json(args.file_a), args.file_a)
    b = _parse_sixtuple(_load_json(args.file_b), args.file_b)
    q = rescaling_solve(a, b, tol=args.tol)
    qs = (None,) + q.values()
    verification = {}
    for (i, j), av, bv in zip(PAIRS, a.values(), b.values()):
        product = qs[i] * qs[j]
        ratio = bv / av
        verification[f"{i}{j}"] = {
            "q_i_q_j": _json_scalar(product),
            "c_ij": _json_scalar(ratio),
            "deviation": abs(product - ratio),
        }
    if args.json:
        print(json.dumps(
            {"q": [_json_scalar(v) for v in q.values()], "verification": verification},
            indent=2, sort_keys=True,
        ))
    else:
        for k, value in enumerate(q.values(), start=1):
            print(f"q{k} = {value}")
        print("pair   q_i*q_j              c_ij                 |deviation|")
        for key, row in verification.items():
            print(f"{key:>4}   {row['q_i_q_j']!s:<20} {row['c_ij']!s:<20} {row['deviation']:.3e}")
    return EXIT_OK


def cmd_plucker_minors(args) -> int:
    matrix = _parse_config(_load_json(args.file), args.file, kinds=("matrix",))
    p = minors(matrix)
    doc = {
        "minors": [_json_scalar(v) for v in p.values()],
        "residual": _json_scalar(residual(p)),
        "relative_residual": relative_residual(p),
    }
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("minors (12,13,14,23,24,34):", doc["minors"])
        print("residual:", doc["residual"])
    return EXIT_OK


def cmd_plucker_reconstruct(args) -> int:
    p = _parse_sixtuple(_load_json(args.file), args.file)
    matrix = reconstruct(p, tol=args.tol)
    rows = [[_json_scalar(v) for v in row] for row in matrix.rows.tolist()]
    check = minors(matrix)
    doc = {
        "rows": rows,
        "max_minor_deviation": max(
            abs(pv - cv) for pv, cv in zip(p.values(), check.values())
        ),
    }
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("rows:", rows)
        print("max minor deviation:", doc["max_minor_deviation"])
    return EXIT_OK


def cmd_render(args) -> int:
    cfg = _parse_config(_load_json(args.config), args.config, kinds=("concyclic", "lightcone"))
    document = render_svg(cfg)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(document)
    return EXIT_OK


def cmd_crossratio(args) -> int:
    doc = _load_json(args.file)
    if not (isinstance(doc, list) and len(doc) == 4
            and all(isinstance(p, list) and len(p) == 2 for p in doc)):
        raise DocumentError(f"{args.file}: expected four [x, y] projective points")
    points = [tuple(_scalar(v, f"{args.file} component") for v in p) for p in doc]
    value = cross_ratio_points(*points)
    if args.json:
        print(json.dumps({"cross_ratio": _json_scalar(value)}))
    else:
        print(value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threeterm",
        description="Measure, verify, and rescale the four incarnations of AB+CD=EF.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser("measure", help="measure a four-circle configuration")
    measure.add_argument("config", help="JSON config document (concyclic or lightcone)")
    measure.add_argument("--tol", type=float, default=DEFAULT_TOL)
    fmt = measure.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true")
    measure.set_defaults(func=cmd_measure)

    rescale = sub.add_parser("rescale", help="solve b_ij = q_i q_j a_ij for q")
    rescale.add_argument("file_a", help="six-tuple JSON array (order 12,13,14,23,24,34)")
    rescale.add_argument("file_b", help="six-tuple JSON array")
    rescale.add_argument("--tol", type=float, default=DEFAULT_TOL)
    rescale.add_argument("--json", action="store_true")
    rescale.set_defaults(func=cmd_rescale)

    plucker = sub.add_parser("plucker", help="minors of a matrix / matrix from minors")
    plucker_sub = plucker.add_subparsers(dest="plucker_command", required=True)
    pminors = plucker_sub.add_parser("minors")
    pminors.add_argument("file", help="matrix config document")
    pminors.add_argument("--json", action="store_true")
    pminors.set_defaults(func=cmd_plucker_minors)
    precon = plucker_sub.add_parser("reconstruct")
    precon.add_argument("file", help="six-tuple JSON array")
    precon.add_argument("--tol", type=float, default=DEFAULT_TOL)
    precon.add_argument("--json", action="store_true")
    precon.set_defaults(func=cmd_plucker_reconstruct)

    render = sub.add_parser("render", help="render a configuration to SVG")
    render.add_argument("config", help="JSON config document (concyclic or lightcone)")
    render.add_argument("--out", required=True, help="output SVG path")
    render.set_defaults(func=cmd_render)

    crossratio = sub.add_parser("crossratio", help="cross-ratio of four projective points")
    crossratio.add_argument("file", help="JSON array of four [x, y] points")
    crossratio.add_argument("--json", action="store_true")
    crossratio.set_defaults(func=cmd_crossratio)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotSameOrbitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.invariant_a is not None:
            print(
                f"invariants: {exc.invariant_a} vs {exc.invariant_b}", file=sys.stderr
            )
        return EXIT_ORBIT
    except OffQuadricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORBIT
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_CONFIG


if __name__ == "__main__":
    sys.exit(main())
