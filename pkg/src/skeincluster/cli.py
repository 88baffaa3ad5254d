"""Command line interface.

Every subcommand writes JSON lines to standard output.  Exit status is 0 on
success (or when the checked identity holds), 1 when an identity or check
fails, and 2 on usage or contract errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from skeincluster import cpg, qdilog, skein
from skeincluster.calibration import dumps_calibration, load_calibration, run_calibration
from skeincluster.coeffs import LaurentSA, parse_monomial
from skeincluster.qtorus import ContractError, GradeFunctional, SkewLattice

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")
        _emit({"wrote": path})


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _parse_sign(text) -> int:
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1, "−": -1}
    key = str(text).strip()
    if key not in table:
        raise UsageError(f"sign must be + or -, got {text!r}")
    return table[key]


def _parse_steps(obj) -> List[cpg.MutationStep]:
    if isinstance(obj, dict):
        obj = obj.get("steps", [])
    steps = []
    for item in obj:
        if isinstance(item, dict):
            edge, sign = item["edge"], item["sign"]
        else:
            edge, sign = item
        steps.append(cpg.MutationStep(int(edge), _parse_sign(sign)))
    return steps


def _parse_vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad lattice vector {text!r}") from exc


def _gamma(text: str) -> LaurentSA:
    try:
        g = parse_monomial(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not g.is_unit():
        raise UsageError(f"gamma must be a signed monomial, got {text!r}")
    return g


def _identity_result(name: str, degree: int, lhs, rhs) -> int:
    ok = lhs == rhs
    record = {"check": name, "degree": degree, "holds": ok}
    if not ok:
        record["lhs"] = lhs.to_json()
        record["rhs"] = rhs.to_json()
    _emit(record)
    return EXIT_OK if ok else EXIT_FAIL


# -- subcommands -----------------------------------------------------------------

def cmd_necklace(args) -> int:
    if args.genus < 1:
        raise UsageError("genus must be at least 1")
    G = cpg.necklace(args.genus)
    _write(args.out, G.dumps())
    return EXIT_OK


def cmd_mutate(args) -> int:
    G = cpg.LabeledGraph.from_json(_read_json(args.graph))
    H = G.flip(cpg.MutationStep(args.edge, _parse_sign(args.sign)))
    _emit({"edge": args.edge, "old": cpg.format_class(G.label(args.edge)),
           "new": cpg.format_class(H.label(args.edge))})
    _write(args.out, H.dumps())
    return EXIT_OK


def cmd_admissible(args) -> int:
    if args.genus < 1:
        raise UsageError("genus must be at least 1")
    ok, report = cpg.admissible_check(args.genus, _parse_steps(_read_json(args.steps)))
    for row in report:
        _emit(row)
    _emit({"admissible": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_composable(args) -> int:
    if args.graph:
        G = cpg.LabeledGraph.from_json(_read_json(args.graph))
    else:
        G = cpg.necklace(args.genus)
    if args.weights:
        weights = GradeFunctional(tuple(int(x) for x in _read_json(args.weights)))
    else:
        weights = cpg.standard_weights(G.genus)
    if len(weights.weights) != 2 * G.genus:
        raise UsageError(f"expected {2 * G.genus} weights")
    ok, report = cpg.composable_check(G, _parse_steps(_read_json(args.steps)), weights)
    for row in report:
        _emit(row)
    _emit({"composable": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dilog(args) -> int:
    v = _parse_vector(args.vector)
    lattice = SkewLattice(len(v), tuple(tuple(0 for _ in v) for _ in v)) if len(v) != 2 else SkewLattice.standard()
    weights = GradeFunctional((1,) * len(v))
    scale = _gamma(args.scale) if args.scale else 1
    E = qdilog.dilog_qt(v, lattice, weights, args.degree, scale)
    _emit({"dilog": E.to_json(), "text": str(E)})
    return EXIT_OK


def cmd_pentagon(args) -> int:
    lhs, rhs = qdilog.pentagon_sides(args.degree, args.pairing)
    return _identity_result("pentagon", args.degree, lhs, rhs)


def cmd_five_term(args) -> int:
    paths = cpg.five_term_paths()
    _emit({"paths": paths.to_json()})
    lhs, rhs = cpg.five_term_sides(args.degree, paths=paths)
    return _identity_result("five-term", args.degree, lhs, rhs)


def cmd_wavefunction(args) -> int:
    data = _read_json(args.classes)
    if isinstance(data, list):
        data = {"classes": data}
    classes = data.get("classes", [])
    if "genus" in data:
        g = int(data["genus"])
        lattice = cpg.intersection_form(g)
        rank = 2 * g
    else:
        rank = len(classes[0]) if classes and not isinstance(classes[0], str) else 2
        if rank != 2:
            raise UsageError("give a genus for classes outside the rank-2 torus")
        lattice = SkewLattice.standard()
        g = None
    vecs = []
    for c in classes:
        if isinstance(c, str):
            if g is None:
                raise UsageError("named classes need a genus")
            vecs.append(cpg.parse_class(c, g))
        else:
            vecs.append(tuple(int(x) for x in c))
    weights = GradeFunctional(tuple(data.get("weights", (1,) * rank)))
    scales = [_gamma(s) if isinstance(s, str) else s for s in data.get("scales", [1] * len(vecs))]
    W = qdilog.wavefunction(vecs, scales, lattice, weights, args.degree)
    _emit({"wavefunction": W.to_json(), "text": str(W)})
    return EXIT_OK


def cmd_skein_e(args) -> int:
    params = load_calibration().skein
    E = skein.solve_E(_gamma(args.gamma), args.degree, params)
    _write(args.out, E.dumps())
    return EXIT_OK


def cmd_calibrate(args) -> int:
    text = dumps_calibration(run_calibration())
    if args.check:
        from importlib import resources

        frozen = resources.files("skeincluster.data").joinpath("calibration.json").read_text()
        same = frozen == text
        _emit({"calibration_matches_frozen": same})
        return EXIT_OK if same else EXIT_FAIL
    _write(args.out, text)
    return EXIT_OK


def cmd_gz_check(args) -> int:
    ok = skein.gz_nonvanishing(args.bound)
    _emit({"bound": args.bound, "nonvanishing": ok})
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ----------------------------------------------------------------------

def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeincluster", description="Exact skein-valued cluster computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("necklace", help="write the genus-g necklace graph")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_necklace)

    p = sub.add_parser("mutate", help="flip one edge of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--sign", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("admissible", help="check a mutation sequence from the necklace")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--steps", required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("composable", help="check positivity of used classes under a grading")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--genus", type=int)
    p.add_argument("--steps", required=True)
    p.add_argument("--weights")
    p.set_defaults(func=cmd_composable)

    p = sub.add_parser("dilog", help="expand E_q(scale e_v)")
    p.add_argument("--vector", required=True, help="comma separated lattice vector")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--scale")
    p.set_defaults(func=cmd_dilog)

    p = sub.add_parser("pentagon", help="verify the pentagon identity")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--pairing", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=cmd_pentagon)

    p = sub.add_parser("five-term", help="verify the genus-2 five-term identity")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_five_term)

    p = sub.add_parser("wavefunction", help="ordered product of dilogarithms")
    p.add_argument("--classes", required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("skein-e", help="solve for the skein dilogarithm")
    p.add_argument("--gamma", required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_skein_e)

    p = sub.add_parser("calibrate", help="rerun the convention searches")
    p.add_argument("--out")
    p.add_argument("--check", action="store_true", help="compare with the packaged calibration")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("gz-check", help="nonvanishing of the eigenvalues c_{lambda,mu}")
    p.add_argument("--bound", type=_nonneg, required=True)
    p.set_defaults(func=cmd_gz_check)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, cpg.GraphError, ContractError, skein.CalibrationError,
            ValueError, KeyError, ZeroDivisionError) as exc:
        print(json.dumps({"error": str(exc), "type": type(exc).__name__}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
