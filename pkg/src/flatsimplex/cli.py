"""Command-line front end.

Exit status: 0 success, 1 infeasible / no point / empty, 2 input error
(including an exceeded oracle budget), 3 internal invariant violation or a
``verify`` mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus, oracle
from . import linalg as la
from .cone_ip import solve as cone_ip_solve
from .cones import Cone
from .decomposition import check_bounds, decompose
from .errors import InputError, InvariantError
from .io import emit, fmt_number, parse, wrap
from .simplex_opt import PuncturedSimplexInstance, optimize_punctured
from .width import width, width_lattice_free

OK, NONE, INPUT, INVARIANT = 0, 1, 2, 3


class Mismatch(Exception):
    pass


def exact(x):
    """JSON-safe exact value: ints stay ints, other rationals become "p/q"."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else fmt_number(x)
    if isinstance(x, dict):
        return {k: exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact(v) for v in x]
    raise TypeError(f"not an exact value: {type(x).__name__}")


def _vec(v) -> str:
    return "(" + " ".join(fmt_number(x) for x in v) + ")"


def _load(path: str, *kinds):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
    inst = parse(text)
    if kinds and inst.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} instance, got {inst.kind}")
    return inst


# -- algorithm commands -----------------------------------------------------------

def do_decompose(inst, args):
    cone = inst.payload if inst.kind == "CONE" else inst.payload.shifted.cone
    dec = decompose(cone.matrix)
    check_bounds(dec)
    mx = max(p.max_coeff() for p in dec.pieces)
    rec = {"command": "decompose", "n": cone.dim, "delta": dec.delta, "steps": dec.steps,
           "piece_count": len(dec.pieces), "max_coeff": mx, "bounds_ok": True,
           "pieces": [{"gen": p.gen, "coeffs": p.coeffs, "depth": p.depth} for p in dec.pieces]}
    lines = [f"delta = {dec.delta}, steps = {dec.steps}, pieces = {len(dec.pieces)}, "
             f"max coefficient = {fmt_number(mx)}, bounds ok"]
    for k, p in enumerate(dec.pieces):
        lines.append(f"piece {k}: " + " ".join(_vec(g) for g in la.columns(p.gen)))
    return OK, rec, lines


def _width_record(res, lattice_free):
    return {"command": "width", "lattice_free": lattice_free, "width": res.width,
            "direction": res.direction, "pair": res.pair, "pair_indices": res.pair_indices}


def do_width(inst, args):
    fn = width_lattice_free if args.lattice_free else width
    res = fn(inst.payload)
    lines = [f"width = {fmt_number(res.width)}, direction = {_vec(res.direction)}",
             f"achieved between vertices {_vec(res.pair[0])} and {_vec(res.pair[1])}"]
    return OK, _width_record(res, args.lattice_free), lines


def do_cone_ip(inst, args):
    res = cone_ip_solve(inst.payload)
    rec = {"command": "cone-ip", "status": res.status, "point": res.point, "value": res.value}
    if not res.feasible:
        return NONE, rec, ["infeasible"]
    line = f"feasible, point = {_vec(res.point)}"
    if res.value is not None:
        line += f", value = {res.value}"
    return OK, rec, [line]


def _punctured_instance(inst):
    if inst.objective is None:
        raise InputError("opt-punctured needs an OBJ line")
    return PuncturedSimplexInstance(inst.payload, inst.objective)


def do_punctured(inst, args):
    res = optimize_punctured(_punctured_instance(inst))
    if res is None:
        return NONE, {"command": "opt-punctured", "point": None, "value": None}, ["none"]
    rec = {"command": "opt-punctured", "point": res.point, "value": res.value, "alpha": res.alpha}
    return OK, rec, [f"point = {_vec(res.point)}, value = {res.value}, alpha = {res.alpha}"]


# -- oracle commands --------------------------------------------------------------

def oracle_width(inst, args):
    S = inst.payload
    w, c = oracle.brute_width([list(r) for r in S.A], list(S.b), args.oracle_radius or 10)
    rec = {"command": "oracle width", "width": w, "direction": c,
           "radius": args.oracle_radius or 10}
    return OK, rec, [f"width = {fmt_number(w)}, direction = {_vec(c)} "
                     f"(directions with |c_i| <= {rec['radius']})"]


def oracle_cone_ip(inst, args):
    I = inst.payload
    radius = args.oracle_radius or 30
    feas, pt, val = oracle.brute_cone_ip(I.A, I.b, I.shifted.apex, I.shifted.cone.matrix,
                                         I.c, radius=radius, budget=args.budget)
    rec = {"command": "oracle cone-ip", "status": "feasible" if feas else "infeasible",
           "point": pt, "value": val, "radius": radius}
    if not feas:
        return NONE, rec, [f"infeasible within [-{radius}, {radius}]^n"]
    line = f"feasible, point = {_vec(pt)}" + ("" if val is None else f", value = {val}")
    return OK, rec, [line]


def oracle_punctured(inst, args):
    I = _punctured_instance(inst)
    best = oracle.brute_punctured(I.S.points(), I.c, args.budget)
    if best is None:
        return NONE, {"command": "oracle opt-punctured", "point": None, "value": None}, ["none"]
    rec = {"command": "oracle opt-punctured", "point": best[0], "value": best[1]}
    return OK, rec, [f"point = {_vec(best[0])}, value = {best[1]}"]


def oracle_points(inst, args):
    if inst.kind == "H":
        S = inst.payload
        pts = oracle.simplex_lattice_points([list(r) for r in S.A], list(S.b), args.budget)
    else:
        pts = oracle.enum_lattice_points(oracle.conv_halfspaces(inst.payload.points()),
                                         oracle.bounding_box(inst.payload.points()), args.budget)
    rec = {"command": "oracle points", "count": len(pts), "points": pts}
    lines = [f"{len(pts)} lattice points"] + [_vec(p) for p in pts]
    return (OK if pts else NONE), rec, lines


def oracle_decompose(inst, args):
    cone = inst.payload
    radius = args.oracle_radius or 10
    h = oracle.shifted_cone_halfspaces([0] * cone.dim, cone.matrix)
    pts = oracle.enum_lattice_points(h, oracle.Box.cube(cone.dim, radius), args.budget)
    rec = {"command": "oracle decompose", "radius": radius, "count": len(pts)}
    return OK, rec, [f"{len(pts)} lattice points of the cone in [-{radius}, {radius}]^n"]


# -- verify -----------------------------------------------------------------------

def verify_width(inst, args):
    _, rec, _ = do_width(inst, args)
    _, orec, _ = oracle_width(inst, args)
    if rec["width"] != orec["width"]:
        raise Mismatch(f"width {fmt_number(rec['width'])} != oracle {fmt_number(orec['width'])}")
    return {"algorithm": rec, "oracle": orec}


def verify_cone_ip(inst, args):
    _, rec, _ = do_cone_ip(inst, args)
    _, orec, _ = oracle_cone_ip(inst, args)
    if rec["status"] != orec["status"] or rec["value"] != orec["value"]:
        raise Mismatch(f"algorithm {rec['status']} {rec['value']} != "
                       f"oracle {orec['status']} {orec['value']}")
    return {"algorithm": rec, "oracle": orec}


def verify_punctured(inst, args):
    _, rec, _ = do_punctured(inst, args)
    _, orec, _ = oracle_punctured(inst, args)
    if rec["value"] != orec["value"]:
        raise Mismatch(f"value {rec['value']} != oracle {orec['value']}")
    return {"algorithm": rec, "oracle": orec}


def verify_decompose(inst, args):
    cone = inst.payload
    radius = args.oracle_radius or 10
    box = oracle.Box.cube(cone.dim, radius)
    want = set(oracle.enum_lattice_points(
        oracle.shifted_cone_halfspaces([0] * cone.dim, cone.matrix), box, args.budget))
    dec = decompose(cone.matrix)
    got = set()
    for p in dec.pieces:
        h = oracle.shifted_cone_halfspaces([0] * cone.dim, p.gen)
        got.update(oracle.enum_lattice_points(h, box, args.budget))
    if got != want:
        raise Mismatch(f"pieces cover {len(got)} box points, cone has {len(want)}")
    return {"algorithm": {"piece_count": len(dec.pieces), "covered": len(got)},
            "oracle": {"count": len(want), "radius": radius}}


VERIFY = {"width": (verify_width, ("H",)), "cone-ip": (verify_cone_ip, ("CONEIP",)),
          "opt-punctured": (verify_punctured, ("V",)), "decompose": (verify_decompose, ("CONE",))}

ORACLE = {"width": (oracle_width, ("H",)), "cone-ip": (oracle_cone_ip, ("CONEIP",)),
          "opt-punctured": (oracle_punctured, ("V",)), "points": (oracle_points, ("H", "V")),
          "decompose": (oracle_decompose, ("CONE",))}


# -- gen ----------------------------------------------------------------------------

def do_gen(args):
    k, n, seed = args.kind, args.n, args.seed
    if k == "cone":
        obj = wrap(Cone(corpus.gen_cone(n, args.det, seed)))
    elif k == "h":
        obj = wrap(corpus.gen_simplex_h(n, args.bound, seed))
    elif k == "lattice-free":
        obj = wrap(corpus.gen_lattice_free_simplex(n, seed, coord_bound=args.bound))
    elif k == "v":
        obj = wrap(corpus.gen_vsimplex(n, args.bound, seed))
    elif k == "cone-ip":
        obj = wrap(corpus.gen_cone_ip(n, seed))
    else:
        I = corpus.gen_punctured(n, args.bound, seed)
        obj = wrap(I.S, I.c)
    text = emit(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON record")
    common.add_argument("--oracle-radius", type=int, default=None, metavar="R",
                        help="coordinate radius for brute-force searches")
    common.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, metavar="N",
                        help="maximum number of points an oracle may enumerate")

    p = argparse.ArgumentParser(prog="flatsimplex",
                                description="Exact lattice algorithms for simplices and cones.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("decompose", parents=[common], help="unimodular decomposition of a cone")
    s.add_argument("file")
    s = sub.add_parser("width", parents=[common], help="lattice width and flat direction")
    s.add_argument("file")
    s.add_argument("--lattice-free", action="store_true",
                   help="only search layers up to delta(A); needs a simplex without integer points")
    s = sub.add_parser("cone-ip", parents=[common], help="integer program over a shifted cone")
    s.add_argument("file")
    s = sub.add_parser("opt-punctured", parents=[common],
                       help="maximize over lattice points of a simplex other than its vertices")
    s.add_argument("file")
    s = sub.add_parser("oracle", parents=[common], help="brute-force reference answers")
    s.add_argument("sub", choices=sorted(ORACLE))
    s.add_argument("file")
    s = sub.add_parser("verify", parents=[common], help="compare algorithm and oracle")
    s.add_argument("sub", choices=sorted(VERIFY))
    s.add_argument("file")
    s.add_argument("--lattice-free", action="store_true")
    s = sub.add_parser("gen", help="write a seeded random instance")
    s.add_argument("kind", choices=["cone", "h", "lattice-free", "v", "cone-ip", "punctured"])
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=5, help="coordinate bound")
    s.add_argument("--det", type=int, default=6, help="target |det| for cones")
    s.add_argument("-o", "--output")
    return p


COMMANDS = {"decompose": (do_decompose, ("CONE", "CONEIP")), "width": (do_width, ("H",)),
            "cone-ip": (do_cone_ip, ("CONEIP",)), "opt-punctured": (do_punctured, ("V",))}


def _print(args, rec, lines):
    if args.json:
        print(json.dumps(exact(rec)))
    else:
        print("\n".join(lines))


def run(args) -> int:
    if args.cmd == "gen":
        return do_gen(args)
    if args.cmd == "verify":
        fn, kinds = VERIFY[args.sub]
        inst = _load(args.file, *kinds)
        try:
            rec = fn(inst, args)
        except Mismatch as e:
            print(f"mismatch: {e}", file=sys.stderr)
            return INVARIANT
        rec = {"command": f"verify {args.sub}", "match": True, **rec}
        _print(args, rec, [f"verify {args.sub}: algorithm and oracle agree"])
        return OK
    if args.cmd == "oracle":
        fn, kinds = ORACLE[args.sub]
    else:
        fn, kinds = COMMANDS[args.cmd]
    inst = _load(args.file, *kinds)
    code, rec, lines = fn(inst, args)
    _print(args, rec, lines)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT
    except InvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return INVARIANT


if __name__ == "__main__":
    sys.exit(main())
