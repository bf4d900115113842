"""Command-line workbench: one subcommand per operation family.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 budget or cap exceeded.
"""
from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from . import catalog as catalog_mod
from . import census as census_mod
from . import constructions as cons
from . import flips, iso, tri_io
from .core import (f_vector, is_combinatorial_manifold, is_k_neighborly,
                   is_pseudomanifold)
from .errors import CapExceeded, WorkbenchError
from .homology import betti, homology
from .realization import realization_check

OK, FAIL, INPUT_ERROR, BUDGET = 0, 1, 2, 3


def _load(path):
    if path is None:
        raise WorkbenchError("missing --in FILE")
    try:
        e = catalog_mod.entry(path)
    except KeyError:
        return tri_io.load(path)
    return e.load()


def _facet_arg(text):
    return tuple(int(t) for t in text.replace(",", " ").split())


def cmd_info(args):
    C = _load(args.infile)
    fv = f_vector(C)
    print(f"dim={C.dim} n={C.n} facets={len(C.facets)}")
    print(f"f={fv.counts} chi={fv.euler}")
    ks = [k for k in range(1, C.dim + 2) if is_k_neighborly(C, k)]
    print(f"neighborly=k<={max(ks)}" if ks else "neighborly=no")
    pm = is_pseudomanifold(C)
    print(f"pseudomanifold={pm.status}" + (f" ({pm.witness})" if pm.witness else ""))
    return OK


def cmd_fvector(args):
    fv = f_vector(_load(args.infile))
    if args.format == "kv":
        print(" ".join(f"f{k}={c}" for k, c in enumerate(fv.counts))
              + f" chi={fv.euler}")
    else:
        print(f"f = {fv.counts}, chi = {fv.euler}")
    return OK


def cmd_homology(args):
    C = _load(args.infile)
    if args.mod:
        print(betti(C, args.mod))
    else:
        print(homology(C))
    return OK


def cmd_verify(args):
    if args.what == "catalog":
        results = catalog_mod.verify_catalog()
        bad = 0
        for name, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
            bad += not ok
        return OK if bad == 0 else FAIL
    C = _load(args.infile)
    if args.what == "pseudomanifold":
        verdict = is_pseudomanifold(C)
    else:
        verdict = is_combinatorial_manifold(C, flip_budget=args.budget or 10_000)
    print(verdict.status + (f": {verdict.witness}" if verdict.witness else ""))
    if verdict.status == "yes":
        return OK
    return BUDGET if verdict.status == "unknown" else FAIL


def _parse_seeds(text):
    seeds = []
    for part in text.split(","):
        if "-" in part:
            a, _, b = part.partition("-")
            seeds.extend(range(int(a), int(b) + 1))
        else:
            seeds.append(int(part))
    return seeds


def cmd_reduce(args):
    C = _load(args.infile)
    schedule = flips.Schedule(
        target_f0=args.target_f0,
        target_f=_facet_arg(args.target_f) if args.target_f else None)
    if args.seeds:
        best, seed, trace, stats = flips.reduce_multi(
            C, _parse_seeds(args.seeds), args.budget, schedule,
            threads=args.threads)
        print(f"winning seed {seed}")
    else:
        best, trace, stats = flips.reduce(C, seed=args.seed,
                                          budget=args.budget, schedule=schedule)
    fv = f_vector(best)
    print(f"best f = {fv.counts} after {stats['moves']} moves "
          f"(best at step {stats['best_step']})")
    if args.out:
        tri_io.save(args.out, best)
    if args.trace:
        with open(args.trace, "w", encoding="ascii") as fh:
            fh.write(tri_io.write_trace(trace))
    if (args.target_f0 or args.target_f) and not schedule.reached(fv.counts):
        return BUDGET
    return OK


def cmd_construct(args):
    kind = args.kind
    if kind == "boundary":
        C = cons.boundary_simplex(args.dim)
    elif kind == "bundle":
        C = (cons.orientable_bundle(args.dim) if args.orientable
             else cons.twisted_bundle(args.dim))
    elif kind == "product":
        C = cons.product(_load(args.infile), _load(args.infile2))
    elif kind == "join":
        C = cons.join(_load(args.infile), _load(args.infile2))
    elif kind == "sum":
        A, B = _load(args.infile), _load(args.infile2)
        F1 = _facet_arg(args.facet) if args.facet else A.facets[0]
        F2 = _facet_arg(args.facet2) if args.facet2 else B.facets[0]
        C = cons.connected_sum(A, F1, B, F2)
    elif kind == "stack":
        A = _load(args.infile)
        F = _facet_arg(args.facet) if args.facet else A.facets[0]
        C = cons.stack(A, F)
    else:
        raise WorkbenchError(f"unknown construction {kind!r}")
    fv = f_vector(C)
    print(f"constructed dim={C.dim} n={C.n} f={fv.counts}")
    if args.out:
        tri_io.save(args.out, C)
    return OK


def cmd_iso(args):
    same = iso.are_isomorphic(_load(args.infile), _load(args.infile2))
    print("isomorphic" if same else "not isomorphic")
    return OK if same else FAIL


def cmd_auto(args):
    g = iso.automorphism_group(_load(args.infile))
    print(f"order {g.order}")
    for gen in g.generators:
        print("generator", " ".join(map(str, gen)))
    return OK


def cmd_det(args):
    C = _load(args.infile)
    if args.links:
        print(" ".join(map(str, iso.as_link_determinants(C))))
    else:
        print(iso.as_determinant(C))
    return OK


def _parse_hints(pairs):
    hints = {}
    for item in pairs or ():
        if item == "not-simply-connected":
            hints["simply_connected"] = False
        elif item == "simply-connected":
            hints["simply_connected"] = True
        elif item == "not-sphere":
            hints["is_sphere"] = False
        elif item == "sphere":
            hints["is_sphere"] = True
        elif "=" in item:
            key, _, val = item.partition("=")
            key = key.replace("-", "_")
            if key in ("is_sphere", "simply_connected"):
                hints[key] = val.lower() in ("1", "true", "yes")
            elif key == "connectivity":
                hints[key] = int(val)
            elif key in ("is_homology_sphere", "homology_sphere"):
                hints["is_homology_sphere"] = val
            elif key in ("known_manifold", "manifold"):
                hints["known_manifold"] = val
            else:
                raise WorkbenchError(f"unknown hint {item!r}")
        else:
            raise WorkbenchError(f"unknown hint {item!r}")
    return bounds_mod.TopologyHints(**hints)


def cmd_bounds(args):
    C = _load(args.infile)
    report = bounds_mod.bound_report(C, _parse_hints(args.hint))
    print(report.to_kv() if args.format == "kv" else report.to_text())
    return OK if not report.violations() else FAIL


def cmd_census(args):
    cap = args.cap
    if args.what == "surfaces":
        if cap is None:
            cap = census_mod.SURFACE_CAP_DEFAULT
        else:
            print(f"warning: cap overridden to {cap}", file=sys.stderr)
        result = census_mod.enumerate_surfaces(args.n, cap=cap,
                                               threads=args.threads)
        for line in result.lines():
            print(line)
    else:
        if cap is None:
            cap = census_mod.SPHERE_CAP_DEFAULT
        else:
            print(f"warning: cap overridden to {cap}", file=sys.stderr)
        count = census_mod.enumerate_spheres(args.n, cap=cap,
                                             threads=args.threads)
        print(f"n={args.n} chi=2 orient=+ genus=0 count={count}")
    return OK


def cmd_realize(args):
    C = _load(args.infile)
    with open(args.coords, "r", encoding="ascii") as fh:
        coords = tri_io.parse_coords(fh.read())
    verdict = realization_check(C, coords)
    print("valid" if verdict.valid else f"invalid: {verdict.witness}")
    return OK if verdict.valid else FAIL


def cmd_replay(args):
    C = _load(args.infile)
    with open(args.trace, "r", encoding="ascii") as fh:
        trace = tri_io.parse_trace(fh.read())
    result = flips.replay(C, trace)
    fv = f_vector(result)
    print(f"replayed {len(trace)} moves: f = {fv.counts}")
    if args.out:
        tri_io.save(args.out, result)
    return OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="mw", description="workbench for small triangulated manifolds")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, infile=True, out=False, fmt=False):
        if infile:
            sp.add_argument("--in", dest="infile",
                            help=".tri file or catalog entry name")
        if out:
            sp.add_argument("--out", help="output .tri file")
        if fmt:
            sp.add_argument("--format", choices=("text", "kv"), default="text")

    common(sub.add_parser("info", help="summary of a complex"))
    common(sub.add_parser("fvector", help="face counts and Euler characteristic"),
           fmt=True)
    sp = sub.add_parser("homology", help="integral homology or Betti numbers")
    common(sp)
    sp.add_argument("--mod", type=int, default=0,
                    help="compute Betti numbers over Z_p instead")
    sp = sub.add_parser("verify", help="pseudomanifold/manifold/catalog checks")
    sp.add_argument("what", choices=("pseudomanifold", "manifold", "catalog"))
    common(sp)
    sp.add_argument("--budget", type=int, default=None,
                    help="flip budget per link for manifold verification")
    sp = sub.add_parser("reduce", help="search for a smaller triangulation")
    common(sp, out=True)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--seeds", help="run several seeds, e.g. 1-16 or 3,7,9; "
                                    "the (objective, seed)-best run wins")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker processes for multi-seed runs")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--trace", help="write the move trace here")
    sp.add_argument("--target-f0", type=int, dest="target_f0")
    sp.add_argument("--target-f", dest="target_f",
                    help="comma-separated f-vector to stop at")
    sp = sub.add_parser("construct", help="builders")
    sp.add_argument("kind", choices=("boundary", "product", "sum", "bundle",
                                     "stack", "join"))
    common(sp, out=True)
    sp.add_argument("--in2", dest="infile2", help="second input complex")
    sp.add_argument("--dim", type=int, default=3)
    sp.add_argument("--facet", help="facet of the first summand (sum/stack)")
    sp.add_argument("--facet2", help="facet of the second summand (sum)")
    sp.add_argument("--orientable", action="store_true",
                    help="bundle: build the orientable sibling")
    sp = sub.add_parser("iso", help="isomorphism test")
    common(sp)
    sp.add_argument("--in2", dest="infile2", required=True)
    common(sub.add_parser("auto", help="automorphism group"))
    sp = sub.add_parser("det", help="incidence determinants")
    common(sp)
    sp.add_argument("--links", action="store_true",
                    help="per-vertex link determinants")
    sp = sub.add_parser("bounds", help="evaluate every applicable bound")
    common(sp, fmt=True)
    sp.add_argument("--hint", action="append",
                    help="topology hint, e.g. manifold=RP3 or "
                         "not-simply-connected")
    sp = sub.add_parser("census", help="surface or sphere census")
    sp.add_argument("what", choices=("surfaces", "spheres"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)
    sp = sub.add_parser("realize", help="check straight-line coordinates")
    common(sp)
    sp.add_argument("--coords", required=True)
    sp = sub.add_parser("replay", help="re-apply a move trace")
    common(sp, out=True)
    sp.add_argument("--trace", required=True)
    return p


_HANDLERS = {
    "info": cmd_info, "fvector": cmd_fvector, "homology": cmd_homology,
    "verify": cmd_verify, "reduce": cmd_reduce, "construct": cmd_construct,
    "iso": cmd_iso, "auto": cmd_auto, "det": cmd_det, "bounds": cmd_bounds,
    "census": cmd_census, "realize": cmd_realize, "replay": cmd_replay,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET
    except (WorkbenchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
