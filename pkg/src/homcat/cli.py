"""Command-line front end. Every command prints (or writes) one JSON report.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for unreadable input or an exhausted search bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path
from typing import Any

from . import __version__
from .acyclic_models import build_P, theorem1_pipeline, verify_homotopy_invariance, verify_prism
from .complexes import boundary_sphere, build_cw, parse_recipe
from .convexity import check_axiom_convex
from .cosimplicial import (
    CosimplicialObject,
    check_axiom_1_2,
    check_axiom_join,
    check_axiom_swap,
    cosimplicial_from_json,
    finset_cosimplicial,
    sset_cosimplicial,
)
from .errors import HomcatError, ResourceLimitExceeded, Unsolvable
from .fincat import DEFAULT_BOUND, FinSet, TableCategory
from .homology import chain_complex, homology, parse_coeff
from .homotopy import Homotopy, HomotopyContext
from .nerve import nerve
from .sset import TruncSimplicialSet, TruncSSetCategory, free_completion

FORMAT = "homcat.report/1"


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


def data_path(name: str) -> Path:
    """Path of a bundled fixture such as ``torus.json``."""
    return Path(str(resources.files("homcat") / "data" / name))


# -- configuration -------------------------------------------------------------


def _bound(args) -> int:
    env = os.environ.get("HOMCAT_BOUND")
    raw = env if env else args.bound
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise InputError(f"search bound {raw!r} is not an integer") from None
    if value <= 0:
        raise InputError("search bound must be positive")
    return value


def _bool(text: str) -> bool:
    if text.lower() in ("true", "1", "yes"):
        return True
    if text.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def make_instance(args) -> CosimplicialObject:
    """The cosimplicial object selected by ``--instance``."""
    bound = _bound(args)
    inst = args.instance
    if args.level is not None and args.level < 1:
        raise InputError("--level must be at least 1")
    if inst == "finset":
        return finset_cosimplicial(FinSet(3, bound), args.level or 2)
    if inst == "sset":
        level = args.level or 3
        return sset_cosimplicial(TruncSSetCategory(level, bound=bound), level)
    if inst.startswith("table:"):
        path = inst[len("table:"):]
        if not args.cosimplicial:
            raise InputError("--instance table:PATH needs --cosimplicial PATH")
        C = TableCategory.from_json(_load_json(path), bound, Path(path).stem)
        data = _load_json(args.cosimplicial)
        F = cosimplicial_from_json(C, data, Path(args.cosimplicial).stem)
        return F.truncated(args.level) if args.level else F
    raise InputError(f"unknown instance {inst!r}; expected finset, sset or table:PATH")


def load_simplicial_set(path: str, level: int, name: str = "") -> TruncSimplicialSet:
    S = TruncSimplicialSet.from_json(_load_json(path), name or Path(path).stem)
    if S.level > level:
        raise InputError(f"{path} has level {S.level} above the instance level {level}")
    if not S.has_degeneracies or S.level < level:
        S = free_completion(S, level)
    return S


def parse_object(F: CosimplicialObject, spec: str):
    """``point``, ``delta:m``, ``boundary:m``, ``cell:n``, a JSON file (sset), an integer (finset), or a table object name."""
    C = F.category
    if spec.startswith("cell:"):
        try:
            return F.cells[int(spec[5:])]
        except (ValueError, IndexError):
            raise InputError(f"no cell {spec[5:]!r}") from None
    if isinstance(C, TruncSSetCategory):
        try:
            if spec == "point":
                return C.point()
            if spec.startswith("delta:"):
                return C.register(C.representable(int(spec[6:])))
            if spec.startswith("boundary:"):
                return C.register(C.boundary(int(spec[9:])))
        except ValueError:
            raise InputError(f"bad object spec {spec!r}") from None
        return C.register(load_simplicial_set(spec, C.level))
    if isinstance(C, FinSet):
        if spec == "point":
            return 1
        try:
            n = int(spec)
        except ValueError:
            raise InputError(f"finite-set objects are sizes >= 1, got {spec!r}") from None
        if n < 1:
            raise InputError("finite-set objects are sizes >= 1")
        return n
    if spec not in C.objects():
        raise InputError(f"unknown object {spec!r}; known: {', '.join(C.objects())}")
    return spec


def _simplicial(F: CosimplicialObject, X) -> TruncSimplicialSet:
    """Simplicial sets are used directly (they equal their nerves); other objects go through the nerve."""
    if isinstance(F.category, TruncSSetCategory):
        return X
    return nerve(F, X)


# -- commands ---------------------------------------------------------------


def cmd_check_axioms(args) -> tuple[dict, bool]:
    F = make_instance(args)
    reports = check_axiom_1_2(F) + [check_axiom_swap(F), check_axiom_join(F), check_axiom_convex(F)]
    return {"axioms": {r.axiom: r.to_json() for r in reports}}, all(r.passed for r in reports)


def cmd_homology(args) -> tuple[dict, bool]:
    F = make_instance(args)
    X = parse_object(F, args.object)
    S = _simplicial(F, X)
    coeff = parse_coeff(args.coeff)
    C = chain_complex(S, coeff, args.reduced)
    groups = [homology(C, n).to_json() for n in range(S.level)]
    return {
        "object": F.category.describe_object(X),
        "coeff": args.coeff,
        "reduced": args.reduced,
        "counts": list(S.counts),
        "homology": groups,
    }, True


def _hom_labels(C, homs) -> list:
    return [C.describe_morphism(m) for m in homs]


def cmd_homotopy_classes(args) -> tuple[dict, bool]:
    F = make_instance(args)
    C = F.category
    X, Y = parse_object(F, args.source), parse_object(F, args.target)
    hc = HomotopyContext(F)
    cls = hc.homotopy_classes(X, Y)
    return {
        "source": C.describe_object(X),
        "target": C.describe_object(Y),
        "morphisms": _hom_labels(C, cls.homs),
        "classes": cls.classes,
        "raw_pairs": sorted(list(p) for p in cls.raw),
        "raw_is_equivalence": cls.raw_is_equivalence,
        "raw_is_symmetric": cls.raw_symmetric(),
    }, True


def cmd_homotopy_equivalent(args) -> tuple[dict, bool]:
    F = make_instance(args)
    C = F.category
    A, B = parse_object(F, args.source), parse_object(F, args.target)
    found = HomotopyContext(F).find_homotopy_equivalence(A, B)
    out: dict = {"source": C.describe_object(A), "target": C.describe_object(B), "equivalent": found is not None}
    if found:
        out["f"], out["g"] = C.describe_morphism(found[0]), C.describe_morphism(found[1])
    return out, found is not None


def cmd_contractible(args) -> tuple[dict, bool]:
    F = make_instance(args)
    C = F.category
    X = parse_object(F, args.object)
    p = HomotopyContext(F).is_contractible(X)
    out: dict = {"object": C.describe_object(X), "contractible": p is not None}
    if p is not None:
        out["point"] = C.describe_morphism(p)
    return out, p is not None


def cmd_invariance(args) -> tuple[dict, bool]:
    F = make_instance(args)
    C = F.category
    X, Y = parse_object(F, args.source), parse_object(F, args.target)
    hc = HomotopyContext(F)
    P = build_P(F, min(args.nmax, F.level - 1), hc)
    cls = hc.homotopy_classes(X, Y)
    product = hc.lambda_maps(X).product
    pairs = []
    ok = True
    for (a, b), H in sorted(cls.witnesses.items()):
        rep = verify_homotopy_invariance(P, Homotopy(cls.homs[a], cls.homs[b], H, product))
        ok &= rep.passed
        pairs.append({
            "f": a,
            "g": b,
            "homotopy": C.describe_morphism(H),
            "equal_induced_maps": rep.passed,
            "report": rep.to_json(),
        })
    return {
        "source": C.describe_object(X),
        "target": C.describe_object(Y),
        "morphisms": _hom_labels(C, cls.homs),
        "pairs": pairs,
        "claim": "P3",
    }, ok


def cmd_chain_homotopy(args) -> tuple[dict, bool]:
    F = make_instance(args)
    C = F.category
    nmax = min(args.nmax, F.level - 1)
    try:
        P = build_P(F, nmax)
    except Unsolvable as exc:
        return {"claim": "P5", "built": False, "error": f"solve-unsolvable: {exc}", "witness": exc.witness}, False
    objs = [parse_object(F, o) for o in args.objects] if args.objects else C.objects()
    checks = []
    ok = True
    for X in objs:
        for n in range(nmax + 1):
            rep = verify_prism(P, X, n)
            ok &= rep.passed
            checks.append({"object": C.describe_object(X), "degree": n, "passed": rep.passed, "checked": rep.checked})
    return {"claim": "P5", "built": True, "prism": P.to_json(), "checks": checks}, ok


def cmd_build(args) -> tuple[dict, bool]:
    F = make_instance(args)
    if args.sphere is not None:
        S = boundary_sphere(F, args.sphere)
        obj = S.obj
    elif args.recipe:
        data = _load_json(args.recipe)
        start = parse_object(F, args.start) if args.start else None
        obj = build_cw(F, parse_recipe(data), start).obj
    else:
        raise InputError("build needs --sphere K or --recipe PATH")
    if not isinstance(obj, TruncSimplicialSet):
        return {"object": F.category.describe_object(obj)}, True
    return obj.to_json(), True


def cmd_pipeline(args) -> tuple[dict, bool]:
    F = make_instance(args)
    rep = theorem1_pipeline(F, n_max=None if args.nmax is None else min(args.nmax, F.level - 1))
    ok = all(rep[k]["status"] == "pass" for k in ("claim_i", "claim_ii", "claim_iii"))
    return rep, ok


COMMANDS = {
    "check-axioms": cmd_check_axioms,
    "homology": cmd_homology,
    "homotopy-classes": cmd_homotopy_classes,
    "homotopy-equivalent": cmd_homotopy_equivalent,
    "contractible": cmd_contractible,
    "invariance": cmd_invariance,
    "chain-homotopy": cmd_chain_homotopy,
    "build": cmd_build,
    "pipeline": cmd_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", default="sset", help="finset, sset or table:PATH")
    common.add_argument("--cosimplicial", help="cosimplicial object file for table instances")
    common.add_argument("--level", type=int, help="truncation level L")
    common.add_argument("--coeff", default="Z", type=_coeff_arg, help="Z or Zmod:m")
    common.add_argument("--reduced", type=_bool, default=False, help="true or false")
    common.add_argument("--bound", default=DEFAULT_BOUND, help="search budget (HOMCAT_BOUND overrides)")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="homcat", description="Homology and homotopy in finite categories.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check-axioms", parents=[common], help="check the five structural requirements")
    p = sub.add_parser("homology", parents=[common], help="homology of an object")
    p.add_argument("object")
    for name in ("homotopy-classes", "homotopy-equivalent", "invariance"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("source")
        p.add_argument("target")
        if name == "invariance":
            p.add_argument("--nmax", type=int, default=2)
    p = sub.add_parser("contractible", parents=[common])
    p.add_argument("object")
    p = sub.add_parser("chain-homotopy", parents=[common], help="build and verify the prism operator")
    p.add_argument("objects", nargs="*")
    p.add_argument("--nmax", type=int, default=2)
    p = sub.add_parser("build", parents=[common], help="build a sphere or a CW complex")
    p.add_argument("--sphere", type=int)
    p.add_argument("--recipe")
    p.add_argument("--start", help="starting object (default: the cell F(0))")
    p = sub.add_parser("pipeline", parents=[common], help="run every stage and report each claim")
    p.add_argument("--nmax", type=int)
    return parser


def _coeff_arg(text: str) -> str:
    try:
        parse_coeff(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, ok = COMMANDS[args.command](args)
        code = 0 if ok else 1
    except (InputError, ResourceLimitExceeded, HomcatError) as exc:
        kind = "resource-limit-exceeded" if isinstance(exc, ResourceLimitExceeded) else type(exc).__name__
        body, code = {"error": kind, "message": str(exc)}, 2
    report = {"format": FORMAT, "command": args.command, "instance": args.instance, "ok": code == 0, **body}
    text = render(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if code == 2:
        print(f"homcat: {report['error']}: {report['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
