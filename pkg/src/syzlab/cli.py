"""Command line front end.

Commands: analyze | betti-surface | betti-curve | verify | resolve | enumerate.
Exit codes: 0 success, 1 failed check, 2 malformed input, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cache import ReportCache, cache_key
from .checks import (clifford_prediction, conjecture2_check,
                     duality_identity_check, genus, green_check,
                     hering_schenck_check, six_term_exactness_check,
                     theorem2_hypotheses)
from .curves import constancy_experiment, curve_betti
from .enumeration import lemma4_scan
from .errors import (BudgetExceededError, DegenerateInteriorError,
                     PolygonInputError, SyzlabError)
from .fans import is_gorenstein_weak_fano, minimal_resolution, normal_fan
from .geometry import (LatticePolygon, boundary_count, canonical_form,
                       interior_hull, lattice_width, polygon_from_vertex_list)
from .koszul import DEFAULT_BUDGET, surface_betti
from .laurent import LaurentParseError, parse_laurent
from .linalg import DEFAULT_PRIMES

SCHEMA = 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="syzlab",
        description="Graded Betti tables of toric surfaces and the curves "
                    "on them, via exact linear algebra mod primes.")
    ap.add_argument("command", choices=[
        "analyze", "betti-surface", "betti-curve", "verify", "resolve",
        "enumerate"])
    ap.add_argument("input", nargs="?",
                    help="path to a polygon JSON file ({\"vertices\": ...}), "
                         "inline JSON, or - for stdin; unused for enumerate")
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--primes", type=str, default=None,
                    help="comma-separated list, default two 31-bit primes")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="max rows*cols cells for any single matrix")
    ap.add_argument("--cache-dir", type=str, default=None,
                    help="report cache directory (env SYZLAB_CACHE_DIR)")
    ap.add_argument("--f", dest="f_expr", type=str, default=None,
                    help="explicit Laurent polynomial, e.g. 'x^6+y^2+x^2*y^6'")
    ap.add_argument("--boundary-only", action="store_true",
                    help="sample f on the boundary points of Delta only")
    ap.add_argument("--max-points", type=int, default=12,
                    help="enumerate: lattice point cap")
    ap.add_argument("--box", type=int, default=8,
                    help="enumerate: bounding grid size")
    return ap


def _load_polygon(arg) -> LatticePolygon:
    if arg is None:
        raise PolygonInputError("a polygon input is required")
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip()[:1] in "{[":
        text = arg
    else:
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as e:
            raise PolygonInputError(f"cannot read {arg}: {e}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolygonInputError(
            f"invalid JSON (line {e.lineno}, column {e.colno}): {e.msg}")
    if isinstance(data, list):
        return polygon_from_vertex_list(data)
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonInputError(
            'expected a vertex array or an object with a "vertices" key')
    return polygon_from_vertex_list(data["vertices"])


def _parse_primes(text) -> tuple:
    if text is None:
        return DEFAULT_PRIMES
    try:
        primes = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise PolygonInputError(f"invalid prime list {text!r}")
    if len(primes) < 1 or len(set(primes)) != len(primes):
        raise PolygonInputError("primes must be distinct")
    for p in primes:
        if p < 3 or p % 2 == 0 or p.bit_length() > 31:
            raise PolygonInputError(f"{p} is not an odd prime below 2^31")
    return primes


def _emit(report: dict, as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(_serialize(report).decode())
        out.write("\n")
        return
    for line in _human_lines(report):
        out.write(line + "\n")


def _serialize(report: dict) -> bytes:
    return json.dumps(report, sort_keys=True, separators=(",", ":")).encode()


def _human_lines(report: dict):
    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k in sorted(obj):
                yield from walk(f"{prefix}{k}." if prefix else f"{k}.", obj[k])
        elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
            for i, v in enumerate(obj):
                yield from walk(f"{prefix}{i}.", v)
        else:
            yield f"{prefix[:-1]}: {obj}"
    yield from walk("", report)


def _base_report(command: str, delta: LatticePolygon | None) -> dict:
    rep = {"schema": SCHEMA, "command": command, "version": __version__}
    if delta is not None:
        rep["polygon_class"] = [list(v) for v in canonical_form(delta).vertices]
    return rep


def _cmd_analyze(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("analyze", delta)
    g = genus(delta)
    rep["g"] = g
    rep["boundary_points"] = boundary_count(delta)
    hull = interior_hull(delta)
    if not isinstance(hull, LatticePolygon):
        raise DegenerateInteriorError("interior polygon is not two-dimensional")
    w, direction = lattice_width(hull)
    rep["interior_polygon"] = {
        "vertices": [list(v) for v in hull.vertices],
        "lattice_width": w,
        "width_direction": list(direction),
        "boundary_points": boundary_count(hull),
    }
    ci = clifford_prediction(delta)
    rep["clifford"] = {"value": ci.value, "exceptional": ci.exceptional,
                       "reason": ci.reason}
    t2 = theorem2_hypotheses(delta)
    rep["theorem2"] = t2.as_dict()
    rep["gwf"] = t2.witness["gwf"]
    return 0, rep


def _cmd_resolve(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("resolve", delta)
    fan = normal_fan(delta)
    res = minimal_resolution(fan)
    rep["fan_rays"] = [list(r) for r in fan.rays]
    rep["refined_rays"] = [list(r) for r in res.refined.rays]
    rep["inserted_rays"] = [list(r) for r in res.inserted]
    rep["provenance"] = {str(list(w)): [list(u), list(v)]
                         for w, (u, v) in res.provenance.items()}
    rep["gorenstein_weak_fano"] = is_gorenstein_weak_fano(res.refined)
    return 0, rep


def _cmd_betti_surface(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("betti-surface", delta)
    hull = interior_hull(delta)
    if not isinstance(hull, LatticePolygon):
        raise DegenerateInteriorError("interior polygon is not two-dimensional")
    sb = surface_betti(hull, primes, args.budget, jobs=args.jobs)
    rep.update(sb.as_dict())
    return (0 if sb.agree else 1), rep


def _explicit_f(args):
    if args.f_expr is None:
        return None
    try:
        return parse_laurent(args.f_expr)
    except LaurentParseError as e:
        raise PolygonInputError(f"invalid --f expression: {e}")


def _cmd_betti_curve(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("betti-curve", delta)
    cb = curve_betti(delta, trials=args.trials, primes=primes,
                     seed=args.seed, budget=args.budget,
                     boundary_only=args.boundary_only,
                     explicit_f=_explicit_f(args), jobs=args.jobs)
    rep.update(cb.as_dict())
    return (0 if not cb.warnings else 1), rep


def _cmd_verify(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("verify", delta)
    cb = curve_betti(delta, trials=args.trials, primes=primes,
                     seed=args.seed, budget=args.budget,
                     boundary_only=args.boundary_only,
                     explicit_f=_explicit_f(args), jobs=args.jobs)
    rep.update(cb.as_dict())
    hull = interior_hull(delta)
    ci = clifford_prediction(delta)
    checks = [
        green_check(cb.a, cb.g, ci.value),
        conjecture2_check(cb.b, hull),
        hering_schenck_check(cb.c, hull),
        duality_identity_check(cb.b, cb.c, cb.g),
        six_term_exactness_check(cb.a, cb.b, cb.c, cb.g),
    ]
    # hypothesis flags are informational: a polygon satisfying neither
    # hypothesis is fine, but when one holds the sum formula must too
    t2 = theorem2_hypotheses(delta)
    rep["hypotheses"] = t2.as_dict()
    if t2.passed:
        sum_ok = all(a == b + c for a, b, c in zip(cb.a, cb.b, cb.c))
        from .checks import PredicateReport
        checks.append(PredicateReport(
            "theorem2_sum_formula", sum_ok,
            {"a": list(cb.a), "b_plus_c": [b + c for b, c in zip(cb.b, cb.c)]}))
    rep["checks"] = [c.as_dict() for c in checks]
    failed = [c.name for c in checks if not c.passed and not c.skipped]
    rep["failed_checks"] = failed
    ok = not failed and not cb.warnings
    return (0 if ok else 1), rep


def _cmd_enumerate(delta, args, primes) -> tuple[int, dict]:
    rep = _base_report("enumerate", None)
    scan = lemma4_scan(args.max_points, args.box)
    rep["checked_classes"] = scan.checked
    rep["violators"] = [[list(v) for v in P.vertices] for P in scan.violators]
    rep["only_upsilon"] = scan.ok_except_upsilon
    return (0 if scan.ok_except_upsilon else 1), rep


_COMMANDS = {
    "analyze": (_cmd_analyze, False),
    "resolve": (_cmd_resolve, False),
    "betti-surface": (_cmd_betti_surface, True),
    "betti-curve": (_cmd_betti_curve, True),
    "verify": (_cmd_verify, True),
    "enumerate": (_cmd_enumerate, False),
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler, cacheable = _COMMANDS[args.command]
    try:
        primes = _parse_primes(args.primes)
        delta = None
        if args.command != "enumerate":
            delta = _load_polygon(args.input)
        cache = ReportCache(args.cache_dir)
        key = None
        if cacheable and cache.enabled:
            extra = {"seed": args.seed, "trials": args.trials,
                     "f": args.f_expr, "boundary_only": args.boundary_only,
                     "budget": args.budget}
            key = cache_key(delta, args.command, primes, extra)
            hit = cache.get(key)
            if hit is not None:
                print("cache hit", file=sys.stderr)
                _emit(json.loads(hit), args.json)
                return 0
        code, report = handler(delta, args, primes)
        if key is not None and code == 0:
            cache.put(key, _serialize(report))
        _emit(report, args.json)
        return code
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (PolygonInputError, DegenerateInteriorError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SyzlabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
