"""Command-line front end.

Exit codes: 0 success, 1 a negative answer or no candidates, 2 bad usage.
Data goes to stdout; progress and errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import coin_game, core, e8, knot, lattice, surgery
from .core import CapacityError, Changemaker, InvalidInput

OK, NEGATIVE, USAGE = 0, 1, 2
SCAN_MAX_R = 16


class UsageError(Exception):
    pass


def _load(arg: str):
    """Parse a JSON literal, or read it from a file if ``arg`` names one."""
    path = Path(arg)
    try:
        text = path.read_text() if path.is_file() else arg
    except OSError:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse JSON from {arg!r}: {exc}") from None


def _sigma(arg: str) -> Changemaker:
    return Changemaker.from_json(_load(arg))


def _vseq(arg: str) -> knot.VSequence:
    return knot.VSequence.from_json(_load(arg))


def _threads(n: int) -> int:
    return (os.cpu_count() or 1) if n == 0 else n


def _emit(args, payload, lines=None):
    if args.json:
        print(json.dumps(payload))
    elif lines is not None:
        for line in lines:
            print(line)
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


# --- commands -------------------------------------------------------------------

def cmd_changemaker_check(args) -> int:
    vals = _load(args.vector)
    if isinstance(vals, dict):
        vals = vals.get("sigma")
    if not isinstance(vals, list):
        raise UsageError("expected a JSON list or {\"sigma\": [...]}")
    ok = core.is_changemaker(vals)
    payload = {"changemaker": ok}
    if ok:
        cm = Changemaker(vals)
        payload.update({"sigma": list(cm.entries), "p": cm.p, "l1": cm.l1, "odd": cm.odd_count})
    _emit(args, payload)
    return OK if ok else NEGATIVE


def cmd_coin_t_sigma(args) -> int:
    sig = _sigma(args.sigma)
    t = coin_game.t_sigma(sig, args.m)
    q = coin_game.t_sigma_rational(sig, args.m)
    _emit(args, {"m": args.m, "t_sigma": t, "t_sigma_rational": f"{q.numerator}/{q.denominator}"})
    return OK


def cmd_coin_v_sigma(args) -> int:
    sig = _sigma(args.sigma)
    table = coin_game.v_sigma_table(sig)
    vals = {str(i): coin_game.v_sigma(table, i) for i in args.indices}
    _emit(args, {"sigma": list(sig.entries), "v_sigma": vals},
          [f"V_{i} = {v}" for i, v in vals.items()])
    return OK


def cmd_coin_count_plans(args) -> int:
    _emit(args, {"count": coin_game.count_plans(args.m)})
    return OK


def cmd_coin_structure(args) -> int:
    rep = coin_game.verify_structure(_sigma(args.sigma), args.x_max)
    _emit(args, rep.to_json(), [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in rep.checks.items()])
    return OK if rep.ok else NEGATIVE


def cmd_knot_torus(args) -> int:
    poly = knot.torus_alexander(args.p, args.q)
    v = knot.torsion_coeffs(poly)
    payload = {"torus": [args.p, args.q], "alexander": {str(e): c for e, c in poly.coeffs.items()},
               "v": list(v.values), "nu_plus": v.nu_plus}
    _emit(args, payload, [f"alexander: {poly}", f"v: {list(v.values)}", f"nu_plus: {v.nu_plus}"])
    return OK


def cmd_surgery_window(args) -> int:
    w = surgery.slope_window(args.nu_plus, args.r)
    payload = w.to_json()
    if w.bounded:
        payload["p_values"] = w.p_values()
    _emit(args, payload)
    return OK


def _candidates_json(found):
    return [{"p": p, "sigma": list(s.entries)} for p, s in found]


def cmd_surgery_reconstruct(args) -> int:
    v = _vseq(args.v)
    if args.r % 2 == 0 and args.parity is None:
        raise UsageError("--parity is required when r is even")
    view = knot.extract_relevant(v, args.r, args.parity)
    found = surgery.reconstruct_sigma(view, p_hint=args.p_hint, p_max=args.p_max)
    payload = {"view": view.to_json(), "candidates": _candidates_json(found)}
    _emit(args, payload, [f"p={p} sigma={list(s.entries)}" for p, s in found] or ["no candidates"])
    return OK if found else NEGATIVE


def cmd_family_recover(args) -> int:
    v = _vseq(args.v)
    cands = surgery.family_recover_s(v, args.mode)
    a, b = surgery.family_statistics(v)
    _emit(args, {"mode": args.mode, "a": a, "b": b, "candidates": cands})
    return OK if cands else NEGATIVE


def cmd_family_verify(args) -> int:
    rep = surgery.verify_family_T(args.s)
    _emit(args, rep.to_json(), [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in rep.checks.items()])
    return OK if rep.ok else NEGATIVE


def cmd_lattice_hj(args) -> int:
    e = lattice.hj_expansion(args.p, args.q)
    gram = lattice.linear_gram(e)
    _emit(args, {"p": args.p, "q": args.q, "expansion": list(e.coeffs), "gram": gram,
                 "det": lattice.det_bareiss(gram)})
    return OK


def cmd_lattice_realize(args) -> int:
    sig = _sigma(args.sigma)
    if sig.p > 50:
        _progress(f"realize: searching q for p={sig.p}")
    res = lattice.realize(sig, threads=_threads(args.threads))
    payload = {"sigma": list(sig.entries), "p": sig.p, "realizations": [r.to_json() for r in res],
               "note": lattice.REDUCEDNESS_NOTE}
    _emit(args, payload, [f"L({r.p}, {r.q})" if r.q else "S^3" for r in res] or ["none"])
    return OK if res else NEGATIVE


def cmd_e8_check(args) -> int:
    s = _load(args.s) if args.s else None
    sig = _load(args.sigma)
    if isinstance(sig, dict):
        tau_json = sig.get("tau", sig)
        s = s if s is not None else tau_json.get("s")
        sig = tau_json.get("sigma")
    if not isinstance(sig, list):
        raise UsageError("expected a JSON list or {\"sigma\": [...]}")
    s = s if s is not None else [0] * 8
    tau = e8.E8Changemaker(s, sig)
    rep = e8.e8_report(tau)
    payload = {"tau": tau.to_json(), **rep.to_json()}
    _emit(args, payload)
    return OK if rep.is_e8_changemaker else NEGATIVE


def scan(v: knot.VSequence, r_max: int, p_max: int | None = None, threads: int = 1,
         progress=None) -> dict:
    """Run window, reconstruction, bound checks and realization for every r <= r_max."""
    if not 1 <= r_max <= SCAN_MAX_R:
        raise InvalidInput(f"r_max must be in [1, {SCAN_MAX_R}]")
    nu, v0 = v.nu_plus, v[0]
    results = []
    for r in range(1, r_max + 1):
        for parity in ((None,) if r % 2 else ("odd", "even")):
            if progress:
                progress(f"scan: r={r}" + (f" parity={parity}" if parity else ""))
            view = knot.extract_relevant(v, r, parity)
            bound = p_max if p_max is not None else (4 * nu + 3 if r == 1 else None)
            found = surgery.reconstruct_sigma(view, p_max=bound)
            kept, rejected = [], []
            for p, sig in found:
                cand = surgery.SlopeCandidate(r, p, sig).to_json()
                t_l1 = surgery.check_slope_vs_l1(sig, r, nu)
                t_v0 = surgery.check_thm61(sig, r, v0)
                cand["checks"] = {"slope_vs_l1": t_l1.holds, "slope_vs_8V0": t_v0.holds}
                try:
                    real = lattice.realize(sig, threads=threads)
                    cand["realizations"] = [x.to_json() for x in real]
                    cand["checks"]["realized"] = bool(real)
                except CapacityError:
                    cand["realizations"] = None
                    cand["checks"]["realized"] = None
                if all(c is not False for c in cand["checks"].values()):
                    kept.append(cand)
                else:
                    rejected.append(cand)
            entry = {"r": r, "parity": parity, "view": view.to_json(),
                     "window": surgery.slope_window(nu, r).to_json(),
                     "p_bound": bound, "candidates": kept, "rejected": rejected,
                     "count_bound": surgery.count_bound(r)}
            entry["within_count_bound"] = len(kept) <= entry["count_bound"]
            results.append(entry)
    return {"v": list(v.values), "nu_plus": nu, "V0": v0, "r_max": r_max, "results": results}


def cmd_scan(args) -> int:
    if args.torus:
        v = knot.torus_v(*args.torus)
        desc = {"torus": list(args.torus)}
    elif args.v:
        v = _vseq(args.v)
        desc = {"v": list(v.values)}
    else:
        raise UsageError("give --torus P Q or --v FILE")
    rep = scan(v, args.r_max, args.p_max, _threads(args.threads), _progress)
    rep = {"knot": desc, **rep}
    lines = []
    for e in rep["results"]:
        head = f"r={e['r']}" + (f" ({e['parity']} p)" if e["parity"] else "")
        if not e["candidates"]:
            lines.append(f"{head}: none")
        for c in e["candidates"]:
            lens = ", ".join(f"L({x['p']},{x['q']})" if x["q"] else "S^3"
                             for x in c["realizations"] or [])
            lines.append(f"{head}: slope {c['slope']} p={c['p']} sigma={c['sigma']} -> {lens or '?'}")
    _emit(args, rep, lines)
    return OK if any(e["candidates"] for e in rep["results"]) else NEGATIVE


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker processes (0 = auto)")

    ap = argparse.ArgumentParser(prog="cmlens", parents=[common],
                                 description="Changemaker, coin-game and lens-space lattice tools")
    sub = ap.add_subparsers(dest="group", required=True)

    g = sub.add_parser("changemaker", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("check", parents=[common], help="test the changemaker condition")
    c.add_argument("vector", help="JSON list or file")
    c.set_defaults(func=cmd_changemaker_check)

    g = sub.add_parser("coin", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("t-sigma", parents=[common], help="coin-game optimum with m coins")
    c.add_argument("--sigma", required=True)
    c.add_argument("m", type=int)
    c.set_defaults(func=cmd_coin_t_sigma)
    c = g.add_parser("v-sigma", parents=[common], help="relevant coefficients of sigma")
    c.add_argument("--sigma", required=True)
    c.add_argument("indices", type=int, nargs="+")
    c.set_defaults(func=cmd_coin_v_sigma)
    c = g.add_parser("count-plans", parents=[common], help="number of plans with budget m")
    c.add_argument("m", type=int)
    c.set_defaults(func=cmd_coin_count_plans)
    c = g.add_parser("structure", parents=[common], help="check the periodicity identities")
    c.add_argument("--sigma", required=True)
    c.add_argument("--x-max", type=int, default=2)
    c.set_defaults(func=cmd_coin_structure)

    g = sub.add_parser("knot", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("torus", parents=[common], help="Alexander polynomial and V-sequence")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.set_defaults(func=cmd_knot_torus)

    g = sub.add_parser("surgery", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("window", parents=[common], help="bounds on the slope r^2 p")
    c.add_argument("--nu-plus", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.set_defaults(func=cmd_surgery_window)
    c = g.add_parser("reconstruct", parents=[common], help="changemakers matching the knot data")
    c.add_argument("--v", required=True, help="V-sequence JSON or file")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--parity", choices=("odd", "even"))
    c.add_argument("--p-max", type=int)
    c.add_argument("--p-hint", type=int)
    c.set_defaults(func=cmd_surgery_reconstruct)
    fam = g.add_parser("family", parents=[common]).add_subparsers(dest="fcmd", required=True)
    c = fam.add_parser("recover", parents=[common], help="possible family parameters s")
    c.add_argument("--v", required=True)
    c.add_argument("--mode", choices=("r1", "rge2"), required=True)
    c.set_defaults(func=cmd_family_recover)
    c = fam.add_parser("verify", parents=[common], help="evaluate the family T identities")
    c.add_argument("--s", type=int, required=True)
    c.set_defaults(func=cmd_family_verify)

    g = sub.add_parser("lattice", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("hj", parents=[common], help="continued fraction and Gram matrix")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.set_defaults(func=cmd_lattice_hj)
    c = g.add_parser("realize", parents=[common], help="lens spaces realized by sigma")
    c.add_argument("--sigma", required=True)
    c.set_defaults(func=cmd_lattice_realize)

    g = sub.add_parser("e8", parents=[common]).add_subparsers(dest="cmd", required=True)
    c = g.add_parser("check", parents=[common], help="E8-changemaker test")
    c.add_argument("--s", help="8 coordinates as JSON, half-integers as \"3/2\"")
    c.add_argument("--sigma", required=True)
    c.set_defaults(func=cmd_e8_check)

    c = sub.add_parser("scan", parents=[common], help="full pipeline over r = 1..r_max")
    c.add_argument("--torus", type=int, nargs=2, metavar=("P", "Q"))
    c.add_argument("--v")
    c.add_argument("--r-max", type=int, default=2)
    c.add_argument("--p-max", type=int, help="bound on p for r = 1 (default 4 nu+ + 3)")
    c.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidInput, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
