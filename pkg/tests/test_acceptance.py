"""Acceptance criteria 1-11, one PASS/FAIL line each.

The lines are printed as the tests run (visible with ``-s``) and repeated in
the terminal summary.  Run directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cmlens import Changemaker
from cmlens import coin_game as cg
from cmlens import e8, lattice, surgery
from cmlens.cli import scan
from cmlens.knot import VSequence, extract_relevant, torus_v
from cmlens.oracles import t_sigma_row_brute, v_sigma_brute

from helpers import random_changemakers

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def record(n: int, desc: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {desc}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def test_criterion_01_plan_counts():
    c100, t100 = _timed(cg.count_plans, 100)
    c200, t200 = _timed(cg.count_plans, 200)
    ok = c100 == 157452 and c200 == 13552451 and t100 < 10 and t200 < 60
    record(1, "plan counts for m=100 and m=200", ok,
           f"{c100} in {t100:.2f}s, {c200} in {t200:.2f}s")


def test_criterion_02_family_formulas():
    bad, worst = [], 0.0
    for s in range(5, 11):
        sig = surgery.family_sigma(s)
        for m, want in ((295, 110 * s + 75), (300, 110 * s + 80)):
            got, dt = _timed(cg.t_sigma, sig, m)
            worst = max(worst, dt)
            if got != want or dt >= 5:
                bad.append((s, m, got, want))
    record(2, "family values T_295 = 110s+75 and T_300 = 110s+80 for s=5..10", not bad,
           f"slowest {worst:.3f}s" + (f", mismatches {bad}" if bad else ""))


def test_criterion_03_family_inequalities():
    bad = []
    for s in range(5, 11):
        m = 11 * s * s - 33 * s + 24
        row = cg.t_sigma_sweep(surgery.family_sigma(s), m + 1)
        if not (row[m] <= 22 * s * s - 22 * s - 28 and row[m + 1] >= 22 * s * s - 22 * s - 24):
            bad.append((s, row[m], row[m + 1]))
    record(3, "family inequalities at 11s^2-33s+24 and 11s^2-33s+25 for s=5..10", not bad,
           f"mismatches {bad}" if bad else "")


def test_criterion_04_oracle_equivalence():
    sigmas = random_changemakers(2024, 200, 60)
    bad = [s.entries for s in sigmas
           if cg.t_sigma_sweep(s, 40) != t_sigma_row_brute(s.entries, 40)]
    record(4, "DP equals plan enumeration for 200 random changemakers, p <= 60, m <= 40", not bad,
           f"{len(set(s.entries for s in sigmas))} distinct vectors" + (f", failing {bad}" if bad else ""))


def test_criterion_05_structure_identities():
    keys = ("T at (x^2p+x|s|)/2", "T at (x^2p-x|s|)/2", "V_xp =", "V_(xp-|s|) =")
    bad = []
    for sig in random_changemakers(505, 50, 150):
        rep = cg.verify_structure(sig, 3)
        if not all(v for k, v in rep.checks.items() if k.startswith(keys)):
            bad.append(sig.entries)
    for sig in random_changemakers(506, 60, 40):
        table = cg.v_sigma_table(sig)
        idx = range(3 * sig.p + 1)
        fast = [table[i] for i in idx]
        if fast != cg.v_sigma_direct(sig, idx):
            bad.append(sig.entries)
        elif sig.p <= 12 and fast != [v_sigma_brute(sig.entries, i) for i in idx]:
            bad.append(sig.entries)
    record(5, "periodicity identities for x=1..3 and the closed form for V up to 3p", not bad,
           f"failing {bad}" if bad else "")


def test_criterion_06_half_period_suite():
    names = ("half-period value", "quarter value lower bound", "quarter value equality iff even split",
             "quarter value upper bound")
    sigmas = random_changemakers(606, 50, 200)
    sigmas += [Changemaker(v) for v in [(2, 2, 1), (4, 2, 2, 1), (6, 4, 2, 1, 1), (2, 2, 1, 1, 1)]]
    bad, equal_cases = [], 0
    for sig in sigmas:
        rep = cg.verify_structure(sig, 1)
        if not all(v for k, v in rep.checks.items() if k.startswith(names)):
            bad.append(sig.entries)
        equal_cases += rep.notes["V_(p-|s|)/2"] == rep.notes["lower"]
    record(6, "half-period values, quarter bounds and the even-split equality criterion", not bad,
           f"{len(sigmas)} vectors, {equal_cases} at the lower bound" + (f", failing {bad}" if bad else ""))


def test_criterion_07_trefoil_slope():
    v = torus_v(2, 3)
    sig = Changemaker((1, 1))
    t_v0 = surgery.check_thm61(sig, 2, v[0])
    t_l1 = surgery.check_slope_vs_l1(sig, 2, v.nu_plus)
    ok = (v[0] == 1 and t_v0.holds and t_v0.value == 8 == 8 * v[0]
          and t_l1.holds and (t_l1.upper, t_l1.value, t_l1.lower) == (4, 4, 2))
    record(7, "trefoil r=2 p=2 sigma=(1,1): r^2 p = 8 V_0 and window 4 >= 4 >= 2", ok,
           f"r^2p={t_v0.value}, window {t_l1.upper} >= {t_l1.value} >= {t_l1.lower}")


def _small_vsequences(max_len):
    for n in range(1, max_len + 1):
        for mask in range(1 << (n - 1)):
            steps = [(mask >> j) & 1 for j in range(n - 1)]
            vals = [sum(steps)]
            for s in steps:
                vals.append(vals[-1] - s)
            if vals[-1] <= 1:
                yield vals


def test_criterion_08_reconstruction():
    trefoil = [(p, s.entries) for p, s in
               surgery.reconstruct_sigma(extract_relevant(torus_v(2, 3), 1), p_hint=5)]
    seen = {0: set(), 1: set()}
    for vals in _small_vsequences(10):
        v = VSequence(vals)
        for r in range(2, 9):
            for parity in ("odd", "even"):
                view = extract_relevant(v, r, parity)
                if view.v0 <= 1:
                    seen[view.v0].update((r, s.entries) for _, s in surgery.reconstruct_sigma(view))
    want0 = {(2, (1,))}
    want1 = {(2, (1, 1)), (2, (1, 1, 1)), (3, (1,)), (4, (1,))}
    ok = trefoil == [(5, (2, 1))] and seen[0] == want0 and seen[1] == want1
    record(8, "trefoil r=1 gives exactly (5,(2,1)); low V_0 shapes match the listed cases", ok,
           f"trefoil {trefoil}, V_0=0 {sorted(seen[0])}, V_0=1 {sorted(seen[1])}")


def test_criterion_09_realization():
    missing, unverified = [], 0
    for m in range(2, 13):
        found = lattice.realize(Changemaker((1,) * m))
        if (m, m - 1) not in [(r.p, r.q) for r in found]:
            missing.append(m)
        unverified += sum(not r.certificate.verify() for r in found)
    found = lattice.realize(Changemaker((2, 1)))
    ok = not missing and not unverified and (5, 1) in [(r.p, r.q) for r in found]
    ok = ok and all(r.certificate.verify() for r in found)
    record(9, "all-ones vectors realize L(m,m-1) for m=2..12 and (2,1) realizes L(5,1)", ok,
           f"missing {missing}, unverified certificates {unverified}")


def test_criterion_10_e8():
    roots = e8.e8_roots()
    ok = len(set(roots)) == 240 and all(r.norm == -2 for r in roots)
    sizes = []
    for k in range(4):
        m, short, Short = e8.brute_force_char_sets(k)
        ok = ok and m == e8.max_char_norm(k)
        ok = ok and short == e8.short_set(k).as_set() and Short == e8.Short_set(k).as_set()
        sizes.append(len(Short))
    rng = random.Random(1010)
    for _ in range(100):
        g, r, p = rng.randint(0, 30), rng.randint(1, 8), rng.randint(1, 60)
        threshold = 2 * g + r if p % 2 else 2 * g
        want = e8.POINCARE if r * r * p >= threshold else e8.S3
        ok = ok and e8.classify_poincare(g, r, p) == want
    record(10, "240 roots, closed forms match enumeration for k<=3, threshold on 100 triples", ok,
           f"Short sizes {sizes}")


def test_criterion_11_counting_bounds():
    over = []
    for q in range(3, 16, 2):
        rep = scan(torus_v(2, q), 4)
        over += [(q, e["r"], e["parity"]) for e in rep["results"] if not e["within_count_bound"]]
    sizes, whole = [], []
    for s in range(5, 11):
        for r in (2, 3, 4):
            syn, _ = surgery.family_view(s, r)
            sizes.append(len(surgery.family_recover_s(syn.v, "rge2")))
            whole.append(len(surgery.family_recover_all(syn.v)))
    for s in range(2, 11):
        v = VSequence([1] * (4 * s + 3))
        sizes.append(len(surgery.family_recover_s(v, "r1")))
    ok = not over and max(sizes) <= 3 and max(whole) <= 7
    record(11, "scan within count_bound for T(2,q), q<=15, r<=4; family candidate set sizes", ok,
           f"max set {max(sizes)}, max whole-family {max(whole)}" + (f", over {over}" if over else ""))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
