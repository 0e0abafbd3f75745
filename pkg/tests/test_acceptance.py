"""Acceptance suite: the ten release criteria, one printed line each.

Run as `pytest tests/test_acceptance.py -v -s` to see the lines.
Quantifier radii are part of each criterion; preorder-equivalence
certificates (mutual reachability) are searched in ball(9), which is
sound at any radius.
"""

import time
from fractions import Fraction as F

import pytest

from heckecells.afun import PChecker
from heckecells.cells import DSet
from heckecells.coxeter import CoxeterSystem, WeightFunction
from heckecells.dihedral import sweep_grid
from heckecells.params import (
    critical_lines_2d,
    critical_values_1d,
    d_levels,
    triple_points,
)
from heckecells.quotient import TruncatedAlgebra, all_expansion_case_ids, verify_expansion

CERT_RADIUS = 9


def _line(n, name, ok, extra=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPT-{n:02d} {name}: {status}{' ' + extra if extra else ''}")
    assert ok, f"criterion {n} ({name}) failed: {extra}"


def test_criterion_01_dset_regression(fix245, fix246, fix246_f):
    t0 = time.time()
    ok245 = d_levels(fix245.system, fix245.weights) == {
        0: ["e"], 1: ["s", "t"], 5: ["r", "ststs"],
        6: ["rt"], 9: ["rsr"], 12: ["rsrs"],
    }
    ok246 = d_levels(fix246.system, fix246.weights) == {
        0: ["e"], 1: ["s", "t"], 2: ["r"],
        3: ["rt", "rsr"], 6: ["rsrs", "ststst"],
    }
    # the far point: published table plus the level-22 element w_rt = rt,
    # which the defining formulas force (a'(rt) = 14 + 8 = 22)
    okf = d_levels(fix246_f.system, fix246_f.weights) == {
        0: ["e"], 1: ["s"], 8: ["t"], 14: ["r"],
        22: ["rt", "tstst"], 27: ["rsr", "ststst"], 30: ["rsrs"],
    }
    dt = time.time() - t0
    _line(1, "D-set regression", ok245 and ok246 and okf and dt < 1.0,
          f"({dt:.2f}s)")


def test_criterion_02_critical_values():
    t0 = time.time()
    ok = (critical_values_1d(2, 5) == [F(1, 2), F(1), F(3, 2), F(2), F(3), F(4)]
          and critical_values_1d(4, 3) == [F(1, 3), F(1), F(4, 3), F(3, 2), F(2)])
    dt = time.time() - t0
    _line(2, "critical values 1d", ok and dt < 1.0, f"({dt:.2f}s)")


def test_criterion_03_triple_points():
    t0 = time.time()
    pts = {(p.x, p.y): set(p.symbols) for p in triple_points(2, 3)}
    ok = pts == {
        (F(2, 5), F(6, 5)): {"rw_rs", "w_rt", "sw_st"},
        (F(3, 5), F(4, 5)): {"rw_rs", "w_rt", "tw_st"},
        (F(3, 2), F(1, 2)): {"sw_rs", "w_rt", "tw_st"},
        (F(4), F(3)): {"sw_rs", "w_rt", "sw_st"},
        (F(1), F(1)): {"r", "s", "t"},
    }
    dt = time.time() - t0
    _line(3, "triple points", ok and dt < 1.0, f"({dt:.2f}s)")


def test_criterion_04_expansion_lemmas():
    t0 = time.time()
    failures = []
    for case_id in all_expansion_case_ids():
        rep = verify_expansion(case_id)
        if not rep.passed:
            failures.append((case_id, rep.failures[:1]))
    dt = time.time() - t0
    _line(4, "expansion lemmas", not failures and dt < 120,
          f"(49 subcases, {dt:.1f}s){' ' + str(failures) if failures else ''}")


def test_criterion_05_dihedral_sweeps():
    t0 = time.time()
    failures = [rep for rep in sweep_grid() if not rep.passed]
    dt = time.time() - t0
    _line(5, "dihedral sweeps", not failures and dt < 60, f"({dt:.1f}s)")


def test_criterion_06_quotient_bounds(fix245, fix246):
    t0 = time.time()
    t245 = TruncatedAlgebra(fix245.algebra, fix245.dset, 9)
    rep_b1 = t245.check_bound(6)
    witness_ok = all(
        fix245.dset.a_pred(fix245.e(xw)) == 9
        and fix245.dset.a_pred(fix245.e(yw)) == 9
        for xw, yw in rep_b1["equality_witnesses"]
    )
    rep_s1 = t245.check_strict(fix245.e("rsr"), 4)
    t246 = TruncatedAlgebra(fix246.algebra, fix246.dset, 3)
    rep_b2 = t246.check_bound(6)
    rep_s2 = t246.check_strict(fix246.e("rt"), 4)
    dt = time.time() - t0
    ok = (rep_b1["passed"] and rep_b2["passed"] and witness_ok
          and rep_s1["passed"] and rep_s2["passed"] and dt < 300)
    _line(6, "quotient bounds", ok, f"({dt:.1f}s)")


def test_criterion_07_decomposition(fix245, fix246):
    t0 = time.time()
    ok = True
    for fix in (fix245, fix246):
        for w in fix.system.ball(8):
            fix.dset.decompose(w)  # raises when not exactly one
        for entry in fix.dset.entries:
            rep = fix.dset.length_additivity_check(entry.element, 4)
            ok = ok and rep["passed"]
    dt = time.time() - t0
    _line(7, "decomposition theorem", ok and dt < 120, f"({dt:.1f}s)")


def test_criterion_08_a_attainment(fix245, fix246):
    t0 = time.time()
    records = []
    ok = True
    for fix in (fix245, fix246):
        sweep = fix.sweep(8)
        for entry in fix.dset.entries:
            value = sweep.max_deg.get(entry.element)
            radius = sweep.attain_r.get(entry.element)
            attained = value == entry.aprime and radius is not None and radius <= 8
            ok = ok and attained
            records.append(f"{entry.symbol}@R{radius}")
        for w in fix.system.ball(8):
            if sweep.max_deg.get(w, 0) > fix.dset.a_pred(w):
                ok = False
    dt = time.time() - t0
    _line(8, "a-function attainment", ok, f"({dt:.1f}s; {' '.join(records)})")


def test_criterion_09_p_suite(fix245, fix246, spherical233):
    t0 = time.time()
    ok = True
    details = []
    for name, fix in (("245", fix245), ("246", fix246)):
        chk = PChecker(fix.algebra, fix.a_pred, 6, sweep=fix.sweep(8),
                       cert_radius=CERT_RADIUS)
        for k in (1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14):
            rep = chk.check(k)
            if not rep.passed:
                ok = False
                details.append(f"{name}:P{k}")
    chk = PChecker(spherical233.algebra, spherical233.a_exact, 6)
    for k in range(1, 16):
        rep = chk.check(k)
        if not rep.passed:
            ok = False
            details.append(f"233:P{k}")
    values = sorted(set(spherical233.a_table.values()))
    if values != [0, 1, 2, 3, 6]:
        ok = False
        details.append(f"multiset {values}")
    dt = time.time() - t0
    _line(9, "P conjecture suite", ok and dt < 600,
          f"({dt:.1f}s{'; ' + ','.join(details) if details else ''})")


def test_criterion_10_classifier_consistency(fix245):
    t0 = time.time()
    loci = critical_lines_2d(2, 3)
    shared = CoxeterSystem.rank3(4, 6, 2, ball_radius_limit=18)
    ok = True
    details = []
    for rec in loci:
        x, y = rec.sample
        den = x.denominator * y.denominator
        weights = WeightFunction((int(x * den), den, int(y * den)))
        dset = DSet(shared, weights)
        d1 = dset.by_symbol[rec.d1].element
        d2 = dset.by_symbol[rec.d2].element
        if rec.critical:
            if dset.connect_witness(d1, d2, 18) is None:
                ok = False
                details.append(f"no witness {rec.d1},{rec.d2}@{rec.chamber}")
        else:
            pair = {rec.d1, rec.d2}
            singles = [s for s in pair
                       if s in ("w_rs", "w_st", "sw_rs", "sw_st")
                       and pair - {s} <= {"r", "t"}]
            for s in singles:
                if not dset.singleton_cell_certificate(dset.by_symbol[s].element):
                    ok = False
                    details.append(f"no singleton cert {s}")
    # the worked example's singleton two-sided cell
    if not fix245.dset.singleton_cell_certificate(fix245.e("ststs")):
        ok = False
        details.append("245 w_st singleton")
    dt = time.time() - t0
    _line(10, "classifier consistency", ok and dt < 120,
          f"({dt:.1f}s{'; ' + '; '.join(details) if details else ''})")
