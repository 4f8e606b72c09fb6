"""Acceptance criteria 1-8, each printing a single PASS/FAIL line."""

import time

import pytest

from hopfgk.families import DAlgebra, LiuAlgebra, TaftAlgebra, make_family, u_product_three_case, u_product_unified
from hopfgk.hopfcore import run_axiom_suite
from hopfgk.qcomb import identity_suite
from hopfgk.structure import (
    build_quotient_Dprime,
    check_integral_Dprime,
    cocommutativity_witness,
    grading_laws,
    integral_character,
    io_im,
    tilde_subalgebra,
)

D_INSTANCES = [(3, 1), (2, 2), (4, 2), (5, 1)]
TAFT_INSTANCES = [(4, 1), (4, 2), (6, 3)]
LIU_INSTANCES = [(2, 2), (3, 1)]


def instances():
    out = [make_family("poly"), make_family("laurent"), make_family("dihedral")]
    out += [TaftAlgebra(n, t) for n, t in TAFT_INSTANCES]
    out += [LiuAlgebra(n, w) for n, w in LIU_INSTANCES]
    out += [DAlgebra(m, d) for m, d in D_INSTANCES]
    return out


def label(pres):
    p = ",".join(str(v) for v in pres.params.values())
    return f"{pres.family}({p})" if p else pres.family


def report(capsys, number, failures, elapsed, summary):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number}: {status}  {summary}  [{elapsed:.2f}s]"
    if failures:
        line += "  failures: " + "; ".join(str(f) for f in failures[:5])
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def test_criterion_1_identity_suite(capsys):
    start = time.perf_counter()
    counts: dict = {}
    failures = []
    for rep in identity_suite(range(2, 11), (1, 2, 3)):
        counts[rep.name] = counts.get(rep.name, 0) + 1
        if not rep.holds:
            failures.append(rep.describe())
    elapsed = time.perf_counter() - start
    for name in ("ce1", "ce2", "ce3-iff", "ce5", "ce6", "ce7", "kassel"):
        if not counts.get(name):
            failures.append(f"{name}: no instances generated")
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    if elapsed > 30:
        failures.append(f"runtime {elapsed:.1f}s exceeds 30s")
    report(capsys, 1, failures, elapsed, summary)


def test_criterion_2_hopf_axioms(capsys):
    start = time.perf_counter()
    failures = []
    n_checks = 0
    for pres in instances():
        for r in run_axiom_suite(pres, seed=0, samples=50, max_xdeg=3):
            n_checks += 1
            if not r.passed:
                failures.append(f"{label(pres)}: {r.name}: {r.render_detail()}")
    elapsed = time.perf_counter() - start
    if elapsed > 300:
        failures.append(f"runtime {elapsed:.1f}s exceeds 5 minutes")
    report(capsys, 2, failures, elapsed, f"{len(instances())} instances, {n_checks} check groups")


def test_criterion_3_oracle_equivalence(capsys):
    start = time.perf_counter()
    failures = []
    n = 0
    for m in range(2, 6):
        for d in (1, 2, 3):
            if ((1 + m) * d) % 2:
                continue
            D = DAlgebra(m, d)
            for i in range(m):
                for j in range(m):
                    n += 1
                    engine = D.u(i) * D.u(j)
                    if engine != u_product_three_case(D, i, j):
                        failures.append(f"D({m},{d}) u{i}u{j} vs three-case form")
                    if engine != u_product_unified(D, i, j):
                        failures.append(f"D({m},{d}) u{i}u{j} vs omission form")
    report(capsys, 3, failures, time.perf_counter() - start, f"{n} products u_i u_j")


def test_criterion_4_structure(capsys):
    start = time.perf_counter()
    failures = []
    graded = [DAlgebra(m, d) for m, d in D_INSTANCES]
    graded += [LiuAlgebra(n, w) for n, w in LIU_INSTANCES]
    graded += [TaftAlgebra(n, t) for n, t in TAFT_INSTANCES]
    for pres in graded:
        if isinstance(pres, DAlgebra):
            want = (2 * pres.m, pres.m)
        elif isinstance(pres, LiuAlgebra):
            want = (pres.n, pres.n)
        else:
            want = (pres.n, pres.n // pres.t)
        got = io_im(pres)
        if got != want:
            failures.append(f"{label(pres)}: io/im {got} != {want}")
        for r in grading_laws(pres, seed=0, samples=30):
            if not r.passed:
                failures.append(f"{label(pres)}: {r.name}: {r.render_detail()}")
    report(capsys, 4, failures, time.perf_counter() - start, f"{len(graded)} graded instances")


def test_criterion_5_quotient(capsys):
    start = time.perf_counter()
    failures = []
    for m, d, dim in [(3, 1, 18), (2, 2, 16)]:
        Q = build_quotient_Dprime(m, d)
        if Q.dimension != dim:
            failures.append(f"D'({m},{d}) dimension {Q.dimension} != {dim}")
        for r in [Q.check_associative()] + check_integral_Dprime(Q):
            if not r.passed:
                failures.append(f"D'({m},{d}): {r.name}: {r.render_detail()}")
    elapsed = time.perf_counter() - start
    if elapsed > 60:
        failures.append(f"runtime {elapsed:.1f}s exceeds 1 minute")
    report(capsys, 5, failures, elapsed, "D'(3,1) dim 18, D'(2,2) dim 16")


def test_criterion_6_even_even_part(capsys):
    start = time.perf_counter()
    failures = []
    for m, d in D_INSTANCES:
        for r in tilde_subalgebra(DAlgebra(m, d)):
            if not r.passed:
                failures.append(f"D({m},{d}): {r.name}: {r.render_detail()}")
    report(capsys, 6, failures, time.perf_counter() - start, f"{len(D_INSTANCES)} D instances")


def test_criterion_7_character(capsys):
    start = time.perf_counter()
    failures = []
    for m, d in D_INSTANCES:
        for r in integral_character(DAlgebra(m, d)):
            if not r.passed:
                failures.append(f"D({m},{d}): {r.name}: {r.render_detail()}")
    report(capsys, 7, failures, time.perf_counter() - start, f"{len(D_INSTANCES)} D instances")


def test_criterion_8_non_cocommutative(capsys):
    start = time.perf_counter()
    failures = []
    seen = []
    for m, d in D_INSTANCES:
        D = DAlgebra(m, d)
        w = cocommutativity_witness(D)
        if w is None:
            failures.append(f"D({m},{d}): no witness")
            continue
        delta = D.coproduct_monomial(w)
        if delta == delta.flip():
            failures.append(f"D({m},{d}): witness {D.render_monomial(w)} is cocommutative")
        seen.append(f"D({m},{d}):{D.render_monomial(w)}")
    report(capsys, 8, failures, time.perf_counter() - start, "witnesses " + " ".join(seen))
