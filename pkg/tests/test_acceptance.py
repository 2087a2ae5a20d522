"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from hirzebruch.arrangement import LineArrangement, NonGenericArrangement, arrangement_monodromy_factorization, critical_data, pencil
from hirzebruch.braids import BraidWord, FreeWord, are_equal, artin_action, exponent_sum, full_twist
from hirzebruch.degeneration import build_complex, counts
from hirzebruch.factorization import degree_audit, verify_product_is_full_twist
from hirzebruch.invariants import (
    SurfaceParams,
    c1sq_expanded_bracket,
    c1sq_factored_bracket,
    c2_expanded_bracket,
    c2_factored_bracket,
    chern_Y,
    chern_k0,
    chern_k1,
    classify,
    equal_chern_pair,
    galois_chern,
    general_type_table,
    branch_invariants,
    hirzebruch_data,
    positive_signature_table,
    signature,
    spin_table,
    veronese_chern,
)
from hirzebruch.regeneration import audit_modes, regenerated_factorization, select_three_point_mode


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail="", extra=()):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
            for line in extra:
                print(f"    {line}")
    return emit


def test_criterion_1_braid_axioms(report):
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 9):
        s = [BraidWord.generator(n, i) for i in range(1, n)]
        D = full_twist(n)
        for i in range(n - 1):
            for j in range(n - 1):
                if abs(i - j) >= 2 and not are_equal(s[i] * s[j], s[j] * s[i]):
                    failures.append(("commute", n, i, j))
            if i + 1 < n - 1 and not are_equal(s[i] * s[i + 1] * s[i], s[i + 1] * s[i] * s[i + 1]):
                failures.append(("braid", n, i))
            if not are_equal(D * s[i], s[i] * D):
                failures.append(("central", n, i))
        if exponent_sum(D) != n * (n - 1):
            failures.append(("degree", n))
        d = FreeWord.boundary(n)
        for j in range(1, n + 1):
            x = FreeWord.generator(n, j)
            if artin_action(D, x) != d * x * d.inverse():
                failures.append(("action", n, j))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 10
    report(1, ok, f"n<=8, {len(failures)} failures, {dt:.2f}s")
    assert ok, failures


def _random_arrangement(rng, p, concurrent):
    while True:
        x0, y0 = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        rows = []
        for j, m in enumerate(rng.sample(range(-9, 10), p)):
            m = Fraction(m, rng.randint(1, 3))
            b = y0 - m * x0 if j < concurrent else Fraction(rng.randint(-20, 20), rng.randint(1, 4))
            rows.append((m, b))
        try:
            arr = LineArrangement(tuple(rows))
            critical_data(arr)
        except NonGenericArrangement:
            continue
        return arr


def test_criterion_2_line_arrangements(report):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    cases = [pencil(p) for p in range(2, 7)]
    for i in range(25):
        p = rng.randint(2, 8)
        cases.append(_random_arrangement(rng, p, rng.choice((0, 0, 3, 4)) if p >= 4 else 0))
    results = [verify_product_is_full_twist(arrangement_monodromy_factorization(a)) for a in cases]
    dt = time.perf_counter() - t0
    ok = all(results) and len(cases) >= 20 and dt < 60
    report(2, ok, f"{sum(results)}/{len(cases)} products equal the full twist, {dt:.2f}s")
    assert ok


def test_criterion_3_degeneration_counts(report):
    bad = []
    for k in (0, 1, 2):
        for a in range(1, 11):
            for b in range(1, 11):
                c = build_complex(k, a, b)
                planes, lines, verts = counts(c)
                if planes != 2 * a * b + k * b * b:
                    bad.append((k, a, b, "planes"))
                if k != 1:
                    continue
                if 2 * lines != 6 * a * b - 2 * a - 3 * b + 3 * b * b:
                    bad.append((a, b, "lines"))
                if verts != b * (b + 1) // 2 + (a + 1) * (b + 1):
                    bad.append((a, b, "vertices"))
                sv = c.special_vertices()
                if sorted(sv.values()) != sorted({1, c.m0 + b, c.nu0 - b, c.nu0}):
                    bad.append((a, b, "special"))
    report(3, not bad, f"1<=a,b<=10, {len(bad)} mismatches")
    assert not bad


def test_criterion_4_regeneration_audit(report):
    triples = [(1, 1, 1), (1, 1, 2), (1, 2, 2)]
    complexes = [build_complex(*t) for t in triples]
    mode = select_three_point_mode(complexes)
    lines = []
    for t, c in zip(triples, complexes):
        rs = {r.mode: r.residual for r in audit_modes(c)}
        lines.append(f"{t}: residual literal={rs['literal']} cubed={rs['cubed']}")
    residuals = [degree_audit(regenerated_factorization(c, mode or "cubed")).residual for c in complexes]
    ok = mode is not None and all(r == 0 for r in residuals)
    report(4, ok, f"selected mode {mode}, residuals {residuals}", extra=["discrepancy report:"] + lines)
    assert ok


def test_criterion_5_chern_identities(report):
    t0 = time.perf_counter()
    bad = []
    for k in range(7):
        for a in range(1, 9):
            for b in range(1, 9):
                p = SurfaceParams(k, a, b)
                c = chern_Y(p)
                if c1sq_expanded_bracket(k, a, b) != c1sq_factored_bracket(k, a, b):
                    bad.append((p, "c1 forms"))
                if c2_expanded_bracket(k, a, b) != c2_factored_bracket(k, a, b):
                    bad.append((p, "c2 forms"))
                if c != galois_chern(*hirzebruch_data(p)):
                    bad.append((p, "pipeline"))
                if signature(p).coeff != (c.c1sq_coeff - 2 * c.c2_coeff) / 3:
                    bad.append((p, "signature"))
                if k == 0 and c != chern_k0(a, b):
                    bad.append((p, "k=0"))
                if k == 1 and c != chern_k1(a, b):
                    bad.append((p, "k=1"))
    for b in range(1, 9):
        if chern_Y((1, 0, b)) != veronese_chern(b):
            bad.append((b, "veronese"))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5
    report(5, ok, f"{len(bad)} mismatches, {dt:.2f}s")
    assert ok, bad


def test_criterion_6_equal_chern_pairs(report):
    pairs = [(s, t) for s in range(1, 10, 2) for t in range(1, 10, 2) if gcd(s, t) == 1]
    bad = []
    for s, t in pairs:
        r = equal_chern_pair(s, t)
        expect = 4 * s * t + 4 * t * t - 2
        if not (r.chern_equal and r.pi1_first.trivial and r.pi1_second.torsion_order == 2
                and r.pi1_second.rank == expect):
            bad.append((s, t))
    report(6, not bad, f"{len(pairs)} pairs, {len(bad)} failures")
    assert not bad


def test_criterion_7_classification(report):
    bad = {"spin": 0, "general type": 0, "signature": 0}
    literal_bad = 0
    for k in range(11):
        for a in range(1, 21):
            for b in range(1, 21):
                m = branch_invariants((k, a, b)).m
                bad["spin"] += spin_table(k, a, b) != (m % 4 != 0)
                bad["general type"] += general_type_table(k, a, b) != (m > 6)
                pos = signature((k, a, b)).sign > 0
                bad["signature"] += pos != positive_signature_table(k, a, b)
                literal_bad += pos != positive_signature_table(k, a, b, literal=True)
    ok = not any(bad.values())
    report(7, ok, f"mismatches {bad}",
           extra=[f"rows read literally (no k=0 mirror, k>=4 only at a=1): {literal_bad} signature mismatches"])
    assert ok


def test_criterion_8_classification_examples(report):
    lines, ok = [], True
    for t, want in [((0, 7, 4), 0), ((1, 5, 4), 0), ((2, 3, 4), 0), ((3, 1, 4), 0)] + [((1, 3, b), 1) for b in range(5, 9)]:
        c = classify(t)
        good = c.simply_connected and c.general_type and c.spin and c.signature_sign == want
        ok &= good
        lines.append(f"{t}: sc={c.simply_connected} gt={c.general_type} spin={c.spin} "
                     f"tau_sign={c.signature_sign} m={c.m} {'ok' if good else 'MISMATCH'}")
    report(8, ok, "", extra=lines)
    assert ok
