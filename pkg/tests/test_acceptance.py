"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every criterion compares closed formulas against the brute-force poset
engine at zero tolerance (these are exact integer identities), within the
stated runtime budget.  Run with `pytest -v tests/test_acceptance.py`.
"""

import time

from dyckposet import (
    build_interval,
    contains,
    count_peakless_motzkin,
    cover_count_formula,
    covers_of,
    dyck_to_motzkin,
    generate_all,
    generate_peakless_motzkin,
    mobius,
    motzkin_to_dyck,
    parse_word,
    scan_alternating,
    scan_rank2_max,
    scan_rank3_max,
    squares_in_grid,
    staircase,
    staircase_interval_size,
    sweep_cover_count,
    triple_leq,
    triple_to_path,
    triples_in_grid,
    two_peak,
)
from dyckposet.verify import (
    SIZE_SEQUENCE,
    TABLE1,
    suite_bijections,
    suite_covercount,
    suite_delta,
    suite_mobius_closed,
    suite_s1,
    suite_sizes,
    suite_table1,
    suite_twopeak,
)

UD = staircase(1)


def _run_suite(label, suite, budget_s):
    start = time.perf_counter()
    checks = suite()
    elapsed = time.perf_counter() - start
    failures = [c for c in checks if not c.ok]
    status = "PASS" if not failures else "FAIL"
    print(f"{status} {label} ({elapsed:.2f}s)")
    for c in failures:
        print(f"     {c.name}: {c.detail}")
    assert not failures, failures
    assert elapsed < budget_s, f"{label} took {elapsed:.1f}s, budget {budget_s}s"
    return elapsed


def test_criterion_01_table1_reproduction():
    # 45 rank counts, engine and closed form, zero tolerance, < 30 s.
    assert sum(len(row) for row in TABLE1.values()) == 45
    _run_suite("criterion 1: staircase rank-count triangle", suite_table1, 30)


def test_criterion_02_size_sequence():
    assert SIZE_SEQUENCE == (1, 2, 4, 8, 16, 33, 70, 152, 337)
    _run_suite("criterion 2: staircase interval sizes", suite_sizes, 30)


def test_criterion_03_motzkin_identity():
    start = time.perf_counter()
    running = 0
    for n in range(1, 10):
        running += count_peakless_motzkin(n)
        assert running == staircase_interval_size(n)
    for n in range(9):
        for word in generate_all(n):
            assert motzkin_to_dyck(dyck_to_motzkin(word)) == word
    for length in range(13):
        for m in generate_peakless_motzkin(length):
            assert dyck_to_motzkin(motzkin_to_dyck(m)) == m
    elapsed = time.perf_counter() - start
    print(f"PASS criterion 3: Motzkin identity and roundtrips ({elapsed:.2f}s)")
    _run_suite("criterion 3b: bijection suite", suite_bijections, 30)


def test_criterion_04_two_peak_sweep():
    start = time.perf_counter()
    _run_suite("criterion 4: two-peak formula sweep", suite_twopeak, 180)
    # spot anchors on top of the sweep
    assert len(squares_in_grid(4, 6)) == 50
    model = build_interval(UD, two_peak(2, 3, 1))
    assert model.s0() == 18
    assert [model.s0_by_rank(r) for r in range(1, 7)] == [1, 2, 4, 6, 4, 1]
    elapsed = time.perf_counter() - start
    assert elapsed < 180


def test_criterion_05_h0_rank_simplification():
    from dyckposet import two_peak_rank_count, two_peak_rank_count_h0

    start = time.perf_counter()
    for a in range(1, 7):
        for b in range(a, 7):
            for r in range(2, a + b + 1):
                assert two_peak_rank_count_h0(a, b, r) == two_peak_rank_count(a, b, 0, r)
    elapsed = time.perf_counter() - start
    print(f"PASS criterion 5: flat-case rank simplification ({elapsed:.2f}s)")


def test_criterion_06_delta_classification():
    _run_suite("criterion 6a: cover-class formula", suite_delta, 120)
    _run_suite("criterion 6b: edge-count identities", suite_s1, 120)


def test_criterion_07_mobius_closed_forms():
    _run_suite("criterion 7: closed Möbius forms", suite_mobius_closed, 120)


def test_criterion_08_cover_count_formula():
    start = time.perf_counter()
    report = sweep_cover_count(7)
    elapsed = time.perf_counter() - start
    print(f"{'PASS' if report.consistent else 'FAIL'} criterion 8: "
          f"cover-count formula sweep ({elapsed:.2f}s)")
    assert report.consistent, report.witnesses
    _run_suite("criterion 8b: cover-count suite", suite_covercount, 120)


def test_criterion_09_rank2_maximum():
    start = time.perf_counter()
    for n in range(1, 5):
        report = scan_rank2_max(n)
        assert report.consistent, (n, report.summary, report.witnesses[:3])
        assert report.summary["observed_max"] == n * n
    elapsed = time.perf_counter() - start
    print(f"PASS criterion 9: rank-2 maximum scan n <= 4 ({elapsed:.2f}s)")


def test_criterion_10_conjecture_scans():
    # Report-level: a violation would be a finding to surface, not a test
    # failure; the scans must complete and their verdicts are printed.
    start = time.perf_counter()
    alternating = scan_alternating(6)
    print(f"criterion 10: alternating scan verdict = {alternating.verdict} "
          f"({alternating.summary})")
    if not alternating.consistent:
        print("     witnesses:", alternating.witnesses[:5])
    rank3_verdicts = []
    for n in range(1, 4):
        report = scan_rank3_max(n)
        rank3_verdicts.append(report.verdict)
        print(f"criterion 10: rank-3 scan n={n} verdict = {report.verdict} "
              f"({report.summary})")
        if not report.consistent:
            print("     witnesses:", report.witnesses[:5])
    elapsed = time.perf_counter() - start
    print(f"PASS criterion 10: conjecture scans completed ({elapsed:.2f}s)")
    assert elapsed < 600
    assert alternating.verdict in ("consistent", "violated")
    assert all(v in ("consistent", "violated") for v in rank3_verdicts)


def test_criterion_11_property_suites():
    start = time.perf_counter()

    # containment is a partial order (semilength <= 6)
    words = [w for n in range(1, 7) for w in generate_all(n)]
    up = {w: frozenset(v for v in words if contains(w, v)) for w in words}
    for w in words:
        assert w in up[w]
    for p in words:
        for q in words:
            if p.semilength == q.semilength and p != q:
                assert not contains(p, q)
    for p in words:
        for q in up[p]:
            assert up[q] <= up[p]

    # Möbius column sums vanish on materialized intervals
    for bottom, top in [
        (UD, staircase(6)),
        (UD, two_peak(3, 3, 1)),
        (parse_word("UUDD"), parse_word("UUDUDUDD")),
        (parse_word("UDUD"), staircase(6)),
    ]:
        model = build_interval(bottom, top)
        table = model.mobius_table()
        elements = list(model.elements())
        for x in elements:
            if x != bottom:
                assert sum(table[z] for z in elements if contains(z, x)) == 0

    # triple order transports containment on the 5 x 5 grid
    for s in triples_in_grid(5, 5):
        for t in triples_in_grid(5, 5):
            assert triple_leq(s, t) == contains(triple_to_path(s), triple_to_path(t))

    # parse/render and bijection roundtrips
    for n in range(1, 9):
        for word in generate_all(n):
            assert parse_word(word.text) == word
            assert motzkin_to_dyck(dyck_to_motzkin(word)) == word

    elapsed = time.perf_counter() - start
    print(f"PASS criterion 11: property suites ({elapsed:.2f}s)")


def test_acceptance_spot_values():
    # A handful of single-value anchors, frozen from the oracle runs.
    assert mobius(UD, parse_word("UUUDUDDD")) == 0
    assert mobius(UD, parse_word("UDUUUDDD")) == 0
    assert mobius(parse_word("UUDD"), parse_word("UUDUDUDD")) == 4
    assert cover_count_formula(parse_word("UUDD")) == len(covers_of(parse_word("UUDD"))) == 5
    assert build_interval(UD, staircase(8)).s0() == 152
