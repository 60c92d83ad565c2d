"""
Acceptance criteria. Each test records one PASS/FAIL line; tests/conftest.py prints
them at the end of the run, and `python tests/test_acceptance.py` prints them directly.
Set LOOPH_OPT_N5=1 to include n=5 in the Schur-Weyl criterion.
"""

import math
import os
import time

import pytest

from looph import algebra, combin, rep, rewrite
from looph.algebra import Element, dimension, reduced_words
from looph.rewrite import MEASURE_STATS, is_normal, local_confluence_report, normal_form, strategy_consistency
from looph.word import canonical_words

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, started: float, limit: float, detail: str = "") -> None:
    elapsed = time.perf_counter() - started
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number:2d}: {title} ({elapsed:.1f}s, limit {limit:.0f}s){' ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_01_dimensions():
    t0 = time.perf_counter()
    got = [dimension(n) for n in range(1, 9)]
    want = [1, 3, 10, 35, 126, 462, 1716, 6435]
    ok = got == want == [math.comb(2 * n - 1, n) for n in range(1, 9)] == [math.comb(2 * n, n) // 2 for n in range(1, 9)]
    record(1, "reduced-word counts for n=1..8", ok, t0, 10, str(got))


def test_02_triple_agreement():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 8):
        ok &= len(reduced_words(n)) == len(combin.tilde_dyck(n)) == len(combin.lattice_paths(n))
        ok &= not any(True for _ in combin.iter_roundtrip_failures(n))
    record(2, "reduced words = nested Dyck pairs = lattice paths, with phi round trips, n=1..7", ok, t0, 60)


def test_03_groebner_certificate():
    t0 = time.perf_counter()
    conf = local_confluence_report(max_len=6, window=4)
    ok = conf.ok
    strategies = all(strategy_consistency(n, 10_000, seed=n) for n in range(2, 6))
    ok &= strategies
    basis = set(reduced_words(5))
    self_nf = all(normal_form(w) == {w: 1} for n in range(1, 6) for w in reduced_words(n))
    ok &= self_nf
    into_span = True
    for m in canonical_words(5, 6):
        nf = normal_form(m)
        into_span &= all(w in basis for w in nf)
    ok &= into_span
    detail = f"[{conf.summary()}; strategies={strategies}; reduced self-normal={self_nf}; words<=6 into span={into_span}]"
    record(3, "local confluence, strategy independence, normal forms in the basis", ok, t0, 600, detail)


def test_04_termination_measure():
    t0 = time.perf_counter()
    # any failure raises MeasureError; rerun the criterion-3 workload from a cold cache
    rewrite.clear_cache()
    before = MEASURE_STATS["checked"]
    failures = 0
    try:
        local_confluence_report(max_len=6, window=4)
        for n in range(2, 6):
            strategy_consistency(n, 10_000, seed=n)
        for m in canonical_words(5, 6):
            normal_form(m)
    except rewrite.MeasureError:
        failures += 1
    checked = MEASURE_STATS["checked"] - before
    record(4, "every rewriting step decreases the measure", failures == 0 and checked > 0, t0, 600, f"[{checked} steps checked]")


def test_05_presentations():
    t0 = time.perf_counter()
    reports = [algebra.verify_presentation_map(n) for n in range(2, 6)]
    reports.append(algebra.verify_derivation_steps(3))
    ok = all(r.ok for r in reports)
    record(5, "presentation maps n=2..5 and derivation identities", ok, t0, 120, "; ".join(r.summary() for r in reports))


def test_06_representation_relations():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 5):
        S = {i: rep.psi_sigma(i, n) for i in range(1, n)}
        R = {i: rep.psi_rho(i, n) for i in range(1, n)}
        ident = rep.QMatrix.identity(2**n)
        ok &= all(rel.is_zero() for _, rel in algebra.loop_relations(S, R, ident, rep.T_IMAGE, n))
    ok &= rep.rcheck_block_from_definition() == rep.rcheck_block_explicit()
    ok &= rep.scheck_block_from_definition() == rep.scheck_block_explicit()
    record(6, "loop braid and quadratic relations as matrices n=2..4, both braiding constructions agree", ok, t0, 120)


def test_07_schur_weyl():
    t0 = time.perf_counter()
    ns = [2, 3, 4] + ([5] if os.environ.get("LOOPH_OPT_N5") else [])
    ok = True
    for n in ns:
        want = math.comb(2 * n - 1, n)
        dim, basis = rep.commutant(rep.negative_part(n))
        images = [rep.psi_monomial(w, n) for w in reduced_words(n)]
        rank = rep.span_rank(images)
        ok &= dim == want == rank == rep.span_rank(images + basis)
        ok &= rep.schur_weyl_report(n).ok
    record(7, f"commutant dimension = image rank = C(2n-1,n), n={ns}", ok, t0, 600)


def test_08_structure():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 5):
        report, rec = rep.structure_report(n)
        m = [math.comb(n - 1, l) for l in range(n)]
        peirce = [[m[i] * m[j] if i in (j, j + 1) else 0 for j in range(n)] for i in range(n)]
        cartan = [[1 if i in (j, j + 1) else 0 for j in range(n)] for i in range(n)]
        ok &= report.ok
        ok &= rec["rad_square_zero"]
        ok &= rec["rad_dim"] == sum(m[l] * m[l - 1] for l in range(1, n))
        ok &= rec["ss_dim"] == sum(x * x for x in m)
        ok &= rec["peirce"] == peirce and rec["cartan"] == cartan
    record(8, "radical, semisimple part, Peirce and Cartan matrices n=2..4", ok, t0, 600)


def test_09_quotient():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 5):
        for j in range(1, n):
            ok &= algebra.ideal_dimension([algebra.d_chain(j, n)], n) == dimension(n) - 1
    ok &= all(algebra.counit_multiplicative(n, 1000, seed=n) for n in range(2, 5))
    record(9, "augmentation ideal generated by each D1..Dj, counit multiplicative", ok, t0, 120)


def test_10_hecke_hopf():
    t0 = time.perf_counter()
    ok = all(algebra.verify_hecke_hopf(n).ok for n in (3, 4))
    for n in (3, 4):
        for i in range(1, n - 1):
            w = algebra.antipode_witness(i, n)
            d_i, d_j = algebra.generator("D", i, n), algebra.generator("D", i + 1, n)
            ok &= w == -(d_i * d_j) + d_j and not w.is_zero()
    record(10, "Hecke-Hopf relations n=3,4 and antipode witness", ok, t0, 30)


def test_11_golden():
    t0 = time.perf_counter()
    ok = combin.mdd_factors("uuurrruruuruuururrrr") == [(1,), (2,), (7, 6, 5), (8, 7), (9, 8)]
    u, d = rep.psi_monomial((3,), 2), rep.psi_monomial((2,), 2)
    ok &= (d * u).is_zero()
    ok &= u * d == rep.psi(algebra.parse_element(2, "U1 + D1 - 1"))
    record(11, "MDD golden path and the two-strand identities", ok, t0, 30)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
