import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looph import rep
from looph.algebra import Element, reduced_words
from looph.coeff import ONE, Scalar, x_power
from looph.linalg import nullspace
from looph.rep import (
    QMatrix,
    commutant,
    commutant_dim,
    e_asymmetry_witness,
    highest_weight_vectors,
    psi,
    psi_monomial,
    psi_rho,
    psi_sigma,
    rcheck,
    rcheck_block_explicit,
    rcheck_block_from_definition,
    scheck,
    scheck_block_explicit,
    scheck_block_from_definition,
    structure_report,
    uq_action,
)
from looph.word import all_letters, canonicalize

q = Scalar.gen()
qi = x_power(-1)


def idx(bits: str) -> int:
    return int(bits, 2)


def test_single_strand_action():
    f, e = uq_action("F", 1), uq_action("E", 1)
    assert f.apply({0: ONE}) == {1: ONE}
    assert f.apply({1: ONE}) == {}
    assert e.apply({1: ONE}) == {0: ONE}
    assert e.apply({0: ONE}) == {}


def test_two_strand_f_by_hand():
    # F (v0 v0) = F v0 (x) v0 + K^-1 v0 (x) F v0 = v1 v0 + q^-1 v0 v1
    f = uq_action("F", 2)
    assert f.apply({idx("00"): ONE}) == {idx("10"): ONE, idx("01"): qi}
    # F (v1 v0) = 0 + (-1) K^-1 v1 (x) F v0, with K^-1 v1 = q^-1 v1
    assert f.apply({idx("10"): ONE}) == {idx("11"): -qi}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_quantum_group_relations(n):
    for label, ok in rep.uq_relations(n):
        assert ok, label


def test_cartan_part_is_diagonal():
    n = 3
    for b in range(2**n):
        mu1, mu2 = rep.weight(b, n)
        assert uq_action("K1", n).entry(b, b) == q**mu1
        assert uq_action("K2", n).entry(b, b) == q**mu2
        assert uq_action("K", n).entry(b, b) == q**n


def test_braiding_blocks():
    # frozen from the explicit matrices converted to the plain basis 00, 01, 10, 11
    r = rcheck_block_explicit()
    assert r == rcheck_block_from_definition()
    assert r.entry(0, 0) == q
    assert r.entry(2, 1) == 1
    assert r.entry(1, 2) == 1
    assert r.entry(2, 2) == q - qi
    assert r.entry(3, 3) == -qi
    s = scheck_block_explicit()
    assert s == scheck_block_from_definition()
    assert s * s == QMatrix.identity(4)
    assert s.entry(1, 2) == qi and s.entry(2, 1) == q and s.entry(3, 3) == -1


def test_braid_and_mixed_relations():
    r1, r2, s1, s2 = rcheck(1, 3), rcheck(2, 3), scheck(1, 3), scheck(2, 3)
    assert r1 * r2 * r1 == r2 * r1 * r2
    assert s1 * s2 * s1 == s2 * s1 * s2
    assert s1 * r2 * r1 == r2 * r1 * s2
    assert r1 * s2 * s1 == s2 * s1 * r2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quadratic_relations(n):
    ident = QMatrix.identity(2**n)
    for i in range(1, n):
        s, r = psi_sigma(i, n), psi_rho(i, n)
        assert r * r == ident
        assert ((s - 1) * (s + x_power(-2))).is_zero()


def test_two_strand_example():
    u, d = psi_monomial((3,), 2), psi_monomial((2,), 2)
    assert (d * u).is_zero()
    assert u * d == u + d - 1
    assert all(rep.hecke_factor_example().values())


words3 = st.lists(st.sampled_from(all_letters(3)), max_size=7).map(lambda w: canonicalize(None, w))
words4 = st.lists(st.sampled_from(all_letters(4)), max_size=7).map(lambda w: canonicalize(None, w))


@given(words3)
@settings(max_examples=120, deadline=None)
def test_normal_forms_hold_in_the_faithful_representation_n3(m):
    # the product of letter matrices must equal the image of the normal form
    assert psi_monomial(m, 3) == psi(Element(3, {m: 1}))


@given(words4)
@settings(max_examples=80, deadline=None)
def test_normal_forms_hold_in_the_faithful_representation_n4(m):
    assert psi_monomial(m, 4) == psi(Element(4, {m: 1}))


def test_sigma_rho_words():
    assert psi("s1 r2", 3) == psi_sigma(1, 3) * psi_rho(2, 3)
    assert psi("r1 r1", 2) == QMatrix.identity(4)


def brute_commutant_dim(gens):
    size = gens[0].size
    unknowns = list(itertools.product(range(size), repeat=2))
    rows = []
    for a in gens:
        for r, c in itertools.product(range(size), repeat=2):
            row = {}
            for k in range(size):
                v = a.entry(k, c)
                if v:
                    row[(r, k)] = row.get((r, k), 0) + v
                w = a.entry(r, k)
                if w:
                    row[(k, c)] = row.get((k, c), 0) - w
            row = {u: v for u, v in row.items() if v}
            if row:
                rows.append(row)
    return len(nullspace(rows, unknowns))


@pytest.mark.parametrize("n", [2, 3])
def test_commutant_matches_brute_force(n):
    gens = rep.negative_part(n)
    assert commutant(gens)[0] == brute_commutant_dim(gens)
    full = rep.full_part(n)
    assert commutant(full)[0] == brute_commutant_dim(full)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_commutant_dimensions(n):
    assert commutant_dim(n) == math.comb(2 * n - 1, n)
    assert commutant_dim(n, with_e=True) == sum(math.comb(n - 1, l) ** 2 for l in range(n))


def test_commutant_basis_commutes():
    dim, basis = commutant(rep.negative_part(3))
    for x in basis:
        for g in rep.negative_part(3):
            assert x * g == g * x


def test_e_asymmetry_witness():
    x = e_asymmetry_witness(2)
    assert x is not None
    e = uq_action("E", 2)
    assert x * e != e * x
    assert all(x * g == g * x for g in rep.negative_part(2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_weyl(n):
    report = rep.schur_weyl_report(n)
    assert report.ok, report.failures


def test_structure_n3():
    report, record = structure_report(3)
    assert report.ok, report.failures
    assert record["peirce"] == [[1, 0, 0], [2, 4, 0], [0, 2, 1]]
    assert record["cartan"] == [[1, 0, 0], [1, 1, 0], [0, 1, 1]]
    assert (record["dim"], record["rad_dim"], record["ss_dim"]) == (10, 4, 6)
    assert record["rad_square_zero"]


@pytest.mark.parametrize("n", [2, 4])
def test_structure_other_sizes(n):
    report, record = structure_report(n)
    assert report.ok, report.failures
    m = [math.comb(n - 1, l) for l in range(n)]
    expected = [[m[i] * m[j] if i in (j, j + 1) else 0 for j in range(n)] for i in range(n)]
    assert record["peirce"] == expected


def test_highest_weight_vectors():
    for n in (2, 3, 4):
        for l in range(n):
            vecs = highest_weight_vectors(n, l)
            assert len(vecs) == math.comb(n - 1, l)
            e = uq_action("E", n)
            assert all(e.apply(v) == {} for v in vecs)


@given(st.lists(st.sampled_from(reduced_words(3)), min_size=2, max_size=2))
@settings(max_examples=40, deadline=None)
def test_psi_is_multiplicative(pair):
    a = Element(3, {pair[0]: 1}) + Element.one(3) * x_power(1)
    b = Element(3, {pair[1]: 1})
    assert psi(a * b) == psi(a) * psi(b)


def test_qmatrix_basics():
    m = QMatrix.from_dense([[q, 1], [0, -qi]])
    assert QMatrix.from_json(m.to_json()) == m
    assert m.trace() == q - qi
    assert (m - m).is_zero()
    assert m**2 == m * m
    assert hash(m) == hash(QMatrix.from_dense([[q, 1], [0, -qi]]))
    with pytest.raises(ValueError):
        m * QMatrix.identity(3)
    assert "q" in m.format()


def test_embed_range():
    with pytest.raises(ValueError):
        rep.embed(rcheck_block_explicit(), 3, 3)
