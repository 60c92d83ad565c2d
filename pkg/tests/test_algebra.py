import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looph import algebra
from looph.algebra import (
    Element,
    antipode_witness,
    counit,
    d_chain,
    dimension,
    generator,
    ideal_dimension,
    inverse_images,
    is_reduced,
    parse_element,
    reduced_words,
    rho,
    sigma,
    sigma_rho_image,
)
from looph.coeff import Scalar
from looph.rewrite import SAME_LABEL_RULES, is_normal
from looph.word import _canon, all_letters, canonical_words, format_word

T = Scalar.gen()


def normal_words_by_search(n):
    """Oracle: grow canonical words letter by letter, keeping only those with no redex."""
    found = {()}
    layer = [()]
    while layer:
        nxt = set()
        for w in layer:
            for a in all_letters(n):
                v = _canon(w + (a,))
                if v not in found and is_normal(v):
                    nxt.add(v)
        found |= nxt
        layer = sorted(nxt)
    return found


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_are_exactly_the_normal_words(n):
    assert set(reduced_words(n)) == normal_words_by_search(n)
    assert dimension(n) == math.comb(2 * n - 1, n)


def test_is_reduced_agrees_with_normality():
    for m in canonical_words(4, 6):
        assert is_reduced(m) == is_normal(m), format_word(m)


def test_small_bases():
    assert [format_word(w) for w in reduced_words(2)] == ["1", "D1", "U1"]
    assert len(reduced_words(3)) == 10


def elements(n):
    words = reduced_words(n)
    coeff = st.builds(
        lambda a, b, k: Scalar.from_fraction(a) * T**k + b,
        st.integers(-2, 2),
        st.integers(-2, 2),
        st.integers(0, 2),
    )
    return st.dictionaries(st.sampled_from(words), coeff, max_size=3).map(lambda d: Element(n, d))


@given(elements(3), elements(3), elements(3))
@settings(max_examples=60, deadline=None)
def test_associative_and_distributive_n3(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(elements(4), elements(4), elements(4))
@settings(max_examples=25, deadline=None)
def test_associative_n4(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(4))
@settings(max_examples=50, deadline=None)
def test_unit_and_json(a):
    one = Element.one(4)
    assert one * a == a == a * one
    assert Element.from_json(a.to_json()) == a
    assert a - a == Element.zero(4)


@given(elements(3), elements(3))
@settings(max_examples=60, deadline=None)
def test_counit_is_multiplicative(a, b):
    assert counit(a * b) == counit(a) * counit(b)


def test_parse_and_format():
    x = parse_element(3, "U1 D1")
    assert x.format() == "U1 + D1 - 1"
    # D2 (U1 D1) = D2 U1 + D2 D1 - D2 and D2 U1 = D2 + U1 - 1
    assert parse_element(3, "D2 U1 D1").format() == "D2 D1 + U1 - 1"
    y = parse_element(3, "t*D1 - 2*U2 + 1/2")
    assert y.terms[(2,)] == T
    assert y.terms[(5,)] == -2
    assert y.terms[()] == Fraction(1, 2)
    assert parse_element(3, y.format()) == y


def test_sigma_rho_images():
    for i in (1, 2):
        s, r = sigma(i, 3), rho(i, 3)
        assert r * r == Element.one(3)
        assert (s - 1) * (s + T) == Element.zero(3)
        d, u = inverse_images(i, 3)
        assert d == generator("D", i, 3) and u == generator("U", i, 3)
    assert sigma_rho_image("s1 r2 s1", 3) == sigma(1, 3) * rho(2, 3) * sigma(1, 3)


def test_specialised_parameter():
    s = sigma(1, 2, 0)
    assert s == generator("U", 1, 2)
    assert sigma(1, 2).substitute(0) == s


def test_mismatched_quotients_rejected():
    a = generator("U", 1, 3)
    b = generator("U", 1, 3, rules=SAME_LABEL_RULES)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        generator("U", 1, 4) + a


def test_coords_rejects_non_basis():
    x = Element(3, {(3, 2): 1}, normalize=False)  # U1 D1 is not reduced
    with pytest.raises(AssertionError):
        algebra.coords(x)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_presentations(n):
    report = algebra.verify_presentation_map(n)
    assert report.ok, report.failures


def test_derivation_steps():
    report = algebra.verify_derivation_steps(3)
    assert report.ok, report.failures
    assert "case 0: v1 holds modulo the free algebra" in report.notes
    assert "case t: s1 holds modulo the same-label relations" in report.notes


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quotient(n):
    for j in range(1, n):
        assert ideal_dimension([d_chain(j, n)], n) == dimension(n) - 1
    assert ideal_dimension([Element.one(n)], n) == dimension(n)
    assert algebra.verify_quotient(n, pairs=200, seed=1).ok


def test_hecke_hopf():
    for n in (3, 4):
        assert algebra.verify_hecke_hopf(n).ok
    w = antipode_witness(1, 3)
    assert w == generator("D", 2, 3) - generator("D", 1, 3) * generator("D", 2, 3)


def test_multiplication_table():
    rows = algebra.multiplication_table_csv(2).strip().splitlines()
    assert rows[0] == ",1,D1,U1"
    assert rows[3] == "U1,U1,U1 + D1 - 1,U1"


def test_random_element_is_deterministic():
    a = algebra.random_element(4, random.Random(5))
    b = algebra.random_element(4, random.Random(5))
    assert a == b
