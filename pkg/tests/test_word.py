import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from looph.word import (
    all_letters,
    canonical_words,
    canonicalize,
    commute,
    dependence_masks,
    format_word,
    interchange_class,
    is_canonical,
    occurrences,
    parse_word,
    shift,
    split_around,
    word_from_json,
    word_to_json,
)

LETTERS = all_letters(5)  # indices 1..4
words = st.lists(st.sampled_from(LETTERS), max_size=9).map(tuple)


def labelled_orders(w):
    """Every arrangement of the positions of w reachable by commuting swaps."""
    start = tuple(range(len(w)))
    seen = {start}
    stack = [start]
    while stack:
        order = stack.pop()
        for k in range(len(order) - 1):
            a, b = order[k], order[k + 1]
            if commute(w[a], w[b]):
                nxt = order[:k] + (b, a) + order[k + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def test_parse_format_round_trip():
    w = parse_word("U4 D2 U1")
    assert format_word(w) == "U4 D2 U1"
    assert parse_word("1") == () and format_word(()) == "1"
    assert word_from_json(word_to_json(w)) == w
    with pytest.raises(ValueError):
        parse_word("X1")
    with pytest.raises(ValueError):
        canonicalize(3, parse_word("U3"))


def test_canonical_is_least_in_class_exhaustive():
    for k in range(5):
        for w in itertools.product(LETTERS, repeat=k):
            assert canonicalize(None, w) == min(interchange_class(w))


@given(words)
@settings(max_examples=300, deadline=None)
def test_canonical_is_least_in_class(w):
    cls = interchange_class(w)
    c = canonicalize(None, w)
    assert c == min(cls)
    assert is_canonical(c)
    assert canonicalize(None, c) == c
    assert all(canonicalize(None, v) == c for v in list(cls)[:20])


@given(words)
@settings(max_examples=200, deadline=None)
def test_dependence_masks_match_all_linear_extensions(w):
    if len(w) > 7:
        w = w[:7]
    below, above = dependence_masks(w)
    orders = labelled_orders(w)
    for p in range(len(w)):
        for r in range(len(w)):
            always_before = all(o.index(r) < o.index(p) for o in orders) and r != p
            assert bool(below[p] >> r & 1) == always_before
            assert bool(above[r] >> p & 1) == always_before


def labelled_occurrences(m, pattern):
    """Oracle: position tuples that appear contiguously, in pattern order, in some rearrangement."""
    k = len(pattern)
    out = set()
    for order in labelled_orders(m):
        for p in range(len(order) - k + 1):
            window = order[p : p + k]
            if tuple(m[x] for x in window) == tuple(pattern):
                out.add(window)
    return out


PATTERNS = [parse_word(s) for s in ["U1 D1", "D1 U1", "D2 D1 D2", "U1 U2 U1", "D1 U2 D1", "U2 D1 U2 D1", "D2"]]


@given(words, st.sampled_from(PATTERNS))
@settings(max_examples=300, deadline=None)
def test_occurrences_match_labelled_rearrangements(w, pattern):
    m = canonicalize(None, w[:7])
    occs = occurrences(m, pattern)
    assert {o.positions for o in occs} == labelled_occurrences(m, pattern)
    for occ in occs:
        a, b = split_around(m, occ)
        assert canonicalize(None, a + pattern + b) == m


def test_non_convex_selection_rejected():
    # D2 sits between the U1 and D1 in the dependence order, so U1 D1 is not a factor
    m = parse_word("U1 D2 D1")
    assert occurrences(m, parse_word("U1 D1")) == []


def test_canonical_words_enumeration():
    ws = list(canonical_words(4, 3))
    assert len(ws) == len(set(ws))
    assert all(is_canonical(w) for w in ws)
    brute = {canonicalize(None, w) for k in range(4) for w in itertools.product(all_letters(4), repeat=k)}
    assert set(ws) == brute


@given(words, st.integers(0, 3))
def test_shift_commutes_with_canonical_form(w, by):
    assert canonicalize(None, shift(w, by)) == shift(canonicalize(None, w), by)


def test_interchange_class_cap():
    w = parse_word("D1 D3 D5 D7 D9 D11 D13 D15")
    with pytest.raises(OverflowError):
        interchange_class(w, cap=100)
