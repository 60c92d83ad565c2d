"""
Words in the letters U_i, D_i modulo the interchange law.

Letters are encoded as small integers: D_i is 2*i and U_i is 2*i + 1. Integer order is
then the letter order used for canonical forms (index first, D before U). Two letters
commute exactly when their indices differ by at least two, so a word up to
interchange is an element of a trace monoid and its canonical representative is the
lexicographically least word in its class.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Letter = int
Monomial = tuple[int, ...]

D, U = 0, 1


def letter(kind: str, index: int) -> Letter:
    if kind not in ("D", "U"):
        raise ValueError(f"unknown letter kind {kind!r}")
    if index < 1:
        raise ValueError(f"letter index must be positive, got {index}")
    return 2 * index + (kind == "U")


def index_of(a: Letter) -> int:
    return a >> 1


def is_up(a: Letter) -> bool:
    return bool(a & 1)


def kind_of(a: Letter) -> str:
    return "U" if a & 1 else "D"


def commute(a: Letter, b: Letter) -> bool:
    return abs((a >> 1) - (b >> 1)) >= 2


def dependent(a: Letter, b: Letter) -> bool:
    return abs((a >> 1) - (b >> 1)) <= 1


def check_range(n: int, raw: Iterable[Letter]) -> None:
    for a in raw:
        if not 1 <= a >> 1 <= n - 1:
            raise ValueError(f"letter {format_letter(a)} out of range for n={n}")


def canonicalize(n: int | None, raw: Sequence[Letter]) -> Monomial:
    """
    Lexicographically least word in the interchange class of `raw`.

    >>> format_word(canonicalize(5, parse_word("U4 D2 U1")))
    'U1 D2 U4'
    """
    if n is not None:
        check_range(n, raw)
    return _canon(tuple(raw))


def _canon(w: Monomial) -> Monomial:
    k = len(w)
    if k < 2:
        return w
    if _is_least(w):
        return w
    # Greedy: repeatedly emit the smallest letter with no pending dependent predecessor.
    pending = list(range(k))
    out = []
    while pending:
        best = -1
        for j, p in enumerate(pending):
            a = w[p]
            if best >= 0 and a >= w[pending[best]]:
                continue
            ia = a >> 1
            blocked = False
            for r in pending[:j]:
                if abs((w[r] >> 1) - ia) <= 1:
                    blocked = True
                    break
            if not blocked:
                best = j
        out.append(w[pending.pop(best)])
    return tuple(out)


def _is_least(w: Monomial) -> bool:
    # w is least iff no letter can slide left past a commuting block to land before a larger letter.
    for p in range(1, len(w)):
        a = w[p]
        ia = a >> 1
        q = p - 1
        while q >= 0 and abs((w[q] >> 1) - ia) >= 2:
            if w[q] > a:
                return False
            q -= 1
    return True


def is_canonical(w: Sequence[Letter]) -> bool:
    return _canon(tuple(w)) == tuple(w)


# Dependence poset


def dependence_masks(w: Sequence[Letter]) -> tuple[list[int], list[int]]:
    """
    For each position p, bitmasks of positions strictly below and strictly above p in
    the dependence order (transitive closure of "earlier and dependent").
    """
    k = len(w)
    below = [0] * k
    for p in range(k):
        ip = w[p] >> 1
        m = 0
        for r in range(p):
            if abs((w[r] >> 1) - ip) <= 1:
                m |= below[r] | (1 << r)
        below[p] = m
    above = [0] * k
    for p in range(k):
        m = below[p]
        bit = 1 << p
        while m:
            low = m & -m
            above[low.bit_length() - 1] |= bit
            m ^= low
    return below, above


@dataclass(frozen=True)
class Occurrence:
    """Positions of m carrying the pattern letters, listed in pattern order."""

    positions: tuple[int, ...]

    @property
    def selected(self) -> tuple[int, ...]:
        return tuple(sorted(self.positions))


def occurrences(m: Sequence[Letter], pattern: Sequence[Letter], masks=None) -> list[Occurrence]:
    """
    All ways of factoring m as a * pattern * b up to interchange.

    >>> occurrences(parse_word("D1 U1"), parse_word("U1 D1"))
    []
    """
    if not pattern:
        raise ValueError("pattern must be nonempty")
    m = tuple(m)
    k = len(pattern)
    if k > len(m):
        return []
    spots = []
    for a in pattern:
        s = [p for p, b in enumerate(m) if b == a]
        if not s:
            return []
        spots.append(s)
    below, above = masks if masks is not None else dependence_masks(m)
    found = []
    chosen = [0] * k

    def extend(j: int, used: int) -> None:
        if j == k:
            if _convex(used, below, above):
                found.append(Occurrence(tuple(chosen)))
            return
        a = pattern[j]
        ia = a >> 1
        for p in spots[j]:
            if used >> p & 1:
                continue
            ok = True
            for r in range(j):
                if abs((pattern[r] >> 1) - ia) <= 1 and chosen[r] > p:
                    ok = False
                    break
            if ok:
                chosen[j] = p
                extend(j + 1, used | (1 << p))

    extend(0, 0)
    return found


def _convex(sel: int, below: list[int], above: list[int]) -> bool:
    down = 0
    up = 0
    m = sel
    while m:
        low = m & -m
        p = low.bit_length() - 1
        down |= below[p]
        up |= above[p]
        m ^= low
    return (down & up & ~sel) == 0


def split_around(m: Sequence[Letter], occ: Occurrence, masks=None) -> tuple[Monomial, Monomial]:
    """Return (a, b) with m equal to a * pattern * b up to interchange."""
    below, _ = masks if masks is not None else dependence_masks(m)
    sel = 0
    down = 0
    for p in occ.positions:
        sel |= 1 << p
        down |= below[p]
    down &= ~sel
    a = tuple(x for p, x in enumerate(m) if down >> p & 1)
    b = tuple(x for p, x in enumerate(m) if not ((down | sel) >> p & 1))
    return a, b


def interchange_class(m: Sequence[Letter], cap: int = 10_000) -> set[Monomial]:
    """Every word reachable from m by swapping adjacent commuting letters."""
    start = tuple(m)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for p in range(len(w) - 1):
            if commute(w[p], w[p + 1]) and w[p] != w[p + 1]:
                v = w[:p] + (w[p + 1], w[p]) + w[p + 2 :]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise OverflowError(f"interchange class exceeds cap {cap}")
                    stack.append(v)
    return seen


def shift(m: Sequence[Letter], by: int) -> Monomial:
    return tuple(a + 2 * by for a in m)


def all_letters(n: int) -> list[Letter]:
    return [2 * i + k for i in range(1, n) for k in (D, U)]


def canonical_words(n: int, max_len: int) -> Iterator[Monomial]:
    """All canonical monomials of length <= max_len, by length then lexicographically."""
    letters = all_letters(n)
    layer: list[Monomial] = [()]
    for length in range(max_len + 1):
        yield from layer
        if length == max_len:
            break
        nxt = []
        for w in layer:
            for a in letters:
                v = w + (a,)
                if _canon(v) == v:
                    nxt.append(v)
        layer = nxt


# Text and JSON forms

_TOKEN = re.compile(r"^([UD])(\d+)$")


def parse_letter(token: str) -> Letter:
    match = _TOKEN.match(token.strip())
    if not match:
        raise ValueError(f"bad letter token {token!r}")
    return letter(match.group(1), int(match.group(2)))


def parse_word(text: str) -> Monomial:
    text = text.strip()
    if text in ("", "1"):
        return ()
    return tuple(parse_letter(tok) for tok in text.replace("*", " ").split())


def format_letter(a: Letter) -> str:
    return f"{kind_of(a)}{index_of(a)}"


def format_word(w: Sequence[Letter]) -> str:
    if not w:
        return "1"
    return " ".join(format_letter(a) for a in w)


def word_to_json(w: Sequence[Letter]) -> list[list]:
    return [[kind_of(a), index_of(a)] for a in w]


def word_from_json(data: Sequence[Sequence]) -> Monomial:
    return tuple(letter(str(k), int(i)) for k, i in data)
