"""
Dyck paths, the Mansour-Deng-Du map to 321-avoiding permutations, and the pairs of
Dyck paths counting the reduced-word basis.

Paths are strings over "u" (up) and "r" (right). A Dyck path of semilength n runs from
(0,0) to (n,n) and stays weakly above the diagonal. Where a second path is thought of
as lying below the diagonal, it is still stored in the usual above-diagonal form and
mirrored (u <-> r) on demand.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_DYCK_N = 14
MAX_TILDE_N = 10


def is_dyck(path: str) -> bool:
    height = 0
    for step in path:
        if step == "u":
            height += 1
        elif step == "r":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def _check_dyck(path: str) -> None:
    if not is_dyck(path):
        raise ValueError(f"{path!r} is not a Dyck path")


@functools.cache
def dyck_paths(n: int) -> tuple[str, ...]:
    """
    All Dyck paths of semilength n in lexicographic order ("r" < "u").

    >>> dyck_paths(2)
    ('urur', 'uurr')
    """
    if n < 0 or n > MAX_DYCK_N:
        raise ValueError(f"semilength must lie in 0..{MAX_DYCK_N}")
    out: list[str] = []

    def walk(prefix: str, ups: int, rights: int) -> None:
        if ups == n and rights == n:
            out.append(prefix)
            return
        if rights < ups:
            walk(prefix + "r", ups, rights + 1)
        if ups < n:
            walk(prefix + "u", ups + 1, rights)

    walk("", 0, 0)
    return tuple(out)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def diagonal_points(path: str) -> set[int]:
    """The i with (i,i) on the path."""
    out = {0}
    x = y = 0
    for step in path:
        if step == "u":
            y += 1
        else:
            x += 1
        if x == y:
            out.add(x)
    return out


def _heights(path: str) -> list[int]:
    # height of the path along column x, i.e. the y-coordinate of its x-th r-step
    hs = []
    y = 0
    for step in path:
        if step == "u":
            y += 1
        else:
            hs.append(y)
    return hs


def mdd(path: str) -> tuple[int, ...]:
    """
    Reduced word (list of generator indices) of the 321-avoiding permutation attached to
    a Dyck path by repeatedly peeling the zigzag strip of the rightmost essential cell.

    >>> mdd("uurr")
    (1,)
    """
    return tuple(i for factor in mdd_factors(path) for i in factor)


def mdd_factors(path: str) -> list[tuple[int, ...]]:
    """The strip factors of mdd(path), in product order."""
    _check_dyck(path)
    hs = _heights(path)
    n = len(hs)
    factors = []
    while True:
        # Essential points sit strictly inside an up-run of length >= 2; the rightmost
        # column with such a run holds the rightmost essential cell (take its top one).
        col, prev = -1, 0
        for x in range(n):
            if hs[x] - prev >= 2:
                col = x
            prev = hs[x]
        if col < 0:
            break
        labels = []
        x = col
        while x < n and hs[x] >= x + 2:
            labels.append(hs[x] - 1)
            hs[x] -= 1
            x += 1
        factors.append(tuple(range(max(labels), min(labels) - 1, -1)))
    return factors[::-1]


@functools.cache
def _mdd_table(n: int) -> dict[tuple[int, ...], str]:
    return {mdd(p): p for p in dyck_paths(n)}


def mdd_inverse(word: Sequence[int], n: int) -> str:
    """The Dyck path whose MDD word is `word`."""
    try:
        return _mdd_table(n)[tuple(word)]
    except KeyError:
        raise ValueError(f"{list(word)} is not an MDD word for n={n}") from None


def support(word: Sequence[int]) -> frozenset[int]:
    return frozenset(word)


# Permutation helpers (used as an independent oracle in tests and for reporting)


def permutation_of(word: Sequence[int], n: int) -> tuple[int, ...]:
    """One-line notation of the product of adjacent transpositions s_i = (i, i+1)."""
    perm = list(range(1, n + 1))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def avoids_321(perm: Sequence[int]) -> bool:
    # a 321 pattern exists iff some entry has a larger entry before it and a smaller after it
    k = len(perm)
    for j in range(k):
        if any(perm[i] > perm[j] for i in range(j)) and any(perm[l] < perm[j] for l in range(j + 1, k)):
            return False
    return True


# Pairs of Dyck paths


def _forced_points(p: str) -> frozenset[int]:
    n = len(p) // 2
    on = diagonal_points(p)
    need = set()
    for i in range(n + 1):
        if i not in on:
            need.update((i, i - 1))
    return frozenset(need)


@functools.cache
def tilde_dyck(n: int) -> tuple[tuple[str, str], ...]:
    """
    Pairs (P, Q) of Dyck paths such that (i,i) off P forces (i,i) and (i-1,i-1) onto Q.

    >>> tilde_dyck(2)
    (('urur', 'urur'), ('urur', 'uurr'), ('uurr', 'urur'))
    """
    if n < 1 or n > MAX_TILDE_N:
        raise ValueError(f"n must lie in 1..{MAX_TILDE_N}")
    paths = dyck_paths(n)
    by_points: dict[frozenset[int], list[str]] = {}
    for q in paths:
        by_points.setdefault(frozenset(diagonal_points(q)), []).append(q)
    out = []
    for p in paths:
        need = _forced_points(p)
        for points, qs in by_points.items():
            if need <= points:
                out.extend((p, q) for q in qs)
    out.sort()
    return tuple(out)


def in_tilde(p: str, q: str) -> bool:
    return _forced_points(p) <= diagonal_points(q)


def lattice_paths(n: int) -> list[str]:
    """Paths from (0,1) to (n,n): n r-steps and n-1 u-steps, lexicographic."""
    out = []
    for ups in itertools.combinations(range(2 * n - 1), n - 1):
        chosen = set(ups)
        out.append("".join("u" if k in chosen else "r" for k in range(2 * n - 1)))
    out.sort()
    return out


def _mirror(path: str) -> str:
    return path.translate(str.maketrans("ur", "ru"))


def _components(path: str) -> list[tuple[int, int, str]]:
    """Split a Dyck path at its diagonal returns: (start, end, steps) for each piece."""
    out = []
    start = 0
    x = y = 0
    begin = 0
    for k, step in enumerate(path):
        if step == "u":
            y += 1
        else:
            x += 1
        if x == y:
            out.append((start, x, path[begin : k + 1]))
            start, begin = x, k + 1
    return out


def squiggly_lines(p: str) -> list[tuple[int, int]]:
    """Maximal runs P_{i,j} = (ur)^(j-i) with i >= 1."""
    out: list[tuple[int, int]] = []
    for start, end, steps in _components(p):
        if steps == "ur" and start >= 1:
            if out and out[-1][1] == start:
                out[-1] = (out[-1][0], end)
            else:
                out.append((start, end))
    return out


def _segment(path: str, i: int, j: int) -> str:
    """Steps of a path between its diagonal points i and j."""
    # both endpoints must be on the diagonal; the prefix up to (i,i) has 2i steps
    return path[2 * i : 2 * j]


def phi(p: str, q: str) -> str:
    """
    Bijection from the pairs in tilde_dyck(n) to paths from (0,1) to (n,n).

    Each maximal squiggly line P_{i,j} is replaced by Q_{i-1,j} (seen below the
    diagonal) with its first and last steps removed, shifted up by one; finally the first
    u-step of P is dropped.

    >>> phi("urur", "urur")
    'rur'
    """
    _check_dyck(p)
    _check_dyck(q)
    if len(p) != len(q):
        raise ValueError("paths must have the same semilength")
    if not in_tilde(p, q):
        raise ValueError(f"({p}, {q}) violates the diagonal condition")
    below = _mirror(q)
    qpoints = diagonal_points(q)
    out = []
    pos = 0
    for i, j in squiggly_lines(p):
        assert i - 1 in qpoints and j in qpoints
        out.append(p[pos : 2 * i])
        out.append(_segment(below, i - 1, j)[1:-1])
        pos = 2 * j
    out.append(p[pos:])
    return "".join(out)[1:]


def phi_inverse(path: str) -> tuple[str, str]:
    """Inverse of phi: recover (P, Q) from a path from (0,1) to (n,n)."""
    n = path.count("r")
    if path.count("u") != n - 1 or set(path) - {"u", "r"}:
        raise ValueError(f"{path!r} is not a path from (0,1) to (n,n)")
    # (x, y) is the current point; walk the first P-component up to the diagonal
    x, y = 0, 1
    k = 0
    steps = len(path)

    def advance(step: str) -> None:
        nonlocal x, y
        if step == "u":
            y += 1
        else:
            x += 1

    p_parts = ["u"]
    while True:
        advance(path[k])
        p_parts.append(path[k])
        k += 1
        if x == y:
            break
    regions: list[tuple[int, int, str]] = []
    while k < steps:
        if path[k : k + 2] == "uu":
            # a P-component that is not (ur): copy until the next diagonal return
            while True:
                advance(path[k])
                p_parts.append(path[k])
                k += 1
                if x == y:
                    break
        else:
            start = x
            begin = k
            while True:
                advance(path[k])
                k += 1
                if x == y and (k == steps or path[k : k + 2] == "uu"):
                    break
            regions.append((start, x, path[begin:k]))
            p_parts.append("ur" * (x - start))
    p = "".join(p_parts)
    below = ["ru"] * n
    for i, j, seg in regions:
        below[i - 1 : j] = ["r" + seg + "u"] + [""] * (j - i)
    q = _mirror("".join(below))
    if not (is_dyck(p) and is_dyck(q) and len(p) == len(q) == 2 * n):
        raise ValueError(f"{path!r} does not decode to a pair of Dyck paths")
    return p, q


# Reduced words and counts


@functools.cache
def reduced_pairs(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """
    (D-part, U-part) index words of the reduced-word basis: pairs of MDD words with
    D_i in the first forbidding U_i and U_(i-1) in the second.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    words = [mdd(p) for p in dyck_paths(n)]
    groups: dict[int, list[tuple[int, ...]]] = {}
    for w in words:
        mask = 0
        for i in w:
            mask |= 1 << i
        groups.setdefault(mask, []).append(w)
    out = []
    for d in words:
        forbid = 0
        for i in d:
            forbid |= (1 << i) | (1 << (i - 1))
        for mask, us in groups.items():
            if not mask & forbid:
                out.extend((d, u) for u in us)
    return tuple(out)


@dataclass(frozen=True)
class Counts:
    n: int
    catalan: int
    tilde: int
    reduced: int
    binom: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.catalan, self.tilde, self.reduced, self.binom)

    @property
    def consistent(self) -> bool:
        return self.tilde == self.reduced == self.binom


def counts(n: int) -> Counts:
    from .algebra import reduced_words

    if n < 1 or n > 8:
        raise ValueError("counts supports 1 <= n <= 8")
    return Counts(n, catalan(n), len(tilde_dyck(n)), len(reduced_words(n)), math.comb(2 * n - 1, n))


def iter_roundtrip_failures(n: int) -> Iterator[str]:
    """Yield a description of every phi/phi_inverse mismatch for semilength n."""
    images = set()
    for p, q in tilde_dyck(n):
        img = phi(p, q)
        images.add(img)
        if phi_inverse(img) != (p, q):
            yield f"phi_inverse(phi({p}, {q})) = {phi_inverse(img)}"
    for path in lattice_paths(n):
        if path not in images:
            yield f"{path} is not in the image of phi"
        else:
            p, q = phi_inverse(path)
            if phi(p, q) != path:
                yield f"phi(phi_inverse({path})) = {phi(p, q)}"
