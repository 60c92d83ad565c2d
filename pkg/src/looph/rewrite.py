"""
The fourteen-rule rewriting system on monomials in U_i, D_i and its normal forms.

Words are read as products with the left factor first. Every rule has integer
coefficients, so normal forms of monomials are integer combinations of monomials; the
algebra module extends them linearly to arbitrary scalars.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .word import (
    Monomial,
    Occurrence,
    _canon,
    canonical_words,
    dependence_masks,
    format_word,
    occurrences,
    parse_word,
    split_around,
    word_from_json,
    word_to_json,
)

IntElement = dict[Monomial, int]


# Rules are written with relative indices: "D0 U1" means D_i U_{i+1}.
_RULE_TABLE: list[tuple[str, str, list[tuple[int, str]]]] = [
    ("R1", "D0 D0", [(1, "D0")]),
    ("R2", "D0 U0", []),
    ("R3", "U0 U0", [(1, "U0")]),
    ("R4", "U0 D0", [(1, "U0"), (1, "D0"), (-1, "")]),
    ("R5", "U1 D0", [(1, "D0 U1")]),
    ("R6", "U0 D1", []),
    ("R7", "D1 U0", [(1, "D1"), (1, "U0"), (-1, "")]),
    ("R8", "D0 D1 D0", [(1, "D1 D0")]),
    ("R9", "D1 D0 D1", [(1, "D1 D0")]),
    ("R10", "U0 U1 U0", [(1, "U1 U0")]),
    ("R11", "U1 U0 U1", [(1, "U1 U0")]),
    ("R12", "D1 D0 U1", []),
    ("R13", "D0 U1 U0", []),
    ("R14", "D1 D0 U2 U1", []),
]


def _relative(text: str, base: int) -> Monomial:
    # relative index k becomes absolute base + k
    return tuple(2 * (base + int(tok[1:])) + (tok[0] == "U") for tok in text.split())


@dataclass(frozen=True)
class Rule:
    """A rule instantiated at base index i."""

    rule_id: str
    base: int
    lhs: Monomial
    rhs: tuple[tuple[int, Monomial], ...]

    @property
    def number(self) -> int:
        return int(self.rule_id[1:])

    @property
    def span(self) -> int:
        return max(a >> 1 for a in self.lhs) - self.base

    def __str__(self) -> str:
        rhs = " + ".join(f"{c}*[{format_word(w)}]" for c, w in self.rhs) or "0"
        return f"{self.rule_id}@{self.base}: {format_word(self.lhs)} -> {rhs}"


def _instantiate(rule_id: str, lhs: str, rhs: list[tuple[int, str]], base: int) -> Rule:
    return Rule(rule_id, base, _relative(lhs, base), tuple((c, _relative(w, base)) for c, w in rhs))


def _spans() -> dict[str, int]:
    return {rid: max(int(tok[1:]) for tok in lhs.split()) for rid, lhs, _ in _RULE_TABLE}


RULE_SPANS = _spans()


def rule_instances(n: int) -> list[Rule]:
    """Every rule at every base index that keeps its letters within 1..n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for rid, lhs, rhs in _RULE_TABLE:
        for base in range(1, n - RULE_SPANS[rid]):
            out.append(_instantiate(rid, lhs, rhs, base))
    return out


_RULES_BY_BASE: dict[int, list[Rule]] = {}


def _rules_at(base: int) -> list[Rule]:
    rules = _RULES_BY_BASE.get(base)
    if rules is None:
        rules = [_instantiate(rid, lhs, rhs, base) for rid, lhs, rhs in _RULE_TABLE]
        _RULES_BY_BASE[base] = rules
    return rules


def _candidate_rules(m: Monomial, allowed: frozenset[str] | None = None) -> list[Rule]:
    """Rules whose letters all occur in m, ordered by rule number then base."""
    present = set(m)
    bases = sorted({a >> 1 for a in m})
    out = []
    for base in bases:
        for rule in _rules_at(base):
            if allowed is not None and rule.rule_id not in allowed:
                continue
            if all(a in present for a in rule.lhs):
                out.append(rule)
    out.sort(key=lambda r: (r.number, r.base))
    return out


@dataclass(frozen=True)
class Redex:
    rule: Rule
    occurrence: Occurrence

    @property
    def selected(self) -> tuple[int, ...]:
        return self.occurrence.selected


def redexes(m: Monomial, masks=None) -> list[Redex]:
    """All rule occurrences in a canonical monomial."""
    if masks is None:
        masks = dependence_masks(m)
    out = []
    for rule in _candidate_rules(m):
        for occ in occurrences(m, rule.lhs, masks):
            out.append(Redex(rule, occ))
    return out


def first_redex(m: Monomial, masks=None, allowed: frozenset[str] | None = None) -> Redex | None:
    """Lowest-numbered rule, then leftmost occurrence."""
    if masks is None:
        masks = dependence_masks(m)
    best: Redex | None = None
    for rule in _candidate_rules(m, allowed):
        if best is not None and rule.number > best.rule.number:
            break
        for occ in occurrences(m, rule.lhs, masks):
            if best is None or occ.selected < best.selected:
                best = Redex(rule, occ)
    return best


def apply_step(m: Monomial, redex: Redex, masks=None) -> IntElement:
    """Replace the selected factor by the rule's right-hand side."""
    sel = [m[p] for p in redex.occurrence.positions]
    if tuple(sel) != redex.rule.lhs:
        raise ValueError(f"{redex.rule} does not match {format_word(m)} at {redex.occurrence.positions}")
    if masks is None:
        masks = dependence_masks(m)
    below, above = masks
    sel_mask = 0
    for p in redex.occurrence.positions:
        sel_mask |= 1 << p
    down = up = 0
    for p in redex.occurrence.positions:
        down |= below[p]
        up |= above[p]
    if down & up & ~sel_mask:
        raise ValueError(f"selection {redex.occurrence.positions} is not convex in {format_word(m)}")
    a, b = split_around(m, redex.occurrence, masks)
    out: IntElement = {}
    for c, w in redex.rule.rhs:
        v = _canon(a + w + b)
        out[v] = out.get(v, 0) + c
    return {w: c for w, c in out.items() if c}


def measure(m: Sequence[int]) -> tuple[int, int]:
    """(length, number of dependent pairs with a U before a D)."""
    inv = 0
    ups: list[int] = []
    for a in m:
        if a & 1:
            ups.append(a >> 1)
        else:
            ia = a >> 1
            for j in ups:
                if -1 <= j - ia <= 1:
                    inv += 1
    return len(m), inv


class MeasureError(AssertionError):
    """A rewriting step failed to decrease the termination measure."""


# Number of rewriting steps whose measure decrease has been asserted.
MEASURE_STATS = {"checked": 0}


def _check_measure(m: Monomial, reduct: Iterable[Monomial], redex: Redex) -> None:
    MEASURE_STATS["checked"] += 1
    mm = measure(m)
    for v in reduct:
        if not measure(v) < mm:
            raise MeasureError(
                f"{redex.rule} on {format_word(m)} gives {format_word(v)}: measure {measure(v)} !< {mm}"
            )


# Normal forms

_NF_CACHE: dict[Monomial, IntElement] = {}
_CACHE_FILE: Path | None = None
_CACHE_DIRTY: list[Monomial] = []


def nf_monomial(m: Monomial) -> IntElement:
    """Normal form of a canonical monomial, memoized."""
    hit = _NF_CACHE.get(m)
    if hit is not None:
        return hit
    masks = dependence_masks(m)
    redex = first_redex(m, masks)
    if redex is None:
        result = {m: 1}
    else:
        reduct = apply_step(m, redex, masks)
        _check_measure(m, reduct, redex)
        result = {}
        for v, c in reduct.items():
            for w, d in nf_monomial(v).items():
                result[w] = result.get(w, 0) + c * d
        result = {w: c for w, c in result.items() if c}
    _NF_CACHE[m] = result
    if _CACHE_FILE is not None:
        _CACHE_DIRTY.append(m)
    return result


SAME_LABEL_RULES = frozenset({"R1", "R2", "R3", "R4"})
_SUBSET_CACHE: dict[tuple[frozenset[str], Monomial], IntElement] = {}


def nf_monomial_subset(m: Monomial, allowed: frozenset[str]) -> IntElement:
    """
    Reduce with only the rules in `allowed` (plus interchange). The same-label rules on
    their own are confluent, so this is a normal form for that subset; for other subsets
    it is the result of the default strategy.
    """
    key = (allowed, m)
    hit = _SUBSET_CACHE.get(key)
    if hit is not None:
        return hit
    masks = dependence_masks(m)
    redex = first_redex(m, masks, allowed)
    if redex is None:
        result = {m: 1}
    else:
        reduct = apply_step(m, redex, masks)
        _check_measure(m, reduct, redex)
        result = {}
        for v, c in reduct.items():
            for w, d in nf_monomial_subset(v, allowed).items():
                result[w] = result.get(w, 0) + c * d
        result = {w: c for w, c in result.items() if c}
    _SUBSET_CACHE[key] = result
    return result


def normal_form(x: Mapping[Monomial, object] | Sequence[int]) -> dict:
    """
    Normal form of a monomial (given as a letter sequence) or of a linear combination
    {monomial: coefficient}. Coefficients may be any ring elements supporting * and +.
    """
    if not isinstance(x, Mapping):
        x = {_canon(tuple(x)): 1}
    out: dict = {}
    for m, c in x.items():
        for w, d in nf_monomial(_canon(tuple(m))).items():
            term = c * d
            out[w] = out[w] + term if w in out else term
    return {w: c for w, c in out.items() if c}


def is_normal(m: Sequence[int]) -> bool:
    m = _canon(tuple(m))
    return first_redex(m) is None


def clear_cache() -> None:
    _NF_CACHE.clear()


# Optional on-disk cache


def enable_cache(path: str | os.PathLike | None) -> None:
    """Load normal forms from a JSON-lines file and append new ones on flush_cache()."""
    global _CACHE_FILE
    if path is None:
        path = os.environ.get("LOOPH_CACHE")
    if not path:
        return
    _CACHE_FILE = Path(path)
    if _CACHE_FILE.exists():
        with _CACHE_FILE.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                row = json.loads(line)
                w = word_from_json(row["word"])
                nf = {word_from_json(t["word"]): int(t["coeff"]["num"][0]) for t in row["nf"]["terms"]}
                _NF_CACHE[w] = nf


def flush_cache() -> None:
    if _CACHE_FILE is None or not _CACHE_DIRTY:
        return
    with _CACHE_FILE.open("a", encoding="utf-8") as fh:
        for m in _CACHE_DIRTY:
            nf = _NF_CACHE[m]
            terms = [
                {"word": word_to_json(w), "coeff": {"num": [c], "den": [1]}}
                for w, c in sorted(nf.items())
            ]
            n = max((a >> 1 for a in m), default=0) + 1
            fh.write(json.dumps({"word": word_to_json(m), "nf": {"n": n, "terms": terms}}) + "\n")
    _CACHE_DIRTY.clear()


# Strategies and confluence

Strategy = Callable[[list[Redex]], Redex]


def leftmost(rs: list[Redex]) -> Redex:
    return min(rs, key=lambda r: (r.selected, r.rule.number))


def rightmost(rs: list[Redex]) -> Redex:
    return max(rs, key=lambda r: (tuple(reversed(r.selected)), -r.rule.number))


def random_strategy(rng: random.Random) -> Strategy:
    return lambda rs: rs[rng.randrange(len(rs))]


def reduce_with(m: Monomial, choose: Strategy, memo: dict[Monomial, IntElement] | None = None) -> IntElement:
    """Normal form of m using `choose` to pick the redex at every step."""
    if memo is None:
        memo = {}
    hit = memo.get(m)
    if hit is not None:
        return hit
    masks = dependence_masks(m)
    rs = redexes(m, masks)
    if not rs:
        result = {m: 1}
    else:
        redex = choose(rs)
        reduct = apply_step(m, redex, masks)
        _check_measure(m, reduct, redex)
        result = {}
        for v, c in reduct.items():
            for w, d in reduce_with(v, choose, memo).items():
                result[w] = result.get(w, 0) + c * d
        result = {w: c for w, c in result.items() if c}
    memo[m] = result
    return result


def strategy_consistency(n: int, trials: int, seed: int, max_len: int = 12) -> bool:
    """Compare leftmost, rightmost and random reduction on random words of length <= max_len."""
    if n < 2:
        return True
    rng = random.Random(seed)
    letters = [2 * i + k for i in range(1, n) for k in (0, 1)]
    right_memo: dict[Monomial, IntElement] = {}
    for _ in range(trials):
        length = rng.randint(0, max_len)
        m = _canon(tuple(rng.choice(letters) for _ in range(length)))
        reference = nf_monomial(m)
        if reduce_with(m, leftmost) != reference:
            return False
        if reduce_with(m, rightmost, right_memo) != reference:
            return False
        if reduce_with(m, random_strategy(random.Random(rng.random()))) != reference:
            return False
    return True


@dataclass
class ConfluenceReport:
    max_len: int
    window: int
    monomials: int = 0
    branchings: int = 0
    pairs: int = 0
    failures: list[tuple[Monomial, IntElement, IntElement]] = None  # type: ignore[assignment]
    rule_pairs: set[tuple[str, str]] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        self.failures = [] if self.failures is None else self.failures
        self.rule_pairs = set() if self.rule_pairs is None else self.rule_pairs

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return (
            f"max_len={self.max_len} window={self.window} monomials={self.monomials} "
            f"branchings={self.branchings} pairs={self.pairs} failures={len(self.failures)}"
        )


def local_confluence_report(max_len: int, window: int) -> ConfluenceReport:
    """Check that distinct one-step reducts of every small monomial share a normal form."""
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    report = ConfluenceReport(max_len, window)
    for m in canonical_words(window + 1, max_len):
        report.monomials += 1
        masks = dependence_masks(m)
        rs = redexes(m, masks)
        if len(rs) < 2:
            continue
        reducts = []
        for r in rs:
            red = apply_step(m, r, masks)
            _check_measure(m, red, r)
            reducts.append((r, red))
        report.branchings += 1
        target = nf_monomial(m)
        for (r1, e1), (r2, e2) in itertools.combinations(reducts, 2):
            if e1 == e2:
                continue
            report.pairs += 1
            report.rule_pairs.add(tuple(sorted((r1.rule.rule_id, r2.rule.rule_id))))
            n1, n2 = normal_form(e1), normal_form(e2)
            if n1 != n2:
                report.failures.append((m, n1, n2))
        for r, e in reducts:
            if normal_form(e) != target:
                report.failures.append((m, normal_form(e), target))
    return report


def format_int_element(x: Mapping[Monomial, int]) -> str:
    """Text form like 'U1 + D1 - 1': longest monomials first, then larger letters first."""
    if not x:
        return "0"
    items = sorted(x.items(), key=lambda kv: (-len(kv[0]), [-a for a in kv[0]]))
    out = ""
    for k, (w, c) in enumerate(items):
        body = "1" if not w else " ".join(f"{'U' if a & 1 else 'D'}{a >> 1}" for a in w)
        mag = abs(c)
        term = body if mag == 1 else (f"{mag}" if not w else f"{mag}*{body}")
        if k == 0:
            out = ("-" if c < 0 else "") + term
        else:
            out += (" - " if c < 0 else " + ") + term
    return out


def parse_int_element(text: str) -> IntElement:
    """Inverse of format_int_element for integer coefficients."""
    text = text.replace("-", "+-").strip()
    out: IntElement = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:].strip()
        coef = 1
        if "*" in chunk:
            head, chunk = chunk.split("*", 1)
            coef = int(head)
        elif chunk.isdigit():
            coef, chunk = int(chunk), ""
        w = _canon(parse_word(chunk))
        out[w] = out.get(w, 0) + sign * coef
    return {w: c for w, c in out.items() if c}
