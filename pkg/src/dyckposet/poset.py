"""Brute-force ground truth for intervals of the Dyck pattern poset.

An interval [bottom, top] is materialized rank by rank (rank = semilength),
after which element counts, saturated chains, cover statistics and the Möbius
function are all computed directly from their definitions.  This engine is
the independent oracle that every closed formula in the library is tested
against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    ArgumentOutOfRangeError,
    ElementNotInIntervalError,
    LimitExceededError,
    NotComparableError,
    RankOutOfRangeError,
)
from .words import (
    DEFAULT_GENERATION_CEILING,
    DyckWord,
    contains,
    generate_all,
    lex_key,
    lex_text,
    runs,
)


def covers_of(word: DyckWord, limit: int | None = None) -> tuple[DyckWord, ...]:
    """All words one rank up that contain `word`, by generate-and-filter."""
    if word.semilength < 1:
        raise ArgumentOutOfRangeError("poset elements have semilength >= 1")
    return tuple(w for w in generate_all(word.semilength + 1, limit) if contains(word, w))


def covered_by(word: DyckWord, limit: int | None = None) -> tuple[DyckWord, ...]:
    """All words one rank down that `word` contains, by generate-and-filter."""
    if word.semilength < 1:
        raise ArgumentOutOfRangeError("poset elements have semilength >= 1")
    if word.semilength == 1:
        return ()
    return tuple(w for w in generate_all(word.semilength - 1, limit) if contains(w, word))


def _is_dyck_text(text: str) -> bool:
    height = 0
    for step in text:
        height += 1 if step == "U" else -1
        if height < 0:
            return False
    return height == 0


def deletion_children(word: DyckWord) -> tuple[DyckWord, ...]:
    """Words covered by `word`, computed by shortening one U-run and one D-run.

    Covering in this poset is the removal of one U and one D, and removing any
    step of a run gives the same word, so trying every (U-run, D-run) pair
    once reaches every covered word.  Agreement with covered_by() is part of
    the test suite; this route has no generation ceiling because its cost is
    bounded by the run count, not by a Catalan number.
    """
    pairs = runs(word).runs
    m = len(pairs)
    seen: set[str] = set()
    for ui in range(m):
        for di in range(m):
            parts = []
            for idx, (up, down) in enumerate(pairs):
                if idx == ui:
                    up -= 1
                if idx == di:
                    down -= 1
                parts.append("U" * up + "D" * down)
            text = "".join(parts)
            if text and text not in seen and _is_dyck_text(text):
                seen.add(text)
    return tuple(DyckWord._wrap(t) for t in sorted(seen, key=lex_text))


@dataclass
class IntervalModel:
    """A materialized interval: elements by rank plus the Hasse covers.

    Ranks run from semilength(bottom) to semilength(top) inclusive; rank sets
    are sorted lexicographically (U < D) so that all derived output is
    deterministic.  Instances are not mutated after construction apart from
    the lazily cached Möbius table.
    """

    bottom: DyckWord
    top: DyckWord
    elements_by_rank: dict[int, tuple[DyckWord, ...]]
    covers_down: dict[DyckWord, tuple[DyckWord, ...]]
    covers_up: dict[DyckWord, tuple[DyckWord, ...]]
    members: frozenset[DyckWord]
    _mobius_from_bottom: dict[DyckWord, int] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def rank_span(self) -> range:
        return range(self.bottom.semilength, self.top.semilength + 1)

    def elements(self) -> Iterator[DyckWord]:
        """All elements, rank by rank, lexicographic within each rank."""
        for r in self.rank_span:
            yield from self.elements_by_rank[r]

    def __contains__(self, word: DyckWord) -> bool:
        return word in self.members

    @property
    def hasse_edges(self) -> tuple[tuple[DyckWord, DyckWord], ...]:
        out = []
        for r in self.rank_span[:-1]:
            for lower in self.elements_by_rank[r]:
                for upper in self.covers_up[lower]:
                    out.append((lower, upper))
        return tuple(out)

    def s0(self) -> int:
        """Number of elements (saturated chains of length 0)."""
        return len(self.members)

    def s0_by_rank(self, k: int) -> int:
        if k not in self.rank_span:
            raise RankOutOfRangeError(
                f"rank {k} outside [{self.rank_span.start}, {self.rank_span.stop - 1}]"
            )
        return len(self.elements_by_rank[k])

    def s1(self) -> int:
        """Number of Hasse edges (saturated chains of length 1)."""
        return sum(len(v) for v in self.covers_down.values())

    def _chain_counts(self, ell: int) -> dict[DyckWord, int]:
        # counts[w] = saturated chains of length ell whose top element is w
        counts = {w: 1 for w in self.members}
        for _ in range(ell):
            counts = {
                w: sum(counts[c] for c in self.covers_down[w]) for w in self.members
            }
        return counts

    def s_ell(self, ell: int) -> int:
        """Number of saturated chains of length `ell`."""
        if ell < 0:
            raise ArgumentOutOfRangeError("chain length must be nonnegative")
        return sum(self._chain_counts(ell).values())

    def s_ell_by_top_rank(self, ell: int, k: int) -> int:
        """Saturated chains of length `ell` whose top element has rank `k`."""
        if ell < 0:
            raise ArgumentOutOfRangeError("chain length must be nonnegative")
        counts = self._chain_counts(ell)
        return sum(counts[w] for w in self.elements_by_rank.get(k, ()))

    def delta(self, word: DyckWord) -> int:
        """Number of interval elements covered by `word` (inside the interval)."""
        if word not in self.members:
            raise ElementNotInIntervalError(
                f"{word} is not an element of [{self.bottom}, {self.top}]"
            )
        return len(self.covers_down[word])

    def delta_histogram(self) -> dict[int, int]:
        """Map t -> number of elements covering exactly t interval elements."""
        hist: dict[int, int] = {}
        for covered in self.covers_down.values():
            t = len(covered)
            hist[t] = hist.get(t, 0) + 1
        return dict(sorted(hist.items()))

    def mobius_table(self) -> dict[DyckWord, int]:
        """mu(bottom, x) for every element x, by the defining recursion.

        mu(bottom, bottom) = 1 and mu(bottom, x) = -sum of mu(bottom, z) over
        bottom <= z < x.  The strict down-sets are accumulated through the
        Hasse covers while sweeping the ranks upward.
        """
        if self._mobius_from_bottom is None:
            mu: dict[DyckWord, int] = {}
            below: dict[DyckWord, frozenset[DyckWord]] = {}
            for r in self.rank_span:
                for w in self.elements_by_rank[r]:
                    closure = {w}
                    for child in self.covers_down[w]:
                        closure |= below[child]
                    below[w] = frozenset(closure)
                    if w == self.bottom:
                        mu[w] = 1
                    else:
                        mu[w] = -sum(mu[z] for z in closure if z != w)
            self._mobius_from_bottom = mu
        return self._mobius_from_bottom

    def mobius(self) -> int:
        """mu(bottom, top)."""
        return self.mobius_table()[self.top]


def build_interval(
    bottom: DyckWord, top: DyckWord, limit: int | None = None
) -> IntervalModel:
    """Materialize [bottom, top] = {W : bottom <= W <= top}, rank by rank.

    The ranks are produced downward from `top` by pattern deletion, pruning
    words that do not contain `bottom`; the pruning is safe because every
    word above a valid element is itself above `bottom`.  Gradedness of the
    poset guarantees the deletion walk reaches the whole interval, and the
    tests check this construction against the generate-everything-and-filter
    one on small intervals.
    """
    if bottom.semilength < 1:
        raise ArgumentOutOfRangeError("interval bottom must have semilength >= 1")
    ceiling = DEFAULT_GENERATION_CEILING if limit is None else limit
    if top.semilength > ceiling:
        raise LimitExceededError(
            f"top semilength {top.semilength} exceeds the ceiling {ceiling}; "
            "pass an explicit limit to override"
        )
    if not contains(bottom, top):
        raise NotComparableError(f"{bottom} is not a pattern of {top}")

    lo = bottom.semilength
    hi = top.semilength
    ranks: dict[int, tuple[DyckWord, ...]] = {hi: (top,)}
    level: tuple[DyckWord, ...] = (top,)
    for r in range(hi - 1, lo - 1, -1):
        found: set[DyckWord] = set()
        for w in level:
            for child in deletion_children(w):
                if child not in found and contains(bottom, child):
                    found.add(child)
        level = tuple(sorted(found, key=lex_key))
        ranks[r] = level
    assert ranks[lo] == (bottom,)

    members = frozenset(w for row in ranks.values() for w in row)
    covers_down: dict[DyckWord, tuple[DyckWord, ...]] = {}
    covers_up: dict[DyckWord, list[DyckWord]] = {w: [] for w in members}
    for r in range(lo, hi + 1):
        if r == lo:
            for w in ranks[r]:
                covers_down[w] = ()
            continue
        lower_rank = set(ranks[r - 1])
        for w in ranks[r]:
            kids = tuple(c for c in deletion_children(w) if c in lower_rank)
            covers_down[w] = kids
            for child in kids:
                covers_up[child].append(w)
    frozen_up = {w: tuple(sorted(v, key=lex_key)) for w, v in covers_up.items()}
    return IntervalModel(bottom, top, ranks, covers_down, frozen_up, members)


def mobius(bottom: DyckWord, top: DyckWord, limit: int | None = None) -> int:
    """mu(bottom, top) over the materialized interval."""
    return build_interval(bottom, top, limit).mobius()


def interval_to_json_dict(model: IntervalModel) -> dict:
    """JSON rendering: bottom, top, ranks, edges and the Möbius table."""
    return {
        "bottom": model.bottom.text,
        "top": model.top.text,
        "ranks": [
            {
                "r": r,
                "count": len(model.elements_by_rank[r]),
                "elements": [w.text for w in model.elements_by_rank[r]],
            }
            for r in model.rank_span
        ],
        "edges": [[lo.text, up.text] for lo, up in model.hasse_edges],
        "mobius": {w.text: model.mobius_table()[w] for w in model.elements()},
    }


def interval_to_dot(model: IntervalModel) -> str:
    """Hasse diagram in DOT form, one same-rank group per semilength."""
    lines = ["digraph interval {", "  rankdir=BT;", "  node [shape=box];"]
    for r in model.rank_span:
        row = " ".join(f'"{w.text}";' for w in model.elements_by_rank[r])
        lines.append("  { rank=same; " + row + " }")
    for lo, up in model.hasse_edges:
        lines.append(f'  "{lo.text}" -> "{up.text}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
